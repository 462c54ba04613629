#include "infsimp/ainf.hpp"

#include <doctest.h>

using namespace infsimp;

namespace {

AWord word(const AInfAlgebra& A, std::initializer_list<const char*> ids) {
    AWord w;
    for (const char* id : ids) w.push_back(A.index_of(id));
    return w;
}

LinComb<AWord> one(const AWord& w, long c = 1) { return LinComb<AWord>(w, Scalar(c)); }

// x in degree 1, w in degree 4, pi_1(x, x, x) = w and nothing else.
AInfAlgebra ternary_example() {
    AInfAlgebra A;
    A.ring = Ring::rationals();
    A.add_generator("x", 1);
    A.add_generator("w", 4);
    A.set_pi(1, {"x", "x", "x"}, LinComb<std::string>("w", Scalar(1)));
    return A;
}

// Bar differential of an algebra with d = 0 and only pi_0, evaluated from
// the closed formula: only the k = 1 terms (-1)^i [.. pi_0(a_i, a_{i+1}) ..] survive.
LinComb<AWord> two_term_bar(const AInfAlgebra& A, const AWord& w) {
    LinComb<AWord> out;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        Vec prod = A.apply_pi(0, {w[i], w[i + 1]});
        for (const auto& [g, c] : prod) {
            AWord v(w.begin(), w.begin() + i);
            v.push_back(g);
            v.insert(v.end(), w.begin() + i + 2, w.end());
            out.add(v, c * sign_of(static_cast<long>(i) + 1));
        }
    }
    return out;
}

}  // namespace

TEST_CASE("A-infinity relation checks") {
    CHECK(check_ainf(example_xy()).pass());
    CHECK(check_ainf(example_dga()).pass());
    CHECK(check_ainf(ternary_example()).pass());
    Report bad = check_ainf(example_bad());
    REQUIRE(!bad.pass());
    CHECK(bad.violations.front().location == "n=0 on [x|x|x]");
    CHECK(!bad.violations.front().discrepancy.is_zero());

    AInfAlgebra dsq;
    dsq.ring = Ring::rationals();
    dsq.add_generator("a", 3);
    dsq.add_generator("b", 2);
    dsq.add_generator("c", 1);
    dsq.set_d("a", LinComb<std::string>("b", Scalar(1)));
    dsq.set_d("b", LinComb<std::string>("c", Scalar(1)));
    Report r = check_ainf(dsq);
    REQUIRE(!r.pass());
    CHECK(r.violations.front().location == "d on a");

    AInfAlgebra wrong;
    wrong.add_generator("x", 1);
    CHECK_THROWS_AS(wrong.set_pi(0, {"x"}, {}), InputError);
    CHECK_THROWS_AS(wrong.add_generator("x", 2), InputError);
    CHECK_THROWS_AS(wrong.add_generator("a|b", 2), InputError);
    wrong.set_pi(0, {"x", "x"}, LinComb<std::string>("x", Scalar(1)));
    CHECK_THROWS_AS(validate_ainf_shapes(wrong), InputError);
}

TEST_CASE("faces of the tensor algebra") {
    AInfAlgebra A = example_xy();
    TensorAlgebraModule T = faces_from_ainf(A, 3);
    const BigradedModule& X = T.M.X;
    auto vec = [&](const AWord& w) { return Vec(T.index.at(w), Scalar(1)); };
    AWord xx = word(A, {"x", "x"}), xxx = word(A, {"x", "x", "x"});
    CHECK(X.n_of(T.index.at(xx)) == 2);
    CHECK(X.m_of(T.index.at(xx)) == 2);
    CHECK(T.M.faces.apply({2, {1}}, vec(xx)) == vec(word(A, {"y"})).scaled(Scalar(-1)));
    CHECK(T.M.faces.apply({2, {0}}, vec(xx)).is_zero());
    CHECK(T.M.faces.apply({2, {2}}, vec(xx)).is_zero());
    CHECK(T.M.faces.apply({3, {1}}, vec(xxx)) == vec(word(A, {"y", "x"})));
    CHECK(T.M.faces.apply({3, {2}}, vec(xxx)) == vec(word(A, {"x", "y"})));
    for (const auto& [w, f] : T.M.faces.maps)
        if (w.tuple.front() == 0 || w.tuple.back() == w.n) CHECK(f.is_zero());

    AInfAlgebra B = ternary_example();
    TensorAlgebraModule U = faces_from_ainf(B, 5);
    CHECK(check_faces(U.M).pass());
    AWord x4 = word(B, {"x", "x", "x", "x"});
    // k = 2, q = 4: (-1)^{k(q-1)} = 1, and pi_1 lands in the first slot.
    CHECK(U.M.faces.apply({4, {1, 2}}, Vec(U.index.at(x4), Scalar(1))) == Vec(U.index.at(word(B, {"w", "x"})), Scalar(1)));
    CHECK(U.M.faces.apply({4, {2, 3}}, Vec(U.index.at(x4), Scalar(1))) == Vec(U.index.at(word(B, {"x", "w"})), Scalar(-1)));
}

TEST_CASE("bar differential") {
    AInfAlgebra A = example_xy();
    CHECK(bar_differential(A, word(A, {"x", "x"})) == one(word(A, {"y"}), -1));
    CHECK(bar_differential(A, bar_differential(A, word(A, {"x", "x", "x"}))).is_zero());
    CHECK(!bar_differential(A, word(A, {"x", "x", "x"})).is_zero());

    for (const AInfAlgebra& B : {example_xy(), example_dga()})
        for (const AWord& w : bar_words(B, 5, 8)) CHECK(bar_differential(B, w) == two_term_bar(B, w));

    AInfAlgebra trivial;
    trivial.ring = Ring::rationals();
    trivial.add_generator("u", 1);
    trivial.add_generator("v", 2);
    for (const AWord& w : bar_words(trivial, 4)) CHECK(bar_differential(trivial, w).is_zero());

    AInfAlgebra diff;
    diff.ring = Ring::rationals();
    diff.add_generator("a", 2);
    diff.add_generator("b", 1);
    diff.set_d("a", LinComb<std::string>("b", Scalar(1)));
    AWord a = word(diff, {"a"}), aa = word(diff, {"a", "a"});
    CHECK(bar_differential(diff, a) == one(word(diff, {"b"}), -1));
    CHECK(bar_differential(diff, aa) == one(word(diff, {"b", "a"})) + one(word(diff, {"a", "b"})));
    for (const AWord& w : bar_words(diff, 4))
        CHECK(bar_differential(diff, w) == tensor_differential(diff, w).scaled(sign_of(static_cast<long>(w.size()))));
    CHECK(check_bar_square(diff, 4).pass());

    CHECK(compare_bar_with_total_complex(ternary_example(), 5).pass());
    CHECK(check_bar_square(ternary_example(), 5).pass());
}

TEST_CASE("bar coproduct") {
    AInfAlgebra A = example_xy();
    AWord e{}, x = word(A, {"x"}), xx = word(A, {"x", "x"});
    using P = std::pair<AWord, AWord>;
    CHECK(bar_coproduct(A, e) == LinComb<P>({e, e}, Scalar(1)));
    LinComb<P> dx({e, x}, Scalar(1));
    dx.add({x, e}, Scalar(1));
    CHECK(bar_coproduct(A, x) == dx);
    LinComb<P> dxx({e, xx}, Scalar(1));
    dxx.add({x, x}, Scalar(-1));
    dxx.add({xx, e}, Scalar(1));
    CHECK(bar_coproduct(A, xx) == dxx);

    for (const AInfAlgebra& B : {example_xy(), example_dga(), ternary_example()})
        CHECK(check_bar_coalgebra(B, 4).pass());
}

TEST_CASE("primed structure and the diagonal") {
    AInfAlgebra A = example_xy();
    TensorAlgebraModule T = faces_from_ainf(A, 4);
    FaceModule P = primed_structure(T.M);
    CHECK(compose(P.X.d(), P.X.d()).is_zero());
    CHECK(check_faces(P).pass());
    for (const auto& [w, f] : T.M.faces.maps) {
        if (w.k() != 1) continue;
        for (const auto& [j, col] : f.columns()) {
            Vec expect = col.scaled(sign_of(T.M.X.m_of(j) - 1));
            CHECK(P.faces.apply(w, Vec(j, Scalar(1))) == expect);
        }
    }
    CHECK(check_delta_morphism(A, 3).pass());
    CHECK(check_delta_morphism(example_dga(), 3).pass());
}

TEST_CASE("classical bar construction of a DGA") {
    AInfAlgebra A = example_dga();
    AWord xx = word(A, {"x", "x"});
    CHECK(bar_differential(A, xx) == one(word(A, {"x2"}), -1));
    CHECK(classic_bar_compare(A, 4).pass());
    CHECK(classic_bar_compare(example_xy(), 4).pass());
    CHECK_THROWS_AS(classic_bar_compare(ternary_example(), 4), InputError);
}

TEST_CASE("bar words are capped by length and total degree") {
    AInfAlgebra A = example_xy();
    auto all = bar_words(A, 3);
    CHECK(all.size() == 1 + 2 + 4 + 8);
    auto capped = bar_words(A, 3, 4);
    for (const AWord& w : capped) CHECK(A.degree(w) <= 4);
    CHECK(capped.size() == 1 + 2 + 4 + 4);
    CHECK(word_key(A, {}) == "[]");
    CHECK(word_key(A, word(A, {"x", "y"})) == "[x|y]");
}
