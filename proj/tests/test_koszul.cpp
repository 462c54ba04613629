#include "infsimp/koszul.hpp"
#include "infsimp/omega.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>

using namespace infsimp;

namespace {

long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

std::vector<WedgeTuple> all_wedges(int n_max) {
    std::vector<WedgeTuple> out;
    for (int n = 0; n <= n_max; ++n)
        for (int k = 0; k <= n; ++k)
            for (const WedgeTuple& w : wedge_tuples(n, k)) out.push_back(w);
    return out;
}

using Triple = std::tuple<WedgeTuple, WedgeTuple, WedgeTuple>;

LinComb<Triple> left_coassoc(const WedgeTuple& w) {
    LinComb<Triple> out;
    for (const auto& [pr, c] : coproduct(w))
        for (const auto& [pr2, c2] : coproduct(pr.first)) out.add({pr2.first, pr2.second, pr.second}, c * c2);
    return out;
}

LinComb<Triple> right_coassoc(const WedgeTuple& w) {
    LinComb<Triple> out;
    for (const auto& [pr, c] : coproduct(w))
        for (const auto& [pr2, c2] : coproduct(pr.second)) out.add({pr.first, pr2.first, pr2.second}, c * c2);
    return out;
}

}  // namespace

TEST_CASE("wedge tuple parsing and counts") {
    WedgeTuple w = parse_wedge("d[4](0,2,3)");
    CHECK(w.n == 4);
    CHECK(w.tuple == std::vector<int>{0, 2, 3});
    CHECK(to_string(w) == "d[4](0,2,3)");
    CHECK(parse_wedge("1_3").is_unit());
    CHECK_THROWS_AS(parse_wedge("d[2](2,1)"), InputError);
    CHECK_THROWS_AS(parse_wedge("d[2](0,3)"), InputError);
    for (int n = 0; n <= 6; ++n) {
        for (int k = 0; k <= n; ++k) CHECK(static_cast<long>(wedge_tuples(n, k).size()) == binom(n + 1, k));
        CHECK(wedge_tuples(n, n + 1).empty());
    }
}

TEST_CASE("hat correction") {
    CHECK(hat({0, 1, 2}, {0, 2, 5}) == std::vector<int>{0, 2, 5});
    CHECK(hat({1, 0}, {1, 3}) == std::vector<int>{2, 1});
    CHECK(hat(std::vector<int>{2, 0, 1}) == std::vector<int>{0, 0, 1});
    CHECK(inversions({2, 0, 1}) == 2);
}

TEST_CASE("splits of short tuples") {
    CHECK(enumerate_splits({3, {1}}).empty());

    auto s2 = enumerate_splits({4, {1, 3}});
    REQUIRE(s2.size() == 2);
    CHECK(s2[0].sigma == std::vector<int>{0, 1});
    CHECK(s2[0].sign == -1);
    CHECK(s2[0].left == WedgeTuple{3, {1}});
    CHECK(s2[0].right == WedgeTuple{4, {3}});
    CHECK(s2[1].sigma == std::vector<int>{1, 0});
    CHECK(s2[1].sign == 1);
    CHECK(s2[1].left == WedgeTuple{3, {2}});
    CHECK(s2[1].right == WedgeTuple{4, {1}});

    auto s3 = enumerate_splits({5, {0, 2, 4}});
    CHECK(s3.size() == 6);
    CHECK(std::count_if(s3.begin(), s3.end(), [](const Split& s) { return s.sign < 0; }) == 4);
}

TEST_CASE("ordered sigma blocks are exactly ordered hat blocks") {
    long pairs = 0;
    for (int n = 0; n <= 6; ++n)
        for (int k = 2; k <= std::min(4, n); ++k)
            for (const WedgeTuple& w : wedge_tuples(n, k)) {
                std::vector<int> sigma(k);
                std::iota(sigma.begin(), sigma.end(), 0);
                do {
                    for (int m = 1; m < k; ++m) {
                        CHECK(sigma_blocks_ordered(w, sigma, m) == hat_blocks_ordered(w, sigma, m));
                        ++pairs;
                    }
                } while (std::next_permutation(sigma.begin(), sigma.end()));
                auto fast = enumerate_splits(w);
                auto brute = enumerate_splits_brute(w);
                REQUIRE(fast.size() == brute.size());
                CHECK(static_cast<long>(fast.size()) == (1L << k) - 2);
                for (std::size_t a = 0; a < fast.size(); ++a) {
                    CHECK(fast[a].sigma == brute[a].sigma);
                    CHECK(fast[a].m == brute[a].m);
                    CHECK(fast[a].sign == brute[a].sign);
                    CHECK(fast[a].left == brute[a].left);
                    CHECK(fast[a].right == brute[a].right);
                }
            }
    CHECK(pairs > 0);
}

TEST_CASE("coproduct examples and coalgebra axioms") {
    WedgeTuple u{2, {}};
    CHECK(coproduct(u) == LinComb<WedgePair>({u, u}, Scalar(1)));

    WedgeTuple a{3, {1}};
    LinComb<WedgePair> prim({WedgeTuple{2, {}}, a}, Scalar(1));
    prim.add({a, WedgeTuple{3, {}}}, Scalar(1));
    CHECK(coproduct(a) == prim);

    WedgeTuple b{3, {0, 2}};
    LinComb<WedgePair> expect({WedgeTuple{1, {}}, b}, Scalar(1));
    expect.add({b, WedgeTuple{3, {}}}, Scalar(1));
    expect.add({WedgeTuple{2, {0}}, WedgeTuple{3, {2}}}, Scalar(-1));
    expect.add({WedgeTuple{2, {1}}, WedgeTuple{3, {0}}}, Scalar(1));
    CHECK(coproduct(b) == expect);

    for (const WedgeTuple& w : all_wedges(5)) {
        CHECK(left_coassoc(w) == right_coassoc(w));
        LinComb<WedgeTuple> left_counit, right_counit;
        for (const auto& [pr, c] : coproduct(w)) {
            if (pr.first.is_unit()) left_counit.add(pr.second, c);
            if (pr.second.is_unit()) right_counit.add(pr.first, c);
        }
        CHECK(left_counit == LinComb<WedgeTuple>(w, Scalar(1)));
        CHECK(right_counit == LinComb<WedgeTuple>(w, Scalar(1)));
    }
}

TEST_CASE("low Koszul dual components") {
    QuadraticPresentation P = build_presentation(3);
    Ring q = Ring::rationals();
    CHECK(koszul_dual_generic(P, 0, 2, 2, q).basis.size() == 1);
    CHECK(koszul_dual_generic(P, 1, 1, 2, q).basis.size() == 3);
    CHECK(koszul_dual_generic(P, 2, 0, 3, q).basis.empty());
    CHECK_THROWS_AS(koszul_dual_generic(P, 2, 0, 2, Ring::integers()), UnsupportedCoefficients);
}

TEST_CASE("Koszul dual intersection matches the wedge basis") {
    Ring q = Ring::rationals();
    QuadraticPresentation P = build_presentation(5);
    for (int n = 2; n <= 5; ++n)
        for (int k = 2; k <= n; ++k) {
            DualComponent D = koszul_dual_generic(P, k, n - k, n, q);
            CHECK(static_cast<long>(D.basis.size()) == binom(n + 1, k));
            Echelon span(q);
            for (const Vec& v : D.basis) span.insert(v);
            std::vector<Vec> wedges;
            for (const WedgeTuple& w : wedge_tuples(n, k)) {
                Vec v = ambient_coordinates(D, wedge_vector(w));
                CHECK(span.contains(v));
                wedges.push_back(v);
            }
            CHECK(rank_of(wedges, q) == static_cast<int>(D.basis.size()));
        }
    DualComponent D3 = koszul_dual_generic(build_presentation(3), 3, 0, 3, Ring::mod(7));
    CHECK(D3.basis.size() == 4);
}

TEST_CASE("twisting cochains on F^!") {
    CoalgebraView<WedgeTuple> C = fshriek_view();
    std::vector<WedgeTuple> basis;
    for (const WedgeTuple& w : all_wedges(5))
        if (!w.is_unit()) basis.push_back(w);
    auto name = [](const WedgeTuple& w) { return to_string(w); };

    std::function<LinComb<FaceWord>(const WedgeTuple&)> zero = [](const WedgeTuple&) { return LinComb<FaceWord>{}; };
    std::function<LinComb<FaceWord>(const FaceWord&)> dF = [](const FaceWord&) { return LinComb<FaceWord>{}; };
    std::function<LinComb<FaceWord>(const FaceWord&, const FaceWord&)> prodF = [](const FaceWord& a, const FaceWord& b) {
        return face_product(FaceElement(a, Scalar(1)), FaceElement(b, Scalar(1)));
    };
    std::function<std::string(const FaceWord&)> nameF = [](const FaceWord& w) { return to_string(w); };
    CHECK(check_twisting_cochain<WedgeTuple, FaceWord>(basis, C, zero, dF, prodF, name, nameF).pass());

    std::function<LinComb<FaceWord>(const WedgeTuple&)> shriek = phi_shriek;
    Report r = check_twisting_cochain<WedgeTuple, FaceWord>(basis, C, shriek, dF, prodF, name, nameF);
    CHECK(r.pass());
    CHECK(r.checked == static_cast<long>(basis.size()));

    // A wrong sign on one generator breaks the identity on a length-two wedge.
    std::function<LinComb<FaceWord>(const WedgeTuple&)> broken = [](const WedgeTuple& w) {
        LinComb<FaceWord> v = phi_shriek(w);
        return (w == WedgeTuple{2, {0}}) ? -v : v;
    };
    CHECK(!check_twisting_cochain<WedgeTuple, FaceWord>(basis, C, broken, dF, prodF, name, nameF).pass());

    using W = std::vector<WedgeTuple>;
    std::function<LinComb<W>(const WedgeTuple&)> omega = [](const WedgeTuple& w) {
        return w.is_unit() ? LinComb<W>{} : LinComb<W>(W{w}, Scalar(1));
    };
    std::function<LinComb<W>(const W&)> dO = [C](const W& w) { return omega_differential(w, C); };
    std::function<LinComb<W>(const W&, const W&)> concat = [](const W& a, const W& b) {
        W ab = a;
        ab.insert(ab.end(), b.begin(), b.end());
        return LinComb<W>(ab, Scalar(1));
    };
    std::function<std::string(const W&)> nameO = [](const W& w) { return to_string(w); };
    CHECK(check_twisting_cochain<WedgeTuple, W>(basis, C, omega, dO, concat, name, nameO).pass());
}
