#include "infsimp/face_algebra.hpp"

#include <doctest.h>

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

using namespace infsimp;

namespace {

long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// Every composable word X_t -> X_s, built letter by letter.
std::vector<FaceWord> all_words(int s, int t) {
    std::vector<FaceWord> out;
    FaceWord cur;
    std::function<void(int)> rec = [&](int amb) {
        if (amb == s) {
            FaceWord w(cur.rbegin(), cur.rend());
            out.push_back(w);
            return;
        }
        for (int i = 0; i <= amb; ++i) {
            cur.push_back({i, amb});
            rec(amb - 1);
            cur.pop_back();
        }
    };
    rec(t);
    return out;
}

// The vertices of {0..t} that survive the word, acting by vertex deletion.
std::vector<int> surviving_vertices(const FaceWord& w, int t) {
    std::vector<int> v(t + 1);
    std::iota(v.begin(), v.end(), 0);
    for (auto it = w.rbegin(); it != w.rend(); ++it) v.erase(v.begin() + it->i);
    return v;
}

}  // namespace

TEST_CASE("normal form examples") {
    CHECK(normalize_word({{0, 2}, {1, 3}}) == FaceWord{{0, 2}, {0, 3}});
    CHECK(normalize_word({{2, 2}, {1, 3}}) == FaceWord{{2, 2}, {1, 3}});
    CHECK(normal_words(1, 3).size() == 6);
    CHECK_THROWS_AS(normalize_word({{0, 2}, {0, 2}}), InputError);
    CHECK(!composable({{3, 2}, {0, 3}}));
}

TEST_CASE("normal words match rewrite classes and vertex deletions") {
    for (int t = 1; t <= 5; ++t)
        for (int s = std::max(0, t - 4); s < t; ++s) {
            std::vector<FaceWord> words = all_words(s, t);
            // Classes of the symmetric closure of one-step rewriting.
            std::map<FaceWord, int> cls;
            int next = 0;
            for (const FaceWord& w : words) {
                if (cls.count(w)) continue;
                std::vector<FaceWord> stack{w};
                cls[w] = next;
                while (!stack.empty()) {
                    FaceWord u = stack.back();
                    stack.pop_back();
                    std::vector<FaceWord> nb = rewrite_once(u);
                    for (const FaceWord& v : words) {
                        auto back = rewrite_once(v);
                        if (std::find(back.begin(), back.end(), u) != back.end()) nb.push_back(v);
                    }
                    for (const FaceWord& v : nb)
                        if (!cls.count(v)) {
                            cls[v] = next;
                            stack.push_back(v);
                        }
                }
                ++next;
            }
            CHECK(next == binom(t + 1, t - s));
            CHECK(static_cast<long>(normal_words(s, t).size()) == binom(t + 1, t - s));
            std::map<int, FaceWord> rep_of;
            std::set<std::vector<int>> images;
            for (const FaceWord& w : words) {
                FaceWord nf = normalize_word(w);
                CHECK(is_normal(nf));
                auto [it, fresh] = rep_of.emplace(cls[w], nf);
                CHECK(it->second == nf);
                CHECK(surviving_vertices(w, t) == surviving_vertices(nf, t));
                images.insert(surviving_vertices(w, t));
            }
            CHECK(static_cast<long>(images.size()) == binom(t + 1, t - s));
        }
}

TEST_CASE("face algebra product is associative") {
    for (const FaceWord& a : normal_words(0, 1))
        for (const FaceWord& b : normal_words(1, 3))
            for (const FaceWord& c : normal_words(3, 4)) {
                FaceElement A(a, Scalar(1)), B(b, Scalar(2)), C(c, Scalar(-1));
                CHECK(face_product(face_product(A, B), C) == face_product(A, face_product(B, C)));
            }
    CHECK(face_product(FaceElement({{0, 1}}, Scalar(1)), FaceElement({{0, 3}}, Scalar(1))).is_zero());
}

TEST_CASE("quadratic presentation sizes") {
    QuadraticPresentation P1 = build_presentation(1);
    CHECK(P1.M.component(0, 1, 0).size() == 2);
    CHECK(P1.Q.empty());
    QuadraticPresentation P2 = build_presentation(2);
    CHECK(P2.Q.at({0, 2}).size() == 3);
    QuadraticPresentation P5 = build_presentation(5);
    for (int n = 2; n <= 5; ++n) CHECK(static_cast<long>(P5.Q.at({n - 2, n}).size()) == binom(n + 1, 2));
    CHECK_THROWS_AS(build_presentation(0), InputError);
}

TEST_CASE("strict module checks") {
    BigradedModule X;
    X.add("a", 1, 0);
    X.add("b", 0, 0);
    CHECK(check_strict_module(X, {}).pass());

    StrictModule S = standard_simplex(4, 4);
    Report ok = check_strict_module(S.X, S.faces);
    CHECK(ok.pass());
    CHECK(ok.checked > 0);

    StrictFaces bad = S.faces;
    bad.at({2, 1}) = bad.at({2, 1}).scaled(Scalar(-1));
    Report r = check_strict_module(S.X, bad);
    REQUIRE(!r.pass());
    bool found = false;
    for (const auto& v : r.violations) found = found || v.location.rfind("(n=2,i=0,j=1)", 0) == 0;
    CHECK(found);

    SparseMap id = S.X.identity();
    StrictMorphismData m{&S.X, &S.faces, &id, &id, nullptr};
    CHECK(check_strict_module(S.X, S.faces, m).pass());
    SparseMap zero(S.X.basis(), S.X.basis());
    m.h = &zero;
    CHECK(check_strict_module(S.X, S.faces, m).pass());
}
