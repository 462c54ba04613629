#include "infsimp/face_algebra.hpp"

#include <functional>

namespace infsimp {

std::string to_string(const FaceWord& w) {
    if (w.empty()) return "1";
    std::string s;
    for (std::size_t k = 0; k < w.size(); ++k) {
        if (k) s += "*";
        s += "d_" + std::to_string(w[k].i) + "^" + std::to_string(w[k].n);
    }
    return s;
}

bool composable(const FaceWord& w) {
    for (const auto& l : w)
        if (l.n < 1 || l.i < 0 || l.i > l.n) return false;
    for (std::size_t k = 1; k < w.size(); ++k)
        if (w[k].n != w[k - 1].n + 1) return false;
    return true;
}

ColorPair word_colors(const FaceWord& w) {
    if (w.empty()) throw InputError("empty face word has no intrinsic colors");
    return {w.front().n - 1, w.back().n};
}

std::vector<FaceWord> rewrite_once(const FaceWord& w) {
    std::vector<FaceWord> out;
    for (std::size_t k = 0; k + 1 < w.size(); ++k) {
        if (w[k].i < w[k + 1].i) {
            FaceWord v = w;
            v[k].i = w[k + 1].i - 1;
            v[k + 1].i = w[k].i;
            out.push_back(std::move(v));
        }
    }
    return out;
}

bool is_normal(const FaceWord& w) {
    for (std::size_t k = 0; k + 1 < w.size(); ++k)
        if (w[k].i < w[k + 1].i) return false;
    return true;
}

FaceWord normalize_word(const FaceWord& w) {
    if (!composable(w)) throw InputError("face word " + to_string(w) + " is not composable");
    FaceWord v = w;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t k = 0; k + 1 < v.size(); ++k) {
            if (v[k].i < v[k + 1].i) {
                int i = v[k].i;
                v[k].i = v[k + 1].i - 1;
                v[k + 1].i = i;
                changed = true;
            }
        }
    }
    return v;
}

std::vector<FaceWord> normal_words(int s, int t) {
    std::vector<FaceWord> out;
    int k = t - s;
    if (k < 0 || s < 0) return out;
    if (k == 0) {
        out.push_back({});
        return out;
    }
    FaceWord cur(k);
    std::function<void(int, int)> rec = [&](int pos, int bound) {
        if (pos == k) {
            out.push_back(cur);
            return;
        }
        int amb = s + pos + 1;
        int hi = std::min(amb, bound);
        for (int i = 0; i <= hi; ++i) {
            cur[pos] = {i, amb};
            rec(pos + 1, i);
        }
    };
    rec(0, t);
    return out;
}

FaceElement face_product(const FaceElement& a, const FaceElement& b) {
    FaceElement r;
    for (const auto& [wa, ca] : a)
        for (const auto& [wb, cb] : b) {
            if (!wa.empty() && !wb.empty() && wa.back().n + 1 != wb.front().n) continue;
            FaceWord w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            r.add(normalize_word(w), ca * cb);
        }
    return r;
}

QuadraticPresentation build_presentation(int n_max) {
    if (n_max < 1) throw InputError("build_presentation needs n_max >= 1");
    QuadraticPresentation P;
    P.n_max = n_max;
    for (int n = 1; n <= n_max; ++n)
        for (int i = 0; i <= n; ++i) P.M.add(to_string(FaceWord{{i, n}}), n - 1, n, 0);
    for (int n = 2; n <= n_max; ++n) {
        auto& rel = P.Q[{n - 2, n}];
        for (int j = 0; j <= n; ++j)
            for (int i = 0; i < j; ++i) {
                LinComb<FaceWord> q;
                q.add(FaceWord{{i, n - 1}, {j, n}}, Scalar(1));
                q.add(FaceWord{{j - 1, n - 1}, {i, n}}, Scalar(-1));
                rel.push_back(q);
            }
    }
    return P;
}

namespace {

std::string loc(int n, int i, int j = -1) {
    std::string s = "(n=" + std::to_string(n) + ",i=" + std::to_string(i);
    if (j >= 0) s += ",j=" + std::to_string(j);
    return s + ")";
}

const SparseMap* face_at(const StrictFaces& F, int n, int i) {
    auto it = F.find({n, i});
    return it == F.end() ? nullptr : &it->second;
}

Vec apply_face(const StrictFaces& F, int n, int i, const Vec& v) {
    const SparseMap* m = face_at(F, n, i);
    return m ? m->apply(v) : Vec{};
}

}  // namespace

Report check_strict_module(const BigradedModule& X, const StrictFaces& faces, const StrictMorphismData& extra) {
    Report rep;
    for (const auto& [ni, m] : faces) {
        auto [n, i] = ni;
        if (i < 0 || i > n) throw InputError("strict face index out of range at " + loc(n, i));
        for (const auto& [j, col] : m.columns()) {
            if (j >= X.rank() || X.n_of(j) != n) throw InputError("strict face " + loc(n, i) + " has a column outside X_n");
            for (const auto& [r, c] : col)
                if (X.n_of(r) != n - 1 || X.m_of(r) != X.m_of(j))
                    throw InputError("strict face " + loc(n, i) + " has the wrong bidegree");
        }
    }
    const Ring ring = X.ring();
    int top = X.max_n();
    for (int n = 0; n <= top; ++n) {
        for (int x : X.indices_n(n)) {
            Vec e(x, Scalar(1, ring));
            Vec dx = X.d().apply(e);
            for (int i = 0; i <= n && n >= 1; ++i) {
                ++rep.checked;
                Vec lhs = X.d().apply(apply_face(faces, n, i, e)) + apply_face(faces, n, i, dx);
                if (!lhs.is_zero()) rep.fail(loc(n, i) + " on " + X.key(x), "d d_i + d_i d = 0", X.basis()->to_keys(lhs));
            }
            for (int j = 0; j <= n && n >= 2; ++j)
                for (int i = 0; i < j; ++i) {
                    ++rep.checked;
                    Vec a = apply_face(faces, n - 1, i, apply_face(faces, n, j, e));
                    Vec b = apply_face(faces, n - 1, j - 1, apply_face(faces, n, i, e));
                    Vec diff = a - b;
                    if (!diff.is_zero())
                        rep.fail(loc(n, i, j) + " on " + X.key(x), "d_i d_j = d_{j-1} d_i", X.basis()->to_keys(diff));
                }
        }
    }
    if (extra.f) {
        if (!extra.Y || !extra.faces_Y) throw InputError("morphism check needs the target module and its faces");
        const BigradedModule& Y = *extra.Y;
        auto check_map_commutes = [&](const SparseMap& f, const std::string& name, const std::string& rel) {
            for (int x = 0; x < X.rank(); ++x) {
                Vec e(x, Scalar(1, ring));
                ++rep.checked;
                Vec c = Y.d().apply(f.apply(e)) - f.apply(X.d().apply(e));
                if (!c.is_zero()) rep.fail(name + " on " + X.key(x), "d " + name + " = " + name + " d", Y.basis()->to_keys(c));
                int n = X.n_of(x);
                for (int i = 0; i <= n && n >= 1; ++i) {
                    ++rep.checked;
                    Vec diff = apply_face(*extra.faces_Y, n, i, f.apply(e)) - f.apply(apply_face(faces, n, i, e));
                    if (!diff.is_zero()) rep.fail(loc(n, i) + " on " + X.key(x), rel, Y.basis()->to_keys(diff));
                }
            }
        };
        check_map_commutes(*extra.f, "f", "d_i f = f d_i");
        if (extra.g) check_map_commutes(*extra.g, "g", "d_i g = g d_i");
        if (extra.h) {
            if (!extra.g) throw InputError("homotopy check needs both f and g");
            const SparseMap& h = *extra.h;
            for (int x = 0; x < X.rank(); ++x) {
                Vec e(x, Scalar(1, ring));
                ++rep.checked;
                Vec c = Y.d().apply(h.apply(e)) + h.apply(X.d().apply(e)) - extra.f->apply(e) + extra.g->apply(e);
                if (!c.is_zero()) rep.fail("h on " + X.key(x), "dh + hd = f - g", Y.basis()->to_keys(c));
                int n = X.n_of(x);
                for (int i = 0; i <= n && n >= 1; ++i) {
                    ++rep.checked;
                    Vec s = apply_face(*extra.faces_Y, n, i, h.apply(e)) + h.apply(apply_face(faces, n, i, e));
                    if (!s.is_zero()) rep.fail(loc(n, i) + " on " + X.key(x), "d_i h + h d_i = 0", Y.basis()->to_keys(s));
                }
            }
        }
    }
    return rep;
}

StrictModule standard_simplex(int N, int n_max) {
    StrictModule S;
    std::map<std::vector<int>, int> idx;
    auto key_of = [](const std::vector<int>& v) {
        std::string s = "[";
        for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
        return s + "]";
    };
    int top = std::min(N, n_max);
    for (int n = 0; n <= top; ++n) {
        std::vector<int> cur;
        std::function<void(int)> rec = [&](int start) {
            if (static_cast<int>(cur.size()) == n + 1) {
                idx[cur] = S.X.add(key_of(cur), n, 0);
                return;
            }
            for (int v = start; v <= N; ++v) {
                cur.push_back(v);
                rec(v + 1);
                cur.pop_back();
            }
        };
        rec(0);
    }
    for (const auto& [verts, id] : idx) {
        int n = static_cast<int>(verts.size()) - 1;
        for (int i = 0; i <= n && n >= 1; ++i) {
            std::vector<int> f = verts;
            f.erase(f.begin() + i);
            auto [it, ins] = S.faces.try_emplace({n, i}, S.X.basis(), S.X.basis());
            it->second.add_entry(id, idx.at(f), Scalar(1));
        }
    }
    return S;
}

}  // namespace infsimp
