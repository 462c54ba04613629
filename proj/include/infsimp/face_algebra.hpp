#ifndef INFSIMP_FACE_ALGEBRA_HPP
#define INFSIMP_FACE_ALGEBRA_HPP

#include "infsimp/colored.hpp"
#include "infsimp/report.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace infsimp {

/// The letter d_i^n, a face X_n -> X_{n-1}.
struct FaceLetter {
    int i = 0;
    int n = 0;
    auto operator<=>(const FaceLetter&) const = default;
};

/// Product of letters read left to right; the rightmost letter acts first, so
/// ambient indices increase by one from left to right.
using FaceWord = std::vector<FaceLetter>;

std::string to_string(const FaceWord& w);
bool composable(const FaceWord& w);
/// Colors (s,t) of a nonempty composable word: X_t -> X_s.
ColorPair word_colors(const FaceWord& w);

/// Every word reachable by one application of d_i d_j -> d_{j-1} d_i (i < j).
std::vector<FaceWord> rewrite_once(const FaceWord& w);
/// Unique normal form (adjacent indices non-increasing). Throws InputError
/// on non-composable input. The relation carries no sign.
FaceWord normalize_word(const FaceWord& w);
bool is_normal(const FaceWord& w);
/// All normal words X_t -> X_s.
std::vector<FaceWord> normal_words(int s, int t);

/// Elements of the face algebra F as combinations of normal words.
using FaceElement = LinComb<FaceWord>;
/// Product in F: concatenation followed by normalization; zero on color mismatch.
FaceElement face_product(const FaceElement& a, const FaceElement& b);

/// Quadratic presentation T(M)/(Q) of F up to a maximal color.
struct QuadraticPresentation {
    int n_max = 0;
    ColoredModule M;
    /// Relations in M (x) M, grouped by colors, as combinations of two-letter words.
    std::map<ColorPair, std::vector<LinComb<FaceWord>>> Q;
};

QuadraticPresentation build_presentation(int n_max);

/// Strict faces of a differential bigraded module, keyed by (n, i).
using StrictFaces = std::map<std::pair<int, int>, SparseMap>;

/// Checks d d_i + d_i d = 0 and d_i d_j = d_{j-1} d_i. When f is given it also
/// checks that f is a chain map commuting with faces (target faces required);
/// when h is given with f and g, checks dh + hd = f - g and d_i h + h d_i = 0.
struct StrictMorphismData {
    const BigradedModule* Y = nullptr;
    const StrictFaces* faces_Y = nullptr;
    const SparseMap* f = nullptr;
    const SparseMap* g = nullptr;
    const SparseMap* h = nullptr;
};
Report check_strict_module(const BigradedModule& X, const StrictFaces& faces,
                           const StrictMorphismData& extra = {});

/// Semi-simplicial model of the standard N-simplex: X_{n,0} is free on the
/// increasing (n+1)-tuples in {0..N}, d = 0, and d_i deletes the i-th vertex.
struct StrictModule {
    BigradedModule X;
    StrictFaces faces;
};
StrictModule standard_simplex(int N, int n_max);

}  // namespace infsimp

#endif
