#ifndef INFSIMP_FACE_FAMILY_HPP
#define INFSIMP_FACE_FAMILY_HPP

#include "infsimp/colored.hpp"
#include "infsimp/koszul.hpp"

#include <map>

namespace infsimp {

/// Maps indexed by wedge tuples (n, tuple). Each map is defined on the whole
/// source module but only its columns in degree n are meaningful; absent
/// entries are zero.
struct WedgeMaps {
    std::map<WedgeTuple, SparseMap> maps;

    const SparseMap* find(const WedgeTuple& w) const {
        auto it = maps.find(w);
        return it == maps.end() ? nullptr : &it->second;
    }
    /// Applies the map indexed by w to the part of v lying in X_{w.n}.
    Vec apply(const WedgeTuple& w, const Vec& v) const {
        const SparseMap* m = find(w);
        return m ? m->apply(v) : Vec{};
    }
    /// Entry for w, created as the zero map src -> tgt when missing.
    SparseMap& at(const WedgeTuple& w, const ModulePtr& src, const ModulePtr& tgt) {
        return maps.try_emplace(w, src, tgt).first->second;
    }
};

/// The infinity-faces d_(i1..ik) : X_{n,*} -> X_{n-k,*+k-1}, k >= 1.
struct FaceFamily : WedgeMaps {};

/// f_() : X_{n,*} -> Y_{n,*} together with f_(i1..ik) : X_{n,*} -> Y_{n-k,*+k}.
struct MorphismFamily {
    SparseMap base;
    WedgeMaps higher;
};

/// h_() : X_{n,*} -> Y_{n,*+1} together with h_(i1..ik) : X_{n,*} -> Y_{n-k,*+k+1}.
struct HomotopyFamily {
    SparseMap base;
    WedgeMaps higher;
};

/// A bigraded module together with infinity-faces.
struct FaceModule {
    BigradedModule X;
    FaceFamily faces;
};

}  // namespace infsimp

#endif
