#include "infsimp/json_io.hpp"

#include <fstream>
#include <sstream>

namespace infsimp {

namespace {

const json& field(const json& j, const char* name, const std::string& ptr) {
    if (!j.is_object()) throw SchemaError(ptr, "expected an object");
    auto it = j.find(name);
    if (it == j.end()) throw SchemaError(ptr + "/" + name, "missing field");
    return *it;
}

const json& array_field(const json& j, const char* name, const std::string& ptr) {
    const json& a = field(j, name, ptr);
    if (!a.is_array()) throw SchemaError(ptr + "/" + name, "expected an array");
    return a;
}

int int_field(const json& j, const char* name, const std::string& ptr) {
    const json& v = field(j, name, ptr);
    if (!v.is_number_integer()) throw SchemaError(ptr + "/" + name, "expected an integer");
    return v.get<int>();
}

std::string string_field(const json& j, const char* name, const std::string& ptr) {
    const json& v = field(j, name, ptr);
    if (!v.is_string()) throw SchemaError(ptr + "/" + name, "expected a string");
    return v.get<std::string>();
}

Scalar coeff_field(const json& j, const std::string& ptr, Ring ring) {
    const json& v = field(j, "c", ptr);
    try {
        if (v.is_string()) return Scalar::parse(v.get<std::string>(), ring);
        if (v.is_number_integer()) return Scalar(v.get<long>(), ring);
    } catch (const InputError& e) {
        throw SchemaError(ptr + "/c", e.what());
    }
    throw SchemaError(ptr + "/c", "expected a decimal string");
}

std::string at(const std::string& ptr, std::size_t i) { return ptr + "/" + std::to_string(i); }

}  // namespace

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("", "cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw SchemaError("", std::string("malformed JSON: ") + e.what());
    }
}

std::string dump_canonical(const json& j) { return j.dump(2) + "\n"; }

json map_to_json(const SparseMap& f) {
    json arr = json::array();
    for (const auto& [j, col] : f.columns())
        for (const auto& [i, c] : col)
            arr.push_back({{"from", f.source()->key(j)}, {"to", f.target()->key(i)}, {"c", c.str()}});
    return arr;
}

SparseMap map_from_json(const json& j, const ModulePtr& src, const ModulePtr& tgt, Ring ring, const std::string& ptr) {
    if (!j.is_array()) throw SchemaError(ptr, "expected an array of entries");
    SparseMap f(src, tgt);
    for (std::size_t e = 0; e < j.size(); ++e) {
        std::string p = at(ptr, e);
        std::string from = string_field(j[e], "from", p);
        std::string to = string_field(j[e], "to", p);
        if (!src->contains(from)) throw SchemaError(p + "/from", "unknown basis key '" + from + "'");
        if (!tgt->contains(to)) throw SchemaError(p + "/to", "unknown basis key '" + to + "'");
        f.add_entry(src->index_of(from), tgt->index_of(to), coeff_field(j[e], p, ring));
    }
    return f;
}

json module_to_json(const BigradedModule& X) {
    json comps = json::array();
    for (int i = 0; i < X.rank();) {
        int n = X.n_of(i), m = X.m_of(i);
        json basis = json::array();
        while (i < X.rank() && X.n_of(i) == n && X.m_of(i) == m) basis.push_back(X.key(i++));
        comps.push_back({{"n", n}, {"m", m}, {"basis", basis}});
    }
    return {{"components", comps}, {"d", map_to_json(X.d())}};
}

BigradedModule module_from_json(const json& j, Ring ring, const std::string& ptr) {
    BigradedModule X(ring);
    const json& comps = array_field(j, "components", ptr);
    for (std::size_t c = 0; c < comps.size(); ++c) {
        std::string p = at(ptr + "/components", c);
        int n = int_field(comps[c], "n", p);
        int m = int_field(comps[c], "m", p);
        if (n < 0) throw SchemaError(p + "/n", "must be nonnegative");
        const json& basis = array_field(comps[c], "basis", p);
        for (std::size_t b = 0; b < basis.size(); ++b) {
            if (!basis[b].is_string()) throw SchemaError(at(p + "/basis", b), "expected a string");
            std::string key = basis[b].get<std::string>();
            if (X.contains(key)) throw SchemaError(at(p + "/basis", b), "duplicate basis key '" + key + "'");
            X.add(key, n, m);
        }
    }
    if (j.contains("d")) {
        SparseMap d = map_from_json(j["d"], X.basis(), X.basis(), ring, ptr + "/d");
        for (const auto& [from, col] : d.columns())
            for (const auto& [to, c] : col)
                if (X.n_of(to) != X.n_of(from) || X.m_of(to) != X.m_of(from) - 1)
                    throw SchemaError(ptr + "/d", "entry " + X.key(from) + " -> " + X.key(to) + " has the wrong bidegree");
        X.set_d(d);
    }
    return X;
}

json colored_to_json(const ColoredModule& X) {
    json comps = json::array();
    for (int i = 0; i < X.rank();) {
        int s = X.s_of(i), t = X.t_of(i), m = X.m_of(i);
        json basis = json::array();
        while (i < X.rank() && X.s_of(i) == s && X.t_of(i) == t && X.m_of(i) == m) basis.push_back(X.basis()->key(i++));
        comps.push_back({{"s", s}, {"t", t}, {"m", m}, {"basis", basis}});
    }
    return {{"components", comps}, {"d", map_to_json(X.d())}};
}

ColoredModule colored_from_json(const json& j, Ring ring, const std::string& ptr) {
    ColoredModule X(ring);
    const json& comps = array_field(j, "components", ptr);
    for (std::size_t c = 0; c < comps.size(); ++c) {
        std::string p = at(ptr + "/components", c);
        int s = int_field(comps[c], "s", p);
        int t = int_field(comps[c], "t", p);
        int m = int_field(comps[c], "m", p);
        if (s < 0 || t < 0) throw SchemaError(p, "colors must be nonnegative");
        const json& basis = array_field(comps[c], "basis", p);
        for (std::size_t b = 0; b < basis.size(); ++b) {
            if (!basis[b].is_string()) throw SchemaError(at(p + "/basis", b), "expected a string");
            std::string key = basis[b].get<std::string>();
            if (X.basis()->contains(key)) throw SchemaError(at(p + "/basis", b), "duplicate basis key '" + key + "'");
            X.add(key, s, t, m);
        }
    }
    if (j.contains("d")) {
        SparseMap d = map_from_json(j["d"], X.basis(), X.basis(), ring, ptr + "/d");
        X.d() = d;
        std::string err = X.validate();
        if (!err.empty()) throw SchemaError(ptr + "/d", err);
    }
    return X;
}

json wedge_maps_to_json(const WedgeMaps& F) {
    json arr = json::array();
    for (const auto& [w, f] : F.maps) {
        const int n = w.n;
        SparseMap g = f.restricted([&](int j) { return f.source()->grading(j).at(0) == n; });
        if (g.is_zero()) continue;
        arr.push_back({{"n", w.n}, {"tuple", w.tuple}, {"map", map_to_json(g)}});
    }
    return arr;
}

json faces_to_json(const FaceFamily& F) { return wedge_maps_to_json(F); }

FaceFamily faces_from_json(const json& j, const BigradedModule& X, const std::string& ptr) {
    if (!j.is_array()) throw SchemaError(ptr, "expected an array of faces");
    FaceFamily F;
    for (std::size_t e = 0; e < j.size(); ++e) {
        std::string p = at(ptr, e);
        WedgeTuple w;
        w.n = int_field(j[e], "n", p);
        if (j[e].contains("tuple")) {
            const json& t = j[e]["tuple"];
            if (!t.is_array()) throw SchemaError(p + "/tuple", "expected an array");
            for (std::size_t a = 0; a < t.size(); ++a) {
                if (!t[a].is_number_integer()) throw SchemaError(at(p + "/tuple", a), "expected an integer");
                w.tuple.push_back(t[a].get<int>());
            }
        } else {
            w.tuple.push_back(int_field(j[e], "i", p));
        }
        if (w.is_unit() || !w.valid()) throw SchemaError(p, "tuple must be strictly increasing within 0..n with 1 <= k <= n");
        if (F.find(w)) throw SchemaError(p, "duplicate face " + to_string(w));
        SparseMap m = map_from_json(field(j[e], "map", p), X.basis(), X.basis(), X.ring(), p + "/map");
        for (const auto& [from, col] : m.columns()) {
            if (X.n_of(from) != w.n) throw SchemaError(p + "/map", "source " + X.key(from) + " is not in degree " + std::to_string(w.n));
            for (const auto& [to, c] : col)
                if (X.n_of(to) != w.s() || X.m_of(to) != X.m_of(from) + w.k() - 1)
                    throw SchemaError(p + "/map", "entry " + X.key(from) + " -> " + X.key(to) + " has the wrong bidegree");
        }
        F.maps.emplace(w, std::move(m));
    }
    return F;
}

json face_module_to_json(const FaceModule& M) {
    return {{"module", module_to_json(M.X)}, {"faces", faces_to_json(M.faces)}};
}

FaceModule face_module_from_json(const json& j, Ring ring, const std::string& ptr) {
    FaceModule M{module_from_json(field(j, "module", ptr), ring, ptr + "/module"), {}};
    if (j.contains("faces")) M.faces = faces_from_json(j["faces"], M.X, ptr + "/faces");
    return M;
}

json transfer_input_to_json(const TransferInput& t) {
    return {{"X", face_module_to_json(t.X)},
            {"Y", module_to_json(t.Y)},
            {"eta", map_to_json(t.sdr.eta)},
            {"xi", map_to_json(t.sdr.xi)},
            {"h", map_to_json(t.sdr.h)}};
}

TransferInput transfer_input_from_json(const json& j, Ring ring) {
    TransferInput t{face_module_from_json(field(j, "X", ""), ring, "/X"), module_from_json(field(j, "Y", ""), ring, "/Y"), {}};
    const ModulePtr& X = t.X.X.basis();
    const ModulePtr& Y = t.Y.basis();
    t.sdr.eta = map_from_json(field(j, "eta", ""), X, Y, ring, "/eta");
    t.sdr.xi = map_from_json(field(j, "xi", ""), Y, X, ring, "/xi");
    t.sdr.h = map_from_json(field(j, "h", ""), X, X, ring, "/h");
    return t;
}

json ainf_to_json(const AInfAlgebra& A) {
    json gens = json::array();
    for (std::size_t g = 0; g < A.gens.size(); ++g) gens.push_back({{"id", A.gens[g]}, {"deg", A.deg[g]}});
    json d = json::array();
    for (const auto& [g, v] : A.d) {
        json to = json::array();
        for (const auto& [h, c] : v) to.push_back({{"gen", A.gens[h]}, {"c", c.str()}});
        if (!to.empty()) d.push_back({{"from", A.gens[g]}, {"to", to}});
    }
    json pi = json::array();
    for (const auto& [n, table] : A.pi) {
        json entries = json::array();
        for (const auto& [in, out] : table) {
            if (out.is_zero()) continue;
            json from = json::array();
            for (int g : in) from.push_back(A.gens[g]);
            json to = json::array();
            for (const auto& [h, c] : out) to.push_back({{"gen", A.gens[h]}, {"c", c.str()}});
            entries.push_back({{"from", from}, {"to", to}});
        }
        if (!entries.empty()) pi.push_back({{"n", n}, {"entries", entries}});
    }
    return {{"generators", gens}, {"d", d}, {"pi", pi}};
}

namespace {

LinComb<std::string> targets(const json& to, const std::string& ptr, const AInfAlgebra& A) {
    if (!to.is_array()) throw SchemaError(ptr, "expected an array of {gen, c}");
    LinComb<std::string> r;
    for (std::size_t e = 0; e < to.size(); ++e) {
        std::string p = at(ptr, e);
        std::string g = string_field(to[e], "gen", p);
        try {
            A.index_of(g);
        } catch (const InputError&) {
            throw SchemaError(p + "/gen", "unknown generator '" + g + "'");
        }
        r.add(g, coeff_field(to[e], p, A.ring));
    }
    return r;
}

}  // namespace

AInfAlgebra ainf_from_json(const json& j, Ring ring) {
    AInfAlgebra A;
    A.ring = ring;
    const json& gens = array_field(j, "generators", "");
    for (std::size_t g = 0; g < gens.size(); ++g) {
        std::string p = at("/generators", g);
        try {
            A.add_generator(string_field(gens[g], "id", p), int_field(gens[g], "deg", p));
        } catch (const SchemaError&) {
            throw;
        } catch (const InputError& e) {
            throw SchemaError(p + "/id", e.what());
        }
    }
    if (j.contains("d")) {
        const json& d = array_field(j, "d", "");
        for (std::size_t e = 0; e < d.size(); ++e) {
            std::string p = at("/d", e);
            std::string from = string_field(d[e], "from", p);
            try {
                A.index_of(from);
            } catch (const InputError&) {
                throw SchemaError(p + "/from", "unknown generator '" + from + "'");
            }
            A.set_d(from, targets(field(d[e], "to", p), p + "/to", A));
        }
    }
    if (j.contains("pi")) {
        const json& pi = array_field(j, "pi", "");
        for (std::size_t t = 0; t < pi.size(); ++t) {
            std::string p = at("/pi", t);
            int n = int_field(pi[t], "n", p);
            if (n < 0) throw SchemaError(p + "/n", "must be nonnegative");
            const json& entries = array_field(pi[t], "entries", p);
            for (std::size_t e = 0; e < entries.size(); ++e) {
                std::string pe = at(p + "/entries", e);
                const json& from = array_field(entries[e], "from", pe);
                std::vector<std::string> ids;
                for (std::size_t a = 0; a < from.size(); ++a) {
                    if (!from[a].is_string()) throw SchemaError(at(pe + "/from", a), "expected a generator id");
                    ids.push_back(from[a].get<std::string>());
                    try {
                        A.index_of(ids.back());
                    } catch (const InputError&) {
                        throw SchemaError(at(pe + "/from", a), "unknown generator '" + ids.back() + "'");
                    }
                }
                if (static_cast<int>(ids.size()) != n + 2)
                    throw SchemaError(pe + "/from", "pi_" + std::to_string(n) + " takes " + std::to_string(n + 2) + " inputs");
                A.set_pi(n, ids, targets(field(entries[e], "to", pe), pe + "/to", A));
            }
        }
    }
    try {
        validate_ainf_shapes(A);
    } catch (const InputError& e) {
        throw SchemaError("", e.what());
    }
    return A;
}

json lincomb_to_json(const LinComb<std::string>& v) {
    json o = json::object();
    for (const auto& [k, c] : v) o[k] = c.str();
    return o;
}

json report_to_json(const Report& r) {
    json v = json::array();
    for (const Violation& x : r.violations)
        v.push_back({{"location", x.location}, {"relation", x.relation}, {"discrepancy", lincomb_to_json(x.discrepancy)}});
    return {{"pass", r.pass()}, {"checked", r.checked}, {"violations", v}};
}

}  // namespace infsimp
