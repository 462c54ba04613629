// Command-line front end. Exit status: 0 when every check passes, 1 when a
// check fails (the report carries the witness), 2 on input or schema errors.
#include "infsimp/json_io.hpp"
#include "infsimp/random_models.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <numeric>

using namespace infsimp;

namespace {

struct Config {
    std::string coeff = "rat";
    int n_max = -1;
    int word_cap = 4;
    int deg_cap = 8;
    std::uint64_t seed = 1;
    std::string out;
};

/// Named reports gathered by one command, emitted in insertion order.
class Checks {
public:
    void add(const std::string& name, const Report& r) { items_.emplace_back(name, r); }
    bool pass() const {
        for (const auto& [name, r] : items_)
            if (!r.pass()) return false;
        return true;
    }
    json to_json() const {
        json arr = json::array();
        for (const auto& [name, r] : items_) {
            json j = report_to_json(r);
            j["name"] = name;
            arr.push_back(j);
        }
        return arr;
    }
    json witness() const {
        for (const auto& [name, r] : items_)
            if (!r.pass()) {
                const Violation& v = r.violations.front();
                return {{"check", name}, {"location", v.location}, {"relation", v.relation},
                        {"discrepancy", lincomb_to_json(v.discrepancy)}};
            }
        return nullptr;
    }

private:
    std::vector<std::pair<std::string, Report>> items_;
};

int emit(const Config& cfg, json doc, const Checks& checks) {
    doc["pass"] = checks.pass();
    doc["checks"] = checks.to_json();
    if (!checks.pass()) doc["witness"] = checks.witness();
    std::string text = dump_canonical(doc);
    if (cfg.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(cfg.out);
        if (!f) throw SchemaError("", "cannot write '" + cfg.out + "'");
        f << text;
    }
    return checks.pass() ? 0 : 1;
}

int cap_or(int value, int fallback) { return value >= 0 ? value : fallback; }

json word_comb(const AInfAlgebra& A, const LinComb<AWord>& v) {
    json o = json::object();
    for (const auto& [w, c] : v) o[word_key(A, w)] = c.str();
    return o;
}

json omega_comb(const LinComb<OmegaWord>& v) {
    json o = json::object();
    for (const auto& [w, c] : v) o[to_string(w)] = c.str();
    return o;
}

// ---- finf ----------------------------------------------------------------

Report check_golden(const json& golden, Ring ring, int n_max, long& used) {
    Report rep;
    const json* entries = nullptr;
    if (!golden.is_object() || !golden.contains("entries") || !golden["entries"].is_array())
        throw SchemaError("/entries", "expected an array of {generator, d}");
    entries = &golden["entries"];
    for (std::size_t e = 0; e < entries->size(); ++e) {
        std::string p = "/entries/" + std::to_string(e);
        const json& item = (*entries)[e];
        if (!item.is_object() || !item.contains("generator") || !item["generator"].is_string())
            throw SchemaError(p + "/generator", "expected a generator string");
        if (!item.contains("d") || !item["d"].is_object()) throw SchemaError(p + "/d", "expected an object of words");
        WedgeTuple g;
        try {
            g = parse_wedge(item["generator"].get<std::string>());
        } catch (const InputError& err) {
            throw SchemaError(p + "/generator", err.what());
        }
        if (g.n > n_max) continue;
        ++used;
        LinComb<std::string> expect;
        for (const auto& [word, c] : item["d"].items()) {
            try {
                parse_omega_word(word);
                expect.add(word, c.is_string() ? Scalar::parse(c.get<std::string>(), ring) : Scalar(c.get<long>(), ring));
            } catch (const std::exception& err) {
                throw SchemaError(p + "/d/" + word, err.what());
            }
        }
        LinComb<std::string> got;
        for (const auto& [w, c] : finf_d(OmegaWord{g})) got.add(to_string(w), Scalar(c.value(), ring));
        ++rep.checked;
        if (got != expect) rep.fail(to_string(g), "d(generator) equals the golden expansion", got - expect);
    }
    return rep;
}

int cmd_finf_verify(const Config& cfg, const std::string& golden_path) {
    const int n_max = cap_or(cfg.n_max, 6);
    Ring ring = Ring::parse(cfg.coeff);
    Report square, blocks;
    for (int n = 1; n <= n_max; ++n)
        for (int k = 1; k <= n; ++k)
            for (const WedgeTuple& g : wedge_tuples(n, k)) {
                ++square.checked;
                LinComb<OmegaWord> dd = finf_d(finf_d(OmegaWord{g}));
                if (!dd.is_zero()) {
                    LinComb<std::string> disc;
                    for (const auto& [w, c] : dd) disc.add(to_string(w), c);
                    square.fail(to_string(g), "d(d(generator)) = 0", disc);
                }
                if (k < 2 || k > 4) continue;
                std::vector<int> sigma(k);
                std::iota(sigma.begin(), sigma.end(), 0);
                do {
                    for (int m = 1; m < k; ++m) {
                        ++blocks.checked;
                        if (sigma_blocks_ordered(g, sigma, m) != hat_blocks_ordered(g, sigma, m)) {
                            std::string s;
                            for (int v : sigma) s += std::to_string(v);
                            blocks.fail(to_string(g) + " sigma=" + s + " m=" + std::to_string(m),
                                        "ordered sigma blocks iff ordered hat blocks");
                        }
                    }
                } while (std::next_permutation(sigma.begin(), sigma.end()));
            }
    Checks checks;
    checks.add("d_squared", square);
    checks.add("split_criteria", blocks);
    json doc{{"command", "finf verify"}, {"n_max", n_max}, {"generators", square.checked}};
    if (!golden_path.empty()) {
        long used = 0;
        checks.add("golden", check_golden(load_json_file(golden_path), ring, n_max, used));
        doc["golden_entries"] = used;
    }
    return emit(cfg, doc, checks);
}

int cmd_finf_golden(const Config& cfg) {
    const int n_max = cap_or(cfg.n_max, 4);
    json entries = json::array();
    for (int n = 1; n <= n_max; ++n)
        for (int k = 1; k <= n; ++k)
            for (const WedgeTuple& g : wedge_tuples(n, k))
                entries.push_back({{"generator", to_string(g)}, {"d", omega_comb(finf_d(OmegaWord{g}))}});
    Checks none;
    return emit(cfg, {{"command", "finf golden"}, {"n_max", n_max}, {"entries", entries}}, none);
}

// ---- koszul ---------------------------------------------------------------

long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

int cmd_koszul_check(const Config& cfg) {
    const int n_max = cap_or(cfg.n_max, 5);
    Ring ring = Ring::parse(cfg.coeff);
    QuadraticPresentation P = build_presentation(std::max(n_max, 1));
    Report ranks, wedges;
    json table = json::array();
    for (int n = 1; n <= n_max; ++n)
        for (int k = 1; k <= n; ++k) {
            std::string at = "(k=" + std::to_string(k) + ",s=" + std::to_string(n - k) + ",t=" + std::to_string(n) + ")";
            DualComponent D = koszul_dual_generic(P, k, n - k, n, ring);
            ++ranks.checked;
            long rank = static_cast<long>(D.basis.size());
            table.push_back({{"k", k}, {"n", n}, {"rank", rank}, {"expected", binom(n + 1, k)}});
            if (rank != binom(n + 1, k)) ranks.fail(at, "rank equals C(n+1,k)");
            Echelon span(ring);
            for (const Vec& v : D.basis) span.insert(v);
            std::vector<Vec> vs;
            for (const WedgeTuple& w : wedge_tuples(n, k)) {
                ++wedges.checked;
                Vec v = ambient_coordinates(D, wedge_vector(w));
                if (!span.contains(v)) wedges.fail(to_string(w), "wedge vector lies in the intersection");
                vs.push_back(v);
            }
            if (rank_of(vs, ring) != static_cast<int>(rank)) wedges.fail(at, "wedge vectors form a basis");
        }

    Report coalg;
    using Triple = std::tuple<WedgeTuple, WedgeTuple, WedgeTuple>;
    for (int n = 0; n <= n_max; ++n)
        for (int k = 0; k <= n; ++k)
            for (const WedgeTuple& w : wedge_tuples(n, k)) {
                ++coalg.checked;
                LinComb<Triple> left, right;
                LinComb<WedgeTuple> lu, ru;
                for (const auto& [pr, c] : coproduct(w)) {
                    for (const auto& [p2, c2] : coproduct(pr.first)) left.add({p2.first, p2.second, pr.second}, c * c2);
                    for (const auto& [p2, c2] : coproduct(pr.second)) right.add({pr.first, p2.first, p2.second}, c * c2);
                    if (pr.first.is_unit()) lu.add(pr.second, c);
                    if (pr.second.is_unit()) ru.add(pr.first, c);
                }
                if (left != right) coalg.fail(to_string(w), "coassociativity");
                LinComb<WedgeTuple> self(w, Scalar(1));
                if (lu != self || ru != self) coalg.fail(to_string(w), "counit");
            }

    std::vector<WedgeTuple> basis;
    for (int n = 1; n <= n_max; ++n)
        for (int k = 1; k <= n; ++k)
            for (const WedgeTuple& w : wedge_tuples(n, k)) basis.push_back(w);
    std::function<LinComb<FaceWord>(const WedgeTuple&)> phi = phi_shriek;
    std::function<LinComb<FaceWord>(const FaceWord&)> dF = [](const FaceWord&) { return LinComb<FaceWord>{}; };
    std::function<LinComb<FaceWord>(const FaceWord&, const FaceWord&)> prodF = [](const FaceWord& a, const FaceWord& b) {
        return face_product(FaceElement(a, Scalar(1)), FaceElement(b, Scalar(1)));
    };
    std::function<std::string(const WedgeTuple&)> nameC = [](const WedgeTuple& w) { return to_string(w); };
    std::function<std::string(const FaceWord&)> nameF = [](const FaceWord& w) { return to_string(w); };
    Report twisting = check_twisting_cochain<WedgeTuple, FaceWord>(basis, fshriek_view(), phi, dF, prodF, nameC, nameF);

    Checks checks;
    checks.add("intersection_rank", ranks);
    checks.add("wedge_basis", wedges);
    checks.add("coalgebra", coalg);
    checks.add("twisting_cochain", twisting);
    return emit(cfg, {{"command", "koszul check"}, {"n_max", n_max}, {"coeff", cfg.coeff}, {"ranks", table}}, checks);
}

// ---- ainf / bar -----------------------------------------------------------

AInfAlgebra load_ainf(const Config& cfg, const std::string& path) {
    return ainf_from_json(load_json_file(path), Ring::parse(cfg.coeff));
}

int cmd_ainf_validate(const Config& cfg, const std::string& path) {
    AInfAlgebra A = load_ainf(cfg, path);
    const int len = cap_or(cfg.n_max, cfg.word_cap);
    Checks checks;
    Report rel = check_ainf(A, 4, cfg.deg_cap);
    checks.add("ainf_relations", rel);
    json doc{{"command", "ainf validate"}, {"input", ainf_to_json(A)}};
    if (rel.pass()) {
        TensorAlgebraModule T = faces_from_ainf(A, len, cfg.deg_cap);
        checks.add("tensor_algebra_faces", check_faces(T.M));
        doc["tensor_algebra_rank"] = T.M.X.rank();
    }
    return emit(cfg, doc, checks);
}

int cmd_bar_build(const Config& cfg, const std::string& path) {
    AInfAlgebra A = load_ainf(cfg, path);
    const int len = cfg.word_cap;
    Checks checks;
    Report rel = check_ainf(A, 4, cfg.deg_cap);
    checks.add("ainf_relations", rel);
    json doc{{"command", "bar build"}, {"word_cap", len}, {"deg_cap", cfg.deg_cap}};
    if (!rel.pass()) return emit(cfg, doc, checks);

    json words = json::array(), diff = json::object(), cop = json::object();
    for (const AWord& w : bar_words(A, len, cfg.deg_cap)) {
        std::string key = word_key(A, w);
        words.push_back({{"word", key}, {"length", w.size()}, {"degree", A.degree(w)}});
        diff[key] = word_comb(A, bar_differential(A, w));
        json terms = json::array();
        for (const auto& [pr, c] : bar_coproduct(A, w))
            terms.push_back({{"left", word_key(A, pr.first)}, {"right", word_key(A, pr.second)}, {"c", c.str()}});
        cop[key] = terms;
    }
    doc["words"] = words;
    doc["differential"] = diff;
    doc["coproduct"] = cop;
    checks.add("bar_square", check_bar_square(A, len, cfg.deg_cap));
    checks.add("total_complex_agreement", compare_bar_with_total_complex(A, len, cfg.deg_cap));
    checks.add("coalgebra", check_bar_coalgebra(A, len, cfg.deg_cap));
    checks.add("delta_morphism", check_delta_morphism(A, std::min(len, 3)));
    bool dga = true;
    for (const auto& [n, table] : A.pi)
        for (const auto& [in, out] : table)
            if (n > 0 && !out.is_zero()) dga = false;
    if (dga) checks.add("classical_bar", classic_bar_compare(A, len, cfg.deg_cap));
    return emit(cfg, doc, checks);
}

// ---- realize ----------------------------------------------------------------

int cmd_realize(const Config& cfg, const std::string& path, bool oracle) {
    Ring ring = Ring::parse(cfg.coeff);
    json in = load_json_file(path);
    const int n_max = cap_or(cfg.n_max, 3);
    FaceModule M{BigradedModule(ring), {}};
    if (in.is_object() && in.contains("generators")) {
        M = faces_from_ainf(ainf_from_json(in, ring), n_max, cfg.deg_cap).M;
    } else {
        M = face_module_from_json(in, ring);
    }
    Checks checks;
    checks.add("faces", check_faces(M));
    json doc{{"command", "realize"}, {"n_max", n_max}};
    TotalComplex tot = total_complex(M);
    json tr = json::object();
    for (const auto& [deg, r] : tot.rank_by_degree()) tr[std::to_string(deg)] = r;
    doc["total_ranks"] = tr;
    if (oracle) {
        RealizationResult r = naive_realization_oracle(M, n_max, ring);
        checks.add("realization", r.report);
        json qr = json::object();
        for (const auto& [deg, rank] : r.quotient_ranks) qr[std::to_string(deg)] = rank;
        doc["quotient_ranks"] = qr;
        doc["space_rank"] = r.space_rank;
        doc["relation_count"] = r.relation_count;
        doc["isomorphic"] = r.isomorphic;
        Report iso;
        ++iso.checked;
        if (!r.isomorphic) iso.fail("ranks", "realization is isomorphic to the total complex");
        checks.add("isomorphic", iso);
    } else {
        doc["differential"] = map_to_json(tot.differential);
    }
    return emit(cfg, doc, checks);
}

// ---- transfer ---------------------------------------------------------------

json morphism_json(const SparseMap& base, const WedgeMaps& higher) {
    return {{"base", map_to_json(base)}, {"higher", wedge_maps_to_json(higher)}};
}

int cmd_transfer(const Config& cfg, const std::string& path, bool cone) {
    Ring ring = Ring::parse(cfg.coeff);
    TransferInput in{FaceModule{BigradedModule(ring), {}}, BigradedModule(ring), {}};
    if (cone) {
        ConeExample ex = acyclic_cone_example(load_ainf(cfg, path), cap_or(cfg.n_max, 3), cfg.seed);
        in = TransferInput{ex.X, ex.Y, ex.sdr};
    } else {
        in = transfer_input_from_json(load_json_file(path), ring);
    }
    Checks checks;
    Report faces = check_faces(in.X);
    Report sdr = validate_sdr(in.X.X, in.Y, in.sdr);
    checks.add("input_faces", faces);
    checks.add("sdr", sdr);
    json doc{{"command", "transfer"}};
    if (cone) doc["input"] = transfer_input_to_json(in);
    if (!faces.pass() || !sdr.pass()) return emit(cfg, doc, checks);

    TransferredSDR t = transferred_sdr(in.X, in.Y, in.sdr);
    checks.add("transferred_faces", check_faces(t.Y));
    checks.add("eta_bar", check_morphism(t.eta_bar, in.X, t.Y));
    checks.add("xi_bar", check_morphism(t.xi_bar, t.Y, in.X));
    MorphismFamily round = compose_morphisms(t.xi_bar, t.eta_bar, in.X.X.max_n());
    checks.add("h_bar", check_homotopy(t.h_bar, round, identity_morphism(in.X.X), in.X, in.X));
    Report init;
    init.checked = 3;
    if (!(t.eta_bar.base == in.sdr.eta)) init.fail("eta_bar()", "initial component equals eta");
    if (!(t.xi_bar.base == in.sdr.xi)) init.fail("xi_bar()", "initial component equals xi");
    if (!(t.h_bar.base == in.sdr.h)) init.fail("h_bar()", "initial component equals h");
    checks.add("initial_conditions", init);

    doc["faces"] = faces_to_json(t.Y.faces);
    doc["eta_bar"] = morphism_json(t.eta_bar.base, t.eta_bar.higher);
    doc["xi_bar"] = morphism_json(t.xi_bar.base, t.xi_bar.higher);
    doc["h_bar"] = morphism_json(t.h_bar.base, t.h_bar.higher);
    doc["stats"] = {{"max_stages", t.stats.max_stages}, {"summands", t.stats.summands}};
    return emit(cfg, doc, checks);
}

// ---- tensor -----------------------------------------------------------------

int cmd_tensor_check(const Config& cfg, const std::string& a, const std::string& b) {
    Ring ring = Ring::parse(cfg.coeff);
    FaceModule X = face_module_from_json(load_json_file(a), ring);
    FaceModule Y = face_module_from_json(load_json_file(b), ring);
    Checks checks;
    checks.add("X", check_faces(X));
    checks.add("Y", check_faces(Y));
    json doc{{"command", "tensor check"}};
    if (checks.pass()) {
        FaceModule T = tensor_faces(X, Y, cfg.n_max);
        checks.add("tensor", check_faces(T));
        doc["rank"] = T.X.rank();
        doc["tensor"] = face_module_to_json(T);
    }
    return emit(cfg, doc, checks);
}

int input_error(const std::string& pointer, const std::string& message) {
    json err{{"error", message}, {"pointer", pointer}};
    std::cerr << dump_canonical(err);
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Infinity-simplicial faces: verification and computation"};
    app.require_subcommand(1);
    Config cfg;
    auto common = [&](CLI::App* sub) {
        sub->add_option("--coeff", cfg.coeff, "Coefficient ring: int, rat or mod:p")->capture_default_str();
        sub->add_option("--n-max", cfg.n_max, "Largest simplicial degree n");
        sub->add_option("--word-cap", cfg.word_cap, "Largest bar word length")->capture_default_str();
        sub->add_option("--deg-cap", cfg.deg_cap, "Largest internal degree of a word")->capture_default_str();
        sub->add_option("--seed", cfg.seed, "Seed for randomized constructions")->capture_default_str();
        sub->add_option("--out", cfg.out, "Write the JSON report here instead of stdout");
    };

    std::string golden, file, file2;
    bool oracle = false, cone = false;
    std::function<int()> action;

    CLI::App* finf = app.add_subcommand("finf", "Relations of the algebra of infinity-faces");
    finf->require_subcommand(1);
    CLI::App* verify = finf->add_subcommand("verify", "d^2 = 0 on generators and the split criteria");
    common(verify);
    verify->add_option("--golden", golden, "Compare generator differentials with a golden file")->check(CLI::ExistingFile);
    verify->callback([&] { action = [&] { return cmd_finf_verify(cfg, golden); }; });
    CLI::App* gold = finf->add_subcommand("golden", "Write generator differentials as a golden file");
    common(gold);
    gold->callback([&] { action = [&] { return cmd_finf_golden(cfg); }; });

    CLI::App* koszul = app.add_subcommand("koszul", "Koszul dual coalgebra of the face algebra");
    koszul->require_subcommand(1);
    CLI::App* kcheck = koszul->add_subcommand("check", "Intersection ranks, wedge basis, coalgebra and twisting cochain");
    common(kcheck);
    kcheck->callback([&] { action = [&] { return cmd_koszul_check(cfg); }; });

    CLI::App* ainf = app.add_subcommand("ainf", "A-infinity algebras");
    ainf->require_subcommand(1);
    CLI::App* validate = ainf->add_subcommand("validate", "Check the A-infinity relations and the faces of T(A)");
    common(validate);
    validate->add_option("file", file, "A-infinity algebra JSON")->required();
    validate->callback([&] { action = [&] { return cmd_ainf_validate(cfg, file); }; });

    CLI::App* bar = app.add_subcommand("bar", "Bar construction");
    bar->require_subcommand(1);
    CLI::App* build = bar->add_subcommand("build", "Bar differential and coproduct tables with their checks");
    common(build);
    build->add_option("file", file, "A-infinity algebra JSON")->required();
    build->callback([&] { action = [&] { return cmd_bar_build(cfg, file); }; });

    CLI::App* realize = app.add_subcommand("realize", "Chain realization of a face module or of T(A)");
    common(realize);
    realize->add_option("file", file, "Face module or A-infinity algebra JSON")->required();
    realize->add_flag("--oracle", oracle, "Compare the naive quotient with the total complex");
    realize->callback([&] { action = [&] { return cmd_realize(cfg, file, oracle); }; });

    CLI::App* transfer = app.add_subcommand("transfer", "Transfer faces along a strong deformation retract");
    common(transfer);
    transfer->add_option("file", file, "Transfer input JSON, or an A-infinity algebra with --cone")->required();
    transfer->add_flag("--cone", cone, "Build the acyclic cone retract over T(A) from an A-infinity algebra");
    transfer->callback([&] { action = [&] { return cmd_transfer(cfg, file, cone); }; });

    CLI::App* tensor = app.add_subcommand("tensor", "Tensor products of face modules");
    tensor->require_subcommand(1);
    CLI::App* tcheck = tensor->add_subcommand("check", "Faces of the tensor product of two face modules");
    common(tcheck);
    tcheck->add_option("x", file, "First face module JSON")->required();
    tcheck->add_option("y", file2, "Second face module JSON")->required();
    tcheck->callback([&] { action = [&] { return cmd_tensor_check(cfg, file, file2); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    try {
        if (cfg.word_cap < 0 || cfg.deg_cap < 0) throw InputError("caps must be nonnegative");
        return action();
    } catch (const SchemaError& e) {
        return input_error(e.pointer(), e.what());
    } catch (const InputError& e) {
        return input_error("", e.what());
    } catch (const UnsupportedCoefficients& e) {
        return input_error("", e.what());
    }
}
