#include <hochschild/io.hpp>
#include <hochschild/trees.hpp>

#include <CLI11.hpp>

#include <iomanip>
#include <iostream>

using namespace hoch;

namespace {

// exit codes
constexpr int kPass = 0, kFail = 1, kUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Common {
    int max_length = -1;
    std::string u_window;
    int arity_cap = 2;
    int ainf_arity = 4;
    int samples = -1;
    std::uint64_t seed = 2024;
    int jobs = 1;
    bool json = false;
    bool table = false;
};

void add_output_flags(CLI::App* sub, Common& c)
{
    auto* j = sub->add_flag("--json", c.json, "Emit a JSON report");
    auto* t = sub->add_flag("--table", c.table, "Emit a human-readable table");
    j->excludes(t);
}

std::pair<int, int> parse_window(const std::string& s)
{
    const auto colon = s.find(':');
    if (colon == std::string::npos)
        throw UsageError("--u-window expects LO:HI, got '" + s + "'");
    try {
        std::size_t a = 0, b = 0;
        const int lo = std::stoi(s.substr(0, colon), &a);
        const int hi = std::stoi(s.substr(colon + 1), &b);
        if (a != colon || b != s.size() - colon - 1)
            throw std::invalid_argument(s);
        if (lo > hi)
            throw UsageError("--u-window: LO must not exceed HI");
        return {lo, hi};
    } catch (const std::logic_error&) {
        throw UsageError("--u-window expects integers LO:HI, got '" + s + "'");
    }
}

std::map<std::string, GradedAlgebra> corpus_by_name()
{
    std::map<std::string, GradedAlgebra> m;
    auto put = [&](std::string key, GradedAlgebra A) { m.emplace(std::move(key), std::move(A)); };
    put("Q", corpus::rationals());
    put("Lambda", corpus::dual_numbers());
    put("Q[x]/x^3", corpus::truncated_poly(3));
    put("M2", corpus::matrices2());
    put("T2", corpus::upper_triangular2());
    put("Q[Z/2]", corpus::group_algebra_z2());
    put("ext1-odd", corpus::exterior1(1));
    put("ext1-even", corpus::exterior1(-1));
    put("ext2", corpus::exterior2(1));
    put("Q[z]/z^3", corpus::poly_even());
    put("deRham", corpus::de_rham_trunc3());
    return m;
}

std::string corpus_names()
{
    std::string s;
    for (const auto& [k, a] : corpus_by_name())
        s += (s.empty() ? "" : ", ") + k;
    return s + ", all";
}

std::vector<AlgebraDoc> load_algebras(const std::vector<std::string>& files, const std::vector<std::string>& names)
{
    std::vector<AlgebraDoc> out;
    for (const auto& f : files)
        out.push_back(load_algebra(f));
    const auto table = corpus_by_name();
    for (const auto& n : names) {
        if (n == "all") {
            for (auto& A : corpus::all())
                out.push_back({A, {}});
            continue;
        }
        auto it = table.find(n);
        if (it == table.end())
            throw UsageError("unknown corpus algebra '" + n + "' (known: " + corpus_names() + ")");
        AlgebraDoc d{it->second, {}};
        if (n == "Lambda") {
            d.cochains["phi"] = Cochain(Elem{{1}, 0});
            d.cochains["psi"] = Cochain(Elem{{1}, 1});
        }
        out.push_back(std::move(d));
    }
    if (out.empty())
        throw UsageError("give at least one --algebra PATH or --corpus NAME");
    return out;
}

RunConfig run_config(const Common& c)
{
    RunConfig cfg;
    cfg.max_length = c.max_length;
    cfg.arity_cap = c.arity_cap;
    cfg.ainf_arity = c.ainf_arity;
    cfg.samples = c.samples;
    cfg.seed = c.seed;
    cfg.jobs = c.jobs;
    if (!c.u_window.empty())
        std::tie(cfg.u_lo, cfg.u_hi) = parse_window(c.u_window);
    // caps that keep the enumerations finite at desk scale
    if (cfg.max_length > 6)
        throw UsageError("--max-length is capped at 6");
    if (cfg.max_length == 0)
        throw UsageError("--max-length must be at least 1");
    if (cfg.arity_cap < 1 || cfg.arity_cap > 4)
        throw UsageError("--arity-cap must lie in 1..4");
    if (cfg.ainf_arity < 1 || cfg.ainf_arity > 4)
        throw UsageError("--ainf-arity must lie in 1..4");
    if (cfg.u_lo > 0 || cfg.u_hi < 0 || cfg.u_hi - cfg.u_lo > 8)
        throw UsageError("--u-window must contain 0 and span at most 8");
    if (cfg.samples > 100000)
        throw UsageError("--samples is capped at 100000");
    if (cfg.jobs < 1)
        throw UsageError("--jobs must be positive");
    return cfg;
}

// ---- verify ------------------------------------------------------------------

int cmd_verify(const std::vector<AlgebraDoc>& docs, const RunConfig& cfg, const std::vector<std::string>& suites,
               bool json_out)
{
    for (const auto& s : suites)
        if (!known_selector(s))
            throw UsageError("unknown suite or identity '" + s + "'");
    const Selector sel{suites};
    json reports = json::array();
    bool ok = true;
    for (const auto& d : docs) {
        const SuiteReport rep = run_suites(d.algebra, cfg, sel);
        ok = ok && rep.ok();
        if (json_out) {
            reports.push_back(report_to_json(rep, cfg));
            continue;
        }
        std::cout << "algebra " << rep.algebra << "\n";
        for (const auto& r : rep.results) {
            std::cout << "  " << (r.pass() ? "PASS" : "FAIL") << "  " << std::left << std::setw(40)
                      << (r.suite + "/" + r.identity) << std::right << std::setw(9) << r.checked << "  "
                      << std::fixed << std::setprecision(2) << std::setw(7) << r.seconds << "s  " << r.anchor;
            if (!r.note.empty())
                std::cout << "  [" << r.note << "]";
            std::cout << "\n";
        }
        if (const auto* f = rep.first_failure()) {
            std::cout << "first failure: " << f->suite << "/" << f->identity << " (" << f->failures << " of "
                      << f->checked << ")\n";
            if (!f->witness.empty())
                std::cout << "witness: " << f->witness << "\n";
        }
    }
    if (json_out) {
        const auto& T = frozen_calibration();
        json out{{"status", ok ? "PASS" : "FAIL"}, {"calibration", calibration_to_json(T)}, {"reports", reports}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << (ok ? "PASS" : "FAIL") << "\n";
    }
    return ok ? kPass : kFail;
}

// ---- homology ----------------------------------------------------------------

int cmd_homology(const std::vector<AlgebraDoc>& docs, int nmax, std::size_t cap, bool json_out)
{
    if (nmax < 0 || nmax > 6)
        throw UsageError("--max-degree must lie in 0..6");
    bool ok = true;
    json out = json::array();
    for (const auto& d : docs) {
        const GradedAlgebra& A = d.algebra;
        if (auto v = validate(A); !v.ok) {
            std::cerr << "error: " << A.name << " is not a valid unital DG algebra: " << v.violations.front() << "\n";
            return kFail;
        }
        std::vector<int> norm, raw;
        std::string oracle_note;
        try {
            norm = hh_dims(A, nmax, true, cap);
        } catch (const std::runtime_error& e) {
            std::cerr << "error: " << A.name << ": " << e.what() << "\n";
            return kFail;
        } catch (const std::length_error& e) {
            throw UsageError(A.name + ": " + e.what() + "; lower --max-degree or raise --cap");
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        try {
            raw = hh_dims(A, nmax, false, cap);
        } catch (const std::length_error& e) {
            oracle_note = e.what();
        }
        const bool agree = raw.empty() || raw == norm;
        ok = ok && agree;
        if (json_out) {
            json j{{"algebra", A.name}, {"hh_dims", norm}, {"status", agree ? "PASS" : "FAIL"}};
            j["unnormalized_dims"] = raw.empty() ? json(nullptr) : json(raw);
            if (!oracle_note.empty())
                j["oracle_note"] = oracle_note;
            out.push_back(j);
            continue;
        }
        std::cout << "algebra " << A.name << "\n  n  HH_n  un-normalized\n";
        for (int n = 0; n <= nmax; ++n) {
            std::cout << "  " << n << std::setw(6) << norm[n] << std::setw(15);
            if (raw.empty())
                std::cout << "-";
            else
                std::cout << raw[n] << (raw[n] == norm[n] ? "" : "  MISMATCH");
            std::cout << "\n";
        }
        if (!oracle_note.empty())
            std::cout << "  oracle skipped: " << oracle_note << "\n";
    }
    if (json_out)
        std::cout << out.dump(2) << "\n";
    return ok ? kPass : kFail;
}

// ---- gm ----------------------------------------------------------------------

std::map<std::string, AlgebraFamily> builtin_families()
{
    return {{"xx_minus_t", families::xx_minus_t()},
            {"cubic_tx", families::cubic_tx()},
            {"cubic_st", families::cubic_st()},
            {"z2_deformation", families::group_z2_deformation()},
            {"constant_dual", families::constant_dual()}};
}

Point parse_point(const AlgebraFamily& F, const std::string& s)
{
    Point p{0, 0};
    std::vector<std::string> parts;
    std::size_t st = 0;
    for (;;) {
        const auto c = s.find(',', st);
        parts.push_back(s.substr(st, c == std::string::npos ? std::string::npos : c - st));
        if (c == std::string::npos)
            break;
        st = c + 1;
    }
    if (static_cast<int>(parts.size()) != F.nparams())
        throw UsageError("--point '" + s + "' needs " + std::to_string(F.nparams()) + " coordinate(s)");
    for (std::size_t i = 0; i < parts.size(); ++i) {
        try {
            p[i] = parse_scalar(parts[i]);
        } catch (const std::invalid_argument& e) {
            throw UsageError("--point: " + std::string(e.what()));
        }
    }
    return p;
}

struct GmOptions {
    std::string mode = "chain-map";
    std::vector<std::string> points;
    int max_length = -1;
    std::string u_window = "-1:2";
    int cycle_length = 1;
    int cycle_u = 1;
};

int cmd_gm(const AlgebraFamily& F, const GmOptions& o, bool table_out)
{
    if (auto v = validate_family(F); !v.ok())
        throw UsageError("family '" + F.name + "' is invalid: " + v.problems.front());
    const int sigma = frozen_calibration().gm_sigma;
    std::vector<Point> pts;
    for (const auto& s : o.points)
        pts.push_back(parse_point(F, s));

    if (o.mode == "chain-map") {
        const auto [lo, hi] = parse_window(o.u_window);
        const int len = o.max_length < 0 ? 3 : o.max_length;
        if (len < 1 || len > 5)
            throw UsageError("--max-length must lie in 1..5 for chain-map mode");
        if (pts.empty())
            pts = F.nparams() == 1 ? std::vector<Point>{{0, 0}, {1, 0}} : std::vector<Point>{{0, 0}, {1, 2}};
        json certs = json::array();
        bool ok = true;
        for (const auto& p : pts)
            for (int var = 0; var < F.nparams(); ++var) {
                auto r = check_gm_chain_map(F, var, p, len, lo, hi, sigma);
                ok = ok && r.ok();
                json j = gm_chain_map_to_json(r, lo, hi, len);
                if (r.witness)
                    j["witness"] = chain_str(F.at(p), *r.witness);
                certs.push_back(j);
                if (table_out)
                    std::cout << (r.ok() ? "PASS" : "FAIL") << "  [b+uB, nabla_" << r.direction << "] = 0 at "
                              << r.point << "  sigma=" << r.sigma << "  sections=" << r.checked
                              << (r.velocity_closed ? "" : "  velocity not a cocycle")
                              << (r.witness ? "  witness " + chain_str(F.at(p), *r.witness) : "") << "\n";
            }
        if (!table_out)
            std::cout << json{{"mode", "chain-map"}, {"family", F.name}, {"sigma", sigma},
                              {"status", ok ? "PASS" : "FAIL"}, {"checks", certs}}
                             .dump(2)
                      << "\n";
        return ok ? kPass : kFail;
    }

    if (o.mode != "curvature")
        throw UsageError("--mode must be chain-map or curvature");
    const int len = o.max_length < 0 ? 6 : o.max_length;
    if (len < 1 || len > 8)
        throw UsageError("--max-length must lie in 1..8 for curvature mode");
    if (o.cycle_length < 0 || o.cycle_u < 0)
        throw UsageError("--cycle-length and --cycle-u must be non-negative");
    if (pts.empty())
        pts = {{0, 0}, {1, 2}, {Scalar(-1, 2), 3}};
    if (F.nparams() != 2) {
        // one direction: nothing can fail to commute
        std::cout << (table_out ? "PASS  one-parameter family, curvature is zero\n"
                                : json{{"mode", "curvature"}, {"family", F.name}, {"status", "PASS"},
                                       {"certificates", json::array()}}
                                          .dump(2) +
                                      "\n");
        return kPass;
    }
    auto rep = curvature_on_homology(F, pts, o.cycle_length, o.cycle_u, len, sigma);
    json j = curvature_to_json(F, rep);
    // where a primitive is missing, find the length it would take
    json exhausted = json::array();
    for (const auto& c : rep.certificates) {
        if (c.verified)
            continue;
        const GradedAlgebra A = F.at(c.point);
        json e{{"point", F.point_str(c.point)}, {"searched_max_length", len}};
        for (int L = len + 1; L <= len + 3; ++L)
            if (cyclic_primitive(A, c.curvature, o.cycle_length + 1, -2, o.cycle_u + 1, L)) {
                e["required_max_length"] = L;
                break;
            }
        exhausted.push_back(e);
    }
    if (!exhausted.empty())
        j["window_exhausted"] = exhausted;
    if (table_out) {
        for (const auto& c : rep.certificates)
            std::cout << (c.verified ? "PASS" : "FAIL") << "  point " << F.point_str(c.point) << "  curvature "
                      << (c.curvature.empty() ? "zero"
                          : c.primitive ? "boundary of " + cyclic_str(F.at(c.point), *c.primitive)
                                        : "nonzero, no primitive in the window")
                      << "\n";
        for (const auto& e : exhausted)
            std::cout << "window exhausted at " << e["point"].get<std::string>() << ": no primitive of length <= "
                      << len
                      << (e.contains("required_max_length")
                              ? "; rerun with --max-length " + std::to_string(e["required_max_length"].get<int>())
                              : std::string("; none found up to length ") + std::to_string(len + 3))
                      << "\n";
        std::cout << rep.certificates.size() << " certificates, " << rep.nonzero() << " nonzero curvatures\n";
    } else {
        std::cout << j.dump(2) << "\n";
    }
    return rep.failures() == 0 ? kPass : kFail;
}

// ---- tree --------------------------------------------------------------------

void print_cochain_table(const GradedAlgebra& A, const Cochain& D)
{
    if (D.empty()) {
        std::cout << "  0\n";
        return;
    }
    std::map<std::vector<int>, Vec> rows;
    for (const auto& [e, c] : D)
        rows[e.in].add(e.out, c);
    for (const auto& [in, v] : rows) {
        std::string args = "(";
        for (std::size_t i = 0; i < in.size(); ++i)
            args += (i ? ", " : "") + A.basis_name(in[i]);
        args += ")";
        std::cout << "  " << std::left << std::setw(16) << args << std::right << " -> "
                  << lin_str(v, [&](int k) { return A.basis_name(k); }) << "\n";
    }
}

int cmd_tree(const AlgebraDoc& doc, const std::string& expr, bool json_out)
{
    std::vector<std::string> names;
    MarkedTree T;
    try {
        T = parse_tree(expr, names);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    const GradedAlgebra& A = doc.algebra;
    std::vector<Cochain> labels;
    std::vector<int> par;
    for (const auto& n : names) {
        auto it = doc.cochains.find(n);
        if (it == doc.cochains.end()) {
            std::string known;
            for (const auto& [k, c] : doc.cochains)
                known += (known.empty() ? "" : ", ") + k;
            throw UsageError("unknown cochain '" + n + "' (algebra '" + A.name + "' defines: " +
                             (known.empty() ? "none" : known) + ")");
        }
        labels.push_back(it->second);
        par.push_back(hdeg_or(A, it->second) & 1);
    }
    const Cochain value = tree_op(A, T, labels);
    const auto terms = tree_boundary(T, par);
    const bool holds = tree_boundary_defect(A, T, labels).empty();
    if (json_out) {
        json bs = json::array();
        for (const auto& t : terms)
            bs.push_back(json{{"sign", t.parity ? -1 : 1}, {"tree", tree_to_string(t.tree, names)}});
        std::cout << json{{"expression", tree_to_string(T, names)},
                          {"algebra", A.name},
                          {"value", cochain_to_json(A, value)},
                          {"boundary", bs},
                          {"boundary_formula", holds ? "PASS" : "FAIL"}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << tree_to_string(T, names) << " over " << A.name << "\n";
        print_cochain_table(A, value);
        std::cout << "boundary terms (" << terms.size() << "):\n";
        for (const auto& t : terms)
            std::cout << "  " << (t.parity ? "- " : "+ ") << tree_to_string(t.tree, names) << "\n";
        std::cout << "boundary formula: " << (holds ? "PASS" : "FAIL") << "\n";
    }
    return holds ? kPass : kFail;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact verifier for Hochschild and cyclic chain-level calculus"};
    app.require_subcommand(1);

    Common c;
    std::vector<std::string> algebra_files, corpus_sel, suites;

    auto* verify = app.add_subcommand("verify", "Run identity suites on algebras");
    verify->add_option("--algebra", algebra_files, "Algebra JSON file (repeatable)")->check(CLI::ExistingFile);
    verify->add_option("--corpus", corpus_sel, "Built-in algebra (" + corpus_names() + ")");
    verify->add_option("--suite", suites, "Suite or identity name (repeatable)");
    verify->add_option("--max-length", c.max_length, "Max chain length (default per suite)");
    verify->add_option("--u-window", c.u_window, "u-exponent window LO:HI (default 0:2)");
    verify->add_option("--arity-cap", c.arity_cap, "Arity of sampled cochains")->capture_default_str();
    verify->add_option("--ainf-arity", c.ainf_arity, "Highest n for A-infinity relations")->capture_default_str();
    verify->add_option("--samples", c.samples, "Random samples per identity (default per suite)");
    verify->add_option("--seed", c.seed, "Sampler seed")->capture_default_str();
    verify->add_option("--jobs", c.jobs, "Run suites concurrently")->capture_default_str();
    add_output_flags(verify, c);

    int max_degree = 3;
    std::size_t cap = 20000;
    auto* homology = app.add_subcommand("homology", "Hochschild homology dimensions with the un-normalized oracle");
    homology->add_option("--algebra", algebra_files, "Algebra JSON file (repeatable)")->check(CLI::ExistingFile);
    homology->add_option("--corpus", corpus_sel, "Built-in algebra (" + corpus_names() + ")");
    homology->add_option("--max-degree,--max-length", max_degree, "Highest n")->capture_default_str();
    homology->add_option("--cap", cap, "Max number of matrix entries")->capture_default_str();
    add_output_flags(homology, c);

    GmOptions g;
    std::string family_file, family_builtin;
    auto* gm = app.add_subcommand("gm", "Gauss-Manin chain-map and curvature certificates");
    auto* ff = gm->add_option("--family", family_file, "Family JSON file")->check(CLI::ExistingFile);
    auto* fb = gm->add_option("--builtin", family_builtin,
                              "Built-in family (xx_minus_t, cubic_tx, cubic_st, z2_deformation, constant_dual)");
    ff->excludes(fb);
    gm->add_option("--mode", g.mode, "chain-map or curvature")
        ->check(CLI::IsMember({"chain-map", "curvature"}))
        ->capture_default_str();
    gm->add_option("--point", g.points, "Base point s,t (repeatable)");
    gm->add_option("--max-length", g.max_length, "Chain length bound (default 3 chain-map, 6 curvature)");
    gm->add_option("--u-window", g.u_window, "u-exponent window for chain-map")->capture_default_str();
    gm->add_option("--cycle-length", g.cycle_length, "Length N of curvature test cycles")->capture_default_str();
    gm->add_option("--cycle-u", g.cycle_u, "u-depth K of curvature test cycles")->capture_default_str();
    add_output_flags(gm, c);

    std::string expr;
    auto* tree = app.add_subcommand("tree", "Evaluate a marked tree operation and its boundary");
    tree->add_option("expression", expr, "Tree such as \"m(D, E(F))\"")->required();
    tree->add_option("--algebra", algebra_files, "Algebra JSON file with named cochains")->check(CLI::ExistingFile);
    tree->add_option("--corpus", corpus_sel, "Built-in algebra (Lambda defines phi, psi)");
    add_output_flags(tree, c);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kPass : kUsage;
    }

    try {
        if (*verify)
            return cmd_verify(load_algebras(algebra_files, corpus_sel), run_config(c), suites, c.json);
        if (*homology)
            return cmd_homology(load_algebras(algebra_files, corpus_sel), max_degree, cap, c.json);
        if (*gm) {
            AlgebraFamily F;
            if (!family_file.empty()) {
                F = load_family(family_file);
            } else {
                auto fams = builtin_families();
                auto it = fams.find(family_builtin);
                if (it == fams.end())
                    throw UsageError("give --family PATH or --builtin NAME");
                F = it->second;
            }
            return cmd_gm(F, g, c.table);
        }
        if (*tree) {
            if (algebra_files.empty() && corpus_sel.empty())
                corpus_sel.push_back("Lambda");
            auto docs = load_algebras(algebra_files, corpus_sel);
            if (docs.size() != 1)
                throw UsageError("tree takes exactly one algebra");
            return cmd_tree(docs.front(), expr, c.json);
        }
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFail;
    }
    return kUsage;
}
