#pragma once

#include "suites.hpp"

#include <json.hpp>

#include <fstream>
#include <map>
#include <set>

namespace hoch {

using json = nlohmann::json;

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An algebra file with its named cochain literals.
struct AlgebraDoc {
    GradedAlgebra algebra;
    std::map<std::string, Cochain> cochains;
};

namespace io {

[[noreturn]] inline void fail(const std::string& where, const std::string& what)
{
    throw ParseError(where + ": " + what);
}

inline Scalar scalar(const json& j, const std::string& where)
{
    if (j.is_string()) {
        try {
            return parse_scalar(j.get<std::string>());
        } catch (const std::invalid_argument& e) {
            fail(where, e.what());
        }
    }
    if (j.is_number_integer())
        return Scalar(j.get<long>());
    fail(where, "expected an exact rational (\"p/q\" string or integer), got " + j.dump());
}

inline int integer(const json& j, const std::string& where)
{
    if (!j.is_number_integer())
        fail(where, "expected an integer, got " + j.dump());
    return j.get<int>();
}

// Polynomial coefficient: a scalar, a list of scalars c_0, c_1, … in the
// first parameter, or a list of terms [e_1, (e_2,) c].
inline Poly poly(const json& j, int nparams, const std::string& where)
{
    if (!j.is_array())
        return Poly(scalar(j, where));
    Poly p;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const json& t = j[i];
        const std::string w = where + "[" + std::to_string(i) + "]";
        if (t.is_array()) {
            if (static_cast<int>(t.size()) != nparams + 1)
                fail(w, "polynomial term needs " + std::to_string(nparams) + " exponent(s) and a coefficient");
            Mono m{0, 0};
            for (int v = 0; v < nparams; ++v) {
                m[v] = integer(t[v], w);
                if (m[v] < 0)
                    fail(w, "negative exponent");
            }
            p.add(m, scalar(t[nparams], w));
        } else {
            p.add(Mono{static_cast<int>(i), 0}, scalar(t, w));
        }
    }
    return p;
}

struct Header {
    std::string name;
    std::vector<std::string> names;
    std::vector<int> deg;
    std::vector<int> perm; // file index -> internal index (unit moved to 0)
};

inline Header header(const json& j, const std::string& src)
{
    Header h;
    if (!j.is_object())
        fail(src, "top level must be an object");
    if (!j.contains("basis") || !j["basis"].is_array() || j["basis"].empty())
        fail(src, "missing or empty \"basis\"");
    if (!j.contains("degrees") || !j["degrees"].is_array())
        fail(src, "missing \"degrees\"");
    const int n = static_cast<int>(j["basis"].size());
    if (static_cast<int>(j["degrees"].size()) != n)
        fail(src, "\"basis\" and \"degrees\" differ in length");
    const int unit = j.contains("unit_index") ? integer(j["unit_index"], src + ".unit_index") : 0;
    if (unit < 0 || unit >= n)
        fail(src, "unit_index out of range");
    h.perm.resize(n);
    for (int i = 0; i < n; ++i)
        h.perm[i] = i == unit ? 0 : (i == 0 ? unit : i);
    h.names.resize(n);
    h.deg.resize(n);
    for (int i = 0; i < n; ++i) {
        if (!j["basis"][i].is_string())
            fail(src + ".basis[" + std::to_string(i) + "]", "basis names must be strings");
        h.names[h.perm[i]] = j["basis"][i].get<std::string>();
        h.deg[h.perm[i]] = integer(j["degrees"][i], src + ".degrees[" + std::to_string(i) + "]");
    }
    h.name = j.value("name", src);
    return h;
}

inline int index(const Header& h, const json& j, const std::string& where)
{
    const int i = integer(j, where);
    if (i < 0 || i >= static_cast<int>(h.perm.size()))
        fail(where, "basis index " + std::to_string(i) + " out of range");
    return h.perm[i];
}

inline Cochain cochain(const GradedAlgebra& A, const Header& h, const json& j, const std::string& where)
{
    if (!j.is_object() || !j.contains("arity") || !j.contains("values"))
        fail(where, "cochain needs \"arity\" and \"values\"");
    const int arity = integer(j["arity"], where + ".arity");
    std::optional<int> mdeg;
    if (j.contains("map_degree"))
        mdeg = integer(j["map_degree"], where + ".map_degree");
    Cochain D;
    const json& vals = j["values"];
    if (!vals.is_array())
        fail(where + ".values", "expected a list");
    for (std::size_t r = 0; r < vals.size(); ++r) {
        const std::string w = where + ".values[" + std::to_string(r) + "]";
        const json& row = vals[r];
        if (!row.is_array() || row.size() != 2 || !row[0].is_array() || !row[1].is_array())
            fail(w, "expected [[indices], [coefficients]]");
        if (static_cast<int>(row[0].size()) != arity)
            fail(w, "argument tuple does not have the declared arity");
        if (static_cast<int>(row[1].size()) != A.dim())
            fail(w, "coefficient vector must have one entry per basis element");
        std::vector<int> in;
        int indeg = 0;
        for (const auto& x : row[0]) {
            const int i = index(h, x, w);
            if (i == 0)
                fail(w, "normalized cochains take no unit arguments");
            in.push_back(i);
            indeg += A.deg[i];
        }
        for (int f = 0; f < A.dim(); ++f) {
            const Scalar c = scalar(row[1][f], w);
            if (c == 0)
                continue;
            const int out = h.perm[f];
            if (mdeg && A.deg[out] - indeg != *mdeg)
                fail(w, "value on " + A.basis_name(out) + " does not have map degree " + std::to_string(*mdeg));
            D.add(Elem{in, out}, c);
        }
    }
    try {
        hdeg(A, D);
    } catch (const std::invalid_argument& e) {
        fail(where, e.what());
    }
    return D;
}

} // namespace io

inline json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError(path + ": cannot open file");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
}

// Products involving the unit default to the unit law; listing one
// overrides that row so a broken unit is reported by validation.
inline AlgebraDoc algebra_from_json(const json& j, const std::string& src = "algebra")
{
    io::Header h = io::header(j, src);
    if (j.contains("parameters"))
        io::fail(src, "this is a family file (has \"parameters\"); use --family");
    AlgebraDoc doc;
    GradedAlgebra& A = doc.algebra;
    A = GradedAlgebra(h.name, h.names, h.deg);
    A.set_unit_rows();
    std::set<std::pair<int, int>> cleared;
    if (j.contains("products")) {
        const json& ps = j["products"];
        if (!ps.is_array())
            io::fail(src + ".products", "expected a list");
        for (std::size_t r = 0; r < ps.size(); ++r) {
            const std::string w = src + ".products[" + std::to_string(r) + "]";
            if (!ps[r].is_array() || ps[r].size() != 4)
                io::fail(w, "expected [i, j, k, coefficient]");
            const int a = io::index(h, ps[r][0], w), b = io::index(h, ps[r][1], w), k = io::index(h, ps[r][2], w);
            if ((a == 0 || b == 0) && cleared.insert({a, b}).second)
                A.clear_product(a, b);
            A.add_product(a, b, k, io::scalar(ps[r][3], w));
        }
    }
    if (j.contains("differential")) {
        const json& ds = j["differential"];
        if (!ds.is_array())
            io::fail(src + ".differential", "expected a list");
        for (std::size_t r = 0; r < ds.size(); ++r) {
            const std::string w = src + ".differential[" + std::to_string(r) + "]";
            if (!ds[r].is_array() || ds[r].size() != 3)
                io::fail(w, "expected [i, k, coefficient]");
            A.add_diff(io::index(h, ds[r][0], w), io::index(h, ds[r][1], w), io::scalar(ds[r][2], w));
        }
    }
    if (j.contains("cochains")) {
        if (!j["cochains"].is_object())
            io::fail(src + ".cochains", "expected an object of named cochains");
        for (const auto& [name, c] : j["cochains"].items())
            doc.cochains[name] = io::cochain(A, h, c, src + ".cochains." + name);
    }
    return doc;
}

inline AlgebraFamily family_from_json(const json& j, const std::string& src = "family")
{
    io::Header h = io::header(j, src);
    if (!j.contains("parameters") || !j["parameters"].is_array())
        io::fail(src, "missing \"parameters\"");
    AlgebraFamily F{h.name, h.names, h.deg, {}, {}};
    for (const auto& p : j["parameters"]) {
        if (!p.is_string())
            io::fail(src + ".parameters", "parameter names must be strings");
        F.params.push_back(p.get<std::string>());
    }
    if (F.nparams() < 1 || F.nparams() > 2)
        io::fail(src + ".parameters", "families have one or two parameters");
    if (j.contains("products")) {
        const json& ps = j["products"];
        if (!ps.is_array())
            io::fail(src + ".products", "expected a list");
        for (std::size_t r = 0; r < ps.size(); ++r) {
            const std::string w = src + ".products[" + std::to_string(r) + "]";
            if (!ps[r].is_array() || ps[r].size() != 4)
                io::fail(w, "expected [i, j, k, coefficient]");
            const int a = io::index(h, ps[r][0], w), b = io::index(h, ps[r][1], w), k = io::index(h, ps[r][2], w);
            if (a == 0 || b == 0)
                io::fail(w, "products with the unit are fixed in a family");
            F.products[{a, b, k}] += io::poly(ps[r][3], F.nparams(), w);
        }
    }
    return F;
}

inline AlgebraDoc load_algebra(const std::string& path) { return algebra_from_json(read_json_file(path), path); }
inline AlgebraFamily load_family(const std::string& path) { return family_from_json(read_json_file(path), path); }

// ---- writers -------------------------------------------------------------------

inline json to_json(const Scalar& c) { return to_string(c); }

inline json cochain_to_json(const GradedAlgebra& A, const Cochain& D)
{
    std::map<std::vector<int>, std::vector<Scalar>> rows;
    for (const auto& [e, c] : D) {
        auto& v = rows[e.in];
        v.resize(A.dim());
        v[e.out] += c;
    }
    json vals = json::array();
    for (const auto& [in, v] : rows) {
        json cs = json::array();
        for (const auto& c : v)
            cs.push_back(to_json(c));
        vals.push_back(json::array({in, cs}));
    }
    // indices refer to this basis, unit first
    json j{{"basis", A.names}, {"values", vals}};
    if (!D.empty()) {
        j["arity"] = D.begin()->first.in.size();
        j["map_degree"] = A.deg[D.begin()->first.out] - [&] {
            int s = 0;
            for (int i : D.begin()->first.in)
                s += A.deg[i];
            return s;
        }();
    }
    return j;
}

inline json chain_to_json(const ChainVec& v)
{
    json out = json::array();
    for (const auto& [c, x] : v)
        out.push_back(json::array({to_json(x), c}));
    return out;
}

inline json series_to_json(const CyclicChain& s, std::optional<std::pair<int, int>> window = std::nullopt)
{
    json terms = json::object();
    for (const auto& [u, v] : s.at)
        if (!v.empty())
            terms[std::to_string(u)] = chain_to_json(v);
    json j{{"u_exponent", terms}};
    if (window)
        j["window"] = json::array({window->first, window->second});
    return j;
}

inline json calibration_to_json(const CalibrationTable& T)
{
    return json{{"L_first_index", T.L_first_index},     {"b_L_kappa", T.b_L_kappa},
                {"cartan_sign", T.cartan_sign},         {"cartan_u_power", T.cartan_u_power},
                {"gdt_sign", T.gdt_sign},               {"gdt_u_shift", T.gdt_u_shift},
                {"symmetrization_norm", T.symmetrization_norm},
                {"u_commutator_sign", T.u_commutator_sign},
                {"gm_sigma", T.gm_sigma},               {"bar_quadratic", T.bar_quadratic},
                {"bar_tw_inverse_factorial", T.bar_tw_inverse_factorial}};
}

inline json config_to_json(const RunConfig& c)
{
    return json{{"max_length", c.max_length}, {"arity_cap", c.arity_cap},
                {"u_window", json::array({c.u_lo, c.u_hi})}, {"ainf_arity", c.ainf_arity},
                {"samples", c.samples},       {"seed", c.seed}};
}

inline json result_to_json(const IdentityResult& r)
{
    json j{{"suite", r.suite},       {"identity", r.identity}, {"anchor", r.anchor},
           {"status", r.pass() ? "PASS" : "FAIL"},
           {"checked", r.checked},   {"failures", r.failures}, {"seconds", r.seconds}};
    if (!r.witness.empty())
        j["witness"] = r.witness;
    if (!r.note.empty())
        j["note"] = r.note;
    return j;
}

inline json report_to_json(const SuiteReport& rep, const RunConfig& cfg)
{
    json rs = json::array();
    for (const auto& r : rep.results)
        rs.push_back(result_to_json(r));
    json j{{"algebra", rep.algebra},
           {"status", rep.ok() ? "PASS" : "FAIL"},
           {"config", config_to_json(cfg)},
           {"calibration", calibration_to_json(frozen_calibration())},
           {"results", rs}};
    if (const auto* f = rep.first_failure())
        j["first_failure"] = result_to_json(*f);
    return j;
}

inline json gm_chain_map_to_json(const GmChainMapReport& r, int lo, int hi, int max_len)
{
    json j{{"family", r.family},       {"direction", r.direction}, {"point", r.point},
           {"sigma", r.sigma},         {"checked", r.checked},     {"failures", r.failures},
           {"velocity_closed", r.velocity_closed},
           {"window", json::array({lo, hi})}, {"max_length", max_len},
           {"status", r.ok() ? "PASS" : "FAIL"}};
    if (r.witness)
        j["witness"] = *r.witness;
    return j;
}

inline json curvature_to_json(const AlgebraFamily& F, const CurvatureReport& r)
{
    json certs = json::array();
    for (const auto& c : r.certificates) {
        json j{{"point", F.point_str(c.point)},
               {"cycle", series_to_json(c.cycle)},
               {"curvature", series_to_json(c.curvature)},
               {"verified", c.verified}};
        if (c.primitive)
            j["primitive"] = series_to_json(*c.primitive);
        else
            j["primitive"] = nullptr;
        certs.push_back(j);
    }
    return json{{"family", r.family},
                {"sigma", r.sigma},
                {"certificates", certs},
                {"nonzero_curvatures", r.nonzero()},
                {"failures", r.failures()},
                {"status", r.failures() == 0 ? "PASS" : "FAIL"}};
}

} // namespace hoch
