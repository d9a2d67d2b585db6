// Acceptance run: one PASS/FAIL line per criterion, exact equality over Q.
#include <hochschild/suites.hpp>

#include <cstdio>
#include <set>
#include <iostream>

using namespace hoch;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
    std::vector<std::string> problems;
};

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

// Runs suites over algebras; every selected identity must run at least once
// per algebra and pass.
Outcome suites_over(const std::vector<GradedAlgebra>& algebras, const RunConfig& cfg, const std::string& suite,
                    const std::vector<std::string>& required = {})
{
    Outcome o;
    long checks = 0;
    for (const auto& A : algebras) {
        const auto rep = run_suites(A, cfg, Selector{{suite}});
        std::set<std::string> seen;
        for (const auto& r : rep.results) {
            if (r.suite != suite && r.suite != "validate")
                continue;
            checks += r.checked;
            if (r.checked > 0)
                seen.insert(r.identity);
            if (!r.pass()) {
                o.ok = false;
                o.problems.push_back(A.name + ": " + r.identity + " failed (" + std::to_string(r.failures) + "/" +
                                     std::to_string(r.checked) + ") " + r.witness);
            }
        }
        for (const auto& id : required)
            if (!seen.count(id)) {
                o.ok = false;
                o.problems.push_back(A.name + ": " + id + " was not exercised");
            }
    }
    o.detail = std::to_string(checks) + " checks on " + std::to_string(algebras.size()) + " algebras";
    return o;
}

void time_limit(Outcome& o, double secs, double limit)
{
    if (secs >= limit) {
        o.ok = false;
        o.problems.push_back("runtime " + std::to_string(secs) + " s exceeds " + std::to_string(limit) + " s");
    }
}

Outcome criterion1()
{
    RunConfig cfg;
    cfg.max_length = 4;
    const auto t = Clock::now();
    auto o = suites_over(corpus::ungraded(), cfg, "structural",
                         {"delta-squared", "b-squared", "B-squared", "bB+Bb", "cyclic-d-squared"});
    time_limit(o, since(t), 30);
    return o;
}

Outcome criterion2()
{
    RunConfig cfg;
    cfg.samples = 100;
    return suites_over(corpus::ungraded(), cfg, "gerstenhaber",
                       {"cup-leibniz", "bracket-leibniz", "jacobi", "brace-composition", "lift-dga-morphism"});
}

Outcome criterion3()
{
    RunConfig cfg;
    cfg.max_length = 3;
    return suites_over(corpus::ungraded(), cfg, "pairing",
                       {"i-chain-map", "i-product", "L-bracket", "L-b", "L-B", "b-L-anchor", "cartan", "gdt"});
}

Outcome criterion4()
{
    RunConfig cfg;
    cfg.max_length = 2;
    cfg.u_lo = 0;
    cfg.u_hi = 2;
    cfg.ainf_arity = 4;
    const auto t = Clock::now();
    auto o = suites_over({corpus::dual_numbers()}, cfg, "ainfinity",
                         {"ainf-relations", "module-relations", "m1", "m2-shuffle", "m2-cup", "m2-bracket",
                          "m2-mixed", "mu1", "mu2-iota", "mu2-lie", "mu2-shuffle", "unit-vanishing",
                          "bullet-product"});
    auto m = suites_over({corpus::matrices2()}, cfg, "ainfinity",
                         {"ainf-relations", "module-relations", "m1", "m2-cup", "m2-bracket", "m2-mixed", "mu1",
                          "mu2-iota", "mu2-lie", "unit-vanishing", "bullet-product"});
    o.ok = o.ok && m.ok;
    o.problems.insert(o.problems.end(), m.problems.begin(), m.problems.end());
    o.detail += "; " + m.detail;
    time_limit(o, since(t), 300);
    return o;
}

Outcome criterion5()
{
    RunConfig cfg;
    cfg.max_length = 3;
    return suites_over({corpus::dual_numbers()}, cfg, "bar",
                       {"bar-d-squared", "bar-tw-d-squared", "module-identity", "rho-closed-form", "symmetrization",
                        "ybar-ad", "ybar-delta"});
}

Outcome criterion6()
{
    Outcome o;
    const auto t = Clock::now();
    const int sigma = frozen_calibration().gm_sigma;
    int sections = 0;
    for (const auto& F : {families::xx_minus_t(), families::cubic_tx()})
        for (const Point& p : {Point{0, 0}, Point{1, 0}, Point{Scalar(-2, 3), 0}}) {
            auto r = check_gm_chain_map(F, 0, p, 3, -1, 2, sigma);
            sections += r.checked;
            if (!r.ok() || r.checked == 0) {
                o.ok = false;
                o.problems.push_back(F.name + " at " + r.point + ": chain-map check failed");
            }
        }
    const std::vector<Point> pts{{0, 0}, {1, 2}, {Scalar(-1, 2), 3}};
    auto rep = curvature_on_homology(families::cubic_st(), pts, 1, 1, 6, sigma);
    // points where some curvature is nonzero and shown exact by a primitive
    std::set<std::string> certified;
    for (const auto& c : rep.certificates)
        if (c.verified && c.primitive && !c.curvature.empty())
            certified.insert(to_string(c.point[0]) + "," + to_string(c.point[1]));
    if (rep.failures() > 0 || certified.size() < 3) {
        o.ok = false;
        o.problems.push_back("curvature: " + std::to_string(rep.failures()) + " uncertified classes, " +
                             std::to_string(certified.size()) + " certified points");
    }
    o.detail = std::to_string(sections) + " chain-map sections; " + std::to_string(rep.certificates.size()) +
               " curvature certificates (" + std::to_string(rep.nonzero()) + " nonzero) at " +
               std::to_string(certified.size()) + " points";
    time_limit(o, since(t), 120);
    return o;
}

Outcome criterion7()
{
    Outcome o;
    struct Case {
        GradedAlgebra A;
        std::vector<int> expect;
    };
    const std::vector<Case> cases{{corpus::dual_numbers(), {2, 1, 1, 1}},
                                  {corpus::matrices2(), {1, 0, 0}},
                                  {corpus::rationals(), {1, 0, 0}}};
    for (const auto& [A, expect] : cases) {
        const int n = static_cast<int>(expect.size()) - 1;
        const auto norm = hh_dims(A, n, true);
        const auto raw = hh_dims(A, n, false, 200000);
        auto str = [](const std::vector<int>& v) {
            std::string s;
            for (int x : v)
                s += (s.empty() ? "" : ",") + std::to_string(x);
            return "(" + s + ")";
        };
        o.detail += (o.detail.empty() ? "" : "; ") + A.name + " " + str(norm);
        if (norm != expect || raw != expect) {
            o.ok = false;
            o.problems.push_back(A.name + ": normalized " + str(norm) + ", un-normalized " + str(raw) +
                                 ", expected " + str(expect));
        }
    }
    return o;
}

Outcome criterion8()
{
    Outcome o;
    const auto rep = calibration_stability(corpus::dual_numbers(), corpus::all());
    for (const auto& c : rep.pins)
        if (!c.pinned()) {
            o.ok = false;
            o.problems.push_back("not pinned on " + c.algebra + ": " + c.constant + " frozen " + c.frozen);
        }
    for (const auto& c : rep.verifications)
        if (!c.holds()) {
            o.ok = false;
            o.problems.push_back("drift on " + c.algebra + ": " + c.constant + " frozen " + c.frozen);
        }
    if (rep.pins.size() < 5) {
        o.ok = false;
        o.problems.push_back("expected five pinned constants");
    }
    o.detail = std::to_string(rep.pins.size()) + " constants pinned on Lambda, " +
               std::to_string(rep.verifications.size()) + " re-verified elsewhere";
    return o;
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, Outcome (*)()>> criteria{
        {"structural differentials (delta^2, b^2, B^2, bB+Bb, (b+uB)^2)", criterion1},
        {"Gerstenhaber layer (Leibniz, Jacobi, brace composition, lift)", criterion2},
        {"pairing layer (i, L, Cartan, GDT)", criterion3},
        {"A-infinity layer (relations n<=4, module relations, bullets)", criterion4},
        {"bar layer (d^2, module identity, symmetrization, ybar)", criterion5},
        {"Gauss-Manin (chain map, curvature on homology)", criterion6},
        {"homology ground truth with un-normalized oracle", criterion7},
        {"calibration stability", criterion8}};
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto t = Clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.ok = false;
            o.problems.push_back(std::string("exception: ") + e.what());
        }
        std::printf("%s  %zu. %s: %s [%.1f s]\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                    o.detail.c_str(), since(t));
        for (const auto& p : o.problems)
            std::printf("      %s\n", p.c_str());
        std::fflush(stdout);
        failed += o.ok ? 0 : 1;
    }
    std::printf("%s  %d of %zu criteria\n", failed ? "FAIL" : "PASS", static_cast<int>(criteria.size()) - failed,
                criteria.size());
    return failed ? 1 : 0;
}
