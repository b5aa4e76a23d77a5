// Acceptance gate: ten criteria, exact arithmetic, one PASS/FAIL line each.
// Exit status is nonzero if any criterion fails or overruns its time budget.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "hcpair/verify.hpp"

using namespace hcpair;

namespace {

struct Outcome {
    std::size_t cases = 0;
    std::size_t failed = 0;
    std::vector<std::string> problems;

    void absorb(const VerificationReport& r, const std::string& where) {
        if (r.skipped()) {
            problems.push_back(where + " " + r.suite() + ": " + r.status());
            ++failed;
            return;
        }
        if (r.total() == 0) problems.push_back(where + " " + r.suite() + ": no cases");
        cases += r.total();
        failed += r.failed();
        for (const auto& c : r.cases()) {
            if (!c.pass && problems.size() < 5) {
                problems.push_back(where + " " + c.name + ": expected " + c.expected + ", got " + c.actual);
            }
        }
    }
    void check(bool ok, const std::string& what) {
        ++cases;
        if (!ok) {
            ++failed;
            problems.push_back(what);
        }
    }
};

RunConfig base_config() {
    RunConfig cfg;
    cfg.seed = 20240607;
    return cfg;
}

std::vector<RootSystem> types(std::initializer_list<const char*> names) {
    std::vector<RootSystem> out;
    for (const char* n : names) out.push_back(build_root_system(std::string(n)));
    return out;
}

// Integrality cases of criterion 9 come out of the suites of criteria 1, 2, 7.
Outcome integrality;

void collect_integrality(const VerificationReport& r, const std::string& where) {
    for (const auto& c : r.cases()) {
        if (c.name == "integrality") integrality.check(c.pass, where + " " + r.suite() + ": " + c.actual + " integral");
    }
}

Outcome criterion_1() {
    Outcome o;
    RunConfig cfg = base_config();
    cfg.cap_dim = 5000;  // G2 with lambda = (3,3) has dimension 4096
    for (const RootSystem& rs : types({"A1", "A2", "B2", "G2"})) {
        const auto r = suite_schur(rs, 3, cfg);
        o.absorb(r, rs.name());
        collect_integrality(r, rs.name());
    }
    return o;
}

Outcome criterion_2() {
    Outcome o;
    RunConfig cfg = base_config();
    cfg.fuzz_pairs = 1000;
    for (const RootSystem& rs : types({"A1", "A2", "A3", "B2", "B3", "C2", "C3", "G2"})) {
        const auto r = suite_kazhdan(rs, rs.rank() <= 2 ? 2 : 1, cfg);
        o.absorb(r, rs.name());
        collect_integrality(r, rs.name());
        o.check(r.total() == 1001, rs.name() + ": expected 1000 pairs");
    }
    return o;
}

Outcome criterion_3() {
    Outcome o;
    for (const RootSystem& rs : types({"A1", "A2", "B2", "C2", "G2"})) o.absorb(suite_osborne(rs, 2, base_config()), rs.name());
    return o;
}

Outcome criterion_4() {
    Outcome o;
    for (const RootSystem& rs : types({"A1", "A2", "A3", "B2", "B3", "C2", "C3", "G2"})) {
        const auto r = suite_weyldenom(rs, base_config());
        o.absorb(r, rs.name());
        o.check(r.total() == rs.weyl_order(), rs.name() + ": one case per Weyl group element");
    }
    return o;
}

Outcome criterion_5() {
    Outcome o;
    for (const RootSystem& rs : types({"A1", "A2", "B2", "C2", "G2"})) o.absorb(suite_antisym(rs, 2, base_config()), rs.name());
    return o;
}

Outcome criterion_6() {
    Outcome o;
    RunConfig cfg = base_config();
    cfg.dims_lo = 1;
    cfg.dims_hi = 6;
    o.absorb(suite_lavan(cfg), "d=1..6");
    return o;
}

Outcome criterion_7() {
    Outcome o;
    RunConfig cfg = base_config();
    cfg.closed_data = 50;
    const auto r = suite_standard(cfg);
    o.absorb(r, "sl2+random");
    collect_integrality(r, "standard");
    return o;
}

Outcome criterion_8() {
    Outcome o;
    o.absorb(suite_unequal(base_config()), "stubs");
    return o;
}

Outcome criterion_10() {
    Outcome o;
    for (const RootSystem& rs : types({"A1", "A2", "B2", "G2"})) o.absorb(suite_oracles(rs, 3, base_config()), rs.name());
    // Classical orders, written out here independently of the library's formula.
    auto fact = [](std::uint64_t n) {
        std::uint64_t f = 1;
        for (std::uint64_t k = 2; k <= n; ++k) f *= k;
        return f;
    };
    const std::vector<std::pair<const char*, std::uint64_t>> orders = {
        {"A1", 2},           {"A2", 6},      {"A3", 24},         {"A4", fact(5)}, {"B2", 8},
        {"B3", 48},          {"B4", 384},    {"C2", 8},          {"C3", 48},      {"C4", 384},
        {"D4", 192},         {"D5", 1920},   {"E6", 51840},      {"F4", 1152},    {"G2", 12},
        {"E7", 2903040},     {"E8", 696729600}};
    for (const auto& [name, order] : orders) {
        const RootSystem rs = build_root_system(std::string(name));
        o.check(rs.weyl_order() == order, std::string(name) + ": classical order");
        if (order <= 51840) o.check(enumerate_weyl_group(rs).order() == order, std::string(name) + ": enumeration");
    }
    for (const RootSystem& rs : types({"A1", "A2", "A3", "B2", "B3", "C2", "C3", "G2"})) {
        o.check(torus_integral(weyl_denominator_full(rs)) == BigInt(rs.weyl_order()), rs.name() + ": CT(D) = |W|");
    }
    return o;
}

struct Criterion {
    int id;
    const char* title;
    double budget_s;
    std::function<Outcome()> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "compact Schur: multiplicity = elliptic = homological = delta", 60, criterion_1},
        {2, "random virtual classes: elliptic = homological", 120, criterion_2},
        {3, "compact Euler class three ways", 120, criterion_3},
        {4, "denominator symmetry for every w", 10, criterion_4},
        {5, "antisymmetry (i) and transport (ii)", 120, criterion_5},
        {6, "abelian Ext Euler sums vanish", 1, criterion_6},
        {7, "standard classes, discrete-series orthogonality, dual formula", 10, criterion_7},
        {8, "unequal rank pairs to zero", 1, criterion_8},
        {9, "integrality of pairings", 0, nullptr},
        {10, "character, order and denominator oracles", 30, criterion_10},
    };

    bool all_pass = true;
    for (const Criterion& c : criteria) {
        Outcome o;
        double seconds = 0;
        if (c.run) {
            const auto start = std::chrono::steady_clock::now();
            o = c.run();
            seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        } else {
            o = integrality;  // filled in by criteria 1, 2 and 7
        }
        const bool in_budget = !c.run || seconds < c.budget_s;
        const bool pass = o.failed == 0 && o.cases > 0 && o.problems.empty() && in_budget;
        all_pass = all_pass && pass;
        if (c.run) {
            std::printf("Criterion %2d: %s  %s  [%zu cases, %zu failed, %.2f s of %.0f s]\n", c.id,
                        pass ? "PASS" : "FAIL", c.title, o.cases, o.failed, seconds, c.budget_s);
        } else {
            std::printf("Criterion %2d: %s  %s  [%zu cases, %zu failed, within criteria 1, 2, 7]\n", c.id,
                        pass ? "PASS" : "FAIL", c.title, o.cases, o.failed);
        }
        if (!in_budget) std::printf("    over budget\n");
        for (const auto& p : o.problems) std::printf("    %s\n", p.c_str());
        std::fflush(stdout);
    }
    return all_pass ? 0 : 1;
}
