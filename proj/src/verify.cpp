#include "hcpair/verify.hpp"

#include <algorithm>
#include <chrono>
#include <charconv>
#include <iomanip>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

#include "hcpair/sampling.hpp"

namespace hcpair {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) {
        cur = trim(cur);
        if (!cur.empty()) out.push_back(cur);
    }
    return out;
}

template <class T>
T parse_number(const std::string& key, const std::string& text) {
    T value{};
    const auto* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc() || ptr != end) throw std::invalid_argument("config: bad value for " + key + ": '" + text + "'");
    return value;
}

std::string str(const Rational& r) { return to_fraction_string(r); }

std::string str(bool b) { return b ? "true" : "false"; }

Json word_json(const WeylElement& w) {
    Json j = Json::array();
    for (std::size_t i : w.reduced_word()) j.push_back(i + 1);
    return j;
}

// Integrality bookkeeping shared by the pairing suites: [W0] * value must be
// an integer always, the value itself on genuine classes.
struct Integrality {
    std::size_t checked = 0;
    std::size_t ok = 0;

    void note(const Rational& v, std::size_t w0_order) {
        ++checked;
        if (is_integer(v) && is_integer(v * Rational(static_cast<long long>(w0_order)))) ++ok;
    }
    void report(VerificationReport& r) const {
        r.add("integrality", Json::object(), std::to_string(checked) + "/" + std::to_string(checked),
              std::to_string(ok) + "/" + std::to_string(checked));
    }
};

}  // namespace

std::pair<int, int> parse_range(const std::string& text) {
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        const int v = parse_number<int>("range", trim(text));
        return {v, v};
    }
    return {parse_number<int>("range", trim(text.substr(0, dots))), parse_number<int>("range", trim(text.substr(dots + 2)))};
}

RunConfig parse_run_config(const std::string& text) {
    RunConfig cfg;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("config line " + std::to_string(lineno) + ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key == "type") cfg.type = value;
        else if (key == "bound") cfg.bound = parse_number<int>(key, value);
        else if (key == "w0") cfg.w0 = value;
        else if (key == "suites" || key == "suite") cfg.suites = split(value, ',');
        else if (key == "seed") cfg.seed = parse_number<std::uint64_t>(key, value);
        else if (key == "cap_weyl") cfg.cap_weyl = parse_number<std::uint64_t>(key, value);
        else if (key == "cap_dim") cfg.cap_dim = parse_number<std::size_t>(key, value);
        else if (key == "out") cfg.out = value;
        else if (key == "fuzz_pairs") cfg.fuzz_pairs = parse_number<int>(key, value);
        else if (key == "dims") std::tie(cfg.dims_lo, cfg.dims_hi) = parse_range(value);
        else if (key == "sl2_range") std::tie(cfg.sl2_lo, cfg.sl2_hi) = parse_range(value);
        else if (key == "closed_data") cfg.closed_data = parse_number<int>(key, value);
        else throw std::invalid_argument("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
    validate(cfg);
    return cfg;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"schur",    "kazhdan",  "osborne", "weyldenom", "antisym",
                                                    "lavan",    "standard", "unequal", "oracles"};
    return names;
}

void validate(const RunConfig& cfg) {
    if (cfg.cap_weyl == 0 || cfg.cap_dim == 0) throw std::invalid_argument("caps must be positive");
    if (cfg.bound < 0) throw std::invalid_argument("bound must be nonnegative");
    if (cfg.fuzz_pairs < 0 || cfg.closed_data < 0) throw std::invalid_argument("counts must be nonnegative");
    if (cfg.dims_lo < 0 || cfg.dims_lo > cfg.dims_hi || cfg.dims_hi > 20) throw std::invalid_argument("dims must satisfy 0 <= lo <= hi <= 20");
    if (cfg.sl2_lo > cfg.sl2_hi) throw std::invalid_argument("sl2_range is empty");
    if (cfg.suites.empty()) throw std::invalid_argument("no suites selected");
    for (const auto& s : cfg.suites) {
        if (s != "all" && std::find(suite_names().begin(), suite_names().end(), s) == suite_names().end()) {
            throw std::invalid_argument("unknown suite '" + s + "'");
        }
    }
}

void VerificationReport::add(std::string name, Json inputs, std::string expected, std::string actual) {
    const bool pass = expected == actual;
    add(std::move(name), std::move(inputs), std::move(expected), std::move(actual), pass);
}

void VerificationReport::add(std::string name, Json inputs, std::string expected, std::string actual, bool pass) {
    cases_.push_back({std::move(name), std::move(inputs), std::move(expected), std::move(actual), pass});
    if (pass) ++passed_;
}

void VerificationReport::skip(std::string reason) { skip_reason_ = std::move(reason); }

Json to_json(const VerificationReport& r, bool with_timing) {
    Json j;
    j["suite"] = r.suite();
    j["seed"] = r.seed();
    j["status"] = r.skipped() ? r.status() : (r.failed() == 0 ? "pass" : "fail");
    Json cases = Json::array();
    for (const auto& c : r.cases()) {
        Json cj;
        cj["name"] = c.name;
        cj["inputs"] = c.inputs;
        cj["expected"] = c.expected;
        cj["actual"] = c.actual;
        cj["pass"] = c.pass;
        cases.push_back(std::move(cj));
    }
    j["cases"] = std::move(cases);
    j["summary"] = {{"total", r.total()}, {"passed", r.passed()}, {"failed", r.failed()}};
    if (with_timing) j["timing_ms"] = r.timing_ms();
    return j;
}

std::string to_table(const std::vector<VerificationReport>& reports) {
    std::ostringstream out;
    out << std::left << std::setw(12) << "suite" << std::right << std::setw(8) << "total" << std::setw(8) << "passed"
        << std::setw(8) << "failed" << "  status\n";
    for (const auto& r : reports) {
        out << std::left << std::setw(12) << r.suite() << std::right << std::setw(8) << r.total() << std::setw(8)
            << r.passed() << std::setw(8) << r.failed() << "  "
            << (r.skipped() ? r.status() : (r.failed() == 0 ? "pass" : "FAIL")) << "\n";
    }
    return out.str();
}

WeylSubgroup parse_w0(const std::string& spec, const RootSystem& rs, std::uint64_t cap) {
    const std::string s = trim(spec);
    if (s == "compact" || s.empty()) return enumerate_weyl_group(rs, cap);
    if (s == "trivial") return WeylSubgroup::trivial(rs);
    std::vector<WeylElement> gens;
    for (const std::string& item : split(s, ',')) {
        std::vector<std::size_t> word;
        for (const std::string& idx : split(item, '.')) {
            const int i = parse_number<int>("w0", idx);
            if (i < 1 || static_cast<std::size_t>(i) > rs.rank()) {
                throw std::invalid_argument("w0: reflection index " + idx + " out of range 1.." + std::to_string(rs.rank()));
            }
            word.push_back(static_cast<std::size_t>(i - 1));
        }
        gens.push_back(WeylElement::from_word(rs, word));
    }
    return WeylSubgroup::generated_by(rs, gens, cap);
}

VerificationReport suite_schur(const RootSystem& rs, int bound, const RunConfig& cfg) {
    VerificationReport r("schur", cfg.seed);
    const auto ctx = compact_context(rs, cfg.cap_weyl);
    KoszulSolver solver(rs, cfg.cap_dim);
    const auto weights = dominant_box(rs.rank(), bound);
    std::vector<CharElement> chi;
    std::vector<GradedHomology> hom;
    for (const Weight& l : weights) {
        chi.push_back(weyl_character(l, rs, cfg.cap_weyl));
        hom.push_back(solver.homology(l, ctx->positive_system()));
    }
    Integrality integral;
    for (std::size_t a = 0; a < weights.size(); ++a) {
        for (std::size_t b = 0; b < weights.size(); ++b) {
            const Rational m = multiplicity_pairing(chi[a], chi[b], *ctx).value;
            const Rational e = elliptic_pairing(euler_class(hom[a]), euler_class(hom[b]), *ctx).value;
            const Rational h = homological_pairing(hom[a], hom[b], *ctx).value;
            const std::string delta = a == b ? "1/1" : "0/1";
            integral.note(e, ctx->w0_order());
            r.add(rs.name() + " " + weights[a].to_string() + " " + weights[b].to_string(),
                  {{"lambda", weight_to_json(weights[a])}, {"mu", weight_to_json(weights[b])}},
                  "multiplicity=" + delta + " elliptic=" + delta + " homological=" + delta,
                  "multiplicity=" + str(m) + " elliptic=" + str(e) + " homological=" + str(h));
        }
    }
    integral.report(r);
    return r;
}

VerificationReport suite_kazhdan(const RootSystem& rs, int bound, const RunConfig& cfg) {
    VerificationReport r("kazhdan", cfg.seed);
    const auto ctx = compact_context(rs, cfg.cap_weyl);
    KoszulSolver solver(rs, cfg.cap_dim);
    const auto weights = dominant_box(rs.rank(), bound);
    std::vector<GradedHomology> basis;
    for (const Weight& l : weights) basis.push_back(solver.homology(l, ctx->positive_system()));

    std::mt19937_64 rng(cfg.seed);
    auto random_combination = [&](Json& coeffs) {
        GradedHomology h(rs.rank(), ctx->positive_system());
        coeffs = Json::array();
        for (const auto& b : basis) {
            const int k = draw(rng, -3, 3);
            coeffs.push_back(k);
            if (k != 0) h.add_scaled(k, b);
        }
        return h;
    };
    Integrality integral;
    for (int i = 0; i < cfg.fuzz_pairs; ++i) {
        Json left, right;
        const GradedHomology a = random_combination(left);
        const GradedHomology b = random_combination(right);
        const Rational e = elliptic_pairing(euler_class(a), euler_class(b), *ctx).value;
        const Rational h = homological_pairing(a, b, *ctx).value;
        integral.note(e, ctx->w0_order());
        r.add(rs.name() + " pair " + std::to_string(i), {{"left", left}, {"right", right}}, "homological=" + str(e),
              "homological=" + str(h));
    }
    integral.report(r);
    return r;
}

VerificationReport suite_osborne(const RootSystem& rs, int bound, const RunConfig& cfg) {
    VerificationReport r("osborne", cfg.seed);
    KoszulSolver solver(rs, cfg.cap_dim);
    const CharElement half = half_denominator(rs);
    for (const Weight& l : dominant_box(rs.rank(), bound)) {
        const CharElement koszul = euler_class(solver.homology(l, rs.positive_roots()));
        const CharElement product = half * weyl_character(l, rs, cfg.cap_weyl);
        const CharElement closed = euler_class_closed_form(l, rs, cfg.cap_weyl);
        const bool pass = koszul == product && product == closed;
        r.add(rs.name() + " " + l.to_string(), {{"lambda", weight_to_json(l)}}, closed.to_string(),
              pass ? closed.to_string() : "koszul=" + koszul.to_string() + " product=" + product.to_string(), pass);
    }
    return r;
}

VerificationReport suite_weyldenom(const RootSystem& rs, const RunConfig& cfg) {
    VerificationReport r("weyldenom", cfg.seed);
    const WeylSubgroup w = enumerate_weyl_group(rs, cfg.cap_weyl);
    for (const WeylElement& x : w.elements()) {
        r.add(rs.name() + " w=" + word_json(x).dump(), {{"word", word_json(x)}}, "true",
              str(check_denominator_symmetry(x, rs)));
    }
    return r;
}

VerificationReport suite_antisym(const RootSystem& rs, int bound, const RunConfig& cfg) {
    VerificationReport r("antisym", cfg.seed);
    const auto ctx = compact_context(rs, cfg.cap_weyl);
    const WeylSubgroup w0 = parse_w0(cfg.w0, rs, cfg.cap_weyl);
    KoszulSolver solver(rs, cfg.cap_dim);
    for (const Weight& l : dominant_box(rs.rank(), bound)) {
        const CharElement xi = euler_class(solver.homology(l, ctx->positive_system()));
        for (const WeylElement& w : w0.elements()) {
            r.add(rs.name() + " (i) " + l.to_string() + " w=" + word_json(w).dump(),
                  {{"lambda", weight_to_json(l)}, {"word", word_json(w)}}, "true", str(check_antisym_i(xi, w, *ctx)));
        }
        for (const WeylElement& w : ctx->w0().elements()) {
            const CharElement direct = euler_class(solver.homology(l, transported_positive_system(rs, w)));
            const CharElement moved = antisym_transport(xi, w, *ctx);
            r.add(rs.name() + " (ii) " + l.to_string() + " w=" + word_json(w).dump(),
                  {{"lambda", weight_to_json(l)}, {"word", word_json(w)}}, direct.to_string(), moved.to_string());
        }
    }
    return r;
}

VerificationReport suite_lavan(const RunConfig& cfg) {
    VerificationReport r("lavan", cfg.seed);
    std::mt19937_64 rng(cfg.seed);
    for (int d = cfg.dims_lo; d <= cfg.dims_hi; ++d) {
        const auto n = static_cast<std::size_t>(d);
        const auto zero = ext_abelian_graded(std::vector<Rational>(n, Rational(0)), n);
        Json expected_dims = Json::array(), actual_dims = Json::array();
        BigInt binom = 1;
        for (std::size_t p = 0; p <= n; ++p) {
            expected_dims.push_back(binom.str());
            actual_dims.push_back(zero[p].str());
            binom = binom * (n - p) / (p + 1);
        }
        r.add("d=" + std::to_string(d) + " nu=0 dims", {{"d", d}, {"nu", "0"}}, expected_dims.dump(), actual_dims.dump());
        r.add("d=" + std::to_string(d) + " nu=0 euler", {{"d", d}, {"nu", "0"}}, d == 0 ? "1" : "0",
              alternating_sum(zero).str());
        if (d == 0) continue;
        std::vector<Rational> nu(n);
        Json nu_json = Json::array();
        for (auto& x : nu) {
            x = Rational(draw(rng, -3, 3), draw(rng, 1, 4));
            nu_json.push_back(str(x));
        }
        if (std::all_of(nu.begin(), nu.end(), [](const Rational& x) { return x == 0; })) {
            nu[0] = 1;
            nu_json[0] = "1/1";
        }
        const auto generic = ext_abelian_graded(nu, n);
        Json dims = Json::array();
        for (const auto& x : generic) dims.push_back(x.str());
        r.add("d=" + std::to_string(d) + " nu!=0 dims", {{"d", d}, {"nu", nu_json}},
              Json(std::vector<std::string>(n + 1, "0")).dump(), dims.dump());
        r.add("d=" + std::to_string(d) + " nu!=0 euler", {{"d", d}, {"nu", nu_json}}, "0", alternating_sum(generic).str());
    }
    return r;
}

namespace {

GeometricDatum random_closed_datum(std::mt19937_64& rng, std::uint64_t cap) {
    static const char* types[] = {"A1", "A2", "B2", "G2"};
    const RootSystem rs = build_root_system(std::string(types[draw(rng, 0, 3)]));
    const WeylSubgroup w = enumerate_weyl_group(rs, cap);
    const auto pick = [&] { return w.elements()[draw(rng, 0, static_cast<int>(w.order()) - 1)]; };
    const auto ps = transported_positive_system(rs, pick());
    std::vector<WeylElement> gens;
    for (int k = draw(rng, 0, 2); k > 0; --k) gens.push_back(pick());
    const WeylSubgroup w0 = WeylSubgroup::generated_by(rs, gens, cap);
    std::size_t longest = 0;
    for (const auto& x : w0.elements()) longest = std::max(longest, relative_length(x, ps));
    const int s = draw(rng, static_cast<int>(longest), static_cast<int>(rs.num_positive()));
    return {true, random_weight(rng, rs.rank(), -3, 3), s, custom_context(rs, ps, gens, s, cap)};
}

Json datum_json(const GeometricDatum& d) {
    return {{"closed", d.closed}, {"V", weight_to_json(d.v)}, {"s", d.s}, {"context", to_json(*d.ctx)}};
}

}  // namespace

VerificationReport suite_standard(const RunConfig& cfg) {
    VerificationReport r("standard", cfg.seed);
    Integrality integral;

    const Catalog sl2 = sl2_catalog(cfg.sl2_lo, cfg.sl2_hi);
    for (PairingKind kind : {PairingKind::elliptic, PairingKind::homological}) {
        const auto m = pairing_matrix(sl2, kind);
        for (std::size_t a = 0; a < m.size(); ++a) {
            for (std::size_t b = 0; b < m.size(); ++b) {
                const VirtualModule& x = sl2.modules[a];
                const VirtualModule& y = sl2.modules[b];
                const bool closed = x.provenance() == Provenance::standard_closed &&
                                    y.provenance() == Provenance::standard_closed;
                if (kind == PairingKind::elliptic) integral.note(m[a][b].value, sl2.context->w0_order());
                r.add("sl2 " + to_string(kind) + " " + x.label() + " " + y.label(),
                      {{"left", x.label()}, {"right", y.label()}, {"kind", to_string(kind)}},
                      closed && a == b ? "1/1" : "0/1", str(m[a][b].value));
            }
        }
    }

    std::mt19937_64 rng(cfg.seed);
    for (int i = 0; i < cfg.closed_data; ++i) {
        const GeometricDatum d = random_closed_datum(rng, cfg.cap_weyl);
        const Json in = datum_json(d);
        const std::string tag = "datum " + std::to_string(i) + " " + d.ctx->root_system().name();
        const VirtualModule m = standard_module_class(d);
        const VirtualModule dual = dual_standard_class(d);
        r.add(tag + " dual formula", in, dual_class(m.euler(), *d.ctx).to_string(), dual.euler().to_string());
        r.add(tag + " double dual", in, m.euler().to_string(), dual_class(dual.euler(), *d.ctx).to_string());
        bool antisym = true;
        for (const WeylElement& w : d.ctx->w0().elements()) antisym = antisym && check_antisym_i(m.euler(), w, *d.ctx);
        r.add(tag + " antisym on W0", in, "true", str(antisym));

        GeometricDatum open = d;
        open.closed = false;
        const VirtualModule zero = standard_module_class(open);
        for (const VirtualModule* x : {&m, &dual}) {
            for (const VirtualModule* y : {&m, &dual}) {
                const Rational e = pair(*x, *y, PairingKind::elliptic).value;
                integral.note(e, d.ctx->w0_order());
                r.add(tag + " paths " + x->label() + " " + y->label(), in, "homological=" + str(e),
                      "homological=" + str(pair(*x, *y, PairingKind::homological).value));
            }
            for (PairingKind kind : {PairingKind::elliptic, PairingKind::homological}) {
                r.add(tag + " open vs " + x->label() + " " + to_string(kind), in, "0/1 0/1",
                      str(pair(zero, *x, kind).value) + " " + str(pair(*x, zero, kind).value));
            }
        }
    }
    integral.report(r);
    return r;
}

VerificationReport suite_unequal(const RunConfig& cfg) {
    VerificationReport r("unequal", cfg.seed);
    const RootSystem a1 = build_root_system('A', 1);
    for (std::size_t d = 1; d <= 6; ++d) {
        Catalog cat{unequal_rank_context(a1, d), {}};
        for (int i = 0; i < 2; ++i) cat.modules.push_back(unequal_rank_stub("stub" + std::to_string(i), cat.context));
        const Json in = {{"split_rank", d}};
        const std::string tag = "split_rank=" + std::to_string(d);
        for (PairingKind kind : {PairingKind::elliptic, PairingKind::homological}) {
            for (const auto& row : pairing_matrix(cat, kind)) {
                for (const auto& v : row) r.add(tag + " " + to_string(kind), in, "0/1", str(v.value));
            }
        }
        const CharElement& x = cat.modules[0].euler();
        r.add(tag + " short-circuit", in, "0/1",
              str(pairing_unequal_rank(x, x, *cat.context, UnequalRankRoute::short_circuit).value));
        r.add(tag + " abelian", in, "0/1", str(pairing_unequal_rank(x, x, *cat.context, UnequalRankRoute::abelian).value));
        const CharElement empty(1);
        r.add(tag + " empty classes", in, "0/1", str(pairing_unequal_rank(empty, empty, *cat.context).value));
        const Catalog back = catalog_from_json(Json::parse(to_json(cat).dump()));
        r.add(tag + " reloaded", in, "0/1", str(pair(back.modules[0], back.modules[1], PairingKind::elliptic).value));
    }
    return r;
}

VerificationReport suite_oracles(const RootSystem& rs, int bound, const RunConfig& cfg) {
    VerificationReport r("oracles", cfg.seed);
    for (const Weight& l : dominant_box(rs.rank(), bound)) {
        r.add(rs.name() + " character " + l.to_string(), {{"lambda", weight_to_json(l)}},
              freudenthal_character(l, rs).to_string(), weyl_character(l, rs, cfg.cap_weyl).to_string());
    }
    r.add(rs.name() + " |W| enumeration", {{"type", rs.name()}}, std::to_string(rs.weyl_order()),
          std::to_string(enumerate_weyl_group(rs, cfg.cap_weyl).order()));
    if (rs.rank() <= 3) {
        r.add(rs.name() + " CT(D)", {{"type", rs.name()}}, std::to_string(rs.weyl_order()),
              torus_integral(weyl_denominator_full(rs)).str());
    }
    return r;
}

VerificationReport run_suite(const std::string& name, const RunConfig& cfg) {
    const auto start = std::chrono::steady_clock::now();
    VerificationReport r(name, cfg.seed);
    try {
        if (name == "lavan") r = suite_lavan(cfg);
        else if (name == "standard") r = suite_standard(cfg);
        else if (name == "unequal") r = suite_unequal(cfg);
        else {
            const RootSystem rs = build_root_system(cfg.type, std::nullopt);
            if (name == "schur") r = suite_schur(rs, cfg.bound, cfg);
            else if (name == "kazhdan") r = suite_kazhdan(rs, cfg.bound, cfg);
            else if (name == "osborne") r = suite_osborne(rs, cfg.bound, cfg);
            else if (name == "weyldenom") r = suite_weyldenom(rs, cfg);
            else if (name == "antisym") r = suite_antisym(rs, cfg.bound, cfg);
            else if (name == "oracles") r = suite_oracles(rs, cfg.bound, cfg);
            else throw std::invalid_argument("unknown suite '" + name + "'");
        }
    } catch (const CapExceeded& e) {
        r = VerificationReport(name, cfg.seed);
        r.skip(std::string("skipped: cap (") + e.what() + ")");
    } catch (const ModuleTooLarge& e) {
        r = VerificationReport(name, cfg.seed);
        r.skip(std::string("skipped: cap (") + e.what() + ")");
    }
    r.set_timing_ms(std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count());
    return r;
}

std::vector<VerificationReport> run_suites(const RunConfig& cfg) {
    validate(cfg);
    std::vector<std::string> names;
    for (const auto& s : cfg.suites) {
        if (s == "all") names.insert(names.end(), suite_names().begin(), suite_names().end());
        else names.push_back(s);
    }
    std::vector<VerificationReport> out;
    for (const auto& n : names) {
        if (std::none_of(out.begin(), out.end(), [&](const auto& r) { return r.suite() == n; })) out.push_back(run_suite(n, cfg));
    }
    return out;
}

}  // namespace hcpair
