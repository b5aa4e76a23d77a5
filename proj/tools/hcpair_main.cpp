// hcpair: root systems, characters, n-homology, pairings and verification suites.

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "hcpair/verify.hpp"

using namespace hcpair;

namespace {

struct Common {
    std::string emit = "json";
    std::string out;
    std::uint64_t seed = 1;
    std::uint64_t cap_weyl = kDefaultWeylCap;
    std::size_t cap_dim = kDefaultModuleDimCap;
};

void add_common(CLI::App* cmd, Common& c) {
    cmd->add_option("--emit", c.emit, "Output format")->check(CLI::IsMember({"json", "table"}));
    cmd->add_option("--out", c.out, "Write output to this file instead of stdout");
    cmd->add_option("--seed", c.seed, "Random seed");
    cmd->add_option("--cap-weyl", c.cap_weyl, "Largest Weyl group to enumerate")->check(CLI::PositiveNumber);
    cmd->add_option("--cap-dim", c.cap_dim, "Largest module dimension for the Koszul complex")->check(CLI::PositiveNumber);
}

void write(const Common& c, const std::string& text) {
    if (c.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(c.out);
    if (!f) throw std::runtime_error("cannot write " + c.out);
    f << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

RootSystem root_system_from(const std::string& type, std::optional<std::size_t> rank) {
    return build_root_system(type, rank);
}

Weight parse_weight(const std::string& text, std::size_t rank) {
    std::vector<int> coords;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) coords.push_back(std::stoi(item));
    if (coords.size() != rank) {
        throw std::invalid_argument("weight '" + text + "' needs " + std::to_string(rank) + " coordinates");
    }
    return Weight(std::span<const int>(coords));
}

// Positive system w R^+ for a word of 1-based indices like "1.2".
std::vector<Weight> positive_system_from_word(const RootSystem& rs, const std::string& word) {
    if (word.empty()) return {rs.positive_roots().begin(), rs.positive_roots().end()};
    const WeylSubgroup g = parse_w0(word, rs, kDefaultWeylCap);
    if (g.generators().size() != 1) throw std::invalid_argument("--w takes a single word");
    return transported_positive_system(rs, g.generators().front());
}

std::string char_table(const CharElement& c) {
    std::ostringstream out;
    for (const auto& [mu, k] : c.terms()) out << std::setw(16) << mu.to_string() << "  " << k << "\n";
    return out.str();
}

std::string matrix_table(const Json& report) {
    std::ostringstream out;
    const auto& labels = report["labels"];
    std::size_t width = 8;
    for (const auto& l : labels) width = std::max(width, l.get<std::string>().size() + 2);
    out << std::setw(static_cast<int>(width)) << "";
    for (const auto& l : labels) out << std::setw(static_cast<int>(width)) << l.get<std::string>();
    out << "\n";
    for (std::size_t a = 0; a < labels.size(); ++a) {
        out << std::setw(static_cast<int>(width)) << labels[a].get<std::string>();
        for (const auto& v : report["matrix"][a]) out << std::setw(static_cast<int>(width)) << v.get<std::string>();
        out << "\n";
    }
    return out.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact pairings of Harish-Chandra module classes"};
    app.require_subcommand(1);

    Common common;
    std::string type = "A1";
    std::optional<std::size_t> rank;
    std::string weight;
    std::string word;

    auto* rootsys = app.add_subcommand("rootsys", "Dump a root system");
    rootsys->add_option("--type", type, "Series letter or full type such as B3")->required();
    rootsys->add_option("--rank", rank, "Rank, when --type is a bare letter");
    add_common(rootsys, common);

    std::string method = "weyl";
    auto* chr = app.add_subcommand("char", "Character of an irreducible module");
    chr->add_option("--type", type)->required();
    chr->add_option("--rank", rank);
    chr->add_option("--weight", weight, "Highest weight, comma separated")->required();
    chr->add_option("--method", method)->check(CLI::IsMember({"weyl", "freudenthal", "euler"}));
    add_common(chr, common);

    std::string koszul = "modular";
    auto* homology = app.add_subcommand("homology", "n-homology from the Koszul complex");
    homology->add_option("--type", type)->required();
    homology->add_option("--rank", rank);
    homology->add_option("--weight", weight)->required();
    homology->add_option("--w", word, "Use the positive system w R^+, w a word such as 1.2");
    homology->add_option("--method", koszul)->check(CLI::IsMember({"modular", "exact"}));
    add_common(homology, common);

    std::string preset = "compact";
    int bound = 2;
    std::string range = "-3..3";
    std::size_t stubs = 3;
    auto* catalog = app.add_subcommand("catalog", "Build a module catalog");
    catalog->add_option("--preset", preset)->check(CLI::IsMember({"compact", "sl2", "unequal"}));
    catalog->add_option("--type", type);
    catalog->add_option("--rank", rank);
    catalog->add_option("--bound", bound, "Largest highest-weight coordinate (compact)");
    catalog->add_option("--range", range, "Discrete-series weights lo..hi (sl2)");
    catalog->add_option("--stubs", stubs, "Number of stubs (unequal)");
    add_common(catalog, common);

    std::string catalog_file;
    std::string kind = "elliptic";
    auto* pairing = app.add_subcommand("pairing", "Pairing matrix of a catalog");
    pairing->add_option("--catalog", catalog_file)->required()->check(CLI::ExistingFile);
    pairing->add_option("--kind", kind)->check(CLI::IsMember({"elliptic", "homological", "multiplicity"}));
    add_common(pairing, common);

    RunConfig cfg;
    std::string config_file;
    std::vector<std::string> suites;
    std::string dims;
    bool timing = false;
    auto* verify = app.add_subcommand("verify", "Run verification suites");
    verify->add_option("--config", config_file, "key = value configuration file")->check(CLI::ExistingFile);
    verify->add_option("--suite", suites, "Suite name (repeatable): schur kazhdan osborne weyldenom antisym lavan "
                                          "standard unequal oracles all")
        ->delimiter(',');
    verify->add_option("--type", type);
    verify->add_option("--rank", rank);
    verify->add_option("--bound", bound);
    std::string w0_spec;
    int fuzz_pairs = 0;
    verify->add_option("--w0", w0_spec, "compact, trivial, or words such as 1.2,2");
    verify->add_option("--dims", dims, "Abelian dimensions lo..hi");
    verify->add_option("--fuzz-pairs", fuzz_pairs, "Random pairs per type in the kazhdan suite");
    verify->add_flag("--timing", timing, "Include per-suite timings in the JSON report");
    add_common(verify, common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*rootsys) {
            const RootSystem rs = root_system_from(type, rank);
            if (common.emit == "json") {
                write(common, dump(to_json(rs)));
            } else {
                std::ostringstream out;
                out << rs.name() << "  |R+| = " << rs.num_positive() << "  |W| = " << rs.weyl_order() << "\n";
                for (const Weight& a : rs.positive_roots()) out << "  " << a.to_string() << "\n";
                write(common, out.str());
            }
        } else if (*chr) {
            const RootSystem rs = root_system_from(type, rank);
            const Weight l = parse_weight(weight, rs.rank());
            CharElement c = method == "freudenthal" ? freudenthal_character(l, rs)
                            : method == "euler"     ? euler_class_closed_form(l, rs, common.cap_weyl)
                                                    : weyl_character(l, rs, common.cap_weyl);
            write(common, common.emit == "json" ? dump(to_json(c)) : char_table(c));
        } else if (*homology) {
            const RootSystem rs = root_system_from(type, rank);
            const Weight l = parse_weight(weight, rs.rank());
            const auto ps = positive_system_from_word(rs, word);
            KoszulSolver solver(rs, common.cap_dim, koszul == "exact" ? KoszulMethod::exact : KoszulMethod::modular);
            const auto start = std::chrono::steady_clock::now();
            const GradedHomology h = solver.homology(l, ps);
            std::cerr << "homology: "
                      << std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() << " s, "
                      << solver.exact_fallbacks() << " exact fallbacks\n";
            if (common.emit == "json") {
                write(common, dump(to_json(h)));
            } else {
                std::ostringstream out;
                for (std::size_t p = 0; p < h.classes().size(); ++p) out << "H_" << p << ": " << h.degree(p).to_string() << "\n";
                write(common, out.str());
            }
        } else if (*catalog) {
            Catalog c;
            if (preset == "compact") {
                const RootSystem rs = root_system_from(type, rank);
                KoszulSolver solver(rs, common.cap_dim);
                c = compact_catalog(rs, bound, &solver);
            } else if (preset == "sl2") {
                const auto [lo, hi] = parse_range(range);
                c = sl2_catalog(lo, hi);
            } else {
                c = unequal_rank_catalog(stubs);
            }
            if (common.emit == "json") {
                write(common, dump(to_json(c)));
            } else {
                std::ostringstream out;
                for (const auto& m : c.modules) {
                    out << std::left << std::setw(16) << m.label() << std::setw(22) << to_string(m.provenance())
                        << m.euler().to_string() << "\n";
                }
                write(common, out.str());
            }
        } else if (*pairing) {
            std::ifstream in(catalog_file);
            const Catalog c = catalog_from_json(Json::parse(in));
            const Json report = pairing_matrix_report(c, parse_pairing_kind(kind));
            write(common, common.emit == "json" ? dump(report) : matrix_table(report));
        } else if (*verify) {
            if (!config_file.empty()) {
                std::ifstream in(config_file);
                std::stringstream text;
                text << in.rdbuf();
                cfg = parse_run_config(text.str());
            }
            // Flags given on the command line override the file.
            if (verify->count("--type")) cfg.type = rank ? type + std::to_string(*rank) : type;
            if (verify->count("--bound")) cfg.bound = bound;
            if (verify->count("--w0")) cfg.w0 = w0_spec;
            if (verify->count("--fuzz-pairs")) cfg.fuzz_pairs = fuzz_pairs;
            if (!suites.empty()) cfg.suites = suites;
            if (!dims.empty()) std::tie(cfg.dims_lo, cfg.dims_hi) = parse_range(dims);
            if (verify->count("--seed")) cfg.seed = common.seed;
            if (verify->count("--cap-weyl")) cfg.cap_weyl = common.cap_weyl;
            if (verify->count("--cap-dim")) cfg.cap_dim = common.cap_dim;
            if (verify->count("--out")) cfg.out = common.out;
            common.out = cfg.out;
            validate(cfg);

            const auto reports = run_suites(cfg);
            std::size_t total = 0, passed = 0, failed = 0;
            Json list = Json::array();
            for (const auto& r : reports) {
                total += r.total();
                passed += r.passed();
                failed += r.failed();
                list.push_back(to_json(r, timing));
                std::cerr << r.suite() << ": " << r.passed() << "/" << r.total() << " passed, "
                          << std::fixed << std::setprecision(1) << r.timing_ms() << " ms"
                          << (r.skipped() ? " [" + r.status() + "]" : "") << "\n";
            }
            Json j;
            j["config"] = {{"type", cfg.type}, {"bound", cfg.bound}, {"w0", cfg.w0}, {"seed", cfg.seed},
                           {"cap_weyl", cfg.cap_weyl}, {"cap_dim", cfg.cap_dim}, {"fuzz_pairs", cfg.fuzz_pairs},
                           {"dims", std::to_string(cfg.dims_lo) + ".." + std::to_string(cfg.dims_hi)},
                           {"sl2_range", std::to_string(cfg.sl2_lo) + ".." + std::to_string(cfg.sl2_hi)},
                           {"closed_data", cfg.closed_data}};
            j["reports"] = std::move(list);
            j["summary"] = {{"total", total}, {"passed", passed}, {"failed", failed}};
            write(common, common.emit == "json" ? dump(j) : to_table(reports));
            return failed == 0 ? 0 : 1;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
