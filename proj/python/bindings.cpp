// Python bindings. Structured values cross the boundary as JSON text; the
// hcpair package turns them into dicts and Fractions.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hcpair/verify.hpp"

namespace py = pybind11;
using namespace hcpair;

namespace {

Weight to_weight(const std::vector<int>& coords, const RootSystem& rs) {
    if (coords.size() != rs.rank()) {
        throw std::invalid_argument("weight needs " + std::to_string(rs.rank()) + " coordinates");
    }
    return Weight(std::span<const int>(coords));
}

std::vector<Weight> positive_system_for(const RootSystem& rs, const std::string& word) {
    if (word.empty()) return {rs.positive_roots().begin(), rs.positive_roots().end()};
    const WeylSubgroup g = parse_w0(word, rs, kDefaultWeylCap);
    if (g.generators().size() != 1) throw std::invalid_argument("expected a single word");
    return transported_positive_system(rs, g.generators().front());
}

std::string character(const std::string& type, const std::vector<int>& weight, const std::string& method) {
    const RootSystem rs = build_root_system(type);
    const Weight l = to_weight(weight, rs);
    if (method == "weyl") return to_json(weyl_character(l, rs)).dump();
    if (method == "freudenthal") return to_json(freudenthal_character(l, rs)).dump();
    if (method == "euler") return to_json(euler_class_closed_form(l, rs)).dump();
    throw std::invalid_argument("unknown method '" + method + "'");
}

std::string homology(const std::string& type, const std::vector<int>& weight, const std::string& word,
                     const std::string& method, std::size_t cap_dim) {
    const RootSystem rs = build_root_system(type);
    if (method != "modular" && method != "exact") throw std::invalid_argument("unknown method '" + method + "'");
    KoszulSolver solver(rs, cap_dim, method == "exact" ? KoszulMethod::exact : KoszulMethod::modular);
    return to_json(solver.homology(to_weight(weight, rs), positive_system_for(rs, word))).dump();
}

std::string catalog(const std::string& preset, const std::string& type, int bound, int lo, int hi,
                    std::size_t stubs, std::size_t cap_dim) {
    if (preset == "compact") {
        const RootSystem rs = build_root_system(type);
        KoszulSolver solver(rs, cap_dim);
        return to_json(compact_catalog(rs, bound, &solver)).dump();
    }
    if (preset == "sl2") return to_json(sl2_catalog(lo, hi)).dump();
    if (preset == "unequal") return to_json(unequal_rank_catalog(stubs)).dump();
    throw std::invalid_argument("unknown preset '" + preset + "'");
}

std::string pairing_matrix_json(const std::string& catalog_json, const std::string& kind) {
    return pairing_matrix_report(catalog_from_json(Json::parse(catalog_json)), parse_pairing_kind(kind)).dump();
}

std::string pair_json(const std::string& catalog_json, const std::string& left, const std::string& right,
                      const std::string& kind) {
    const Catalog c = catalog_from_json(Json::parse(catalog_json));
    const auto find = [&](const std::string& label) -> const VirtualModule& {
        for (const auto& m : c.modules) {
            if (m.label() == label) return m;
        }
        throw std::invalid_argument("no module labelled '" + label + "'");
    };
    const PairingKind k = parse_pairing_kind(kind);
    const VirtualModule& a = find(left);
    const VirtualModule& b = find(right);
    return pairing_report(k, a, b, pair(a, b, k)).dump();
}

std::string verify(const std::string& config_text, const std::vector<std::string>& suites, py::dict overrides) {
    RunConfig cfg = parse_run_config(config_text);
    if (!suites.empty()) cfg.suites = suites;
    for (const auto& [key, value] : overrides) {
        const std::string k = py::str(key);
        if (k == "type") cfg.type = value.cast<std::string>();
        else if (k == "bound") cfg.bound = value.cast<int>();
        else if (k == "w0") cfg.w0 = value.cast<std::string>();
        else if (k == "seed") cfg.seed = value.cast<std::uint64_t>();
        else if (k == "cap_weyl") cfg.cap_weyl = value.cast<std::uint64_t>();
        else if (k == "cap_dim") cfg.cap_dim = value.cast<std::size_t>();
        else if (k == "fuzz_pairs") cfg.fuzz_pairs = value.cast<int>();
        else if (k == "closed_data") cfg.closed_data = value.cast<int>();
        else if (k == "dims") std::tie(cfg.dims_lo, cfg.dims_hi) = parse_range(value.cast<std::string>());
        else if (k == "sl2_range") std::tie(cfg.sl2_lo, cfg.sl2_hi) = parse_range(value.cast<std::string>());
        else throw std::invalid_argument("unknown setting '" + k + "'");
    }
    validate(cfg);
    Json out = Json::array();
    {
        py::gil_scoped_release release;
        for (const auto& r : run_suites(cfg)) out.push_back(to_json(r));
    }
    return out.dump();
}

std::vector<std::string> ext_abelian(const std::vector<std::string>& nu, std::size_t d) {
    std::vector<Rational> q;
    for (const auto& x : nu) q.push_back(parse_rational(x));
    std::vector<std::string> out;
    for (const BigInt& v : ext_abelian_graded(q, d)) out.push_back(v.str());
    return out;
}

std::string torus_pair(const std::string& a, const std::string& b) {
    return torus_pairing(char_from_json(Json::parse(a)), char_from_json(Json::parse(b))).str();
}

bool denominator_symmetry(const std::string& type) {
    const RootSystem rs = build_root_system(type);
    const WeylSubgroup w = enumerate_weyl_group(rs);
    for (const WeylElement& x : w.elements()) {
        if (!check_denominator_symmetry(x, rs)) return false;
    }
    return true;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact pairings of Harish-Chandra module classes";
    py::register_exception<CapExceeded>(m, "CapExceeded", PyExc_RuntimeError);

    m.def("root_system", [](const std::string& type) { return to_json(build_root_system(type)).dump(); },
          py::arg("type"));
    m.def("weyl_order", [](const std::string& type) { return build_root_system(type).weyl_order(); }, py::arg("type"));
    m.def("weyl_dimension",
          [](const std::string& type, const std::vector<int>& weight) {
              const RootSystem rs = build_root_system(type);
              return weyl_dimension(rs, to_weight(weight, rs)).str();
          },
          py::arg("type"), py::arg("weight"));
    m.def("character", &character, py::arg("type"), py::arg("weight"), py::arg("method") = "weyl");
    m.def("homology", &homology, py::arg("type"), py::arg("weight"), py::arg("word") = "",
          py::arg("method") = "modular", py::arg("cap_dim") = kDefaultModuleDimCap);
    m.def("catalog", &catalog, py::arg("preset"), py::arg("type") = "A1", py::arg("bound") = 2, py::arg("lo") = -3,
          py::arg("hi") = 3, py::arg("stubs") = 3, py::arg("cap_dim") = kDefaultModuleDimCap);
    m.def("pairing_matrix", &pairing_matrix_json, py::arg("catalog"), py::arg("kind") = "elliptic");
    m.def("pair", &pair_json, py::arg("catalog"), py::arg("left"), py::arg("right"), py::arg("kind") = "elliptic");
    m.def("verify", &verify, py::arg("config") = "", py::arg("suites") = std::vector<std::string>{},
          py::arg("overrides") = py::dict());
    m.def("suite_names", &suite_names);
    m.def("ext_abelian_graded", &ext_abelian, py::arg("nu"), py::arg("d"));
    m.def("torus_pairing", &torus_pair, py::arg("a"), py::arg("b"));
    m.def("denominator_symmetry", &denominator_symmetry, py::arg("type"));
}
