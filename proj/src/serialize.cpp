#include "hcpair/serialize.hpp"

#include <algorithm>
#include <stdexcept>

namespace hcpair {

Json weight_to_json(const Weight& w) {
    Json j = Json::array();
    for (int x : w.coords()) j.push_back(x);
    return j;
}

Weight weight_from_json(const Json& j) {
    if (!j.is_array() || j.size() > kMaxRank) throw std::invalid_argument("weight must be an array of integers");
    std::vector<int> coords;
    for (const auto& x : j) {
        if (!x.is_number_integer()) throw std::invalid_argument("weight coordinates must be integers");
        coords.push_back(x.get<int>());
    }
    return Weight(std::span<const int>(coords));
}

namespace {

Json weights_to_json(std::span<const Weight> ws) {
    Json j = Json::array();
    for (const Weight& w : ws) j.push_back(weight_to_json(w));
    return j;
}

std::vector<Weight> weights_from_json(const Json& j) {
    std::vector<Weight> out;
    for (const auto& x : j) out.push_back(weight_from_json(x));
    return out;
}

}  // namespace

Json to_json(const RootSystem& rs) {
    Json j;
    j["series"] = std::string(1, rs.series());
    j["rank"] = rs.rank();
    j["positive_roots"] = weights_to_json(rs.positive_roots());
    j["rho"] = weight_to_json(rs.rho());
    j["weyl_order"] = rs.weyl_order();
    return j;
}

Json to_json(const CharElement& c) {
    Json j;
    j["rank"] = c.rank();
    Json terms = Json::array();
    // std::map keeps the weights sorted lexicographically.
    for (const auto& [mu, coeff] : c.terms()) {
        Json t;
        t["w"] = weight_to_json(mu);
        t["c"] = coeff.str();
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j;
}

CharElement char_from_json(const Json& j) {
    CharElement c(j.at("rank").get<std::size_t>());
    for (const auto& t : j.at("terms")) {
        const Json& coeff = t.at("c");
        BigInt k = coeff.is_string() ? BigInt(coeff.get<std::string>()) : BigInt(coeff.get<long long>());
        c.add_term(weight_from_json(t.at("w")), k);
    }
    return c;
}

Json to_json(const GradedHomology& h) {
    Json j;
    Json degrees = Json::array();
    for (std::size_t p = 0; p < h.classes().size(); ++p) {
        Json d;
        d["p"] = p;
        d["class"] = to_json(h.degree(p));
        degrees.push_back(std::move(d));
    }
    j["degrees"] = std::move(degrees);
    j["positive_system"] = weights_to_json(h.positive_system());
    return j;
}

GradedHomology homology_from_json(const Json& j) {
    std::vector<Weight> ps = weights_from_json(j.at("positive_system"));
    std::vector<CharElement> classes(ps.size() + 1, CharElement(0));
    std::vector<bool> seen(ps.size() + 1, false);
    for (const auto& d : j.at("degrees")) {
        const auto p = d.at("p").get<std::size_t>();
        if (p >= classes.size() || seen[p]) throw std::invalid_argument("homology degree out of range or repeated");
        classes[p] = char_from_json(d.at("class"));
        seen[p] = true;
    }
    if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
        throw std::invalid_argument("homology is missing a degree");
    }
    return GradedHomology(std::move(ps), std::move(classes));
}

Json to_json(const PairContext& ctx) {
    Json j;
    j["type"] = ctx.root_system().name();
    j["preset"] = ctx.preset();
    j["equal_rank"] = ctx.equal_rank();
    j["split_rank"] = ctx.split_rank();
    j["s"] = ctx.orbit_dim();
    j["positive_system"] = weights_to_json(ctx.positive_system());
    Json gens = Json::array();
    for (const WeylElement& g : ctx.w0().generators()) gens.push_back(g.matrix());
    j["w0_generators"] = std::move(gens);
    j["w0_order"] = ctx.w0_order();
    return j;
}

ContextPtr context_from_json(const Json& j) {
    const RootSystem rs = build_root_system(j.at("type").get<std::string>());
    std::vector<WeylElement> gens;
    for (const auto& m : j.at("w0_generators")) gens.push_back(WeylElement::from_matrix(rs, m.get<std::vector<int>>()));
    WeylSubgroup w0 = gens.empty() ? WeylSubgroup::trivial(rs) : WeylSubgroup::generated_by(rs, gens);
    if (j.contains("w0_order") && j.at("w0_order").get<std::size_t>() != w0.order()) {
        throw std::invalid_argument("context: W0 generators give order " + std::to_string(w0.order()) + ", file says " +
                                    std::to_string(j.at("w0_order").get<std::size_t>()));
    }
    return std::make_shared<const PairContext>(rs, weights_from_json(j.at("positive_system")), std::move(w0),
                                               j.at("equal_rank").get<bool>(), j.at("split_rank").get<std::size_t>(),
                                               j.at("s").get<int>(), j.value("preset", std::string("custom")));
}

Json to_json(const VirtualModule& m) {
    Json j;
    j["label"] = m.label();
    j["provenance"] = to_string(m.provenance());
    j["euler"] = to_json(m.euler());
    j["homology"] = m.homology() ? to_json(*m.homology()) : Json(nullptr);
    if (!m.note().empty()) j["note"] = m.note();
    return j;
}

Json to_json(const Catalog& c) {
    Json j;
    j["context"] = to_json(*c.context);
    Json modules = Json::array();
    for (const VirtualModule& m : c.modules) modules.push_back(to_json(m));
    j["modules"] = std::move(modules);
    return j;
}

Catalog catalog_from_json(const Json& j) {
    Catalog c{context_from_json(j.at("context")), {}};
    for (const auto& m : j.at("modules")) {
        std::optional<GradedHomology> h;
        if (m.contains("homology") && !m.at("homology").is_null()) h = homology_from_json(m.at("homology"));
        c.modules.emplace_back(m.at("label").get<std::string>(), c.context, std::move(h), char_from_json(m.at("euler")),
                               parse_provenance(m.at("provenance").get<std::string>()), m.value("note", std::string()));
    }
    return c;
}

Json pairing_report(PairingKind kind, const VirtualModule& left, const VirtualModule& right,
                    const PairingValue& value) {
    Json j;
    j["kind"] = to_string(kind);
    j["left"] = left.label();
    j["right"] = right.label();
    j["value"] = to_fraction_string(value.value);
    j["context"] = to_json(*left.context());
    if (!value.note.empty()) j["note"] = value.note;
    return j;
}

Json pairing_matrix_report(const Catalog& catalog, PairingKind kind) {
    const auto values = pairing_matrix(catalog, kind);
    Json j;
    j["kind"] = to_string(kind);
    j["context"] = to_json(*catalog.context);
    Json labels = Json::array();
    for (const auto& m : catalog.modules) labels.push_back(m.label());
    j["labels"] = std::move(labels);
    Json matrix = Json::array();
    Json entries = Json::array();
    for (std::size_t a = 0; a < values.size(); ++a) {
        Json row = Json::array();
        for (std::size_t b = 0; b < values[a].size(); ++b) {
            row.push_back(to_fraction_string(values[a][b].value));
            Json e = pairing_report(kind, catalog.modules[a], catalog.modules[b], values[a][b]);
            e.erase("context");
            entries.push_back(std::move(e));
        }
        matrix.push_back(std::move(row));
    }
    j["matrix"] = std::move(matrix);
    j["pairs"] = std::move(entries);
    return j;
}

}  // namespace hcpair
