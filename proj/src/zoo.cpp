#include "hcpair/zoo.hpp"

#include <algorithm>
#include <stdexcept>

#include "hcpair/sampling.hpp"

namespace hcpair {

std::string to_string(Provenance p) {
    switch (p) {
        case Provenance::compact_irreducible: return "compact_irreducible";
        case Provenance::standard_closed: return "standard_closed";
        case Provenance::standard_open: return "standard_open";
        case Provenance::dual_of: return "dual_of";
        case Provenance::external: return "external";
    }
    return "?";
}

Provenance parse_provenance(const std::string& name) {
    for (Provenance p : {Provenance::compact_irreducible, Provenance::standard_closed, Provenance::standard_open,
                         Provenance::dual_of, Provenance::external}) {
        if (to_string(p) == name) return p;
    }
    throw std::invalid_argument("unknown provenance '" + name + "'");
}

VirtualModule::VirtualModule(std::string label, ContextPtr ctx, std::optional<GradedHomology> homology,
                             CharElement euler, Provenance provenance, std::string note)
    : label_(std::move(label)),
      ctx_(std::move(ctx)),
      homology_(std::move(homology)),
      euler_(std::move(euler)),
      provenance_(provenance),
      note_(std::move(note)) {
    if (!ctx_) throw std::invalid_argument("module '" + label_ + "' has no context");
    if (euler_.rank() != ctx_->rank()) throw std::invalid_argument("module '" + label_ + "': Euler class rank");
    if (homology_) {
        if (homology_->positive_system() != ctx_->positive_system()) {
            throw std::invalid_argument("module '" + label_ + "': homology positive system differs from the context's");
        }
        if (euler_class(*homology_) != euler_) {
            throw std::invalid_argument("module '" + label_ + "': Euler class disagrees with its homology");
        }
    }
    if (provenance_ == Provenance::standard_open && !euler_.is_zero()) {
        throw std::invalid_argument("module '" + label_ + "': open-orbit class must be zero");
    }
}

VirtualModule compact_irreducible(const Weight& lambda, const ContextPtr& ctx, KoszulSolver* solver) {
    if (!ctx || !ctx->is_compact()) throw std::invalid_argument("compact_irreducible needs a compact context");
    const RootSystem& rs = ctx->root_system();
    if (lambda.rank() != rs.rank() || !lambda.is_dominant()) {
        throw std::invalid_argument("compact_irreducible: " + lambda.to_string() + " is not dominant");
    }
    GradedHomology h = solver ? solver->homology(lambda, ctx->positive_system())
                              : koszul_n_homology(lambda, ctx->positive_system(), rs);
    CharElement xi = euler_class(h);
    return VirtualModule("V" + lambda.to_string(), ctx, std::move(h), std::move(xi), Provenance::compact_irreducible);
}

namespace {

void require_datum(const GeometricDatum& d) {
    if (!d.ctx) throw std::invalid_argument("geometric datum without context");
    if (!d.ctx->equal_rank()) throw std::invalid_argument("standard classes need an equal-rank context");
    if (d.v.rank() != d.ctx->rank()) throw std::invalid_argument("datum weight has the wrong rank");
    if (d.closed && d.s != d.ctx->orbit_dim()) {
        throw std::invalid_argument("closed-orbit datum has s = " + std::to_string(d.s) + ", context fixes s = " +
                                    std::to_string(d.ctx->orbit_dim()));
    }
}

std::string datum_label(const std::string& prefix, const GeometricDatum& d) {
    return prefix + (d.closed ? "closed" : "open") + d.v.to_string();
}

}  // namespace

VirtualModule standard_module_class(const GeometricDatum& datum) {
    require_datum(datum);
    const PairContext& ctx = *datum.ctx;
    const std::size_t n = ctx.positive_system().size();
    if (!datum.closed) {
        return VirtualModule(datum_label("std:", datum), datum.ctx, GradedHomology(ctx.rank(), ctx.positive_system()),
                             CharElement(ctx.rank()), Provenance::standard_open);
    }
    const int global = (datum.s + static_cast<int>(n)) % 2 == 0 ? 1 : -1;
    CharElement xi(ctx.rank());
    GradedHomology h(ctx.rank(), ctx.positive_system());
    bool model_fits = true;
    for (const WeylElement& w : ctx.w0().elements()) {
        const Weight mu = w.act(datum.v) + ctx.rho() - w.act(ctx.rho());
        xi.add_term(mu, global * w.sign());
        const std::size_t len = relative_length(w, ctx.positive_system());
        if (len > static_cast<std::size_t>(datum.s)) {
            model_fits = false;
            continue;
        }
        h.add_to_degree(n - datum.s + len, CharElement::monomial(mu));
    }
    std::optional<GradedHomology> homology;
    if (model_fits) homology = std::move(h);
    return VirtualModule(datum_label("std:", datum), datum.ctx, std::move(homology), std::move(xi),
                         Provenance::standard_closed, model_fits ? "" : "no homology model: l(w) > s on W0");
}

VirtualModule dual_standard_class(const GeometricDatum& datum) {
    require_datum(datum);
    const PairContext& ctx = *datum.ctx;
    if (!datum.closed) {
        return VirtualModule(datum_label("dual:", datum), datum.ctx,
                             GradedHomology(ctx.rank(), ctx.positive_system()), CharElement(ctx.rank()),
                             Provenance::dual_of, "dual of an open-orbit class is zero");
    }
    const int global = datum.s % 2 == 0 ? 1 : -1;
    CharElement xi(ctx.rank());
    for (const WeylElement& w : ctx.w0().elements()) {
        xi.add_term(ctx.rho() + w.act(ctx.rho()) - w.act(datum.v), global * w.sign());
    }
    // Homology as the dual of the standard model, when that model exists.
    std::optional<GradedHomology> homology;
    const VirtualModule original = standard_module_class(datum);
    if (original.homology()) homology = dual_homology(*original.homology(), ctx);
    return VirtualModule(datum_label("dual:", datum), datum.ctx, std::move(homology), std::move(xi),
                         Provenance::dual_of);
}

VirtualModule dual_module(const VirtualModule& m) {
    const PairContext& ctx = *m.context();
    std::optional<GradedHomology> homology;
    if (m.homology()) homology = dual_homology(*m.homology(), ctx);
    return VirtualModule("dual(" + m.label() + ")", m.context(), std::move(homology), dual_class(m.euler(), ctx),
                         Provenance::dual_of);
}

std::vector<VirtualModule> sl2_presets(int lo, int hi) {
    if (lo > hi) throw std::invalid_argument("sl2_presets: empty weight range");
    const ContextPtr ctx = sl2_context();
    std::vector<VirtualModule> out;
    for (int mu = lo; mu <= hi; ++mu) {
        const GeometricDatum d{true, Weight({mu}), ctx->orbit_dim(), ctx};
        const VirtualModule m = standard_module_class(d);
        out.emplace_back((mu >= 0 ? "DS+" : "DS") + std::to_string(mu), ctx, m.homology(), m.euler(),
                         Provenance::standard_closed);
    }
    const VirtualModule ps = standard_module_class(GeometricDatum{false, Weight({0}), 0, ctx});
    out.emplace_back("PS", ctx, ps.homology(), ps.euler(), Provenance::standard_open);
    return out;
}

VirtualModule unequal_rank_stub(const std::string& label, const ContextPtr& ctx) {
    ContextPtr c = ctx ? ctx : unequal_rank_context(build_root_system('A', 1), 1);
    if (c->equal_rank()) throw std::invalid_argument("unequal_rank_stub needs an unequal-rank context");
    // Any class will do; the pairings never look past the context.
    return VirtualModule(label, c, std::nullopt, CharElement::monomial(c->root_system().zero()),
                         Provenance::external, "unequal-rank stub");
}

bool same_context(const PairContext& a, const PairContext& b) {
    if (&a == &b) return true;
    if (a.root_system().name() != b.root_system().name() || a.positive_system() != b.positive_system() ||
        a.equal_rank() != b.equal_rank() || a.split_rank() != b.split_rank() || a.orbit_dim() != b.orbit_dim() ||
        a.w0_order() != b.w0_order()) {
        return false;
    }
    for (const WeylElement& w : a.w0().elements()) {
        if (!b.w0().contains(w)) return false;
    }
    return true;
}

VirtualModule linear_combination(const std::string& label,
                                 const std::vector<std::pair<BigInt, const VirtualModule*>>& terms) {
    if (terms.empty()) throw std::invalid_argument("linear_combination of nothing");
    const ContextPtr& ctx = terms.front().second->context();
    CharElement xi(ctx->rank());
    std::optional<GradedHomology> h = GradedHomology(ctx->rank(), ctx->positive_system());
    for (const auto& [k, m] : terms) {
        if (!same_context(*m->context(), *ctx)) throw std::invalid_argument("linear_combination across contexts");
        xi += k * m->euler();
        if (h && m->homology()) h->add_scaled(k, *m->homology());
        else h.reset();
    }
    return VirtualModule(label, ctx, std::move(h), std::move(xi), Provenance::external);
}

PairingValue pair(const VirtualModule& a, const VirtualModule& b, PairingKind kind) {
    if (!same_context(*a.context(), *b.context())) {
        throw std::invalid_argument("cannot pair '" + a.label() + "' with '" + b.label() + "': contexts differ");
    }
    const PairContext& ctx = *a.context();
    switch (kind) {
        case PairingKind::multiplicity: {
            if (!ctx.is_compact()) {
                throw std::invalid_argument("multiplicity pairing on the non-compact context '" + ctx.preset() + "'");
            }
            // The character is recovered from the Euler class by exact division.
            CharElement chi = a.euler();
            CharElement chi2 = b.euler();
            for (const Weight& alpha : ctx.positive_system()) {
                auto q = divide_by_one_minus(chi, alpha);
                auto q2 = divide_by_one_minus(chi2, alpha);
                if (!q || !q2) throw std::invalid_argument("Euler class is not divisible by the half denominator");
                chi = std::move(*q);
                chi2 = std::move(*q2);
            }
            return multiplicity_pairing(chi, chi2, ctx);
        }
        case PairingKind::elliptic: return elliptic_pairing(a.euler(), b.euler(), ctx);
        case PairingKind::homological:
            if (!ctx.equal_rank()) return pairing_unequal_rank(a.euler(), b.euler(), ctx);
            if (!a.homology() || !b.homology()) {
                throw std::invalid_argument("homological pairing needs homology for '" +
                                            (a.homology() ? b.label() : a.label()) + "'");
            }
            return homological_pairing(*a.homology(), *b.homology(), ctx);
    }
    throw std::logic_error("unreachable pairing kind");
}

Catalog compact_catalog(const RootSystem& rs, int bound, KoszulSolver* solver) {
    Catalog c{compact_context(rs), {}};
    std::optional<KoszulSolver> own;
    if (!solver) solver = &own.emplace(rs);
    for (const Weight& lambda : dominant_box(rs.rank(), bound)) c.modules.push_back(compact_irreducible(lambda, c.context, solver));
    return c;
}

Catalog sl2_catalog(int lo, int hi) {
    std::vector<VirtualModule> modules = sl2_presets(lo, hi);
    ContextPtr ctx = modules.front().context();
    return {std::move(ctx), std::move(modules)};
}

Catalog unequal_rank_catalog(std::size_t count) {
    Catalog c{unequal_rank_context(build_root_system('A', 1), 1), {}};
    for (std::size_t i = 0; i < count; ++i) c.modules.push_back(unequal_rank_stub("stub" + std::to_string(i), c.context));
    return c;
}

std::vector<std::vector<PairingValue>> pairing_matrix(const Catalog& catalog, PairingKind kind) {
    std::vector<std::vector<PairingValue>> out;
    for (const VirtualModule& a : catalog.modules) {
        auto& row = out.emplace_back();
        for (const VirtualModule& b : catalog.modules) row.push_back(pair(a, b, kind));
    }
    return out;
}

}  // namespace hcpair
