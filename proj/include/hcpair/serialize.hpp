#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "hcpair/characters.hpp"
#include "hcpair/pairing.hpp"
#include "hcpair/zoo.hpp"

namespace hcpair {

using Json = nlohmann::ordered_json;

Json weight_to_json(const Weight& w);
Weight weight_from_json(const Json& j);

/// {"series", "rank", "positive_roots", "rho", "weyl_order"}.
Json to_json(const RootSystem& rs);

/// {"rank", "terms": [{"w": [...], "c": "decimal"}]}, terms sorted by weight.
Json to_json(const CharElement& c);
CharElement char_from_json(const Json& j);

/// {"degrees": [{"p", "class"}], "positive_system": [...]}.
Json to_json(const GradedHomology& h);
GradedHomology homology_from_json(const Json& j);

/// Root system type, positive system, W0 generators (matrices), orders, flags.
/// Reloading regenerates W0 from the generators.
Json to_json(const PairContext& ctx);
ContextPtr context_from_json(const Json& j);

Json to_json(const VirtualModule& m);
/// {"context": ..., "modules": [...]}.
Json to_json(const Catalog& c);
Catalog catalog_from_json(const Json& j);

/// {"kind", "left", "right", "value": "p/q", "context"} (plus "note" when set).
Json pairing_report(PairingKind kind, const VirtualModule& left, const VirtualModule& right,
                    const PairingValue& value);

/// Labels, the value matrix as "p/q" strings, and the flat list of reports.
Json pairing_matrix_report(const Catalog& catalog, PairingKind kind);

}  // namespace hcpair
