#pragma once

#include <json.hpp>

#include "statuslab/claims.hpp"
#include "statuslab/status.hpp"
#include "statuslab/tree.hpp"

namespace statuslab {

/// {n, selector, values[], min, min_set[], max, max_set[]}
nlohmann::ordered_json status_report_json(const Tree& t, Selector sel);

/// {"n": .., "d": ..} or {"n": .., "max_degree": ..}
nlohmann::ordered_json params_json(const ClaimParams& params);

/// {claim, params, universe, bound, violations[], extremal[],
///  characterization_agreement, seconds}; set-valued fields hold canonical
/// encodings in sorted order.
nlohmann::ordered_json claim_report_json(const ClaimReport& report);

}  // namespace statuslab
