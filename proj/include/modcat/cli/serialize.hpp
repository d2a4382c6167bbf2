#pragma once

#include "json.hpp"
#include "modcat/condense/condense.hpp"
#include "modcat/exact/cycnum.hpp"
#include "modcat/fusion/modular.hpp"
#include "modcat/fusion/ring.hpp"
#include "modcat/golden/audit.hpp"

namespace modcat::cli {

using Json = nlohmann::json;

/// {"order": N, "num": [...], "den": [...], "text": "..."}: power-basis
/// coefficient num[i]/den[i] as decimal strings, plus the canonical text.
Json to_json(const exact::CycNum& value);
/// Inverse of to_json; the text field is checked against the coefficients.
exact::CycNum cycnum_from_json(const Json& j);

/// {"labels", "unit", "dual", "N"} with N flat in (i, j, k) order.
Json to_json(const fusion::FusionRing& ring);
fusion::FusionRing ring_from_json(const Json& j);

/// {"ring", "dims", "twists", "S"}.
Json to_json(const fusion::ModularData& md);
fusion::ModularData modular_from_json(const Json& j);

/// Simples with their ambient images, the modular data and the search
/// statistics of the split resolution.
Json to_json(const condense::CondensedCategory& cc);

/// {"lines", "notes", "summary"}.
Json to_json(const golden::Audit& audit);

}  // namespace modcat::cli
