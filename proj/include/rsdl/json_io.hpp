#pragma once

#include <string>

#include <json.hpp>

#include "rsdl/analysis.hpp"
#include "rsdl/enumerate.hpp"
#include "rsdl/theory.hpp"

namespace rsdl {

// Extension JSON: multiset fields are sorted arrays with repetitions,
// literals rendered as "atom" / "~atom".
nlohmann::json extension_to_json(const Extension& e);
Extension extension_from_json(const nlohmann::json& j);

nlohmann::json enumerate_result_to_json(const EnumerateResult& r, Variant variant);
nlohmann::json proof_matrix_to_json(const ProofMatrix& m);
nlohmann::json validation_to_json(const ValidationReport& r);
nlohmann::json audit_to_json(const AuditReport& r);

}  // namespace rsdl
