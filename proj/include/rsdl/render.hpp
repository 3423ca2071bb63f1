#pragma once

#include <string>

#include "rsdl/analysis.hpp"
#include "rsdl/enumerate.hpp"

namespace rsdl {

// Proof matrix as the usual text table: rows are instances, columns are
// derivation steps (displayed 1-based), consumed cells carry a trailing
// check mark.
std::string render_proof_table(const ProofMatrix& m);

// One-literal-per-tag listing of an extension, for the text CLI output.
std::string render_extension(const Extension& e);

std::string render_audit(const AuditReport& r);

}  // namespace rsdl
