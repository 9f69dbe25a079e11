#pragma once

#include <string>

#include "qrhc/hermitian.hpp"
#include "qrhc/json_writer.hpp"

namespace qrhc {

// Witness wire format: {"dim":d,"eigenvalues":[...],"basis":[[re,im],...]}
// with basis the row-major eigenvector matrix, so f = U diag(lambda) U^dagger
JsonValue operator_to_json(const HermitianOperator& f);
HermitianOperator operator_from_json(const std::string& text);

}  // namespace qrhc
