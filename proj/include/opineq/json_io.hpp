#pragma once

#include <string>

#include "json.hpp"
#include "opineq/checks.hpp"
#include "opineq/hermitian.hpp"
#include "opineq/positive_map.hpp"

namespace opineq {

// Fixture formats. Square matrices are {"n", "re", "im"} with row-major
// nested arrays; "im" may be omitted for real data. Rectangular matrices
// (isometries) use {"rows", "cols", "re", "im"}. Doubles are written in
// shortest round-trip form, so reading back gives the identical value.

nlohmann::json matrix_to_json(const CMatrix& m);
nlohmann::json matrix_to_json(const HermitianMatrix& m);
/// Accepts either layout. Throws DomainError on malformed input.
CMatrix cmatrix_from_json(const nlohmann::json& j);
/// Square layout; the Hermitian check of HermitianMatrix applies.
HermitianMatrix hermitian_from_json(const nlohmann::json& j);

nlohmann::json vector_to_json(const CVector& v);
CVector vector_from_json(const nlohmann::json& j);

nlohmann::json interval_to_json(const SpectralInterval& iv);
SpectralInterval interval_from_json(const nlohmann::json& j);

/// {"variant": "unitary_mixture" | "pinching" | "compression" | "direct_sum"
///  | "induced_congruence", ...}. "identity" with "n" is also accepted on input.
nlohmann::json map_to_json(const PositiveMap& phi);
PositiveMap map_from_json(const nlohmann::json& j);

nlohmann::json instance_to_json(const CheckInstance& inst);
CheckInstance instance_from_json(const nlohmann::json& j);

nlohmann::json result_to_json(const CheckResult& r);

/// One "path = value" line per leaf, keys sorted. Lossless: the
/// leaves are dumped as JSON literals.
std::string json_to_text(const nlohmann::json& j);

}  // namespace opineq
