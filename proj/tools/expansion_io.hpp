#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "fpa/expansions.hpp"

namespace fpa::io {

enum class Basis { C, Q, Taylor };

/// On-disk expansion: {params{lambda, beta}, basis, coeffs [[re, im], ...],
/// trust_radius}. trust_radius is only meaningful for taylor documents.
struct ExpansionDoc {
  FpmParams params;
  Basis basis = Basis::Q;
  std::vector<Complex> coeffs;
  double trust_radius = 0.0;
};

const char* to_string(Basis b);

/// Throws ArgumentError on any malformed field.
ExpansionDoc parse_expansion(const nlohmann::json& j);
ExpansionDoc read_expansion(const std::string& path);
nlohmann::json to_json(const ExpansionDoc& doc);

nlohmann::json complex_json(Complex z);
nlohmann::json coeffs_json(const std::vector<Complex>& v);
nlohmann::json params_json(const FpmParams& p);

CExpansion as_c(const ExpansionDoc& doc);
QExpansion as_q(const ExpansionDoc& doc);
TaylorSeries as_taylor(const ExpansionDoc& doc);

ExpansionDoc from_q(const QExpansion& q);
ExpansionDoc from_taylor(const TaylorSeries& u, const FpmParams& params);

}  // namespace fpa::io
