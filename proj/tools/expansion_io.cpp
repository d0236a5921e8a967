#include "expansion_io.hpp"

#include <cmath>
#include <fstream>
#include <limits>

#include "fpa/transforms.hpp"

namespace fpa::io {

using nlohmann::json;

const char* to_string(Basis b) {
  switch (b) {
    case Basis::C: return "C";
    case Basis::Q: return "Q";
    case Basis::Taylor: return "taylor";
  }
  return "?";
}

namespace {

Complex parse_complex(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    return {j[0].get<double>(), j[1].get<double>()};
  }
  throw ArgumentError("coefficient must be a number or a [re, im] pair, got " + j.dump());
}

}  // namespace

ExpansionDoc parse_expansion(const json& j) {
  if (!j.is_object()) throw ArgumentError("expansion document must be an object");
  for (const char* key : {"params", "basis", "coeffs"}) {
    if (!j.contains(key)) throw ArgumentError(std::string("expansion document is missing '") + key + "'");
  }
  const json& p = j.at("params");
  if (!p.is_object() || !p.contains("lambda") || !p.contains("beta") || !p["lambda"].is_number() ||
      !p["beta"].is_number()) {
    throw ArgumentError("params must hold numeric lambda and beta");
  }
  ExpansionDoc doc{FpmParams(p["lambda"].get<double>(), p["beta"].get<double>()), Basis::Q, {}, 0.0};

  const json& b = j.at("basis");
  if (!b.is_string()) throw ArgumentError("basis must be a string");
  const std::string basis = b.get<std::string>();
  if (basis == "C") {
    doc.basis = Basis::C;
  } else if (basis == "Q") {
    doc.basis = Basis::Q;
  } else if (basis == "taylor") {
    doc.basis = Basis::Taylor;
  } else {
    throw ArgumentError("basis must be C, Q or taylor, got '" + basis + "'");
  }

  const json& c = j.at("coeffs");
  if (!c.is_array()) throw ArgumentError("coeffs must be an array");
  for (const auto& x : c) doc.coeffs.push_back(parse_complex(x));

  doc.trust_radius = kDefaultTrustRadius;
  if (j.contains("trust_radius")) {
    const json& t = j["trust_radius"];
    if (t.is_null()) {
      doc.trust_radius = std::numeric_limits<double>::infinity();
    } else if (t.is_number() && t.get<double>() > 0.0) {
      doc.trust_radius = t.get<double>();
    } else {
      throw ArgumentError("trust_radius must be a positive number or null");
    }
  }
  return doc;
}

ExpansionDoc read_expansion(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ArgumentError("cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw ArgumentError("'" + path + "' is not valid JSON: " + e.what());
  }
  return parse_expansion(j);
}

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

json coeffs_json(const std::vector<Complex>& v) {
  json out = json::array();
  for (const auto& z : v) out.push_back(complex_json(z));
  return out;
}

json params_json(const FpmParams& p) { return {{"lambda", p.lambda()}, {"beta", p.beta()}}; }

json to_json(const ExpansionDoc& doc) {
  json j{{"params", params_json(doc.params)}, {"basis", to_string(doc.basis)}, {"coeffs", coeffs_json(doc.coeffs)}};
  if (doc.basis == Basis::Taylor) {
    j["trust_radius"] = std::isfinite(doc.trust_radius) ? json(doc.trust_radius) : json(nullptr);
  }
  return j;
}

CExpansion as_c(const ExpansionDoc& doc) {
  if (doc.basis != Basis::C) throw ArgumentError(std::string("expected a C expansion, got ") + to_string(doc.basis));
  return {doc.params, doc.coeffs};
}

QExpansion as_q(const ExpansionDoc& doc) {
  if (doc.basis != Basis::Q) throw ArgumentError(std::string("expected a Q expansion, got ") + to_string(doc.basis));
  return {doc.params, doc.coeffs};
}

TaylorSeries as_taylor(const ExpansionDoc& doc) {
  if (doc.basis != Basis::Taylor) {
    throw ArgumentError(std::string("expected a taylor series, got ") + to_string(doc.basis));
  }
  return {doc.coeffs, doc.trust_radius};
}

ExpansionDoc from_q(const QExpansion& q) { return {q.params, Basis::Q, q.coeffs, 0.0}; }

ExpansionDoc from_taylor(const TaylorSeries& u, const FpmParams& params) {
  return {params, Basis::Taylor, u.coeffs, u.trust_radius};
}

}  // namespace fpa::io
