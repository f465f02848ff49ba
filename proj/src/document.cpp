#include "rrmf/document.hpp"

#include <sstream>

namespace rrmf {

using nlohmann::json;

namespace {

const char* kind_name(DocKind k) {
  switch (k) {
    case DocKind::Quaternion:
      return "quaternion";
    case DocKind::Complex:
      return "complex";
    case DocKind::Real:
      return "real";
  }
  return "quaternion";
}

Scalar scalar_from(const json& j, unsigned base) {
  if (!j.is_string()) throw ParseError("scalars must be JSON strings, got " + j.dump());
  return Scalar::parse(j.get<std::string>(), base);
}

const json& array_field(const json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
  return j;
}

template <std::size_t N>
std::array<Scalar, N> tuple_from(const json& j, unsigned base, const char* what) {
  if (!j.is_array() || j.size() != N) {
    throw ParseError(std::string(what) + " coefficient must be an array of " + std::to_string(N) + " strings");
  }
  std::array<Scalar, N> out;
  for (std::size_t k = 0; k < N; ++k) out[k] = scalar_from(j[k], base);
  return out;
}

void note_base(unsigned& found, const Scalar& s) {
  if (s.is_rational()) return;
  if (found != 0 && found != s.base()) throw SurdMismatch("polynomial mixes surd bases");
  found = s.base();
}

}  // namespace

PolyDocument PolyDocument::of(const QuatPoly& a, unsigned sqrt_base) {
  PolyDocument d;
  d.sqrt_base = sqrt_base == 0 ? surd_base_of(a) : sqrt_base;
  d.kind = DocKind::Quaternion;
  d.quat = a;
  return d;
}

unsigned surd_base_of(const QuatPoly& a) {
  unsigned base = 0;
  for (const auto& c : a.coefficients()) {
    for (const auto& s : c.components()) note_base(base, s);
  }
  return base;
}

RealPoly real_poly_from_json(const json& j, unsigned base) {
  std::vector<Scalar> c;
  for (const auto& e : array_field(j, "real polynomial")) c.push_back(scalar_from(e, base));
  return RealPoly(std::move(c));
}

json real_poly_json(const RealPoly& p) {
  json out = json::array();
  for (const auto& c : p.coefficients()) out.push_back(c.to_string());
  return out;
}

json complex_poly_json(const ComplexPoly& p) {
  json out = json::array();
  for (const auto& c : p.coefficients()) out.push_back({c.re.to_string(), c.im.to_string()});
  return out;
}

json quat_poly_json(const QuatPoly& p) {
  json out = json::array();
  for (const auto& c : p.coefficients()) {
    out.push_back({c.w.to_string(), c.x.to_string(), c.y.to_string(), c.z.to_string()});
  }
  return out;
}

PolyDocument document_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("document must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (key != "sqrt_base" && key != "kind" && key != "coefficients" && key != "certificate" && key != "metadata") {
      throw ParseError("unknown document field '" + key + "'");
    }
  }
  PolyDocument doc;
  if (j.contains("sqrt_base")) {
    const json& b = j["sqrt_base"];
    if (!b.is_number_integer() || b.get<long long>() < 0) throw ParseError("sqrt_base must be a non-negative integer");
    doc.sqrt_base = b.get<unsigned>();
  }
  if (!is_valid_surd_base(doc.sqrt_base)) throw ParseError("sqrt_base must be 0 or squarefree >= 2");
  const std::string kind = j.value("kind", std::string("quaternion"));
  if (kind == "quaternion") {
    doc.kind = DocKind::Quaternion;
  } else if (kind == "complex") {
    doc.kind = DocKind::Complex;
  } else if (kind == "real") {
    doc.kind = DocKind::Real;
  } else {
    throw ParseError("unknown kind '" + kind + "'");
  }
  if (!j.contains("coefficients")) throw ParseError("missing coefficients");
  const json& coeffs = array_field(j["coefficients"], "coefficients");
  const unsigned base = doc.sqrt_base;
  switch (doc.kind) {
    case DocKind::Quaternion: {
      std::vector<Quaternion> c;
      for (const auto& e : coeffs) {
        auto [w, x, y, z] = tuple_from<4>(e, base, "quaternion");
        c.emplace_back(w, x, y, z);
      }
      doc.quat = QuatPoly(std::move(c));
      break;
    }
    case DocKind::Complex: {
      std::vector<Complex> c;
      for (const auto& e : coeffs) {
        auto [re, im] = tuple_from<2>(e, base, "complex");
        c.emplace_back(re, im);
      }
      doc.complex = ComplexPoly(std::move(c));
      break;
    }
    case DocKind::Real:
      doc.real = real_poly_from_json(coeffs, base);
      break;
  }
  if (j.contains("certificate")) {
    const json& c = j["certificate"];
    if (!c.is_object() || !c.contains("a") || !c.contains("b")) throw ParseError("certificate needs fields a and b");
    doc.certificate = Certificate{real_poly_from_json(c["a"], base), real_poly_from_json(c["b"], base)};
  }
  if (j.contains("metadata")) doc.metadata = j["metadata"];
  return doc;
}

PolyDocument parse_document(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  try {
    return document_from_json(j);
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad document: ") + e.what());
  }
}

json document_to_json(const PolyDocument& doc) {
  json j;
  j["sqrt_base"] = doc.sqrt_base;
  j["kind"] = kind_name(doc.kind);
  switch (doc.kind) {
    case DocKind::Quaternion:
      j["coefficients"] = quat_poly_json(doc.quat);
      break;
    case DocKind::Complex:
      j["coefficients"] = complex_poly_json(doc.complex);
      break;
    case DocKind::Real:
      j["coefficients"] = real_poly_json(doc.real);
      break;
  }
  if (doc.certificate) j["certificate"] = {{"a", real_poly_json(doc.certificate->a)}, {"b", real_poly_json(doc.certificate->b)}};
  if (!doc.metadata.is_null()) j["metadata"] = doc.metadata;
  return j;
}

std::string serialize_document(const PolyDocument& doc) { return document_to_json(doc).dump(2) + "\n"; }

std::string pretty(const QuatPoly& a) {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = a.degree(); k >= 0; --k) {
    const Quaternion& c = a.coefficients()[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << '(' << c << ')';
    if (k == 1) os << " x";
    if (k > 1) os << " x^" << k;
  }
  return os.str();
}

}  // namespace rrmf
