#ifndef RRMF_DOCUMENT_HPP
#define RRMF_DOCUMENT_HPP

#include <optional>
#include <string>

#include "json.hpp"
#include "rrmf/classify.hpp"
#include "rrmf/poly.hpp"

namespace rrmf {

enum class DocKind { Quaternion, Complex, Real };

/// JSON polynomial document:
///   {"sqrt_base": d, "kind": "quaternion"|"complex"|"real",
///    "coefficients": [...ascending...], "certificate": {"a": [...], "b": [...]},
///    "metadata": {...}}
/// A quaternion coefficient is ["w","x","y","z"], a complex one ["re","im"],
/// a real one a bare string. Scalars always travel as text.
struct PolyDocument {
  unsigned sqrt_base = 0;
  DocKind kind = DocKind::Quaternion;
  QuatPoly quat;         // kind == Quaternion
  ComplexPoly complex;   // kind == Complex
  RealPoly real;         // kind == Real
  std::optional<Certificate> certificate;
  nlohmann::json metadata;  // null when absent

  static PolyDocument of(const QuatPoly& a, unsigned sqrt_base = 0);
  friend bool operator==(const PolyDocument&, const PolyDocument&) = default;
};

/// Throws ParseError on malformed JSON, unknown fields, bad scalars or mixed bases.
PolyDocument parse_document(const std::string& text);
PolyDocument document_from_json(const nlohmann::json& j);
nlohmann::json document_to_json(const PolyDocument& doc);
std::string serialize_document(const PolyDocument& doc);

/// Smallest valid base covering every scalar in A (0 when all rational).
unsigned surd_base_of(const QuatPoly& a);

nlohmann::json real_poly_json(const RealPoly& p);
nlohmann::json complex_poly_json(const ComplexPoly& p);
nlohmann::json quat_poly_json(const QuatPoly& p);
RealPoly real_poly_from_json(const nlohmann::json& j, unsigned base);

/// Human-readable polynomial, e.g. "(-1/3)i x^3 + j x^2 + k x + 1".
std::string pretty(const QuatPoly& a);

}  // namespace rrmf

#endif  // RRMF_DOCUMENT_HPP
