#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>
#include <sstream>

#include "rrmf/construct.hpp"
#include "rrmf/document.hpp"
#include "rrmf/regression.hpp"

using namespace rrmf;

namespace {

std::string slurp(const std::string& name) {
  std::ifstream in(std::string(RRMF_FIXTURES) + "/" + name);
  REQUIRE(in);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("fixtures match the built-in examples") {
  for (const auto& [file, ex] : {std::pair{"example1.json", quintic_example1()},
                                 std::pair{"example2.json", quintic_example2()},
                                 std::pair{"example3.json", quintic_example3()}}) {
    const PolyDocument d = parse_document(slurp(file));
    CHECK(d.kind == DocKind::Quaternion);
    CHECK(d.quat == ex.a);
    REQUIRE(d.certificate);
    CHECK(d.certificate->gamma() == ex.certificate.gamma());
  }
  CHECK(parse_document(slurp("example3.json")).sqrt_base == 15);
  CHECK(parse_document(slurp("cubic.json")).quat == catalog_cubic());
}

TEST_CASE("serialization round trip") {
  for (const QuatPoly& a : {catalog_cubic(), quintic_example3().a, make_family_n(6), QuatPoly{}}) {
    PolyDocument d = PolyDocument::of(a, surd_base_of(a));
    d.metadata = {{"note", "round trip"}};
    CHECK(parse_document(serialize_document(d)) == d);
  }
  PolyDocument c;
  c.kind = DocKind::Complex;
  c.complex = ComplexPoly{Complex(1, -2), Complex(0, 1)};
  CHECK(parse_document(serialize_document(c)) == c);
  PolyDocument r;
  r.kind = DocKind::Real;
  r.real = desc({1, -4, 5});
  r.certificate = Certificate{desc({1, -2}), desc({-1})};
  CHECK(parse_document(serialize_document(r)) == r);
}

TEST_CASE("scalars travel as text") {
  const nlohmann::json j = document_to_json(PolyDocument::of(catalog_cubic()));
  CHECK(j["coefficients"][3] == nlohmann::json({"0", "-1/3", "0", "0"}));
  CHECK(j["kind"] == "quaternion");
  CHECK(real_poly_json(desc({1, 0, -2})) == nlohmann::json({"-2", "0", "1"}));
  CHECK(real_poly_from_json(nlohmann::json({"1/2", "sqrt(15)"}), 15) ==
        RealPoly{Scalar(1, 2), Scalar::sqrt_of(15)});
}

TEST_CASE("surd bases") {
  CHECK(surd_base_of(catalog_cubic()) == 0);
  CHECK(surd_base_of(quintic_example3().a) == 15);
}

TEST_CASE("malformed documents") {
  CHECK_THROWS_AS(parse_document("{"), ParseError);
  CHECK_THROWS_AS(parse_document(R"j({"kind":"quaternion","coefficients":[["1","0","0"]]})j"), ParseError);
  CHECK_THROWS_AS(parse_document(R"j({"kind":"octonion","coefficients":[]})j"), ParseError);
  CHECK_THROWS_AS(parse_document(R"j({"kind":"real","coefficients":["1"],"colour":"red"})j"), ParseError);
  CHECK_THROWS_AS(parse_document(R"j({"kind":"real","coefficients":["sqrt(15)"]})j"), ParseError);
  CHECK_THROWS_AS(parse_document(R"j({"sqrt_base":12,"kind":"real","coefficients":["1"]})j"), ParseError);
  CHECK_THROWS_AS(parse_document(R"j({"kind":"real","coefficients":[1]})j"), ParseError);
  CHECK_NOTHROW(parse_document(R"j({"sqrt_base":15,"kind":"real","coefficients":["sqrt(15)"]})j"));
}

TEST_CASE("pretty") {
  CHECK(pretty(QuatPoly{}) == "0");
  CHECK(pretty(QuatPoly{Quaternion(1), Quaternion::j()}).find(" x") != std::string::npos);
}
