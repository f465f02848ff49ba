// rrmf: command-line front end over the library.
//
// Exit codes: 0 success, 2 parse error, 3 precondition violation,
// 4 regression failure, 1 anything else.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "rrmf/construct.hpp"
#include "rrmf/document.hpp"
#include "rrmf/frames.hpp"
#include "rrmf/hodograph.hpp"
#include "rrmf/indicatrix.hpp"
#include "rrmf/regression.hpp"

using nlohmann::json;
using namespace rrmf;

namespace {

constexpr int kExitParse = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitRegression = 4;

std::string read_input(const std::string& path) {
  std::ostringstream os;
  if (path == "-") {
    os << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    os << in.rdbuf();
  }
  return os.str();
}

// Inline JSON, or a path to a file holding it.
json read_json_arg(const std::string& arg) {
  const std::string text = !arg.empty() && (arg[0] == '{' || arg[0] == '[') ? arg : read_input(arg);
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

QuatPoly require_quat(const PolyDocument& doc) {
  if (doc.kind != DocKind::Quaternion) throw PreconditionError("this command needs a quaternion polynomial document");
  if (doc.quat.is_zero()) throw PreconditionError("the polynomial is zero");
  return doc.quat;
}

std::uint64_t env_seed() {
  const char* s = std::getenv("RRMF_SEED");
  if (s == nullptr || *s == '\0') return 0;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(s, &end, 10);
  if (*end != '\0') throw ParseError("RRMF_SEED must be an unsigned integer");
  return v;
}

json quat_json(const Quaternion& q) { return {q.w.to_string(), q.x.to_string(), q.y.to_string(), q.z.to_string()}; }

json certificate_json(const Certificate& c) { return {{"a", real_poly_json(c.a)}, {"b", real_poly_json(c.b)}}; }

// ---- JSON spec helpers for construct

Scalar spec_scalar(const json& spec, const char* key, unsigned base, const Scalar& fallback = Scalar()) {
  if (!spec.contains(key)) return fallback;
  if (!spec[key].is_string()) throw ParseError(std::string(key) + " must be a string scalar");
  return Scalar::parse(spec[key].get<std::string>(), base);
}

Quaternion spec_quat(const json& spec, const char* key, unsigned base, const Quaternion& fallback = Quaternion()) {
  if (!spec.contains(key)) return fallback;
  const json& q = spec[key];
  if (!q.is_array() || q.size() != 4) throw ParseError(std::string(key) + " must be an array of 4 strings");
  std::array<Scalar, 4> c;
  for (std::size_t k = 0; k < 4; ++k) {
    if (!q[k].is_string()) throw ParseError(std::string(key) + " entries must be strings");
    c[k] = Scalar::parse(q[k].get<std::string>(), base);
  }
  return {c[0], c[1], c[2], c[3]};
}

unsigned spec_base(const json& spec) {
  const unsigned base = spec.value("sqrt_base", 0u);
  if (!is_valid_surd_base(base)) throw ParseError("sqrt_base must be 0 or squarefree >= 2");
  return base;
}

json verification_report(const QuatPoly& a) {
  json r;
  r["in_F0"] = is_in_F0(a);
  r["trivial"] = is_trivial(a).has_value();
  r["planar"] = is_planar(a);
  r["primitive"] = is_primitive(a);
  r["c_m"] = json::array();
  for (const auto& c : c_coefficients(a).values) r["c_m"].push_back(c.to_string());
  return r;
}

// ---- commands

int cmd_classify(const std::string& path, bool search, int max_degree, int budget_ms) {
  const PolyDocument doc = parse_document(read_input(path));
  const QuatPoly a = require_quat(doc);
  std::optional<SearchOptions> so;
  if (search) so = SearchOptions{max_degree, std::chrono::milliseconds(budget_ms), env_seed()};
  const Classification c = classify(a, doc.certificate, so);
  json out;
  out["in_widetilde"] = c.in_widetilde;
  out["in_F0"] = c.in_F0;
  out["trivial"] = c.trivial_witness.has_value();
  if (c.trivial_witness) {
    out["trivial_witness"] = {{"left_factor", quat_json(c.trivial_witness->left_factor)},
                              {"direction", quat_json(c.trivial_witness->direction)},
                              {"direction_norm2", c.trivial_witness->direction_norm2.to_string()}};
  }
  out["planar"] = c.planar;
  out["primitive"] = c.primitive;
  out["core_degree"] = c.core_degree;
  out["chi"] = complex_poly_json(c.chi);
  out["in_F"] = to_string(c.in_F.status);
  out["in_F_method"] = c.in_F.method;
  if (c.han_certificate) out["certificate"] = certificate_json(*c.han_certificate);
  out["notes"] = c.notes;
  std::cout << out.dump(2) << '\n';
  return 0;
}

int cmd_construct(const std::string& kind, const std::string& spec_arg) {
  const json spec = spec_arg.empty() ? json::object() : read_json_arg(spec_arg);
  if (!spec.is_object()) throw ParseError("spec must be a JSON object");
  const unsigned base = spec_base(spec);
  PolyDocument doc;
  json meta{{"construction", kind}};
  try {
    if (kind == "trivial") {
      std::vector<std::pair<Scalar, Scalar>> xy;
      if (!spec.contains("coefficients") || !spec["coefficients"].is_array()) {
        throw ParseError("trivial spec needs coefficients [[x, y], ...]");
      }
      for (const auto& e : spec["coefficients"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string()) {
          throw ParseError("trivial coefficients must be [\"x\", \"y\"] pairs");
        }
        xy.emplace_back(Scalar::parse(e[0].get<std::string>(), base), Scalar::parse(e[1].get<std::string>(), base));
      }
      doc = PolyDocument::of(make_trivial(spec_quat(spec, "C", base, Quaternion(1)), spec_quat(spec, "u", base), xy), base);
    } else if (kind == "cubic") {
      doc = PolyDocument::of(make_cubic({spec_quat(spec, "A1", base), spec_quat(spec, "A2", base),
                                         spec_scalar(spec, "s3", base), spec_quat(spec, "C", base, Quaternion(1))}),
                             base);
    } else if (kind == "cubic-monic") {
      doc = PolyDocument::of(
          make_cubic_monic(spec_quat(spec, "A1", base), spec_quat(spec, "A2", base), spec_scalar(spec, "s0", base)), base);
    } else if (kind == "quartic") {
      const QuarticResult r = make_quartic({spec_quat(spec, "A1", base), spec_quat(spec, "A2", base),
                                            spec_scalar(spec, "A3_j", base), spec_scalar(spec, "A3_k", base),
                                            spec_scalar(spec, "s3", base), spec_quat(spec, "C", base, Quaternion(1))});
      doc = PolyDocument::of(r.poly, base);
      meta["family_dimension"] = r.family_dimension;
      meta["family_directions"] = json::array();
      for (const auto& q : r.family) meta["family_directions"].push_back(quat_json(q));
      meta["nontrivial_by_span_conditions"] = r.nontrivial;
    } else if (kind == "family") {
      if (!spec.contains("n") || !spec["n"].is_number_integer()) throw ParseError("family spec needs integer n");
      doc = PolyDocument::of(make_family_n(spec["n"].get<int>()));
    } else if (kind == "f-element") {
      if (!spec.contains("B0") || !spec.contains("delta")) throw ParseError("f-element spec needs B0 and delta");
      const PolyDocument b0 = document_from_json({{"sqrt_base", base}, {"kind", "quaternion"}, {"coefficients", spec["B0"]}});
      const PolyDocument delta = document_from_json({{"sqrt_base", base}, {"kind", "complex"}, {"coefficients", spec["delta"]}});
      const FElement fe = make_f_element(b0.quat, delta.complex);
      doc = PolyDocument::of(fe.a, base);
      doc.certificate = fe.certificate;
    } else {
      throw ParseError("unknown construction kind '" + kind + "'");
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad spec: ") + e.what());
  }
  meta["verification"] = verification_report(doc.quat);
  if (doc.certificate) meta["verification"]["han_certificate"] = verify_han(doc.quat, doc.certificate->a, doc.certificate->b);
  doc.metadata = meta;
  std::cout << serialize_document(doc);
  return 0;
}

std::pair<double, double> parse_range(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw ParseError("range must be lo:hi");
  try {
    std::size_t used = 0;
    const std::string lo_s = text.substr(0, colon), hi_s = text.substr(colon + 1);
    const double lo = std::stod(lo_s, &used);
    if (used != lo_s.size()) throw ParseError("bad range");
    const double hi = std::stod(hi_s, &used);
    if (used != hi_s.size()) throw ParseError("bad range");
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw ParseError("range must be lo:hi with numeric bounds");
  }
}

int cmd_frames(const std::string& path, const std::string& frame, int samples, const std::string& range,
               const std::string& out_path, double rotate) {
  const auto kind = parse_frame_kind(frame);
  if (!kind) throw ParseError("--frame must be erf, rmf or frenet");
  if (samples <= 0) throw PreconditionError("--samples must be positive");
  const auto [lo, hi] = parse_range(range);
  const PolyDocument doc = parse_document(read_input(path));
  const QuatPoly a = require_quat(doc);
  SampleOptions opts;
  opts.kind = *kind;
  opts.normal_rotation = rotate;
  opts.certificate = doc.certificate;
  if (*kind == FrameKind::Rmf && !opts.certificate) {
    if (!is_in_F0(a)) throw PreconditionError("--frame rmf needs a certificate unless A is in F0");
    opts.certificate = Certificate{RealPoly::constant(Scalar(1)), RealPoly{}};
  }
  std::vector<double> xs;
  for (int k = 0; k < samples; ++k) xs.push_back(samples == 1 ? lo : lo + (hi - lo) * k / (samples - 1));
  const SampleReport rep = sample_frames(a, xs, opts);
  for (const auto& w : rep.warnings) std::cerr << "warning: " << w << '\n';
  if (out_path.empty() || out_path == "-") {
    write_csv(std::cout, rep.samples);
  } else {
    std::ofstream out(out_path);
    if (!out) throw PreconditionError("cannot write " + out_path);
    write_csv(out, rep.samples);
  }
  return 0;
}

Certificate certificate_from(const PolyDocument& doc, const std::string& a_arg, const std::string& b_arg) {
  if (!a_arg.empty() || !b_arg.empty()) {
    return {real_poly_from_json(read_json_arg(a_arg.empty() ? "[]" : a_arg), doc.sqrt_base),
            real_poly_from_json(read_json_arg(b_arg.empty() ? "[]" : b_arg), doc.sqrt_base)};
  }
  if (!doc.certificate) throw PreconditionError("no certificate: pass --a/--b or include one in the document");
  return *doc.certificate;
}

int cmd_verify_han(const std::string& path, const std::string& a_arg, const std::string& b_arg) {
  const PolyDocument doc = parse_document(read_input(path));
  const QuatPoly a = require_quat(doc);
  const Certificate c = certificate_from(doc, a_arg, b_arg);
  std::ostringstream lhs, rhs;
  lhs << han_fraction(a);
  rhs << han_fraction(c.a, c.b);
  const json out{{"holds", verify_han(a, c.a, c.b)}, {"han_fraction_A", lhs.str()}, {"han_fraction_ab", rhs.str()}};
  std::cout << out.dump(2) << '\n';
  return 0;
}

int cmd_reduce(const std::string& path, const std::string& a_arg, const std::string& b_arg) {
  const PolyDocument doc = parse_document(read_input(path));
  const QuatPoly a = require_quat(doc);
  const Certificate c = certificate_from(doc, a_arg, b_arg);
  const F0Reduction r = reduce_to_F0(a, c.gamma());
  PolyDocument out = PolyDocument::of(r.reduced, doc.sqrt_base);
  out.metadata = {{"in_F0", r.in_F0}, {"gcd", complex_poly_json(r.gcd)}};
  std::cout << serialize_document(out);
  return 0;
}

int cmd_search_gamma(const std::string& path, int max_degree, int budget_ms) {
  const PolyDocument doc = parse_document(read_input(path));
  const QuatPoly a = require_quat(doc);
  const auto found = search_gamma(a, {max_degree, std::chrono::milliseconds(budget_ms), env_seed()});
  json out{{"found", found.has_value()}};
  if (found) out["certificate"] = certificate_json(*found);
  std::cout << out.dump(2) << '\n';
  return 0;
}

int cmd_paper_examples(bool perturb) {
  BatteryOptions opts;
  opts.perturb_example1 = perturb;
  if (const char* s = std::getenv("RRMF_SEED"); s != nullptr && *s != '\0') opts.seed = env_seed();
  const std::vector<Check> checks = run_battery(opts);
  print_checks(std::cout, checks);
  std::size_t failed = 0;
  for (const auto& c : checks) failed += c.pass ? 0 : 1;
  std::cout << (checks.size() - failed) << "/" << checks.size() << " checks passed\n";
  return failed == 0 ? 0 : kExitRegression;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact classification and frames for polynomial curves with rational rotation-minimizing frames"};
  app.require_subcommand(1);

  std::string input = "-";
  bool search = false;
  int max_degree = 4, budget_ms = 10000;
  auto* classify_cmd = app.add_subcommand("classify", "classify a quaternion polynomial document");
  classify_cmd->add_option("input", input, "document path, - for stdin");
  classify_cmd->add_flag("--search", search, "try the certificate search when membership is unknown");
  classify_cmd->add_option("--max-degree", max_degree, "search: maximal degree of gamma");
  classify_cmd->add_option("--budget-ms", budget_ms, "search: time budget");

  std::string kind, spec;
  auto* construct_cmd = app.add_subcommand("construct", "build an element of a known family");
  construct_cmd->add_option("kind", kind, "trivial | cubic | cubic-monic | quartic | family | f-element")->required();
  construct_cmd->add_option("--spec", spec, "JSON object or path to one");

  std::string frame = "erf", range = "0:1", out_path;
  int samples = 100;
  double rotate = 0;
  auto* frames_cmd = app.add_subcommand("frames", "sample frames along the curve as CSV");
  frames_cmd->add_option("input", input, "document path, - for stdin");
  frames_cmd->add_option("--frame", frame, "erf | rmf | frenet");
  frames_cmd->add_option("--samples", samples, "number of samples");
  frames_cmd->add_option("--range", range, "parameter range lo:hi");
  frames_cmd->add_option("--out", out_path, "CSV path (default stdout)");
  frames_cmd->add_option("--rotate", rotate, "constant normal-plane rotation in radians");

  std::string a_arg, b_arg;
  auto* verify_cmd = app.add_subcommand("verify-han", "check the RRMF condition for a pair (a, b)");
  verify_cmd->add_option("input", input, "document path, - for stdin");
  verify_cmd->add_option("--a", a_arg, "real polynomial a as a JSON array of scalars");
  verify_cmd->add_option("--b", b_arg, "real polynomial b as a JSON array of scalars");

  auto* reduce_cmd = app.add_subcommand("reduce", "reduce A in F_gamma to an element of F0");
  reduce_cmd->add_option("input", input, "document path, - for stdin");
  reduce_cmd->add_option("--a", a_arg, "real part of gamma");
  reduce_cmd->add_option("--b", b_arg, "imaginary part of gamma");

  auto* search_cmd = app.add_subcommand("search-gamma", "heuristic search for a certificate (a, b)");
  search_cmd->add_option("input", input, "document path, - for stdin");
  search_cmd->add_option("--max-degree", max_degree, "maximal degree of gamma");
  search_cmd->add_option("--budget-ms", budget_ms, "time budget");

  bool perturb = false;
  auto* paper_cmd = app.add_subcommand("paper-examples", "run the regression battery");
  paper_cmd->add_flag("--perturb-example1", perturb, "add 1 to u of the first quintic example");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitParse;
  }

  try {
    if (*classify_cmd) return cmd_classify(input, search, max_degree, budget_ms);
    if (*construct_cmd) return cmd_construct(kind, spec);
    if (*frames_cmd) return cmd_frames(input, frame, samples, range, out_path, rotate);
    if (*verify_cmd) return cmd_verify_han(input, a_arg, b_arg);
    if (*reduce_cmd) return cmd_reduce(input, a_arg, b_arg);
    if (*search_cmd) return cmd_search_gamma(input, max_degree, budget_ms);
    if (*paper_cmd) return cmd_paper_examples(perturb);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition: " << e.what() << '\n';
    return kExitPrecondition;
  } catch (const InexactDivision& e) {
    std::cerr << "precondition: " << e.what() << '\n';
    return kExitPrecondition;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
