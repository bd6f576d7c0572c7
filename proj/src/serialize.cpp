#include "meshpoly/serialize.hpp"

#include <fstream>
#include <sstream>

namespace meshpoly {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw SchemaError(std::string("missing key \"") + key + "\"");
  return j.at(key);
}

std::string string_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_string()) throw SchemaError(std::string("key \"") + key + "\" must be a string");
  return v.get<std::string>();
}

// Objects may be given bare or wrapped in their top-level key.
const Json& unwrap(const Json& j, const char* key) {
  return (j.is_object() && j.contains(key)) ? j.at(key) : j;
}

}  // namespace

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::size_t line = 1, column = 1;
    const std::size_t end = std::min(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::ostringstream os;
    os << "parse error at line " << line << ", column " << column;
    throw ParseError(os.str(), line, column);
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Json to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j) {
  if (!j.is_string()) throw SchemaError("rational must be a \"num/den\" string");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw SchemaError(e.what());
  }
}

Json to_json(const Polynomial& p) {
  Json c = Json::array();
  for (const auto& v : p.coeffs()) c.push_back(to_json(v));
  return {{"basis", p.basis() == Basis::Monomial ? "monomial" : "pochhammer"}, {"coeffs", c}};
}

Polynomial polynomial_from_json(const Json& j) {
  const std::string basis = string_field(j, "basis");
  Basis b;
  if (basis == "monomial") b = Basis::Monomial;
  else if (basis == "pochhammer") b = Basis::Pochhammer;
  else throw SchemaError("unknown basis \"" + basis + "\"");
  const Json& c = field(j, "coeffs");
  if (!c.is_array()) throw SchemaError("coeffs must be an array");
  std::vector<Rational> coeffs;
  for (const auto& v : c) coeffs.push_back(rational_from_json(v));
  return Polynomial(std::move(coeffs), b);
}

Json to_json(const FiniteDifferenceOperator& T) {
  Json c = Json::array();
  for (const auto& q : T.coeffs()) c.push_back(to_json(q));
  return {{"op", {{"coeffs", c}, {"step", to_json(T.step())}}}};
}

FiniteDifferenceOperator operator_from_json(const Json& j) {
  const Json& op = unwrap(j, "op");
  const Json& c = field(op, "coeffs");
  if (!c.is_array()) throw SchemaError("op.coeffs must be an array");
  std::vector<Polynomial> coeffs;
  for (const auto& q : c) coeffs.push_back(polynomial_from_json(q));
  const Rational step = op.contains("step") ? rational_from_json(op.at("step")) : Rational(1);
  return FiniteDifferenceOperator(std::move(coeffs), step);
}

Json to_json(const DiagonalSequence& A) {
  if (A.phi()) return {{"sequence", {{"phi", to_json(*A.phi())}}}};
  Json v = Json::array();
  for (const auto& a : A.values()) v.push_back(to_json(a));
  return {{"sequence", {{"values", v}}}};
}

DiagonalSequence sequence_from_json(const Json& j) {
  const Json& s = unwrap(j, "sequence");
  if (s.is_object() && s.contains("phi")) return DiagonalSequence::generator(polynomial_from_json(s.at("phi")));
  const Json& v = field(s, "values");
  if (!v.is_array()) throw SchemaError("sequence.values must be an array");
  std::vector<Rational> values;
  for (const auto& a : v) values.push_back(rational_from_json(a));
  return DiagonalSequence::table(std::move(values));
}

Json to_json(const ClassSpec& spec) {
  return {{"mesh_bound", spec.mesh_bound ? to_json(*spec.mesh_bound) : Json(nullptr)},
          {"nonneg_roots", spec.require_nonneg_roots}};
}

ClassSpec class_spec_from_json(const Json& j) {
  ClassSpec spec;
  const Json& b = field(j, "mesh_bound");
  if (!b.is_null()) spec.mesh_bound = rational_from_json(b);
  const Json& n = field(j, "nonneg_roots");
  if (!n.is_boolean()) throw SchemaError("nonneg_roots must be a boolean");
  spec.require_nonneg_roots = n.get<bool>();
  return spec;
}

Json to_json(const Transform& t) {
  Json j = {{"kind", transform_kind(t)}};
  if (const auto* o = std::get_if<transform::Operator>(&t)) j["op"] = to_json(o->op).at("op");
  if (const auto* d = std::get_if<transform::DerivativeRiesz>(&t)) j["lambda"] = to_json(d->lambda);
  if (const auto* d = std::get_if<transform::Diagonal>(&t)) j["sequence"] = to_json(d->seq).at("sequence");
  if (const auto* d = std::get_if<transform::ClassicalDiagonal>(&t))
    j["sequence"] = to_json(d->seq).at("sequence");
  if (const auto* b = std::get_if<transform::Bullet>(&t)) {
    j["q"] = to_json(b->q);
    j["d"] = b->d;
  }
  return j;
}

Transform transform_from_json(const Json& j) {
  const std::string kind = string_field(j, "kind");
  if (kind == "identity") return transform::Identity{};
  if (kind == "operator") return transform::Operator{operator_from_json(field(j, "op"))};
  if (kind == "derivative_riesz") return transform::DerivativeRiesz{rational_from_json(field(j, "lambda"))};
  if (kind == "diagonal") return transform::Diagonal{sequence_from_json(field(j, "sequence"))};
  if (kind == "classical_diagonal") return transform::ClassicalDiagonal{sequence_from_json(field(j, "sequence"))};
  if (kind == "bullet") {
    const Json& d = field(j, "d");
    if (!d.is_number_unsigned()) throw SchemaError("bullet d must be a non-negative integer");
    return transform::Bullet{polynomial_from_json(field(j, "q")), d.get<std::size_t>()};
  }
  if (kind == "brenti") return transform::Brenti{};
  throw SchemaError("unknown transform kind \"" + kind + "\"");
}

Json to_json(const Witness& w) {
  static const char* const kinds[] = {"not_in_class", "alternating_signs", "proper_position"};
  Json j = {{"kind", kinds[static_cast<int>(w.kind)]},
            {"input", to_json(w.input)},
            {"transform", to_json(w.transform)},
            {"image", to_json(w.image)},
            {"violated", to_json(w.violated)},
            {"detail", w.detail}};
  if (w.partner) j["partner"] = to_json(*w.partner);
  return j;
}

Witness witness_from_json(const Json& j) {
  Witness w;
  const std::string kind = string_field(j, "kind");
  if (kind == "not_in_class") w.kind = Witness::Kind::NotInClass;
  else if (kind == "alternating_signs") w.kind = Witness::Kind::AlternatingSigns;
  else if (kind == "proper_position") w.kind = Witness::Kind::ProperPosition;
  else throw SchemaError("unknown witness kind \"" + kind + "\"");
  w.input = polynomial_from_json(field(j, "input"));
  w.transform = transform_from_json(field(j, "transform"));
  w.image = polynomial_from_json(field(j, "image"));
  w.violated = class_spec_from_json(field(j, "violated"));
  if (j.contains("partner")) w.partner = polynomial_from_json(j.at("partner"));
  if (j.contains("detail") && j.at("detail").is_string()) w.detail = j.at("detail").get<std::string>();
  return w;
}

Json certificate_json(const std::string& claim, const Witness& w) {
  return {{"claim", claim}, {"certificate", to_json(w)}};
}

Json to_json(const Verdict& v) {
  Json j = {{"claim", v.claim_id},
            {"status", status_name(v.status)},
            {"checked", v.checked},
            {"skipped", v.skipped},
            {"note", v.note}};
  if (v.witness) j["witness"] = to_json(*v.witness);
  return j;
}

std::string dump_line(const Json& j) { return j.dump(); }

}  // namespace meshpoly
