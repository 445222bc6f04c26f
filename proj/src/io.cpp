#include "succmin/io.hpp"

#include <fstream>

namespace succmin::io {

namespace {

const json& require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InvalidInput(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

Integer integer_from_json(const json& j) {
  Rational q = rational_from_json(j);
  if (!is_integer(q)) throw InvalidInput("expected an integer, got " + to_string(q));
  return numerator(q);
}

nfield::FieldElement element_from_json(const json& j, const nfield::NumberField& field) {
  if (!j.is_array()) throw InvalidInput("field element must be an array of coordinates");
  if (static_cast<int>(j.size()) != field.degree())
    throw InvalidInput("field element needs " + std::to_string(field.degree()) + " coordinates");
  VectorQ c(field.degree());
  for (int k = 0; k < field.degree(); ++k) c(k) = rational_from_json(j[static_cast<std::size_t>(k)]);
  return field.element(c);
}

std::vector<nfield::FieldElement> elements_from_json(const json& j, const nfield::NumberField& field) {
  if (!j.is_array()) throw InvalidInput("expected an array of field elements");
  std::vector<nfield::FieldElement> out;
  for (const auto& e : j) out.push_back(element_from_json(e, field));
  return out;
}

json constraint_json(const geometry::Constraint& c) {
  return json{{"a", to_json(c.a)}, {"b", to_json(c.b)}, {"label", c.label}};
}

}  // namespace

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw InvalidInput("expected a rational as an integer or a \"p/q\" string");
}

json to_json(const Rational& q) { return to_string(q); }

json to_json(const VectorQ& v) {
  json a = json::array();
  for (Index i = 0; i < v.size(); ++i) a.push_back(to_json(v(i)));
  return a;
}

FieldSpec parse_field_spec(const json& j) {
  const json& mp = require(j, "min_poly");
  if (!mp.is_array()) throw InvalidInput("min_poly must be an array");
  poly::PolyZ f;
  for (const auto& c : mp) f.push_back(integer_from_json(c));
  FieldSpec spec{nfield::NumberField(f), std::nullopt, {}};
  if (j.contains("basis")) spec.basis = elements_from_json(j.at("basis"), spec.field);
  if (j.contains("tower_generators")) spec.tower_generators = elements_from_json(j.at("tower_generators"), spec.field);
  return spec;
}

OrderSpec parse_order_spec(const json& j) {
  OrderSpec spec{parse_field_spec(j), std::nullopt, {}, std::nullopt};
  if (j.contains("x")) {
    const json& x = j.at("x");
    if (!x.is_array()) throw InvalidInput("x must be an array");
    VectorQ v(static_cast<Index>(x.size()));
    for (std::size_t i = 0; i < x.size(); ++i) v(static_cast<Index>(i)) = rational_from_json(x[i]);
    spec.x = v;
  }
  if (j.contains("M_values")) {
    for (const auto& m : j.at("M_values")) spec.m_values.push_back(integer_from_json(m));
  }
  if (j.contains("M_count")) {
    Integer c = integer_from_json(j.at("M_count"));
    if (c < 0 || c > 100000) throw InvalidInput("M_count out of range");
    spec.m_count = c.convert_to<int>();
  }
  return spec;
}

lattice::OrderBasis order_from_spec(const FieldSpec& spec) {
  if (spec.basis) return lattice::OrderBasis(spec.field, *spec.basis);
  return lattice::equation_order(spec.field);
}

nfield::Flag seed_flag(const FieldSpec& spec) {
  if (spec.basis) return nfield::Flag(*spec.basis, spec.field);
  std::vector<nfield::FieldElement> b;
  for (int k = 0; k < spec.field.degree(); ++k) b.push_back(spec.field.power_of_generator(k));
  return nfield::Flag(std::move(b), spec.field);
}

nfield::FlagType parse_flag_type(const json& j) {
  if (j.is_object() && j.contains("table")) {
    const json& t = j.at("table");
    if (!t.is_array() || t.empty()) throw InvalidInput("table must be a nonempty array of rows");
    const Index n = static_cast<Index>(t.size());
    Eigen::MatrixXi m(n, n);
    for (Index i = 0; i < n; ++i) {
      const json& row = t[static_cast<std::size_t>(i)];
      if (!row.is_array() || static_cast<Index>(row.size()) != n) throw InvalidInput("flag type table must be square");
      for (Index k = 0; k < n; ++k) {
        if (!row[static_cast<std::size_t>(k)].is_number_integer()) throw InvalidInput("flag type entries must be integers");
        m(i, k) = row[static_cast<std::size_t>(k)].get<int>();
      }
    }
    return nfield::FlagType(m);
  }
  FieldSpec spec = parse_field_spec(j);
  return nfield::flag_type(seed_flag(spec), spec.field);
}

scrollar::SplittingType parse_splitting_type(const json& j) {
  scrollar::SplittingType s;
  auto as_long = [](const json& v, const char* what) {
    if (!v.is_number_integer()) throw InvalidInput(std::string(what) + " must be an integer");
    return v.get<long>();
  };
  s.n = static_cast<int>(as_long(require(j, "n"), "n"));
  s.g = as_long(require(j, "g"), "g");
  s.degL = j.contains("degL") ? as_long(j.at("degL"), "degL") : 0;
  const json& a = require(j, "a");
  if (!a.is_array()) throw InvalidInput("a must be an array");
  for (const auto& v : a) s.a.push_back(as_long(v, "a_i"));
  scrollar::validate(s);
  return s;
}

json to_json(const geometry::RationalPolytope& p) {
  json out{{"dim", p.dim()}, {"equalities", json::array()}, {"inequalities", json::array()}};
  for (const auto& c : p.equalities()) out["equalities"].push_back(constraint_json(c));
  for (const auto& c : p.inequalities()) out["inequalities"].push_back(constraint_json(c));
  return out;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InvalidInput("malformed JSON in " + path + ": " + e.what());
  }
}

}  // namespace succmin::io
