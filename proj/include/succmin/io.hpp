#pragma once

// JSON input files and report serialization. Rationals are written as "p/q"
// strings; integers may also be plain JSON numbers.

#include "succmin/geometry.hpp"
#include "succmin/lattice.hpp"
#include "succmin/scrollar.hpp"

#include <json.hpp>

#include <optional>

namespace succmin::io {

using json = nlohmann::json;

Rational rational_from_json(const json& j);
json to_json(const Rational& q);
json to_json(const VectorQ& v);

/// {"min_poly": [c_0, ..., 1], "basis": [[...], ...], "tower_generators": [[...], ...]}
struct FieldSpec {
  nfield::NumberField field;
  std::optional<std::vector<nfield::FieldElement>> basis;
  std::vector<nfield::FieldElement> tower_generators;
};

FieldSpec parse_field_spec(const json& j);

/// A field spec plus "x" and "M_values" or "M_count".
struct OrderSpec {
  FieldSpec field;
  std::optional<VectorQ> x;
  std::vector<Integer> m_values;
  std::optional<int> m_count;
};

OrderSpec parse_order_spec(const json& j);

/// Order given by the spec's basis, or the equation order when absent.
lattice::OrderBasis order_from_spec(const FieldSpec& spec);

/// Seed basis for a family: the spec's basis or the power basis.
nfield::Flag seed_flag(const FieldSpec& spec);

/// {"table": [[...]]} or a field spec with a basis.
nfield::FlagType parse_flag_type(const json& j);

/// {"n": ..., "g": ..., "degL": ..., "a": [...]}
scrollar::SplittingType parse_splitting_type(const json& j);

json to_json(const geometry::RationalPolytope& p);

/// Throws InvalidInput on unreadable files or malformed JSON.
json read_json_file(const std::string& path);

}  // namespace succmin::io
