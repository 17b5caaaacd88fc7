#pragma once

#include "tropic/curve.hpp"
#include "tropic/cycle.hpp"
#include "tropic/hypersurface.hpp"
#include "tropic/matroid.hpp"
#include "tropic/toric.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace tropic {

using json = nlohmann::ordered_json;

/// Malformed input; the message starts with the JSON pointer of the offending value.
struct SchemaError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Integers as JSON numbers, other rationals as "p/q" strings.
json rational_to_json(const Rational& q);
Rational rational_from_json(const json& j, const std::string& where = "");
json vec_to_json(const Vec& v);
Vec vec_from_json(const json& j, const std::string& where = "");

json polyhedron_to_json(const Polyhedron& p);
json cycle_to_json(const TropicalCycle& c);
/// { "ambient_dim": n, "dim": d, "cells": [ { "vertices": [...], "rays": [...], "lineality": [...], "weight": w } ] }
TropicalCycle cycle_from_json(const json& j);
json cartier_to_json(const CartierFunction& f);

/// { "nvars": n, "terms": [ { "exponent": [..], "coeff": "p/q" } ] }
json polynomial_to_json(const TropicalPolynomial& f);
TropicalPolynomial polynomial_from_json(const json& j);

/// { "n": 4, "bases": [[1,2],[1,3],...] } with 1-based elements, or { "uniform": [r, n] }.
json matroid_to_json(const Matroid& m);
Matroid matroid_from_json(const json& j);

/// { "vertices": n, "edges": [[u, v]], "divisor": { "v0": 1, "e2.0": 1 } }, 0-based.
json graph_to_json(const CurveGraph& g, const CurveDivisor& d);
std::pair<CurveGraph, CurveDivisor> graph_from_json(const json& j);

/// { "vertices": [[x, y], ...] }
Polyhedron polygon_from_json(const json& j);
json polygon_to_json(const Polyhedron& q);

/// { "rays": [[a, b], ...] } or { "tpn": n }
json fan_to_json(const SmoothCompleteFan2D& fan);
json tpn_fan_to_json(std::size_t n);
/// { "coeffs": { "0": "p/q", "H": ... } } keyed by ray index, or "H" on projective spaces.
json class_to_json(const ToricRing& ring, const CohomologyClass& c);
CohomologyClass class_from_json(const ToricRing& ring, const json& j);

}  // namespace tropic
