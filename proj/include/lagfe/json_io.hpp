#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "lagfe/element.hpp"
#include "lagfe/geometry.hpp"
#include "lagfe/multi_index.hpp"
#include "lagfe/polynomial.hpp"

namespace lagfe {

using Json = nlohmann::ordered_json;

// Rationals travel as "num/den" strings everywhere. Readers throw ParseError.

Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);  // also accepts JSON integers

Json to_json(const MultiIndex& a);
MultiIndex multi_index_from_json(const Json& j);

Json point_to_json(const Point& x);
Point point_from_json(const Json& j);

Json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const Json& j);

Json to_json(const VertexFamily& v);
VertexFamily vertex_family_from_json(const Json& j);
/// Reads a file holding VertexFamily JSON.
VertexFamily read_vertex_family(const std::string& path);

Json to_json(const AffineMap& f);

/// {"d","k","kind",["zero_index"],"order","cardinal","indices"}
Json enumeration_to_json(const IndexSetSpec& spec, MonomialOrder order, const std::vector<MultiIndex>& list);

Json nodes_to_json(const std::vector<Node>& nodes);
Json to_json(const LagrangeElement& e);

/// Header alpha_1..alpha_d,x_1..x_d then one row per node.
std::string nodes_to_csv(std::size_t d, const std::vector<Node>& nodes);

}  // namespace lagfe
