#include "lagfe/json_io.hpp"

#include <fstream>
#include <sstream>

#include "lagfe/errors.hpp"

namespace lagfe {

Json to_json(const Rational& r) { return r.to_string(); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  throw ParseError("expected a rational string, got " + j.dump());
}

Json to_json(const MultiIndex& a) { return a.components(); }

MultiIndex multi_index_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("expected a multi-index array, got " + j.dump());
  std::vector<unsigned> c;
  for (const auto& x : j) {
    if (!x.is_number_unsigned()) throw ParseError("multi-index components must be naturals");
    c.push_back(x.get<unsigned>());
  }
  return MultiIndex(std::move(c));
}

Json point_to_json(const Point& x) {
  Json j = Json::array();
  for (const auto& c : x) j.push_back(to_json(c));
  return j;
}

Point point_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("expected a point array, got " + j.dump());
  Point x;
  for (const auto& c : j) x.push_back(rational_from_json(c));
  return x;
}

Json to_json(const Polynomial& p) {
  Json terms = Json::array();
  for (const auto& [a, c] : p.terms()) terms.push_back({{"exp", to_json(a)}, {"coeff", to_json(c)}});
  return {{"dim", p.dim()}, {"terms", std::move(terms)}};
}

Polynomial polynomial_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("terms")) throw ParseError("polynomial needs dim and terms");
  if (!j["dim"].is_number_unsigned()) throw ParseError("polynomial dim must be a natural");
  Polynomial p(j["dim"].get<std::size_t>());
  for (const auto& t : j["terms"]) {
    if (!t.contains("exp") || !t.contains("coeff")) throw ParseError("polynomial term needs exp and coeff");
    const auto a = multi_index_from_json(t["exp"]);
    if (a.dim() != p.dim()) throw ParseError("term exponent dimension differs from dim");
    p.add_term(a, rational_from_json(t["coeff"]));
  }
  return p;
}

Json to_json(const VertexFamily& v) {
  Json vs = Json::array();
  for (const auto& x : v.vertices()) vs.push_back(point_to_json(x));
  return {{"d", v.d()}, {"vertices", std::move(vs)}};
}

VertexFamily vertex_family_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array()) {
    throw ParseError("vertex family needs a vertices array");
  }
  std::vector<Point> pts;
  for (const auto& x : j["vertices"]) pts.push_back(point_from_json(x));
  if (j.contains("d")) {
    if (!j["d"].is_number_unsigned()) throw ParseError("vertex family d must be a natural");
    if (j["d"].get<std::size_t>() + 1 != pts.size()) throw ParseError("vertex count must be d+1");
  }
  try {
    return VertexFamily(std::move(pts));
  } catch (const DimensionMismatchError& e) {
    throw ParseError(e.what());
  }
}

VertexFamily read_vertex_family(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open vertices file '" + path + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("malformed JSON in '" + path + "': " + e.what());
  }
  return vertex_family_from_json(j);
}

Json to_json(const AffineMap& f) {
  Json m = Json::array();
  for (std::size_t r = 0; r < f.matrix.rows(); ++r) {
    Json row = Json::array();
    for (const auto& x : f.matrix.row(r)) row.push_back(to_json(x));
    m.push_back(std::move(row));
  }
  return {{"matrix", std::move(m)}, {"translation", point_to_json(f.translation)}};
}

Json enumeration_to_json(const IndexSetSpec& spec, MonomialOrder order, const std::vector<MultiIndex>& list) {
  Json j;
  j["d"] = spec.d;
  j["k"] = spec.k;
  j["kind"] = kind_name(spec.kind);
  if (spec.kind == SetKind::ZeroAt) j["zero_index"] = spec.zero_index;
  j["order"] = order_name(order);
  j["cardinal"] = cardinal(spec);
  Json idx = Json::array();
  for (const auto& a : list) idx.push_back(to_json(a));
  j["indices"] = std::move(idx);
  return j;
}

Json nodes_to_json(const std::vector<Node>& nodes) {
  Json out = Json::array();
  for (const auto& n : nodes) out.push_back({{"alpha", to_json(n.alpha)}, {"point", point_to_json(n.point)}});
  return out;
}

Json to_json(const LagrangeElement& e) {
  std::vector<Node> nodes;
  for (std::size_t i = 0; i < e.nodes.size(); ++i) nodes.push_back({e.node_index[i], e.nodes[i]});
  Json shapes = Json::array();
  for (const auto& p : e.shape_functions) shapes.push_back(to_json(p));
  Json j;
  j["d"] = e.d();
  j["k"] = e.degree;
  j["vertices"] = to_json(e.vertices)["vertices"];
  j["nodes"] = nodes_to_json(nodes);
  j["shape_functions"] = std::move(shapes);
  return j;
}

std::string nodes_to_csv(std::size_t d, const std::vector<Node>& nodes) {
  std::ostringstream os;
  for (std::size_t i = 1; i <= d; ++i) os << "alpha_" << i << ',';
  for (std::size_t i = 1; i <= d; ++i) os << "x_" << i << (i == d ? "\n" : ",");
  for (const auto& n : nodes) {
    for (std::size_t i = 0; i < d; ++i) os << n.alpha[i] << ',';
    for (std::size_t i = 0; i < d; ++i) os << n.point[i] << (i + 1 == d ? "\n" : ",");
  }
  return os.str();
}

}  // namespace lagfe
