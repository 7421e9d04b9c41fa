#include "lagfe/element.hpp"

#include "lagfe/errors.hpp"

namespace lagfe {

namespace {

void require_independent(const VertexFamily& v) {
  if (!is_affinely_independent(v)) throw DegenerateSimplexError("vertices are not affinely independent");
}

void require_member(std::size_t d, unsigned k, const MultiIndex& alpha) {
  if (alpha.dim() != d) throw DimensionMismatchError("node label dimension differs from d");
  if (alpha.length() > k) throw BoundsError("node label " + alpha.to_string() + " is not in A_k^d");
}

// p(a_alpha) for every node label in `labels`
bool vanishes_at(const VertexFamily& v, unsigned k, const std::vector<MultiIndex>& labels, const Polynomial& p) {
  for (const auto& a : labels) {
    if (!p.eval(lagrange_node(v, k, a)).is_zero()) return false;
  }
  return true;
}

std::vector<MultiIndex> face_labels(std::size_t d, unsigned k, std::size_t i) {
  return i == 0 ? enumerate(IndexSetSpec::exact(d, k)) : enumerate(IndexSetSpec::zero_at(d, k, i));
}

}  // namespace

Point lagrange_node(const VertexFamily& v, unsigned k, const MultiIndex& alpha) {
  const std::size_t d = v.d();
  require_member(d, k, alpha);
  if (k == 0) return isobarycenter(v.vertices());
  Point x = v[0];
  for (std::size_t i = 1; i <= d; ++i) {
    if (alpha[i - 1] == 0) continue;
    const Rational w = Rational::make(alpha[i - 1], k);
    for (std::size_t r = 0; r < d; ++r) x[r] += w * (v[i][r] - v[0][r]);
  }
  return x;
}

std::vector<Node> lagrange_nodes(const VertexFamily& v, unsigned k) {
  std::vector<Node> out;
  for (auto& a : enumerate(IndexSetSpec::at_most(v.d(), k))) {
    Point x = lagrange_node(v, k, a);
    out.push_back({std::move(a), std::move(x)});
  }
  return out;
}

std::vector<Node> reference_nodes(std::size_t d, unsigned k) { return lagrange_nodes(reference_vertices(d), k); }

VertexFamily sub_vertices(const VertexFamily& v, unsigned k) {
  if (k == 0) throw BoundsError("sub-vertices need k >= 1");
  const std::size_t d = v.d();
  const Rational a = Rational::make(1, k);
  const Rational b = Rational::make(k - 1, k);
  std::vector<Point> s{v[0]};
  for (std::size_t i = 1; i <= d; ++i) {
    Point p(d);
    for (std::size_t r = 0; r < d; ++r) p[r] = a * v[0][r] + b * v[i][r];
    s.push_back(std::move(p));
  }
  return VertexFamily(std::move(s));
}

bool sub_node_identity_check(const VertexFamily& v, unsigned k) {
  if (k < 2) throw BoundsError("sub-node identity needs k >= 2");
  require_independent(v);
  const VertexFamily s = sub_vertices(v, k);
  for (const auto& a : enumerate(IndexSetSpec::at_most(v.d(), k - 1))) {
    if (lagrange_node(s, k - 1, a) != lagrange_node(v, k, a)) return false;
  }
  return true;
}

bool node_image_check(const VertexFamily& v, unsigned k) {
  const AffineMap phi = geometric_mapping(v);
  const VertexFamily ref = reference_vertices(v.d());
  for (const auto& a : enumerate(IndexSetSpec::at_most(v.d(), k))) {
    if (affine_apply(phi, lagrange_node(ref, k, a)) != lagrange_node(v, k, a)) return false;
  }
  return true;
}

RatMatrix vandermonde(const VertexFamily& v, unsigned k) {
  require_independent(v);
  const auto labels = enumerate(IndexSetSpec::at_most(v.d(), k));
  const std::size_t n = labels.size();
  RatMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    const Point x = lagrange_node(v, k, labels[r]);
    for (std::size_t c = 0; c < n; ++c) m(r, c) = Polynomial::monomial(labels[c]).eval(x);
  }
  return m;
}

bool check_unisolvence(const VertexFamily& v, unsigned k) {
  if (!is_affinely_independent(v)) return false;
  return !mat_det(vandermonde(v, k)).is_zero();
}

namespace {

std::vector<Polynomial> shape_from_vandermonde(const RatMatrix& vm, const std::vector<MultiIndex>& labels) {
  const RatMatrix c = mat_inverse(vm);
  std::vector<Polynomial> out;
  out.reserve(labels.size());
  for (std::size_t b = 0; b < labels.size(); ++b) {
    Polynomial p(labels[b].dim());
    for (std::size_t g = 0; g < labels.size(); ++g) p.add_term(labels[g], c(g, b));
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace

std::vector<Polynomial> shape_functions(const VertexFamily& v, unsigned k) {
  if (!is_affinely_independent(v)) throw NonUnisolventError("vertices are not affinely independent");
  const auto labels = enumerate(IndexSetSpec::at_most(v.d(), k));
  try {
    return shape_from_vandermonde(vandermonde(v, k), labels);
  } catch (const SingularMatrixError&) {
    throw NonUnisolventError("Vandermonde matrix is singular");
  }
}

Rational linear_form(const VertexFamily& v, unsigned k, const MultiIndex& alpha, const Polynomial& p) {
  require_member(v.d(), k, alpha);
  if (p.dim() != v.d()) throw DimensionMismatchError("polynomial dimension differs from d");
  return p.eval(lagrange_node(v, k, alpha));
}

std::vector<MultiIndex> nodes_on_hyperplane(const VertexFamily& v, unsigned k, std::size_t i) {
  if (k < 1) throw BoundsError("nodes on a hyperplane need k >= 1");
  if (i > v.d()) throw BoundsError("face index outside [0..d]");
  require_independent(v);
  return face_labels(v.d(), k, i);
}

bool hyperface_node_transport_check(const VertexFamily& v, unsigned k, std::size_t i) {
  const std::size_t d = v.d();
  if (d < 2) throw BoundsError("hyperface transport needs d >= 2");
  if (k < 1) throw BoundsError("hyperface transport needs k >= 1");
  if (i > d) throw BoundsError("face index outside [0..d]");
  require_independent(v);
  const AffineMap phi = hyperface_mapping(v, i);
  const VertexFamily ref = reference_vertices(d - 1);
  for (const auto& a : enumerate(IndexSetSpec::at_most(d - 1, k))) {
    const MultiIndex fa = i == 0 ? f_head(d, k, a) : f_insert_zero(d, k, i, a);
    if (affine_apply(phi, lagrange_node(ref, k, a)) != lagrange_node(v, k, fa)) return false;
  }
  return true;
}

Polynomial factor_on_hyperplane(const VertexFamily& v, unsigned k, std::size_t i, const Polynomial& p) {
  const std::size_t d = v.d();
  if (i > d) throw BoundsError("face index outside [0..d]");
  if (p.dim() != d) throw DimensionMismatchError("polynomial dimension differs from d");
  if (!p.degree().at_most(k)) throw BoundsError("polynomial degree exceeds k");
  require_independent(v);
  const auto pi = circular_permutation(d, i);
  const AffineMap phi = permutation_mapping(v, pi);
  const Polynomial ph = compose_affine(p, phi);
  // ph = p0 + X_d qh; p0 collects the terms free of X_d
  Polynomial qh(d);
  for (const auto& [a, c] : ph.terms()) {
    if (a[d - 1] == 0) throw NotVanishingError("polynomial does not vanish on face hyperplane " + std::to_string(i));
    auto e = a.components();
    --e[d - 1];
    qh.add_term(MultiIndex(std::move(e)), c);
  }
  return compose_affine(qh, affine_inverse(phi));
}

FaceUnisolvence face_unisolvence_conditions(const VertexFamily& v, unsigned k, std::size_t i, const Polynomial& p) {
  const std::size_t d = v.d();
  if (d < 2) throw BoundsError("face unisolvence needs d >= 2");
  if (k < 1) throw BoundsError("face unisolvence needs k >= 1");
  if (i > d) throw BoundsError("face index outside [0..d]");
  if (p.dim() != d) throw DimensionMismatchError("polynomial dimension differs from d");
  if (!p.degree().at_most(k)) throw BoundsError("polynomial degree exceeds k");
  require_independent(v);
  return {vanishes_at(v, k, face_labels(d, k, i), p), compose_affine(p, hyperface_mapping(v, i)).is_zero()};
}

bool face_unisolvence_check(const VertexFamily& v, unsigned k, std::size_t i, const Polynomial& p) {
  const auto r = face_unisolvence_conditions(v, k, i, p);
  if (r.nodes_vanish != r.restriction_zero) {
    throw InternalConsistencyError("face node values and hyperface restriction disagree");
  }
  return r.nodes_vanish;
}

LagrangeElement build_element(const VertexFamily& v, unsigned k) {
  require_independent(v);
  auto labels = enumerate(IndexSetSpec::at_most(v.d(), k));
  RatMatrix vm = vandermonde(v, k);
  if (mat_det(vm).is_zero()) throw InternalConsistencyError("singular Vandermonde matrix for independent vertices");
  auto shapes = shape_from_vandermonde(vm, labels);
  std::vector<Point> nodes;
  nodes.reserve(labels.size());
  for (const auto& a : labels) nodes.push_back(lagrange_node(v, k, a));
  return {v, k, std::move(labels), std::move(nodes), std::move(vm), std::move(shapes)};
}

}  // namespace lagfe
