#pragma once

#include <cstddef>
#include <vector>

#include "lagfe/geometry.hpp"
#include "lagfe/matrix.hpp"
#include "lagfe/multi_index.hpp"
#include "lagfe/polynomial.hpp"

namespace lagfe {

struct Node {
  MultiIndex alpha;
  Point point;
  friend bool operator==(const Node&, const Node&) = default;
};

/// a_alpha for alpha in A_k^d (grsymlex). k = 0 gives the isobarycenter.
std::vector<Node> lagrange_nodes(const VertexFamily& v, unsigned k);
/// Single node a_alpha; alpha must lie in A_k^d.
Point lagrange_node(const VertexFamily& v, unsigned k, const MultiIndex& alpha);
std::vector<Node> reference_nodes(std::size_t d, unsigned k);

/// v_0 and (1/k) v_0 + ((k-1)/k) v_i. Throws BoundsError for k = 0.
VertexFamily sub_vertices(const VertexFamily& v, unsigned k);

/// Degree-(k-1) nodes of the sub-vertices equal the degree-k nodes on A_{k-1}^d.
/// Requires k >= 2 and independent v.
bool sub_node_identity_check(const VertexFamily& v, unsigned k);

/// a_alpha = geometric_mapping(v)(reference node alpha) for every alpha.
bool node_image_check(const VertexFamily& v, unsigned k);

/// V(alpha, beta) = a_alpha^beta, rows and columns in grsymlex order over A_k^d.
/// Throws DegenerateSimplexError.
RatMatrix vandermonde(const VertexFamily& v, unsigned k);

/// Independent vertices and nonsingular Vandermonde matrix.
bool check_unisolvence(const VertexFamily& v, unsigned k);

/// theta_beta with theta_beta(a_alpha) = delta. Throws NonUnisolventError.
std::vector<Polynomial> shape_functions(const VertexFamily& v, unsigned k);

/// sigma_alpha(p) = p(a_alpha). Throws BoundsError when alpha is not in A_k^d.
Rational linear_form(const VertexFamily& v, unsigned k, const MultiIndex& alpha, const Polynomial& p);

/// Labels of the nodes lying on H_i: C_k^d for i = 0, A_{k,i}^d otherwise.
std::vector<MultiIndex> nodes_on_hyperplane(const VertexFamily& v, unsigned k, std::size_t i);

/// The hyperface mapping of H_i carries the degree-k reference nodes of
/// dimension d-1 onto the nodes a_{f(alpha')}, f = f_head (i = 0) or f_insert_zero.
bool hyperface_node_transport_check(const VertexFamily& v, unsigned k, std::size_t i);

/// q with p = lambda_i q, for p of degree <= k vanishing on H_i.
/// Throws NotVanishingError when p does not vanish on H_i.
Polynomial factor_on_hyperplane(const VertexFamily& v, unsigned k, std::size_t i, const Polynomial& p);

struct FaceUnisolvence {
  bool nodes_vanish;      // p(a_alpha) = 0 on the face node set
  bool restriction_zero;  // p o hyperface_mapping(v, i) = 0
};

FaceUnisolvence face_unisolvence_conditions(const VertexFamily& v, unsigned k, std::size_t i, const Polynomial& p);

/// nodes_vanish, after confirming it agrees with restriction_zero
/// (InternalConsistencyError otherwise).
bool face_unisolvence_check(const VertexFamily& v, unsigned k, std::size_t i, const Polynomial& p);

struct LagrangeElement {
  VertexFamily vertices;
  unsigned degree;
  std::vector<MultiIndex> node_index;
  std::vector<Point> nodes;
  RatMatrix vandermonde;
  std::vector<Polynomial> shape_functions;

  std::size_t d() const { return vertices.d(); }
};

/// Throws DegenerateSimplexError; a singular Vandermonde matrix for
/// independent vertices is reported as InternalConsistencyError.
LagrangeElement build_element(const VertexFamily& v, unsigned k);

}  // namespace lagfe
