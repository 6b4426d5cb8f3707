#ifndef POLYHARM_QUADRATURE_HPP
#define POLYHARM_QUADRATURE_HPP

#include <vector>

#include "polyharm/linear_form.hpp"
#include "polyharm/solid.hpp"

namespace polyharm {

// Gauss-Legendre nodes and weights on [-1, 1], exact for degree <= 2n-1.
// Nodes are Newton-polished roots of the Legendre polynomial at `prec` bits.
void gauss_legendre(int n, mpfr_prec_t prec, std::vector<BigFloat>& nodes,
                    std::vector<BigFloat>& weights);

struct QuadNode {
  Vec3<BigFloat> y;
  BigFloat w;
};

enum class RuleKind { VertexSum, EdgeGauss, TriangleSymmetric, TetraSubdivision };

// Weighted nodes integrating polynomials exactly over a skeleton piece.
// Weights sum to the measure of the piece; the volume rule keeps the sign of
// the oriented cell so non-convex parameters integrate as chains.
std::vector<QuadNode> edge_nodes(const Vec3<BigFloat>& a, const Vec3<BigFloat>& b, int degree);
// Collapsed tensor rule averaged over the three vertex rotations, hence
// symmetric under the triangle's rotation group.
std::vector<QuadNode> triangle_nodes(const Vec3<BigFloat>& v0, const Vec3<BigFloat>& v1,
                                     const Vec3<BigFloat>& v2, int degree);
// Signed rule over the tetrahedron (p0, p1, p2, p3); depth > 0 splits each
// cell into 8 sub-cells per level before applying the collapsed rule.
std::vector<QuadNode> tetra_nodes(const Vec3<BigFloat>& p0, const Vec3<BigFloat>& p1,
                                  const Vec3<BigFloat>& p2, const Vec3<BigFloat>& p3,
                                  int degree, int depth = 0);

struct QuadratureRule {
  RuleKind kind = RuleKind::VertexSum;
  int degree = 0;  // polynomial degree the rule integrates exactly
  int depth = 0;
  std::vector<QuadNode> nodes;
  BigFloat total_weight;  // |P(k)|; vertex count, length, area, or volume
};

// The measure-weighted rule over the k-skeleton of the solid. k = 3 cones
// every face to the origin with orientation-signed cells.
QuadratureRule skeleton_rule(const SolidInstance<BigFloat>& inst, int k, int degree = 15,
                             int depth = 0);

// |P(k)| = mu_k(P(k)).
BigFloat skeleton_measure(const SolidInstance<BigFloat>& inst, int k);

}  // namespace polyharm

#endif
