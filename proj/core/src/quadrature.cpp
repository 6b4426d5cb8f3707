#include "polyharm/quadrature.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

#include "polyharm/unipoly.hpp"

namespace polyharm {

namespace {

const UniPoly& legendre(int n) {
  static std::map<int, UniPoly> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  if (cache.empty()) {
    cache.emplace(0, UniPoly::from_integers({1}));
    cache.emplace(1, UniPoly::from_integers({1, 0}));
  }
  for (int k = static_cast<int>(cache.size()) - 1; k < n; ++k) {
    // (k+1) P_{k+1} = (2k+1) x P_k - k P_{k-1}
    const UniPoly x = UniPoly::from_integers({1, 0});
    UniPoly next = (x * cache.at(k)).scaled(Rational(2 * k + 1, k + 1)) -
                   cache.at(k - 1).scaled(Rational(k, k + 1));
    cache.emplace(k + 1, std::move(next));
  }
  return cache.at(n);
}

struct GaussTable {
  std::vector<BigFloat> nodes, weights;
};

const GaussTable& gauss_table(int n, mpfr_prec_t prec) {
  static std::map<std::pair<int, mpfr_prec_t>, GaussTable> cache;
  auto key = std::make_pair(n, prec);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  const mpfr_prec_t wp = prec + 32;
  const UniPoly& p = legendre(n);
  const UniPoly dp = p.derivative();
  GaussTable t;
  for (int i = 1; i <= n; ++i) {
    // Classical seed, then Newton to working precision.
    const double seed = std::cos(M_PI * (i - 0.25) / (n + 0.5));
    BigFloat x = BigFloat::from_double(seed, wp);
    for (int it2 = 0; it2 < 60; ++it2) {
      const BigFloat fx = p.eval(x);
      if (fx.is_zero()) break;
      const BigFloat step = fx / dp.eval(x);
      x -= step;
      BigFloat floor = x.abs();
      for (int b = 0; b < static_cast<int>(wp) - 8; ++b) floor /= BigFloat(2);
      if (step.abs() <= floor) break;
    }
    const BigFloat d = dp.eval(x);
    const BigFloat w = BigFloat(2, wp) / ((BigFloat(1, wp) - x * x) * d * d);
    t.nodes.push_back(x);
    t.weights.push_back(w);
  }
  return cache.emplace(key, std::move(t)).first->second;
}

int points_for_degree(int degree) { return degree / 2 + 1; }  // 2n-1 >= degree

BigFloat norm(const Vec3<BigFloat>& v) { return dot(v, v).sqrt(); }

void tetra_nodes_rec(const Vec3<BigFloat>& p0, const Vec3<BigFloat>& p1,
                     const Vec3<BigFloat>& p2, const Vec3<BigFloat>& p3, int degree, int depth,
                     std::vector<QuadNode>& out) {
  if (depth > 0) {
    const BigFloat half = BigFloat(1) / BigFloat(2);
    const auto mid = [&](const Vec3<BigFloat>& a, const Vec3<BigFloat>& b) {
      return vec_scale(vec_add(a, b), half);
    };
    const auto m01 = mid(p0, p1), m02 = mid(p0, p2), m03 = mid(p0, p3);
    const auto m12 = mid(p1, p2), m13 = mid(p1, p3), m23 = mid(p2, p3);
    // Bey's red refinement: four corner cells and the inner octahedron cut
    // along the m02-m13 diagonal, each child ordered to keep the parent's
    // orientation (signs are affine invariants, so the reference check holds
    // for every cell).
    tetra_nodes_rec(p0, m01, m02, m03, degree, depth - 1, out);
    tetra_nodes_rec(m01, p1, m12, m13, degree, depth - 1, out);
    tetra_nodes_rec(m02, m12, p2, m23, degree, depth - 1, out);
    tetra_nodes_rec(m03, m13, m23, p3, degree, depth - 1, out);
    tetra_nodes_rec(m01, m02, m03, m13, degree, depth - 1, out);
    tetra_nodes_rec(m01, m02, m13, m12, degree, depth - 1, out);
    tetra_nodes_rec(m02, m03, m13, m23, degree, depth - 1, out);
    tetra_nodes_rec(m02, m12, m23, m13, degree, depth - 1, out);
    return;
  }
  const mpfr_prec_t prec = p0[0].prec();
  // The collapsed integrand picks up two extra powers of u.
  const auto& g = gauss_table(points_for_degree(degree + 2), prec);
  const BigFloat one(1, prec), half = BigFloat(1, prec) / BigFloat(2, prec);
  const Vec3<BigFloat> e1 = vec_sub(p1, p0), e2 = vec_sub(p2, p0), e3 = vec_sub(p3, p0);
  const BigFloat jac = det3(e1, e2, e3);  // signed, 6 x volume
  const int n = static_cast<int>(g.nodes.size());
  for (int iu = 0; iu < n; ++iu) {
    const BigFloat u = (g.nodes[static_cast<std::size_t>(iu)] + one) * half;
    const BigFloat wu = g.weights[static_cast<std::size_t>(iu)] * half;
    for (int iv = 0; iv < n; ++iv) {
      const BigFloat v = (g.nodes[static_cast<std::size_t>(iv)] + one) * half;
      const BigFloat wv = g.weights[static_cast<std::size_t>(iv)] * half;
      for (int iw = 0; iw < n; ++iw) {
        const BigFloat w = (g.nodes[static_cast<std::size_t>(iw)] + one) * half;
        const BigFloat ww = g.weights[static_cast<std::size_t>(iw)] * half;
        const BigFloat x = u;
        const BigFloat y = v * (one - u);
        const BigFloat z = w * (one - u) * (one - v);
        QuadNode node;
        node.y = vec_add(p0, vec_add(vec_scale(e1, x), vec_add(vec_scale(e2, y),
                                                               vec_scale(e3, z))));
        node.w = wu * wv * ww * (one - u) * (one - u) * (one - v) * jac;
        out.push_back(std::move(node));
      }
    }
  }
}

}  // namespace

void gauss_legendre(int n, mpfr_prec_t prec, std::vector<BigFloat>& nodes,
                    std::vector<BigFloat>& weights) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: need n >= 1");
  const auto& t = gauss_table(n, prec);
  nodes = t.nodes;
  weights = t.weights;
}

std::vector<QuadNode> edge_nodes(const Vec3<BigFloat>& a, const Vec3<BigFloat>& b, int degree) {
  const mpfr_prec_t prec = a[0].prec();
  const auto& g = gauss_table(points_for_degree(degree), prec);
  const BigFloat half = BigFloat(1, prec) / BigFloat(2, prec);
  const Vec3<BigFloat> mid = vec_scale(vec_add(a, b), half);
  const Vec3<BigFloat> rad = vec_scale(vec_sub(b, a), half);
  const BigFloat scale = norm(rad);  // |b-a|/2, maps [-1,1] weight to length
  std::vector<QuadNode> out;
  out.reserve(g.nodes.size());
  for (std::size_t i = 0; i < g.nodes.size(); ++i)
    out.push_back({vec_add(mid, vec_scale(rad, g.nodes[i])), g.weights[i] * scale});
  return out;
}

std::vector<QuadNode> triangle_nodes(const Vec3<BigFloat>& v0, const Vec3<BigFloat>& v1,
                                     const Vec3<BigFloat>& v2, int degree) {
  const mpfr_prec_t prec = v0[0].prec();
  // One extra power of u from the collapse.
  const auto& g = gauss_table(points_for_degree(degree + 1), prec);
  const BigFloat one(1, prec), half = BigFloat(1, prec) / BigFloat(2, prec);
  const BigFloat third = one / BigFloat(3, prec);
  std::vector<QuadNode> out;
  const Vec3<BigFloat>* rot[3][3] = {
      {&v0, &v1, &v2}, {&v1, &v2, &v0}, {&v2, &v0, &v1}};
  for (auto& tri : rot) {
    const Vec3<BigFloat>& a = *tri[0];
    const Vec3<BigFloat> eb = vec_sub(*tri[1], a), ec = vec_sub(*tri[2], a);
    const BigFloat two_area = norm(cross(eb, ec));
    const int n = static_cast<int>(g.nodes.size());
    for (int iu = 0; iu < n; ++iu) {
      const BigFloat u = (g.nodes[static_cast<std::size_t>(iu)] + one) * half;
      const BigFloat wu = g.weights[static_cast<std::size_t>(iu)] * half;
      for (int iv = 0; iv < n; ++iv) {
        const BigFloat v = (g.nodes[static_cast<std::size_t>(iv)] + one) * half;
        const BigFloat wv = g.weights[static_cast<std::size_t>(iv)] * half;
        QuadNode node;
        node.y = vec_add(a, vec_add(vec_scale(eb, u), vec_scale(ec, v * (one - u))));
        node.w = wu * wv * (one - u) * two_area * third;
        out.push_back(std::move(node));
      }
    }
  }
  return out;
}

std::vector<QuadNode> tetra_nodes(const Vec3<BigFloat>& p0, const Vec3<BigFloat>& p1,
                                  const Vec3<BigFloat>& p2, const Vec3<BigFloat>& p3,
                                  int degree, int depth) {
  std::vector<QuadNode> out;
  tetra_nodes_rec(p0, p1, p2, p3, degree, depth, out);
  return out;
}

QuadratureRule skeleton_rule(const SolidInstance<BigFloat>& inst, int k, int degree,
                             int depth) {
  const mpfr_prec_t prec = inst.r.prec();
  QuadratureRule rule;
  rule.degree = degree;
  rule.depth = depth;
  rule.total_weight = BigFloat(0, prec);
  switch (k) {
    case 0:
      rule.kind = RuleKind::VertexSum;
      for (const auto& v : inst.vertices) rule.nodes.push_back({v.point, BigFloat(1, prec)});
      break;
    case 1:
      rule.kind = RuleKind::EdgeGauss;
      for (const auto& e : inst.edges) {
        auto nodes = edge_nodes(inst.vertices[static_cast<std::size_t>(e.v0)].point,
                                inst.vertices[static_cast<std::size_t>(e.v1)].point, degree);
        rule.nodes.insert(rule.nodes.end(), nodes.begin(), nodes.end());
      }
      break;
    case 2:
      rule.kind = RuleKind::TriangleSymmetric;
      for (const auto& f : inst.faces) {
        auto nodes = triangle_nodes(inst.vertices[static_cast<std::size_t>(f.verts[0])].point,
                                    inst.vertices[static_cast<std::size_t>(f.verts[1])].point,
                                    inst.vertices[static_cast<std::size_t>(f.verts[2])].point,
                                    degree);
        rule.nodes.insert(rule.nodes.end(), nodes.begin(), nodes.end());
      }
      break;
    case 3: {
      rule.kind = RuleKind::TetraSubdivision;
      const Vec3<BigFloat> origin{BigFloat(0, prec), BigFloat(0, prec), BigFloat(0, prec)};
      for (const auto& f : inst.faces) {
        // Cone the oriented face to the origin; orientation keeps the signed
        // volume positive for the solid even when a pyramid is excavated.
        const auto& a = inst.vertices[static_cast<std::size_t>(f.verts[0])].point;
        const auto& b = inst.vertices[static_cast<std::size_t>(f.verts[1])].point;
        const auto& c = inst.vertices[static_cast<std::size_t>(f.verts[2])].point;
        auto nodes = f.orientation > 0 ? tetra_nodes(origin, a, b, c, degree, depth)
                                       : tetra_nodes(origin, b, a, c, degree, depth);
        rule.nodes.insert(rule.nodes.end(), nodes.begin(), nodes.end());
      }
      break;
    }
    default:
      throw std::invalid_argument("skeleton_rule: k must be 0..3");
  }
  for (const auto& n : rule.nodes) rule.total_weight += n.w;
  return rule;
}

BigFloat skeleton_measure(const SolidInstance<BigFloat>& inst, int k) {
  if (k == 0) return BigFloat(static_cast<long>(inst.vertices.size()), inst.r.prec());
  // Low-order rules suffice for the measure itself.
  return skeleton_rule(inst, k, k == 1 ? 1 : 2).total_weight;
}

}  // namespace polyharm
