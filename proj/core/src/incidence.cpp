#include "polyharm/incidence.hpp"

#include <stdexcept>

namespace polyharm {

namespace {

BigFloat norm(const Vec3<BigFloat>& v) { return dot(v, v).sqrt(); }

const SolidEdge<BigFloat>& edge_at(const SolidInstance<BigFloat>& inst, int e) {
  return inst.edges[static_cast<std::size_t>(e)];
}

}  // namespace

BigFloat incidence_ve(const SolidInstance<BigFloat>& inst, int vertex, int edge) {
  const auto& e = edge_at(inst, edge);
  if (vertex != e.v0 && vertex != e.v1)
    throw std::invalid_argument("incidence_ve: vertex is not on edge");
  const int other = vertex == e.v0 ? e.v1 : e.v0;
  const Vec3<BigFloat>& pv = inst.vertices[static_cast<std::size_t>(vertex)].point;
  const Vec3<BigFloat>& po = inst.vertices[static_cast<std::size_t>(other)].point;
  Vec3<BigFloat> n = vec_sub(pv, po);
  const BigFloat len = norm(n);
  if (len.is_zero()) throw std::logic_error("incidence_ve: degenerate edge");
  return dot(vec_sub(pv, e.foot), n) / len;
}

BigFloat incidence_ef(const SolidInstance<BigFloat>& inst, int edge, int face) {
  const auto& f = inst.faces[static_cast<std::size_t>(face)];
  if (f.edges[0] != edge && f.edges[1] != edge && f.edges[2] != edge)
    throw std::invalid_argument("incidence_ef: edge is not on face");
  const auto& e = edge_at(inst, edge);
  const auto& a = inst.vertices[static_cast<std::size_t>(e.v0)].point;
  const auto& b = inst.vertices[static_cast<std::size_t>(e.v1)].point;
  int third = -1;
  for (int vi : f.verts)
    if (vi != e.v0 && vi != e.v1) third = vi;
  const auto& c = inst.vertices[static_cast<std::size_t>(third)].point;

  // In-plane outward normal at the edge: component of (edge midpoint - the
  // opposite vertex) orthogonal to the edge direction.
  const BigFloat half = BigFloat(1) / BigFloat(2);
  const Vec3<BigFloat> mid = vec_scale(vec_add(a, b), half);
  const Vec3<BigFloat> u = vec_sub(b, a);
  Vec3<BigFloat> d = vec_sub(mid, c);
  const BigFloat proj = dot(d, u) / dot(u, u);
  Vec3<BigFloat> n = vec_sub(d, vec_scale(u, proj));
  const BigFloat len = norm(n);
  if (len.is_zero()) throw std::logic_error("incidence_ef: degenerate normal");
  return dot(vec_sub(e.foot, f.foot), n) / len;
}

IncidenceNumbers<BigFloat> incidence_numbers(const SolidInstance<BigFloat>& inst) {
  const bool tetra = inst.family == Family::TriakisTetra;
  const int vA = inst.vertex_index(tetra ? "A" : "A+");
  const int vD = inst.vertex_index(tetra ? "d" : "D+++");
  const int eAB = inst.edge_index(tetra ? "AB" : "A+B+");
  const int eAd = inst.edge_index(tetra ? "Ad" : "A+D+++");
  const int fABd = inst.face_index(tetra ? "ABd" : "A+B+D+++");

  IncidenceNumbers<BigFloat> out{incidence_ve(inst, vA, eAB), incidence_ve(inst, vA, eAd),
                                 incidence_ve(inst, vD, eAd), incidence_ef(inst, eAB, fABd),
                                 incidence_ef(inst, eAd, fABd)};
  return out;
}

IncidenceNumbers<BigFloat> incidence_closed_forms(Family family, const BigFloat& r) {
  const BigFloat one(1, r.prec()), two(2, r.prec()), three(3, r.prec());
  const BigFloat sqrt2 = two.sqrt();
  const BigFloat r2 = r * r;
  IncidenceNumbers<BigFloat> out{BigFloat(0), BigFloat(0), BigFloat(0), BigFloat(0),
                                 BigFloat(0)};
  if (family == Family::TriakisTetra) {
    const BigFloat q9 = r2 - two * r + BigFloat(9);   // r^2 - 2r + 9
    const BigFloat q3 = r2 - two * r + three;         // r^2 - 2r + 3
    const BigFloat s9 = (three * q9).sqrt();
    out.ve1 = sqrt2;
    out.ve2 = (BigFloat(9) - r) / s9;
    out.ve3 = r * (r - one) / s9;
    out.ef1 = (three - r) / (three * q3).sqrt();
    out.ef2 = sqrt2 * r * (r - one) / (q3 * q9).sqrt();
  } else {
    const BigFloat q3 = r2 - two * r + three;             // r^2 - 2r + 3
    const BigFloat q23 = two * r2 - BigFloat(4) * r + three;  // 2r^2 - 4r + 3
    const BigFloat s3 = (three * q3).sqrt();
    out.ve1 = one / sqrt2;
    out.ve2 = (three - r) / s3;
    out.ve3 = r * (r - one) / s3;
    out.ef1 = (three - two * r) / (BigFloat(6) * q23).sqrt();
    out.ef2 = r * (r - one) / (q3 * q23).sqrt();
  }
  return out;
}

template <class S>
std::array<S, 3> normalized_flag_weights(Family family, const S& r) {
  const S one = ScalarTraits<S>::from_long(1);
  const S two = ScalarTraits<S>::from_long(2);
  const S three = ScalarTraits<S>::from_long(3);
  const S r2 = r * r;
  const S q3 = r2 - two * r + three;
  if (family == Family::TriakisTetra) {
    const S q9 = r2 - two * r + ScalarTraits<S>::from_long(9);
    return {(three - r) / q3,
            (ScalarTraits<S>::from_long(9) - r) * r * (r - one) / (q3 * q9),
            r * r * (r - one) * (r - one) / (q3 * q9)};
  }
  const S q23 = two * r2 - ScalarTraits<S>::from_long(4) * r + three;
  return {(three - two * r) / (two * q23), (three - r) * r * (r - one) / (q3 * q23),
          r * r * (r - one) * (r - one) / (q3 * q23)};
}

template std::array<Rational, 3> normalized_flag_weights(Family, const Rational&);
template std::array<BigFloat, 3> normalized_flag_weights(Family, const BigFloat&);

std::array<BigFloat, 3> raw_flag_weights(const SolidInstance<BigFloat>& inst) {
  const IncidenceNumbers<BigFloat> inc = incidence_numbers(inst);
  return {inc.ve1 * inc.ef1, inc.ve2 * inc.ef2, inc.ve3 * inc.ef2};
}

}  // namespace polyharm
