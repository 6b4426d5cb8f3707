#include "polyharm/solid.hpp"

#include <cassert>
#include <map>

namespace polyharm {

namespace {

template <class S>
S third_of(const S& v) {
  return v / ScalarTraits<S>::long_like(3, v);
}

// Foot of the orthogonal projection of the origin onto the line through a, b.
template <class S>
Vec3<S> line_foot(const Vec3<S>& a, const Vec3<S>& b) {
  const Vec3<S> d = vec_sub(b, a);
  const S t = -dot(a, d) / dot(d, d);
  return vec_add(a, vec_scale(d, t));
}

// Foot on the plane through a, b, c: solve the 2x2 Gram system for the
// in-plane coordinates of the projection.
template <class S>
Vec3<S> plane_foot(const Vec3<S>& a, const Vec3<S>& b, const Vec3<S>& c) {
  const Vec3<S> u = vec_sub(b, a), w = vec_sub(c, a);
  const S guu = dot(u, u), guw = dot(u, w), gww = dot(w, w);
  const S bu = -dot(a, u), bw = -dot(a, w);
  const S det = guu * gww - guw * guw;
  const S s = (bu * gww - bw * guw) / det;
  const S t = (guu * bw - guw * bu) / det;
  return vec_add(a, vec_add(vec_scale(u, s), vec_scale(w, t)));
}

template <class S>
void add_edge(SolidInstance<S>& inst, const std::string& label, int v0, int v1, int type) {
  SolidEdge<S> e;
  e.label = label;
  e.v0 = v0;
  e.v1 = v1;
  e.type = type;
  e.foot = line_foot(inst.vertices[static_cast<std::size_t>(v0)].point,
                     inst.vertices[static_cast<std::size_t>(v1)].point);
  inst.edges.push_back(std::move(e));
}

template <class S>
void add_face(SolidInstance<S>& inst, const std::string& label, int v0, int v1, int apex,
              std::map<std::pair<int, int>, int>& edge_of) {
  SolidFace<S> f;
  f.label = label;
  f.verts = {v0, v1, apex};
  const auto key = [](int a, int b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
  f.edges = {edge_of.at(key(v0, v1)), edge_of.at(key(v0, apex)), edge_of.at(key(v1, apex))};
  const auto& p0 = inst.vertices[static_cast<std::size_t>(v0)].point;
  const auto& p1 = inst.vertices[static_cast<std::size_t>(v1)].point;
  const auto& p2 = inst.vertices[static_cast<std::size_t>(apex)].point;
  f.foot = plane_foot(p0, p1, p2);
  const S d = det3(p0, p1, p2);
  if (ScalarTraits<S>::is_zero(d))
    throw std::logic_error("build_solid: degenerate face " + label);
  f.orientation = d.sign() > 0 ? 1 : -1;
  inst.faces.push_back(std::move(f));
}

template <class S>
void finalize_flags(SolidInstance<S>& inst) {
  for (std::size_t fi = 0; fi < inst.faces.size(); ++fi) {
    for (int ei : inst.faces[fi].edges) {
      const auto& e = inst.edges[static_cast<std::size_t>(ei)];
      for (int vi : {e.v0, e.v1}) {
        Flag fl;
        fl.vertex = vi;
        fl.edge = ei;
        fl.face = static_cast<int>(fi);
        fl.type = inst.ve_type(vi, ei);  // flag class matches the VE class
        inst.flags.push_back(fl);
      }
    }
  }
}

template <class S>
SolidInstance<S> build_tetra(const S& r) {
  SolidInstance<S> inst;
  inst.family = Family::TriakisTetra;
  inst.r = r;

  // Literals carry the parameter's precision so later divisions round there.
  const S one = ScalarTraits<S>::long_like(1, r);
  const Vec3<S> A{one, -one, -one}, B{-one, one, -one}, C{-one, -one, one}, D{one, one, one};
  inst.vertices.push_back({"A", A, false});
  inst.vertices.push_back({"B", B, false});
  inst.vertices.push_back({"C", C, false});
  inst.vertices.push_back({"D", D, false});
  // Apex over the face opposite the same-named base vertex, at distance
  // ratio r from the center: a over BCD, b over ACD, c over ABD, d over ABC.
  const auto apex = [&](const std::string& l, const Vec3<S>& p, const Vec3<S>& q,
                        const Vec3<S>& s) {
    Vec3<S> centroid{third_of(p[0] + q[0] + s[0]), third_of(p[1] + q[1] + s[1]),
                     third_of(p[2] + q[2] + s[2])};
    inst.vertices.push_back({l, vec_scale(centroid, r), true});
  };
  apex("a", B, C, D);
  apex("b", A, C, D);
  apex("c", A, B, D);
  apex("d", A, B, C);

  std::map<std::pair<int, int>, int> edge_of;
  const auto edge = [&](const char* l, int type) {
    const int i = inst.vertex_index(std::string(1, l[0]));
    const int j = inst.vertex_index(std::string(1, l[1]));
    edge_of[{std::min(i, j), std::max(i, j)}] = static_cast<int>(inst.edges.size());
    add_edge(inst, l, i, j, type);
  };
  for (const char* l : {"AB", "AC", "AD", "BC", "BD", "CD"}) edge(l, 1);
  for (const char* l : {"Ab", "Ac", "Ad", "Ba", "Bc", "Bd", "Ca", "Cb", "Cd", "Da", "Db", "Dc"})
    edge(l, 2);

  for (const char* l : {"ABc", "ABd", "ACb", "ACd", "ADb", "ADc", "BCa", "BCd", "BDa", "BDc",
                        "CDa", "CDb"})
    add_face(inst, l, inst.vertex_index(std::string(1, l[0])),
             inst.vertex_index(std::string(1, l[1])), inst.vertex_index(std::string(1, l[2])),
             edge_of);

  finalize_flags(inst);
  return inst;
}

template <class S>
SolidInstance<S> build_octa(const S& r) {
  SolidInstance<S> inst;
  inst.family = Family::TriakisOcta;
  inst.r = r;

  const S zero = ScalarTraits<S>::long_like(0, r);
  const S one = ScalarTraits<S>::long_like(1, r);
  const char sign_char[2] = {'+', '-'};
  const auto sgn = [&](int s) { return s == 0 ? one : -one; };

  for (int axis = 0; axis < 3; ++axis)
    for (int s = 0; s < 2; ++s) {
      Vec3<S> p{zero, zero, zero};
      p[static_cast<std::size_t>(axis)] = sgn(s);
      inst.vertices.push_back({std::string(1, "ABC"[axis]) + sign_char[s], p, false});
    }
  // D^{abc} = r (A^a + B^b + C^c) / 3
  const S r3 = third_of(r);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c) {
        Vec3<S> p{sgn(a) * r3, sgn(b) * r3, sgn(c) * r3};
        inst.vertices.push_back(
            {std::string("D") + sign_char[a] + sign_char[b] + sign_char[c], p, true});
      }

  std::map<std::pair<int, int>, int> edge_of;
  const auto vlabel = [&](char axis, int s) { return std::string(1, axis) + sign_char[s]; };
  const auto dlabel = [&](int a, int b, int c) {
    return std::string("D") + sign_char[a] + sign_char[b] + sign_char[c];
  };
  const auto edge = [&](const std::string& u, const std::string& v, int type) {
    const int i = inst.vertex_index(u), j = inst.vertex_index(v);
    edge_of[{std::min(i, j), std::max(i, j)}] = static_cast<int>(inst.edges.size());
    add_edge(inst, u + v, i, j, type);
  };
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      edge(vlabel('A', a), vlabel('B', b), 1);
      edge(vlabel('A', a), vlabel('C', b), 1);
      edge(vlabel('B', a), vlabel('C', b), 1);
    }
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c) {
        edge(vlabel('A', a), dlabel(a, b, c), 2);
        edge(vlabel('B', b), dlabel(a, b, c), 2);
        edge(vlabel('C', c), dlabel(a, b, c), 2);
      }

  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c) {
        const int d = inst.vertex_index(dlabel(a, b, c));
        const int va = inst.vertex_index(vlabel('A', a));
        const int vb = inst.vertex_index(vlabel('B', b));
        const int vc = inst.vertex_index(vlabel('C', c));
        add_face(inst, vlabel('A', a) + vlabel('B', b) + dlabel(a, b, c), va, vb, d, edge_of);
        add_face(inst, vlabel('A', a) + vlabel('C', c) + dlabel(a, b, c), va, vc, d, edge_of);
        add_face(inst, vlabel('B', b) + vlabel('C', c) + dlabel(a, b, c), vb, vc, d, edge_of);
      }

  finalize_flags(inst);
  return inst;
}

}  // namespace

template <class S>
SolidInstance<S> build_solid(Family family, const S& r) {
  if (!(ScalarTraits<S>::from_long(0) < r))
    throw std::invalid_argument("build_solid: parameter r must be positive");
  return family == Family::TriakisTetra ? build_tetra(r) : build_octa(r);
}

template SolidInstance<Rational> build_solid(Family, const Rational&);
template SolidInstance<BigFloat> build_solid(Family, const BigFloat&);

SolidInstance<BigFloat> to_bigfloat(const SolidInstance<Rational>& inst, mpfr_prec_t prec) {
  SolidInstance<BigFloat> out;
  out.family = inst.family;
  out.r = BigFloat::from_rational(inst.r, prec);
  for (const auto& v : inst.vertices)
    out.vertices.push_back({v.label, to_bigfloat(v.point, prec), v.apex});
  for (const auto& e : inst.edges) {
    SolidEdge<BigFloat> be;
    be.label = e.label;
    be.v0 = e.v0;
    be.v1 = e.v1;
    be.type = e.type;
    be.foot = to_bigfloat(e.foot, prec);
    out.edges.push_back(std::move(be));
  }
  for (const auto& f : inst.faces) {
    SolidFace<BigFloat> bf;
    bf.label = f.label;
    bf.verts = f.verts;
    bf.edges = f.edges;
    bf.foot = to_bigfloat(f.foot, prec);
    bf.orientation = f.orientation;
    out.faces.push_back(std::move(bf));
  }
  out.flags = inst.flags;
  return out;
}

SolidInstance<BigFloat> build_solid_f(Family family, const Rational& r, mpfr_prec_t prec) {
  return to_bigfloat(build_solid<Rational>(family, r), prec);
}

}  // namespace polyharm
