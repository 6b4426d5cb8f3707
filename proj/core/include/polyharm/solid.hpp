#ifndef POLYHARM_SOLID_HPP
#define POLYHARM_SOLID_HPP

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "polyharm/linear_form.hpp"

namespace polyharm {

enum class Family { TriakisTetra, TriakisOcta };

inline const char* family_name(Family f) {
  return f == Family::TriakisTetra ? "tetra" : "octa";
}

template <class S>
struct SolidVertex {
  std::string label;
  Vec3<S> point;
  bool apex = false;
};

// type 1: both endpoints are base vertices; type 2: v1 is a pyramid apex.
template <class S>
struct SolidEdge {
  std::string label;
  int v0 = -1, v1 = -1;
  int type = 1;
  Vec3<S> foot;  // foot of the orthogonal projection of the origin onto the edge line
};

template <class S>
struct SolidFace {
  std::string label;
  std::array<int, 3> verts{};  // two base vertices then the apex
  std::array<int, 3> edges{};
  Vec3<S> foot;        // foot on the supporting plane
  int orientation = 1;  // orientation * det(v0,v1,v2) > 0, i.e. outward normal
};

// A full vertex < edge < face chain. Types follow the three symmetry classes:
// 1 = base vertex on a base-base edge, 2 = base vertex on a base-apex edge,
// 3 = apex vertex on a base-apex edge.
struct Flag {
  int vertex = -1, edge = -1, face = -1;
  int type = 1;
};

// Labeled skeleton of a triakis solid at parameter r. The combinatorial
// structure is fixed for every r > 0; the degenerate parameters (tetra
// r=1, r=3; octa r=1, r=3/2) keep coincident faces as distinct faces.
template <class S>
struct SolidInstance {
  Family family = Family::TriakisTetra;
  S r;
  std::vector<SolidVertex<S>> vertices;
  std::vector<SolidEdge<S>> edges;
  std::vector<SolidFace<S>> faces;
  std::vector<Flag> flags;

  int vertex_index(const std::string& label) const {
    for (std::size_t i = 0; i < vertices.size(); ++i)
      if (vertices[i].label == label) return static_cast<int>(i);
    throw std::invalid_argument("unknown vertex label " + label);
  }
  int edge_index(const std::string& label) const {
    for (std::size_t i = 0; i < edges.size(); ++i)
      if (edges[i].label == label) return static_cast<int>(i);
    throw std::invalid_argument("unknown edge label " + label);
  }
  int face_index(const std::string& label) const {
    for (std::size_t i = 0; i < faces.size(); ++i)
      if (faces[i].label == label) return static_cast<int>(i);
    throw std::invalid_argument("unknown face label " + label);
  }

  // Vertex-on-edge incidence type (1, 2 or 3).
  int ve_type(int vertex, int edge) const {
    const auto& e = edges[static_cast<std::size_t>(edge)];
    if (vertex != e.v0 && vertex != e.v1)
      throw std::invalid_argument("vertex is not on edge");
    if (e.type == 1) return 1;
    return vertices[static_cast<std::size_t>(vertex)].apex ? 3 : 2;
  }
  // Edge-on-face incidence type (1 or 2).
  int ef_type(int edge) const { return edges[static_cast<std::size_t>(edge)].type; }
};

// Builds the full skeleton at parameter r > 0. Feet are computed by solving
// the orthogonal-projection conditions, not transcribed closed forms.
template <class S>
SolidInstance<S> build_solid(Family family, const S& r);

template <class S>
std::vector<Flag> enumerate_flags(const SolidInstance<S>& inst) {
  return inst.flags;
}

SolidInstance<BigFloat> to_bigfloat(const SolidInstance<Rational>& inst, mpfr_prec_t prec);

// Convenience: build at a rational parameter in float coordinates.
SolidInstance<BigFloat> build_solid_f(Family family, const Rational& r, mpfr_prec_t prec);

}  // namespace polyharm

#endif
