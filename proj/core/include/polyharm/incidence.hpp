#ifndef POLYHARM_INCIDENCE_HPP
#define POLYHARM_INCIDENCE_HPP

#include <array>

#include "polyharm/solid.hpp"

namespace polyharm {

// Signed incidence numbers relating feet of nested faces through outward
// unit normals. They may be negative for some r; never NaN for r > 0.
template <class S>
struct IncidenceNumbers {
  S ve1, ve2, ve3;  // vertex-on-edge, by incidence class
  S ef1, ef2;       // edge-on-face

  S ve(int type) const { return type == 1 ? ve1 : (type == 2 ? ve2 : ve3); }
  S ef(int type) const { return type == 1 ? ef1 : ef2; }
};

// Geometric evaluation for a specific incidence pair:
//   [v:e]  from  p_v - p_e = [v:e] n,  n the outward unit normal of the edge
//   boundary at v (unit vector from the other endpoint towards v);
//   [e:f]  likewise with the outward in-plane unit normal of the face
//   boundary at e. Both need square roots, hence BigFloat only.
BigFloat incidence_ve(const SolidInstance<BigFloat>& inst, int vertex, int edge);
BigFloat incidence_ef(const SolidInstance<BigFloat>& inst, int edge, int face);

// One representative pair per incidence class.
IncidenceNumbers<BigFloat> incidence_numbers(const SolidInstance<BigFloat>& inst);

// Transcribed closed forms, used as test oracles against the geometric path.
IncidenceNumbers<BigFloat> incidence_closed_forms(Family family, const BigFloat& r);

// The face-problem weights ve_i * ef_j rescaled by a common positive factor
// that clears the radicals; only the ratio of the three weights matters.
// Index 0,1,2 = flag types 1,2,3. Rational in r, so exact pipelines can use
// them; this is the default weighting of the face assembly.
template <class S>
std::array<S, 3> normalized_flag_weights(Family family, const S& r);

// Raw geometric products ve * ef per flag type.
std::array<BigFloat, 3> raw_flag_weights(const SolidInstance<BigFloat>& inst);

}  // namespace polyharm

#endif
