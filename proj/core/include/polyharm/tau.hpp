#ifndef POLYHARM_TAU_HPP
#define POLYHARM_TAU_HPP

#include <array>
#include <vector>

#include "polyharm/incidence.hpp"
#include "polyharm/polynomial.hpp"
#include "polyharm/solid.hpp"

namespace polyharm {

// The skeleton polynomials tau_m^(k):
//   k = 0:  sum over vertices of <p_v, x>^m
//   k = 1:  sum over vertex-on-edge pairs of [v:e] h_m(<p_v,x>, <p_e,x>)
//   k = 2:  sum over flags of [v:e][e:f] h_m(<p_v,x>, <p_e,x>, <p_f,x>)
// Each splits into per-class components with constant incidence weight; the
// *_parts functions return the unweighted components indexed by class.

template <class S>
std::array<Polynomial<S>, 2> tau_vertex_parts(const SolidInstance<S>& inst, int m);

// parts[m][class-1], m = 0..max_m (degree-0 entries are the term counts).
template <class S>
std::vector<std::array<Polynomial<S>, 2>> tau_vertex_parts_all(const SolidInstance<S>& inst,
                                                               int max_m);
template <class S>
std::vector<std::array<Polynomial<S>, 3>> tau_edge_parts_all(const SolidInstance<S>& inst,
                                                             int max_m);
template <class S>
std::vector<std::array<Polynomial<S>, 3>> tau_face_parts_all(const SolidInstance<S>& inst,
                                                             int max_m);

template <class S>
Polynomial<S> tau_vertex(const SolidInstance<S>& inst, int m);

// Edge problem: weights are the geometric incidence numbers (irrational in
// r), so the assembled polynomial is float-valued.
Polynomial<BigFloat> tau_edge(const SolidInstance<BigFloat>& inst, int m);

enum class FaceWeightMode {
  NormalizedClosedForm,  // rational rescaled ve*ef products (the default; for
                         // the tetra only the weight ratio is meaningful)
  RawGeometric           // un-rescaled geometric products, BigFloat only
};

template <class S>
Polynomial<S> tau_face(const SolidInstance<S>& inst, int m,
                       FaceWeightMode mode = FaceWeightMode::NormalizedClosedForm);

// Batched drivers used by the coefficient pipeline: all tau_m, m = 1..max_m.
// Exact-route (k = 0 and k = 2 with normalized weights):
std::vector<Polynomial<Rational>> tau_all_exact(const SolidInstance<Rational>& inst, int k,
                                                int max_m);
// Float route; k = 1 assembles the exact per-class parts, then weights them
// with the geometric incidence numbers at precision prec.
std::vector<Polynomial<BigFloat>> tau_all_float(const SolidInstance<Rational>& inst, int k,
                                                int max_m, mpfr_prec_t prec);
// As above but from float geometry (needed at irrational parameters).
std::vector<Polynomial<BigFloat>> tau_all_float(const SolidInstance<BigFloat>& inst, int k,
                                                int max_m);

}  // namespace polyharm

#endif
