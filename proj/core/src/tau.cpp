#include "polyharm/tau.hpp"

#include <stdexcept>

#include "polyharm/symmetric.hpp"

namespace polyharm {

namespace {

template <class S>
LinearForm<S> form_of(const Vec3<S>& p) {
  return LinearForm<S>{p};
}

}  // namespace

template <class S>
std::vector<std::array<Polynomial<S>, 2>> tau_vertex_parts_all(const SolidInstance<S>& inst,
                                                               int max_m) {
  std::vector<std::array<Polynomial<S>, 2>> parts(static_cast<std::size_t>(max_m) + 1);
  for (const auto& v : inst.vertices) {
    const Polynomial<S> base = form_of(v.point).to_polynomial();
    Polynomial<S> pw = Polynomial<S>::constant(ScalarTraits<S>::from_long(1));
    const std::size_t which = v.apex ? 1 : 0;
    parts[0][which] += pw;
    for (int m = 1; m <= max_m; ++m) {
      pw = pw * base;
      parts[static_cast<std::size_t>(m)][which] += pw;
    }
  }
  return parts;
}

template <class S>
std::array<Polynomial<S>, 2> tau_vertex_parts(const SolidInstance<S>& inst, int m) {
  return tau_vertex_parts_all(inst, m).back();
}

template <class S>
Polynomial<S> tau_vertex(const SolidInstance<S>& inst, int m) {
  if (m < 1) throw std::invalid_argument("tau_vertex: m must be >= 1");
  auto parts = tau_vertex_parts(inst, m);
  return parts[0] + parts[1];
}

template <class S>
std::vector<std::array<Polynomial<S>, 3>> tau_edge_parts_all(const SolidInstance<S>& inst,
                                                             int max_m) {
  std::vector<std::array<Polynomial<S>, 3>> parts(static_cast<std::size_t>(max_m) + 1);
  for (const auto& e : inst.edges) {
    const LinearForm<S> fe = form_of(e.foot);
    for (int vi : {e.v0, e.v1}) {
      const int type = e.type == 1 ? 1 : (inst.vertices[static_cast<std::size_t>(vi)].apex ? 3 : 2);
      const std::array<LinearForm<S>, 2> forms{
          form_of(inst.vertices[static_cast<std::size_t>(vi)].point), fe};
      auto h = complete_symmetric_all<S>(max_m, std::span<const LinearForm<S>>(forms));
      for (int m = 0; m <= max_m; ++m)
        parts[static_cast<std::size_t>(m)][static_cast<std::size_t>(type - 1)] += h[static_cast<std::size_t>(m)];
    }
  }
  return parts;
}

template <class S>
std::vector<std::array<Polynomial<S>, 3>> tau_face_parts_all(const SolidInstance<S>& inst,
                                                             int max_m) {
  std::vector<std::array<Polynomial<S>, 3>> parts(static_cast<std::size_t>(max_m) + 1);
  for (const Flag& fl : inst.flags) {
    const std::array<LinearForm<S>, 3> forms{
        form_of(inst.vertices[static_cast<std::size_t>(fl.vertex)].point),
        form_of(inst.edges[static_cast<std::size_t>(fl.edge)].foot),
        form_of(inst.faces[static_cast<std::size_t>(fl.face)].foot)};
    auto h = complete_symmetric_all<S>(max_m, std::span<const LinearForm<S>>(forms));
    for (int m = 0; m <= max_m; ++m)
      parts[static_cast<std::size_t>(m)][static_cast<std::size_t>(fl.type - 1)] += h[static_cast<std::size_t>(m)];
  }
  return parts;
}

Polynomial<BigFloat> tau_edge(const SolidInstance<BigFloat>& inst, int m) {
  if (m < 1) throw std::invalid_argument("tau_edge: m must be >= 1");
  const auto inc = incidence_numbers(inst);
  const auto parts = tau_edge_parts_all(inst, m).back();
  Polynomial<BigFloat> out;
  for (int t = 1; t <= 3; ++t) out += parts[static_cast<std::size_t>(t - 1)].scaled(inc.ve(t));
  return out;
}

template <class S>
Polynomial<S> tau_face(const SolidInstance<S>& inst, int m, FaceWeightMode mode) {
  if (m < 1) throw std::invalid_argument("tau_face: m must be >= 1");
  const auto parts = tau_face_parts_all(inst, m).back();
  std::array<S, 3> w{ScalarTraits<S>::from_long(0), ScalarTraits<S>::from_long(0),
                     ScalarTraits<S>::from_long(0)};
  if (mode == FaceWeightMode::NormalizedClosedForm) {
    w = normalized_flag_weights(inst.family, inst.r);
  } else {
    if constexpr (ScalarTraits<S>::kExact) {
      throw std::invalid_argument("tau_face: raw geometric weights need float geometry");
    } else {
      w = raw_flag_weights(inst);
    }
  }
  Polynomial<S> out;
  for (int t = 0; t < 3; ++t) out += parts[static_cast<std::size_t>(t)].scaled(w[static_cast<std::size_t>(t)]);
  return out;
}

std::vector<Polynomial<Rational>> tau_all_exact(const SolidInstance<Rational>& inst, int k,
                                                int max_m) {
  std::vector<Polynomial<Rational>> out(static_cast<std::size_t>(max_m) + 1);
  if (k == 0) {
    auto parts = tau_vertex_parts_all(inst, max_m);
    for (int m = 1; m <= max_m; ++m)
      out[static_cast<std::size_t>(m)] = parts[static_cast<std::size_t>(m)][0] + parts[static_cast<std::size_t>(m)][1];
    return out;
  }
  if (k == 2 || k == 3) {
    const auto w = normalized_flag_weights(inst.family, inst.r);
    auto parts = tau_face_parts_all(inst, max_m);
    for (int m = 1; m <= max_m; ++m)
      for (int t = 0; t < 3; ++t)
        out[static_cast<std::size_t>(m)] += parts[static_cast<std::size_t>(m)][static_cast<std::size_t>(t)].scaled(w[static_cast<std::size_t>(t)]);
    return out;
  }
  throw std::invalid_argument("tau_all_exact: edge problem (k=1) has irrational weights");
}

std::vector<Polynomial<BigFloat>> tau_all_float(const SolidInstance<Rational>& inst, int k,
                                                int max_m, mpfr_prec_t prec) {
  std::vector<Polynomial<BigFloat>> out(static_cast<std::size_t>(max_m) + 1);
  if (k == 1) {
    // Exact per-class assembly, float weights.
    const auto inc = incidence_numbers(to_bigfloat(inst, prec));
    auto parts = tau_edge_parts_all(inst, max_m);
    for (int m = 1; m <= max_m; ++m)
      for (int t = 1; t <= 3; ++t)
        out[static_cast<std::size_t>(m)] +=
            to_bigfloat(parts[static_cast<std::size_t>(m)][static_cast<std::size_t>(t - 1)], prec).scaled(inc.ve(t));
    return out;
  }
  auto exact = tau_all_exact(inst, k, max_m);
  for (int m = 1; m <= max_m; ++m)
    out[static_cast<std::size_t>(m)] = to_bigfloat(exact[static_cast<std::size_t>(m)], prec);
  return out;
}

std::vector<Polynomial<BigFloat>> tau_all_float(const SolidInstance<BigFloat>& inst, int k,
                                                int max_m) {
  std::vector<Polynomial<BigFloat>> out(static_cast<std::size_t>(max_m) + 1);
  if (k == 0) {
    auto parts = tau_vertex_parts_all(inst, max_m);
    for (int m = 1; m <= max_m; ++m)
      out[static_cast<std::size_t>(m)] = parts[static_cast<std::size_t>(m)][0] + parts[static_cast<std::size_t>(m)][1];
  } else if (k == 1) {
    const auto inc = incidence_numbers(inst);
    auto parts = tau_edge_parts_all(inst, max_m);
    for (int m = 1; m <= max_m; ++m)
      for (int t = 1; t <= 3; ++t)
        out[static_cast<std::size_t>(m)] += parts[static_cast<std::size_t>(m)][static_cast<std::size_t>(t - 1)].scaled(inc.ve(t));
  } else {
    const auto w = normalized_flag_weights(inst.family, inst.r);
    auto parts = tau_face_parts_all(inst, max_m);
    for (int m = 1; m <= max_m; ++m)
      for (int t = 0; t < 3; ++t)
        out[static_cast<std::size_t>(m)] += parts[static_cast<std::size_t>(m)][static_cast<std::size_t>(t)].scaled(w[static_cast<std::size_t>(t)]);
  }
  return out;
}

template std::array<Polynomial<Rational>, 2> tau_vertex_parts(const SolidInstance<Rational>&, int);
template std::array<Polynomial<BigFloat>, 2> tau_vertex_parts(const SolidInstance<BigFloat>&, int);
template std::vector<std::array<Polynomial<Rational>, 2>> tau_vertex_parts_all(
    const SolidInstance<Rational>&, int);
template std::vector<std::array<Polynomial<BigFloat>, 2>> tau_vertex_parts_all(
    const SolidInstance<BigFloat>&, int);
template std::vector<std::array<Polynomial<Rational>, 3>> tau_edge_parts_all(
    const SolidInstance<Rational>&, int);
template std::vector<std::array<Polynomial<BigFloat>, 3>> tau_edge_parts_all(
    const SolidInstance<BigFloat>&, int);
template std::vector<std::array<Polynomial<Rational>, 3>> tau_face_parts_all(
    const SolidInstance<Rational>&, int);
template std::vector<std::array<Polynomial<BigFloat>, 3>> tau_face_parts_all(
    const SolidInstance<BigFloat>&, int);
template Polynomial<Rational> tau_vertex(const SolidInstance<Rational>&, int);
template Polynomial<BigFloat> tau_vertex(const SolidInstance<BigFloat>&, int);
template Polynomial<Rational> tau_face(const SolidInstance<Rational>&, int, FaceWeightMode);
template Polynomial<BigFloat> tau_face(const SolidInstance<BigFloat>&, int, FaceWeightMode);

}  // namespace polyharm
