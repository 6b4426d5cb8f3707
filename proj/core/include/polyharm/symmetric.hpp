#ifndef POLYHARM_SYMMETRIC_HPP
#define POLYHARM_SYMMETRIC_HPP

#include <span>
#include <stdexcept>
#include <vector>

#include "polyharm/linear_form.hpp"

namespace polyharm {

namespace detail {
template <class S>
std::vector<Polynomial<S>> form_powers(const LinearForm<S>& f, int max_exp) {
  std::vector<Polynomial<S>> pw;
  pw.reserve(static_cast<std::size_t>(max_exp) + 1);
  pw.push_back(Polynomial<S>::constant(ScalarTraits<S>::from_long(1)));
  const Polynomial<S> base = f.to_polynomial();
  for (int k = 1; k <= max_exp; ++k) pw.push_back(pw.back() * base);
  return pw;
}
}  // namespace detail

// Complete symmetric polynomial h_m evaluated at two or three linear forms:
// the sum of all degree-m monomials in the forms, by direct enumeration of
// exponent multisets. h_0 = 1.
template <class S>
Polynomial<S> complete_symmetric(int m, std::span<const LinearForm<S>> forms) {
  if (m < 0) throw std::invalid_argument("complete_symmetric: m must be >= 0");
  if (forms.size() != 2 && forms.size() != 3)
    throw std::invalid_argument("complete_symmetric: expected 2 or 3 linear forms");

  std::vector<std::vector<Polynomial<S>>> pw;
  for (const auto& f : forms) pw.push_back(detail::form_powers(f, m));

  Polynomial<S> acc;
  if (forms.size() == 2) {
    for (int i = 0; i <= m; ++i) acc += pw[0][i] * pw[1][m - i];
  } else {
    for (int i = 0; i <= m; ++i)
      for (int j = 0; j <= m - i; ++j) acc += pw[0][i] * pw[1][j] * pw[2][m - i - j];
  }
  return acc;
}

template <class S>
Polynomial<S> complete_symmetric(int m, std::initializer_list<LinearForm<S>> forms) {
  std::vector<LinearForm<S>> v(forms);
  return complete_symmetric<S>(m, std::span<const LinearForm<S>>(v));
}

// h_0 .. h_max in one pass, sharing the power tables across degrees. Same
// enumeration as complete_symmetric; batched because the skeleton assembly
// needs every degree at once for each flag.
template <class S>
std::vector<Polynomial<S>> complete_symmetric_all(int max_m,
                                                  std::span<const LinearForm<S>> forms) {
  if (forms.size() != 2 && forms.size() != 3)
    throw std::invalid_argument("complete_symmetric_all: expected 2 or 3 linear forms");
  std::vector<std::vector<Polynomial<S>>> pw;
  for (const auto& f : forms) pw.push_back(detail::form_powers(f, max_m));

  std::vector<Polynomial<S>> out(static_cast<std::size_t>(max_m) + 1);
  if (forms.size() == 2) {
    for (int m = 0; m <= max_m; ++m)
      for (int i = 0; i <= m; ++i) out[m] += pw[0][i] * pw[1][m - i];
  } else {
    // Cache the two-form tails pw[1][j] * pw[2][k].
    std::vector<std::vector<Polynomial<S>>> tail(static_cast<std::size_t>(max_m) + 1);
    for (int j = 0; j <= max_m; ++j) {
      tail[j].resize(static_cast<std::size_t>(max_m - j) + 1);
      for (int k = 0; k + j <= max_m; ++k) tail[j][k] = pw[1][j] * pw[2][k];
    }
    for (int m = 0; m <= max_m; ++m)
      for (int i = 0; i <= m; ++i)
        for (int j = 0; j <= m - i; ++j) out[m] += pw[0][i] * tail[j][m - i - j];
  }
  return out;
}

}  // namespace polyharm

#endif
