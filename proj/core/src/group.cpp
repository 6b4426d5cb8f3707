#include "polyharm/group.hpp"

namespace polyharm {

namespace {
std::vector<SignedPerm> make_elements(bool even_signs_only) {
  static const std::array<std::array<int, 3>, 6> perms = {
      {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
  std::vector<SignedPerm> out;
  for (const auto& p : perms)
    for (int mask = 0; mask < 8; ++mask) {
      SignedPerm g;
      g.perm = p;
      int flips = 0;
      for (int i = 0; i < 3; ++i)
        if (mask & (1 << i)) {
          g.signs[i] = -1;
          ++flips;
        }
      if (even_signs_only && (flips & 1)) continue;
      out.push_back(g);
    }
  return out;
}
}  // namespace

const std::vector<SignedPerm>& group_elements(Group g) {
  static const std::vector<SignedPerm> a3 = make_elements(true);
  static const std::vector<SignedPerm> b3 = make_elements(false);
  return g == Group::A3 ? a3 : b3;
}

bool is_invariant(const Polynomial<Rational>& f, Group g) {
  for (const auto& el : group_elements(g))
    if (act(el, f) != f) return false;
  return true;
}

}  // namespace polyharm
