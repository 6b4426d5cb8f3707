#include "polyharm/format.hpp"

namespace polyharm {

std::string poly_str_rational(const Polynomial<Rational>& p) { return poly_str(p); }
std::string poly_str_bigfloat(const Polynomial<BigFloat>& p) { return poly_str(p); }

}  // namespace polyharm
