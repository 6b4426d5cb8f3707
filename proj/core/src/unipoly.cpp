#include "polyharm/unipoly.hpp"

#include <stdexcept>

namespace polyharm {

UniPoly::UniPoly(std::vector<Rational> ascending) : c_(std::move(ascending)) { trim(); }

UniPoly UniPoly::from_integers(std::initializer_list<long> descending) {
  std::vector<Rational> c(descending.size());
  std::size_t i = descending.size();
  for (long v : descending) c[--i] = Rational(v);
  return UniPoly(std::move(c));
}

void UniPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational UniPoly::eval(const Rational& x) const {
  Rational acc(0);
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

BigFloat UniPoly::eval(const BigFloat& x) const {
  BigFloat acc(0, x.prec());
  for (std::size_t i = c_.size(); i-- > 0;)
    acc = acc * x + BigFloat::from_rational(c_[i], x.prec());
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return UniPoly();
  std::vector<Rational> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rational(static_cast<long>(i));
  return UniPoly(std::move(d));
}

UniPoly UniPoly::operator-() const {
  std::vector<Rational> d(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) d[i] = -c_[i];
  return UniPoly(std::move(d));
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  std::vector<Rational> d(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) d[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) d[i] += b.c_[i];
  return UniPoly(std::move(d));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly();
  std::vector<Rational> d(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) d[i + j] += a.c_[i] * b.c_[j];
  return UniPoly(std::move(d));
}

UniPoly UniPoly::scaled(const Rational& s) const {
  std::vector<Rational> d(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) d[i] = c_[i] * s;
  return UniPoly(std::move(d));
}

UniPoly UniPoly::rem(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw std::invalid_argument("UniPoly::rem: division by zero polynomial");
  std::vector<Rational> r = a.c_;
  const int db = b.degree();
  while (static_cast<int>(r.size()) - 1 >= db) {
    while (!r.empty() && r.back().is_zero()) r.pop_back();
    const int dr = static_cast<int>(r.size()) - 1;
    if (dr < db) break;
    const Rational q = r.back() / b.leading();
    for (int i = 0; i <= db; ++i)
      r[static_cast<std::size_t>(dr - db + i)] -= q * b.c_[static_cast<std::size_t>(i)];
    r.pop_back();
  }
  return UniPoly(std::move(r));
}

UniPoly UniPoly::gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    UniPoly r = rem(a, b).primitive();
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  // monic
  return a.scaled(Rational(1) / a.leading());
}

UniPoly UniPoly::primitive() const {
  if (c_.empty()) return *this;
  Rational scale(0);
  for (const auto& c : c_) {
    Rational a = c.abs();
    if (scale < a) scale = a;
  }
  return scaled(Rational(1) / scale);
}

std::string UniPoly::str(const std::string& var) const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += c_[i].str();
    if (i > 0) out += "*" + var + "^" + std::to_string(i);
  }
  return out;
}

std::vector<UniPoly> sturm_chain(const UniPoly& p) {
  std::vector<UniPoly> chain;
  chain.push_back(p);
  chain.push_back(p.derivative());
  while (!chain.back().is_zero() && chain.back().degree() > 0) {
    UniPoly r = -UniPoly::rem(chain[chain.size() - 2], chain.back());
    if (r.is_zero()) break;
    chain.push_back(r.primitive());
  }
  return chain;
}

int sign_variations(const std::vector<UniPoly>& chain, const Rational& x) {
  int count = 0, prev = 0;
  for (const auto& q : chain) {
    const int s = q.sign_at(x);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}

int sturm_count(const std::vector<UniPoly>& chain, const Rational& lo, const Rational& hi) {
  return sign_variations(chain, lo) - sign_variations(chain, hi);
}

Rational root_bound(const UniPoly& p) {
  if (p.degree() < 1) return Rational(1);
  Rational best(0);
  for (int i = 0; i < p.degree(); ++i) {
    Rational a = (p[static_cast<std::size_t>(i)] / p.leading()).abs();
    if (best < a) best = a;
  }
  return best + Rational(1);
}

}  // namespace polyharm
