#include "cni/monomial.hpp"

#include <algorithm>
#include <cassert>
#include <limits>

#include "cni/errors.hpp"

namespace cni {

Monomial::Monomial(std::size_t nvars) : nvars_(static_cast<std::uint32_t>(nvars)) {
  if (nvars > kMaxVariables)
    throw Error("too many variables (" + std::to_string(nvars) + " > " +
                std::to_string(kMaxVariables) + ")");
}

Monomial Monomial::variable(std::size_t nvars, std::size_t var, Exponent exponent) {
  Monomial m(nvars);
  m.set_exponent(var, exponent);
  return m;
}

void Monomial::set_exponent(std::size_t var, Exponent e) {
  if (var >= nvars_) throw Error("variable index out of range");
  degree_ = degree_ - exps_[var] + e;
  exps_[var] = e;
}

std::vector<std::pair<std::size_t, Monomial::Exponent>> Monomial::support() const {
  std::vector<std::pair<std::size_t, Exponent>> out;
  for (std::size_t i = 0; i < nvars_; ++i)
    if (exps_[i] != 0) out.emplace_back(i, exps_[i]);
  return out;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < nvars_; ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < nvars_; ++i)
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  assert(a.nvars_ == b.nvars_);
  Monomial m = a;
  for (std::size_t i = 0; i < a.nvars_; ++i) {
    unsigned e = unsigned{a.exps_[i]} + b.exps_[i];
    if (e > std::numeric_limits<Monomial::Exponent>::max()) throw Error("exponent overflow");
    m.exps_[i] = static_cast<Monomial::Exponent>(e);
  }
  m.degree_ = a.degree_ + b.degree_;
  return m;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  assert(b.divides(a));
  Monomial m = a;
  for (std::size_t i = 0; i < a.nvars_; ++i) m.exps_[i] -= b.exps_[i];
  m.degree_ = a.degree_ - b.degree_;
  return m;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial m = a;
  m.degree_ = 0;
  for (std::size_t i = 0; i < a.nvars_; ++i) {
    m.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
    m.degree_ += m.exps_[i];
  }
  return m;
}

bool operator==(const Monomial& a, const Monomial& b) {
  if (a.nvars_ != b.nvars_ || a.degree_ != b.degree_) return false;
  return std::equal(a.exps_.begin(), a.exps_.begin() + a.nvars_, b.exps_.begin());
}

int canonical_compare(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  for (std::size_t i = a.nvars(); i-- > 0;) {
    if (a.exponent(i) != b.exponent(i)) return a.exponent(i) > b.exponent(i) ? -1 : 1;
  }
  return 0;
}

}  // namespace cni
