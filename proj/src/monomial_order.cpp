#include "cni/monomial_order.hpp"

#include <numeric>

#include "cni/errors.hpp"

namespace cni {

namespace {

std::vector<std::size_t> iota_vars(std::size_t n) {
  std::vector<std::size_t> v(n);
  std::iota(v.begin(), v.end(), std::size_t{0});
  return v;
}

std::string join(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s;
}

}  // namespace

MonomialOrder::MonomialOrder(Kind kind, std::vector<Segment> segments)
    : kind_(kind), segments_(std::move(segments)) {
  std::size_t total = 0;
  for (const auto& s : segments_) total += s.vars.size();
  std::vector<bool> seen(total, false);
  for (const auto& s : segments_) {
    for (std::size_t v : s.vars) {
      if (v >= total || seen[v]) throw Error("monomial order variables must be a permutation");
      seen[v] = true;
    }
  }
  nvars_ = total;
}

MonomialOrder MonomialOrder::lex(std::vector<std::size_t> vars) {
  return MonomialOrder(Kind::Lex, {Segment{false, std::move(vars)}});
}

MonomialOrder MonomialOrder::grevlex(std::vector<std::size_t> vars) {
  return MonomialOrder(Kind::GrevLex, {Segment{true, std::move(vars)}});
}

MonomialOrder MonomialOrder::lex(std::size_t nvars) { return lex(iota_vars(nvars)); }

MonomialOrder MonomialOrder::grevlex(std::size_t nvars) { return grevlex(iota_vars(nvars)); }

MonomialOrder MonomialOrder::block(std::vector<std::size_t> eliminated,
                                   std::vector<std::size_t> kept) {
  return MonomialOrder(Kind::Block,
                       {Segment{true, std::move(eliminated)}, Segment{true, std::move(kept)}});
}

const std::vector<std::size_t>& MonomialOrder::eliminated() const {
  static const std::vector<std::size_t> none;
  return kind_ == Kind::Block ? segments_[0].vars : none;
}

const std::vector<std::size_t>& MonomialOrder::kept() const {
  return kind_ == Kind::Block ? segments_[1].vars : segments_[0].vars;
}

int MonomialOrder::compare_segment(const Segment& s, const Monomial& a, const Monomial& b) {
  if (s.graded) {
    std::uint32_t da = 0;
    std::uint32_t db = 0;
    for (std::size_t v : s.vars) {
      da += a.exponent(v);
      db += b.exponent(v);
    }
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = s.vars.size(); i-- > 0;) {
      std::size_t v = s.vars[i];
      if (a.exponent(v) != b.exponent(v)) return a.exponent(v) > b.exponent(v) ? -1 : 1;
    }
    return 0;
  }
  for (std::size_t v : s.vars) {
    if (a.exponent(v) != b.exponent(v)) return a.exponent(v) < b.exponent(v) ? -1 : 1;
  }
  return 0;
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  for (const auto& s : segments_) {
    int c = compare_segment(s, a, b);
    if (c != 0) return c;
  }
  return 0;
}

std::string MonomialOrder::describe() const {
  switch (kind_) {
    case Kind::Lex:
      return "lex(" + join(segments_[0].vars) + ")";
    case Kind::GrevLex:
      return "grevlex(" + join(segments_[0].vars) + ")";
    case Kind::Block:
      return "block(grevlex(" + join(segments_[0].vars) + ") > grevlex(" +
             join(segments_[1].vars) + "))";
  }
  return {};
}

}  // namespace cni
