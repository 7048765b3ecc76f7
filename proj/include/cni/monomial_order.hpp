#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cni/monomial.hpp"

namespace cni {

/// Term order on monomials of a fixed variable count.
///
/// Variable lists are given largest first: lex({1, 0}) makes variable 1
/// greater than variable 0. Block orders compare the eliminated block
/// first, so any monomial containing an eliminated variable exceeds every
/// monomial free of them.
class MonomialOrder {
 public:
  enum class Kind { Lex, GrevLex, Block };

  static MonomialOrder lex(std::vector<std::size_t> vars);
  static MonomialOrder grevlex(std::vector<std::size_t> vars);
  /// Identity permutation over nvars variables.
  static MonomialOrder lex(std::size_t nvars);
  static MonomialOrder grevlex(std::size_t nvars);
  /// Eliminated block > kept block, graded reverse lex inside each block.
  /// The two lists must partition the variables.
  static MonomialOrder block(std::vector<std::size_t> eliminated, std::vector<std::size_t> kept);

  Kind kind() const { return kind_; }
  std::size_t nvars() const { return nvars_; }
  const std::vector<std::size_t>& eliminated() const;
  const std::vector<std::size_t>& kept() const;

  /// Negative, zero or positive as a is less than, equal to or greater than b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  std::string describe() const;

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  struct Segment {
    bool graded = false;
    std::vector<std::size_t> vars;
    friend bool operator==(const Segment&, const Segment&) = default;
  };

  MonomialOrder(Kind kind, std::vector<Segment> segments);
  static int compare_segment(const Segment& s, const Monomial& a, const Monomial& b);

  Kind kind_ = Kind::GrevLex;
  std::size_t nvars_ = 0;
  std::vector<Segment> segments_;
};

}  // namespace cni
