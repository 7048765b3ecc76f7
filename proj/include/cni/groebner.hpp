#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "cni/budget.hpp"
#include "cni/monomial_order.hpp"
#include "cni/polynomial.hpp"

namespace cni {

/// Reduced, monic Groebner basis, generators sorted by increasing leading
/// monomial. The zero ideal has no generators; the unit ideal is [1].
class GroebnerBasis {
 public:
  GroebnerBasis(std::vector<Polynomial> generators, MonomialOrder order, bool reduced)
      : generators_(std::move(generators)), order_(std::move(order)), reduced_(reduced) {}

  const std::vector<Polynomial>& generators() const { return generators_; }
  const MonomialOrder& order() const { return order_; }
  bool reduced() const { return reduced_; }

  std::size_t size() const { return generators_.size(); }

 private:
  std::vector<Polynomial> generators_;
  MonomialOrder order_;
  bool reduced_;
};

/// Counters from one Buchberger run.
struct GroebnerStats {
  std::size_t pairs_considered = 0;
  std::size_t pairs_skipped = 0;  // removed by the product or chain criterion
  std::size_t zero_reductions = 0;
  std::size_t reduction_steps = 0;
};

/// Buchberger's algorithm with the Gebauer-Moeller update (product and chain
/// criteria); pairs are taken by lowest sugar degree, then lcm degree.
/// Zero inputs are ignored.
/// Output is a pure function of the input list and order. Throws
/// ResourceExhausted when the budget runs out.
GroebnerBasis groebner_basis(std::span<const Polynomial> F, const MonomialOrder& ord,
                             const ResourceBudget& budget = {}, GroebnerStats* stats = nullptr);

/// Generators of <F> intersected with the ring of the kept variables.
struct EliminationResult {
  std::vector<Polynomial> generators;
  /// Block order used; restricted to kept variables it orders the generators.
  MonomialOrder order = MonomialOrder::grevlex(0);
  std::vector<std::size_t> eliminated;
  std::vector<std::size_t> kept;
};

/// Eliminates elim_vars from <F> with a block order (eliminated block first,
/// graded reverse lex inside each block, table order within a block).
/// The result is itself a reduced Groebner basis of the elimination ideal.
EliminationResult eliminate(std::span<const Polynomial> F, std::span<const std::size_t> elim_vars,
                            const ResourceBudget& budget = {});

/// (<F> : (f1*...*fk)^inf) intersected with the kept ring. Same ideal as
/// eliminating u from <F, u*f1*...*fk - 1>; internally every factor gets its
/// own auxiliary variable, placed after elim_vars in the eliminated block,
/// which keeps the intermediate bases much smaller. Generators use the table
/// of F.
EliminationResult eliminate_saturated(std::span<const Polynomial> F, std::span<const Polynomial> factors,
                                      std::span<const std::size_t> elim_vars,
                                      const ResourceBudget& budget = {});

bool ideal_membership(const Polynomial& f, const GroebnerBasis& G);
bool ideal_membership(const Polynomial& f, const EliminationResult& I);

/// True when the ideal is <1>.
bool ideal_is_trivial(const GroebnerBasis& G);
bool ideal_is_trivial(const EliminationResult& I);
bool ideal_is_trivial(std::span<const Polynomial> generators);

}  // namespace cni
