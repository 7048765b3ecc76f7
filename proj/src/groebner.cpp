#include "cni/groebner.hpp"

#include <algorithm>

#include "cni/errors.hpp"
#include "cni/reduction.hpp"
#include "ordered_poly.hpp"

namespace cni {

namespace {

using detail::Terms;

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
  std::uint32_t sugar = 0;
};

std::uint32_t max_degree(const Terms& t) {
  std::uint32_t d = 0;
  for (const auto& x : t) d = std::max(d, x.monomial.degree());
  return d;
}

class Buchberger {
 public:
  Buchberger(const MonomialOrder& ord, const ResourceBudget& budget, GroebnerStats* stats)
      : ord_(ord), guard_(budget), stats_(stats) {}

  // Returns false once the unit ideal is detected.
  bool add_input(Terms f) {
    detail::SugarTrack track{&sugar_divisors_, max_degree(f)};
    Terms h = detail::reduce(std::move(f), active_divisors(), ord_, &guard_, &track);
    return insert(std::move(h), track.sugar);
  }

  bool run() {
    while (!pairs_.empty()) {
      guard_.tick();
      auto it = std::min_element(pairs_.begin(), pairs_.end(), [&](const Pair& a, const Pair& b) {
        if (a.sugar != b.sugar) return a.sugar < b.sugar;
        if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
        int c = ord_.compare(a.lcm, b.lcm);
        if (c != 0) return c < 0;
        return std::pair(a.j, a.i) < std::pair(b.j, b.i);
      });
      Pair p = *it;
      pairs_.erase(it);
      if (stats_) ++stats_->pairs_considered;

      const Terms& f = polys_[p.i];
      const Terms& g = polys_[p.j];
      Terms s = f;
      Monomial mf = p.lcm / f.front().monomial;
      for (auto& t : s) t.monomial = t.monomial * mf;
      s = detail::sub_scaled(s, 0, Rational(1), p.lcm / g.front().monomial, g, ord_, true);

      detail::SugarTrack track{&sugar_divisors_, p.sugar};
      Terms h = detail::reduce(std::move(s), active_divisors(), ord_, &guard_, &track);
      if (h.empty()) {
        if (stats_) ++stats_->zero_reductions;
        continue;
      }
      if (!insert(std::move(h), track.sugar)) return false;
    }
    return true;
  }

  // Interreduced, monic, sorted by increasing leading monomial.
  std::vector<Terms> reduced_basis() {
    std::vector<std::size_t> idx;
    for (std::size_t k = 0; k < polys_.size(); ++k)
      if (active_[k]) idx.push_back(k);
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
      return ord_.compare(polys_[a].front().monomial, polys_[b].front().monomial) < 0;
    });
    std::vector<Terms> out;
    for (std::size_t k : idx) {
      std::vector<const Terms*> others;
      for (std::size_t m : idx)
        if (m != k) others.push_back(&polys_[m]);
      Terms r = detail::reduce(polys_[k], others, ord_, &guard_);
      detail::make_monic(r);
      out.push_back(std::move(r));
    }
    if (stats_) stats_->reduction_steps = guard_.steps();
    return out;
  }

 private:
  std::vector<const Terms*> active_divisors() {
    std::vector<const Terms*> out;
    sugar_divisors_.clear();
    for (std::size_t k = 0; k < polys_.size(); ++k) {
      if (!active_[k]) continue;
      out.push_back(&polys_[k]);
      sugar_divisors_.push_back(sugar_[k]);
    }
    return out;
  }

  bool insert(Terms h, std::uint32_t sugar) {
    if (h.empty()) return true;
    detail::make_monic(h);
    if (h.front().monomial.is_one()) return false;
    polys_.push_back(std::move(h));
    sugar_.push_back(sugar);
    active_.push_back(false);
    update(polys_.size() - 1);
    return true;
  }

  // Gebauer-Moeller installation of basis element k.
  void update(std::size_t k) {
    const Monomial& lh = polys_[k].front().monomial;

    std::vector<Pair> candidates;
    for (std::size_t g = 0; g < k; ++g)
      if (active_[g]) {
        Monomial l = lcm(polys_[g].front().monomial, lh);
        std::uint32_t sg = std::max(sugar_[g] + l.degree() - polys_[g].front().monomial.degree(),
                                    sugar_[k] + l.degree() - lh.degree());
        candidates.push_back({g, k, l, sg});
      }

    std::vector<Pair> kept;
    for (std::size_t a = 0; a < candidates.size(); ++a) {
      const Pair& c = candidates[a];
      bool keep = lh.coprime(polys_[c.i].front().monomial);
      if (!keep) {
        keep = true;
        for (std::size_t b = a + 1; b < candidates.size() && keep; ++b)
          if (candidates[b].lcm.divides(c.lcm)) keep = false;
        for (const Pair& d : kept)
          if (keep && d.lcm.divides(c.lcm)) keep = false;
      }
      if (keep)
        kept.push_back(c);
      else if (stats_)
        ++stats_->pairs_skipped;
    }

    std::vector<Pair> next;
    for (auto& p : pairs_) {
      bool drop = lh.divides(p.lcm) && lcm(polys_[p.i].front().monomial, lh) != p.lcm &&
                  lcm(lh, polys_[p.j].front().monomial) != p.lcm;
      if (drop) {
        if (stats_) ++stats_->pairs_skipped;
      } else {
        next.push_back(std::move(p));
      }
    }
    for (auto& c : kept) {
      if (lh.coprime(polys_[c.i].front().monomial)) {
        if (stats_) ++stats_->pairs_skipped;
        continue;
      }
      next.push_back(std::move(c));
    }
    pairs_ = std::move(next);

    for (std::size_t g = 0; g < k; ++g)
      if (active_[g] && lh.divides(polys_[g].front().monomial)) active_[g] = false;
    active_[k] = true;
  }

  const MonomialOrder& ord_;
  BudgetGuard guard_;
  GroebnerStats* stats_;
  std::vector<Terms> polys_;
  std::vector<bool> active_;
  std::vector<std::uint32_t> sugar_;
  std::vector<std::uint32_t> sugar_divisors_;
  std::vector<Pair> pairs_;
};

}  // namespace

GroebnerBasis groebner_basis(std::span<const Polynomial> F, const MonomialOrder& ord,
                             const ResourceBudget& budget, GroebnerStats* stats) {
  VarTablePtr vars;
  for (const auto& f : F) {
    if (!vars)
      vars = f.vars();
    else if (!same_table(vars, f.vars()))
      throw VarTableMismatch();
  }
  if (vars && vars->size() != ord.nvars())
    throw Error("monomial order does not match the variable table");

  Buchberger bb(ord, budget, stats);
  bool unit = false;
  for (const auto& f : F) {
    if (f.is_zero()) continue;
    if (!bb.add_input(detail::to_ordered(f, ord))) {
      unit = true;
      break;
    }
  }
  if (!unit) unit = !bb.run();
  if (unit) return GroebnerBasis({Polynomial::constant(vars, 1)}, ord, true);

  std::vector<Polynomial> gens;
  for (auto& t : bb.reduced_basis()) gens.push_back(detail::from_ordered(vars, std::move(t)));
  return GroebnerBasis(std::move(gens), ord, true);
}

EliminationResult eliminate(std::span<const Polynomial> F, std::span<const std::size_t> elim_vars,
                            const ResourceBudget& budget) {
  EliminationResult out;
  if (F.empty()) return out;
  std::size_t n = F.front().nvars();
  std::vector<bool> is_elim(n, false);
  for (std::size_t v : elim_vars) {
    if (v >= n) throw Error("eliminated variable out of range");
    is_elim[v] = true;
  }
  for (std::size_t v = 0; v < n; ++v) (is_elim[v] ? out.eliminated : out.kept).push_back(v);
  out.order = MonomialOrder::block(out.eliminated, out.kept);

  GroebnerBasis gb = groebner_basis(F, out.order, budget);
  for (const auto& g : gb.generators()) {
    bool free = std::none_of(out.eliminated.begin(), out.eliminated.end(),
                             [&](std::size_t v) { return g.contains(v); });
    if (free) out.generators.push_back(g);
  }
  return out;
}

namespace {

Polynomial retable(const Polynomial& f, const VarTablePtr& vars) {
  std::vector<Term> terms;
  terms.reserve(f.terms().size());
  for (const auto& t : f.terms()) {
    Monomial m(vars->size());
    for (auto [v, e] : t.monomial.support()) m.set_exponent(v, e);
    terms.push_back({m, t.coeff});
  }
  return Polynomial::from_terms(vars, std::move(terms));
}

}  // namespace

EliminationResult eliminate_saturated(std::span<const Polynomial> F, std::span<const Polynomial> factors,
                                      std::span<const std::size_t> elim_vars,
                                      const ResourceBudget& budget) {
  std::vector<Polynomial> nonconstant;
  for (const auto& f : factors) {
    if (f.is_zero()) throw Error("cannot saturate by the zero polynomial");
    if (!f.is_constant()) nonconstant.push_back(f);
  }
  if (nonconstant.empty() || F.empty()) return eliminate(F, elim_vars, budget);

  VarTablePtr base = F.front().vars();
  for (const auto& f : nonconstant)
    if (!same_table(base, f.vars())) throw VarTableMismatch();
  if (base->size() + nonconstant.size() > kMaxVariables) throw Error("too many variables");

  auto ext = std::make_shared<VarTable>(*base);
  std::vector<std::size_t> elim(elim_vars.begin(), elim_vars.end());
  for (std::size_t k = 0; k < nonconstant.size(); ++k) {
    std::string name = "#u" + std::to_string(k + 1);
    elim.push_back(ext->add(name, VarKind::PointVar));
  }
  VarTablePtr vars = ext;

  std::vector<Polynomial> G;
  for (const auto& f : F) {
    if (!same_table(base, f.vars())) throw VarTableMismatch();
    G.push_back(retable(f, vars));
  }
  auto one = Polynomial::constant(vars, 1);
  for (std::size_t k = 0; k < nonconstant.size(); ++k)
    G.push_back(retable(nonconstant[k], vars) * Polynomial::variable(vars, elim[elim_vars.size() + k]) - one);

  EliminationResult r = eliminate(G, elim, budget);
  EliminationResult out;
  for (std::size_t v : r.eliminated)
    if (v < base->size()) out.eliminated.push_back(v);
  out.kept = r.kept;
  out.order = MonomialOrder::block(out.eliminated, out.kept);
  for (const auto& g : r.generators) out.generators.push_back(retable(g, base));
  return out;
}

bool ideal_membership(const Polynomial& f, const GroebnerBasis& G) {
  if (f.is_zero()) return true;
  return normal_form(f, G.generators(), G.order()).is_zero();
}

bool ideal_membership(const Polynomial& f, const EliminationResult& I) {
  if (f.is_zero()) return true;
  if (I.generators.empty()) return false;
  return normal_form(f, I.generators, I.order).is_zero();
}

bool ideal_is_trivial(std::span<const Polynomial> generators) {
  return std::any_of(generators.begin(), generators.end(),
                     [](const Polynomial& g) { return !g.is_zero() && g.is_constant(); });
}

bool ideal_is_trivial(const GroebnerBasis& G) { return ideal_is_trivial(G.generators()); }

bool ideal_is_trivial(const EliminationResult& I) { return ideal_is_trivial(I.generators); }

}  // namespace cni
