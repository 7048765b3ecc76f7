#include "cni/prover.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "cni/errors.hpp"
#include "cni/proof_emitter.hpp"

namespace cni {

LinearForm express_linear(const Polynomial& p, std::size_t r) {
  if (p.degree_in(r) != 1) throw Error("pivot is not linear in the thesis variable");
  return {p.coefficient(r, 1), p.coefficient(r, 0), p};
}

namespace {

bool needs_parens(const Polynomial& f) {
  if (f.term_count() > 1) return true;
  if (f.is_constant()) return false;
  const Term& t = f.terms().front();
  return t.coeff != 1 || t.monomial.degree() > 1;
}

}  // namespace

std::string rational_form(const LinearForm& lf, const MonomialOrder& ord) {
  if (lf.v.is_constant()) {
    Polynomial q = (-1 / *lf.v.constant_value()) * lf.w;
    return q.to_string(ord);
  }
  Polynomial num = -lf.w;
  std::string n = num.to_string(ord);
  std::string d = lf.v.to_string(ord);
  if (num.term_count() > 1) n = "(" + n + ")";
  if (needs_parens(lf.v)) d = "(" + d + ")";
  return n + "/" + d;
}

Polynomial select_pivot(const EliminationResult& I, std::size_t r) {
  const Polynomial* best = nullptr;
  std::tuple<std::uint32_t, std::uint32_t, std::size_t> key{};
  for (const auto& g : I.generators) {
    std::uint32_t d = g.degree_in(r);
    if (d == 0) continue;
    std::tuple<std::uint32_t, std::uint32_t, std::size_t> k{d, g.total_degree(), g.term_count()};
    if (!best || k < key) {
      best = &g;
      key = k;
    }
  }
  if (!best) throw Error("no generator contains the thesis variable");
  return *best;
}

namespace {

bool mentions(const EliminationResult& I, std::size_t r) {
  return std::any_of(I.generators.begin(), I.generators.end(), [&](const Polynomial& g) { return g.contains(r); });
}

EliminationResult run_elimination(const PolynomialSystem& sys, const std::vector<Polynomial>& extra,
                                  const ResourceBudget& budget, const ProverOptions& opts) {
  if (opts.literal) {
    auto F = sys.generators();
    F.insert(F.end(), extra.begin(), extra.end());
    return eliminate(F, sys.eliminate_vars, budget);
  }
  EliminationInput in = sys.elimination_input();
  in.polys.insert(in.polys.end(), extra.begin(), extra.end());
  return eliminate_saturated(in.polys, in.saturate_by, in.eliminate_vars, budget);
}

}  // namespace

DenominatorCheck check_denominator(const PolynomialSystem& sys, const Polynomial& D, const ResourceBudget& budget,
                                   const ProverOptions& opts) {
  DenominatorCheck out;
  out.ideal = run_elimination(sys, {D}, budget, opts);
  if (ideal_is_trivial(out.ideal)) {
    out.result = DenominatorResult::Contradiction;
    return out;
  }
  if (!mentions(out.ideal, sys.thesis_var)) {
    out.result = DenominatorResult::NoR;
    out.code = "e2nru";
    return out;
  }
  out.pivot = select_pivot(out.ideal, sys.thesis_var);
  if (out.pivot->degree_in(sys.thesis_var) > 1) {
    out.code = "nlu";
    return out;
  }
  out.form = express_linear(*out.pivot, sys.thesis_var);
  if (out.form->v.is_constant()) {
    out.result = DenominatorResult::SecondLinearPolynomialForm;
  } else {
    out.code = "d3u";
  }
  return out;
}

std::string reason_meaning(const std::string& code) {
  static const std::map<std::string, std::string> meanings = {
      {"t/o", "the elimination ran out of its time budget"},
      {"niu", "a construction step is not implemented"},
      {"nfiu", "a construction step is implemented only partially"},
      {"rn0u", "proving that r is zero (point equality) is not supported"},
      {"nlu", "r cannot be expressed linearly"},
      {"d3u", "a further elimination would be needed to decide"},
      {"e0u", "the elimination ideal gives no condition on r"},
      {"e2nru", "r does not occur in the second elimination ideal"},
  };
  auto it = meanings.find(code);
  return it == meanings.end() ? "unknown reason" : it->second;
}

ProverVerdict inconclusive(const std::string& code, const std::string& detail) {
  ProverVerdict v;
  v.reason = code;
  std::string text = "The statement could not be proved: " + reason_meaning(code) + " (" + code + ").";
  if (!detail.empty()) text += " " + detail;
  v.trace.push_back({TraceKind::Failure, text});
  return v;
}

namespace {

class TraceBuilder {
 public:
  explicit TraceBuilder(const PolynomialSystem& sys) : sys_(sys) {}

  void add(TraceKind k, std::string text, bool emphasized = false) {
    items_.push_back({k, std::move(text), emphasized});
  }

  // Hypotheses, fixed coordinates, thesis and the elimination sentence.
  void setup() {
    const VarTable& t = *sys_.vars;
    add(TraceKind::HypothesesHeader, "The hypotheses:");
    for (const auto& d : sys_.declarations) add(TraceKind::Declaration, d, true);
    for (const auto& s : sys_.slacks)
      if (!s.thesis) add(TraceKind::Hypothesis, s.original.to_string(t) + "=" + s.name + " ∈ ℝ", true);
    if (!sys_.fixed.empty()) {
      add(TraceKind::FixedHeader, "Without loss of generality, some coordinates can be fixed:");
      for (const auto& f : sys_.fixed) add(TraceKind::Fixed, t.name(f.point) + ":=" + to_string(f.value), true);
    }
    add(TraceKind::ThesisHeader, "The thesis:");
    const Slack& th = sys_.thesis_slack();
    if (th.source) add(TraceKind::ThesisStatement, describe_predicate(*th.source, t));
    add(TraceKind::Thesis, th.original.to_string(t) + "=" + th.name, true);
    add(TraceKind::Elimination, "We eliminate all variables that correspond to complex points.");
  }

  void caveats() {
    std::vector<PredicateKind> seen;
    for (const auto& s : sys_.slacks) {
      if (!s.source || std::find(seen.begin(), seen.end(), s.source->kind) != seen.end()) continue;
      // The perpendicular weakening only matters for what is proved.
      if (s.source->kind == PredicateKind::Perpendicular && !s.thesis) continue;
      seen.push_back(s.source->kind);
      std::string c = predicate_caveat(s.source->kind);
      if (!c.empty()) add(TraceKind::Caveat, c);
    }
  }

  ProofTrace take() { return std::move(items_); }

 private:
  const PolynomialSystem& sys_;
  ProofTrace items_;
};

std::string fail_text(const std::string& code) {
  return "The statement could not be proved: " + reason_meaning(code) + " (" + code + ").";
}

ProverVerdict timed_out(const ProverVerdict& partial, const ResourceBudget& budget) {
  ProverVerdict t = inconclusive("t/o", "The limit was " + std::to_string(budget.wall_clock.count()) + " ms.");
  t.system = partial.system;
  return t;
}

}  // namespace

ProverVerdict prove(const PolynomialSystem& sys, const ResourceBudget& budget, const ProverOptions& opts) {
  ProverVerdict v;
  v.system = std::make_shared<PolynomialSystem>(sys);
  const std::size_t r = sys.thesis_var;
  TraceBuilder tb(sys);

  auto finish_inconclusive = [&](const std::string& code) {
    v.outcome = Outcome::Inconclusive;
    v.reason = code;
    ProofTrace body = tb.take();
    v.trace.push_back({TraceKind::Banner, fail_text(code)});
    v.trace.insert(v.trace.end(), body.begin(), body.end());
    return v;
  };

  tb.setup();
  try {
    v.first = run_elimination(sys, {}, budget, opts);
  } catch (const ResourceExhausted&) {
    return timed_out(v, budget);
  }
  if (!mentions(*v.first, r)) return finish_inconclusive("e0u");

  v.pivot = select_pivot(*v.first, r);
  const MonomialOrder& ord = v.first->order;
  if (v.pivot->degree_in(r) > 1) {
    tb.add(TraceKind::Pivot, v.pivot->to_string(ord) + "=0");
    return finish_inconclusive("nlu");
  }
  v.linear = express_linear(*v.pivot, r);
  tb.add(TraceKind::LinearNote,
         "The thesis (r) can be expressed as a rational expression of the hypotheses, because r is linear in an "
         "obtained polynomial equation:");
  tb.add(TraceKind::Pivot, v.pivot->to_string(ord) + "=0");

  if (v.linear->v.is_constant()) {
    tb.add(TraceKind::PolynomialForm, "The thesis can be expressed as a polynomial expression of the hypotheses.");
  } else {
    v.denominator = v.linear->v;
    tb.add(TraceKind::Division, "Expressing the thesis requires a division by " + v.denominator->to_string(ord) + ".");
    tb.add(TraceKind::AssumeZero, "Let us assume that that divisor is 0 and restart the elimination.");
    try {
      v.second = check_denominator(sys, *v.denominator, budget, opts);
    } catch (const ResourceExhausted&) {
      return timed_out(v, budget);
    }
    switch (v.second->result) {
      case DenominatorResult::Contradiction:
        tb.add(TraceKind::Contradiction, "The elimination verifies that that divisor cannot be zero.");
        break;
      case DenominatorResult::SecondLinearPolynomialForm:
        tb.add(TraceKind::SecondLinearNote, "With the divisor being 0, r is linear in the obtained polynomial equation:");
        tb.add(TraceKind::SecondPivot, v.second->pivot->to_string(v.second->ideal.order) + "=0");
        tb.add(TraceKind::SecondPolynomialForm,
               "In that case the thesis can still be expressed as a polynomial expression of the hypotheses.");
        tb.add(TraceKind::Caveat,
               "This second form is not known to be conclusive in every configuration; a few exceptions are "
               "possible.");
        break;
      case DenominatorResult::NoR:
        return finish_inconclusive("e2nru");
      case DenominatorResult::Inconclusive:
        if (v.second->pivot) tb.add(TraceKind::SecondPivot, v.second->pivot->to_string(v.second->ideal.order) + "=0");
        return finish_inconclusive(v.second->code);
    }
  }

  if (auto id = emit_identity(*v.linear, sys)) tb.add(TraceKind::Identity, "Complex number identity: " + *id);
  tb.caveats();
  tb.add(TraceKind::Reality, "Since all hypotheses are real expressions, the thesis must also be real.", true);

  v.outcome = Outcome::Proved;
  v.trace.push_back({TraceKind::Banner, "The statement is true under some non-degeneracy conditions (see below)."});
  ProofTrace body = tb.take();
  v.trace.insert(v.trace.end(), body.begin(), body.end());
  return v;
}


std::vector<std::string> narrate(const Construction& c) {
  const VarTable& t = *c.points();
  std::vector<std::string> out;
  auto names = [&](const std::vector<std::size_t>& ids) {
    std::string s;
    for (std::size_t i = 0; i < ids.size(); ++i) s += (i ? ", " : "") + t.name(ids[i]);
    return s;
  };
  if (!c.free_points().empty()) {
    const char* verb = c.free_points().size() == 1 ? " be an arbitrary point." : " be arbitrary points.";
    out.push_back("Let " + names(c.free_points()) + verb);
  }
  for (const auto& step : c.steps()) {
    if (const auto* d = std::get_if<DeclarativeStep>(&step)) {
      std::string x = t.name(d->point);
      if (!d->sugar) {
        out.push_back("Let " + x + ":=" + d->definition.to_string(t) + ".");
        continue;
      }
      switch (d->sugar->kind) {
        case DeclarationKind::Midpoint:
          out.push_back("Let " + x + " be the midpoint of " + names(d->sugar->args) + ".");
          break;
        case DeclarationKind::Barycenter:
          out.push_back("Let " + x + " be the barycenter of " + names(d->sugar->args) + ".");
          break;
        case DeclarationKind::Parallelogram4:
          out.push_back("Let " + x + " complete the parallelogram " + names(d->sugar->args) + ".");
          break;
      }
      continue;
    }
    const auto& rel = std::get<RelationalStep>(step);
    if (rel.source) {
      out.push_back("Assume that " + describe_predicate(*rel.source, t) + ".");
    } else {
      for (const auto& e : rel.originals.empty() ? rel.relations : rel.originals)
        out.push_back("Assume that " + e.to_string(t) + " is real.");
    }
  }
  if (c.thesis()) {
    const Thesis& th = *c.thesis();
    if (th.source)
      out.push_back("Prove that " + describe_predicate(*th.source, t) + ".");
    else
      out.push_back("Prove that " + (th.original ? *th.original : th.expr).to_string(t) + " is real.");
  }
  return out;
}

ProverVerdict prove_construction(const Construction& c, FixMode mode, const ResourceBudget& budget,
                                 const ProverOptions& opts) {
  Construction flat = substitute_declaratives(c);
  PolynomialSystem sys = fix_coordinates(build_system(flat), flat, mode);
  ProverVerdict v = prove(sys, budget, opts);
  ProofTrace head;
  for (auto& line : narrate(c)) head.push_back({TraceKind::Narration, std::move(line)});
  v.trace.insert(v.trace.begin(), head.begin(), head.end());
  return v;
}

}  // namespace cni
