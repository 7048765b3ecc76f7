#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cni/budget.hpp"
#include "cni/geometry.hpp"
#include "cni/groebner.hpp"

namespace cni {

/// pivot = v*r + w with v, w free of r and v nonzero.
struct LinearForm {
  Polynomial v;
  Polynomial w;
  Polynomial pivot;
};

/// Throws Error unless p has degree exactly 1 in r.
LinearForm express_linear(const Polynomial& p, std::size_t r);

/// Text of r = -w/v, e.g. "r1/(r1-4)"; a polynomial when v is constant.
std::string rational_form(const LinearForm& lf, const MonomialOrder& ord);

/// Generator of minimal degree in r; ties go to lower total degree, then
/// fewer terms, then earlier position. Throws Error when r occurs nowhere.
Polynomial select_pivot(const EliminationResult& I, std::size_t r);

enum class DenominatorResult { Contradiction, NoR, SecondLinearPolynomialForm, Inconclusive };

struct DenominatorCheck {
  DenominatorResult result = DenominatorResult::Inconclusive;
  EliminationResult ideal;
  std::optional<Polynomial> pivot;
  std::optional<LinearForm> form;
  /// Reason code when result is Inconclusive.
  std::string code;
};

struct ProverOptions {
  /// Eliminate the generators exactly as listed (single Rabinowitsch
  /// polynomial, no equivalent unfixed system). Slower; same ideals.
  bool literal = false;
};

/// Appends D to the system and eliminates again. Throws ResourceExhausted.
DenominatorCheck check_denominator(const PolynomialSystem& sys, const Polynomial& D,
                                   const ResourceBudget& budget = {}, const ProverOptions& opts = {});

enum class Outcome { Proved, Inconclusive };

enum class TraceKind {
  Narration,
  Banner,
  HypothesesHeader,
  Declaration,
  Hypothesis,
  FixedHeader,
  Fixed,
  ThesisHeader,
  ThesisStatement,
  Thesis,
  Elimination,
  LinearNote,
  Pivot,
  PolynomialForm,
  Division,
  AssumeZero,
  Contradiction,
  SecondLinearNote,
  SecondPivot,
  SecondPolynomialForm,
  Identity,
  Caveat,
  Reality,
  Failure,
};

struct TraceItem {
  TraceKind kind;
  std::string text;
  /// Rendered in bold where the format supports it.
  bool emphasized = false;
};

using ProofTrace = std::vector<TraceItem>;

struct ProverVerdict {
  Outcome outcome = Outcome::Inconclusive;
  /// Empty when proved.
  std::string reason;
  ProofTrace trace;

  std::shared_ptr<const PolynomialSystem> system;
  std::optional<EliminationResult> first;
  std::optional<Polynomial> pivot;
  std::optional<LinearForm> linear;
  std::optional<Polynomial> denominator;
  std::optional<DenominatorCheck> second;

  bool proved() const { return outcome == Outcome::Proved; }
};

/// Meaning of a reason code, e.g. "nlu" -> "r cannot be expressed linearly".
std::string reason_meaning(const std::string& code);

/// Runs the decision procedure. Never throws for resource exhaustion; that
/// becomes Inconclusive "t/o".
ProverVerdict prove(const PolynomialSystem& sys, const ResourceBudget& budget = {},
                    const ProverOptions& opts = {});

/// Inconclusive verdict without a system (unsupported input, "niu" etc.).
ProverVerdict inconclusive(const std::string& code, const std::string& detail = {});

/// Inline declarations, build the system, fix coordinates, prove. Narration
/// of the construction heads the trace.
ProverVerdict prove_construction(const Construction& c, FixMode mode = FixMode::ZeroOne,
                                 const ResourceBudget& budget = {}, const ProverOptions& opts = {});

/// "Let A, B, C be arbitrary points." and one sentence per step.
std::vector<std::string> narrate(const Construction& c);

}  // namespace cni
