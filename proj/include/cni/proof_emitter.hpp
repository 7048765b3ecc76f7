#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cni/prover.hpp"

namespace cni {

enum class Format { Text, Latex, Json };

struct ProofDocument {
  Format format = Format::Text;
  std::string banner;
  std::vector<std::string> lines;

  /// Lines joined with newlines, trailing newline included.
  std::string str() const;
};

/// Renders the trace. Text gives one line per item; LaTeX an enumerate
/// environment with bold emphasis; JSON a single document (one line per
/// pretty-printed row).
ProofDocument emit_trace(const ProverVerdict& v, Format format);

/// The JSON form: verdict, reason, hypotheses[{relation, slack}],
/// fixed[{point, value}], thesis, pivot, rational_form, denominator,
/// second_elimination, identity, plus declarations and the trace. With
/// include_ideals, also the generators of both elimination ideals.
std::string proof_json(const ProverVerdict& v, bool include_ideals = false);

/// For a two-term pivot c*M*r + k (M a product of hypothesis slacks) the
/// product of the corresponding relations and the thesis equals -k/c; the
/// relations are written as in the construction. Absent otherwise.
std::optional<std::string> emit_identity(const LinearForm& lf, const PolynomialSystem& sys);

/// Escapes LaTeX specials and maps the Unicode symbols used in traces to
/// math mode.
std::string latex_escape(const std::string& text);

}  // namespace cni
