#include "cni/proof_emitter.hpp"

#include <json.hpp>
#include <sstream>

namespace cni {

std::string ProofDocument::str() const {
  std::string out;
  for (const auto& l : lines) out += l + "\n";
  return out;
}

std::optional<std::string> emit_identity(const LinearForm& lf, const PolynomialSystem& sys) {
  const Polynomial& p = lf.pivot;
  if (p.term_count() != 2) return std::nullopt;
  const std::size_t r = sys.thesis_var;
  const Term* rt = nullptr;
  const Term* kt = nullptr;
  for (const auto& t : p.terms()) (t.monomial.exponent(r) == 1 ? rt : kt) = &t;
  if (!rt || !kt || !kt->monomial.is_one()) return std::nullopt;

  std::vector<std::pair<RationalExpr, unsigned>> factors;
  for (const auto& s : sys.slacks) {
    unsigned e = s.thesis ? 1 : rt->monomial.exponent(s.var);
    if (e > 0) factors.emplace_back(s.original, e);
  }
  auto bare = [](const RationalExpr& e) {
    return e.kind() == RationalExpr::Kind::PointRef || e.kind() == RationalExpr::Kind::Pow;
  };
  std::string lhs;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const auto& [e, k] = factors[i];
    std::string f = e.to_string(*sys.vars);
    if ((factors.size() > 1 && !bare(e)) || k > 1) f = "(" + f + ")";
    if (k > 1) f += "^" + std::to_string(k);
    lhs += (i ? "*" : "") + f;
  }
  return lhs + "=" + to_string(Rational(-kt->coeff / rt->coeff));
}

std::string latex_escape(const std::string& text) {
  static const std::pair<const char*, const char*> symbols[] = {
      {"∈ ℝ", "$\\in \\mathbb{R}$"}, {"∥", "$\\parallel$"}, {"⊥", "$\\perp$"}, {"∠", "$\\angle$"}, {"ℝ", "$\\mathbb{R}$"},
  };
  std::string out;
  for (std::size_t i = 0; i < text.size();) {
    bool matched = false;
    for (auto [from, to] : symbols) {
      std::string_view f(from);
      if (text.compare(i, f.size(), f) == 0) {
        out += to;
        i += f.size();
        matched = true;
        break;
      }
    }
    if (matched) continue;
    char c = text[i++];
    switch (c) {
      case '\\': out += "\\textbackslash{}"; break;
      case '^': out += "\\^{}"; break;
      case '~': out += "\\~{}"; break;
      case '_': case '#': case '%': case '&': case '$': case '{': case '}':
        out += '\\';
        out += c;
        break;
      default:
        out += c;
    }
  }
  return out;
}

namespace {

std::string kind_name(TraceKind k) {
  switch (k) {
    case TraceKind::Narration: return "narration";
    case TraceKind::Banner: return "banner";
    case TraceKind::HypothesesHeader: return "hypotheses_header";
    case TraceKind::Declaration: return "declaration";
    case TraceKind::Hypothesis: return "hypothesis";
    case TraceKind::FixedHeader: return "fixed_header";
    case TraceKind::Fixed: return "fixed";
    case TraceKind::ThesisHeader: return "thesis_header";
    case TraceKind::ThesisStatement: return "thesis_statement";
    case TraceKind::Thesis: return "thesis";
    case TraceKind::Elimination: return "elimination";
    case TraceKind::LinearNote: return "linear_note";
    case TraceKind::Pivot: return "pivot";
    case TraceKind::PolynomialForm: return "polynomial_form";
    case TraceKind::Division: return "division";
    case TraceKind::AssumeZero: return "assume_zero";
    case TraceKind::Contradiction: return "contradiction";
    case TraceKind::SecondLinearNote: return "second_linear_note";
    case TraceKind::SecondPivot: return "second_pivot";
    case TraceKind::SecondPolynomialForm: return "second_polynomial_form";
    case TraceKind::Identity: return "identity";
    case TraceKind::Caveat: return "caveat";
    case TraceKind::Reality: return "reality";
    case TraceKind::Failure: return "failure";
  }
  return "unknown";
}

std::string banner_of(const ProverVerdict& v) {
  for (const auto& item : v.trace)
    if (item.kind == TraceKind::Banner || item.kind == TraceKind::Failure) return item.text;
  return {};
}

nlohmann::ordered_json to_json(const ProverVerdict& v, bool include_ideals) {
  using json = nlohmann::ordered_json;
  json j;
  j["verdict"] = v.proved() ? "proved" : "inconclusive";
  j["reason"] = v.reason.empty() ? json(nullptr) : json(v.reason);
  j["hypotheses"] = json::array();
  j["fixed"] = json::array();
  j["declarations"] = json::array();
  j["thesis"] = nullptr;
  if (v.system) {
    const auto& sys = *v.system;
    for (const auto& s : sys.slacks)
      if (!s.thesis) j["hypotheses"].push_back({{"relation", s.original.to_string(*sys.vars)}, {"slack", s.name}});
    for (const auto& f : sys.fixed) j["fixed"].push_back({{"point", sys.vars->name(f.point)}, {"value", to_string(f.value)}});
    for (const auto& d : sys.declarations) j["declarations"].push_back(d);
    j["thesis"] = sys.thesis_slack().original.to_string(*sys.vars);
  }
  const MonomialOrder* ord = v.first ? &v.first->order : nullptr;
  j["pivot"] = v.pivot && ord ? json(v.pivot->to_string(*ord)) : json(nullptr);
  j["rational_form"] = v.linear && ord ? json(rational_form(*v.linear, *ord)) : json(nullptr);
  j["denominator"] = v.denominator && ord ? json(v.denominator->to_string(*ord)) : json(nullptr);
  if (v.second) {
    const auto& s = *v.second;
    json e;
    switch (s.result) {
      case DenominatorResult::Contradiction: e["result"] = "contradiction"; break;
      case DenominatorResult::NoR: e["result"] = "no_r"; break;
      case DenominatorResult::SecondLinearPolynomialForm: e["result"] = "second_polynomial_form"; break;
      case DenominatorResult::Inconclusive: e["result"] = "inconclusive"; break;
    }
    e["generators"] = json::array();
    for (const auto& g : s.ideal.generators) e["generators"].push_back(g.to_string(s.ideal.order));
    e["pivot"] = s.pivot ? json(s.pivot->to_string(s.ideal.order)) : json(nullptr);
    j["second_elimination"] = e;
  } else {
    j["second_elimination"] = nullptr;
  }
  std::optional<std::string> id = v.linear && v.system && v.proved() ? emit_identity(*v.linear, *v.system) : std::nullopt;
  j["identity"] = id ? json(*id) : json(nullptr);
  if (include_ideals) {
    auto gens = [](const EliminationResult& I) {
      json a = json::array();
      for (const auto& g : I.generators) a.push_back(g.to_string(I.order));
      return a;
    };
    j["ideal"] = v.first ? gens(*v.first) : json(nullptr);
    j["second_ideal"] = v.second ? gens(v.second->ideal) : json(nullptr);
  }
  j["trace"] = json::array();
  for (const auto& item : v.trace) j["trace"].push_back({{"kind", kind_name(item.kind)}, {"text", item.text}});
  return j;
}

}  // namespace

std::string proof_json(const ProverVerdict& v, bool include_ideals) { return to_json(v, include_ideals).dump(2); }

ProofDocument emit_trace(const ProverVerdict& v, Format format) {
  ProofDocument doc;
  doc.format = format;
  doc.banner = banner_of(v);
  switch (format) {
    case Format::Text:
      for (const auto& item : v.trace) doc.lines.push_back(item.text);
      break;
    case Format::Latex:
      doc.lines.push_back("\\begin{enumerate}");
      for (const auto& item : v.trace) {
        std::string body = latex_escape(item.text);
        doc.lines.push_back("\\item " + (item.emphasized ? "\\textbf{" + body + "}" : body));
      }
      doc.lines.push_back("\\end{enumerate}");
      break;
    case Format::Json: {
      std::istringstream in(proof_json(v, false));
      for (std::string line; std::getline(in, line);) doc.lines.push_back(line);
      break;
    }
  }
  return doc;
}

}  // namespace cni
