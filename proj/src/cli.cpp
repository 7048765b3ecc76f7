#include "cni/cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "cni/dsl.hpp"
#include "cni/errors.hpp"

namespace cni {

namespace {

std::string ideal_text(const EliminationResult& I) {
  std::string s = "[";
  for (std::size_t i = 0; i < I.generators.size(); ++i)
    s += (i ? "," : "") + I.generators[i].to_string(I.order);
  return s + "]";
}

}  // namespace

int run_cli(const CliConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
  if (cfg.timeout == 0) {
    err << "error: the timeout must be positive\n";
    return kExitError;
  }
  std::string source;
  std::string label = cfg.input == "-" ? "<stdin>" : cfg.input;
  if (cfg.input == "-") {
    source.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  } else {
    std::ifstream file(cfg.input, std::ios::binary);
    if (!file) {
      err << label << ": error: cannot read the file\n";
      return kExitError;
    }
    source.assign(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
  }

  ProverVerdict verdict;
  try {
    Construction c = parse_program(source);
    ResourceBudget budget;
    budget.wall_clock = std::chrono::milliseconds(std::chrono::seconds(cfg.timeout));
    verdict = prove_construction(c, cfg.fix, budget);
  } catch (const ParseError& e) {
    err << label << ":" << e.line() << ":" << e.column() << ": error: " << e.message() << "\n";
    return kExitError;
  } catch (const UnsupportedStep& e) {
    verdict = inconclusive(e.code(), "Line " + std::to_string(e.line()) + ": " + e.what() + ".");
  } catch (const Error& e) {
    err << label << ": error: " << e.what() << "\n";
    return kExitError;
  }

  if (cfg.format == Format::Json) {
    out << proof_json(verdict, cfg.show_ideal) << "\n";
  } else {
    if (cfg.show_ideal) {
      if (verdict.first) out << "I = " << ideal_text(*verdict.first) << "\n";
      if (verdict.second) out << "I' = " << ideal_text(verdict.second->ideal) << "\n";
    }
    out << emit_trace(verdict, cfg.format).str();
  }
  return verdict.proved() ? kExitProved : kExitInconclusive;
}

}  // namespace cni
