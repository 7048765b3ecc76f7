// cni-prover: proves a construction program with complex-number identities.

#include <CLI11.hpp>
#include <iostream>
#include <map>

#include "cni/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Prove planar geometry statements by complex-number identities"};
  app.require_subcommand(1);

  cni::CliConfig cfg;
  auto* prove = app.add_subcommand("prove", "Prove the statement of a construction program");
  prove->add_option("file", cfg.input, "Program file, or - for standard input")->required();

  const std::map<std::string, cni::FixMode> fix_modes{
      {"zero_one", cni::FixMode::ZeroOne}, {"minus_one_one", cni::FixMode::MinusOneOne}, {"off", cni::FixMode::Off}};
  const std::map<std::string, cni::Format> formats{
      {"text", cni::Format::Text}, {"latex", cni::Format::Latex}, {"json", cni::Format::Json}};
  prove->add_option("--fix", cfg.fix, "Coordinates fixed for the first two free points")
      ->transform(CLI::CheckedTransformer(fix_modes, CLI::ignore_case))
      ->default_str("zero_one");
  prove->add_option("--timeout", cfg.timeout, "Seconds allowed per elimination")
      ->check(CLI::PositiveNumber)
      ->default_val(20);
  prove->add_option("--format", cfg.format, "Output format")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case))
      ->default_str("text");
  prove->add_flag("--show-ideal", cfg.show_ideal, "Also print the elimination ideals");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : cni::kExitError;
  }
  return cni::run_cli(cfg, std::cin, std::cout, std::cerr);
}
