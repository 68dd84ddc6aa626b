#include "report.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <map>

int main(int argc, char** argv) {
  CLI::App app{"twisted KLV polynomials for extended blocks"};
  app.require_subcommand(1, 1);

  tklv::RunConfig cfg;
  const std::map<std::string, tklv::Command> commands{
      {"validate", tklv::Command::Validate},
      {"hecke-check", tklv::Command::HeckeCheck},
      {"compute", tklv::Command::Compute},
      {"wgraph", tklv::Command::WGraph},
      {"oracle-compare", tklv::Command::OracleCompare},
  };
  const std::map<std::string, std::string> help{
      {"validate", "check a block file"},
      {"hecke-check", "check the quadratic (and with --braid, braid) relations"},
      {"compute", "compute the polynomial table"},
      {"wgraph", "emit the W-graph"},
      {"oracle-compare", "compare against the brute-force classical computation"},
  };
  for (const auto& [name, cmd] : commands) {
    CLI::App* sub = app.add_subcommand(name, help.at(name));
    sub->add_option("input", cfg.input, "block file (JSON)")->required()->check(CLI::ExistingFile);
    sub->add_option("-o,--output", cfg.output, "write output here instead of stdout");
    sub->add_flag("--json", cfg.json, "JSON envelope output");
    if (cmd == tklv::Command::Compute) {
      sub->add_flag("--verify", cfg.verify, "run the eigen, decomposition and support checks");
      sub->add_flag("--u-form", cfg.u_form, "render polynomials in u");
      sub->add_flag("--strict", cfg.strict, "exit 3 when entries are unresolved");
    }
    if (cmd == tklv::Command::HeckeCheck) sub->add_flag("--braid", cfg.braid, "include braid relations");
    sub->callback([&cfg, c = cmd] { cfg.command = c; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : tklv::kExitInvalid;
  }
  return tklv::run(cfg, std::cout, std::cerr);
}
