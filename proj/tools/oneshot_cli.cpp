#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "oneshot/cli/commands.hpp"

int main(int argc, char** argv) {
  using namespace oneshot::cli;
  CLI::App app{"One-shot capacity tools for adversarial networks"};
  app.require_subcommand(1);

  std::string network, code, output, scheme_name;
  bool two_level = false;

  auto* validate = app.add_subcommand("validate", "Check a network file");
  validate->add_option("network", network, "Network file")->required();

  auto* bound = app.add_subcommand("bound", "Singleton cut-set bound");
  bound->add_option("network", network, "Network file")->required();
  bound->add_flag("--two-level", two_level, "Use the two-level partition form");

  auto* verify = app.add_subcommand("verify", "Check that an outer code is unambiguous");
  verify->add_option("network", network, "Network file")->required();
  verify->add_option("code", code, "Code file")->required();

  auto* scheme = app.add_subcommand("scheme", "Write a capacity-achieving scheme");
  scheme->add_option("name", scheme_name, "diamond | mirrored | two-level")->required();
  scheme->add_option("network", network, "Network file")->required();
  scheme->add_option("-o,--output", output, "Output code file")->required();

  SearchCommand search_cmd;
  auto* search = app.add_subcommand("search", "Exhaustive search over all network codes");
  search->add_option("network", search_cmd.network_path, "Network file")->required();
  search->add_option("--budget", search_cmd.budget, "Maximum number of network codes")->capture_default_str();
  search->add_option("--jobs", search_cmd.jobs, "Worker threads")->capture_default_str();
  search->add_flag("--prune-symmetry", search_cmd.prune_symmetry, "Skip relabelings of terminal-facing edges");
  search->add_flag("!--no-early-stop", search_cmd.early_stop, "Sweep the whole space even once the bound is met");
  search->add_option("--witness", search_cmd.witness_path, "Write the maximizing code to this file");

  TransferCommand transfer_cmd;
  auto* transfer = app.add_subcommand("transfer", "List a transfer set");
  transfer->add_option("network", transfer_cmd.network_path, "Network file")->required();
  transfer->add_option("code", transfer_cmd.code_path, "Code file")->required();
  transfer->add_option("--from", transfer_cmd.from, "Input edge ids, comma-separated")->required();
  transfer->add_option("--to", transfer_cmd.to, "Output edge ids, comma-separated")->required();
  transfer->add_option("--input", transfer_cmd.input, "Input symbols in edge order, comma-separated")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kInvalidInput;
  }

  if (*validate) return cmd_validate(network, std::cout, std::cerr);
  if (*bound) return cmd_bound(network, two_level, std::cout, std::cerr);
  if (*verify) return cmd_verify(network, code, std::cout, std::cerr);
  if (*scheme) return cmd_scheme(scheme_name, network, output, std::cout, std::cerr);
  if (*search) return cmd_search(search_cmd, std::cout, std::cerr);
  if (*transfer) return cmd_transfer(transfer_cmd, std::cout, std::cerr);
  return kInvalidInput;
}
