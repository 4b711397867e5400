#pragma once

#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "oneshot/analysis/unambiguity.hpp"
#include "oneshot/bounds/bounds.hpp"
#include "oneshot/engine/transfer.hpp"
#include "oneshot/io/files.hpp"
#include "oneshot/schemes/schemes.hpp"
#include "oneshot/search/search.hpp"

namespace oneshot::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kInvalidInput = 1,
  kAmbiguous = 2,
  kPrecondition = 3,
};

inline int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ConeClosureViolation:
    case ErrorKind::AmbiguousCode:
    case ErrorKind::MultipleTerminals:
    case ErrorKind::NotTwoLevel:
    case ErrorKind::AdversaryNotFirstLevel:
    case ErrorKind::TooManyIntermediates:
    case ErrorKind::DammingVertexPresent:
    case ErrorKind::UnsupportedTopology:
    case ErrorKind::NotPrime:
    case ErrorKind::FieldTooSmall:
    case ErrorKind::DecodingFailure:
    case ErrorKind::DivisionByZero:
    case ErrorKind::SearchSpaceTooLarge:
      return kPrecondition;
    default:
      return kInvalidInput;
  }
}

namespace detail {

inline std::string braces(const std::vector<std::string>& items) {
  std::string s = "{";
  for (std::size_t i = 0; i < items.size(); ++i) s += (i ? "," : "") + items[i];
  return s + "}";
}

inline std::string vertex_set(const Network& net, const std::vector<VertexIndex>& vs) {
  std::vector<std::string> names;
  for (VertexIndex v : vs) names.push_back(net.vertex_name(v));
  return braces(names);
}

inline std::vector<std::string> split(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');)
    if (!item.empty()) out.push_back(item);
  return out;
}

inline std::string symbols(std::uint64_t n) { return std::to_string(n) + (n == 1 ? " symbol" : " symbols"); }

template <class F>
int guarded(std::ostream& out, std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const Error& e) {
    out << "error: " << to_string(e.kind()) << '\n';
    err << e.what() << '\n';
    return exit_code_for(e.kind());
  }
}

}  // namespace detail

inline int cmd_validate(const std::string& network_path, std::ostream& out, std::ostream& err) {
  return detail::guarded(out, err, [&] {
    load_network_file(network_path);
    out << "OK\n";
    return kOk;
  });
}

inline int cmd_bound(const std::string& network_path, bool two_level, std::ostream& out, std::ostream& err) {
  return detail::guarded(out, err, [&] {
    const auto nf = load_network_file(network_path);
    const auto& net = nf.network;
    std::size_t value = 0;
    std::string witness;
    if (two_level) {
      const auto r = two_level_bound(net, nf.adversary);
      value = r.value;
      witness = "witness partition: forwarding=" + detail::vertex_set(net, r.forwarding) +
                " coded=" + detail::vertex_set(net, r.coded);
      if (nf.adversary.budget() > 0)
        witness += "\ndamming: " + detail::vertex_set(net, damming_vertices(net, nf.adversary.budget()));
    } else {
      const auto r = singleton_cutset_bound(net, nf.adversary);
      value = r.value;
      witness = "terminal: " + net.vertex_name(r.witness.terminal) +
                "\nwitness cut: " + detail::braces(net.edge_ids(r.witness.edges));
    }
    out << "bound: " << detail::symbols(value) << '\n';
    if (auto cap = checked_pow(nf.alphabet.size(), value)) out << "codewords: at most " << *cap << '\n';
    out << witness << '\n';
    return kOk;
  });
}

inline int cmd_verify(const std::string& network_path, const std::string& code_path, std::ostream& out,
                      std::ostream& err) {
  return detail::guarded(out, err, [&] {
    const auto nf = load_network_file(network_path);
    const auto cf = load_code_file(code_path, nf.network, nf.alphabet);
    const auto verdict = is_unambiguous(nf.network, nf.adversary, cf.code, cf.outer);
    if (!verdict) {
      const auto& w = *verdict.witness;
      out << "AMBIGUOUS: x=" << format_word(w.first) << " x'=" << format_word(w.second)
          << " T=" << nf.network.vertex_name(w.terminal) << " common=" << format_word(w.common) << '\n';
      return kAmbiguous;
    }
    out << "UNAMBIGUOUS |C|=" << cf.outer.size() << " rate=" << format_rate(cf.outer.size(), nf.alphabet.size())
        << '\n';
    return kOk;
  });
}

inline int cmd_scheme(const std::string& name, const std::string& network_path, const std::string& output_path,
                      std::ostream& out, std::ostream& err) {
  return detail::guarded(out, err, [&]() -> int {
    const auto nf = load_network_file(network_path);
    std::optional<Scheme> scheme;
    if (name == "diamond")
      scheme = diamond_scheme(nf.network, nf.alphabet);
    else if (name == "mirrored")
      scheme = mirrored_diamond_scheme(nf.network, nf.alphabet);
    else if (name == "two-level")
      scheme = two_level_scheme(nf.network, nf.adversary, nf.alphabet.size());
    else
      throw Error(ErrorKind::ParseError, "unknown scheme '" + name + "' (expected diamond, mirrored or two-level)");
    write_json(output_path, code_to_json(nf.network, scheme->code, scheme->outer));
    out << "wrote " << scheme->name << " scheme to " << output_path << ": |C|=" << scheme->size()
        << " rate=" << scheme->rate_string() << '\n';
    return kOk;
  });
}

struct SearchCommand {
  std::string network_path;
  std::uint64_t budget = 1'000'000;
  unsigned jobs = 1;
  bool prune_symmetry = false;
  bool early_stop = true;
  std::string witness_path;  // optional code file for the maximizer
};

inline int cmd_search(const SearchCommand& cmd, std::ostream& out, std::ostream& err) {
  return detail::guarded(out, err, [&] {
    const auto nf = load_network_file(cmd.network_path);
    SearchOptions opt;
    opt.budget = cmd.budget;
    opt.jobs = cmd.jobs;
    opt.prune_symmetry = cmd.prune_symmetry;
    opt.early_stop = cmd.early_stop;
    const auto r = best_over_all_codes(nf.network, nf.adversary, nf.alphabet, opt);
    out << "space: " << r.space << " network codes\n";
    if (r.stopped_early)
      out << "stopped early: cut-set bound met\n";
    else
      out << "examined: " << r.examined << '\n';
    out << "M=" << r.report.max_code_size << " rate=" << r.report.rate_string() << '\n';
    out << "witness code index: " << r.code_index << '\n';
    std::vector<std::string> words;
    for (const auto& w : r.report.witness.words()) words.push_back("(" + format_word(w) + ")");
    out << "witness outer code: " << detail::braces(words) << '\n';
    if (!cmd.witness_path.empty()) {
      write_json(cmd.witness_path, code_to_json(nf.network, r.code, r.report.witness));
      out << "witness file: " << cmd.witness_path << '\n';
    }
    return kOk;
  });
}

struct TransferCommand {
  std::string network_path;
  std::string code_path;
  std::string from;   // comma-joined edge ids
  std::string to;     // comma-joined edge ids
  std::string input;  // comma-joined symbols, in edge order of `from`
};

/// Prints the transfer set one vector per line in lexicographic order.
inline int cmd_transfer(const TransferCommand& cmd, std::ostream& out, std::ostream& err) {
  return detail::guarded(out, err, [&] {
    const auto nf = load_network_file(cmd.network_path);
    const auto cf = load_code_file(cmd.code_path, nf.network, nf.alphabet);
    const auto from = nf.network.edges_by_id(detail::split(cmd.from));
    const auto to = nf.network.edges_by_id(detail::split(cmd.to));
    const Word x = oneshot::detail::parse_symbols(cmd.input, from.size(), nf.alphabet);
    const auto ts = transfer_set(nf.network, nf.adversary, cf.code, from, to, x);
    for (const auto& y : ts.result) out << format_word(y) << '\n';
    return kOk;
  });
}

}  // namespace oneshot::cli
