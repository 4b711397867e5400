#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "oneshot/core/adversary.hpp"
#include "oneshot/core/alphabet.hpp"
#include "oneshot/core/network.hpp"
#include "oneshot/core/network_code.hpp"
#include "oneshot/core/outer_code.hpp"

namespace oneshot {

/// Contents of a network file: topology, adversary and alphabet size.
///
///   {"alphabet_size": 3, "vertices": ["S", ...], "source": "S",
///    "terminals": ["T"], "edges": [{"id": "e1", "tail": "S", "head": "V1"}, ...],
///    "adversary": {"edges": ["e1", ...], "t": 1}}
struct NetworkFile {
  Alphabet alphabet;
  Network network;
  Adversary adversary;
};

/// Contents of a code file: one function table per intermediate vertex and
/// the outer code.
///
///   {"functions": {"V1": {"inputs": ["e1"], "outputs": ["e4"],
///                         "table": {"0": "0", "1": "1", ...}}, ...},
///    "outer_code": [[0, 0, 0], [1, 1, 1]]}
///
/// Table keys and values are comma-joined symbols in edge order.
struct CodeFile {
  NetworkCode code;
  OuterCode outer;
};

namespace detail {

template <class T>
T field(const nlohmann::json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorKind::ParseError, std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("field '") + key + "': " + e.what());
  }
}

inline nlohmann::json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, path + ": " + e.what());
  }
}

inline Word parse_symbols(const std::string& text, std::size_t expected, const Alphabet& a) {
  Word w;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(item, &used);
    } catch (const std::exception&) {
      throw Error(ErrorKind::ParseError, "bad symbol list '" + text + "'");
    }
    if (used != item.size()) throw Error(ErrorKind::ParseError, "bad symbol list '" + text + "'");
    if (v >= a.size()) throw Error(ErrorKind::SymbolOutOfRange, "symbol " + item + " outside the alphabet");
    w.push_back(static_cast<Symbol>(v));
  }
  if (w.size() != expected)
    throw Error(ErrorKind::LengthMismatch, "'" + text + "' has " + std::to_string(w.size()) + " symbols, expected " +
                                                std::to_string(expected));
  return w;
}

}  // namespace detail

inline NetworkFile parse_network_json(const nlohmann::json& j) {
  const auto q = detail::field<std::uint32_t>(j, "alphabet_size");
  Alphabet alphabet(q);
  NetworkDescription d;
  d.vertices = detail::field<std::vector<std::string>>(j, "vertices");
  d.source = detail::field<std::string>(j, "source");
  d.terminals = detail::field<std::vector<std::string>>(j, "terminals");
  for (const auto& e : detail::field<nlohmann::json>(j, "edges")) {
    d.edges.push_back({detail::field<std::string>(e, "id"), detail::field<std::string>(e, "tail"),
                       detail::field<std::string>(e, "head")});
  }
  Network net = validate_network(d);
  std::vector<std::string> vulnerable;
  std::size_t t = 0;
  if (j.contains("adversary")) {
    const auto& adv = j.at("adversary");
    vulnerable = detail::field<std::vector<std::string>>(adv, "edges");
    t = detail::field<std::size_t>(adv, "t");
  }
  Adversary adversary(net, net.edges_by_id(vulnerable), t);
  return {alphabet, std::move(net), std::move(adversary)};
}

inline NetworkFile load_network_file(const std::string& path) { return parse_network_json(detail::read_json(path)); }

inline nlohmann::ordered_json network_to_json(const Network& net, const Adversary& adv, const Alphabet& a) {
  nlohmann::ordered_json j;
  const auto d = net.description();
  j["alphabet_size"] = a.size();
  j["vertices"] = d.vertices;
  j["source"] = d.source;
  j["terminals"] = d.terminals;
  j["edges"] = nlohmann::ordered_json::array();
  for (const auto& e : d.edges) j["edges"].push_back({{"id", e.id}, {"tail", e.tail}, {"head", e.head}});
  j["adversary"] = {{"edges", net.edge_ids(adv.vulnerable())}, {"t", adv.budget()}};
  return j;
}

inline CodeFile parse_code_json(const nlohmann::json& j, const Network& net, const Alphabet& a) {
  NetworkCode code(net, a);
  const auto functions = detail::field<nlohmann::json>(j, "functions");
  if (!functions.is_object()) throw Error(ErrorKind::ParseError, "'functions' must be an object");
  for (const auto& [name, fn] : functions.items()) {
    VertexIndex v = 0;
    try {
      v = net.vertex(name);
    } catch (const Error&) {
      throw Error(ErrorKind::InvalidCode, "function for unknown vertex '" + name + "'");
    }
    if (!net.is_intermediate(v)) throw Error(ErrorKind::InvalidCode, "'" + name + "' is not an intermediate vertex");
    const auto& t = code.table(v);
    if (detail::field<std::vector<std::string>>(fn, "inputs") != net.edge_ids(t.inputs))
      throw Error(ErrorKind::InvalidCode, "inputs of '" + name + "' must be its in-edges in edge order");
    if (detail::field<std::vector<std::string>>(fn, "outputs") != net.edge_ids(t.outputs))
      throw Error(ErrorKind::InvalidCode, "outputs of '" + name + "' must be its out-edges in edge order");
    const auto table = detail::field<nlohmann::json>(fn, "table");
    if (!table.is_object()) throw Error(ErrorKind::ParseError, "table of '" + name + "' must be an object");
    std::vector<char> seen(t.rows, 0);
    for (const auto& [key, value] : table.items()) {
      if (!value.is_string()) throw Error(ErrorKind::ParseError, "table values must be strings");
      const Word in = detail::parse_symbols(key, t.inputs.size(), a);
      const Word out = detail::parse_symbols(value.get<std::string>(), t.outputs.size(), a);
      auto& mark = seen[word_rank(in, a.size())];
      if (mark) throw Error(ErrorKind::InvalidCode, "duplicate key '" + key + "' in table of '" + name + "'");
      mark = 1;
      code.set(v, in, out);
    }
    if (std::find(seen.begin(), seen.end(), 0) != seen.end())
      throw Error(ErrorKind::InvalidCode, "table of '" + name + "' is not total");
  }
  for (VertexIndex v : net.intermediates())
    if (!functions.contains(net.vertex_name(v)))
      throw Error(ErrorKind::InvalidCode, "no function for vertex '" + net.vertex_name(v) + "'");

  std::vector<Word> words;
  for (const auto& w : detail::field<nlohmann::json>(j, "outer_code")) {
    try {
      words.push_back(w.get<Word>());
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorKind::ParseError, std::string("outer_code: ") + e.what());
    }
  }
  OuterCode outer(std::move(words));
  check_outer_code(net, a, outer);
  return {std::move(code), std::move(outer)};
}

inline CodeFile load_code_file(const std::string& path, const Network& net, const Alphabet& a) {
  return parse_code_json(detail::read_json(path), net, a);
}

inline nlohmann::ordered_json code_to_json(const Network& net, const NetworkCode& code, const OuterCode& outer) {
  nlohmann::ordered_json j;
  j["functions"] = nlohmann::ordered_json::object();
  const std::uint32_t q = code.alphabet().size();
  for (const auto& t : code.layout().tables) {
    nlohmann::ordered_json fn;
    fn["inputs"] = net.edge_ids(t.inputs);
    fn["outputs"] = net.edge_ids(t.outputs);
    nlohmann::ordered_json table = nlohmann::ordered_json::object();
    for (std::uint64_t r = 0; r < t.rows; ++r) {
      const Word in = word_unrank(r, q, t.inputs.size());
      table[format_word(in)] = format_word(code.apply(t.vertex, in));
    }
    fn["table"] = std::move(table);
    j["functions"][net.vertex_name(t.vertex)] = std::move(fn);
  }
  j["outer_code"] = outer.words();
  return j;
}

inline void write_json(const std::string& path, const nlohmann::ordered_json& j) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::ParseError, "cannot write " + path);
  out << j.dump(2) << '\n';
}

}  // namespace oneshot
