#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "oneshot/catalog.hpp"

namespace gen {

using oneshot::AdversarialNetwork;
using oneshot::NetworkDescription;

inline std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

/// Two-level network: S -> W_i (in_i parallel edges) -> T (out_i parallel
/// edges). With `all_first_level` every first-level edge is vulnerable;
/// otherwise a random nonempty subset of size >= t is.
inline AdversarialNetwork two_level(std::mt19937_64& rng, std::size_t max_mids, std::size_t max_parallel, std::size_t t,
                                    bool all_first_level = true) {
  while (true) {
    NetworkDescription d;
    d.vertices = {"S", "T"};
    d.source = "S";
    d.terminals = {"T"};
    std::vector<std::string> first;
    const std::size_t k = uniform(rng, 1, max_mids);
    for (std::size_t i = 1; i <= k; ++i) {
      const std::string w = "W" + std::to_string(i);
      d.vertices.push_back(w);
      const std::size_t in = uniform(rng, 1, max_parallel), out = uniform(rng, 1, max_parallel);
      for (std::size_t j = 1; j <= in; ++j) {
        d.edges.push_back({"a" + std::to_string(i) + "_" + std::to_string(j), "S", w});
        first.push_back(d.edges.back().id);
      }
      for (std::size_t j = 1; j <= out; ++j) d.edges.push_back({"b" + std::to_string(i) + "_" + std::to_string(j), w, "T"});
    }
    std::vector<std::string> vulnerable;
    if (all_first_level) {
      vulnerable = first;
    } else {
      for (const auto& e : first)
        if (uniform(rng, 0, 1)) vulnerable.push_back(e);
    }
    if (vulnerable.size() < t) continue;
    return oneshot::make_adversarial(d, vulnerable, t);
  }
}

/// Small random DAG with one or two terminals and at most `max_edges` edges.
inline AdversarialNetwork small_dag(std::mt19937_64& rng, std::size_t max_edges, std::size_t max_t) {
  while (true) {
    NetworkDescription d;
    const std::size_t mids = uniform(rng, 1, 3), terms = uniform(rng, 1, 2);
    d.vertices.push_back("S");
    for (std::size_t i = 1; i <= mids; ++i) d.vertices.push_back("V" + std::to_string(i));
    for (std::size_t i = 1; i <= terms; ++i) {
      d.vertices.push_back("T" + std::to_string(i));
      d.terminals.push_back(d.vertices.back());
    }
    d.source = "S";
    const std::size_t n = d.vertices.size();
    auto add = [&](std::size_t a, std::size_t b) {
      d.edges.push_back({"e" + std::to_string(d.edges.size() + 1), d.vertices[a], d.vertices[b]});
    };
    for (std::size_t i = 1; i <= mids; ++i) {
      add(uniform(rng, 0, i - 1), i);
      add(i, uniform(rng, i + 1, n - 1));
    }
    for (std::size_t i = mids + 1; i < n; ++i) add(uniform(rng, 0, mids), i);
    const std::size_t extra = uniform(rng, 0, 3);
    for (std::size_t x = 0; x < extra; ++x) {
      const std::size_t a = uniform(rng, 0, mids);
      add(a, uniform(rng, a + 1, n - 1));
    }
    if (d.edges.size() > max_edges) continue;
    std::vector<std::string> vulnerable;
    for (const auto& e : d.edges)
      if (uniform(rng, 0, 2) == 0) vulnerable.push_back(e.id);
    const std::size_t t = std::min(vulnerable.size(), uniform(rng, 0, max_t));
    try {
      return oneshot::make_adversarial(d, vulnerable, t);
    } catch (const oneshot::Error&) {
    }
  }
}

}  // namespace gen
