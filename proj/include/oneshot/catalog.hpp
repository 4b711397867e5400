#pragma once

#include <string>
#include <vector>

#include "oneshot/core/adversary.hpp"
#include "oneshot/core/network.hpp"

namespace oneshot {

struct AdversarialNetwork {
  Network network;
  Adversary adversary;
};

inline AdversarialNetwork make_adversarial(const NetworkDescription& desc, const std::vector<std::string>& vulnerable,
                                           std::size_t t) {
  Network net = validate_network(desc);
  Adversary adv(net, net.edges_by_id(vulnerable), t);
  return {std::move(net), std::move(adv)};
}

/// S -e1-> V1, S -e2,e3-> V2 (parallel), V1 -e4-> T, V2 -e5-> T.
/// One corruption among e1, e2, e3.
inline AdversarialNetwork diamond_network() {
  NetworkDescription d{{"S", "V1", "V2", "T"},
                       {{"e1", "S", "V1"}, {"e2", "S", "V2"}, {"e3", "S", "V2"}, {"e4", "V1", "T"}, {"e5", "V2", "T"}},
                       "S",
                       {"T"}};
  return make_adversarial(d, {"e1", "e2", "e3"}, 1);
}

/// Diamond with a second parallel edge into V1: e1,e2 -> V1, e3,e4 -> V2.
/// One corruption among the four source edges.
inline AdversarialNetwork mirrored_diamond_network() {
  NetworkDescription d{{"S", "V1", "V2", "T"},
                       {{"e1", "S", "V1"},
                        {"e2", "S", "V1"},
                        {"e3", "S", "V2"},
                        {"e4", "S", "V2"},
                        {"e5", "V1", "T"},
                        {"e6", "V2", "T"}},
                       "S",
                       {"T"}};
  return make_adversarial(d, {"e1", "e2", "e3", "e4"}, 1);
}

/// Two relays plus a direct edge: S -e1-> V1, S -e2-> T, S -e3-> V2,
/// V1 -e4-> T, V2 -e5-> T.
/// One corruption among e1, e2, e3.
inline AdversarialNetwork bypass_network() {
  NetworkDescription d{{"S", "V1", "V2", "T"},
                       {{"e1", "S", "V1"}, {"e2", "S", "T"}, {"e3", "S", "V2"}, {"e4", "V1", "T"}, {"e5", "V2", "T"}},
                       "S",
                       {"T"}};
  return make_adversarial(d, {"e1", "e2", "e3"}, 1);
}

/// S -e1-> V -e2-> T with no adversary.
inline AdversarialNetwork chain_network() {
  NetworkDescription d{{"S", "V", "T"}, {{"e1", "S", "V"}, {"e2", "V", "T"}}, "S", {"T"}};
  return make_adversarial(d, {}, 0);
}

/// Two-level network with W1 (indegree 4, outdegree 2) and W2 (indegree 4,
/// outdegree 4); one corruption anywhere on the first level.
inline AdversarialNetwork two_level_reference_network() {
  NetworkDescription d;
  d.vertices = {"S", "W1", "W2", "T"};
  d.source = "S";
  d.terminals = {"T"};
  std::vector<std::string> first;
  for (int i = 1; i <= 4; ++i) {
    d.edges.push_back({"a" + std::to_string(i), "S", "W1"});
    first.push_back("a" + std::to_string(i));
  }
  for (int i = 1; i <= 2; ++i) d.edges.push_back({"b" + std::to_string(i), "W1", "T"});
  for (int i = 1; i <= 4; ++i) {
    d.edges.push_back({"c" + std::to_string(i), "S", "W2"});
    first.push_back("c" + std::to_string(i));
  }
  for (int i = 1; i <= 4; ++i) d.edges.push_back({"d" + std::to_string(i), "W2", "T"});
  return make_adversarial(d, first, 1);
}

}  // namespace oneshot
