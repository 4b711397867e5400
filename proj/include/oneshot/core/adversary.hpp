#pragma once

#include <string>
#include <vector>

#include "oneshot/core/network.hpp"

namespace oneshot {

/// Corrupts up to `budget()` edges chosen from a fixed vulnerable set.
class Adversary {
 public:
  Adversary(const Network& net, EdgeSet vulnerable, std::size_t budget)
      : vulnerable_(net.ordered(std::move(vulnerable))), mask_(net.edge_count(), 0), budget_(budget) {
    if (budget_ > vulnerable_.size())
      throw Error(ErrorKind::InvalidAdversary, "budget t=" + std::to_string(budget_) + " exceeds " +
                                                   std::to_string(vulnerable_.size()) + " vulnerable edges");
    for (EdgeIndex e : vulnerable_) mask_[e] = 1;
  }

  /// No vulnerable edges, budget 0.
  static Adversary none(const Network& net) { return Adversary(net, {}, 0); }

  const EdgeSet& vulnerable() const noexcept { return vulnerable_; }
  std::size_t budget() const noexcept { return budget_; }
  bool is_vulnerable(EdgeIndex e) const { return e < mask_.size() && mask_[e]; }

 private:
  EdgeSet vulnerable_;
  std::vector<char> mask_;
  std::size_t budget_;
};

}  // namespace oneshot
