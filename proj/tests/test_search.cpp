#include <gtest/gtest.h>

#include <random>

#include "generators.hpp"
#include "oneshot/analysis/unambiguity.hpp"
#include "oneshot/bounds/bounds.hpp"
#include "oneshot/catalog.hpp"
#include "oneshot/search/search.hpp"
#include "oracle.hpp"

using namespace oneshot;

TEST(SearchSpace, CountsTableEntries) {
  const auto an = diamond_network();
  const auto s2 = search_space(an.network, Alphabet(2));
  EXPECT_EQ(s2.digits, 6u);
  EXPECT_EQ(s2.total, 64);
  const auto s3 = search_space(an.network, Alphabet(3));
  EXPECT_EQ(s3.total, 531441);
  const auto s4 = search_space(an.network, Alphabet(4));
  EXPECT_EQ(s4.total.str(), "1099511627776");  // 4^(4 + 16)
  const auto tl = two_level_reference_network();
  EXPECT_GT(search_space(tl.network, Alphabet(5)).total, boost::multiprecision::cpp_int(1) << 1000);
}

TEST(Enumeration, VisitsEveryCodeOnceInOrder) {
  const auto an = diamond_network();
  const Alphabet a(2);
  std::set<std::vector<Symbol>> seen;
  std::uint64_t expected = 0;
  enumerate_network_codes(an.network, a, 1000, [&](const NetworkCode& code, std::uint64_t index) {
    EXPECT_EQ(index, expected++);
    seen.emplace(code.data().begin(), code.data().end());
    EXPECT_EQ(network_code_at(an.network, a, index), code);
    return true;
  });
  EXPECT_EQ(seen.size(), 64u);
  EXPECT_THROW(enumerate_network_codes(an.network, a, 10, [](const NetworkCode&, std::uint64_t) { return true; }), Error);
}

TEST(Search, DiamondAtTwo) {
  const auto an = diamond_network();
  const auto r = best_over_all_codes(an.network, an.adversary, Alphabet(2));
  EXPECT_EQ(r.report.max_code_size, 1u);
  EXPECT_EQ(r.report.rate_string(), "0");
  EXPECT_EQ(r.space, 64u);
  EXPECT_EQ(r.examined, 64u);
  EXPECT_FALSE(r.stopped_early);
  EXPECT_EQ(r.code_index, 0u);
}

TEST(Search, ChainStopsEarly) {
  const auto an = chain_network();
  const auto r = best_over_all_codes(an.network, an.adversary, Alphabet(2));
  EXPECT_EQ(r.report.max_code_size, 2u);
  EXPECT_EQ(r.report.rate_string(), "1");
  EXPECT_TRUE(r.stopped_early);
  EXPECT_EQ(r.code_index, 1u);  // identity table (0 -> 0, 1 -> 1)
}

TEST(Search, SpaceTooLarge) {
  const auto an = diamond_network();
  SearchOptions opt;
  opt.budget = 1000;
  try {
    best_over_all_codes(an.network, an.adversary, Alphabet(3), opt);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SearchSpaceTooLarge);
  }
}

TEST(Search, MatchesPerCodeMaximumOnRandomNetworks) {
  std::mt19937_64 rng(53);
  int done = 0;
  for (int trial = 0; trial < 200 && done < 20; ++trial) {
    const auto an = gen::small_dag(rng, 6, 1);
    const Alphabet a(2);
    const auto space = search_space(an.network, a);
    if (space.total > 4096) continue;
    ++done;
    SearchOptions opt;
    opt.early_stop = false;
    const auto r = best_over_all_codes(an.network, an.adversary, a, opt);
    std::size_t want = 0;
    std::uint64_t first = 0;
    enumerate_network_codes(an.network, a, 4096, [&](const NetworkCode& code, std::uint64_t i) {
      const auto m = max_unambiguous_code(an.network, an.adversary, code).max_code_size;
      if (m > want) {
        want = m;
        first = i;
      }
      return true;
    });
    EXPECT_EQ(r.report.max_code_size, want) << "trial " << trial;
    EXPECT_EQ(r.code_index, first) << "trial " << trial;
    EXPECT_LE(want, *checked_pow(2, singleton_cutset_bound(an.network, an.adversary).value));
  }
  EXPECT_GT(done, 5);
}

TEST(Search, ParallelAndPrunedAgree) {
  const auto an = diamond_network();
  const Alphabet a(2);
  SearchOptions base;
  base.early_stop = false;
  const auto serial = best_over_all_codes(an.network, an.adversary, a, base);
  SearchOptions parallel = base;
  parallel.jobs = 4;
  const auto par = best_over_all_codes(an.network, an.adversary, a, parallel);
  EXPECT_EQ(par.report.max_code_size, serial.report.max_code_size);
  EXPECT_EQ(par.code_index, serial.code_index);
  EXPECT_EQ(par.examined, serial.examined);
  SearchOptions pruned = base;
  pruned.prune_symmetry = true;
  const auto pr = best_over_all_codes(an.network, an.adversary, a, pruned);
  EXPECT_EQ(pr.report.max_code_size, serial.report.max_code_size);
  EXPECT_LT(pr.examined, serial.examined);
}

TEST(Search, PruningPreservesOptimumOnRandomNetworks) {
  std::mt19937_64 rng(59);
  int done = 0;
  for (int trial = 0; trial < 200 && done < 15; ++trial) {
    const auto an = gen::small_dag(rng, 6, 1);
    const Alphabet a(2);
    if (search_space(an.network, a).total > 4096) continue;
    ++done;
    SearchOptions full, pruned;
    full.early_stop = pruned.early_stop = false;
    pruned.prune_symmetry = true;
    EXPECT_EQ(best_over_all_codes(an.network, an.adversary, a, full).report.max_code_size,
              best_over_all_codes(an.network, an.adversary, a, pruned).report.max_code_size)
        << "trial " << trial;
  }
}

TEST(Converse, Limit) {
  EXPECT_EQ(diamond_converse_limit(2), 1u);
  EXPECT_EQ(diamond_converse_limit(3), 2u);
  EXPECT_EQ(diamond_converse_limit(4), 3u);
  EXPECT_EQ(diamond_converse_limit(5), 4u);
  for (std::uint32_t q = 2; q < 50; ++q) {
    const std::uint64_t m = diamond_converse_limit(q);
    EXPECT_LE(m * m + m - 1, std::uint64_t{q} * q);
    EXPECT_GT((m + 1) * (m + 1) + m, std::uint64_t{q} * q);
  }
}

TEST(Converse, ExhaustiveAtTwoAndSampledAtFour) {
  const auto an = diamond_network();
  const auto r2 = verify_diamond_converse(an.network, an.adversary, Alphabet(2));
  EXPECT_EQ(r2.codes_checked, 64u);
  EXPECT_TRUE(r2.violations.empty());
  EXPECT_EQ(r2.max_code_size, 1u);
  ConverseMode sampled;
  sampled.samples = 500;
  const auto r4 = verify_diamond_converse(an.network, an.adversary, Alphabet(4), sampled);
  EXPECT_EQ(r4.codes_checked, 500u);
  EXPECT_TRUE(r4.violations.empty());
}

TEST(Converse, RequiresDiamond) {
  const auto an = mirrored_diamond_network();
  EXPECT_THROW(verify_diamond_converse(an.network, an.adversary, Alphabet(2)), Error);
}
