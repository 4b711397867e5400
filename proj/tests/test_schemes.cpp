#include <gtest/gtest.h>

#include <random>
#include <set>

#include "generators.hpp"
#include "oneshot/analysis/unambiguity.hpp"
#include "oneshot/bounds/bounds.hpp"
#include "oneshot/catalog.hpp"
#include "oneshot/schemes/prime_field.hpp"
#include "oneshot/schemes/reed_solomon.hpp"
#include "oneshot/schemes/schemes.hpp"
#include "oracle.hpp"

using namespace oneshot;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::ParseError;
}

}  // namespace

TEST(PrimeField, Arithmetic) {
  EXPECT_TRUE(is_prime(2));
  EXPECT_TRUE(is_prime(97));
  EXPECT_FALSE(is_prime(1));
  EXPECT_FALSE(is_prime(91));
  EXPECT_EQ(kind_of([] { PrimeField(4); }), ErrorKind::NotPrime);
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 13u}) {
    const PrimeField f(p);
    for (Symbol a = 0; a < p; ++a) {
      EXPECT_EQ(f.add(a, f.neg(a)), 0u);
      EXPECT_EQ(f.pow(a, p), a);
      if (a) {
        EXPECT_EQ(f.mul(a, f.inv(a)), 1u);
      }
      for (Symbol b = 0; b < p; ++b) {
        EXPECT_EQ(f.add(a, b), (a + b) % p);
        EXPECT_EQ(f.mul(a, b), (a * b) % p);
        EXPECT_EQ(f.add(f.sub(a, b), b), a);
        if (b) {
          EXPECT_EQ(f.mul(f.div(a, b), b), a);
        }
      }
    }
    EXPECT_EQ(kind_of([&] { f.inv(0); }), ErrorKind::DivisionByZero);
  }
}

TEST(ReedSolomon, ParameterChecks) {
  const PrimeField f(5);
  EXPECT_EQ(kind_of([&] { MdsCode(6, 2, f); }), ErrorKind::FieldTooSmall);
  EXPECT_EQ(kind_of([&] { MdsCode(4, 0, f); }), ErrorKind::InvalidCode);
  EXPECT_EQ(kind_of([&] { MdsCode(4, 5, f); }), ErrorKind::InvalidCode);
  const MdsCode c(4, 2, f);
  EXPECT_EQ(c.distance(), 3u);
  EXPECT_EQ(c.radius(), 1u);
  EXPECT_EQ(kind_of([&] { rs_encode(c, Word{1}); }), ErrorKind::LengthMismatch);
  EXPECT_EQ(kind_of([&] { rs_encode(c, Word{1, 5}); }), ErrorKind::SymbolOutOfRange);
}

TEST(ReedSolomon, EncodingMatchesHorner) {
  for (auto [n, k, p] : {std::tuple{4u, 2u, 5u}, {5u, 3u, 7u}, {3u, 1u, 3u}, {6u, 2u, 7u}}) {
    const MdsCode c(n, k, PrimeField(p));
    for (const auto& m : oracle::words(p, k)) EXPECT_EQ(rs_encode(c, m), oracle::rs_codeword(m, p, n));
  }
}

TEST(ReedSolomon, MinimumDistanceIsSingleton) {
  for (auto [n, k, p] : {std::tuple{4u, 2u, 5u}, {5u, 3u, 7u}, {5u, 1u, 5u}, {6u, 2u, 7u}}) {
    const MdsCode c(n, k, PrimeField(p));
    EXPECT_EQ(minimum_distance(c), n - k + 1);
    const auto book = codebook(c);
    std::size_t pairwise = n + 1;
    for (std::size_t i = 0; i < book.size(); ++i)
      for (std::size_t j = i + 1; j < book.size(); ++j) pairwise = std::min(pairwise, oracle::hamming(book[i], book[j]));
    EXPECT_EQ(pairwise, n - k + 1);
  }
}

TEST(ReedSolomon, CorrectsUpToRadius) {
  const MdsCode c(6, 2, PrimeField(7));  // radius 2
  const ExhaustiveDecoder dec(c);
  std::mt19937_64 rng(8);
  for (const auto& m : oracle::words(7, 2)) {
    Word cw = rs_encode(c, m);
    for (int k = 0; k < 5; ++k) {
      Word r = cw;
      const std::size_t i = gen::uniform(rng, 0, 5), j = gen::uniform(rng, 0, 5);
      r[i] = static_cast<Symbol>(gen::uniform(rng, 0, 6));
      r[j] = static_cast<Symbol>(gen::uniform(rng, 0, 6));
      EXPECT_EQ(dec.decode(r), m);
    }
  }
  const MdsCode small(4, 2, PrimeField(5));
  Word far = rs_encode(small, Word{0, 0});
  far[0] = 1;
  far[1] = 2;
  // Two errors exceed the radius; the word may or may not be near another codeword.
  if (!ExhaustiveDecoder(small).try_decode(far)) {
    EXPECT_EQ(kind_of([&] { rs_decode(small, far); }), ErrorKind::DecodingFailure);
  }
}

TEST(Schemes, DiamondSizes) {
  const auto an = diamond_network();
  for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
    const auto s = diamond_scheme(q);
    EXPECT_EQ(s.size(), q - 1);
    EXPECT_TRUE(is_unambiguous(an.network, an.adversary, s.code, s.outer));
    EXPECT_TRUE(oracle::unambiguous(an.network, an.adversary, s.code, s.outer.words()));
    EXPECT_EQ(s.reserved, q - 1);
  }
}

TEST(Schemes, DiamondRelayRules) {
  const auto an = diamond_network();
  const auto& net = an.network;
  const auto s = diamond_scheme(3);
  const VertexIndex v2 = net.vertex("V2");
  EXPECT_EQ(s.code.apply(v2, Word{1, 1}), Word{1});
  EXPECT_EQ(s.code.apply(v2, Word{0, 1}), Word{2});
  EXPECT_EQ(s.code.apply(v2, Word{2, 2}), Word{2});
  EXPECT_EQ(s.code.apply(net.vertex("V1"), Word{2}), Word{2});
}

TEST(Schemes, MirroredDiamondMeetsBound) {
  const auto an = mirrored_diamond_network();
  for (std::uint32_t q : {2u, 3u, 4u}) {
    const auto s = mirrored_diamond_scheme(q);
    EXPECT_EQ(s.size(), q);
    EXPECT_TRUE(is_unambiguous(an.network, an.adversary, s.code, s.outer));
    EXPECT_TRUE(oracle::unambiguous(an.network, an.adversary, s.code, s.outer.words()));
    EXPECT_EQ(s.rate_string(), "1");
  }
  EXPECT_EQ(singleton_cutset_bound(an.network, an.adversary).value, 1u);
}

TEST(Schemes, MirroredDecodeRule) {
  const Symbol star = 2;
  EXPECT_EQ(mirrored_diamond_decode(1, 1, star), 1u);
  EXPECT_EQ(mirrored_diamond_decode(star, 0, star), 0u);
  EXPECT_EQ(mirrored_diamond_decode(1, star, star), 1u);
  EXPECT_EQ(mirrored_diamond_decode(star, star, star), star);
  // Decoding the terminal pair recovers the sent symbol under every attack.
  const auto an = mirrored_diamond_network();
  const auto& net = an.network;
  const auto s = mirrored_diamond_scheme(3);
  const EdgeSet to(net.in_edges(net.terminals()[0]).begin(), net.in_edges(net.terminals()[0]).end());
  for (const auto& x : s.outer.words())
    for (const auto& y : oracle::terminal_outputs(net, an.adversary, s.code, x, to))
      EXPECT_EQ(mirrored_diamond_decode(y[0], y[1], *s.reserved), x[0]);
}

TEST(Schemes, TopologyChecks) {
  const auto ex = bypass_network();
  EXPECT_EQ(kind_of([&] { diamond_scheme(ex.network, Alphabet(3)); }), ErrorKind::UnsupportedTopology);
  EXPECT_EQ(kind_of([&] { mirrored_diamond_scheme(diamond_network().network, Alphabet(3)); }),
            ErrorKind::UnsupportedTopology);
  const auto m = mirrored_diamond_network();
  EXPECT_EQ(kind_of([&] { two_level_scheme(m.network, m.adversary, 5); }), ErrorKind::DammingVertexPresent);
  const auto tl = two_level_reference_network();
  EXPECT_EQ(kind_of([&] { two_level_scheme(tl.network, tl.adversary, 4); }), ErrorKind::NotPrime);
  EXPECT_EQ(kind_of([&] { two_level_scheme(tl.network, tl.adversary, 3); }), ErrorKind::FieldTooSmall);
  EXPECT_EQ(kind_of([&] { two_level_scheme(ex.network, ex.adversary, 5); }), ErrorKind::NotTwoLevel);
}

TEST(Schemes, TwoLevelReference) {
  const auto an = two_level_reference_network();
  const auto s = two_level_scheme(an.network, an.adversary, 5);
  EXPECT_EQ(s.size(), 625u);
  EXPECT_EQ(s.rate_string(), "4");
  EXPECT_TRUE(is_unambiguous(an.network, an.adversary, s.code, s.outer));
  EXPECT_EQ(two_level_bound(an.network, an.adversary).value, 4u);
}

TEST(Schemes, TwoLevelAchievesBoundOnRandomDamFreeNetworks) {
  std::mt19937_64 rng(47);
  int checked = 0;
  for (int trial = 0; trial < 400 && checked < 25; ++trial) {
    const auto an = gen::two_level(rng, 2, 3, 1);
    if (!damming_vertices(an.network, 1).empty()) continue;
    std::optional<Scheme> s;
    try {
      s.emplace(two_level_scheme(an.network, an.adversary, 7));
    } catch (const Error& e) {
      ADD_FAILURE() << "trial " << trial << ": " << e.what();
      continue;
    }
    ++checked;
    const std::size_t bound = two_level_bound(an.network, an.adversary).value;
    EXPECT_EQ(s->size(), *checked_pow(7, bound)) << "trial " << trial;
    EXPECT_TRUE(is_unambiguous(an.network, an.adversary, s->code, s->outer)) << "trial " << trial;
  }
  EXPECT_GE(checked, 10);
}
