// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "oneshot/oneshot.hpp"

using namespace oneshot;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

class Clock {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string fmt(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fs", s);
  return buf;
}

Outcome diamond_achievability() {
  const Clock clock;
  const auto an = diamond_network();
  std::string detail;
  bool ok = true;
  for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
    const auto s = diamond_scheme(q);
    const bool unambiguous = static_cast<bool>(is_unambiguous(an.network, an.adversary, s.code, s.outer));
    ok = ok && unambiguous && s.size() == q - 1;
    detail += "q=" + std::to_string(q) + ":|C|=" + std::to_string(s.size()) + (unambiguous ? " " : "(ambiguous) ");
  }
  const double t = clock.seconds();
  ok = ok && t < 1.0;
  return {ok, detail + "in " + fmt(t)};
}

Outcome diamond_converse_two() {
  const Clock clock;
  const auto an = diamond_network();
  const auto r = best_over_all_codes(an.network, an.adversary, Alphabet(2));
  const double t = clock.seconds();
  const bool ok = r.space == 64 && r.examined == 64 && r.report.max_code_size == 1 && t < 1.0;
  return {ok, "M=" + std::to_string(r.report.max_code_size) + " over " + std::to_string(r.examined) + " codes in " + fmt(t)};
}

Outcome diamond_converse_three() {
  const auto an = diamond_network();
  const Clock clock;
  const auto r = best_over_all_codes(an.network, an.adversary, Alphabet(3));
  const double t = clock.seconds();
  const std::size_t bound = singleton_cutset_bound(an.network, an.adversary).value;

  SearchOptions pruned;
  pruned.prune_symmetry = true;
  const auto p2 = best_over_all_codes(an.network, an.adversary, Alphabet(2), pruned);
  const auto u2 = best_over_all_codes(an.network, an.adversary, Alphabet(2));
  const auto p3 = best_over_all_codes(an.network, an.adversary, Alphabet(3), pruned);

  const bool ok = r.examined == 531441 && r.report.max_code_size == 2 && bound == 1 && t <= 600.0 &&
                  p2.report.max_code_size == u2.report.max_code_size && p3.report.max_code_size == 2;
  return {ok, "M=" + std::to_string(r.report.max_code_size) + " over " + std::to_string(r.examined) +
                  " codes in " + fmt(t) + "; pruned q=2 M=" + std::to_string(p2.report.max_code_size) +
                  " vs unpruned M=" + std::to_string(u2.report.max_code_size) + "; pruned q=3 M=" +
                  std::to_string(p3.report.max_code_size) + " over " + std::to_string(p3.examined) + " codes"};
}

Outcome converse_inequality() {
  const Clock clock;
  const auto an = diamond_network();
  const auto r2 = verify_diamond_converse(an.network, an.adversary, Alphabet(2));
  const auto r3 = verify_diamond_converse(an.network, an.adversary, Alphabet(3));
  ConverseMode sampled;
  sampled.samples = 10000;
  sampled.seed = 20261015;
  const auto r4 = verify_diamond_converse(an.network, an.adversary, Alphabet(4), sampled);
  const std::size_t violations = r2.violations.size() + r3.violations.size() + r4.violations.size();
  const bool ok = violations == 0 && r2.codes_checked == 64 && r3.codes_checked == 531441 && r4.codes_checked >= 10000;
  return {ok, std::to_string(violations) + " violations; checked " + std::to_string(r2.codes_checked) + " (q=2), " +
                  std::to_string(r3.codes_checked) + " (q=3), " + std::to_string(r4.codes_checked) +
                  " random (q=4, max |C|=" + std::to_string(r4.max_code_size) + ") in " + fmt(clock.seconds())};
}

Outcome mirrored_diamond() {
  const Clock clock;
  const auto an = mirrored_diamond_network();
  bool ok = true;
  std::string detail;
  for (std::uint32_t q : {2u, 3u, 4u}) {
    const auto s = mirrored_diamond_scheme(q);
    const bool unambiguous = static_cast<bool>(is_unambiguous(an.network, an.adversary, s.code, s.outer));
    ok = ok && unambiguous && s.size() == q;
    detail += "q=" + std::to_string(q) + ":|C|=" + std::to_string(s.size()) + (unambiguous ? " " : "(ambiguous) ");
  }
  const std::size_t bound = singleton_cutset_bound(an.network, an.adversary).value;
  const double t = clock.seconds();
  ok = ok && bound == 1 && t < 1.0;
  return {ok, detail + "bound=" + std::to_string(bound) + " in " + fmt(t)};
}

Outcome bound_golden_values() {
  const auto d = diamond_network(), m = mirrored_diamond_network(), e = bypass_network();
  const std::size_t bd = singleton_cutset_bound(d.network, d.adversary).value;
  const std::size_t bm = singleton_cutset_bound(m.network, m.adversary).value;
  const std::size_t be = singleton_cutset_bound(e.network, e.adversary).value;

  std::mt19937_64 rng(6);
  auto pick = [&](std::size_t lo, std::size_t hi) { return std::uniform_int_distribution<std::size_t>(lo, hi)(rng); };
  int agree = 0, total = 0;
  while (total < 100) {
    NetworkDescription desc;
    desc.vertices = {"S", "T"};
    desc.source = "S";
    desc.terminals = {"T"};
    std::vector<std::string> first;
    const std::size_t k = pick(1, 5), t = pick(1, 2);
    for (std::size_t i = 1; i <= k; ++i) {
      const std::string w = "W" + std::to_string(i);
      desc.vertices.push_back(w);
      const std::size_t in = pick(1, 4), out = pick(1, 4);
      for (std::size_t j = 1; j <= in; ++j) {
        desc.edges.push_back({"a" + std::to_string(i) + "_" + std::to_string(j), "S", w});
        first.push_back(desc.edges.back().id);
      }
      for (std::size_t j = 1; j <= out; ++j)
        desc.edges.push_back({"b" + std::to_string(i) + "_" + std::to_string(j), w, "T"});
    }
    if (first.size() < t) continue;
    const auto an = make_adversarial(desc, first, t);
    ++total;
    agree += two_level_bound(an.network, an.adversary).value == singleton_cutset_bound(an.network, an.adversary).value;
  }
  const bool ok = bd == 1 && bm == 1 && be == 1 && agree == total;
  return {ok, "diamond=" + std::to_string(bd) + " mirrored=" + std::to_string(bm) + " bypass=" + std::to_string(be) +
                  "; two-level agreement " + std::to_string(agree) + "/" + std::to_string(total)};
}

Outcome bypass_transfer_law() {
  const Clock clock;
  const auto an = bypass_network();
  const auto& net = an.network;
  const EdgeSet from = net.edges_by_id(std::vector<std::string>{"e1", "e2", "e3"});
  const EdgeSet to = net.edges_by_id(std::vector<std::string>{"e2", "e4", "e5"});
  std::size_t checked = 0, matched = 0;
  for (std::uint32_t q : {2u, 3u}) {
    const Alphabet a(q);
    NetworkCode code(net, a);
    for (VertexIndex v : net.intermediates()) code.assign(v, [](std::span<const Symbol> in) { return Word{in[0]}; });
    for (const auto& x : all_words(a, 3)) {
      std::vector<Word> ball;
      for (const auto& y : all_words(a, 3)) {
        std::size_t d = 0;
        for (std::size_t i = 0; i < 3; ++i) d += y[i] != x[i];
        if (d <= 1) ball.push_back(Word{y[1], y[0], y[2]});
      }
      std::sort(ball.begin(), ball.end());
      ++checked;
      matched += transfer_set(net, an.adversary, code, from, to, x).result == ball;
    }
  }
  const double t = clock.seconds();
  return {matched == checked && t < 1.0, std::to_string(matched) + "/" + std::to_string(checked) + " inputs in " + fmt(t)};
}

Outcome two_level_achievability() {
  const Clock clock;
  const auto an = two_level_reference_network();
  const auto s = two_level_scheme(an.network, an.adversary, 5);
  const bool unambiguous = static_cast<bool>(is_unambiguous(an.network, an.adversary, s.code, s.outer));
  const std::size_t bound = two_level_bound(an.network, an.adversary).value;
  const double t = clock.seconds();
  const bool ok = s.size() == 625 && unambiguous && s.rate_string() == "4" && bound == 4 && t < 30.0;
  return {ok, "|C|=" + std::to_string(s.size()) + (unambiguous ? " unambiguous" : " ambiguous") + " rate=" +
                  s.rate_string() + " bound=" + std::to_string(bound) + " in " + fmt(t)};
}

Outcome order_invariance() {
  const Clock clock;
  std::mt19937_64 rng(9);
  std::size_t compared = 0, equal = 0;
  for (const auto& an : {diamond_network(), bypass_network()}) {
    const auto& net = an.network;
    const Alphabet a(3);
    NetworkCode code(net, a);
    std::uniform_int_distribution<Symbol> sym(0, 2);
    for (Symbol& s : code.mutable_data()) s = sym(rng);
    const auto src = net.out_edges(net.source());
    const auto dst = net.in_edges(net.terminals()[0]);
    const EdgeSet from(src.begin(), src.end()), to(dst.begin(), dst.end());

    // Transfer sets keyed by edge, so different orders compare directly.
    using Keyed = std::set<std::map<EdgeIndex, Symbol>>;
    auto keyed = [](const TransferSet& ts) {
      Keyed k;
      for (const auto& y : ts.result) {
        std::map<EdgeIndex, Symbol> m;
        for (std::size_t i = 0; i < y.size(); ++i) m[ts.to[i]] = y[i];
        k.insert(m);
      }
      return k;
    };
    std::vector<Keyed> reference;
    for (const auto& x : all_words(a, from.size())) reference.push_back(keyed(transfer_set(net, an.adversary, code, from, to, x)));

    for (int k = 0; k < 10; ++k) {
      const Network alt = net.with_edge_order(sample_edge_order(net, rng));
      NetworkCode alt_code(alt, a);
      for (VertexIndex v : alt.intermediates()) {
        alt_code.assign(v, [&](std::span<const Symbol> in) {
          const auto ai = alt.in_edges(v), bi = net.in_edges(v), ao = alt.out_edges(v), bo = net.out_edges(v);
          Word base_in;
          for (EdgeIndex e : bi) base_in.push_back(in[static_cast<std::size_t>(std::find(ai.begin(), ai.end(), e) - ai.begin())]);
          const Word base_out = code.apply(v, base_in);
          Word out;
          for (EdgeIndex e : ao) out.push_back(base_out[static_cast<std::size_t>(std::find(bo.begin(), bo.end(), e) - bo.begin())]);
          return out;
        });
      }
      const Adversary alt_adv(alt, an.adversary.vulnerable(), an.adversary.budget());
      const EdgeSet alt_from = alt.ordered(from);
      std::size_t i = 0;
      for (const auto& x : all_words(a, from.size())) {
        Word alt_x(x.size());
        for (std::size_t j = 0; j < x.size(); ++j)
          alt_x[j] = x[static_cast<std::size_t>(std::find(from.begin(), from.end(), alt_from[j]) - from.begin())];
        ++compared;
        equal += keyed(transfer_set(alt, alt_adv, alt_code, from, to, alt_x)) == reference[i++];
      }
    }
  }
  const double t = clock.seconds();
  return {equal == compared && t < 5.0, std::to_string(equal) + "/" + std::to_string(compared) + " transfer sets in " + fmt(t)};
}

Outcome reed_solomon() {
  const Clock clock;
  const MdsCode code(4, 2, PrimeField(5));
  const ExhaustiveDecoder dec(code);
  std::size_t cases = 0, correct = 0;
  for (const auto& m : all_words(Alphabet(5), 2)) {
    const Word cw = rs_encode(code, m);
    for (std::size_t pos = 0; pos < 4; ++pos)
      for (Symbol err = 1; err < 5; ++err) {
        Word r = cw;
        r[pos] = static_cast<Symbol>((r[pos] + err) % 5);
        ++cases;
        correct += dec.decode(r) == m;
      }
  }
  const std::size_t d = minimum_distance(code);
  const double t = clock.seconds();
  return {cases == 400 && correct == 400 && d == 3 && t < 1.0,
          std::to_string(correct) + "/" + std::to_string(cases) + " corrections, d=" + std::to_string(d) + " in " + fmt(t)};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"diamond achievability q in 2..5", diamond_achievability},
      {"diamond exhaustive search q=2", diamond_converse_two},
      {"diamond exhaustive search q=3", diamond_converse_three},
      {"diamond code-size inequality", converse_inequality},
      {"mirrored diamond meets bound", mirrored_diamond},
      {"cut-set bound golden values", bound_golden_values},
      {"bypass transfer-set law", bypass_transfer_law},
      {"two-level achievability", two_level_achievability},
      {"edge-order invariance", order_invariance},
      {"Reed-Solomon [4,2,3] over GF(5)", reed_solomon},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += !o.pass;
    std::printf("%s %zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
