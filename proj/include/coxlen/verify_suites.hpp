#pragma once

#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "coxlen/certificates.hpp"
#include "coxlen/coxeter_matrix.hpp"
#include "coxlen/geometric_rep.hpp"
#include "coxlen/graph_enum.hpp"
#include "coxlen/orientations.hpp"
#include "coxlen/reflection_length.hpp"
#include "coxlen/systems.hpp"
#include "coxlen/word_engine.hpp"

namespace coxlen {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;

  bool passed() const {
    for (const auto& c : checks)
      if (!c.passed)
        return false;
    return true;
  }

  void add(std::string name, bool ok, std::string detail = "") {
    checks.push_back({std::move(name), ok, std::move(detail)});
  }
};

namespace detail {

inline Word random_word(std::mt19937& rng, int rank, int min_len, int max_len) {
  std::uniform_int_distribution<int> len_dist(min_len, max_len);
  std::uniform_int_distribution<int> gen_dist(0, rank - 1);
  Word w(static_cast<std::size_t>(len_dist(rng)));
  for (auto& g : w)
    g = static_cast<Gen>(gen_dist(rng));
  return w;
}

inline std::string show_count(int got, int want) {
  std::ostringstream os;
  os << got << " checked (required " << want << ")";
  return os.str();
}

} // namespace detail

/// Exhaustive flip-class verification of the bipartite/tree equivalences on
/// every connected graph with at most n_max vertices.
inline SuiteReport verify_theorem_b(int n_max, const Deadline& deadline = {}) {
  SuiteReport report{"theorem-b", {}};
  GraphCheckReport gc = exhaustive_graph_check(n_max, deadline);
  int failures = 0;
  for (const auto& rec : gc.records)
    if (!rec.ok)
      ++failures;
  std::ostringstream os;
  os << gc.graphs_checked << " connected graphs on <= " << n_max << " vertices, " << failures
     << " counterexamples";
  report.add("exists-iff-bipartite and forall-iff-tree", gc.passed, os.str());
  static const int kConnectedCounts[] = {0, 1, 1, 2, 6, 21, 112, 853};
  if (n_max <= 7) {
    int expected = 0;
    for (int n = 1; n <= n_max; ++n)
      expected += kConnectedCounts[n];
    report.add("connected graph census", gc.graphs_checked == expected,
               detail::show_count(gc.graphs_checked, expected));
  }
  return report;
}

/// Triple agreement of the cancellation search, the reflection-product
/// oracle, and the fixed-space formula on every element of the five fully
/// enumerated groups.
inline SuiteReport verify_oracles(const Deadline& deadline = {}) {
  SuiteReport report{"oracles", {}};
  struct Case {
    const char* name;
    CoxeterMatrix matrix;
    std::size_t order;
  };
  const std::vector<Case> cases = {
      {"A2", CoxeterMatrix::path({3}), 6},      {"B2", CoxeterMatrix::path({4}), 8},
      {"I2(5)", CoxeterMatrix::path({5}), 10},  {"I2(6)", CoxeterMatrix::path({6}), 12},
      {"A3", CoxeterMatrix::path({3, 3}), 24},
  };
  for (const auto& c : cases) {
    WordEngine eng(c.matrix);
    eng.set_deadline(deadline);
    ReflectionLength rl(eng);
    GeometricRep rep(c.matrix);
    auto ball = eng.enumerate_ball(16);
    bool ok = ball.size() == c.order;
    int checked = 0;
    for (const GroupElement& w : ball) {
      int a = rl.rl(w).value;
      int b = rl.rl_bruteforce(w).value;
      int d = rep.carter_rl(w);
      if (a != b || a != d) {
        ok = false;
        break;
      }
      ++checked;
    }
    std::ostringstream os;
    os << ball.size() << " elements, " << checked << " in agreement";
    report.add(std::string("rl == bruteforce == fixed-space on ") + c.name, ok, os.str());
  }
  return report;
}

/// The involution power bound: rl((ab)^n) <= rl(a)+rl(b) for odd n and
/// 2 min(rl(a), rl(b)) for even n, over sampled validated pairs, plus the
/// infinite dihedral power profile.
inline SuiteReport verify_eq1(int max_power = 10, const Deadline& deadline = {}) {
  SuiteReport report{"eq1", {}};
  struct Source {
    CoxeterMatrix matrix;
    int ball_radius;
    int max_pairs;
  };
  const std::vector<Source> sources = {
      {CoxeterMatrix::path({4}), 4, 8},
      {CoxeterMatrix::path({5}), 5, 8},
      {CoxeterMatrix::path({6}), 6, 8},
      {CoxeterMatrix::dihedral(kInfinity), 3, 8},
      {CoxeterMatrix::right_angled(3, {{0, 1}, {1, 2}}), 3, 8},
      {CoxeterMatrix::right_angled(4, {{0, 1}, {0, 2}, {0, 3}}), 3, 6},
      {CoxeterMatrix::right_angled(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}), 2, 6},
      {CoxeterMatrix::path({3, 3}), 4, 8},
  };
  int pairs_checked = 0;
  bool bounds_ok = true;
  for (const auto& src : sources) {
    WordEngine eng(src.matrix);
    eng.set_deadline(deadline);
    ReflectionLength rl(eng);
    std::vector<GroupElement> involutions;
    for (const GroupElement& x : eng.enumerate_ball(src.ball_radius))
      if (!x.is_identity() && eng.multiply(x, x).is_identity())
        involutions.push_back(x);
    int taken = 0;
    for (std::size_t i = 0; i < involutions.size() && taken < src.max_pairs; ++i)
      for (std::size_t j = 0; j < involutions.size() && taken < src.max_pairs; ++j) {
        if (i == j)
          continue;
        InvolutionPair pair = make_involution_pair(
            eng, involutions[i], involutions[j], eng.multiply(involutions[i], involutions[j]));
        GroupElement w = eng.multiply(pair.a, pair.b);
        GroupElement p;
        for (int n = 1; n <= max_power; ++n) {
          p = eng.multiply(p, w);
          if (rl.rl(p).value > rl.power_bound_from_involutions(pair, n))
            bounds_ok = false;
        }
        ++taken;
        ++pairs_checked;
      }
  }
  report.add("rl((ab)^n) within the involution power bound", bounds_ok && pairs_checked >= 50,
             detail::show_count(pairs_checked, 50));

  WordEngine dihedral(CoxeterMatrix::dihedral(kInfinity));
  dihedral.set_deadline(deadline);
  ReflectionLength drl(dihedral);
  GroupElement st = dihedral.from_letters({0, 1});
  bool all_two = true;
  for (auto [n, v] : drl.rl_power_sequence(st, max_power))
    all_two = all_two && v == 2;
  report.add("infinite dihedral rl((st)^n) = 2 for n <= 10", all_two);
  SrlEstimate est = drl.srl_estimate(st, 10);
  std::ostringstream os;
  os << "best upper bound " << est.best_upper;
  report.add("infinite dihedral srl upper bound at n = 10 within 0.2", est.best_upper <= 0.2,
             os.str());
  return report;
}

/// Sampled structural invariants of rl: parity, conjugation invariance,
/// subadditivity, inverse invariance, additivity across disconnected
/// components, and parabolic restriction.
inline SuiteReport verify_invariants(int pair_samples = 520, int parabolic_samples = 120,
                                     std::uint32_t seed = 20240901,
                                     const Deadline& deadline = {}) {
  SuiteReport report{"invariants", {}};
  std::mt19937 rng(seed);

  const std::vector<CoxeterMatrix> systems = {
      CoxeterMatrix::path({3}),
      CoxeterMatrix::path({4}),
      CoxeterMatrix::path({5}),
      CoxeterMatrix::path({3, 3}),
      CoxeterMatrix::dihedral(kInfinity),
      CoxeterMatrix::universal(3),
      CoxeterMatrix::right_angled(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}),
  };
  bool parity_ok = true, conj_ok = true, subadd_ok = true, inverse_ok = true;
  int pairs = 0;
  while (pairs < pair_samples) {
    for (const auto& m : systems) {
      if (pairs >= pair_samples)
        break;
      WordEngine eng(m);
      eng.set_deadline(deadline);
      ReflectionLength rl(eng);
      GroupElement u = eng.reduce(detail::random_word(rng, m.rank(), 0, 5));
      GroupElement v = eng.reduce(detail::random_word(rng, m.rank(), 0, 4));
      GroupElement conj_v = eng.reduce(detail::random_word(rng, m.rank(), 0, 2));
      int ru = rl.rl(u).value;
      int rv = rl.rl(v).value;
      parity_ok = parity_ok && (ru - u.length()) % 2 == 0 && (rv - v.length()) % 2 == 0;
      conj_ok = conj_ok && rl.rl(eng.conjugate(conj_v, u)).value == ru;
      subadd_ok = subadd_ok && rl.rl(eng.multiply(u, v)).value <= ru + rv;
      inverse_ok = inverse_ok && rl.rl(eng.invert(u)).value == ru;
      ++pairs;
    }
  }
  report.add("parity rl(w) == len(w) mod 2", parity_ok, detail::show_count(pairs, pair_samples));
  report.add("conjugation invariance", conj_ok, detail::show_count(pairs, pair_samples));
  report.add("subadditivity rl(uv) <= rl(u) + rl(v)", subadd_ok);
  report.add("inverse invariance rl(w^-1) = rl(w)", inverse_ok);

  // Additivity across disconnected components.
  bool additive_ok = true;
  const std::vector<std::pair<CoxeterMatrix, int>> split_systems = {
      {CoxeterMatrix::from_edges(4, {{0, 1, 3}, {2, 3, 3}}), 2},          // A2 x A2
      {CoxeterMatrix::from_edges(3, {{0, 1, 4}}), 2},                     // B2 x A1
      {CoxeterMatrix::from_edges(4, {{0, 1, kInfinity}, {2, 3, 3}}), 2},  // dihedral x A2
  };
  int additive_checked = 0;
  for (const auto& [m, cut] : split_systems) {
    WordEngine eng(m);
    eng.set_deadline(deadline);
    ReflectionLength rl(eng);
    for (int it = 0; it < 24; ++it) {
      Word w1 = detail::random_word(rng, cut, 0, 4);
      Word w2raw = detail::random_word(rng, m.rank() - cut, 0, 4);
      Word w2;
      for (Gen g : w2raw)
        w2.push_back(static_cast<Gen>(g + cut));
      Word both = w1;
      both.insert(both.end(), w2.begin(), w2.end());
      int sum = rl.rl(eng.reduce(w1)).value + rl.rl(eng.reduce(w2)).value;
      additive_ok = additive_ok && rl.rl(eng.reduce(both)).value == sum;
      ++additive_checked;
    }
  }
  report.add("additivity across components", additive_ok,
             detail::show_count(additive_checked, 72));

  // Parabolic restriction: rl in a standard parabolic equals rl in the group.
  bool parabolic_ok = true;
  struct Parabolic {
    CoxeterMatrix big;
    std::vector<int> subset;
  };
  const std::vector<Parabolic> parabolics = {
      {CoxeterMatrix::path({3, 3}), {0, 1}},
      {CoxeterMatrix::path({4, 3}), {1, 2}},
      {CoxeterMatrix::universal(3), {0, 1}},
      {CoxeterMatrix::right_angled(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}), {0, 1, 2}},
  };
  int parabolic_checked = 0;
  while (parabolic_checked < parabolic_samples) {
    for (const auto& p : parabolics) {
      if (parabolic_checked >= parabolic_samples)
        break;
      WordEngine big(p.big);
      big.set_deadline(deadline);
      WordEngine small(p.big.restrict(p.subset));
      small.set_deadline(deadline);
      ReflectionLength rl_big(big), rl_small(small);
      Word local = detail::random_word(rng, static_cast<int>(p.subset.size()), 0, 5);
      Word global;
      for (Gen g : local)
        global.push_back(static_cast<Gen>(p.subset[g]));
      if (rl_big.rl(big.reduce(global)).value != rl_small.rl(small.reduce(local)).value)
        parabolic_ok = false;
      ++parabolic_checked;
    }
  }
  report.add("parabolic restriction equality", parabolic_ok,
             detail::show_count(parabolic_checked, parabolic_samples));
  return report;
}

/// On cycles, flip equivalence is exactly equality of curl; reversal
/// negates curl; odd cycles only see odd curl.
inline SuiteReport verify_curl(int n_min = 3, int n_max = 8, int random_words = 100,
                               std::uint32_t seed = 77003, const Deadline& deadline = {}) {
  SuiteReport report{"curl", {}};
  std::mt19937 rng(seed);
  bool classes_ok = true, census_ok = true, negation_ok = true, odd_ok = true;
  for (int n = n_min; n <= n_max; ++n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i)
      edges.emplace_back(i, i + 1);
    edges.emplace_back(0, n - 1);
    CoxeterGraph g = CoxeterGraph::of(CoxeterMatrix::right_angled(n, edges));
    auto orientations = all_acyclic_orientations(g);
    census_ok = census_ok && orientations.size() == (1u << n) - 2;
    auto cls = flip_class_partition(g, orientations, deadline);
    int classes = 0;
    for (auto& [o, id] : cls)
      classes = std::max(classes, id + 1);
    census_ok = census_ok && classes == n - 1;
    for (const auto& a : orientations)
      for (const auto& b : orientations)
        if ((cls.at(a) == cls.at(b)) != (curl(g, a) == curl(g, b)))
          classes_ok = false;
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    for (int it = 0; it < random_words / (n_max - n_min + 1) + 1; ++it) {
      std::shuffle(order.begin(), order.end(), rng);
      Word w(order.begin(), order.end());
      CoxeterWord cw{w};
      CoxeterWord rev{Word(w.rbegin(), w.rend())};
      int c = curl(g, cw);
      negation_ok = negation_ok && curl(g, rev) == -c;
      if (n % 2 == 1)
        odd_ok = odd_ok && c % 2 != 0;
    }
  }
  report.add("flip classes coincide with curl levels on C3..C8", classes_ok);
  report.add("orientation census and class counts", census_ok);
  report.add("reversal negates curl", negation_ok);
  report.add("odd cycles have odd curl", odd_ok);
  return report;
}

/// Constructive witnesses: every conjugating involution found yields a
/// validated involution pair, and every achirality witness yields a
/// re-verified commutator identity for w^(2km).
inline SuiteReport verify_witnesses(int target = 50, std::uint32_t seed = 424243,
                                    const Deadline& deadline = {}) {
  SuiteReport report{"witnesses", {}};
  std::mt19937 rng(seed);
  const std::vector<CoxeterMatrix> systems = {
      CoxeterMatrix::path({3}),
      CoxeterMatrix::path({4}),
      CoxeterMatrix::path({5}),
      CoxeterMatrix::path({3, 3}),
      CoxeterMatrix::dihedral(kInfinity),
      CoxeterMatrix::right_angled(3, {{0, 1}, {1, 2}}),
  };
  int pair_hits = 0, commutator_hits = 0;
  bool all_ok = true;
  int guard = 0;
  while ((pair_hits < target || commutator_hits < target) && guard++ < 4000) {
    for (const auto& m : systems) {
      WordEngine eng(m);
      eng.set_deadline(deadline);
      ReflectionLength rl(eng);
      GroupElement w = eng.reduce(detail::random_word(rng, m.rank(), 1, 4));
      try {
        if (auto pair = rl.involution_pair_search(w, 4)) {
          // make_involution_pair already re-validated the pair.
          ++pair_hits;
        }
        ChiralityReport probe = rl.chirality_probe(w, 2, 4);
        if (probe.witness) {
          for (int k = 1; k <= 2; ++k)
            rl.commutator_witness(probe.witness->conjugator, w, probe.witness->power, k);
          commutator_hits += 2;
        }
      } catch (const Error&) {
        all_ok = false;
      }
    }
  }
  report.add("involution pairs from conjugating involutions validate",
             all_ok && pair_hits >= target, detail::show_count(pair_hits, target));
  report.add("commutator identities for w^(2km) re-verified",
             all_ok && commutator_hits >= target, detail::show_count(commutator_hits, target));
  return report;
}

} // namespace coxlen
