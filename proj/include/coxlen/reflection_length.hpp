#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "coxlen/certificates.hpp"
#include "coxlen/coxeter_matrix.hpp"
#include "coxlen/errors.hpp"
#include "coxlen/orientations.hpp"
#include "coxlen/word_engine.hpp"

namespace coxlen {

/// Exact reflection length via the cancellation characterization, a
/// brute-force oracle over products of reflections, stable-length upper
/// bounds, and the involution / chirality certificate machinery.
class ReflectionLength {
public:
  explicit ReflectionLength(const WordEngine& eng)
      : eng_(eng), even_labels_(all_labels_even_or_infinite(eng.matrix())) {}

  const WordEngine& engine() const { return eng_; }

  /// rl(w): the least k such that some reduced word in the braid orbit of w
  /// admits deletion of k letters leaving a word equal to the identity. The
  /// deleted positions' prefix reflections, composed from the last deleted
  /// position to the first, factor w into k reflections. k runs upward with
  /// parity pruning through the sign character.
  RlCertificate rl(const GroupElement& w) const {
    if (w.is_identity())
      return make_rl_certificate(eng_, w, 0, {}, RlSource::Cancellation);
    const int len = w.length();

    // In a right-angled system the braid orbit is the commutation class and
    // deletions transport across it occurrence-by-occurrence, so searching
    // the canonical word alone is exhaustive.
    std::vector<Word> words;
    if (eng_.matrix().is_right_angled())
      words.push_back(w.word());
    else
      for (const Word& u : eng_.braid_orbit(w.word()))
        words.push_back(u);

    int start = (len % 2 == 0) ? 2 : 1;
    if (even_labels_) {
      int p = parity_popcount(w.word());
      start = std::max(start, p);
    }
    for (int k = start; k <= len; k += 2)
      for (const Word& u : words) {
        auto deleted = search_deletions(u, k);
        if (!deleted)
          continue;
        std::vector<GroupElement> prefixes = eng_.prefix_reflections(u);
        std::vector<GroupElement> factors;
        for (auto it = deleted->rbegin(); it != deleted->rend(); ++it)
          factors.push_back(prefixes[static_cast<std::size_t>(*it)]);
        return make_rl_certificate(eng_, w, k, std::move(factors), RlSource::Cancellation);
      }
    throw Error("internal: cancellation search failed to terminate");
  }

  /// Independent oracle: BFS from w toward the identity, left-multiplying by
  /// reflections of length <= L (default 2 len - 1) and keeping only states
  /// of length <= len - level. Exact when the bounds are generous enough;
  /// otherwise throws NotFoundWithinBounds, which is not a proof that rl is
  /// larger.
  RlCertificate rl_bruteforce(const GroupElement& w, int reflection_length_bound = 0,
                              int k_max = 0) const {
    if (w.is_identity())
      return make_rl_certificate(eng_, w, 0, {}, RlSource::BruteForce);
    const int len = w.length();
    const int L = reflection_length_bound > 0 ? reflection_length_bound : 2 * len - 1;
    const int K = k_max > 0 ? k_max : len;

    std::vector<GroupElement> reflections;
    for (const GroupElement& x : eng_.enumerate_ball(L))
      if (eng_.is_reflection(x))
        reflections.push_back(x);

    std::map<Word, std::pair<Word, int>> parent; // state -> (previous state, reflection index)
    parent.emplace(w.word(), std::make_pair(w.word(), -1));
    std::vector<Word> level{w.word()};
    for (int k = 1; k <= K && !level.empty(); ++k) {
      std::vector<Word> next;
      for (const Word& state : level)
        for (std::size_t ti = 0; ti < reflections.size(); ++ti) {
          eng_.deadline().check("reflection-product search");
          Word cat = reflections[ti].word();
          cat.insert(cat.end(), state.begin(), state.end());
          GroupElement v = eng_.reduce(cat);
          if (v.length() > len - k || parent.count(v.word()))
            continue;
          parent.emplace(v.word(), std::make_pair(state, static_cast<int>(ti)));
          if (v.is_identity()) {
            std::vector<GroupElement> factors;
            Word walk = v.word();
            while (true) {
              auto& [prev, idx] = parent.at(walk);
              if (idx < 0)
                break;
              factors.push_back(reflections[static_cast<std::size_t>(idx)]);
              walk = prev;
            }
            std::reverse(factors.begin(), factors.end());
            return make_rl_certificate(eng_, w, k, std::move(factors), RlSource::BruteForce);
          }
          next.push_back(v.word());
        }
      level = std::move(next);
    }
    throw NotFoundWithinBounds("no factorization with at most " + std::to_string(K) +
                               " reflections of length <= " + std::to_string(L) +
                               " (bounds exhausted, not a disproof)");
  }

  /// Exact rl of w^n for n = 1..N.
  std::vector<std::pair<int, int>> rl_power_sequence(const GroupElement& w, int N) const {
    std::vector<std::pair<int, int>> out;
    GroupElement p;
    for (int n = 1; n <= N; ++n) {
      p = eng_.multiply(p, w);
      out.emplace_back(n, rl(p).value);
    }
    return out;
  }

  /// Fekete upper bounds rl(w^n)/n for the stable reflection length.
  SrlEstimate srl_estimate(const GroupElement& w, int N) const {
    SrlEstimate est;
    est.samples = rl_power_sequence(w, N);
    for (auto [n, v] : est.samples)
      est.upper_bounds.push_back(static_cast<double>(v) / n);
    est.best_upper = est.upper_bounds.empty()
                         ? 0.0
                         : *std::min_element(est.upper_bounds.begin(), est.upper_bounds.end());
    return est;
  }

  /// Searches for x with length <= L, x^2 = 1 and x w x = w^-1; a hit yields
  /// the involution pair (w x, x) whose product is w. Absence within the
  /// bound is not a disproof.
  std::optional<InvolutionPair> involution_pair_search(const GroupElement& w, int L) const {
    GroupElement winv = eng_.invert(w);
    for (const GroupElement& x : eng_.enumerate_ball(L)) {
      eng_.deadline().check("involution pair search");
      if (!eng_.multiply(x, x).is_identity())
        continue;
      if (eng_.multiply(eng_.multiply(x, w), x) != winv)
        continue;
      return make_involution_pair(eng_, eng_.multiply(w, x), x, w);
    }
    return std::nullopt;
  }

  /// Upper bound for rl((ab)^n) from a validated involution pair:
  /// rl(a) + rl(b) for odd n, 2 min(rl(a), rl(b)) for even n.
  int power_bound_from_involutions(const InvolutionPair& p, int n) const {
    int ra = rl(p.a).value;
    int rb = rl(p.b).value;
    return (n % 2 != 0) ? ra + rb : 2 * std::min(ra, rb);
  }

  /// Given x w^m x^-1 = w^-m (validated), w^(2km) is the commutator of
  /// g = w^(km) and f = x; the identity is re-verified by reduction.
  std::pair<GroupElement, GroupElement> commutator_witness(const GroupElement& x,
                                                           const GroupElement& w, int m,
                                                           int k) const {
    GroupElement wm = eng_.power(w, m);
    if (eng_.conjugate(x, wm) != eng_.invert(wm))
      throw PreconditionFailed("commutator witness requires x w^m x^-1 = w^-m");
    GroupElement g = eng_.power(w, k * m);
    GroupElement f = x;
    GroupElement commutator = eng_.multiply(
        eng_.multiply(eng_.multiply(g, f), eng_.invert(g)), eng_.invert(f));
    if (commutator != eng_.power(w, 2 * k * m))
      throw Error("internal: commutator identity failed re-verification");
    return {g, f};
  }

  /// For m = 1..m_max, search a conjugator carrying w^m to w^-m within
  /// length L. The first hit is an achirality witness; exhaustion without a
  /// hit never claims chirality.
  ChiralityReport chirality_probe(const GroupElement& w, int m_max, int L) const {
    ChiralityReport report;
    report.m_max = m_max;
    report.conjugator_length = L;
    for (int m = 1; m <= m_max; ++m) {
      GroupElement wm = eng_.power(w, m);
      if (auto x = eng_.conjugacy_search(wm, eng_.invert(wm), L)) {
        report.witness = AchiralWitness{m, *x};
        return report;
      }
    }
    return report;
  }

  /// Bounded(pair) when the involution pair search succeeds (sound
  /// unconditionally); for Coxeter elements, falls through to the
  /// combinatorial pipeline, which alone can certify Unbounded; everything
  /// else is Unknown.
  BoundednessVerdict decide_bounded(const GroupElement& w, const SearchBounds& bounds) const {
    if (auto p = involution_pair_search(w, bounds.conjugator_length)) {
      BoundednessVerdict v;
      v.status = Boundedness::Bounded;
      v.pair = *p;
      v.bounds = bounds;
      return v;
    }
    if (is_coxeter_word(w.word(), eng_.matrix().rank()))
      return decide_theorem_b(eng_, CoxeterWord{w.word()}, bounds);
    BoundednessVerdict v;
    v.status = Boundedness::Unknown;
    v.bounds = bounds;
    return v;
  }

private:
  static bool all_labels_even_or_infinite(const CoxeterMatrix& m) {
    for (int i = 0; i < m.rank(); ++i)
      for (int j = i + 1; j < m.rank(); ++j) {
        unsigned lab = m.label(i, j);
        if (lab != kInfinity && lab % 2 != 0)
          return false;
      }
    return true;
  }

  int parity_popcount(const Word& w) const {
    auto p = eng_.letter_parity(w);
    int c = 0;
    for (int v : p)
      c += v;
    return c;
  }

  /// First k-subset of positions of u (lexicographic order) whose deletion
  /// leaves a word reducing to the identity. When every off-diagonal label
  /// is even or infinite, per-generator letter parity is an invariant, so a
  /// subset can only work if the deleted letters carry the same parity
  /// vector as the whole word; that filter is applied before reducing.
  std::optional<std::vector<int>> search_deletions(const Word& u, int k) const {
    const int n = static_cast<int>(u.size());
    if (k > n)
      return std::nullopt;
    std::vector<int> total;
    if (even_labels_)
      total = eng_.letter_parity(u);
    std::vector<int> c(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i)
      c[static_cast<std::size_t>(i)] = i;
    std::vector<int> remove_parity(total.size());
    for (;;) {
      eng_.deadline().check("cancellation search");
      bool candidate = true;
      if (even_labels_) {
        std::fill(remove_parity.begin(), remove_parity.end(), 0);
        for (int pos : c)
          remove_parity[u[static_cast<std::size_t>(pos)]] ^= 1;
        candidate = remove_parity == total;
      }
      if (candidate) {
        Word rest;
        rest.reserve(static_cast<std::size_t>(n - k));
        std::size_t ci = 0;
        for (int i = 0; i < n; ++i) {
          if (ci < c.size() && c[ci] == i) {
            ++ci;
            continue;
          }
          rest.push_back(u[static_cast<std::size_t>(i)]);
        }
        if (eng_.reduce(rest).is_identity())
          return c;
      }
      // next combination
      int i = k - 1;
      while (i >= 0 && c[static_cast<std::size_t>(i)] == n - k + i)
        --i;
      if (i < 0)
        return std::nullopt;
      ++c[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < k; ++j)
        c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
    }
  }

  const WordEngine& eng_;
  bool even_labels_;
};

} // namespace coxlen
