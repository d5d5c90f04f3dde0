#pragma once

#include <algorithm>
#include <cstddef>
#include <deque>
#include <optional>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include "coxlen/budget.hpp"
#include "coxlen/coxeter_matrix.hpp"
#include "coxlen/errors.hpp"

namespace coxlen {

struct WordHash {
  std::size_t operator()(const Word& w) const {
    std::size_t h = 1469598103934665603ull;
    for (Gen g : w) {
      h ^= g;
      h *= 1099511628211ull;
    }
    return h;
  }
};

struct EngineConfig {
  std::size_t orbit_cap = 100000;
  std::size_t ball_cap = 1000000;
};

/// An element of the group, held as its canonical word: the ShortLex-least
/// reduced word in the element's braid orbit. Only WordEngine constructs
/// nontrivial instances, so canonicity is an invariant.
class GroupElement {
public:
  GroupElement() = default; // the identity

  const Word& word() const { return word_; }
  int length() const { return static_cast<int>(word_.size()); }
  bool is_identity() const { return word_.empty(); }

  bool operator==(const GroupElement& o) const { return word_ == o.word_; }
  bool operator!=(const GroupElement& o) const { return word_ != o.word_; }
  bool operator<(const GroupElement& o) const {
    if (word_.size() != o.word_.size())
      return word_.size() < o.word_.size();
    return word_ < o.word_;
  }

private:
  friend class WordEngine;
  explicit GroupElement(Word w) : word_(std::move(w)) {}

  Word word_;
};

/// Exact arithmetic in a Coxeter group: reduction to canonical form through
/// braid-move rewriting, products, inverses, equality, reflections, and
/// bounded searches. All operations are pure; the engine holds only the
/// matrix, caps, and an optional wall-clock deadline.
class WordEngine {
public:
  explicit WordEngine(CoxeterMatrix m, EngineConfig cfg = {})
      : m_(std::move(m)), cfg_(cfg), right_angled_(m_.is_right_angled()) {
    if (cfg_.orbit_cap == 0 || cfg_.ball_cap == 0)
      throw ValidationError("caps must be positive");
  }

  const CoxeterMatrix& matrix() const { return m_; }
  const EngineConfig& config() const { return cfg_; }
  void set_deadline(Deadline d) { deadline_ = d; }
  const Deadline& deadline() const { return deadline_; }

  GroupElement identity() const { return GroupElement(); }

  /// Parse a whitespace-separated list of generator names.
  GroupElement parse_word(const std::string& text) const {
    Word w;
    std::size_t i = 0;
    while (i < text.size()) {
      while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
        ++i;
      std::size_t j = i;
      while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j])))
        ++j;
      if (j > i) {
        int idx = m_.index_of(text.substr(i, j - i));
        if (idx < 0)
          throw ValidationError("unknown generator: " + text.substr(i, j - i));
        w.push_back(static_cast<Gen>(idx));
      }
      i = j;
    }
    return reduce(w);
  }

  std::string format(const GroupElement& g) const {
    if (g.is_identity())
      return "1";
    std::string out;
    for (Gen s : g.word()) {
      if (!out.empty())
        out += ' ';
      out += m_.name(s);
    }
    return out;
  }

  GroupElement reduce(const Word& input) const {
    validate_word(input);
    Word w = right_angled_ ? trace_reduce(input) : orbit_reduce(input);
    return GroupElement(std::move(w));
  }

  GroupElement from_letters(std::initializer_list<int> letters) const {
    Word w;
    for (int l : letters)
      w.push_back(static_cast<Gen>(l));
    return reduce(w);
  }

  GroupElement multiply(const GroupElement& a, const GroupElement& b) const {
    Word w = a.word();
    w.insert(w.end(), b.word().begin(), b.word().end());
    return reduce(w);
  }

  /// Generators are involutions, so the inverse is the reversed word.
  GroupElement invert(const GroupElement& a) const {
    Word w(a.word().rbegin(), a.word().rend());
    return reduce(w);
  }

  bool equal(const GroupElement& a, const GroupElement& b) const { return a == b; }

  GroupElement power(const GroupElement& a, int n) const {
    GroupElement base = n < 0 ? invert(a) : a;
    GroupElement acc;
    for (int i = 0; i < std::abs(n); ++i)
      acc = multiply(acc, base);
    return acc;
  }

  /// x a x^-1.
  GroupElement conjugate(const GroupElement& x, const GroupElement& a) const {
    return multiply(multiply(x, a), invert(x));
  }

  GroupElement generator(int s) const {
    if (s < 0 || s >= m_.rank())
      throw ValidationError("generator index out of range");
    return GroupElement(Word{static_cast<Gen>(s)});
  }

  /// Occurrence parity of each generator (the image in (Z/2)^rank).
  std::vector<int> letter_parity(const Word& w) const {
    std::vector<int> p(m_.rank(), 0);
    for (Gen g : w)
      p[g] ^= 1;
    return p;
  }

  /// All words reachable from w by braid moves, as a sorted set. Every
  /// member has the same length. Throws once the orbit exceeds cap.
  std::set<Word> braid_orbit(const Word& w, std::size_t cap) const {
    validate_word(w);
    std::set<Word> seen;
    std::deque<Word> queue;
    seen.insert(w);
    queue.push_back(w);
    while (!queue.empty()) {
      deadline_.check("braid orbit enumeration");
      Word u = std::move(queue.front());
      queue.pop_front();
      for_each_braid_neighbor(u, [&](Word nb) {
        if (seen.insert(nb).second) {
          if (seen.size() > cap)
            throw BraidOrbitOverflow("braid orbit exceeds cap of " + std::to_string(cap));
          queue.push_back(std::move(nb));
        }
      });
    }
    return seen;
  }

  std::set<Word> braid_orbit(const Word& w) const { return braid_orbit(w, cfg_.orbit_cap); }

  /// Reflection test: returns an odd-length palindromic reduced word for g
  /// if its braid orbit contains one, otherwise nothing. Writing the witness
  /// as u s u^-1 exhibits g as a conjugate of the generator s.
  ///
  /// Works by peeling: a reflection of length >= 3 is shortened by 2 when
  /// conjugated by the first letter of its palindromic reduced word, and any
  /// shortening conjugation preserves being a reflection, so following the
  /// first shortening generator and recursing decides the question without
  /// materializing the braid orbit.
  std::optional<Word> is_reflection(const GroupElement& g) const {
    if (g.length() % 2 == 0)
      return std::nullopt;
    return reflection_witness(g.word());
  }

  /// Prefix reflections t_i = (s_1..s_{i-1}) s_i (s_{i-1}..s_1) of a reduced
  /// word: deleting letter i is the same as left-multiplying by t_i. For a
  /// reduced word these are the element's left inversions, all distinct.
  std::vector<GroupElement> prefix_reflections(const Word& w) const {
    std::vector<GroupElement> out;
    out.reserve(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
      Word t(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i) + 1);
      t.insert(t.end(), w.rend() - static_cast<std::ptrdiff_t>(i), w.rend());
      out.push_back(reduce(t));
    }
    return out;
  }

  /// All elements of length at most L, sorted by (length, word). BFS over
  /// right multiplication with canonical-form deduplication; enumerates the
  /// whole group when it has diameter <= L.
  std::vector<GroupElement> enumerate_ball(int L) const {
    std::unordered_set<Word, WordHash> seen;
    std::vector<Word> all;
    std::vector<Word> layer{Word{}};
    seen.insert(Word{});
    all.push_back(Word{});
    for (int len = 1; len <= L && !layer.empty(); ++len) {
      std::vector<Word> next;
      for (const Word& w : layer)
        for (int s = 0; s < m_.rank(); ++s) {
          deadline_.check("ball enumeration");
          Word c = w;
          c.push_back(static_cast<Gen>(s));
          Word r = reduce(c).word();
          if (static_cast<int>(r.size()) == len && seen.insert(r).second) {
            if (seen.size() > cfg_.ball_cap)
              throw BallTooLarge("ball exceeds element cap of " + std::to_string(cfg_.ball_cap));
            all.push_back(r);
            next.push_back(std::move(r));
          }
        }
      layer = std::move(next);
    }
    std::sort(all.begin(), all.end(), [](const Word& a, const Word& b) {
      if (a.size() != b.size())
        return a.size() < b.size();
      return a < b;
    });
    std::vector<GroupElement> out;
    out.reserve(all.size());
    for (auto& w : all)
      out.push_back(GroupElement(std::move(w)));
    return out;
  }

  /// Bounded semidecision: the ShortLex-least x with length <= L and
  /// x a x^-1 = b, if one exists within the bound. Absence is not a proof
  /// of non-conjugacy.
  std::optional<GroupElement> conjugacy_search(const GroupElement& a, const GroupElement& b,
                                               int L) const {
    for (const GroupElement& x : enumerate_ball(L)) {
      deadline_.check("conjugacy search");
      if (conjugate(x, a) == b)
        return x;
    }
    return std::nullopt;
  }

private:
  void validate_word(const Word& w) const {
    for (Gen g : w)
      if (g >= m_.rank())
        throw ValidationError("word contains a generator index out of range");
  }

  std::optional<Word> reflection_witness(const Word& w) const {
    if (w.size() == 1)
      return w;
    for (int s = 0; s < m_.rank(); ++s) {
      Word c;
      c.reserve(w.size() + 2);
      c.push_back(static_cast<Gen>(s));
      c.insert(c.end(), w.begin(), w.end());
      c.push_back(static_cast<Gen>(s));
      Word inner = right_angled_ ? trace_reduce(c) : orbit_reduce(c);
      if (inner.size() + 2 != w.size())
        continue;
      // inner is conjugate to w, so it is a reflection iff w is.
      if (auto sub = reflection_witness(inner)) {
        Word out;
        out.reserve(w.size());
        out.push_back(static_cast<Gen>(s));
        out.insert(out.end(), sub->begin(), sub->end());
        out.push_back(static_cast<Gen>(s));
        return out;
      }
      return std::nullopt;
    }
    return std::nullopt;
  }

  template <typename F> void for_each_braid_neighbor(const Word& w, F&& f) const {
    for (std::size_t p = 0; p + 1 < w.size(); ++p) {
      Gen a = w[p], b = w[p + 1];
      if (a == b)
        continue;
      unsigned m = m_.label(a, b);
      if (m == kInfinity || p + m > w.size())
        continue;
      bool alternating = true;
      for (unsigned i = 0; i < m; ++i)
        if (w[p + i] != (i % 2 == 0 ? a : b)) {
          alternating = false;
          break;
        }
      if (!alternating)
        continue;
      Word nb = w;
      for (unsigned i = 0; i < m; ++i)
        nb[p + i] = (i % 2 == 0 ? b : a);
      f(std::move(nb));
    }
  }

  static int find_adjacent_double(const Word& w) {
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
      if (w[i] == w[i + 1])
        return static_cast<int>(i);
    return -1;
  }

  static Word strip_adjacent_doubles(Word w) {
    Word out;
    for (Gen g : w) {
      if (!out.empty() && out.back() == g)
        out.pop_back();
      else
        out.push_back(g);
    }
    return out;
  }

  /// Tits' procedure: search the braid orbit for a doubled letter, delete
  /// the pair, restart; once the orbit is double-free the word is reduced
  /// and the ShortLex-least orbit member is the canonical form.
  Word orbit_reduce(Word w) const {
    w = strip_adjacent_doubles(std::move(w));
    for (;;) {
      std::unordered_set<Word, WordHash> seen;
      std::deque<Word> queue;
      seen.insert(w);
      queue.push_back(w);
      Word best = w;
      bool shrunk = false;
      while (!queue.empty()) {
        deadline_.check("word reduction");
        Word u = std::move(queue.front());
        queue.pop_front();
        int dp = find_adjacent_double(u);
        if (dp >= 0) {
          u.erase(u.begin() + dp, u.begin() + dp + 2);
          w = strip_adjacent_doubles(std::move(u));
          shrunk = true;
          break;
        }
        if (u < best)
          best = u;
        for_each_braid_neighbor(u, [&](Word nb) {
          if (seen.insert(nb).second) {
            if (seen.size() > cfg_.orbit_cap)
              throw BraidOrbitOverflow("braid orbit exceeds cap of " +
                                       std::to_string(cfg_.orbit_cap));
            queue.push_back(std::move(nb));
          }
        });
      }
      if (!shrunk)
        return best;
    }
  }

  /// Right-angled fast path. The braid orbit is the commutation class, so a
  /// word reduces exactly when no two equal letters are separated only by
  /// letters commuting with them, and the canonical form is the greedy
  /// lexicographically least linearization. Produces the same canonical
  /// word as orbit_reduce without materializing the class.
  Word trace_reduce(Word w) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i < w.size() && !changed; ++i) {
        for (std::size_t j = i + 1; j < w.size(); ++j) {
          if (w[j] == w[i]) {
            w.erase(w.begin() + static_cast<std::ptrdiff_t>(j));
            w.erase(w.begin() + static_cast<std::ptrdiff_t>(i));
            changed = true;
            break;
          }
          if (!m_.commutes(w[j], w[i]))
            break;
        }
      }
    }
    Word out;
    out.reserve(w.size());
    std::vector<char> used(w.size(), 0);
    for (std::size_t step = 0; step < w.size(); ++step) {
      int best = -1;
      for (std::size_t p = 0; p < w.size(); ++p) {
        if (used[p])
          continue;
        bool available = true;
        for (std::size_t q = 0; q < p; ++q)
          if (!used[q] && !m_.commutes(w[q], w[p])) {
            available = false;
            break;
          }
        if (available && (best < 0 || w[p] < w[static_cast<std::size_t>(best)]))
          best = static_cast<int>(p);
      }
      out.push_back(w[static_cast<std::size_t>(best)]);
      used[static_cast<std::size_t>(best)] = 1;
    }
    return out;
  }

  CoxeterMatrix m_;
  EngineConfig cfg_;
  Deadline deadline_;
  bool right_angled_;
};

} // namespace coxlen
