#pragma once

#include <optional>
#include <string>
#include <vector>

#include "coxlen/classification.hpp"
#include "coxlen/errors.hpp"
#include "coxlen/word_engine.hpp"

namespace coxlen {

enum class RlSource { Cancellation, BruteForce, Carter };

inline const char* to_string(RlSource s) {
  switch (s) {
  case RlSource::Cancellation:
    return "Cancellation";
  case RlSource::BruteForce:
    return "BruteForce";
  case RlSource::Carter:
    return "Carter";
  }
  return "?";
}

/// A reflection length value together with an explicit factorization
/// witnessing it. make_rl_certificate re-multiplies the factorization and
/// checks the parity congruence before handing the certificate out.
struct RlCertificate {
  int value = 0;
  std::vector<GroupElement> factorization; // product equals the element
  RlSource source = RlSource::Cancellation;
};

inline RlCertificate make_rl_certificate(const WordEngine& eng, const GroupElement& w, int value,
                                         std::vector<GroupElement> factorization, RlSource source) {
  if (static_cast<int>(factorization.size()) != value)
    throw Error("internal: certificate length does not match its value");
  GroupElement prod;
  for (const GroupElement& t : factorization) {
    if (!eng.is_reflection(t) && !t.is_identity())
      throw Error("internal: certificate factor is not a reflection");
    if (t.is_identity())
      throw Error("internal: certificate factor is the identity");
    prod = eng.multiply(prod, t);
  }
  if (prod != w)
    throw Error("internal: certificate factorization does not multiply to the element");
  if ((value - w.length()) % 2 != 0)
    throw Error("internal: certificate violates the parity congruence");
  return RlCertificate{value, std::move(factorization), source};
}

/// Samples of rl(w^n) with the Fekete upper bounds rl(w^n)/n; every quotient
/// bounds the stable reflection length from above.
struct SrlEstimate {
  std::vector<std::pair<int, int>> samples; // (n, rl(w^n))
  std::vector<double> upper_bounds;         // rl(w^n)/n
  double best_upper = 0.0;
};

/// Two involutions whose product is the target element. Validated on
/// construction via make_involution_pair.
struct InvolutionPair {
  GroupElement a, b;
};

inline InvolutionPair make_involution_pair(const WordEngine& eng, const GroupElement& a,
                                           const GroupElement& b, const GroupElement& target) {
  if (!eng.multiply(a, a).is_identity() || !eng.multiply(b, b).is_identity())
    throw PreconditionFailed("involution pair: a factor does not square to the identity");
  if (eng.multiply(a, b) != target)
    throw PreconditionFailed("involution pair: product does not equal the target element");
  return InvolutionPair{a, b};
}

/// Witness that w^m is conjugate to w^-m (x w^m x^-1 = w^-m).
struct AchiralWitness {
  int power = 1;
  GroupElement conjugator;
};

/// Result of the bounded achirality probe. An absent witness means the
/// search was exhausted within its bounds, never that the element is chiral.
struct ChiralityReport {
  std::optional<AchiralWitness> witness;
  int m_max = 0;
  int conjugator_length = 0;

  bool achiral_witnessed() const { return witness.has_value(); }
};

struct SearchBounds {
  int conjugator_length = 8;
  int m_max = 4;
  int powers = 6;
};

enum class Boundedness { Bounded, Unbounded, Unknown };

inline const char* to_string(Boundedness b) {
  switch (b) {
  case Boundedness::Bounded:
    return "Bounded";
  case Boundedness::Unbounded:
    return "Unbounded";
  case Boundedness::Unknown:
    return "Unknown";
  }
  return "?";
}

/// Per-component evidence gathered by the Coxeter-element pipeline.
struct ComponentVerdict {
  std::vector<int> generators; // global indices
  ComponentType type = ComponentType::Finite;
  Boundedness verdict = Boundedness::Bounded;
  std::optional<InvolutionPair> pair;       // bounded: product of two involutions
  std::optional<std::vector<int>> flip_path; // bounded: conjugating generators, in order
  std::vector<int> odd_cycle;               // unbounded: non-bipartite witness
  std::optional<int> curl_value;            // unbounded on a cycle: curl of the word
  std::optional<int> curl_reversed;         //   and of the reversed word
  std::size_t flip_class_size = 0;          // unbounded: exhausted flip class
};

/// Bounded / Unbounded / Unknown with the certificate justifying it.
/// Bounded carries an involution pair when one was produced; Unbounded is
/// only ever issued through the Coxeter-element route and carries the
/// per-component evidence; Unknown records the search bounds used.
struct BoundednessVerdict {
  Boundedness status = Boundedness::Unknown;
  std::optional<InvolutionPair> pair;
  std::vector<ComponentVerdict> components;
  SearchBounds bounds;
};

} // namespace coxlen
