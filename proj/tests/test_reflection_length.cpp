#include <random>

#include "catch_amalgamated.hpp"

#include "coxlen/reflection_length.hpp"

using namespace coxlen;

namespace {

Word random_word(std::mt19937& rng, int rank, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<int> gen(0, rank - 1);
  Word w(static_cast<std::size_t>(len(rng)));
  for (auto& g : w)
    g = static_cast<Gen>(gen(rng));
  return w;
}

GroupElement product(const WordEngine& eng, const std::vector<GroupElement>& factors) {
  GroupElement acc;
  for (const auto& f : factors)
    acc = eng.multiply(acc, f);
  return acc;
}

} // namespace

TEST_CASE("rl of landmarks") {
  WordEngine a2(CoxeterMatrix::path({3}));
  ReflectionLength rl(a2);
  CHECK(rl.rl(a2.identity()).value == 0);
  RlCertificate gen = rl.rl(a2.from_letters({0}));
  CHECK(gen.value == 1);
  REQUIRE(gen.factorization.size() == 1);
  CHECK(gen.factorization[0].word() == Word{0});
  CHECK(rl.rl(a2.from_letters({0, 1})).value == 2);
}

TEST_CASE("rl certificate multiplies back to the element") {
  std::mt19937 rng(3);
  for (const CoxeterMatrix& m :
       {CoxeterMatrix::path({3}), CoxeterMatrix::path({4}), CoxeterMatrix::path({3, 3}),
        CoxeterMatrix::path({5}), CoxeterMatrix::universal(3),
        CoxeterMatrix::dihedral(kInfinity),
        CoxeterMatrix::right_angled(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}})}) {
    WordEngine eng(m);
    ReflectionLength rl(eng);
    for (int it = 0; it < 30; ++it) {
      GroupElement w = eng.reduce(random_word(rng, m.rank(), 6));
      RlCertificate c = rl.rl(w);
      CHECK(product(eng, c.factorization) == w);
      CHECK(static_cast<int>(c.factorization.size()) == c.value);
      CHECK((c.value - w.length()) % 2 == 0);
      for (const auto& t : c.factorization)
        CHECK(eng.is_reflection(t).has_value());
    }
  }
}

TEST_CASE("rl in B2 and the infinite dihedral group") {
  WordEngine b2(CoxeterMatrix::path({4}));
  ReflectionLength rlb(b2);
  CHECK(rlb.rl(b2.from_letters({0, 1, 0, 1})).value == 2);

  WordEngine inf(CoxeterMatrix::dihedral(kInfinity));
  ReflectionLength rli(inf);
  CHECK(rli.rl(inf.from_letters({0, 1, 0, 1, 0, 1})).value == 2);
}

TEST_CASE("rl_bruteforce matches on landmarks and reports its factorization") {
  WordEngine b2(CoxeterMatrix::path({4}));
  ReflectionLength rl(b2);
  RlCertificate longest = rl.rl_bruteforce(b2.from_letters({0, 1, 0, 1}));
  CHECK(longest.value == 2);
  CHECK(longest.source == RlSource::BruteForce);

  WordEngine inf(CoxeterMatrix::dihedral(kInfinity));
  ReflectionLength rli(inf);
  RlCertificate c = rli.rl_bruteforce(inf.from_letters({0, 1, 0, 1, 0, 1}));
  CHECK(c.value == 2);
  for (const auto& t : c.factorization) {
    auto wit = inf.is_reflection(t);
    REQUIRE(wit.has_value());
    CHECK(wit->size() % 2 == 1);
  }

  CHECK(rli.rl_bruteforce(inf.from_letters({0})).value == 1);
}

TEST_CASE("rl_bruteforce exhausts its bounds honestly") {
  WordEngine a2(CoxeterMatrix::path({3}));
  ReflectionLength rl(a2);
  CHECK_THROWS_AS(rl.rl_bruteforce(a2.from_letters({0, 1}), 3, 1), NotFoundWithinBounds);
}

TEST_CASE("rl power sequences") {
  WordEngine inf(CoxeterMatrix::dihedral(kInfinity));
  ReflectionLength rli(inf);
  auto seq = rli.rl_power_sequence(inf.from_letters({0, 1}), 4);
  REQUIRE(seq.size() == 4);
  for (auto [n, v] : seq)
    CHECK(v == 2);

  auto zeros = rli.rl_power_sequence(inf.identity(), 3);
  for (auto [n, v] : zeros)
    CHECK(v == 0);

  WordEngine uni(CoxeterMatrix::universal(3));
  ReflectionLength rlu(uni);
  auto tri = rlu.rl_power_sequence(uni.from_letters({0, 1, 2}), 3);
  CHECK(tri[0].second == 3);
  CHECK(tri[1].second == 4);
  CHECK(tri[2].second == 5);
}

TEST_CASE("srl estimates") {
  WordEngine uni(CoxeterMatrix::universal(3));
  ReflectionLength rlu(uni);
  SrlEstimate est = rlu.srl_estimate(uni.from_letters({0, 1, 2}), 5);
  CHECK(est.best_upper == Catch::Approx(7.0 / 5.0));
  CHECK(est.best_upper > 0);

  WordEngine inf(CoxeterMatrix::dihedral(kInfinity));
  ReflectionLength rli(inf);
  CHECK(rli.srl_estimate(inf.identity(), 4).best_upper == 0.0);
  CHECK(rli.srl_estimate(inf.from_letters({0, 1}), 8).best_upper == Catch::Approx(0.25));
}

TEST_CASE("involution pair search on spec landmarks") {
  WordEngine inf(CoxeterMatrix::dihedral(kInfinity));
  ReflectionLength rl(inf);

  auto pair = rl.involution_pair_search(inf.from_letters({0, 1}), 1);
  REQUIRE(pair.has_value());
  CHECK(pair->b.word() == Word{0});
  CHECK(pair->a.word() == Word{0, 1, 0});

  auto gen_pair = rl.involution_pair_search(inf.from_letters({0}), 2);
  REQUIRE(gen_pair.has_value());
  CHECK(gen_pair->a.word() == Word{0});
  CHECK(gen_pair->b.is_identity());

  // bipartition-ordered Coxeter word of the right-angled 4-cycle
  WordEngine c4(CoxeterMatrix::right_angled(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}));
  ReflectionLength rl4(c4);
  GroupElement w = c4.from_letters({0, 2, 1, 3});
  auto bip = rl4.involution_pair_search(w, 2);
  REQUIRE(bip.has_value());
  CHECK(c4.multiply(bip->a, bip->b) == w);
  CHECK(c4.multiply(bip->a, bip->a).is_identity());
  CHECK(c4.multiply(bip->b, bip->b).is_identity());
}

TEST_CASE("involution pair search can fail within bounds") {
  WordEngine uni(CoxeterMatrix::universal(3));
  ReflectionLength rl(uni);
  CHECK_FALSE(rl.involution_pair_search(uni.from_letters({0, 1, 2}), 3).has_value());
}

TEST_CASE("power bound from involutions") {
  WordEngine inf(CoxeterMatrix::dihedral(kInfinity));
  ReflectionLength rl(inf);
  InvolutionPair pair = make_involution_pair(inf, inf.from_letters({0, 1, 0}),
                                             inf.from_letters({0}), inf.from_letters({0, 1}));
  CHECK(rl.power_bound_from_involutions(pair, 5) == 2);
  CHECK(rl.power_bound_from_involutions(pair, 4) == 2);

  GroupElement invol = inf.from_letters({0});
  InvolutionPair trivial = make_involution_pair(inf, invol, inf.identity(), invol);
  CHECK(rl.power_bound_from_involutions(trivial, 4) == 0);
  CHECK(inf.power(invol, 4).is_identity());
}

TEST_CASE("eq1 bound holds for sampled powers") {
  WordEngine c4(CoxeterMatrix::right_angled(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}));
  ReflectionLength rl(c4);
  GroupElement a = c4.from_letters({0, 2});
  GroupElement b = c4.from_letters({1, 3});
  InvolutionPair pair = make_involution_pair(c4, a, b, c4.multiply(a, b));
  GroupElement p;
  GroupElement w = c4.multiply(a, b);
  for (int n = 1; n <= 6; ++n) {
    p = c4.multiply(p, w);
    CHECK(rl.rl(p).value <= rl.power_bound_from_involutions(pair, n));
  }
}

TEST_CASE("commutator witness on spec landmarks") {
  WordEngine inf(CoxeterMatrix::dihedral(kInfinity));
  ReflectionLength rl(inf);
  GroupElement w = inf.from_letters({0, 1});
  GroupElement x = inf.from_letters({0});
  auto [g, f] = rl.commutator_witness(x, w, 1, 1);
  CHECK(g == w);
  CHECK(f == x);

  GroupElement invol = inf.from_letters({0});
  auto [g2, f2] = rl.commutator_witness(inf.identity(), invol, 1, 1);
  CHECK(g2 == invol);
  CHECK(f2.is_identity());

  CHECK_THROWS_AS(rl.commutator_witness(inf.from_letters({0, 1}), w, 1, 1), PreconditionFailed);
}

TEST_CASE("commutator witnesses verified on random B2 triples") {
  WordEngine b2(CoxeterMatrix::path({4}));
  ReflectionLength rl(b2);
  int verified = 0;
  for (const auto& w : b2.enumerate_ball(4))
    for (const auto& x : b2.enumerate_ball(4))
      for (int m = 1; m <= 2; ++m) {
        GroupElement wm = b2.power(w, m);
        if (b2.conjugate(x, wm) != b2.invert(wm))
          continue;
        rl.commutator_witness(x, w, m, 2); // throws if the identity fails
        ++verified;
      }
  CHECK(verified > 50);
}

TEST_CASE("chirality probe") {
  WordEngine a2(CoxeterMatrix::path({3}));
  ReflectionLength rl(a2);
  ChiralityReport inv = rl.chirality_probe(a2.from_letters({0}), 2, 2);
  REQUIRE(inv.witness.has_value());
  CHECK(inv.witness->power == 1);
  CHECK(inv.witness->conjugator.is_identity());

  ChiralityReport st = rl.chirality_probe(a2.from_letters({0, 1}), 2, 2);
  REQUIRE(st.witness.has_value());
  CHECK(st.witness->power == 1);
  CHECK(st.witness->conjugator.word() == Word{0});

  WordEngine uni(CoxeterMatrix::universal(3));
  ReflectionLength rlu(uni);
  ChiralityReport unknown = rlu.chirality_probe(uni.from_letters({0, 1, 2}), 2, 3);
  CHECK_FALSE(unknown.witness.has_value());
  CHECK(unknown.m_max == 2);
  CHECK(unknown.conjugator_length == 3);
}

TEST_CASE("decide_bounded") {
  WordEngine a2(CoxeterMatrix::path({3}));
  ReflectionLength rl(a2);
  SearchBounds bounds{4, 2, 4};
  BoundednessVerdict invol = rl.decide_bounded(a2.from_letters({0}), bounds);
  CHECK(invol.status == Boundedness::Bounded);
  REQUIRE(invol.pair.has_value());

  WordEngine uni(CoxeterMatrix::universal(3));
  ReflectionLength rlu(uni);
  BoundednessVerdict coxeter = rlu.decide_bounded(uni.from_letters({0, 1, 2}), bounds);
  CHECK(coxeter.status == Boundedness::Unbounded);
  REQUIRE(coxeter.components.size() == 1);
  CHECK(coxeter.components[0].odd_cycle.size() == 3);

  BoundednessVerdict unknown =
      rlu.decide_bounded(uni.from_letters({0, 1, 2, 0, 1, 2}), SearchBounds{1, 1, 2});
  CHECK(unknown.status == Boundedness::Unknown);
}

TEST_CASE("rl is monotone under the cover quotient") {
  // W_r -> W sends a word over the right-angled cover's generators to the
  // same word in the original system; rl can only drop.
  std::mt19937 rng(51);
  for (const CoxeterMatrix& m :
       {CoxeterMatrix::path({3}), CoxeterMatrix::path({4}), CoxeterMatrix::path({3, 3})}) {
    WordEngine base(m);
    WordEngine cover(right_angled_cover(m));
    ReflectionLength rl_base(base), rl_cover(cover);
    for (int it = 0; it < 25; ++it) {
      Word w = random_word(rng, m.rank(), 6);
      CHECK(rl_base.rl(base.reduce(w)).value <= rl_cover.rl(cover.reduce(w)).value);
    }
  }
}

TEST_CASE("bounded powers patch together") {
  // If rl(w^(Nk)) <= B for k <= K then rl(w^n) <= B + max_{i<N} rl(w^i).
  WordEngine inf(CoxeterMatrix::dihedral(kInfinity));
  ReflectionLength rl(inf);
  GroupElement w = inf.from_letters({0, 1});
  const int N = 3, K = 3;
  int B = 0;
  for (int k = 1; k <= K; ++k)
    B = std::max(B, rl.rl(inf.power(w, N * k)).value);
  int low = 0;
  for (int i = 0; i < N; ++i)
    low = std::max(low, rl.rl(inf.power(w, i)).value);
  for (int n = 1; n <= N * K; ++n)
    CHECK(rl.rl(inf.power(w, n)).value <= B + low);
}

TEST_CASE("certificate factory rejects broken factorizations") {
  WordEngine a2(CoxeterMatrix::path({3}));
  GroupElement st = a2.from_letters({0, 1});
  CHECK_THROWS_AS(
      make_rl_certificate(a2, st, 1, {a2.from_letters({0})}, RlSource::Cancellation), Error);
}
