#include <random>

#include "catch_amalgamated.hpp"

#include "coxlen/graph_enum.hpp"
#include "coxlen/orientations.hpp"
#include "coxlen/reflection_length.hpp"

using namespace coxlen;

namespace {

CoxeterMatrix path3_racg() { return CoxeterMatrix::right_angled(3, {{0, 1}, {1, 2}}); }

CoxeterMatrix c4_racg() {
  return CoxeterMatrix::right_angled(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
}

Word make_word(std::initializer_list<int> letters) {
  Word w;
  for (int l : letters)
    w.push_back(static_cast<Gen>(l));
  return w;
}

} // namespace

TEST_CASE("word_to_orientation on a path") {
  CoxeterGraph g = CoxeterGraph::of(path3_racg());
  AcyclicOrientation o = word_to_orientation(g, CoxeterWord{make_word({0, 1, 2})});
  CHECK(directed_edge(g, o, 0) == std::make_pair(0, 1));
  CHECK(directed_edge(g, o, 1) == std::make_pair(1, 2));

  AcyclicOrientation r = word_to_orientation(g, CoxeterWord{make_word({2, 1, 0})});
  CHECK(directed_edge(g, r, 0) == std::make_pair(1, 0));
  CHECK(directed_edge(g, r, 1) == std::make_pair(2, 1));
  CHECK(r == reverse(o));
}

TEST_CASE("edgeless graphs have the empty orientation") {
  CoxeterGraph g = CoxeterGraph::of(CoxeterMatrix::from_edges(3, {}));
  AcyclicOrientation o = word_to_orientation(g, CoxeterWord{make_word({1, 0, 2})});
  CHECK(o.direction.empty());
  CHECK(orientation_to_word(g, o).order == make_word({0, 1, 2}));
}

TEST_CASE("orientation_to_word inverts word_to_orientation up to commutation") {
  CoxeterGraph g = CoxeterGraph::of(path3_racg());
  AcyclicOrientation o = word_to_orientation(g, CoxeterWord{make_word({0, 1, 2})});
  CHECK(orientation_to_word(g, o).order == make_word({0, 1, 2}));

  // triangle oriented 0->1, 0->2, 1->2 has a unique topological order
  CoxeterGraph t = CoxeterGraph::of(CoxeterMatrix::universal(3));
  AcyclicOrientation to{std::vector<std::uint8_t>{0, 0, 0}};
  CHECK(orientation_to_word(t, to).order == make_word({0, 1, 2}));

  AcyclicOrientation cyclic{std::vector<std::uint8_t>{0, 1, 0}};
  CHECK_FALSE(is_acyclic(t, cyclic));
  CHECK_THROWS_AS(orientation_to_word(t, cyclic), CyclicInput);
}

TEST_CASE("word orientations are always acyclic") {
  std::mt19937 rng(7);
  CoxeterGraph g = CoxeterGraph::of(c4_racg());
  std::vector<int> order{0, 1, 2, 3};
  for (int it = 0; it < 24; ++it) {
    std::shuffle(order.begin(), order.end(), rng);
    Word w(order.begin(), order.end());
    CHECK(is_acyclic(g, word_to_orientation(g, CoxeterWord{w})));
  }
}

TEST_CASE("flip moves a source behind everything else") {
  CoxeterGraph g = CoxeterGraph::of(path3_racg());
  AcyclicOrientation o = word_to_orientation(g, CoxeterWord{make_word({0, 1, 2})});
  AcyclicOrientation f = flip(g, o, 0);
  CHECK(directed_edge(g, f, 0) == std::make_pair(1, 0));
  CHECK(directed_edge(g, f, 1) == std::make_pair(1, 2));
  CHECK_THROWS_AS(flip(g, o, 1), NotASource);
}

TEST_CASE("flipping an isolated vertex changes nothing") {
  CoxeterGraph g = CoxeterGraph::of(CoxeterMatrix::right_angled(3, {{0, 1}}));
  AcyclicOrientation o = word_to_orientation(g, CoxeterWord{make_word({0, 1, 2})});
  CHECK(flip(g, o, 2) == o);
}

TEST_CASE("flips realize conjugation by the flipped generator") {
  // all orientations of all connected graphs on <= 4 vertices, universal labels
  for (int n = 2; n <= 4; ++n)
    for (const SmallGraph& sg : connected_graphs_up_to_iso(n)) {
      CoxeterMatrix m = sg.as_right_angled_system();
      CoxeterGraph g = CoxeterGraph::of(m);
      WordEngine eng(m);
      for (const AcyclicOrientation& o : all_acyclic_orientations(g)) {
        GroupElement w = eng.reduce(orientation_to_word(g, o).order);
        for (int v = 0; v < g.n; ++v) {
          if (!is_source(g, o, v))
            continue;
          GroupElement s = eng.generator(v);
          GroupElement conj = eng.multiply(eng.multiply(s, w), s);
          GroupElement flipped = eng.reduce(orientation_to_word(g, flip(g, o, v)).order);
          CHECK(conj == flipped);
        }
      }
    }
}

TEST_CASE("flip classes on landmarks") {
  // single edge: both orientations in one class
  CoxeterGraph edge = CoxeterGraph::of(CoxeterMatrix::dihedral(kInfinity));
  AcyclicOrientation oe{std::vector<std::uint8_t>{0}};
  CHECK(flip_class(edge, oe).members.size() == 2);

  // tree: every orientation is flip-reachable
  CoxeterGraph p3 = CoxeterGraph::of(path3_racg());
  AcyclicOrientation op = word_to_orientation(p3, CoxeterWord{make_word({0, 1, 2})});
  CHECK(flip_class(p3, op).members.size() == all_acyclic_orientations(p3).size());

  // triangle: 6 acyclic orientations in two classes split by curl
  CoxeterGraph tri = CoxeterGraph::of(CoxeterMatrix::universal(3));
  auto tri_orients = all_acyclic_orientations(tri);
  REQUIRE(tri_orients.size() == 6);
  auto part = flip_class_partition(tri, tri_orients);
  int classes = 0;
  for (auto& [o, id] : part)
    classes = std::max(classes, id + 1);
  CHECK(classes == 2);
  for (auto& [o, id] : part)
    CHECK((curl(tri, o) == 1 || curl(tri, o) == -1));
}

TEST_CASE("flip classes partition the acyclic orientations") {
  CoxeterGraph g = CoxeterGraph::of(c4_racg());
  auto orients = all_acyclic_orientations(g);
  REQUIRE(orients.size() == 14);
  auto part = flip_class_partition(g, orients);
  CHECK(part.size() == orients.size());
  // classes are closed under flips and mutually disjoint by construction;
  // check representatives: the class of each member is the class computed fresh
  for (const auto& o : orients) {
    FlipClass c = flip_class(g, o);
    for (const auto& member : c.members)
      CHECK(part.at(member) == part.at(o));
    CHECK(c.representative == *c.members.begin());
  }
}

TEST_CASE("curl landmarks") {
  for (int n = 3; n <= 8; ++n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i)
      edges.emplace_back(i, i + 1);
    edges.emplace_back(0, n - 1);
    CoxeterGraph g = CoxeterGraph::of(CoxeterMatrix::right_angled(n, edges));
    std::vector<Gen> order;
    for (int i = 0; i < n; ++i)
      order.push_back(static_cast<Gen>(i));
    CoxeterWord along{Word(order.begin(), order.end())};
    CHECK(curl(g, along) == n - 2);
    CoxeterWord rev{Word(order.rbegin(), order.rend())};
    CHECK(curl(g, rev) == -(n - 2));
  }
}

TEST_CASE("curl is flip invariant on cycles") {
  CoxeterGraph g = CoxeterGraph::of(c4_racg());
  for (const AcyclicOrientation& o : all_acyclic_orientations(g))
    for (int v = 0; v < g.n; ++v)
      if (is_source(g, o, v))
        CHECK(curl(g, flip(g, o, v)) == curl(g, o));
}

TEST_CASE("conjugate_to_inverse landmarks") {
  // single edge: one flip suffices
  CoxeterMatrix a2 = CoxeterMatrix::path({3});
  auto p = conjugate_to_inverse(a2, CoxeterWord{make_word({0, 1})});
  REQUIRE(p.has_value());
  CHECK(p->size() == 1);

  // triangle: never conjugate to the inverse
  CHECK_FALSE(conjugate_to_inverse(CoxeterMatrix::universal(3),
                                   CoxeterWord{make_word({0, 1, 2})}));

  // bipartition order on the 4-cycle: path found
  CHECK(conjugate_to_inverse(c4_racg(), CoxeterWord{make_word({0, 2, 1, 3})}).has_value());
  // cycle order: not conjugate
  CHECK_FALSE(conjugate_to_inverse(c4_racg(), CoxeterWord{make_word({0, 1, 2, 3})}));
}

TEST_CASE("flip-path certificates verify in the group itself") {
  for (const CoxeterMatrix& m :
       {CoxeterMatrix::path({3}), path3_racg(), c4_racg(),
        CoxeterMatrix::from_edges(3, {{0, 1, 3}, {1, 2, 5}})}) {
    WordEngine eng(m);
    CoxeterGraph g = CoxeterGraph::of(m);
    std::vector<Gen> base;
    for (int i = 0; i < m.rank(); ++i)
      base.push_back(static_cast<Gen>(i));
    std::mt19937 rng(13);
    for (int it = 0; it < 12; ++it) {
      std::shuffle(base.begin(), base.end(), rng);
      CoxeterWord cw{Word(base.begin(), base.end())};
      auto path = conjugate_to_inverse(m, cw);
      if (!path)
        continue;
      GroupElement w = eng.reduce(cw.order);
      GroupElement conj = w;
      for (int v : *path) {
        GroupElement s = eng.generator(v);
        conj = eng.multiply(eng.multiply(s, conj), s);
      }
      CHECK(conj == eng.invert(w));
    }
  }
}

TEST_CASE("cover decisions agree with bounded conjugacy search in the group") {
  // non-right-angled systems where the group is small enough to search
  struct Case {
    CoxeterMatrix m;
    Word word;
  };
  const std::vector<Case> cases = {
      {CoxeterMatrix::path({3}), make_word({0, 1})},
      {CoxeterMatrix::path({4}), make_word({0, 1})},
      {CoxeterMatrix::path({3, 3}), make_word({0, 1, 2})},
      {CoxeterMatrix::path({3, 4}), make_word({1, 0, 2})},
  };
  for (const auto& c : cases) {
    WordEngine eng(c.m);
    GroupElement w = eng.reduce(c.word);
    auto path = conjugate_to_inverse(c.m, CoxeterWord{c.word});
    auto direct = eng.conjugacy_search(w, eng.invert(w), 6);
    CHECK(path.has_value() == direct.has_value());
  }
  // affine triangle: the flip decision says no; the bounded search agrees
  CoxeterMatrix affine = CoxeterMatrix::from_edges(3, {{0, 1, 3}, {1, 2, 3}, {0, 2, 3}});
  WordEngine eng(affine);
  GroupElement w = eng.from_letters({0, 1, 2});
  CHECK_FALSE(conjugate_to_inverse(affine, CoxeterWord{w.word()}).has_value());
  CHECK_FALSE(eng.conjugacy_search(w, eng.invert(w), 5).has_value());
}

TEST_CASE("decide_theorem_b on the universal triangle") {
  WordEngine eng(CoxeterMatrix::universal(3));
  BoundednessVerdict v = decide_theorem_b(eng, CoxeterWord{make_word({0, 1, 2})});
  CHECK(v.status == Boundedness::Unbounded);
  REQUIRE(v.components.size() == 1);
  CHECK(v.components[0].type == ComponentType::Indefinite);
  CHECK(v.components[0].odd_cycle.size() == 3);
  REQUIRE(v.components[0].curl_value.has_value());
  CHECK(*v.components[0].curl_value != 0);
  CHECK(*v.components[0].curl_reversed == -*v.components[0].curl_value);
}

TEST_CASE("decide_theorem_b on the right-angled 4-cycle") {
  WordEngine eng(c4_racg());
  BoundednessVerdict bounded = decide_theorem_b(eng, CoxeterWord{make_word({0, 2, 1, 3})});
  CHECK(bounded.status == Boundedness::Bounded);
  REQUIRE(bounded.pair.has_value());
  GroupElement w = eng.from_letters({0, 2, 1, 3});
  CHECK(eng.multiply(bounded.pair->a, bounded.pair->b) == w);
  CHECK(eng.multiply(bounded.pair->a, bounded.pair->a).is_identity());
  CHECK(eng.multiply(bounded.pair->b, bounded.pair->b).is_identity());

  BoundednessVerdict unbounded = decide_theorem_b(eng, CoxeterWord{make_word({0, 1, 2, 3})});
  CHECK(unbounded.status == Boundedness::Unbounded);
  REQUIRE(unbounded.components.size() == 1);
  CHECK(unbounded.components[0].odd_cycle.empty()); // bipartite, obstruction is the curl
  REQUIRE(unbounded.components[0].curl_value.has_value());
  CHECK(*unbounded.components[0].curl_value == 2);
  CHECK(*unbounded.components[0].curl_reversed == -2);
}

TEST_CASE("decide_theorem_b across mixed components") {
  // A2 x universal triangle: the indefinite part is an odd cycle, so unbounded
  CoxeterMatrix mixed = CoxeterMatrix::from_edges(
      5, {{0, 1, 3}, {2, 3, kInfinity}, {3, 4, kInfinity}, {2, 4, kInfinity}});
  WordEngine eng(mixed);
  BoundednessVerdict v = decide_theorem_b(eng, CoxeterWord{make_word({0, 2, 1, 3, 4})});
  CHECK(v.status == Boundedness::Unbounded);
  REQUIRE(v.components.size() == 2);
  CHECK(v.components[0].type == ComponentType::Finite);
  CHECK(v.components[0].verdict == Boundedness::Bounded);
  CHECK(v.components[1].verdict == Boundedness::Unbounded);

  // A2 x single-infinite-edge: everything bounded
  CoxeterMatrix tame = CoxeterMatrix::from_edges(4, {{0, 1, 3}, {2, 3, kInfinity}});
  WordEngine eng2(tame);
  BoundednessVerdict v2 = decide_theorem_b(eng2, CoxeterWord{make_word({0, 2, 1, 3})});
  CHECK(v2.status == Boundedness::Bounded);
  CHECK(v2.components[0].verdict == Boundedness::Bounded);
  CHECK(v2.components[1].verdict == Boundedness::Bounded);
}

TEST_CASE("coxeter word validation") {
  CHECK_THROWS_AS(CoxeterWord::of(make_word({0, 0, 1}), 3), ValidationError);
  CHECK_THROWS_AS(CoxeterWord::of(make_word({0, 1}), 3), ValidationError);
  CHECK(is_coxeter_word(make_word({2, 0, 1}), 3));
  CHECK_FALSE(is_coxeter_word(make_word({0, 1}), 3));
}

TEST_CASE("exhaustive_graph_check at small sizes") {
  GraphCheckReport r1 = exhaustive_graph_check(1);
  CHECK(r1.passed);
  CHECK(r1.graphs_checked == 1);

  GraphCheckReport r3 = exhaustive_graph_check(3);
  CHECK(r3.passed);
  CHECK(r3.graphs_checked == 4); // 1 + 1 + 2

  GraphCheckReport r4 = exhaustive_graph_check(4);
  CHECK(r4.passed);
  CHECK(r4.graphs_checked == 10); // 1 + 1 + 2 + 6
  // the 4-cycle exhibits both behaviours: some class self-inverse, not all
  bool found_c4 = false;
  for (const auto& rec : r4.records)
    if (rec.graph.n == 4 && rec.graph.edges.size() == 4 && rec.bipartite && !rec.tree) {
      CHECK(rec.exists_self_inverse_class);
      CHECK_FALSE(rec.all_self_inverse);
      found_c4 = true;
    }
  CHECK(found_c4);

  CHECK_THROWS_AS(exhaustive_graph_check(8), BudgetExceeded);
}

TEST_CASE("connected graph census up to isomorphism") {
  const int expected[] = {0, 1, 1, 2, 6, 21};
  for (int n = 1; n <= 5; ++n)
    CHECK(connected_graphs_up_to_iso(n).size() == static_cast<std::size_t>(expected[n]));
}
