#include "catch_amalgamated.hpp"

#include "coxlen/json_io.hpp"
#include "coxlen/reflection_length.hpp"

using namespace coxlen;

TEST_CASE("matrix round-trips through the documented schema") {
  CoxeterMatrix m = CoxeterMatrix::from_edges(3, {{0, 1, 3}, {1, 2, kInfinity}});
  Json doc = matrix_to_json(m);
  CoxeterMatrix back = parse_coxeter_system(doc.dump());
  CHECK(back == m);
}

TEST_CASE("words serialize as arrays of generator names") {
  CoxeterMatrix m = CoxeterMatrix::path({3});
  WordEngine eng(m);
  Json j = word_to_json(m, eng.from_letters({0, 1, 0}));
  CHECK(j.dump() == R"(["s1","s2","s1"])");
}

TEST_CASE("rl certificates carry value, factorization and source") {
  CoxeterMatrix m = CoxeterMatrix::path({3});
  WordEngine eng(m);
  ReflectionLength rl(eng);
  Json doc = rl_certificate_to_json(m, rl.rl(eng.from_letters({0, 1})));
  CHECK(doc["value"] == 2);
  CHECK(doc["source"] == "Cancellation");
  CHECK(doc["factorization"].size() == 2);
}

TEST_CASE("verdict serialization shapes") {
  CoxeterMatrix m = CoxeterMatrix::universal(3);
  WordEngine eng(m);
  BoundednessVerdict v = decide_theorem_b(eng, CoxeterWord{Word{0, 1, 2}});
  Json doc = verdict_to_json(m, v);
  CHECK(doc["status"] == "Unbounded");
  CHECK(doc["components"][0]["odd_cycle"].size() == 3);
  CHECK(doc["components"][0].contains("flip_class_size"));
  CHECK(doc["bounds"].contains("conjugator_length"));
}

TEST_CASE("orientation serialization lists directed edges by name") {
  CoxeterMatrix m = CoxeterMatrix::right_angled(3, {{0, 1}, {1, 2}});
  CoxeterGraph g = CoxeterGraph::of(m);
  AcyclicOrientation o = word_to_orientation(g, CoxeterWord{Word{0, 1, 2}});
  Json doc = orientation_to_json(m, g, o);
  CHECK(doc.dump() == R"([["s1","s2"],["s2","s3"]])");
}

TEST_CASE("identical inputs produce byte-identical serializations") {
  CoxeterMatrix m = CoxeterMatrix::right_angled(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  WordEngine eng(m);
  auto run = [&]() {
    BoundednessVerdict v = decide_theorem_b(eng, CoxeterWord{Word{0, 2, 1, 3}});
    return verdict_to_json(m, v).dump(2);
  };
  CHECK(run() == run());
}

TEST_CASE("suite reports serialize with per-check verdicts") {
  SuiteReport r{"demo", {}};
  r.add("first", true, "detail");
  r.add("second", false);
  Json doc = suite_report_to_json(r);
  CHECK(doc["passed"] == false);
  CHECK(doc["checks"].size() == 2);
  CHECK(doc["checks"][0]["detail"] == "detail");
}

TEST_CASE("srl estimate serialization") {
  CoxeterMatrix m = CoxeterMatrix::dihedral(kInfinity);
  WordEngine eng(m);
  ReflectionLength rl(eng);
  Json doc = srl_estimate_to_json(rl.srl_estimate(eng.from_letters({0, 1}), 4));
  CHECK(doc["samples"].size() == 4);
  CHECK(doc["best_upper"] == 0.5);
}
