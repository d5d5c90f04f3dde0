// coxlen: reflection length and boundedness certificates in Coxeter groups.
//
// Subcommands: classify, rl, srl-estimate, decide, conj-inverse,
// orientations, verify. Input systems are JSON files
// {"generators": [...], "m": [[...]]} with 0 encoding an infinite label;
// every command emits JSON (or --table for a human-readable summary).
//
// Exit codes: 0 success, 2 validation error, 3 oracle disagreement,
// 4 search budget or cap exceeded, 1 anything else.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "coxlen/coxlen.hpp"

namespace {

using namespace coxlen;

struct Options {
  std::string input;
  std::string word;
  bool oracle = false;
  bool table = false;
  int powers = 6;
  int conj_len = 8;
  int m_max = 4;
  int n_max = 5;
  std::size_t orbit_cap = 100000;
  double tolerance = 1e-8;
  std::string suite = "all";
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw ValidationError("cannot read input file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

WordEngine make_engine(const Options& opt) {
  CoxeterMatrix m = parse_coxeter_system(slurp(opt.input));
  EngineConfig cfg;
  cfg.orbit_cap = opt.orbit_cap;
  WordEngine eng(std::move(m), cfg);
  eng.set_deadline(Deadline::from_env());
  return eng;
}

void emit(const Options& opt, const Json& doc, const std::string& table_text) {
  if (opt.table)
    std::cout << table_text;
  else
    std::cout << doc.dump(2) << "\n";
}

int cmd_classify(const Options& opt) {
  CoxeterMatrix m = parse_coxeter_system(slurp(opt.input));
  Decomposition dec = decompose(m, opt.tolerance);
  std::ostringstream table;
  for (const auto& c : dec.components) {
    table << to_string(c.type) << ":";
    for (int v : c.vertices)
      table << " " << m.name(v);
    table << "\n";
  }
  emit(opt, decomposition_to_json(m, dec), table.str());
  return 0;
}

int cmd_rl(const Options& opt) {
  WordEngine eng = make_engine(opt);
  ReflectionLength rl(eng);
  GroupElement w = eng.parse_word(opt.word);
  RlCertificate cert = rl.rl(w);
  Json doc = rl_certificate_to_json(eng.matrix(), cert);
  doc["word"] = word_to_json(eng.matrix(), w);
  bool disagree = false;
  if (opt.oracle) {
    Json oracle;
    RlCertificate brute = rl.rl_bruteforce(w);
    oracle["bruteforce"] = brute.value;
    disagree = brute.value != cert.value;
    if (decompose(eng.matrix(), opt.tolerance).all_finite()) {
      GeometricRep rep(eng.matrix(), opt.tolerance);
      int carter = rep.carter_rl(w);
      oracle["fixed_space"] = carter;
      disagree = disagree || carter != cert.value;
    }
    oracle["agrees"] = !disagree;
    doc["oracle"] = std::move(oracle);
  }
  std::ostringstream table;
  table << "rl = " << cert.value << "\n";
  for (const auto& t : cert.factorization)
    table << "  reflection: " << eng.format(t) << "\n";
  emit(opt, doc, table.str());
  return disagree ? 3 : 0;
}

int cmd_srl_estimate(const Options& opt) {
  WordEngine eng = make_engine(opt);
  ReflectionLength rl(eng);
  GroupElement w = eng.parse_word(opt.word);
  SrlEstimate est = rl.srl_estimate(w, opt.powers);
  std::ostringstream table;
  for (auto [n, v] : est.samples)
    table << "rl(w^" << n << ") = " << v << "\n";
  table << "best srl upper bound: " << est.best_upper << "\n";
  emit(opt, srl_estimate_to_json(est), table.str());
  return 0;
}

int cmd_decide(const Options& opt) {
  WordEngine eng = make_engine(opt);
  ReflectionLength rl(eng);
  GroupElement w = eng.parse_word(opt.word);
  SearchBounds bounds{opt.conj_len, opt.m_max, opt.powers};
  BoundednessVerdict verdict = is_coxeter_word(w.word(), eng.matrix().rank())
                                   ? decide_theorem_b(eng, CoxeterWord{w.word()}, bounds)
                                   : rl.decide_bounded(w, bounds);
  Json doc = verdict_to_json(eng.matrix(), verdict);
  doc["word"] = word_to_json(eng.matrix(), w);
  std::ostringstream table;
  table << to_string(verdict.status) << "\n";
  emit(opt, doc, table.str());
  return 0;
}

int cmd_conj_inverse(const Options& opt) {
  WordEngine eng = make_engine(opt);
  const CoxeterMatrix& m = eng.matrix();
  GroupElement w = eng.parse_word(opt.word);
  CoxeterWord cw = CoxeterWord::of(w.word(), m.rank());
  auto path = conjugate_to_inverse(m, cw, eng.deadline());
  Json doc;
  doc["word"] = word_to_json(m, w);
  doc["conjugate_to_inverse"] = path.has_value();
  CoxeterGraph g = CoxeterGraph::of(m);
  AcyclicOrientation o = word_to_orientation(g, cw);
  doc["orientation"] = orientation_to_json(m, g, o);
  doc["reversal"] = orientation_to_json(m, g, reverse(o));
  if (path) {
    Json steps = Json::array();
    for (int v : *path)
      steps.push_back(m.name(v));
    doc["flip_path"] = std::move(steps);
  }
  std::ostringstream table;
  table << (path ? "conjugate to inverse (flip path found)" : "no flip path (not conjugate)")
        << "\n";
  emit(opt, doc, table.str());
  return 0;
}

int cmd_orientations(const Options& opt) {
  WordEngine eng = make_engine(opt);
  const CoxeterMatrix& m = eng.matrix();
  if (m.rank() > 8)
    throw BudgetExceeded("orientation enumeration is capped at rank 8");
  CoxeterGraph g = CoxeterGraph::of(m);
  Json doc;
  Json edges = Json::array();
  for (auto [u, v] : g.edges)
    edges.push_back(Json::array({m.name(u), m.name(v)}));
  doc["edges"] = std::move(edges);
  auto orientations = all_acyclic_orientations(g);
  doc["acyclic_orientations"] = orientations.size();
  auto classes = flip_class_partition(g, orientations, eng.deadline());
  int class_count = 0;
  for (auto& [o, id] : classes)
    class_count = std::max(class_count, id + 1);
  std::vector<Json> class_docs(static_cast<std::size_t>(class_count));
  std::vector<std::size_t> class_sizes(static_cast<std::size_t>(class_count), 0);
  for (auto& [o, id] : classes) {
    auto& jc = class_docs[static_cast<std::size_t>(id)];
    if (jc.is_null()) {
      jc["representative"] = orientation_to_json(m, g, o);
      if (g.is_single_cycle())
        jc["curl"] = curl(g, o);
    }
    ++class_sizes[static_cast<std::size_t>(id)];
  }
  Json jclasses = Json::array();
  for (int id = 0; id < class_count; ++id) {
    class_docs[static_cast<std::size_t>(id)]["size"] = class_sizes[static_cast<std::size_t>(id)];
    jclasses.push_back(class_docs[static_cast<std::size_t>(id)]);
  }
  doc["flip_classes"] = std::move(jclasses);
  if (!opt.word.empty()) {
    GroupElement w = eng.parse_word(opt.word);
    CoxeterWord cw = CoxeterWord::of(w.word(), m.rank());
    AcyclicOrientation o = word_to_orientation(g, cw);
    Json jw;
    jw["orientation"] = orientation_to_json(m, g, o);
    jw["flip_class"] = classes.at(o);
    jw["reversal_in_class"] = classes.at(o) == classes.at(reverse(o));
    doc["word"] = std::move(jw);
  }
  std::ostringstream table;
  table << orientations.size() << " acyclic orientations in " << class_count
        << " flip classes\n";
  emit(opt, doc, table.str());
  return 0;
}

int cmd_verify(const Options& opt) {
  Deadline deadline = Deadline::from_env();
  std::vector<SuiteReport> reports;
  auto want = [&](const char* name) { return opt.suite == "all" || opt.suite == name; };
  if (want("theorem-b"))
    reports.push_back(verify_theorem_b(opt.n_max, deadline));
  if (want("oracles"))
    reports.push_back(verify_oracles(deadline));
  if (want("eq1"))
    reports.push_back(verify_eq1(10, deadline));
  if (want("invariants"))
    reports.push_back(verify_invariants(520, 120, 20240901, deadline));
  if (want("curl"))
    reports.push_back(verify_curl(3, 8, 100, 77003, deadline));
  if (want("witnesses"))
    reports.push_back(verify_witnesses(50, 424243, deadline));
  if (reports.empty())
    throw ValidationError("unknown suite: " + opt.suite +
                          " (expected theorem-b, oracles, eq1, invariants, curl, witnesses, all)");
  Json doc = Json::array();
  bool all_passed = true;
  std::ostringstream table;
  for (const auto& r : reports) {
    doc.push_back(suite_report_to_json(r));
    all_passed = all_passed && r.passed();
    for (const auto& c : r.checks)
      table << (c.passed ? "PASS" : "FAIL") << "  [" << r.suite << "] " << c.name
            << (c.detail.empty() ? "" : "  (" + c.detail + ")") << "\n";
  }
  emit(opt, doc, table.str());
  return all_passed ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"reflection length and its stabilisation in Coxeter groups"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub, bool needs_input, bool needs_word) {
    auto* in = sub->add_option("--input", opt.input, "JSON file describing the Coxeter system");
    if (needs_input)
      in->required();
    if (needs_word)
      sub->add_option("--word", opt.word, "whitespace-separated generator names")->required();
    sub->add_flag("--table", opt.table, "human-readable output instead of JSON");
    sub->add_flag("--json", [](std::int64_t) {}, "JSON output (default)");
    sub->add_option("--cap", opt.orbit_cap, "braid orbit cap")->check(CLI::PositiveNumber);
    sub->add_option("--tol", opt.tolerance, "numeric tolerance override")
        ->check(CLI::Range(1e-300, 1e-4));
  };

  auto* classify = app.add_subcommand("classify", "decompose and classify a Coxeter system");
  add_common(classify, true, false);

  auto* rl = app.add_subcommand("rl", "reflection length with certificate");
  add_common(rl, true, true);
  rl->add_flag("--oracle", opt.oracle, "cross-check against the independent oracles");

  auto* srl = app.add_subcommand("srl-estimate", "upper bounds for stable reflection length");
  add_common(srl, true, true);
  srl->add_option("--powers", opt.powers, "number of powers to sample")
      ->check(CLI::PositiveNumber);

  auto* decide = app.add_subcommand("decide", "is rl bounded on powers of the element?");
  add_common(decide, true, true);
  decide->add_option("--conj-len", opt.conj_len, "conjugator length bound")
      ->check(CLI::PositiveNumber);
  decide->add_option("--m-max", opt.m_max, "largest power probed for achirality")
      ->check(CLI::PositiveNumber);
  decide->add_option("--powers", opt.powers, "power count recorded in the verdict bounds")
      ->check(CLI::PositiveNumber);

  auto* conj = app.add_subcommand("conj-inverse",
                                  "is the Coxeter element conjugate to its inverse?");
  add_common(conj, true, true);

  auto* orient = app.add_subcommand("orientations", "acyclic orientations and flip classes");
  add_common(orient, true, false);
  orient->add_option("--word", opt.word, "optional Coxeter word to locate");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", opt.suite,
                     "theorem-b | oracles | eq1 | invariants | curl | witnesses | all");
  verify->add_option("--n-max", opt.n_max, "graph size bound for the theorem-b suite")
      ->check(CLI::Range(1, 7));
  verify->add_flag("--table", opt.table, "human-readable output instead of JSON");
  verify->add_flag("--json", [](std::int64_t) {}, "JSON output (default)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (classify->parsed())
      return cmd_classify(opt);
    if (rl->parsed())
      return cmd_rl(opt);
    if (srl->parsed())
      return cmd_srl_estimate(opt);
    if (decide->parsed())
      return cmd_decide(opt);
    if (conj->parsed())
      return cmd_conj_inverse(opt);
    if (orient->parsed())
      return cmd_orientations(opt);
    if (verify->parsed())
      return cmd_verify(opt);
  } catch (const SchemaError& e) {
    std::cerr << "schema error: " << e.what() << "\n";
    return 2;
  } catch (const ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return 2;
  } catch (const BraidOrbitOverflow& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 4;
  } catch (const BallTooLarge& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 4;
  } catch (const SearchBudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 4;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 4;
  } catch (const NotFoundWithinBounds& e) {
    std::cerr << "bounds exhausted: " << e.what() << "\n";
    return 4;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
