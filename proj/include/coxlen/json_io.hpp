#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "coxlen/certificates.hpp"
#include "coxlen/classification.hpp"
#include "coxlen/coxeter_matrix.hpp"
#include "coxlen/errors.hpp"
#include "coxlen/graph_enum.hpp"
#include "coxlen/orientations.hpp"
#include "coxlen/verify_suites.hpp"
#include "coxlen/word_engine.hpp"

namespace coxlen {

using Json = nlohmann::ordered_json;

/// Input schema: {"generators": ["s", "t", ...], "m": [[1,3],[3,1]]} with 0
/// encoding an infinite label. Shape problems raise SchemaError; semantic
/// problems raise ValidationError.
inline CoxeterMatrix parse_coxeter_system(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError(std::string("not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("generators") || !doc.contains("m"))
    throw SchemaError("expected an object with \"generators\" and \"m\"");
  if (!doc["generators"].is_array() || !doc["m"].is_array())
    throw SchemaError("\"generators\" must be an array of strings and \"m\" a matrix");
  std::vector<std::string> names;
  for (const auto& g : doc["generators"]) {
    if (!g.is_string())
      throw SchemaError("generator names must be strings");
    names.push_back(g.get<std::string>());
  }
  std::vector<std::vector<long long>> entries;
  for (const auto& row : doc["m"]) {
    if (!row.is_array())
      throw SchemaError("\"m\" must be a matrix");
    std::vector<long long> r;
    for (const auto& v : row) {
      if (!v.is_number_integer())
        throw SchemaError("matrix entries must be integers");
      r.push_back(v.get<long long>());
    }
    entries.push_back(std::move(r));
  }
  return CoxeterMatrix(std::move(entries), std::move(names));
}

inline Json word_to_json(const CoxeterMatrix& m, const Word& w) {
  Json arr = Json::array();
  for (Gen g : w)
    arr.push_back(m.name(g));
  return arr;
}

inline Json word_to_json(const CoxeterMatrix& m, const GroupElement& g) {
  return word_to_json(m, g.word());
}

inline Json generators_to_json(const CoxeterMatrix& m, const std::vector<int>& gens) {
  Json arr = Json::array();
  for (int g : gens)
    arr.push_back(m.name(g));
  return arr;
}

inline Json matrix_to_json(const CoxeterMatrix& m) {
  Json doc;
  doc["generators"] = Json::array();
  for (const auto& n : m.names())
    doc["generators"].push_back(n);
  Json rows = Json::array();
  for (int i = 0; i < m.rank(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.rank(); ++j)
      row.push_back(m.label(i, j));
    rows.push_back(std::move(row));
  }
  doc["m"] = std::move(rows);
  return doc;
}

inline Json decomposition_to_json(const CoxeterMatrix& m, const Decomposition& dec) {
  Json doc;
  Json comps = Json::array();
  for (const auto& c : dec.components) {
    Json jc;
    jc["generators"] = generators_to_json(m, c.vertices);
    jc["type"] = to_string(c.type);
    comps.push_back(std::move(jc));
  }
  doc["components"] = std::move(comps);
  return doc;
}

inline Json rl_certificate_to_json(const CoxeterMatrix& m, const RlCertificate& c) {
  Json doc;
  doc["value"] = c.value;
  Json fac = Json::array();
  for (const auto& t : c.factorization)
    fac.push_back(word_to_json(m, t));
  doc["factorization"] = std::move(fac);
  doc["source"] = to_string(c.source);
  return doc;
}

inline Json srl_estimate_to_json(const SrlEstimate& e) {
  Json doc;
  Json samples = Json::array();
  for (auto [n, v] : e.samples)
    samples.push_back(Json::array({n, v}));
  doc["samples"] = std::move(samples);
  doc["upper_bounds"] = e.upper_bounds;
  doc["best_upper"] = e.best_upper;
  return doc;
}

inline Json involution_pair_to_json(const CoxeterMatrix& m, const InvolutionPair& p) {
  Json doc;
  doc["a"] = word_to_json(m, p.a);
  doc["b"] = word_to_json(m, p.b);
  return doc;
}

inline Json orientation_to_json(const CoxeterMatrix& m, const CoxeterGraph& g,
                                const AcyclicOrientation& o) {
  Json arr = Json::array();
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    auto [from, to] = directed_edge(g, o, static_cast<int>(e));
    arr.push_back(Json::array({m.name(from), m.name(to)}));
  }
  return arr;
}

inline Json chirality_report_to_json(const CoxeterMatrix& m, const ChiralityReport& r) {
  Json doc;
  if (r.witness) {
    doc["status"] = "AchiralWitness";
    doc["power"] = r.witness->power;
    doc["conjugator"] = word_to_json(m, r.witness->conjugator);
  } else {
    doc["status"] = "ChiralityUnknown";
  }
  doc["bounds"] = {{"m_max", r.m_max}, {"conjugator_length", r.conjugator_length}};
  return doc;
}

inline Json verdict_to_json(const CoxeterMatrix& m, const BoundednessVerdict& v) {
  Json doc;
  doc["status"] = to_string(v.status);
  if (v.pair)
    doc["involution_pair"] = involution_pair_to_json(m, *v.pair);
  if (!v.components.empty()) {
    Json comps = Json::array();
    for (const auto& c : v.components) {
      Json jc;
      jc["generators"] = generators_to_json(m, c.generators);
      jc["type"] = to_string(c.type);
      jc["verdict"] = to_string(c.verdict);
      if (c.pair)
        jc["involution_pair"] = involution_pair_to_json(m, *c.pair);
      if (c.flip_path)
        jc["flip_path"] = generators_to_json(m, *c.flip_path);
      if (!c.odd_cycle.empty())
        jc["odd_cycle"] = generators_to_json(m, c.odd_cycle);
      if (c.curl_value)
        jc["curl"] = *c.curl_value;
      if (c.curl_reversed)
        jc["curl_reversed"] = *c.curl_reversed;
      if (c.verdict == Boundedness::Unbounded)
        jc["flip_class_size"] = c.flip_class_size;
      comps.push_back(std::move(jc));
    }
    doc["components"] = std::move(comps);
  }
  doc["bounds"] = {{"conjugator_length", v.bounds.conjugator_length},
                   {"m_max", v.bounds.m_max},
                   {"powers", v.bounds.powers}};
  return doc;
}

inline Json graph_check_report_to_json(const GraphCheckReport& r) {
  Json doc;
  doc["n_max"] = r.n_max;
  doc["graphs_checked"] = r.graphs_checked;
  doc["passed"] = r.passed;
  Json recs = Json::array();
  for (const auto& rec : r.records) {
    Json jr;
    jr["vertices"] = rec.graph.n;
    Json edges = Json::array();
    for (auto [u, v] : rec.graph.edges)
      edges.push_back(Json::array({u, v}));
    jr["edges"] = std::move(edges);
    jr["bipartite"] = rec.bipartite;
    jr["tree"] = rec.tree;
    jr["acyclic_orientations"] = rec.acyclic_orientations;
    jr["flip_classes"] = rec.flip_classes;
    jr["exists_self_inverse_class"] = rec.exists_self_inverse_class;
    jr["all_self_inverse"] = rec.all_self_inverse;
    jr["ok"] = rec.ok;
    recs.push_back(std::move(jr));
  }
  doc["graphs"] = std::move(recs);
  return doc;
}

inline Json suite_report_to_json(const SuiteReport& r) {
  Json doc;
  doc["suite"] = r.suite;
  doc["passed"] = r.passed();
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json jc;
    jc["name"] = c.name;
    jc["passed"] = c.passed;
    if (!c.detail.empty())
      jc["detail"] = c.detail;
    checks.push_back(std::move(jc));
  }
  doc["checks"] = std::move(checks);
  return doc;
}

} // namespace coxlen
