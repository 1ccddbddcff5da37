#include "residua/reports.hpp"

#include <sstream>

#include "residua/classify.hpp"
#include "residua/io.hpp"

namespace residua {

using nlohmann::json;

namespace {

json mask_names(const Poset& p, Mask m) {
  json a = json::array();
  for_each_bit(m, [&](int i) { a.push_back(p.elements[i]); });
  return a;
}

json witness_json(const Poset& p, const Witness& w) {
  json assignment = json::object();
  for (const auto& [var, idx] : w.assignment) assignment[var] = p.elements[idx];
  json sets = json::object();
  for (const auto& [label, m] : w.sets) sets[label] = mask_names(p, m);
  return json{{"assignment", assignment}, {"sets", sets}};
}

json verdict_json(const Poset& p, const Verdict& v) {
  json j{{"holds", v.holds}};
  if (v.witness) j["witness"] = witness_json(p, *v.witness);
  if (!v.reason.empty()) j["reason"] = v.reason;
  return j;
}

json gen_witness_json(const Poset& p, const GenWitness& w) {
  json assignment = json::object();
  for (const auto& [var, m] : w.assignment) assignment[var] = mask_names(p, m);
  json sets = json::object();
  for (const auto& [label, m] : w.sets) sets[label] = mask_names(p, m);
  return json{{"assignment", assignment}, {"sets", sets}};
}

json gen_verdict_json(const Poset& p, const GenVerdict& v, const char* method) {
  json j{{"holds", v.holds}, {"method", method}};
  if (v.witness) j["witness"] = gen_witness_json(p, *v.witness);
  return j;
}

}  // namespace

Report report_classify(const StructuredPoset& sp, int threads) {
  Report rep;
  ClassReport cls = classify_all(sp, threads);
  json checks = json::object();
  for (const auto& [name, v] : cls.entries) checks[name] = verdict_json(sp.poset, v);
  rep.body = json{{"command", "classify"}, {"input", sp.name}, {"checks", checks}};
  rep.ok = true;  // classification itself always succeeds
  return rep;
}

Report report_residuate(const StructuredPoset& sp, Scheme scheme, int threads) {
  const Poset& p = sp.poset;
  Report rep;
  OperatorTable table = build_operators(sp, scheme);
  Definition1Report def1 = verify_definition1(sp, table, threads);
  Verdict lemma = verify_divisibility_lemma(sp, table, threads);
  PropositionReport prop = verify_proposition(sp, scheme, threads);

  json body{{"command", "residuate"},
            {"input", sp.name},
            {"scheme", scheme_name(scheme)},
            {"definition1",
             {{"unit", verdict_json(p, def1.unit)},
              {"adjointness", verdict_json(p, def1.adjointness)},
              {"zero", verdict_json(p, def1.zero)},
              {"commutative", verdict_json(p, def1.commutative)},
              {"left_residuated", def1.left_residuated()},
              {"residuated", def1.residuated()}}},
            {"divisibility_lemma", verdict_json(p, lemma)},
            {"proposition",
             {{"hypothesis_met", prop.hypothesis_met},
              {"identity_r", verdict_json(p, prop.identity_r)},
              {"identity_m", verdict_json(p, prop.identity_m)}}}};

  rep.ok = def1.left_residuated() && lemma.holds;
  if (prop.hypothesis_met && !prop.holds()) rep.ok = false;

  // the lattice-level residuation applies only on complemented lattices
  bool lattice_applicable = false;
  try {
    lattice_applicable = is_lattice(p).holds && complementation(sp, threads).holds;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::UnboundedPoset) throw;
  }
  if (lattice_applicable) {
    LatticeResiduationTable lt = build_lattice_residuation(sp);
    Verdict adj = verify_left_adjointness_lattice(sp, lt, threads);
    body["lattice_adjointness"] = verdict_json(p, adj);
    // must hold exactly on the orthomodular ones; failing it is a finding,
    // not an error, unless the lattice is orthomodular
    if (is_orthomodular_lattice(sp, threads).holds && !adj.holds) rep.ok = false;
  }
  rep.body = std::move(body);
  return rep;
}

Report report_tables(const StructuredPoset& sp, Scheme scheme) {
  const Poset& p = sp.poset;
  OperatorTable t = build_operators(sp, scheme);
  json m = json::object(), r = json::object();
  for (int x = 0; x < p.size(); ++x) {
    json mrow = json::object(), rrow = json::object();
    for (int y = 0; y < p.size(); ++y) {
      mrow[p.elements[y]] = mask_names(p, t.m(x, y));
      rrow[p.elements[y]] = mask_names(p, t.r(x, y));
    }
    m[p.elements[x]] = mrow;
    r[p.elements[x]] = rrow;
  }
  Report rep;
  rep.body = json{{"command", "tables"},
                  {"input", sp.name},
                  {"scheme", scheme_name(scheme)},
                  {"elements", p.elements},
                  {"M", m},
                  {"R", r}};
  return rep;
}

Report report_generalized(const StructuredPoset& sp, const GeneralizedOptions& opt,
                          int threads) {
  const Poset& p = sp.poset;
  GeneralizedTables t = GeneralizedTables::build(sp, opt.pair_cap);
  Report rep;
  json body{{"command", "generalized"}, {"input", sp.name},
            {"direction", opt.direction}, {"method", opt.method}};

  Corollary2Report cor = verify_corollary2(sp, t, threads);
  body["cond11"] = gen_verdict_json(p, cor.cond11, "direct");
  body["cond12"] = gen_verdict_json(p, cor.cond12, "direct");
  body["corollary2"] = json{{"unit_singleton", verdict_json(p, cor.unit_singleton)},
                            {"zero_singleton", verdict_json(p, cor.zero_singleton)},
                            {"commutative", gen_verdict_json(p, cor.commutative, "direct")},
                            {"generalized_residuated", cor.residuated()}};
  rep.ok = cor.residuated();

  const bool want15 = opt.direction == "15" || opt.direction == "both";
  const bool want16 = opt.direction == "16" || opt.direction == "both";
  json adjointness = json::object();
  for (int dir : {15, 16}) {
    if ((dir == 15 && !want15) || (dir == 16 && !want16)) continue;
    json entry = json::object();
    if (opt.method == "direct" || opt.method == "both") {
      GenVerdict v = check_generalized_adjointness(t, dir, opt.triple_cap, threads);
      entry["direct"] = gen_verdict_json(p, v, "direct");
      rep.ok = rep.ok && v.holds;
    }
    if (opt.method == "reduction" || opt.method == "both") {
      const GenVerdict& v = dir == 15 ? cor.cond11 : cor.cond12;
      entry["reduction"] = gen_verdict_json(p, v, "reduction");
      rep.ok = rep.ok && v.holds;
    }
    adjointness[std::to_string(dir)] = entry;
  }
  body["adjointness"] = adjointness;
  rep.body = std::move(body);
  return rep;
}

Report report_enumerate(const EnumSpec& spec, const std::string& claim,
                        const std::vector<StructuredPoset>& fixtures) {
  Report rep;
  json body{{"command", "enumerate"}, {"size", spec.size}, {"require", spec.require}};
  if (claim.empty()) {
    body["count"] = count_structured(spec);
  } else {
    Claim c = Claim::parse(claim);
    body["claim"] = c.text();
    auto hit = find_counterexample(c, spec.size, fixtures);
    if (hit) {
      body["counterexample"] =
          json{{"name", hit->name}, {"poset", json::parse(poset_to_json(*hit))}};
      rep.ok = false;
    } else {
      body["counterexample"] = nullptr;
    }
  }
  rep.body = std::move(body);
  return rep;
}

namespace {

void render_value(const json& v, const std::string& indent, std::ostream& os);

void render_object(const json& obj, const std::string& indent, std::ostream& os) {
  for (const auto& [key, value] : obj.items()) {
    os << indent << key << ":";
    if (value.is_object() && !value.empty()) {
      os << "\n";
      render_object(value, indent + "  ", os);
    } else {
      os << " ";
      render_value(value, indent, os);
      os << "\n";
    }
  }
}

void render_value(const json& v, const std::string& indent, std::ostream& os) {
  if (v.is_array()) {
    os << "{";
    bool first = true;
    for (const auto& e : v) {
      if (!first) os << ", ";
      first = false;
      if (e.is_string())
        os << e.get<std::string>();
      else
        os << e.dump();
    }
    os << "}";
  } else if (v.is_string()) {
    os << v.get<std::string>();
  } else if (v.is_object() && v.empty()) {
    os << "{}";
  } else {
    os << v.dump();
  }
  (void)indent;
}

void render_tables(const json& body, std::ostream& os) {
  const auto& elements = body.at("elements");
  for (const char* op : {"M", "R"}) {
    const json& table = body.at(op);
    for (const auto& xj : elements) {
      const std::string x = xj.get<std::string>();
      for (const auto& yj : elements) {
        const std::string y = yj.get<std::string>();
        os << op << "(" << x << "," << y << ") = ";
        render_value(table.at(x).at(y), "", os);
        os << "\n";
      }
    }
  }
}

}  // namespace

std::string render_human(const json& body) {
  std::ostringstream os;
  if (body.value("command", "") == "tables") {
    os << "tables for " << body.value("input", "") << " (" << body.value("scheme", "")
       << " scheme)\n";
    render_tables(body, os);
  } else {
    render_object(body, "", os);
  }
  return os.str();
}

}  // namespace residua
