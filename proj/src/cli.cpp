#include "coxkl/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <random>

#include "coxkl/braid_verify.hpp"
#include "coxkl/canonical.hpp"
#include "coxkl/error.hpp"
#include "coxkl/induced.hpp"
#include "coxkl/typeb.hpp"

namespace coxkl {

namespace {

using Json = nlohmann::ordered_json;

struct Common {
  std::string format = "text";
  std::string type;
  std::string matrix;
  std::string order;
  std::optional<int> k;
};

Json parse_json(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw InvalidInput("malformed " + what + " JSON: " + e.what());
  }
}

int get_int(const Json& j, const std::string& what) {
  if (!j.is_number_integer()) throw InvalidInput(what + " must be an integer");
  return j.get<int>();
}

// 1-based letters in, 0-based word out.
Word parse_word(const Json& j, int rank) {
  if (!j.is_array()) throw InvalidInput("a word must be an array of generator indices");
  Word w;
  for (const auto& x : j) {
    const int s = get_int(x, "generator index");
    if (s < 1 || s > rank)
      throw InvalidInput("generator index " + std::to_string(s) + " out of range 1.." + std::to_string(rank));
    w.push_back(s - 1);
  }
  return w;
}

Json word_json(const Word& w) {
  Json a = Json::array();
  for (int s : w) a.push_back(s + 1);
  return a;
}

Json words_json(const std::vector<Word>& ws) {
  Json a = Json::array();
  for (const auto& w : ws) a.push_back(word_json(w));
  return a;
}

Json matrix_json(const IntMatrix& m) {
  Json a = Json::array();
  for (const auto& row : m) a.push_back(row);
  return a;
}

SystemPtr make_system(const Common& c) {
  SystemOptions opts;
  if (!c.order.empty()) {
    const Json j = parse_json(c.order, "generator order");
    if (!j.is_array()) throw InvalidInput("generator order must be an array");
    for (const auto& x : j) opts.generator_order.push_back(get_int(x, "generator index") - 1);
  }
  if (!c.matrix.empty()) {
    if (!c.type.empty()) throw InvalidInput("give either --type or --matrix, not both");
    const Json j = parse_json(c.matrix, "Coxeter matrix");
    if (!j.is_array()) throw InvalidInput("Coxeter matrix must be an array of rows");
    IntMatrix m;
    for (const auto& row : j) {
      if (!row.is_array()) throw InvalidInput("Coxeter matrix must be an array of rows");
      std::vector<int> r;
      for (const auto& x : row) r.push_back(get_int(x, "Coxeter matrix entry"));
      m.push_back(std::move(r));
    }
    return CoxeterSystem::from_coxeter_matrix(m, opts);
  }
  if (c.type.empty()) throw InvalidInput("--type or --matrix is required");
  return CoxeterSystem::from_type(c.type, opts);
}

ParamSet make_params(const CoxeterSystem& sys, const std::optional<int>& k) {
  return k ? ParamSet::specialized(sys, *k) : ParamSet::generic(sys);
}

std::string params_label(const std::optional<int>& k) {
  return k ? "k=" + std::to_string(*k) : "generic";
}

SubgroupPtr parse_subgroup(const SystemPtr& sys, const std::string& text) {
  const Json j = parse_json(text, "subgroup");
  if (!j.is_object() || !j.contains("generators") || !j["generators"].is_array())
    throw InvalidInput("subgroup JSON needs a \"generators\" array of words");
  for (const auto& [key, v] : j.items())
    if (key != "generators") throw InvalidInput("unknown subgroup field '" + key + "'");
  std::vector<Word> gens;
  for (const auto& w : j["generators"]) gens.push_back(parse_word(w, sys->rank()));
  return ReflectionSubgroup::from_reflections(sys, gens);
}

WeightWord parse_weight(const std::string& text) {
  const Json j = parse_json(text, "weight word");
  if (!j.is_object()) throw InvalidInput("weight word JSON must be an object");
  for (const char* key : {"r", "m", "d", "f"})
    if (!j.contains(key)) throw InvalidInput(std::string("weight word JSON lacks \"") + key + "\"");
  for (const auto& [key, v] : j.items())
    if (key != "r" && key != "m" && key != "d" && key != "f")
      throw InvalidInput("unknown weight word field '" + key + "'");
  const int r = get_int(j["r"], "r"), m = get_int(j["m"], "m"), d = get_int(j["d"], "d");
  if (!j["f"].is_array()) throw InvalidInput("\"f\" must be an array of numbers");
  std::vector<double> values;
  for (const auto& x : j["f"]) {
    if (!x.is_number()) throw InvalidInput("\"f\" must be an array of numbers");
    values.push_back(x.get<double>());
  }
  if (static_cast<int>(values.size()) != d) throw InvalidInput("\"f\" has length different from d");
  return WeightWord::from_values(IndexSet(r, m), values);
}

Json weight_json(const WeightWord& f) {
  Json vals = Json::array();
  for (int v : f.entries()) {
    if (v % 2 == 0) {
      vals.push_back(v / 2);
    } else {
      vals.push_back(v / 2.0);
    }
  }
  return Json{{"r", f.index_set().r()}, {"m", f.index_set().m()}, {"d", f.d()}, {"f", vals}};
}

std::vector<int> parse_chain(const std::string& text, const CoxeterSystem& sys, int d) {
  std::vector<int> chain;
  if (text.empty()) {
    for (int i = 0; i < d; ++i) chain.push_back(i);
    return chain;
  }
  for (int s : parse_word(parse_json(text, "chain"), sys.rank())) chain.push_back(s);
  return chain;
}

std::string label_of(const ElementTable& t, Index w) { return word_label(t.word(w), t.system().rank()); }

void emit(std::ostream& out, const Common& c, const Json& j, const std::vector<std::string>& text) {
  if (c.format == "json") {
    out << j.dump(2) << '\n';
  } else {
    for (const auto& line : text) out << line << '\n';
  }
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

Json relations_json(const RelationReport& r, const std::vector<std::string>& names) {
  Json fails = Json::array();
  for (const auto& f : r.failures) {
    Json gens = Json::array({f.s + 1});
    if (f.relation == "braid") gens.push_back(f.t + 1);
    fails.push_back(Json{{"relation", f.relation},
                         {"generators", gens},
                         {"witness", names.at(f.witness)},
                         {"differing", f.differing},
                         {"lhs", render_vector(f.lhs, names)},
                         {"rhs", render_vector(f.rhs, names)}});
  }
  return Json{{"quadratic_checked", r.quadratic_checked},
              {"braid_checked", r.braid_checked},
              {"failures", fails}};
}

std::vector<std::string> relations_text(const RelationReport& r, const std::vector<std::string>& names) {
  std::vector<std::string> lines;
  lines.push_back("relations: " + std::to_string(r.quadratic_checked) + " quadratic, " +
                  std::to_string(r.braid_checked) + " braid checked, " +
                  std::to_string(r.failures.size()) + " failing");
  for (const auto& f : r.failures) {
    std::string gens = std::to_string(f.s + 1);
    if (f.relation == "braid") gens += "," + std::to_string(f.t + 1);
    lines.push_back("  " + f.relation + "(" + gens + ") fails on " + std::to_string(f.differing) +
                    " basis vectors; first at " + names.at(f.witness));
    lines.push_back("    lhs: " + render_vector(f.lhs, names));
    lines.push_back("    rhs: " + render_vector(f.rhs, names));
  }
  return lines;
}

// ---------------------------------------------------------------------------

int cmd_system(const Common& c, std::ostream& out) {
  auto sys = make_system(c);
  const ElementTable& t = sys->element_table();
  Json params = Json::array();
  for (int s = 0; s < sys->rank(); ++s) params.push_back(sys->param_of_generator(s));
  Json order = Json::array();
  for (int s : sys->generator_order()) order.push_back(s + 1);
  const Json j{{"type", sys->label()},
               {"rank", sys->rank()},
               {"order", t.size()},
               {"generator_order", order},
               {"coxeter_matrix", matrix_json(sys->coxeter_matrix())},
               {"cartan_matrix", matrix_json(sys->cartan_matrix())},
               {"parameters", params},
               {"positive_roots", sys->positive_roots().size()},
               {"longest_element", word_json(t.word(t.longest()))}};
  emit(out, c, j,
       {"type " + sys->label() + ", rank " + std::to_string(sys->rank()),
        "|W| = " + std::to_string(t.size()) + ", " + std::to_string(sys->positive_roots().size()) +
            " positive roots",
        "longest element " + label_of(t, t.longest())});
  return kExitOk;
}

int cmd_subgroup(const Common& c, const std::string& sub, std::ostream& out) {
  auto sys = make_system(c);
  auto f = parse_subgroup(sys, sub);
  std::vector<Word> gens;
  for (const auto& g : f->canonical_generators()) gens.push_back(g.word());
  std::vector<Word> minimal;
  for (Index w : f->generators_by_minimality()) minimal.push_back(sys->element_table().word(w));
  std::sort(minimal.begin(), minimal.end());
  std::vector<Word> sorted_gens = gens;
  std::sort(sorted_gens.begin(), sorted_gens.end());
  const bool agree = minimal == sorted_gens;
  const Json j{{"type", sys->label()},
               {"subgroup", Json{{"generators", words_json(gens)}}},
               {"order", f->order()},
               {"rank", f->rank()},
               {"reflections", f->positive_roots().size()},
               {"coxeter_matrix", matrix_json(f->coxeter_matrix())},
               {"standard_parabolic", f->is_standard_parabolic()},
               {"minimality_check", agree}};
  std::string g;
  for (const auto& w : gens) g += (g.empty() ? "" : ", ") + ("s" + word_label(w, sys->rank()));
  emit(out, c, j,
       {"canonical generators: " + g, "|W_f| = " + std::to_string(f->order()) + ", " +
                                          std::to_string(f->positive_roots().size()) + " reflections",
        "standard parabolic: " + yes_no(f->is_standard_parabolic())});
  return agree ? kExitOk : kExitVerificationFailure;
}

int cmd_cosets(const Common& c, const std::string& sub, std::ostream& out) {
  auto sys = make_system(c);
  auto f = parse_subgroup(sys, sub);
  const CosetSystem cs(f);
  const ElementTable& t = sys->element_table();
  std::vector<Word> reps;
  Json labels = Json::array();
  for (Index w : cs.reps()) {
    reps.push_back(t.word(w));
    labels.push_back(label_of(t, w));
  }
  std::vector<Word> gens;
  for (const auto& g : f->canonical_generators()) gens.push_back(g.word());
  const Json j{{"type", sys->label()},
               {"subgroup", Json{{"generators", words_json(gens)}}},
               {"count", cs.size()},
               {"reps", words_json(reps)},
               {"rep_labels", labels}};
  std::vector<std::string> text{"|^fW| = " + std::to_string(cs.size())};
  for (Index w : cs.reps()) text.push_back("  " + (t.word(w).empty() ? std::string("e") : label_of(t, w)));
  emit(out, c, j, text);
  return kExitOk;
}

int cmd_product(const Common& c, const std::string& inner, const std::string& middle, std::ostream& out) {
  auto sys = make_system(c);
  auto g = parse_subgroup(sys, inner);
  auto f = parse_subgroup(sys, middle);
  if (!f->contains_subgroup(*g)) throw InvalidInput("inner subgroup is not contained in the middle subgroup");
  const ProductCheck pc = check_product_decomposition(g, f);
  // Length additivity is only expected for a standard parabolic middle subgroup.
  const bool ok = pc.bijective() && (pc.length_additive || !f->is_standard_parabolic());
  const Json j{{"type", sys->label()},
               {"middle_standard_parabolic", f->is_standard_parabolic()},
               {"inner_in_middle", pc.inner_in_middle},
               {"middle_reps", pc.middle_reps},
               {"inner_reps", pc.inner_reps},
               {"well_defined", pc.well_defined},
               {"injective", pc.injective},
               {"surjective", pc.surjective},
               {"length_additive", pc.length_additive},
               {"bijective", pc.bijective()}};
  emit(out, c, j,
       {std::to_string(pc.inner_in_middle) + " x " + std::to_string(pc.middle_reps) + " -> " +
            std::to_string(pc.inner_reps),
        "bijective: " + yes_no(pc.bijective()) + ", length additive: " + yes_no(pc.length_additive)});
  return ok ? kExitOk : kExitVerificationFailure;
}

int cmd_typeb(const Common& c, const std::string& ftext, unsigned seed, std::ostream& out) {
  const WeightWord f = parse_weight(ftext);
  const IndexSet& set = f.index_set();
  Json values = Json::array();
  for (int v : set.values()) values.push_back(format_half(v));
  Json j{{"f", weight_json(f)},
         {"index_set", Json{{"r", set.r()}, {"m", set.m()}, {"values", values}}},
         {"antidominant", f.is_antidominant()}};
  std::vector<std::string> text{"f = " + f.to_string() + (f.is_antidominant() ? " (antidominant)" : "")};
  bool ok = true;

  const TensorSpace space(set, f.d(), type_b_params(f.d()));
  if (space.dim() <= 729) {
    const RelationReport rep = check_relations(space.module());
    ok = ok && rep.ok();
    j["tensor_space"] = Json{{"dim", space.dim()}, {"relations_ok", rep.ok()}};
    text.push_back("tensor space: dim " + std::to_string(space.dim()) + ", relations " +
                   (rep.ok() ? "hold" : "FAIL"));
  }
  if (!f.is_antidominant()) {
    emit(out, c, j, text);
    return ok ? kExitOk : kExitVerificationFailure;
  }

  const OrbitModule orbit(f, type_b_params(f.d()));
  const HeckeAlgebra& alg = orbit.algebra();
  bool compatible = true;
  for (int i = 0; i < orbit.dim(); ++i)
    for (Index w = 0; w < alg.table().size(); ++w) {
      const SparseVec x = unit_vector(i, alg.params().one());
      if (orbit.psi().apply(orbit.module().act_hecke(x, alg, alg.basis(w))) !=
          orbit.module().act_hecke(orbit.psi().apply(x), alg, alg.bar_basis(w)))
        compatible = false;
    }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff(-3, 3), expo(-2, 2);
  for (int trial = 0; trial < 8; ++trial) {
    SparseVec x;
    HeckeElement h;
    for (int k = 0; k < 2; ++k) {
      const int e[2] = {expo(rng), expo(rng)};
      add_term(x, std::uniform_int_distribution<int>(0, orbit.dim() - 1)(rng),
               LaurentPoly::monomial(alg.params().alphabet, e, coeff(rng)));
      h.add(std::uniform_int_distribution<Index>(0, alg.table().size() - 1)(rng),
            LaurentPoly::monomial(alg.params().alphabet, e, coeff(rng)));
    }
    if (orbit.psi().apply(orbit.module().act_hecke(x, alg, h)) !=
        orbit.module().act_hecke(orbit.psi().apply(x), alg, alg.bar(h)))
      compatible = false;
  }
  const ThreeStepInduction ind = three_step_induction(orbit);
  const bool rel = check_relations(orbit.module()).ok();
  ok = ok && orbit.stabilizer_matches() && orbit.tables_agree() && rel && orbit.psi().is_involution() &&
       compatible && ind.isomorphic() && ind.extension_ok;

  std::vector<Word> seeds = orbit.stabilizer_seeds();
  Json basis = Json::array();
  for (const auto& w : orbit.basis_words()) basis.push_back(w.to_string());
  j["orbit"] = Json{{"stabilizer", Json{{"generators", words_json(seeds)}, {"order", orbit.stabilizer()->order()}}},
                    {"dim", orbit.dim()},
                    {"basis", basis},
                    {"stabilizer_matches", orbit.stabilizer_matches()},
                    {"tables_agree", orbit.tables_agree()},
                    {"relations_ok", rel},
                    {"psi_involution", orbit.psi().is_involution()},
                    {"psi_compatible", compatible}};
  j["three_step"] = Json{{"d_reps", ind.d_reps.size()},
                         {"w_reps", ind.w_reps.size()},
                         {"extension_ok", ind.extension_ok},
                         {"bijective", ind.bijective},
                         {"intertwines", ind.intertwines}};
  j["verdict"] = ok ? "pass" : "fail";
  text.push_back("orbit module: dim " + std::to_string(orbit.dim()) + ", |W_f| = " +
                 std::to_string(orbit.stabilizer()->order()));
  text.push_back("tensor and three-case tables agree: " + yes_no(orbit.tables_agree()));
  text.push_back("psi involution: " + yes_no(orbit.psi().is_involution()) +
                 ", compatible with bar: " + yes_no(compatible));
  text.push_back("3-step induction: " + std::to_string(ind.d_reps.size()) + " x " +
                 std::to_string(ind.w_reps.size()) + ", isomorphic: " + yes_no(ind.isomorphic()));
  emit(out, c, j, text);
  return ok ? kExitOk : kExitVerificationFailure;
}

int cmd_induct(const Common& c, const std::string& ftext, const std::string& chain_text, std::ostream& out) {
  auto sys = make_system(c);
  const WeightWord f = parse_weight(ftext);
  const std::vector<int> chain = parse_chain(chain_text, *sys, f.d());
  const QuasiParabolicModule qm(sys, chain, f, make_params(*sys, c.k));
  const bool rel = check_relations(qm.module()).ok();
  bool compatible = true;
  const HeckeAlgebra& alg = qm.algebra();
  for (int i = 0; i < qm.dim(); ++i)
    for (int s = 0; s < sys->rank(); ++s) {
      const SparseVec x = unit_vector(i, qm.params().one());
      if (qm.bar().apply(qm.module().act(x, s)) !=
          qm.module().act_hecke(qm.bar().apply(x), alg, alg.bar(alg.generator(s))))
        compatible = false;
    }
  const bool ok = rel && qm.factorization_ok() && qm.tensor_route_agrees() && qm.bar_routes_agree() &&
                  qm.bar().is_involution() && compatible;
  Json ch = Json::array();
  for (int s : chain) ch.push_back(s + 1);
  const Json j{{"type", sys->label()},
               {"chain", ch},
               {"f", weight_json(f)},
               {"parameters", params_label(c.k)},
               {"dim", qm.dim()},
               {"orbit_dim", qm.orbit().dim()},
               {"chain_reps", qm.chain_reps().size()},
               {"subgroup_order", qm.subgroup()->order()},
               {"standard_parabolic", qm.subgroup()->is_standard_parabolic()},
               {"factorization_ok", qm.factorization_ok()},
               {"tensor_route_agrees", qm.tensor_route_agrees()},
               {"bar_routes_agree", qm.bar_routes_agree()},
               {"relations_ok", rel},
               {"bar_involution", qm.bar().is_involution()},
               {"bar_compatible", compatible},
               {"verdict", ok ? "pass" : "fail"}};
  emit(out, c, j,
       {"dim " + std::to_string(qm.dim()) + " = " + std::to_string(qm.orbit().dim()) + " x " +
            std::to_string(qm.chain_reps().size()),
        "factorization: " + yes_no(qm.factorization_ok()) + ", tensor route: " +
            yes_no(qm.tensor_route_agrees()) + ", bar routes: " + yes_no(qm.bar_routes_agree()),
        "relations: " + yes_no(rel) + ", bar involution: " + yes_no(qm.bar().is_involution()) +
            ", bar compatible: " + yes_no(compatible),
        std::string("verdict: ") + (ok ? "pass" : "fail")});
  return ok ? kExitOk : kExitVerificationFailure;
}

int cmd_canonical(const Common& c, const std::string& case_id, const std::string& sub,
                  const std::string& ftext, const std::string& chain_text, std::ostream& out) {
  if (!c.k) throw InvalidInput("canonical bases need a specialization --k");
  const int sources = !case_id.empty() + !sub.empty() + !ftext.empty();
  if (sources != 1) throw InvalidInput("give exactly one of --case, --subgroup, --f");

  SystemPtr sys;
  std::unique_ptr<Candidate> cand;
  std::unique_ptr<QuasiParabolicModule> qm;
  const RightModule* module = nullptr;
  const CosetSystem* cosets = nullptr;
  BarMap bar;
  Json source;
  if (!ftext.empty()) {
    sys = make_system(c);
    const WeightWord f = parse_weight(ftext);
    const std::vector<int> chain = parse_chain(chain_text, *sys, f.d());
    qm = std::make_unique<QuasiParabolicModule>(sys, chain, f, make_params(*sys, c.k));
    module = &qm->module();
    cosets = &qm->cosets();
    bar = qm->bar();
    Json ch = Json::array();
    for (int s : chain) ch.push_back(s + 1);
    source = Json{{"f", weight_json(f)}, {"chain", ch}};
  } else {
    SubgroupPtr f;
    if (!case_id.empty()) {
      const CatalogCase& cc = catalog_case(case_id);
      if (!c.type.empty() || !c.matrix.empty()) throw InvalidInput("--case fixes the group; drop --type");
      sys = catalog_system(cc);
      f = ReflectionSubgroup::from_reflections(sys, cc.generators);
      source = Json{{"case", case_id}};
    } else {
      sys = make_system(c);
      f = parse_subgroup(sys, sub);
    }
    cand = std::make_unique<Candidate>(f, make_params(*sys, c.k));
    module = &cand->module();
    cosets = &cand->cosets();
    bar = cyclic_bar(*module, *cosets);
    std::vector<Word> gens;
    for (const auto& g : f->canonical_generators()) gens.push_back(g.word());
    source["subgroup"] = Json{{"generators", words_json(gens)}};
  }
  const ElementTable& t = sys->element_table();
  const bool rel = check_relations(*module).ok();
  const CanonicalBasis cb = canonical_basis(bar, cosets->reps(), t);
  const CanonicalReport rep = verify_canonical(cb, bar, t);

  std::vector<std::string> labels;
  for (Index w : cosets->reps()) labels.push_back(label_of(t, w));
  Json table = Json::object();
  std::vector<std::string> text;
  for (std::size_t w = 0; w < cb.c.size(); ++w) {
    Json entries = Json::array();
    std::string line = "C_" + (labels[w].empty() ? std::string("e") : labels[w]) + " =";
    bool first = true;
    for (auto it = cb.c[w].rbegin(); it != cb.c[w].rend(); ++it) {
      entries.push_back(Json::array({labels[it->first], it->second.to_string()}));
      line += std::string(first ? " " : " + ") + "(" + it->second.to_string() + ") m_" +
              (labels[it->first].empty() ? std::string("e") : labels[it->first]);
      first = false;
    }
    table[labels[w]] = entries;
    text.push_back(line);
  }
  Json violations = Json::array();
  for (const auto& v : rep.violations) violations.push_back(v);
  const Json j{{"module",
                Json{{"type", sys->label()},
                     {"source", source},
                     {"parameters", params_label(c.k)},
                     {"dim", cosets->size()},
                     {"basis", labels},
                     {"relations_ok", rel}}},
               {"canonical_basis", table},
               {"verification", Json{{"ok", rep.ok()}, {"violations", violations}}}};
  if (!rel) text.push_back("warning: the candidate action violates the Hecke relations");
  text.push_back(std::string("verification: ") + (rep.ok() ? "ok" : "FAILED"));
  for (const auto& v : rep.violations) text.push_back("  " + v);
  emit(out, c, j, text);
  return rel && rep.ok() ? kExitOk : kExitVerificationFailure;
}

Json report_json(const VerificationReport& r, const Candidate& cand, const std::string& type,
                 const std::optional<int>& k, const std::string* expected, bool table) {
  Json j{{"case", r.case_id.empty() ? "custom" : r.case_id},
         {"type", type},
         {"parameters", params_label(k)},
         {"subgroup", Json{{"generators", words_json(r.canonical_generators)}}},
         {"subgroup_order", r.subgroup_order},
         {"reps", r.reps},
         {"rep_words", words_json(r.rep_words)},
         {"relations", relations_json(r.relations, cand.basis_names())},
         {"verdict", r.verdict()}};
  if (expected) j["expected"] = *expected;
  if (table) j["action"] = action_table_lines(cand);
  return j;
}

std::vector<std::string> report_text(const VerificationReport& r, const Candidate& cand,
                                     const std::string* expected, bool table) {
  std::vector<std::string> text;
  text.push_back((r.case_id.empty() ? std::string("custom") : r.case_id) + ": " + r.verdict() +
                 (expected ? " (expected " + *expected + ")" : "") + ", |W_f| = " +
                 std::to_string(r.subgroup_order) + ", |^fW| = " + std::to_string(r.reps));
  for (const auto& l : relations_text(r.relations, cand.basis_names())) text.push_back("  " + l);
  if (table)
    for (const auto& l : action_table_lines(cand)) text.push_back("  " + l);
  return text;
}

int verdict_exit(bool pass, bool expect_fail) {
  return pass != expect_fail ? kExitOk : kExitVerificationFailure;
}

int cmd_verify(const Common& c, const std::string& sub, bool table, bool expect_fail, std::size_t cap,
               std::ostream& out) {
  auto sys = make_system(c);
  const Candidate cand(parse_subgroup(sys, sub), make_params(*sys, c.k), cap);
  const VerificationReport r = verify_candidate(cand);
  emit(out, c, report_json(r, cand, sys->label(), c.k, nullptr, table), report_text(r, cand, nullptr, table));
  return verdict_exit(r.pass(), expect_fail);
}

int cmd_catalog(const Common& c, const std::string& id, bool table, bool expect_fail, std::ostream& out) {
  if (!c.type.empty() || !c.matrix.empty()) throw InvalidInput("catalog cases fix their own group");
  std::vector<const CatalogCase*> cases;
  if (id.empty()) {
    for (const auto& cc : catalog()) cases.push_back(&cc);
  } else {
    cases.push_back(&catalog_case(id));
  }
  Json all = Json::array();
  std::vector<std::string> text;
  bool all_match = true, last_pass = false;
  for (const CatalogCase* cc : cases) {
    auto sys = catalog_system(*cc);
    const Candidate cand(ReflectionSubgroup::from_reflections(sys, cc->generators), make_params(*sys, c.k));
    const VerificationReport r = verify_candidate(cand, cc->id);
    all.push_back(report_json(r, cand, cc->type, c.k, &cc->expected, table));
    for (const auto& l : report_text(r, cand, &cc->expected, table)) text.push_back(l);
    all_match = all_match && r.verdict() == cc->expected;
    last_pass = r.pass();
  }
  if (!id.empty()) {
    emit(out, c, all[0], text);
    return verdict_exit(last_pass, expect_fail);
  }
  text.push_back(std::string("all verdicts as expected: ") + yes_no(all_match));
  emit(out, c, Json{{"parameters", params_label(c.k)}, {"cases", all}, {"all_as_expected", all_match}}, text);
  return all_match ? kExitOk : kExitVerificationFailure;
}

void add_common(CLI::App* sub, Common& c, bool group) {
  sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  if (group) {
    sub->add_option("--type", c.type, "Cartan type label, e.g. B3, G2, F4");
    sub->add_option("--matrix", c.matrix, "Coxeter matrix as JSON rows");
    sub->add_option("--generator-order", c.order, "ShortLex generator order as a JSON array (1-based)");
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact quasi-parabolic Kazhdan-Lusztig computations", "coxkl"};
  app.require_subcommand(1);
  Common c;
  std::string sub, inner, middle, ftext, chain, case_id;
  bool table = false, expect_fail = false;
  unsigned seed = 1;
  std::size_t cap = 4096;
  int k = 0;

  auto* sys = app.add_subcommand("system", "Coxeter system data");
  add_common(sys, c, true);
  auto* sg = app.add_subcommand("subgroup", "Canonical generators of a reflection subgroup");
  add_common(sg, c, true);
  sg->add_option("--subgroup", sub, "{\"generators\": [[2], [1,2,1]]}")->required();
  auto* cs = app.add_subcommand("cosets", "Minimal length coset representatives");
  add_common(cs, c, true);
  cs->add_option("--subgroup", sub, "Subgroup JSON")->required();
  auto* pc = app.add_subcommand("product-check", "Product decomposition of coset representatives");
  add_common(pc, c, true);
  pc->add_option("--inner", inner, "Inner subgroup JSON")->required();
  pc->add_option("--middle", middle, "Middle subgroup JSON")->required();
  auto* tb = app.add_subcommand("typeb", "Type-B quasi-permutation module checks");
  add_common(tb, c, false);
  tb->add_option("--f", ftext, "{\"r\":1,\"m\":1,\"d\":3,\"f\":[0,0,-1]}")->required();
  tb->add_option("--seed", seed, "Seed for the random compatibility checks");
  auto* ic = app.add_subcommand("induct-check", "Induced quasi-permutation module checks");
  add_common(ic, c, true);
  ic->add_option("--f", ftext, "Weight word JSON")->required();
  ic->add_option("--chain", chain, "Type-B chain c_0..c_{d-1} as a JSON array (1-based)");
  auto* cn = app.add_subcommand("canonical", "Canonical basis of a quasi-parabolic module");
  add_common(cn, c, true);
  cn->add_option("--case", case_id, "Catalog case id");
  cn->add_option("--subgroup", sub, "Subgroup JSON");
  cn->add_option("--f", ftext, "Weight word JSON");
  cn->add_option("--chain", chain, "Type-B chain (1-based)");
  auto* vf = app.add_subcommand("verify", "Check the Hecke relations on a candidate module");
  add_common(vf, c, true);
  vf->add_option("--subgroup", sub, "Subgroup JSON")->required();
  vf->add_flag("--table", table, "Include the action table");
  vf->add_flag("--expect-fail", expect_fail, "Exit 0 when the relations fail");
  vf->add_option("--cap", cap, "Maximum |^fW|");
  auto* ct = app.add_subcommand("catalog", "Built-in G2 and F4 cases");
  add_common(ct, c, false);
  ct->add_option("--case", case_id, "Case id");
  ct->add_flag("--table", table, "Include the action table");
  ct->add_flag("--expect-fail", expect_fail, "Exit 0 when the relations fail");
  for (auto* s : {ic, cn, vf, ct}) s->add_option("--k", k, "Specialize every parameter other than q to q^k");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "coxkl: " << e.what() << '\n';
    return kExitInvalidInput;
  }
  for (auto* s : {ic, cn, vf, ct})
    if (s->parsed() && s->count("--k")) c.k = k;

  try {
    if (sys->parsed()) return cmd_system(c, out);
    if (sg->parsed()) return cmd_subgroup(c, sub, out);
    if (cs->parsed()) return cmd_cosets(c, sub, out);
    if (pc->parsed()) return cmd_product(c, inner, middle, out);
    if (tb->parsed()) return cmd_typeb(c, ftext, seed, out);
    if (ic->parsed()) return cmd_induct(c, ftext, chain, out);
    if (cn->parsed()) return cmd_canonical(c, case_id, sub, ftext, chain, out);
    if (vf->parsed()) return cmd_verify(c, sub, table, expect_fail, cap, out);
    if (ct->parsed()) return cmd_catalog(c, case_id, table, expect_fail, out);
  } catch (const ResourceLimit& e) {
    err << "coxkl: resource limit: " << e.what() << '\n';
    return kExitResourceLimit;
  } catch (const StructuralError& e) {
    err << "coxkl: structural failure: " << e.what() << '\n';
    return kExitVerificationFailure;
  } catch (const Error& e) {
    err << "coxkl: " << e.what() << '\n';
    return kExitInvalidInput;
  }
  return kExitInvalidInput;
}

}  // namespace coxkl
