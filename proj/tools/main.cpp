#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "hyperforge/census.hpp"
#include "hyperforge/constructs.hpp"
#include "hyperforge/io.hpp"
#include "hyperforge/morphisms.hpp"
#include "hyperforge/skewpoly.hpp"
#include "hyperforge/symbolic.hpp"

using namespace hyperforge;

namespace {

long long env_budget(long long fallback) {
  const char* v = std::getenv("HYPERFORGE_BUDGET");
  if (!v) return fallback;
  try {
    return std::stoll(v);
  } catch (const std::exception&) {
    throw std::invalid_argument("HYPERFORGE_BUDGET is not an integer");
  }
}

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty())
    std::cout << text;
  else
    write_text_file(out_path, text);
}

int emit_json(const std::string& out_path, const Json& doc, int code) {
  emit(out_path, doc.dump(2) + "\n");
  return code;
}

// ---------------------------------------------------------------------------
// catalog grammar

int int_after(const std::string& s, const std::string& prefix) {
  try {
    return std::stoi(s.substr(prefix.size()));
  } catch (const std::exception&) {
    throw std::invalid_argument("bad number in '" + s + "'");
  }
}

std::pair<int, int> prime_power(int q) {
  if (q < 2) throw std::invalid_argument("field order must be >= 2");
  int p = q;
  for (int d = 2; d * d <= q; ++d)
    if (q % d == 0) {
      p = d;
      break;
    }
  int k = 0, v = q;
  while (v % p == 0) {
    v /= p;
    ++k;
  }
  if (v != 1) throw std::invalid_argument(std::to_string(q) + " is not a prime power");
  return {p, k};
}

FinRing field_of(int q) {
  const auto [p, k] = prime_power(q);
  return make_finite_field(p, k);
}

Subgroup subgroup_spec(const FinRing& F, const std::string& s) {
  if (s == "units") {
    Subgroup G;
    G.members = F.unit_set();
    return G;
  }
  if (s.rfind("order:", 0) == 0) {
    const int want = int_after(s, "order:");
    for (const Subgroup& G : unit_subgroups(F))
      if (set_size(G.members) == want) return G;
    throw std::invalid_argument("the unit group has no subgroup of order " + std::to_string(want));
  }
  throw std::invalid_argument("unknown subgroup spec '" + s + "' (use units or order:k)");
}

// singleton-sum table of a finite ring: the degenerate hyperstructure
HyperTable table_of_ring(const FinRing& R) {
  std::vector<ElemSet> hsum(static_cast<size_t>(R.size()) * R.size());
  for (Elem a = 0; a < R.size(); ++a)
    for (Elem b = 0; b < R.size(); ++b)
      hsum[static_cast<size_t>(a) * R.size() + b] = bit(R.a(a, b));
  return make_hypertable(R.names, hsum, R.mul, R.zero, R.one);
}

// krasner | signs | gf:Q | gf:Q/units | gf:Q/order:K | file.json
HyperTable table_spec(const std::string& s) {
  if (s == "krasner") return krasner_table();
  if (s == "signs") return signs_table();
  if (s.rfind("gf:", 0) == 0) {
    const auto slash = s.find('/');
    const int q = int_after(s.substr(0, slash), "gf:");
    const FinRing F = field_of(q);
    if (slash == std::string::npos) return table_of_ring(F);
    return krasner_quotient(F, subgroup_spec(F, s.substr(slash + 1))).table;
  }
  if (s.size() > 5 && s.rfind(".json") == s.size() - 5) {
    Json body = open_document(load_json_file(s));
    if (body.is_object() && body.contains("quotient")) body = body.at("quotient");
    if (body.is_object() && body.contains("table")) body = body.at("table");
    return hypertable_from_json(body);
  }
  throw std::invalid_argument("unknown table '" + s + "'");
}

bool is_symbolic_name(const std::string& s) {
  return s == "tropical" || s == "signed-tropical" || s == "phase";
}

SymField symfield_of(const std::string& s) {
  if (s == "tropical") return SymField::tropical;
  if (s == "signed-tropical") return SymField::signed_tropical;
  return SymField::phase;
}

std::vector<SymElem> default_sample(SymField f) {
  std::vector<SymElem> xs{sym_zero(f)};
  switch (f) {
    case SymField::tropical:
      for (int v = -2; v <= 2; ++v) xs.push_back(sym_trop(Rat(v)));
      break;
    case SymField::signed_tropical:
      for (int v = 0; v <= 2; ++v) {
        xs.push_back(sym_strop(1, Rat(v)));
        xs.push_back(sym_strop(-1, Rat(v)));
      }
      break;
    default:
      for (int k = 0; k < 8; ++k) xs.push_back(sym_phase(Rat(k, 8)));
      break;
  }
  return xs;
}

FinMonoid monoid_spec(const std::string& s) {
  if (s.rfind("cyclic:", 0) == 0) {
    const int n = int_after(s, "cyclic:");
    if (n < 1 || n > 16) throw std::invalid_argument("cyclic order out of range");
    std::vector<std::string> names;
    std::vector<Elem> op(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
      names.push_back(i == 0 ? "e" : "g" + std::to_string(i));
      for (int j = 0; j < n; ++j) op[static_cast<size_t>(i) * n + j] = (i + j) % n;
    }
    return make_monoid(names, op, 0);
  }
  if (s.rfind("units:gf:", 0) == 0) return units_monoid(field_of(int_after(s, "units:gf:"))).monoid;
  if (s.rfind("sym:", 0) == 0) return symmetric_group(int_after(s, "sym:"));
  throw std::invalid_argument("unknown monoid '" + s + "' (use cyclic:n, units:gf:q, sym:n)");
}

Pair pair_spec(const std::string& s) {
  if (s == "boolean") return boolean_pair();
  if (s.rfind("semiring:gf:", 0) == 0) return semiring_pair(field_of(int_after(s, "semiring:gf:")));
  if (s.rfind("powerset:", 0) == 0) return powerset_pair(table_spec(s.substr(9)));
  if (s.rfind("infinity:", 0) == 0) return infinity_pair(monoid_spec(s.substr(9)));
  throw std::invalid_argument(
      "unknown pair '" + s + "' (use powerset:<table>, infinity:<monoid>, semiring:gf:q, boolean)");
}

FinRing ring_spec(const std::string& s) {
  if (s == "m2:gf2") return matrix_ring(make_finite_field(2, 1), 2);
  if (s.rfind("zmod:", 0) == 0) return zmod(int_after(s, "zmod:"));
  if (s.rfind("gf:", 0) == 0) return field_of(int_after(s, "gf:"));
  throw std::invalid_argument("unknown ring '" + s + "' (use m2:gf2, zmod:n, gf:q)");
}

ElemSet ideal_spec(const FinRing& R, const std::string& s) {
  if (s == "col0") {
    // left ideal of matrices with zero second column: every x * e11
    const std::string e11 = "[[1,0],[0,0]]";
    Elem g = -1;
    for (Elem a = 0; a < R.size(); ++a)
      if (R.names[static_cast<size_t>(a)] == e11) g = a;
    if (g < 0) throw std::invalid_argument("col0 needs a 2x2 matrix ring");
    ElemSet L = 0;
    for (Elem a = 0; a < R.size(); ++a) L |= bit(R.m(a, g));
    return L;
  }
  if (s.rfind("elems:", 0) == 0) {
    ElemSet L = 0;
    std::string rest = s.substr(6);
    size_t pos = 0;
    while (pos <= rest.size()) {
      const size_t comma = rest.find(',', pos);
      const std::string tok = rest.substr(pos, comma == std::string::npos ? std::string::npos
                                                                          : comma - pos);
      if (tok.empty()) throw std::invalid_argument("empty id in ideal list");
      const int a = std::stoi(tok);
      if (a < 0 || a >= R.size()) throw std::invalid_argument("ideal id out of range");
      L |= bit(a);
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    return L;
  }
  throw std::invalid_argument("unknown ideal '" + s + "' (use col0 or elems:a,b,...)");
}

// ---------------------------------------------------------------------------
// subcommands

int run_check(const std::string& table, const std::string& suite, const std::string& out,
              const std::string& format, unsigned seed, long long budget) {
  if (is_symbolic_name(table)) {
    const SymField f = symfield_of(table);
    if (format != "json") throw std::invalid_argument("csv output is not available here");
    if (suite == "powerset") {
      const GapWitness w = distributivity_gap(f, budget);
      return emit_json(out, make_document("gap-witness", to_json(w)), 0);
    }
    const AxiomReport rep = spot_check_axioms(f, default_sample(f));
    return emit_json(out, make_document("report", to_json(rep)), rep.all_pass() ? 0 : 1);
  }
  const HyperTable H = table_spec(table);
  AxiomReport rep;
  if (suite == "hypergroup")
    rep = check_hypergroup(H);
  else if (suite == "hyperring")
    rep = check_hyperring(H);
  else if (suite == "hyperfield")
    rep = check_hyperfield(H);
  else if (suite == "powerset")
    rep = check_powerset_weak_distributivity(H, seed, static_cast<int>(budget));
  else
    throw std::invalid_argument("unknown suite '" + suite + "'");
  if (format != "json") throw std::invalid_argument("csv output is not available here");
  Json body{{"table", table}, {"suite", suite}, {"report", to_json(rep)}};
  return emit_json(out, make_document("report", std::move(body)), rep.all_pass() ? 0 : 1);
}

int run_quotient(const std::string& field, const std::string& subgroup, const std::string& out,
                 const std::string& format) {
  if (field.rfind("gf:", 0) != 0) throw std::invalid_argument("field must be gf:q");
  const FinRing F = field_of(int_after(field, "gf:"));
  const Quotient Q = krasner_quotient(F, subgroup_spec(F, subgroup));
  const AxiomReport rep = check_hyperfield(Q.table);
  if (format == "csv") {
    emit(out, hypertable_csv(Q.table));
    return rep.all_pass() ? 0 : 1;
  }
  Json body{{"quotient", to_json(Q)}, {"report", to_json(rep)}};
  return emit_json(out, make_document("quotient", std::move(body)), rep.all_pass() ? 0 : 1);
}

int run_iso(const std::string& a, const std::string& b, const std::string& out,
            const std::string& format) {
  if (format != "json") throw std::invalid_argument("csv output is not available here");
  const IsoResult r = iso_search(table_spec(a), table_spec(b));
  Json body = to_json(r);
  body["a"] = a;
  body["b"] = b;
  return emit_json(out, make_document("iso", std::move(body)), 0);
}

int run_mhyper(const std::string& ring, const std::string& ideal, const std::string& out,
               const std::string& format) {
  if (format != "json") throw std::invalid_argument("csv output is not available here");
  const FinRing R = ring_spec(ring);
  const MHyperRing M = m_hyperring(R, ideal_spec(R, ideal));
  const AxiomReport rep = check_mhyperring(M);
  const Verdict dist = check_mhyper_distributive(M);
  Json body{{"ring", ring},
            {"ideal", ideal},
            {"mhyperring", to_json(M)},
            {"report", to_json(rep)},
            {"distributive", to_json(dist)}};
  const bool ok = rep.all_pass() && dist.pass;
  return emit_json(out, make_document("mhyperring", std::move(body)), ok ? 0 : 1);
}

int run_pumpluen(const std::string& field, const std::string& twist, const std::string& modulus,
                 bool with_table, const std::string& out, const std::string& format,
                 unsigned seed) {
  if (format != "json") throw std::invalid_argument("csv output is not available here");
  if (field.rfind("gf:", 0) != 0) throw std::invalid_argument("field must be gf:q");
  if (twist.rfind("frob:", 0) != 0) throw std::invalid_argument("twist must be frob:k");
  const auto [p, k] = prime_power(int_after(field, "gf:"));
  const SkewRing R = skew_ring(p, k, int_after(twist, "frob:"));
  const PumpluenAlgebra A = pumpluen_algebra(R, skew_parse(R, modulus));
  const Verdict assoc = nonassoc_witness(A);
  const Verdict cross = crosscheck_mhyperring(A, 50, seed);
  Json body{{"field", field},
            {"twist", twist},
            {"modulus", skew_to_string(R, A.f)},
            {"size", A.size()},
            {"nonassoc", to_json(assoc)},
            {"crosscheck", to_json(cross)}};
  if (with_table) {
    Json names = Json::array(), table = Json::array();
    for (const SkewPoly& r : A.carrier) names.push_back(skew_to_string(R, r));
    for (const SkewPoly& r1 : A.carrier) {
      Json row = Json::array();
      for (const SkewPoly& r2 : A.carrier) row.push_back(A.index_of(pumpluen_mul(A, r1, r2)));
      table.push_back(std::move(row));
    }
    body["names"] = std::move(names);
    body["table"] = std::move(table);
  }
  return emit_json(out, make_document("pumpluen", std::move(body)), cross.pass ? 0 : 1);
}

int run_tensor(const std::string& left, const std::string& right, int depth, long long budget,
               const std::string& out, const std::string& format) {
  if (format != "json") throw std::invalid_argument("csv output is not available here");
  const MagmaPair M1 = magma_from_json(open_document(load_json_file(left)));
  const MagmaPair M2 = magma_from_json(open_document(load_json_file(right)));
  const TensorResult T = tensor_product(M1, M2, depth, static_cast<int>(budget));
  return emit_json(out, make_document("tensor", to_json(T)), 0);
}

int run_pairs(const std::string& name, const std::string& suite, const std::string& out,
              const std::string& format) {
  if (format != "json") throw std::invalid_argument("csv output is not available here");
  const Pair P = pair_spec(name);
  Json body{{"pair", name}, {"suite", suite}};
  bool ok = true;
  if (suite == "pair") {
    const AxiomReport rep = check_pair_axioms(P);
    body["report"] = to_json(rep);
    ok = rep.all_pass();
  } else if (suite == "surpass") {
    const SurpassRel R = P.psets.empty() ? null_step_relation(P) : subset_relation(P);
    AxiomReport rep = check_surpassing(P, R);
    body["relation"] = R.kind;
    body["report"] = to_json(rep);
    ok = rep.all_pass();
    if (P.has_mul()) {
      const AxiomReport dist = check_preceq_distributive(P, R);
      body["distributive"] = to_json(dist);
      ok = ok && dist.all_pass();
    }
  } else if (suite == "negation") {
    const PropertyN pn = check_property_N(P);
    const Verdict uniq = is_uniquely_negated(P);
    body["property_n"] = to_json(pn.verdict);
    body["uniquely_negated"] = to_json(uniq);
    ok = pn.holds && uniq.pass;
  } else {
    throw std::invalid_argument("unknown suite '" + suite + "' (use pair, surpass, negation)");
  }
  return emit_json(out, make_document("pairs", std::move(body)), ok ? 0 : 1);
}

int run_census(int max_order, const std::string& kind_name, const std::string& out,
               const std::string& format) {
  const CensusKind kind =
      kind_name == "hypergroup" ? CensusKind::hypergroup : CensusKind::hyperfield;
  if (kind_name != "hypergroup" && kind_name != "hyperfield")
    throw std::invalid_argument("unknown kind '" + kind_name + "'");
  const std::vector<CensusEntry> entries = census(max_order, kind);
  if (format == "csv") {
    emit(out, census_csv(entries));
    return 0;
  }
  Json list = Json::array();
  for (const CensusEntry& e : entries) list.push_back(to_json(e));
  Json body{{"kind", kind_name}, {"max_order", max_order}, {"entries", std::move(list)}};
  return emit_json(out, make_document("census", std::move(body)), 0);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite residue hyperstructure workbench"};
  app.require_subcommand(1);

  std::string out, format = "json";
  unsigned seed = 0;
  long long budget = env_budget(100000);
  int depth = 2;
  app.add_option("--out", out, "write the document here instead of stdout");
  app.add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--seed", seed, "seed for every sampled verdict");
  app.add_option("--budget", budget, "sample budget for randomized searches");
  app.add_option("--depth", depth, "term height bound for tensor products");

  auto* c_check = app.add_subcommand("check", "run an axiom suite on a table");
  std::string ck_table, ck_suite = "hypergroup";
  c_check->add_option("--table", ck_table)->required();
  c_check->add_option("--suite", ck_suite);

  auto* c_quot = app.add_subcommand("quotient", "residue table of a field by a unit subgroup");
  std::string q_field, q_sub = "units";
  c_quot->add_option("--field", q_field)->required();
  c_quot->add_option("--subgroup", q_sub);

  auto* c_iso = app.add_subcommand("iso", "search for a structure bijection");
  std::string i_a, i_b;
  c_iso->add_option("--a", i_a)->required();
  c_iso->add_option("--b", i_b)->required();

  auto* c_mhyper = app.add_subcommand("mhyper", "coset structure of a ring by a left ideal");
  std::string m_ring, m_ideal;
  c_mhyper->add_option("--ring", m_ring)->required();
  c_mhyper->add_option("--ideal", m_ideal)->required();

  auto* c_pump = app.add_subcommand("pumpluen", "twisted residue algebra diagnostics");
  std::string p_field, p_twist = "frob:1", p_mod;
  bool p_table = false;
  c_pump->add_option("--field", p_field)->required();
  c_pump->add_option("--twist", p_twist);
  c_pump->add_option("--modulus", p_mod)->required();
  c_pump->add_flag("--table", p_table, "include the full carrier product table");

  auto* c_tensor = app.add_subcommand("tensor", "congruence classes of a two-factor product");
  std::string t_left, t_right;
  c_tensor->add_option("--left", t_left)->required();
  c_tensor->add_option("--right", t_right)->required();

  auto* c_pairs = app.add_subcommand("pairs", "axiom suites for carrier pairs");
  std::string pr_name, pr_suite = "pair";
  c_pairs->add_option("--name", pr_name)->required();
  c_pairs->add_option("--suite", pr_suite);

  auto* c_census = app.add_subcommand("census", "canonical small tables with realizability");
  int cs_order = 3;
  std::string cs_kind = "hyperfield";
  c_census->add_option("--max-order", cs_order);
  c_census->add_option("--kind", cs_kind);

  for (CLI::App* s : {c_check, c_quot, c_iso, c_mhyper, c_pump, c_tensor, c_pairs, c_census})
    s->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*c_check) return run_check(ck_table, ck_suite, out, format, seed, budget);
    if (*c_quot) return run_quotient(q_field, q_sub, out, format);
    if (*c_iso) return run_iso(i_a, i_b, out, format);
    if (*c_mhyper) return run_mhyper(m_ring, m_ideal, out, format);
    if (*c_pump) return run_pumpluen(p_field, p_twist, p_mod, p_table, out, format, seed);
    if (*c_tensor) return run_tensor(t_left, t_right, depth, budget, out, format);
    if (*c_pairs) return run_pairs(pr_name, pr_suite, out, format);
    if (*c_census) return run_census(cs_order, cs_kind, out, format);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
