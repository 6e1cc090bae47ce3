#include "hyperforge/io.hpp"

#include <fstream>
#include <stdexcept>

namespace hyperforge {

namespace {

Json set_to_array(ElemSet s) {
  Json a = Json::array();
  for (Elem x : set_elems(s)) a.push_back(x);
  return a;
}

ElemSet array_to_set(const Json& a, int n) {
  if (!a.is_array()) throw std::invalid_argument("expected an id array");
  ElemSet s = 0;
  for (const Json& v : a) {
    const int x = v.get<int>();
    if (x < 0 || x >= n) throw std::invalid_argument("set member out of range");
    s |= bit(x);
  }
  return s;
}

std::vector<Elem> elem_vector(const Json& a) {
  if (!a.is_array()) throw std::invalid_argument("expected an id array");
  std::vector<Elem> out;
  for (const Json& v : a) out.push_back(v.get<Elem>());
  return out;
}

Json opt_elem(Elem e) { return e < 0 ? Json(nullptr) : Json(e); }
Elem elem_or(const Json& j, const char* key, Elem missing) {
  if (!j.contains(key) || j.at(key).is_null()) return missing;
  return j.at(key).get<Elem>();
}

void check_range(const std::vector<Elem>& xs, int n, const char* what) {
  for (Elem x : xs)
    if (x < 0 || x >= n) throw std::invalid_argument(std::string(what) + " entry out of range");
}

std::string join_ids(ElemSet s) {
  std::string out;
  for (Elem x : set_elems(s)) {
    if (!out.empty()) out += "|";
    out += std::to_string(x);
  }
  return out;
}

}  // namespace

Json make_document(const std::string& kind, Json body) {
  return Json{{"schema", "hyperforge/1"}, {"kind", kind}, {"body", std::move(body)}};
}

Json open_document(const Json& doc, const std::string& expected_kind) {
  if (!doc.is_object()) throw std::invalid_argument("document must be a JSON object");
  if (!doc.contains("schema")) return doc;
  if (doc.at("schema").get<std::string>() != "hyperforge/1")
    throw std::invalid_argument("unsupported schema version");
  if (!expected_kind.empty() && doc.value("kind", "") != expected_kind)
    throw std::invalid_argument("document kind is not '" + expected_kind + "'");
  if (!doc.contains("body")) throw std::invalid_argument("document has no body");
  return doc.at("body");
}

Json to_json(const HyperTable& H) {
  Json hsum = Json::array();
  for (ElemSet s : H.hsum) hsum.push_back(set_to_array(s));
  return Json{{"names", H.names},
              {"hsum", std::move(hsum)},
              {"mul", H.has_mul() ? Json(H.mul) : Json(nullptr)},
              {"zero", opt_elem(H.zero)},
              {"one", opt_elem(H.one)}};
}

HyperTable hypertable_from_json(const Json& j) {
  const std::vector<std::string> names = j.at("names").get<std::vector<std::string>>();
  const int n = static_cast<int>(names.size());
  std::vector<ElemSet> hsum;
  for (const Json& cell : j.at("hsum")) hsum.push_back(array_to_set(cell, n));
  std::vector<Elem> mul;
  if (j.contains("mul") && !j.at("mul").is_null()) mul = elem_vector(j.at("mul"));
  return make_hypertable(names, hsum, mul, elem_or(j, "zero", -1), elem_or(j, "one", -1));
}

Json to_json(const Pair& P) {
  Json lact = Json::array(), ract = Json::array();
  for (const auto& row : P.lact) lact.push_back(row);
  for (const auto& row : P.ract) ract.push_back(row);
  Json nulls = Json::array();
  for (Elem a = 0; a < P.size(); ++a)
    if (P.is_null(a)) nulls.push_back(a);
  Json psets(nullptr);
  if (!P.psets.empty()) {
    psets = Json::array();
    for (ElemSet s : P.psets) psets.push_back(set_to_array(s));
  }
  return Json{{"names", P.names},
              {"star", P.star},
              {"iota", P.iota},
              {"tset", P.tset},
              {"one", opt_elem(P.one)},
              {"nulls", std::move(nulls)},
              {"mul", P.has_mul() ? Json(P.mul) : Json(nullptr)},
              {"lact", std::move(lact)},
              {"ract", std::move(ract)},
              {"psets", std::move(psets)},
              {"weakly_admissible", P.weakly_admissible}};
}

Pair pair_from_json(const Json& j) {
  Pair P;
  P.names = j.at("names").get<std::vector<std::string>>();
  const int n = static_cast<int>(P.names.size());
  if (n < 1) throw std::invalid_argument("empty carrier");
  P.star = elem_vector(j.at("star"));
  if (static_cast<int>(P.star.size()) != n * n) throw std::invalid_argument("star table shape");
  check_range(P.star, n, "star");
  P.iota = j.at("iota").get<Elem>();
  if (P.iota < 0 || P.iota >= n) throw std::invalid_argument("iota out of range");
  P.tset = elem_vector(j.at("tset"));
  check_range(P.tset, n, "tset");
  for (size_t i = 1; i < P.tset.size(); ++i)
    if (P.tset[i - 1] >= P.tset[i]) throw std::invalid_argument("tset must ascend");
  P.one = elem_or(j, "one", -1);
  if (P.one >= 0 && P.tpos(P.one) < 0) throw std::invalid_argument("one must sit in tset");
  P.null0.assign(static_cast<size_t>(n), 0);
  for (Elem a : elem_vector(j.at("nulls"))) {
    if (a < 0 || a >= n) throw std::invalid_argument("null entry out of range");
    P.null0[static_cast<size_t>(a)] = 1;
  }
  if (j.contains("mul") && !j.at("mul").is_null()) {
    P.mul = elem_vector(j.at("mul"));
    if (static_cast<int>(P.mul.size()) != n * n) throw std::invalid_argument("mul table shape");
    check_range(P.mul, n, "mul");
  }
  for (const Json& row : j.at("lact")) P.lact.push_back(elem_vector(row));
  for (const Json& row : j.at("ract")) P.ract.push_back(elem_vector(row));
  if (P.lact.size() != P.tset.size() || P.ract.size() != P.tset.size())
    throw std::invalid_argument("action row count must match tset");
  for (const auto& row : P.lact) {
    if (static_cast<int>(row.size()) != n) throw std::invalid_argument("lact row shape");
    check_range(row, n, "lact");
  }
  for (const auto& row : P.ract) {
    if (static_cast<int>(row.size()) != n) throw std::invalid_argument("ract row shape");
    check_range(row, n, "ract");
  }
  if (j.contains("psets") && !j.at("psets").is_null())
    for (const Json& cell : j.at("psets")) P.psets.push_back(array_to_set(cell, kMaxCarrier));
  if (j.contains("weakly_admissible")) P.weakly_admissible = j.at("weakly_admissible").get<bool>();
  return P;
}

Json to_json(const MagmaPair& M) {
  Json act = Json::array();
  for (const auto& row : M.act) act.push_back(row);
  Json nulls = Json::array();
  for (Elem a = 0; a < M.size(); ++a)
    if (M.null0[static_cast<size_t>(a)]) nulls.push_back(a);
  return Json{{"names", M.names},
              {"op", M.op},
              {"tnames", M.tnames},
              {"act", std::move(act)},
              {"nulls", std::move(nulls)}};
}

MagmaPair magma_from_json(const Json& j) {
  MagmaPair M;
  M.names = j.at("names").get<std::vector<std::string>>();
  const int n = static_cast<int>(M.names.size());
  if (n < 1) throw std::invalid_argument("empty carrier");
  M.op = elem_vector(j.at("op"));
  if (static_cast<int>(M.op.size()) != n * n) throw std::invalid_argument("op table shape");
  check_range(M.op, n, "op");
  M.tnames = j.at("tnames").get<std::vector<std::string>>();
  if (M.tnames.empty()) throw std::invalid_argument("empty scalar set");
  for (const Json& row : j.at("act")) M.act.push_back(elem_vector(row));
  if (M.act.size() != M.tnames.size()) throw std::invalid_argument("action row count");
  for (const auto& row : M.act) {
    if (static_cast<int>(row.size()) != n) throw std::invalid_argument("act row shape");
    check_range(row, n, "act");
  }
  M.null0.assign(static_cast<size_t>(n), 0);
  for (Elem a : elem_vector(j.at("nulls"))) {
    if (a < 0 || a >= n) throw std::invalid_argument("null entry out of range");
    M.null0[static_cast<size_t>(a)] = 1;
  }
  return M;
}

Json to_json(const AxiomCheck& c) {
  return Json{{"axiom", c.axiom},        {"pass", c.pass},
              {"required", c.required},  {"witness", c.witness},
              {"detail", c.detail},      {"tuples_checked", c.tuples_checked}};
}

Json to_json(const AxiomReport& r) {
  Json checks = Json::array();
  for (const AxiomCheck& c : r.checks) checks.push_back(to_json(c));
  return Json{{"all_pass", r.all_pass()}, {"checks", std::move(checks)}};
}

Json to_json(const Verdict& v) {
  return Json{{"pass", v.pass}, {"detail", v.detail}, {"witness", v.witness}};
}

Json to_json(const IsoResult& r) {
  return Json{{"found", r.found},
              {"iso", r.found ? Json(r.map) : Json(nullptr)},
              {"nodes_explored", r.nodes_explored},
              {"detail", r.detail}};
}

Json to_json(const Quotient& Q) {
  Json cosets = Json::array();
  for (ElemSet s : Q.space.cosets) cosets.push_back(set_to_array(s));
  return Json{{"table", to_json(Q.table)}, {"cosets", std::move(cosets)}, {"rep", Q.space.rep}};
}

Json to_json(const MHyperRing& M) {
  Json cosets = Json::array(), hmul = Json::array();
  for (ElemSet s : M.cosets) cosets.push_back(set_to_array(s));
  for (ElemSet s : M.hmul) hmul.push_back(set_to_array(s));
  return Json{{"names", M.names}, {"cosets", std::move(cosets)}, {"rep", M.rep},
              {"add", M.add},     {"hmul", std::move(hmul)},     {"zero", M.zero},
              {"one", opt_elem(M.one)}};
}

Json to_json(const TensorResult& T) {
  Json classes = Json::array();
  for (size_t k = 0; k < T.classes.size(); ++k) {
    Json terms = Json::array();
    for (int t : T.classes[k]) terms.push_back(T.universe.terms[static_cast<size_t>(t)].label);
    classes.push_back(Json{{"terms", std::move(terms)},
                           {"null", static_cast<bool>(T.null_class[k])}});
  }
  return Json{{"depth", T.depth},
              {"factors", Json::array({T.n1, T.n2})},
              {"classes", std::move(classes)}};
}

Json to_json(const GapWitness& w) {
  auto strs = [](const std::vector<SymElem>& xs) {
    Json a = Json::array();
    for (const SymElem& x : xs) a.push_back(x.str());
    return a;
  };
  return Json{{"found", w.found},
              {"s", strs(w.s)},
              {"s1", strs(w.s1)},
              {"s2", strs(w.s2)},
              {"lhs", w.lhs.str()},
              {"rhs", w.rhs.str()},
              {"extra", w.found ? Json(w.extra.str()) : Json(nullptr)},
              {"configurations", w.configurations}};
}

Json to_json(const CensusEntry& e) {
  return Json{{"order", e.order},
              {"table", to_json(e.table)},
              {"realizable", e.realizable},
              {"realization", e.realizable ? Json(e.realization) : Json(nullptr)}};
}

std::string hypertable_csv(const HyperTable& H) {
  std::string out = H.has_mul() ? "a,b,a+b,a*b\n" : "a,b,a+b\n";
  for (Elem a = 0; a < H.size(); ++a)
    for (Elem b = 0; b < H.size(); ++b) {
      out += std::to_string(a) + "," + std::to_string(b) + "," + join_ids(H.hs(a, b));
      if (H.has_mul()) out += "," + std::to_string(H.m(a, b));
      out += "\n";
    }
  return out;
}

std::string census_csv(const std::vector<CensusEntry>& entries) {
  std::string out = "order,realizable,realization,names,sums\n";
  for (const CensusEntry& e : entries) {
    std::string names, sums;
    for (size_t i = 0; i < e.table.names.size(); ++i) {
      if (i) names += "|";
      names += e.table.names[i];
    }
    for (Elem a = 1; a < e.table.size(); ++a)
      for (Elem b = 1; b < e.table.size(); ++b) {
        if (!sums.empty()) sums += " ";
        sums += std::to_string(a) + "+" + std::to_string(b) + ":" + join_ids(e.table.hs(a, b));
      }
    out += std::to_string(e.order) + "," + (e.realizable ? "yes" : "no") + "," +
           e.realization + "," + names + "," + sums + "\n";
  }
  return out;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  return Json::parse(in);
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot open file for writing: " + path);
  out << text;
}

}  // namespace hyperforge
