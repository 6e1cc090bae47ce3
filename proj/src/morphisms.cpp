#include "hyperforge/morphisms.hpp"

#include <algorithm>
#include <stdexcept>

namespace hyperforge {

namespace {

void validate_table_arrow(const TableArrow& f) {
  if (f.to.size() != f.dom.names.size())
    throw std::invalid_argument("arrow: value table size mismatch");
  for (Elem v : f.to)
    if (v < 0 || v >= f.cod.size()) throw std::invalid_argument("arrow: value out of range");
}

void validate_pair_arrow(const PairArrow& f) {
  if (f.to.size() != f.dom.names.size())
    throw std::invalid_argument("arrow: value table size mismatch");
  for (Elem v : f.to)
    if (v < 0 || v >= f.cod.size()) throw std::invalid_argument("arrow: value out of range");
}

ElemSet image_set(const std::vector<Elem>& to, ElemSet s) {
  ElemSet out = 0;
  for (Elem x : set_elems(s)) out |= bit(to[x]);
  return out;
}

// neutral element used by the table-level weak-morphism law
Elem table_iota(const HyperTable& H) {
  if (H.has_zero()) return H.zero;
  if (H.has_one()) return H.one;
  throw std::invalid_argument("weak morphism: table has no designated neutral");
}

std::vector<Elem> identity_map(int n) {
  std::vector<Elem> id(n);
  for (int i = 0; i < n; ++i) id[i] = i;
  return id;
}

}  // namespace

TableArrow table_identity(const HyperTable& H) { return {H, H, identity_map(H.size())}; }
PairArrow pair_identity(const Pair& P) { return {P, P, identity_map(P.size())}; }

TableArrow compose(const TableArrow& f, const TableArrow& g) {
  validate_table_arrow(f);
  validate_table_arrow(g);
  if (g.dom.names != f.cod.names) throw std::invalid_argument("compose: arrows not composable");
  TableArrow h{f.dom, g.cod, {}};
  h.to.reserve(f.to.size());
  for (Elem v : f.to) h.to.push_back(g.to[v]);
  return h;
}

PairArrow compose(const PairArrow& f, const PairArrow& g) {
  validate_pair_arrow(f);
  validate_pair_arrow(g);
  if (g.dom.names != f.cod.names) throw std::invalid_argument("compose: arrows not composable");
  PairArrow h{f.dom, g.cod, {}};
  h.to.reserve(f.to.size());
  for (Elem v : f.to) h.to.push_back(g.to[v]);
  return h;
}

Verdict is_subset_morphism(const TableArrow& f) {
  validate_table_arrow(f);
  Verdict v;
  for (Elem a = 0; a < f.dom.size(); ++a)
    for (Elem b = 0; b < f.dom.size(); ++b) {
      const ElemSet img = image_set(f.to, f.dom.hs(a, b));
      const ElemSet tgt = f.cod.hs(f.to[a], f.to[b]);
      if ((img & ~tgt) != 0) {
        v.pass = false;
        v.witness = {a, b};
        v.detail = "image of " + f.dom.names[a] + "+" + f.dom.names[b] +
                   " escapes the codomain hypersum";
        return v;
      }
    }
  v.detail = "every hypersum image is contained in the hypersum of images";
  return v;
}

Verdict is_weak_morphism(const TableArrow& f) {
  validate_table_arrow(f);
  const Elem di = table_iota(f.dom), ci = table_iota(f.cod);
  Verdict v;
  for (Elem a = 0; a < f.dom.size(); ++a)
    for (Elem b = 0; b < f.dom.size(); ++b) {
      if (!contains(f.dom.hs(a, b), di)) continue;
      if (!contains(f.cod.hs(f.to[a], f.to[b]), ci)) {
        v.pass = false;
        v.witness = {a, b};
        v.detail = "neutral membership lost at " + f.dom.names[a] + "+" + f.dom.names[b];
        return v;
      }
    }
  v.detail = "neutral membership preserved";
  return v;
}

Verdict is_weak_morphism(const PairArrow& f) {
  validate_pair_arrow(f);
  Verdict v;
  for (Elem a = 0; a < f.dom.size(); ++a)
    for (Elem b = 0; b < f.dom.size(); ++b) {
      if (!f.dom.is_null(f.dom.st(a, b))) continue;
      if (!f.cod.is_null(f.cod.st(f.to[a], f.to[b]))) {
        v.pass = false;
        v.witness = {a, b};
        v.detail = "null product lost at " + f.dom.names[a] + "*" + f.dom.names[b];
        return v;
      }
    }
  v.detail = "null products preserved";
  return v;
}

Verdict is_preceq_morphism(const PairArrow& f, const SurpassRel& Rdom, const SurpassRel& Rcod) {
  validate_pair_arrow(f);
  if (Rdom.n != f.dom.size() || Rcod.n != f.cod.size())
    throw std::invalid_argument("is_preceq_morphism: relation size mismatch");
  Verdict v;

  if (f.to[f.dom.iota] != f.cod.iota) {
    v.pass = false;
    v.witness = {f.dom.iota};
    v.detail = "iota is not sent to iota";
    return v;
  }
  for (Elem t : f.dom.tset)
    if (f.cod.tpos(f.to[t]) < 0) {
      v.pass = false;
      v.witness = {t};
      v.detail = "tangible " + f.dom.names[t] + " leaves the codomain T";
      return v;
    }
  for (Elem b1 = 0; b1 < f.dom.size(); ++b1)
    for (Elem b2 = 0; b2 < f.dom.size(); ++b2)
      if (Rdom.at(b1, b2) && !Rcod.at(f.to[b1], f.to[b2])) {
        v.pass = false;
        v.witness = {b1, b2};
        v.detail = "monotonicity fails at " + f.dom.names[b1] + " <= " + f.dom.names[b2];
        return v;
      }
  for (int i = 0; i < f.dom.tcount(); ++i) {
    const Elem t = f.dom.tset[i];
    const int ci = f.cod.tpos(f.to[t]);
    for (Elem b = 0; b < f.dom.size(); ++b) {
      const bool left = f.to[f.dom.la(i, b)] == f.cod.la(ci, f.to[b]);
      const bool right = f.to[f.dom.ra(i, b)] == f.cod.ra(ci, f.to[b]);
      if (!left || !right) {
        v.pass = false;
        v.witness = {t, b};
        v.detail = "action equivariance fails at " + f.dom.names[t] + "." + f.dom.names[b];
        return v;
      }
    }
  }
  for (Elem b1 = 0; b1 < f.dom.size(); ++b1)
    for (Elem b2 = 0; b2 < f.dom.size(); ++b2)
      if (!Rcod.at(f.to[f.dom.st(b1, b2)], f.cod.st(f.to[b1], f.to[b2]))) {
        v.pass = false;
        v.witness = {b1, b2};
        v.detail = "f(" + f.dom.names[b1] + "+" + f.dom.names[b2] +
                   ") is not surpassed by the sum of images";
        return v;
      }
  v.detail = "all five order-morphism conditions hold";
  return v;
}

PairArrow powerset_extension(const TableArrow& f) {
  validate_table_arrow(f);
  const Verdict sub = is_subset_morphism(f);
  if (!sub.pass)
    throw std::invalid_argument("powerset_extension: not an inclusion morphism (" + sub.detail +
                                ")");
  if (f.dom.has_mul() && f.cod.has_mul()) {
    for (Elem a = 0; a < f.dom.size(); ++a)
      for (Elem b = 0; b < f.dom.size(); ++b)
        if (f.to[f.dom.m(a, b)] != f.cod.m(f.to[a], f.to[b]))
          throw std::invalid_argument("powerset_extension: map does not respect multiplication");
  }
  if (f.dom.has_zero() && f.cod.has_zero() && f.to[f.dom.zero] != f.cod.zero)
    throw std::invalid_argument("powerset_extension: map does not fix zero");
  if (f.dom.has_one() && f.cod.has_one() && f.to[f.dom.one] != f.cod.one)
    throw std::invalid_argument("powerset_extension: map does not fix one");

  PairArrow out{powerset_pair(f.dom), powerset_pair(f.cod), {}};
  out.to.resize(out.dom.names.size());
  for (size_t i = 0; i < out.to.size(); ++i)
    out.to[i] = static_cast<Elem>(image_set(f.to, out.dom.psets[i]) - 1);
  return out;
}

ResidueMorphism induced_residue_morphism(const FinMonoid& M, const FinMonoid& N,
                                         const std::vector<Elem>& f, ElemSet G) {
  if (f.size() != M.names.size())
    throw std::invalid_argument("induced_residue_morphism: map size mismatch");
  for (Elem v : f)
    if (v < 0 || v >= N.size())
      throw std::invalid_argument("induced_residue_morphism: value out of range");
  if (f[M.neutral] != N.neutral)
    throw std::invalid_argument("induced_residue_morphism: neutral not preserved");
  for (Elem a = 0; a < M.size(); ++a)
    for (Elem b = 0; b < M.size(); ++b)
      if (f[M.mul(a, b)] != N.mul(f[a], f[b]))
        throw std::invalid_argument("induced_residue_morphism: not a homomorphism");
  ElemSet hit = 0;
  for (Elem v : f) hit |= bit(v);
  if (hit != full_set(N.size()))
    throw std::invalid_argument("induced_residue_morphism: not surjective");

  ElemSet fG = 0;
  for (Elem x : set_elems(G)) fG |= bit(f[x]);

  ResidueMorphism out{coset_hypermonoid(M, G, CosetMode::right),
                      coset_hypermonoid(N, fG, CosetMode::right),
                      {},
                      {}};
  const int dn = out.dom.table.size(), cn = out.cod.table.size();
  out.to.resize(dn);
  for (Elem i = 0; i < dn; ++i) {
    ElemSet prod = 0;  // f(rep) . f(G), setwise inside the codomain monoid
    for (Elem g : set_elems(fG)) prod |= bit(N.mul(f[out.dom.space.rep[i]], g));
    for (Elem j = 0; j < cn; ++j)
      if (out.cod.space.cosets[j] == prod) out.to[i] |= bit(j);
  }

  Verdict& inc = out.inclusion;
  for (Elem i = 0; i < dn && inc.pass; ++i)
    if (out.to[i] == 0) {
      inc.pass = false;
      inc.witness = {i};
      inc.detail = "image of coset " + out.dom.table.names[i] + " matches no codomain coset";
    }
  for (Elem i = 0; i < dn && inc.pass; ++i)
    for (Elem j = 0; j < dn && inc.pass; ++j) {
      ElemSet lhs = 0;
      for (Elem k : set_elems(out.dom.table.hs(i, j))) lhs |= out.to[k];
      const ElemSet rhs = hsum_sets(out.cod.table, out.to[i], out.to[j]);
      if ((lhs & ~rhs) != 0) {
        inc.pass = false;
        inc.witness = {i, j};
        inc.detail = "image of " + out.dom.table.names[i] + "*" + out.dom.table.names[j] +
                     " escapes the product of images";
      }
    }
  if (inc.pass)
    inc.detail = std::to_string(dn) + " -> " + std::to_string(cn) + " cosets; base subgroup " +
                 (is_normal_submonoid(M, G) ? "normal" : "not normal");
  return out;
}

namespace {

// shared tail: build the class matching and compare tables
void finish_third_iso(ThirdIso& T) {
  Verdict& v = T.verdict;
  const int n = T.left.table.size();
  if (T.right.table.size() != n) {
    v.pass = false;
    v.detail = "class counts differ: " + std::to_string(n) + " vs " +
               std::to_string(T.right.table.size());
    return;
  }
  T.match.resize(n);
  std::vector<char> seen(n, 0);
  for (Elem i = 0; i < n; ++i) {
    const Elem base = T.left.space.rep[i];
    T.match[i] = T.right.space.coset_of[T.mid.space.coset_of[base]];
    if (seen[T.match[i]]) {
      v.pass = false;
      v.witness = {i};
      v.detail = "matching is not a bijection";
      return;
    }
    seen[T.match[i]] = 1;
  }
  if (T.left.table.has_zero() && T.match[T.left.table.zero] != T.right.table.zero) {
    v.pass = false;
    v.detail = "zero classes do not correspond";
    return;
  }
  if (T.left.table.has_one() && T.match[T.left.table.one] != T.right.table.one) {
    v.pass = false;
    v.detail = "unit classes do not correspond";
    return;
  }
  for (Elem i = 0; i < n; ++i)
    for (Elem j = 0; j < n; ++j) {
      ElemSet img = 0;
      for (Elem k : set_elems(T.left.table.hs(i, j))) img |= bit(T.match[k]);
      if (img != T.right.table.hs(T.match[i], T.match[j])) {
        v.pass = false;
        v.witness = {i, j};
        v.detail = "hypersum tables disagree at " + T.left.table.names[i] + "+" +
                   T.left.table.names[j];
        return;
      }
      if (T.left.table.has_mul() && T.right.table.has_mul() &&
          T.match[T.left.table.m(i, j)] != T.right.table.m(T.match[i], T.match[j])) {
        v.pass = false;
        v.witness = {i, j};
        v.detail = "product tables disagree at " + T.left.table.names[i] + "*" +
                   T.left.table.names[j];
        return;
      }
    }
  v.detail = std::to_string(n) + " classes matched; tables equal";
}

}  // namespace

ThirdIso third_isomorphism(const FinRing& R, const Subgroup& G, const Subgroup& G1) {
  if ((G.members & ~G1.members) != 0)
    throw std::invalid_argument("third_isomorphism: smaller subgroup not inside larger");
  ThirdIso T;
  T.left = krasner_quotient(R, G1);
  T.mid = krasner_quotient(R, G);
  ElemSet U = 0;
  for (Elem x : set_elems(G1.members)) U |= bit(T.mid.space.coset_of[x]);
  T.right = hypertable_quotient(T.mid.table, U);
  finish_third_iso(T);
  return T;
}

ThirdIso third_isomorphism(const FinMonoid& M, ElemSet G, ElemSet G1) {
  if ((G & ~G1) != 0)
    throw std::invalid_argument("third_isomorphism: smaller subgroup not inside larger");
  ThirdIso T;
  T.left = coset_hypermonoid(M, G1, CosetMode::right);
  T.mid = coset_hypermonoid(M, G, CosetMode::right);

  // the nested chain needs the inner residue to be a plain monoid again
  const int mn = T.mid.table.size();
  std::vector<Elem> op(static_cast<size_t>(mn) * mn);
  for (Elem i = 0; i < mn; ++i)
    for (Elem j = 0; j < mn; ++j) {
      const ElemSet s = T.mid.table.hs(i, j);
      if (set_size(s) != 1)
        throw std::invalid_argument(
            "third_isomorphism: inner residue is multivalued (base does not normalize the "
            "smaller subgroup)");
      op[static_cast<size_t>(i) * mn + j] = set_elems(s)[0];
    }
  const FinMonoid midM = make_monoid(T.mid.table.names, op, T.mid.table.one);

  ElemSet U = 0;
  for (Elem x : set_elems(G1)) U |= bit(T.mid.space.coset_of[x]);
  T.right = coset_hypermonoid(midM, U, CosetMode::right);
  finish_third_iso(T);
  return T;
}

namespace {

// per-element invariants preserved by any isomorphism
std::vector<int> iso_signature(const HyperTable& H, Elem a) {
  std::vector<int> row, col;
  for (Elem b = 0; b < H.size(); ++b) {
    row.push_back(set_size(H.hs(a, b)));
    col.push_back(set_size(H.hs(b, a)));
  }
  std::sort(row.begin(), row.end());
  std::sort(col.begin(), col.end());
  std::vector<int> sig;
  sig.reserve(row.size() + col.size() + 2);
  sig.insert(sig.end(), row.begin(), row.end());
  sig.insert(sig.end(), col.begin(), col.end());
  sig.push_back(set_size(H.hs(a, a)));
  sig.push_back(contains(H.hs(a, a), a) ? 1 : 0);
  return sig;
}

struct IsoCtx {
  const HyperTable *A, *B;
  int n = 0;
  std::vector<std::vector<char>> cand;  // cand[a][b]
  std::vector<Elem> f;
  std::vector<char> used;
  long long nodes = 0;

  bool consistent(Elem a, Elem b) const {
    for (Elem x = 0; x <= a; ++x) {
      if (x != a && f[x] < 0) continue;
      for (const auto& [p, q] : {std::pair{a, x}, std::pair{x, a}}) {
        const ElemSet sa = A->hs(p, q);
        const ElemSet sb = B->hs(p == a ? b : f[p], q == a ? b : f[q]);
        if (set_size(sa) != set_size(sb)) return false;
        for (Elem z : set_elems(sa)) {
          const Elem fz = z == a ? b : f[z];
          if (fz >= 0 && !contains(sb, fz)) return false;
        }
        if (A->has_mul()) {
          const Elem m = A->m(p, q);
          const Elem fm = m == a ? b : f[m];
          if (fm >= 0 && fm != B->m(p == a ? b : f[p], q == a ? b : f[q])) return false;
        }
      }
    }
    return true;
  }

  bool full_check() const {
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y) {
        ElemSet img = 0;
        for (Elem z : set_elems(A->hs(x, y))) img |= bit(f[z]);
        if (img != B->hs(f[x], f[y])) return false;
        if (A->has_mul() && f[A->m(x, y)] != B->m(f[x], f[y])) return false;
      }
    return true;
  }

  bool search(Elem a) {
    if (a == n) return full_check();
    for (Elem b = 0; b < n; ++b) {
      if (used[b] || !cand[a][b]) continue;
      ++nodes;
      if (!consistent(a, b)) continue;
      f[a] = b;
      used[b] = 1;
      if (search(a + 1)) return true;
      f[a] = -1;
      used[b] = 0;
    }
    return false;
  }
};

}  // namespace

IsoResult iso_search(const HyperTable& A, const HyperTable& B) {
  IsoResult out;
  if (A.size() != B.size()) {
    out.detail = "carrier sizes differ";
    return out;
  }
  if (A.has_mul() != B.has_mul() || A.has_zero() != B.has_zero() || A.has_one() != B.has_one()) {
    out.detail = "table shapes differ (mul/zero/one designations)";
    return out;
  }
  if (A.size() > 10) throw std::invalid_argument("iso_search: carrier larger than 10");

  IsoCtx ctx;
  ctx.A = &A;
  ctx.B = &B;
  ctx.n = A.size();
  ctx.f.assign(ctx.n, -1);
  ctx.used.assign(ctx.n, 0);
  ctx.cand.assign(ctx.n, std::vector<char>(ctx.n, 0));
  for (Elem a = 0; a < ctx.n; ++a) {
    const auto sa = iso_signature(A, a);
    for (Elem b = 0; b < ctx.n; ++b) ctx.cand[a][b] = sa == iso_signature(B, b) ? 1 : 0;
  }
  if (A.has_zero()) {
    for (Elem b = 0; b < ctx.n; ++b) ctx.cand[A.zero][b] = b == B.zero ? ctx.cand[A.zero][b] : 0;
    for (Elem a = 0; a < ctx.n; ++a)
      if (a != A.zero) ctx.cand[a][B.zero] = 0;
  }
  if (A.has_one()) {
    for (Elem b = 0; b < ctx.n; ++b) ctx.cand[A.one][b] = b == B.one ? ctx.cand[A.one][b] : 0;
    for (Elem a = 0; a < ctx.n; ++a)
      if (a != A.one) ctx.cand[a][B.one] = 0;
  }

  out.found = ctx.search(0);
  out.nodes_explored = ctx.nodes;
  if (out.found) {
    out.map = ctx.f;
    out.detail = "least structure bijection in carrier order";
  } else {
    out.detail = "search exhausted; no structure bijection exists";
  }
  return out;
}

Verdict functor_laws_powerset(const std::vector<TableArrow>& fixtures) {
  Verdict v;
  long long laws = 0;
  for (size_t fi = 0; fi < fixtures.size(); ++fi) {
    const TableArrow& f = fixtures[fi];
    const auto fail = [&](const std::string& what) {
      v.pass = false;
      v.witness = {static_cast<Elem>(fi)};
      v.detail = "fixture " + std::to_string(fi) + ": " + what;
    };
    if (!is_subset_morphism(f).pass) {
      fail("not an inclusion morphism");
      return v;
    }
    const PairArrow ext = powerset_extension(f);

    const PairArrow idext = powerset_extension(table_identity(f.dom));
    if (idext.to != identity_map(idext.dom.size())) {
      fail("identity does not lift to the identity");
      return v;
    }
    ++laws;

    bool recovers = true;
    for (Elem x = 0; x < f.dom.size(); ++x)
      recovers = recovers && ext.to[static_cast<Elem>(bit(x) - 1)] ==
                                 static_cast<Elem>(bit(f.to[x]) - 1);
    if (!recovers) {
      fail("singleton restriction does not recover the base arrow");
      return v;
    }
    ++laws;

    if (!is_preceq_morphism(ext, subset_relation(ext.dom), subset_relation(ext.cod)).pass) {
      fail("lift is not an order morphism");
      return v;
    }
    ++laws;
    if (!is_weak_morphism(ext).pass) {
      fail("lift is not a weak morphism");
      return v;
    }
    ++laws;
    bool nulls = true;
    for (Elem s = 0; s < ext.dom.size(); ++s)
      if (ext.dom.is_null(s)) nulls = nulls && ext.cod.is_null(ext.to[s]);
    if (!nulls) {
      fail("lift leaks the null subsets");
      return v;
    }
    ++laws;

    for (size_t gi = 0; gi < fixtures.size(); ++gi) {
      const TableArrow& g = fixtures[gi];
      if (g.dom.names != f.cod.names) continue;
      const PairArrow lhs = powerset_extension(compose(f, g));
      const PairArrow rhs = compose(ext, powerset_extension(g));
      if (lhs.to != rhs.to) {
        v.pass = false;
        v.witness = {static_cast<Elem>(fi), static_cast<Elem>(gi)};
        v.detail = "composition law fails between fixtures " + std::to_string(fi) + " and " +
                   std::to_string(gi);
        return v;
      }
      ++laws;
    }
  }
  v.detail = std::to_string(laws) + " functor-law instances verified over " +
             std::to_string(fixtures.size()) + " fixtures";
  return v;
}

}  // namespace hyperforge
