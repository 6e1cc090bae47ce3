#include "hyperforge/quotient.hpp"

#include <algorithm>
#include <stdexcept>

namespace hyperforge {

namespace {

std::string wrap(const std::string& s) {
  return s.find('+') == std::string::npos ? s : "(" + s + ")";
}

// Partitions 0..n-1 by orbit(b); throws if orbits overlap without agreeing.
CosetSpace partition_by(int n, const std::function<ElemSet(Elem)>& orbit, const char* what) {
  CosetSpace sp;
  sp.coset_of.assign(n, -1);
  for (Elem b = 0; b < n; ++b) {
    if (sp.coset_of[b] != -1) continue;
    ElemSet cls = orbit(b);
    if (!contains(cls, b)) throw std::invalid_argument(std::string(what) + ": class misses its seed");
    for (Elem x : set_elems(cls)) {
      if (sp.coset_of[x] != -1 || orbit(x) != cls)
        throw std::invalid_argument(std::string(what) + ": classes do not partition the carrier");
      sp.coset_of[x] = sp.size();
    }
    sp.cosets.push_back(cls);
    sp.rep.push_back(b);
  }
  return sp;
}

void require_unit_subgroup(const FinRing& R, const Subgroup& G) {
  if (G.kind != SubKind::multiplicative) throw std::invalid_argument("subgroup must be multiplicative");
  if ((G.members & ~R.unit_set()) != 0) throw std::invalid_argument("subgroup contains a non-unit");
  if (!contains(G.members, R.one)) throw std::invalid_argument("subgroup misses 1");
  for (Elem g : set_elems(G.members))
    for (Elem h : set_elems(G.members))
      if (!contains(G.members, R.m(g, h))) throw std::invalid_argument("subgroup not closed");
}

ElemSet left_mul_set(const FinRing& R, ElemSet S, Elem b) {  // bS
  ElemSet out = 0;
  for (Elem s : set_elems(S)) out |= bit(R.m(b, s));
  return out;
}

ElemSet right_mul_set(const FinRing& R, ElemSet S, Elem b) {  // Sb
  ElemSet out = 0;
  for (Elem s : set_elems(S)) out |= bit(R.m(s, b));
  return out;
}

}  // namespace

Quotient krasner_quotient(const FinRing& R, const Subgroup& G) {
  require_unit_subgroup(R, G);
  for (Elem b = 0; b < R.size(); ++b)
    if (left_mul_set(R, G.members, b) != right_mul_set(R, G.members, b))
      throw std::invalid_argument("subgroup is not normalized by the base");

  auto orbit = [&](Elem b) { return right_mul_set(R, G.members, b); };  // bG
  CosetSpace sp = partition_by(R.size(), orbit, "residue");

  const int n = sp.size();
  std::vector<std::string> names(n);
  for (int i = 0; i < n; ++i)
    names[i] = sp.rep[i] == R.zero ? R.names[R.zero] : wrap(R.names[sp.rep[i]]) + "G";

  std::vector<Elem> mul(static_cast<size_t>(n) * n);
  std::vector<ElemSet> hsum(static_cast<size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Elem prod = sp.coset_of[R.m(sp.rep[i], sp.rep[j])];
      for (Elem x : set_elems(sp.cosets[i]))
        for (Elem y : set_elems(sp.cosets[j])) {
          if (sp.coset_of[R.m(x, y)] != prod)
            throw std::invalid_argument("residue product not well-defined");
          hsum[static_cast<size_t>(i) * n + j] |= bit(sp.coset_of[R.a(x, y)]);
        }
      mul[static_cast<size_t>(i) * n + j] = prod;
    }

  HyperTable tbl = make_hypertable(std::move(names), std::move(hsum), std::move(mul),
                                   sp.coset_of[R.zero], sp.coset_of[R.one]);
  return Quotient{std::move(tbl), std::move(sp)};
}

FinModule module_of_ring(const FinRing& R) {
  FinMonoid add;
  add.names = R.names;
  add.op = R.add;
  add.neutral = R.zero;
  UnitsMonoid um = units_monoid(R);
  std::vector<Elem> act(static_cast<size_t>(um.monoid.size()) * R.size());
  for (int t = 0; t < um.monoid.size(); ++t)
    for (Elem m = 0; m < R.size(); ++m)
      act[static_cast<size_t>(t) * R.size() + m] = R.m(um.ring_elem[t], m);
  return FinModule{std::move(add), std::move(um.monoid), std::move(act)};
}

QuotientModule quotient_hypermodule(const FinModule& M, ElemSet G) {
  ResidueMonoid tbar = residue_monoid(M.t, G);  // checks G normal submonoid of t

  auto orbit = [&](Elem b) {
    ElemSet out = 0;
    for (Elem g : set_elems(G)) out |= bit(M.apply(g, b));
    return out;
  };
  CosetSpace sp = partition_by(M.msize(), orbit, "module residue");

  const int n = sp.size();
  std::vector<std::string> names(n);
  for (int i = 0; i < n; ++i)
    names[i] = sp.rep[i] == M.add.neutral ? M.add.names[M.add.neutral]
                                          : wrap(M.add.names[sp.rep[i]]) + "G";

  std::vector<ElemSet> hsum(static_cast<size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (Elem x : set_elems(sp.cosets[i]))
        for (Elem y : set_elems(sp.cosets[j]))
          hsum[static_cast<size_t>(i) * n + j] |= bit(sp.coset_of[M.add.mul(x, y)]);

  // induced action of t/G, checked well-defined across both coset choices
  const int nt = tbar.monoid.size();
  std::vector<Elem> act(static_cast<size_t>(nt) * n, -1);
  for (int tc = 0; tc < nt; ++tc)
    for (int i = 0; i < n; ++i) {
      Elem image = -1;
      for (Elem t : set_elems(tbar.cosets[tc]))
        for (Elem x : set_elems(sp.cosets[i])) {
          Elem c = sp.coset_of[M.apply(t, x)];
          if (image == -1) image = c;
          else if (image != c) throw std::invalid_argument("induced action not well-defined");
        }
      act[static_cast<size_t>(tc) * n + i] = image;
    }

  HyperTable tbl = make_hypertable(std::move(names), std::move(hsum), {},
                                   sp.coset_of[M.add.neutral], -1);
  return QuotientModule{std::move(tbl), std::move(sp), std::move(tbar), std::move(act)};
}

Quotient coset_hypermonoid(const FinMonoid& M, ElemSet G, CosetMode mode) {
  if (!contains(G, M.neutral)) throw std::invalid_argument("submonoid misses the neutral");
  for (Elem g : set_elems(G))
    for (Elem h : set_elems(G))
      if (!contains(G, M.mul(g, h))) throw std::invalid_argument("submonoid not closed");

  auto orbit = [&](Elem b) {
    ElemSet out = 0;
    if (mode == CosetMode::right) {
      for (Elem g : set_elems(G)) out |= bit(M.mul(b, g));
    } else {
      for (Elem g : set_elems(G))
        for (Elem h : set_elems(G)) out |= bit(M.mul(M.mul(g, b), h));
    }
    return out;
  };
  CosetSpace sp = partition_by(M.size(), orbit, "coset space");

  const int n = sp.size();
  std::vector<std::string> names(n);
  for (int i = 0; i < n; ++i) {
    std::string r = wrap(M.names[sp.rep[i]]);
    names[i] = mode == CosetMode::right ? r + "G" : "G" + r + "G";
  }

  std::vector<ElemSet> hsum(static_cast<size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (Elem x : set_elems(sp.cosets[i]))
        for (Elem y : set_elems(sp.cosets[j]))
          hsum[static_cast<size_t>(i) * n + j] |= bit(sp.coset_of[M.mul(x, y)]);

  HyperTable tbl = make_hypertable(std::move(names), std::move(hsum), {}, -1,
                                   sp.coset_of[M.neutral]);
  return Quotient{std::move(tbl), std::move(sp)};
}

namespace {

MHyperRing additive_residue(const FinRing& R, ElemSet L, const std::string& tag) {
  if (!contains(L, R.zero)) throw std::invalid_argument("additive subgroup misses 0");
  for (Elem x : set_elems(L))
    for (Elem y : set_elems(L))
      if (!contains(L, R.a(x, y))) throw std::invalid_argument("additive subgroup not closed");

  auto orbit = [&](Elem b) {
    ElemSet out = 0;
    for (Elem l : set_elems(L)) out |= bit(R.a(b, l));
    return out;
  };
  CosetSpace sp = partition_by(R.size(), orbit, "additive residue");

  MHyperRing M;
  M.cosets = sp.cosets;
  M.coset_of = sp.coset_of;
  M.rep = sp.rep;
  const int n = sp.size();
  M.names.resize(n);
  for (int i = 0; i < n; ++i) M.names[i] = wrap(R.names[sp.rep[i]]) + "+" + tag;
  M.add.resize(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      M.add[static_cast<size_t>(i) * n + j] = sp.coset_of[R.a(sp.rep[i], sp.rep[j])];
  M.hmul.assign(static_cast<size_t>(n) * n, 0);
  M.zero = sp.coset_of[R.zero];
  M.one = sp.coset_of[R.one];
  return M;
}

}  // namespace

MHyperRing m_hyperring(const FinRing& R, ElemSet L) {
  for (Elem r = 0; r < R.size(); ++r)
    for (Elem l : set_elems(L))
      if (!contains(L, R.m(r, l))) throw std::invalid_argument("not a left ideal");

  MHyperRing M = additive_residue(R, L, "L");
  const int n = M.size();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      ElemSet out = 0;
      for (Elem a : set_elems(L))
        out |= bit(M.coset_of[R.m(R.a(M.rep[i], a), M.rep[j])]);
      M.hmul[static_cast<size_t>(i) * n + j] = out;
    }
  return M;
}

MHyperRing m_hyper_from_additive_subgroup(const FinRing& S, ElemSet G) {
  MHyperRing M = additive_residue(S, G, "G");
  const int n = M.size();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Elem r1 = M.rep[i], r2 = M.rep[j];
      ElemSet out = 0;
      for (Elem g1 : set_elems(G))
        for (Elem g2 : set_elems(G))
          out |= bit(M.coset_of[S.a(S.a(S.m(r1, r2), S.m(r1, g1)), S.m(g2, r2))]);
      M.hmul[static_cast<size_t>(i) * n + j] = out;
    }
  return M;
}

namespace {

ElemSet hmul_sets(const MHyperRing& M, ElemSet s1, ElemSet s2) {
  ElemSet out = 0;
  for (Elem x : set_elems(s1))
    for (Elem y : set_elems(s2)) out |= M.hm(x, y);
  return out;
}

}  // namespace

AxiomReport check_mhyperring(const MHyperRing& M) {
  AxiomReport rep;
  const int n = M.size();

  AxiomCheck grp{"add-abelian-group", true, true, {}, "", 0};
  for (Elem x = 0; x < n && grp.pass; ++x) {
    ++grp.tuples_checked;
    if (M.a(M.zero, x) != x) { grp.pass = false; grp.witness = {x}; }
    bool has_neg = false;
    for (Elem y = 0; y < n; ++y) has_neg = has_neg || M.a(x, y) == M.zero;
    if (!has_neg) { grp.pass = false; grp.witness = {x}; }
    for (Elem y = 0; y < n && grp.pass; ++y) {
      if (M.a(x, y) != M.a(y, x)) { grp.pass = false; grp.witness = {x, y}; }
      for (Elem z = 0; z < n && grp.pass; ++z)
        if (M.a(M.a(x, y), z) != M.a(x, M.a(y, z))) { grp.pass = false; grp.witness = {x, y, z}; }
    }
  }
  rep.add(grp);

  AxiomCheck nonempty{"hmul-nonempty", true, true, {}, "", 0};
  for (Elem x = 0; x < n && nonempty.pass; ++x)
    for (Elem y = 0; y < n; ++y) {
      ++nonempty.tuples_checked;
      if (M.hm(x, y) == 0) { nonempty.pass = false; nonempty.witness = {x, y}; break; }
    }
  rep.add(nonempty);

  AxiomCheck assoc{"hmul-associativity", true, false, {}, "informational", 0};
  for (Elem x = 0; x < n && assoc.pass; ++x)
    for (Elem y = 0; y < n && assoc.pass; ++y)
      for (Elem z = 0; z < n; ++z) {
        ++assoc.tuples_checked;
        if (hmul_sets(M, M.hm(x, y), bit(z)) != hmul_sets(M, bit(x), M.hm(y, z))) {
          assoc.pass = false;
          assoc.witness = {x, y, z};
          break;
        }
      }
  rep.add(assoc);

  AxiomCheck lunit{"hmul-left-unit", true, false, {}, "informational", 0};
  AxiomCheck runit{"hmul-right-unit", true, false, {}, "informational", 0};
  for (Elem x = 0; x < n; ++x) {
    ++lunit.tuples_checked;
    ++runit.tuples_checked;
    if (lunit.pass && M.hm(M.one, x) != bit(x)) { lunit.pass = false; lunit.witness = {x}; }
    if (runit.pass && M.hm(x, M.one) != bit(x)) { runit.pass = false; runit.witness = {x}; }
  }
  rep.add(lunit);
  rep.add(runit);
  return rep;
}

Verdict check_mhyper_distributive(const MHyperRing& M) {
  const int n = M.size();
  for (Elem i = 0; i < n; ++i)
    for (Elem j = 0; j < n; ++j)
      for (Elem k = 0; k < n; ++k) {
        ElemSet lhs = M.hm(i, M.a(j, k));
        ElemSet rhs = 0;
        for (Elem c : set_elems(M.hm(i, j)))
          for (Elem d : set_elems(M.hm(i, k))) rhs |= bit(M.a(c, d));
        if ((lhs & ~rhs) != 0)
          return Verdict{false, "left factor " + M.names[i] + " over " + M.names[j] + "+" +
                                    M.names[k], {i, j, k}};
      }
  return Verdict{};
}

ElemSet e_element(const HyperTable& Q) {
  if (!Q.has_one() || !Q.has_zero()) throw std::invalid_argument("table needs zero and one");
  auto neg = hypernegative(Q, Q.one);
  if (!neg) throw std::invalid_argument("1 has no unique hypernegative");
  return Q.hs(Q.one, *neg);
}

Verdict check_ee_identity(const FinRing& R, const Subgroup& G) {
  Quotient Q = krasner_quotient(R, G);
  if (!contains(G.members, R.neg(R.one)))
    return Verdict{true, "skipped: -1 outside the subgroup", {}};

  ElemSet diffs = 0;  // {g1 - g2}
  for (Elem g1 : set_elems(G.members))
    for (Elem g2 : set_elems(G.members)) diffs |= bit(R.a(g1, R.neg(g2)));
  ElemSet scaled = 0;  // {(g1 - g2) g3}
  for (Elem d : set_elems(diffs))
    for (Elem g : set_elems(G.members)) scaled |= bit(R.m(d, g));

  auto classes_of = [&](ElemSet base) {
    ElemSet out = 0;
    for (Elem x : set_elems(base)) out |= bit(Q.space.coset_of[x]);
    return out;
  };

  // product side: union over x,y of the residue hypersum [x] + [y]
  ElemSet prod_side = 0;
  for (Elem x : set_elems(scaled))
    for (Elem y : set_elems(scaled))
      prod_side |= Q.table.hs(Q.space.coset_of[x], Q.space.coset_of[y]);

  // difference side: classes of (G-G) - (G-G)
  ElemSet diff_base = 0;
  for (Elem d1 : set_elems(diffs))
    for (Elem d2 : set_elems(diffs)) diff_base |= bit(R.a(d1, R.neg(d2)));
  ElemSet diff_side = classes_of(diff_base);

  ElemSet table_side = hsum_sets(Q.table, e_element(Q.table), e_element(Q.table));

  if (prod_side == diff_side && diff_side == table_side)
    return Verdict{true,
                   "e*e = " + set_str(table_side, Q.table.names) + " under all three readings",
                   {}};
  return Verdict{false,
                 "product side " + set_str(prod_side, Q.table.names) + ", difference side " +
                     set_str(diff_side, Q.table.names) + ", table side " +
                     set_str(table_side, Q.table.names),
                 {}};
}

Quotient hypertable_quotient(const HyperTable& H, ElemSet U) {
  if (!H.has_mul() || !H.has_one()) throw std::invalid_argument("table needs mul and one");
  if (!contains(U, H.one)) throw std::invalid_argument("unit subgroup misses 1");
  for (Elem u : set_elems(U)) {
    bool invertible = false;
    for (Elem v : set_elems(U))
      invertible = invertible || (H.m(u, v) == H.one && H.m(v, u) == H.one);
    if (!invertible) throw std::invalid_argument("subgroup member lacks an inverse inside it");
    for (Elem v : set_elems(U))
      if (!contains(U, H.m(u, v))) throw std::invalid_argument("unit subgroup not closed");
  }

  auto orbit = [&](Elem b) {
    ElemSet out = 0;
    for (Elem u : set_elems(U)) out |= bit(H.m(b, u));
    return out;
  };
  CosetSpace sp = partition_by(H.size(), orbit, "table residue");

  const int n = sp.size();
  std::vector<std::string> names(n);
  for (int i = 0; i < n; ++i)
    names[i] = (H.has_zero() && sp.rep[i] == H.zero) ? H.names[H.zero]
                                                     : wrap(H.names[sp.rep[i]]) + "U";

  std::vector<Elem> mul(static_cast<size_t>(n) * n);
  std::vector<ElemSet> hsum(static_cast<size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Elem prod = sp.coset_of[H.m(sp.rep[i], sp.rep[j])];
      for (Elem x : set_elems(sp.cosets[i]))
        for (Elem y : set_elems(sp.cosets[j])) {
          if (sp.coset_of[H.m(x, y)] != prod)
            throw std::invalid_argument("table residue product not well-defined");
          for (Elem s : set_elems(H.hs(x, y)))
            hsum[static_cast<size_t>(i) * n + j] |= bit(sp.coset_of[s]);
        }
      mul[static_cast<size_t>(i) * n + j] = prod;
    }

  HyperTable tbl = make_hypertable(std::move(names), std::move(hsum), std::move(mul),
                                   H.has_zero() ? sp.coset_of[H.zero] : -1, sp.coset_of[H.one]);
  return Quotient{std::move(tbl), std::move(sp)};
}

SampledQuotient sampled_quotient(const std::vector<Rat>& transversal,
                                 const std::vector<std::string>& names,
                                 const std::function<bool(const Rat&)>& in_subgroup,
                                 const std::function<int(const Rat&)>& coset_index,
                                 int budget,
                                 const std::vector<ElemSet>* expected) {
  const int n = static_cast<int>(transversal.size());
  if (n < 1 || n > kMaxCarrier) throw std::invalid_argument("transversal size out of range");
  if (names.size() != transversal.size()) throw std::invalid_argument("name count mismatch");
  if (expected && expected->size() != static_cast<size_t>(n) * n)
    throw std::invalid_argument("expected table shape");

  SampledQuotient out;
  out.names = names;
  out.hsum.assign(static_cast<size_t>(n) * n, 0);

  // canonical rational grid: denominators small-first, numerators 0,1,-1,2,-2,...
  std::vector<Rat> gs;
  for (int den = 1; den <= 8 && static_cast<int>(gs.size()) < budget; ++den)
    for (int k = 0; k <= 64 && static_cast<int>(gs.size()) < budget; ++k) {
      int num = (k % 2 == 1) ? (k + 1) / 2 : -(k / 2);
      if (num == 0 && den > 1) continue;
      Rat r{num, den};
      if (r.den != den) continue;  // already visited in reduced form
      if (in_subgroup(r)) gs.push_back(r);
    }

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (const Rat& g1 : gs)
        for (const Rat& g2 : gs) {
          Rat s = g1 * transversal[i] + g2 * transversal[j];
          int c = coset_index(s);
          if (c < 0 || c >= n) throw std::invalid_argument("sample escapes the transversal classes");
          ++out.samples_used;
          if (expected && !contains((*expected)[static_cast<size_t>(i) * n + j], c))
            throw std::runtime_error("unexpected witness: class " + names[c] + " in " + names[i] +
                                     " + " + names[j]);
          out.hsum[static_cast<size_t>(i) * n + j] |= bit(c);
        }

  if (out.samples_used == 0) {
    out.expected_match = Verdict{expected == nullptr, "no witnesses", {}};
    return out;
  }
  if (!expected) {
    out.expected_match = Verdict{true, "sample-sound; no expected table supplied", {}};
    return out;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      ElemSet want = (*expected)[static_cast<size_t>(i) * n + j];
      ElemSet got = out.hsum[static_cast<size_t>(i) * n + j];
      if (want != got) {
        out.expected_match =
            Verdict{false,
                    "unwitnessed-expected: " + names[i] + " + " + names[j] + " expected " +
                        set_str(want, names) + ", witnessed " + set_str(got, names),
                    {i, j}};
        return out;
      }
    }
  out.expected_match = Verdict{true, "all expected classes witnessed", {}};
  return out;
}

}  // namespace hyperforge
