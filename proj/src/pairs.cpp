#include "hyperforge/pairs.hpp"

#include <stdexcept>

namespace hyperforge {

namespace {

// Structural sanity shared by every operation; logic errors in user-built
// pairs surface here instead of as out-of-range reads.
void validate_pair(const Pair& P) {
  const size_t n = P.names.size();
  if (n == 0) throw std::invalid_argument("pair: empty carrier");
  if (n > 63) throw std::invalid_argument("pair: carrier larger than 63");
  if (P.star.size() != n * n) throw std::invalid_argument("pair: star table size mismatch");
  if (P.null0.size() != n) throw std::invalid_argument("pair: null flag size mismatch");
  if (!P.mul.empty() && P.mul.size() != n * n)
    throw std::invalid_argument("pair: product table size mismatch");
  if (P.iota < 0 || P.iota >= static_cast<Elem>(n))
    throw std::invalid_argument("pair: iota out of range");
  Elem prev = -1;
  for (Elem t : P.tset) {
    if (t < 0 || t >= static_cast<Elem>(n)) throw std::invalid_argument("pair: T entry out of range");
    if (t <= prev) throw std::invalid_argument("pair: T not strictly ascending");
    prev = t;
  }
  if (P.tpos(P.one) < 0) throw std::invalid_argument("pair: unit not in T");
  if (P.lact.size() != P.tset.size() || P.ract.size() != P.tset.size())
    throw std::invalid_argument("pair: action table row count mismatch");
  for (size_t i = 0; i < P.tset.size(); ++i)
    if (P.lact[i].size() != n || P.ract[i].size() != n)
      throw std::invalid_argument("pair: action table row size mismatch");
  for (const auto* tbl : {&P.star, &P.mul})
    for (Elem v : *tbl)
      if (v < 0 || v >= static_cast<Elem>(n))
        throw std::invalid_argument("pair: table entry out of range");
}

void validate_rel(const Pair& P, const SurpassRel& R) {
  if (R.n != P.size() || R.le.size() != static_cast<size_t>(R.n) * R.n)
    throw std::invalid_argument("surpass relation: size mismatch with pair");
}

std::vector<Elem> null_elems(const Pair& P) {
  std::vector<Elem> out;
  for (Elem a = 0; a < P.size(); ++a)
    if (P.is_null(a)) out.push_back(a);
  return out;
}

}  // namespace

int Pair::tpos(Elem t) const {
  for (int i = 0; i < tcount(); ++i)
    if (tset[i] == t) return i;
  return -1;
}

void derive_actions(Pair& P) {
  if (!P.has_mul()) throw std::invalid_argument("derive_actions: pair has no product table");
  const int n = P.size();
  P.lact.assign(P.tset.size(), {});
  P.ract.assign(P.tset.size(), {});
  for (size_t i = 0; i < P.tset.size(); ++i) {
    P.lact[i].resize(n);
    P.ract[i].resize(n);
    for (Elem b = 0; b < n; ++b) {
      P.lact[i][b] = P.m(P.tset[i], b);
      P.ract[i][b] = P.m(b, P.tset[i]);
    }
  }
}

Pair powerset_pair(const HyperTable& H) {
  if (H.size() > 6) throw std::invalid_argument("powerset_pair: carrier larger than 6");
  if (!H.has_zero()) throw std::invalid_argument("powerset_pair: table has no zero");
  if (!H.has_mul() || !H.has_one())
    throw std::invalid_argument("powerset_pair: table has no unital product");

  const int n = H.size();
  const int N = (1 << n) - 1;  // nonempty subsets; carrier index = mask - 1
  Pair P;
  P.names.resize(N);
  P.psets.resize(N);
  P.null0.assign(N, 0);
  for (int i = 0; i < N; ++i) {
    const ElemSet s = static_cast<ElemSet>(i) + 1;
    P.names[i] = set_str(s, H.names);
    P.psets[i] = s;
    P.null0[i] = contains(s, H.zero) ? 1 : 0;
  }
  P.star.resize(static_cast<size_t>(N) * N);
  P.mul.resize(static_cast<size_t>(N) * N);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      const ElemSet a = static_cast<ElemSet>(i) + 1, b = static_cast<ElemSet>(j) + 1;
      P.star[static_cast<size_t>(i) * N + j] = static_cast<Elem>(hsum_sets(H, a, b) - 1);
      P.mul[static_cast<size_t>(i) * N + j] = static_cast<Elem>(mul_sets(H, a, b) - 1);
    }
  P.iota = static_cast<Elem>(bit(H.zero) - 1);
  P.one = static_cast<Elem>(bit(H.one) - 1);
  for (Elem x = 0; x < n; ++x)
    if (x != H.zero) P.tset.push_back(static_cast<Elem>(bit(x) - 1));
  derive_actions(P);
  return P;
}

Pair infinity_pair(const FinMonoid& T) {
  const int k = T.size();
  const int n = k + 2;
  if (n > 63) throw std::invalid_argument("infinity_pair: monoid too large");
  const Elem z = 0, top = static_cast<Elem>(n - 1);

  Pair P;
  P.names.reserve(n);
  P.names.push_back("0");
  for (const auto& s : T.names) P.names.push_back(s);
  P.names.push_back("inf");

  // zero is neutral; any two nonzero elements collide into the top.
  P.star.assign(static_cast<size_t>(n) * n, top);
  for (Elem a = 0; a < n; ++a) {
    P.star[static_cast<size_t>(z) * n + a] = a;
    P.star[static_cast<size_t>(a) * n + z] = a;
  }

  // zero absorbs everything (including the top); the top absorbs the rest.
  P.mul.assign(static_cast<size_t>(n) * n, z);
  for (Elem a = 1; a < n; ++a) {
    P.mul[static_cast<size_t>(a) * n + top] = top;
    P.mul[static_cast<size_t>(top) * n + a] = top;
  }
  for (Elem i = 0; i < k; ++i)
    for (Elem j = 0; j < k; ++j)
      P.mul[static_cast<size_t>(i + 1) * n + (j + 1)] = T.mul(i, j) + 1;

  P.iota = z;
  for (Elem i = 0; i < k; ++i) P.tset.push_back(i + 1);
  P.one = T.neutral + 1;
  P.null0.assign(n, 0);
  P.null0[z] = 1;
  P.null0[top] = 1;
  derive_actions(P);
  return P;
}

AxiomReport check_pair_axioms(const Pair& P) {
  validate_pair(P);
  const int n = P.size();
  const int tc = P.tcount();
  AxiomReport rep;

  AxiomCheck inull{"iota-null", true, true, {}, "", 0};
  inull.tuples_checked = 1;
  if (!P.is_null(P.iota)) {
    inull.pass = false;
    inull.witness = {P.iota};
    inull.detail = P.names[P.iota] + " is not null";
  }
  rep.add(inull);

  AxiomCheck ineu{"iota-neutral", true, true, {}, "", 0};
  for (Elem b = 0; b < n && ineu.pass; ++b) {
    ++ineu.tuples_checked;
    if (P.st(P.iota, b) != b || P.st(b, P.iota) != b) {
      ineu.pass = false;
      ineu.witness = {b};
      ineu.detail = "pairing with " + P.names[b] + " moves it";
    }
  }
  rep.add(ineu);

  AxiomCheck tunit{"t-unit", true, true, {}, "", 0};
  const int onep = P.tpos(P.one);
  for (Elem b = 0; b < n && tunit.pass; ++b) {
    ++tunit.tuples_checked;
    if (P.la(onep, b) != b || P.ra(onep, b) != b) {
      tunit.pass = false;
      tunit.witness = {P.one, b};
      tunit.detail = "unit action moves " + P.names[b];
    }
  }
  rep.add(tunit);

  AxiomCheck tclosed{"t-closed", true, true, {}, "", 0};
  for (int i = 0; i < tc && tclosed.pass; ++i)
    for (int j = 0; j < tc && tclosed.pass; ++j) {
      ++tclosed.tuples_checked;
      const Elem p = P.la(i, P.tset[j]);
      if (P.tpos(p) < 0) {
        tclosed.pass = false;
        tclosed.witness = {P.tset[i], P.tset[j], p};
        tclosed.detail = P.names[P.tset[i]] + "*" + P.names[P.tset[j]] + " = " + P.names[p] +
                         " leaves T";
      }
    }
  rep.add(tclosed);

  // Biset laws; products that already escaped T are skipped (reported above).
  AxiomCheck tassoc{"t-associative", true, true, {}, "", 0};
  for (int i = 0; i < tc && tassoc.pass; ++i)
    for (int j = 0; j < tc && tassoc.pass; ++j) {
      const int pij = P.tpos(P.la(i, P.tset[j]));
      if (pij < 0) continue;
      for (Elem b = 0; b < n && tassoc.pass; ++b) {
        ++tassoc.tuples_checked;
        const bool left = P.la(pij, b) == P.la(i, P.la(j, b));
        const bool right = P.ra(pij, b) == P.ra(j, P.ra(i, b));
        const bool mixed = P.ra(j, P.la(i, b)) == P.la(i, P.ra(j, b));
        if (!left || !right || !mixed) {
          tassoc.pass = false;
          tassoc.witness = {P.tset[i], P.tset[j], b};
          tassoc.detail = !left ? "left action not associative"
                                : (!right ? "right action not associative"
                                          : "actions do not commute past the carrier");
        }
      }
    }
  rep.add(tassoc);

  AxiomCheck nabs{"null-absorbing", true, true, {}, "", 0};
  for (int i = 0; i < tc && nabs.pass; ++i)
    for (Elem b = 0; b < n && nabs.pass; ++b) {
      if (!P.is_null(b)) continue;
      ++nabs.tuples_checked;
      if (!P.is_null(P.la(i, b)) || !P.is_null(P.ra(i, b))) {
        nabs.pass = false;
        nabs.witness = {P.tset[i], b};
        nabs.detail = "action of " + P.names[P.tset[i]] + " pushes " + P.names[b] +
                      " outside the nulls";
      }
    }
  rep.add(nabs);

  AxiomCheck adist{"action-distributive", true, true, {}, "", 0};
  for (int i = 0; i < tc && adist.pass; ++i)
    for (Elem b1 = 0; b1 < n && adist.pass; ++b1)
      for (Elem b2 = 0; b2 < n && adist.pass; ++b2) {
        ++adist.tuples_checked;
        const bool left = P.la(i, P.st(b1, b2)) == P.st(P.la(i, b1), P.la(i, b2));
        const bool right = P.ra(i, P.st(b1, b2)) == P.st(P.ra(i, b1), P.ra(i, b2));
        if (!left || !right) {
          adist.pass = false;
          adist.witness = {P.tset[i], b1, b2};
          adist.detail = std::string(left ? "right" : "left") + " action fails to distribute";
        }
      }
  rep.add(adist);

  if (P.has_mul()) {
    AxiomCheck acons{"action-matches-product", true, true, {}, "", 0};
    for (int i = 0; i < tc && acons.pass; ++i)
      for (Elem b = 0; b < n && acons.pass; ++b) {
        ++acons.tuples_checked;
        if (P.la(i, b) != P.m(P.tset[i], b) || P.ra(i, b) != P.m(b, P.tset[i])) {
          acons.pass = false;
          acons.witness = {P.tset[i], b};
          acons.detail = "action tables disagree with the product";
        }
      }
    rep.add(acons);
  }

  return rep;
}

SurpassRel subset_relation(const Pair& P) {
  validate_pair(P);
  if (P.psets.size() != P.names.size())
    throw std::invalid_argument("subset_relation: pair has no power-set backing");
  const int n = P.size();
  SurpassRel R{"subset", n, std::vector<char>(static_cast<size_t>(n) * n, 0)};
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      R.le[static_cast<size_t>(a) * n + b] = (P.psets[a] & ~P.psets[b]) == 0 ? 1 : 0;
  return R;
}

SurpassRel null_step_relation(const Pair& P) {
  validate_pair(P);
  const int n = P.size();
  SurpassRel R{"null-step", n, std::vector<char>(static_cast<size_t>(n) * n, 0)};
  const auto nulls = null_elems(P);
  for (Elem a = 0; a < n; ++a)
    for (Elem c : nulls) R.le[static_cast<size_t>(a) * n + P.st(a, c)] = 1;
  return R;
}

SurpassRel equality_relation(const Pair& P) {
  validate_pair(P);
  const int n = P.size();
  SurpassRel R{"equality", n, std::vector<char>(static_cast<size_t>(n) * n, 0)};
  for (Elem a = 0; a < n; ++a) R.le[static_cast<size_t>(a) * n + a] = 1;
  return R;
}

AxiomReport check_surpassing(const Pair& P, const SurpassRel& R) {
  validate_pair(P);
  validate_rel(P, R);
  const int n = P.size();
  AxiomReport rep;

  AxiomCheck refl{"reflexive", true, true, {}, "", 0};
  for (Elem a = 0; a < n && refl.pass; ++a) {
    ++refl.tuples_checked;
    if (!R.at(a, a)) {
      refl.pass = false;
      refl.witness = {a};
      refl.detail = P.names[a] + " does not surpass itself";
    }
  }
  rep.add(refl);

  AxiomCheck trans{"transitive", true, true, {}, "", 0};
  for (Elem a = 0; a < n && trans.pass; ++a)
    for (Elem b = 0; b < n && trans.pass; ++b) {
      if (!R.at(a, b)) continue;
      for (Elem c = 0; c < n && trans.pass; ++c) {
        if (!R.at(b, c)) continue;
        ++trans.tuples_checked;
        if (!R.at(a, c)) {
          trans.pass = false;
          trans.witness = {a, b, c};
          trans.detail = "chain through " + P.names[b] + " breaks";
        }
      }
    }
  rep.add(trans);

  // On T together with iota the relation must collapse to equality.
  AxiomCheck disc{"units-discrete", true, true, {}, "", 0};
  std::vector<Elem> tu = P.tset;
  if (P.tpos(P.iota) < 0) tu.push_back(P.iota);
  for (Elem a : tu)
    for (Elem b : tu) {
      if (!disc.pass) break;
      ++disc.tuples_checked;
      if (R.at(a, b) && a != b) {
        disc.pass = false;
        disc.witness = {a, b};
        disc.detail = P.names[a] + " surpassed by " + P.names[b] + " inside T";
      }
    }
  rep.add(disc);

  AxiomCheck step{"null-step-dominates", true, true, {}, "", 0};
  for (Elem b = 0; b < n && step.pass; ++b)
    for (Elem c = 0; c < n && step.pass; ++c) {
      if (!P.is_null(c)) continue;
      ++step.tuples_checked;
      if (!R.at(b, P.st(b, c))) {
        step.pass = false;
        step.witness = {b, c};
        step.detail = P.names[b] + " not below its null bump by " + P.names[c];
      }
    }
  rep.add(step);

  AxiomCheck imin{"iota-minimal", true, true, {}, "", 0};
  for (Elem b = 0; b < n && imin.pass; ++b) {
    ++imin.tuples_checked;
    if (R.at(b, P.iota) && b != P.iota) {
      imin.pass = false;
      imin.witness = {b};
      imin.detail = P.names[b] + " sits below iota";
    }
  }
  rep.add(imin);

  AxiomCheck nai{"nulls-above-iota", true, true, {}, "", 0};
  for (Elem c = 0; c < n && nai.pass; ++c) {
    if (!P.is_null(c)) continue;
    ++nai.tuples_checked;
    if (!R.at(P.iota, c)) {
      nai.pass = false;
      nai.witness = {c};
      nai.detail = "null element " + P.names[c] + " does not surpass iota";
    }
  }
  rep.add(nai);

  return rep;
}

AxiomReport check_preceq_distributive(const Pair& P, const SurpassRel& R) {
  validate_pair(P);
  validate_rel(P, R);
  if (!P.has_mul())
    throw std::invalid_argument("check_preceq_distributive: pair has no product table");
  const int n = P.size();
  AxiomReport rep;

  AxiomCheck lft{"left-distributive-up-to-surpassing", true, true, {}, "", 0};
  AxiomCheck rgt{"right-distributive-up-to-surpassing", true, true, {}, "", 0};
  for (Elem b = 0; b < n; ++b)
    for (Elem b1 = 0; b1 < n; ++b1)
      for (Elem b2 = 0; b2 < n; ++b2) {
        const Elem s = P.st(b1, b2);
        if (lft.pass) {
          ++lft.tuples_checked;
          if (!R.at(P.m(b, s), P.st(P.m(b, b1), P.m(b, b2)))) {
            lft.pass = false;
            lft.witness = {b, b1, b2};
            lft.detail = P.names[b] + "*(" + P.names[b1] + "+" + P.names[b2] +
                         ") not surpassed by the spread product";
          }
        }
        if (rgt.pass) {
          ++rgt.tuples_checked;
          if (!R.at(P.m(s, b), P.st(P.m(b1, b), P.m(b2, b)))) {
            rgt.pass = false;
            rgt.witness = {b, b1, b2};
            rgt.detail = "(" + P.names[b1] + "+" + P.names[b2] + ")*" + P.names[b] +
                         " not surpassed by the spread product";
          }
        }
      }
  rep.add(lft);
  rep.add(rgt);
  return rep;
}

std::vector<Elem> a_null(const Pair& P, const SurpassRel& R) {
  validate_pair(P);
  validate_rel(P, R);
  std::vector<Elem> out;
  for (Elem c = 0; c < P.size(); ++c)
    if (R.at(P.iota, c)) out.push_back(c);
  return out;
}

RelCompare compare_relations(const SurpassRel& A, const SurpassRel& B) {
  if (A.n != B.n) throw std::invalid_argument("compare_relations: size mismatch");
  RelCompare out;
  for (Elem a = 0; a < A.n; ++a)
    for (Elem b = 0; b < A.n; ++b) {
      if (A.at(a, b) && !B.at(a, b) && out.left_in_right) {
        out.left_in_right = false;
        out.witness_lr = {a, b};
      }
      if (B.at(a, b) && !A.at(a, b) && out.right_in_left) {
        out.right_in_left = false;
        out.witness_rl = {a, b};
      }
    }
  return out;
}

PropertyN check_property_N(const Pair& P) {
  validate_pair(P);
  PropertyN out;
  out.dagger.assign(P.tcount(), -1);
  out.circ.assign(P.tcount(), -1);
  out.holds = true;
  for (int i = 0; i < P.tcount() && out.holds; ++i) {
    const Elem a = P.tset[i];
    for (Elem b : P.tset) {
      const Elem p = P.st(a, b);
      if (!P.is_null(p)) continue;
      if (out.dagger[i] < 0) {
        out.dagger[i] = b;
        out.circ[i] = p;
      } else if (p != out.circ[i]) {
        out.holds = false;
        out.verdict.witness = {a, out.dagger[i], b};
        out.verdict.detail = P.names[a] + " has null pairings " + P.names[out.circ[i]] +
                             " and " + P.names[p] + " via different partners";
        break;
      }
    }
    if (out.holds && out.dagger[i] < 0) {
      out.holds = false;
      out.verdict.witness = {a};
      out.verdict.detail = P.names[a] + " has no quasi-negative in T";
    }
  }
  out.verdict.pass = out.holds;
  if (out.holds)
    out.verdict.detail = "every tangible element has a quasi-negative with a unique null pairing";
  return out;
}

NegationMap negation_map(const Pair& P) {
  validate_pair(P);
  NegationMap out;
  int candidates = 0;
  for (Elem t : P.tset) {
    if (!P.is_null(P.st(P.one, t))) continue;
    ++candidates;
    const int tp = P.tpos(t);
    std::vector<Elem> img(P.tcount());
    bool ok = true;
    for (int i = 0; i < P.tcount() && ok; ++i) {
      img[i] = P.ra(tp, P.tset[i]);
      ok = P.tpos(img[i]) >= 0 && P.is_null(P.st(P.tset[i], img[i])) &&
           P.is_null(P.st(img[i], P.tset[i]));
    }
    for (int i = 0; i < P.tcount() && ok; ++i)
      ok = img[P.tpos(img[i])] == P.tset[i];  // involution on T
    if (ok) {
      out.found = true;
      out.via = t;
      out.image = std::move(img);
      out.detail = "negation is the right action of " + P.names[t];
      return out;
    }
  }
  out.detail = std::to_string(candidates) +
               " candidate(s) pair the unit into the nulls; none is an involutive absorber";
  return out;
}

Verdict is_uniquely_negated(const Pair& P) {
  validate_pair(P);
  Verdict v;
  int lacking = 0;
  for (Elem a : P.tset) {
    Elem first = -1;
    for (Elem b : P.tset) {
      if (!P.is_null(P.st(a, b))) continue;
      if (first < 0) {
        first = b;
      } else {
        v.pass = false;
        v.witness = {a, first, b};
        v.detail = P.names[a] + " is negated by both " + P.names[first] + " and " + P.names[b];
        return v;
      }
    }
    if (first < 0) ++lacking;
  }
  v.detail = "no tangible element has two quasi-negatives";
  if (lacking > 0) v.detail += " (" + std::to_string(lacking) + " have none)";
  return v;
}

}  // namespace hyperforge
