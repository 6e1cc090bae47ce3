#include "hyperforge/hyperstruct.hpp"

#include <random>
#include <stdexcept>

namespace hyperforge {

HyperTable make_hypertable(std::vector<std::string> names, std::vector<ElemSet> hsum,
                           std::vector<Elem> mul, Elem zero, Elem one) {
  const int n = static_cast<int>(names.size());
  if (n < 1 || n > kMaxCarrier) throw std::invalid_argument("carrier size out of range");
  if (hsum.size() != static_cast<size_t>(n) * n) throw std::invalid_argument("hsum shape");
  const ElemSet all = full_set(n);
  for (ElemSet s : hsum) {
    if (s == 0) throw std::invalid_argument("empty hypersum entry");
    if ((s & ~all) != 0) throw std::invalid_argument("hypersum entry out of range");
  }
  if (!mul.empty()) {
    if (mul.size() != static_cast<size_t>(n) * n) throw std::invalid_argument("mul shape");
    for (Elem x : mul)
      if (x < 0 || x >= n) throw std::invalid_argument("mul entry out of range");
  }
  if (zero < -1 || zero >= n) throw std::invalid_argument("zero out of range");
  if (one < -1 || one >= n) throw std::invalid_argument("one out of range");

  HyperTable H{std::move(names), std::move(hsum), std::move(mul), zero, one};
  if (H.has_zero()) {
    for (Elem a = 0; a < n; ++a)
      if (H.hs(H.zero, a) != bit(a) || H.hs(a, H.zero) != bit(a))
        throw std::invalid_argument("designated zero is not hyperneutral");
  }
  return H;
}

HyperTable krasner_table() {
  std::vector<ElemSet> hsum = {bit(0), bit(1), bit(1), bit(0) | bit(1)};
  std::vector<Elem> mul = {0, 0, 0, 1};
  return make_hypertable({"0", "1"}, std::move(hsum), std::move(mul), 0, 1);
}

HyperTable signs_table() {
  // elements 0,1,-1 at indices 0,1,2
  const ElemSet all = full_set(3);
  std::vector<ElemSet> hsum = {
      bit(0), bit(1), bit(2),   // 0+x
      bit(1), bit(1), all,      // 1+x
      bit(2), all,    bit(2)};  // -1+x
  std::vector<Elem> mul = {0, 0, 0, 0, 1, 2, 0, 2, 1};
  return make_hypertable({"0", "1", "-1"}, std::move(hsum), std::move(mul), 0, 1);
}

ElemSet hsum_sets(const HyperTable& H, ElemSet s1, ElemSet s2) {
  if (s1 == 0 || s2 == 0) throw std::invalid_argument("hsum_sets: empty set");
  ElemSet out = 0;
  for (Elem a : set_elems(s1))
    for (Elem b : set_elems(s2)) out |= H.hs(a, b);
  return out;
}

ElemSet mul_sets(const HyperTable& H, ElemSet s1, ElemSet s2) {
  if (!H.has_mul()) throw std::invalid_argument("mul_sets: no multiplication table");
  if (s1 == 0 || s2 == 0) throw std::invalid_argument("mul_sets: empty set");
  ElemSet out = 0;
  for (Elem a : set_elems(s1))
    for (Elem b : set_elems(s2)) out |= bit(H.m(a, b));
  return out;
}

std::optional<Elem> hypernegative(const HyperTable& H, Elem a) {
  if (!H.has_zero()) return std::nullopt;
  std::optional<Elem> found;
  for (Elem b = 0; b < H.size(); ++b) {
    if (!contains(H.hs(a, b), H.zero) || !contains(H.hs(b, a), H.zero)) continue;
    if (found) return std::nullopt;  // not unique
    found = b;
  }
  return found;
}

AxiomReport check_hypergroup(const HyperTable& H) {
  AxiomReport rep;
  const int n = H.size();

  AxiomCheck zero_ck{"hyperzero", true, true, {}, "", 0};
  if (!H.has_zero()) {
    zero_ck.pass = false;
    zero_ck.detail = "no designated zero";
  } else {
    for (Elem a = 0; a < n && zero_ck.pass; ++a) {
      ++zero_ck.tuples_checked;
      if (H.hs(H.zero, a) != bit(a) || H.hs(a, H.zero) != bit(a)) {
        zero_ck.pass = false;
        zero_ck.witness = {a};
      }
    }
  }
  rep.add(zero_ck);

  AxiomCheck assoc{"associativity", true, true, {}, "", 0};
  for (Elem a = 0; a < n && assoc.pass; ++a)
    for (Elem b = 0; b < n && assoc.pass; ++b)
      for (Elem c = 0; c < n; ++c) {
        ++assoc.tuples_checked;
        if (hsum_sets(H, H.hs(a, b), bit(c)) != hsum_sets(H, bit(a), H.hs(b, c))) {
          assoc.pass = false;
          assoc.witness = {a, b, c};
          break;
        }
      }
  rep.add(assoc);

  AxiomCheck comm{"commutativity", true, false, {}, "informational", 0};
  for (Elem a = 0; a < n && comm.pass; ++a)
    for (Elem b = 0; b < n; ++b) {
      ++comm.tuples_checked;
      if (H.hs(a, b) != H.hs(b, a)) {
        comm.pass = false;
        comm.witness = {a, b};
        break;
      }
    }
  rep.add(comm);

  std::vector<Elem> neg(n, -1);
  AxiomCheck exist{"hypernegative-existence", true, true, {}, "", 0};
  AxiomCheck uniq{"hypernegative-uniqueness", true, true, {}, "", 0};
  if (H.has_zero()) {
    for (Elem a = 0; a < n; ++a) {
      ++exist.tuples_checked;
      int count = 0;
      Elem first = -1, second = -1;
      for (Elem b = 0; b < n; ++b)
        if (contains(H.hs(a, b), H.zero) && contains(H.hs(b, a), H.zero)) {
          if (count == 0) first = b;
          else if (count == 1) second = b;
          ++count;
        }
      if (count == 0 && exist.pass) {
        exist.pass = false;
        exist.witness = {a};
      }
      if (count > 1 && uniq.pass) {
        uniq.pass = false;
        uniq.witness = {a, first, second};
      }
      neg[a] = first;
    }
  } else {
    exist.pass = uniq.pass = false;
    exist.detail = uniq.detail = "no designated zero";
  }
  rep.add(exist);
  rep.add(uniq);

  AxiomCheck rev{"reversibility", true, true, {}, "", 0};
  if (!exist.pass) {
    rev.pass = false;
    rev.detail = "hypernegatives unavailable";
    rev.witness = exist.witness;
  } else {
    for (Elem a1 = 0; a1 < n && rev.pass; ++a1)
      for (Elem a2 = 0; a2 < n && rev.pass; ++a2)
        for (Elem a3 = 0; a3 < n; ++a3) {
          ++rev.tuples_checked;
          bool lhs = contains(H.hs(a1, a2), a3);
          bool rhs = contains(H.hs(a3, neg[a1]), a2);
          if (lhs != rhs) {
            rev.pass = false;
            rev.witness = {a1, a2, a3};
            break;
          }
        }
  }
  rep.add(rev);
  return rep;
}

namespace {

void append_ring_checks(const HyperTable& H, AxiomReport& rep) {
  const int n = H.size();

  AxiomCheck present{"mul-present", H.has_mul(), true, {}, "", 1};
  rep.add(present);
  if (!H.has_mul()) return;

  AxiomCheck mono{"mul-associativity", true, true, {}, "", 0};
  for (Elem a = 0; a < n && mono.pass; ++a)
    for (Elem b = 0; b < n && mono.pass; ++b)
      for (Elem c = 0; c < n; ++c) {
        ++mono.tuples_checked;
        if (H.m(H.m(a, b), c) != H.m(a, H.m(b, c))) {
          mono.pass = false;
          mono.witness = {a, b, c};
          break;
        }
      }
  rep.add(mono);

  AxiomCheck unit{"mul-identity", true, true, {}, "", 0};
  if (!H.has_one()) {
    unit.pass = false;
    unit.detail = "no designated one";
  } else {
    for (Elem a = 0; a < n && unit.pass; ++a) {
      ++unit.tuples_checked;
      if (H.m(H.one, a) != a || H.m(a, H.one) != a) {
        unit.pass = false;
        unit.witness = {a};
      }
    }
  }
  rep.add(unit);

  AxiomCheck distl{"left-distributivity", true, true, {}, "", 0};
  AxiomCheck distr{"right-distributivity", true, true, {}, "", 0};
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c) {
        ElemSet bc = H.hs(b, c);
        if (distl.pass) {
          ++distl.tuples_checked;
          ElemSet lhs = 0;
          for (Elem x : set_elems(bc)) lhs |= bit(H.m(a, x));
          if (lhs != H.hs(H.m(a, b), H.m(a, c))) {
            distl.pass = false;
            distl.witness = {a, b, c};
          }
        }
        if (distr.pass) {
          ++distr.tuples_checked;
          ElemSet lhs = 0;
          for (Elem x : set_elems(bc)) lhs |= bit(H.m(x, a));
          if (lhs != H.hs(H.m(b, a), H.m(c, a))) {
            distr.pass = false;
            distr.witness = {a, b, c};
          }
        }
      }
  rep.add(distl);
  rep.add(distr);

  AxiomCheck absorb{"zero-absorbing", true, true, {}, "", 0};
  if (!H.has_zero()) {
    absorb.pass = false;
    absorb.detail = "no designated zero";
  } else {
    for (Elem a = 0; a < n && absorb.pass; ++a) {
      ++absorb.tuples_checked;
      if (H.m(H.zero, a) != H.zero || H.m(a, H.zero) != H.zero) {
        absorb.pass = false;
        absorb.witness = {a};
      }
    }
  }
  rep.add(absorb);
}

}  // namespace

AxiomReport check_hyperring(const HyperTable& H) {
  AxiomReport rep = check_hypergroup(H);
  append_ring_checks(H, rep);
  return rep;
}

AxiomReport check_hyperfield(const HyperTable& H) {
  AxiomReport rep = check_hyperring(H);
  const int n = H.size();
  AxiomCheck grp{"units-group", true, true, {}, "", 0};
  if (!H.has_mul() || !H.has_zero() || !H.has_one() || H.one == H.zero) {
    grp.pass = false;
    grp.detail = "needs mul, zero, and a distinct one";
  } else {
    for (Elem a = 0; a < n && grp.pass; ++a) {
      if (a == H.zero) continue;
      ++grp.tuples_checked;
      bool has_inv = false;
      for (Elem b = 0; b < n; ++b)
        if (b != H.zero && H.m(a, b) == H.one && H.m(b, a) == H.one) has_inv = true;
      if (!has_inv) {
        grp.pass = false;
        grp.witness = {a};
        grp.detail = "no two-sided inverse";
      }
      for (Elem b = 0; grp.pass && b < n; ++b) {
        if (b == H.zero) continue;
        if (H.m(a, b) == H.zero) {
          grp.pass = false;
          grp.witness = {a, b};
          grp.detail = "zero divisor";
        }
      }
    }
  }
  rep.add(grp);
  return rep;
}

AxiomReport check_powerset_weak_distributivity(const HyperTable& H, unsigned seed, int samples) {
  if (!H.has_mul()) throw std::invalid_argument("needs a multiplication table");
  AxiomReport rep;
  const int n = H.size();
  AxiomCheck left{"powerset-left-weak-distributivity", true, true, {}, "", 0};
  AxiomCheck right{"powerset-right-weak-distributivity", true, true, {}, "", 0};
  AxiomCheck strict{"strict-inclusion-observed", true, false, {}, "", 0};
  long long strict_count = 0;
  std::string first_strict;

  auto visit = [&](ElemSet s, ElemSet s1, ElemSet s2) {
    ElemSet hs12 = hsum_sets(H, s1, s2);
    if (left.pass) {
      ++left.tuples_checked;
      ElemSet lhs = mul_sets(H, s, hs12);
      ElemSet rhs = hsum_sets(H, mul_sets(H, s, s1), mul_sets(H, s, s2));
      if ((lhs & ~rhs) != 0) {
        left.pass = false;
        left.detail = "S(S1+S2)=" + set_str(lhs, H.names) + " not within " + set_str(rhs, H.names);
      } else if (lhs != rhs && strict_count++ == 0) {
        first_strict = "S=" + set_str(s, H.names) + " S1=" + set_str(s1, H.names) + " S2=" + set_str(s2, H.names) +
                       ": " + set_str(lhs, H.names) + " strictly inside " + set_str(rhs, H.names);
      }
    }
    if (right.pass) {
      ++right.tuples_checked;
      ElemSet lhs = mul_sets(H, hs12, s);
      ElemSet rhs = hsum_sets(H, mul_sets(H, s1, s), mul_sets(H, s2, s));
      if ((lhs & ~rhs) != 0) {
        right.pass = false;
        right.detail = "(S1+S2)S=" + set_str(lhs, H.names) + " not within " + set_str(rhs, H.names);
      } else if (lhs != rhs) {
        ++strict_count;
      }
    }
  };

  if (n <= 6) {
    const ElemSet top = full_set(n);
    for (ElemSet s = 1; s <= top; ++s)
      for (ElemSet s1 = 1; s1 <= top; ++s1)
        for (ElemSet s2 = 1; s2 <= top; ++s2) visit(s, s1, s2);
    strict.detail = "exhaustive";
  } else {
    std::mt19937 rng(seed);
    const ElemSet top = full_set(n);
    auto draw = [&] {
      ElemSet s = (static_cast<ElemSet>(rng()) << 32 | rng()) & top;
      return s == 0 ? bit(static_cast<Elem>(rng() % n)) : s;
    };
    for (int i = 0; i < samples; ++i) visit(draw(), draw(), draw());
    strict.detail = "sampled";
  }
  strict.detail += "; strict inclusions: " + std::to_string(strict_count) +
                   (first_strict.empty() ? "" : "; first: " + first_strict);
  strict.tuples_checked = strict_count;
  rep.add(left);
  rep.add(right);
  rep.add(strict);
  return rep;
}

ElemSet weak_neutral_elements(const HyperTable& H) {
  ElemSet out = 0;
  for (Elem b = 0; b < H.size(); ++b) {
    bool ok = true;
    for (Elem a = 0; a < H.size() && ok; ++a)
      ok = contains(H.hs(a, b), a) && contains(H.hs(b, a), a);
    if (ok) out |= bit(b);
  }
  return out;
}

}  // namespace hyperforge
