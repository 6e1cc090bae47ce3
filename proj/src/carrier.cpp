#include "hyperforge/carrier.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <stdexcept>

namespace hyperforge {

int set_size(ElemSet s) { return std::popcount(s); }

std::vector<Elem> set_elems(ElemSet s) {
  std::vector<Elem> out;
  for (Elem i = 0; i < kMaxCarrier; ++i)
    if (contains(s, i)) out.push_back(i);
  return out;
}

ElemSet set_of(std::initializer_list<Elem> xs) {
  ElemSet s = 0;
  for (Elem x : xs) s |= bit(x);
  return s;
}

ElemSet full_set(int n) { return n == 64 ? ~ElemSet{0} : (ElemSet{1} << n) - 1; }

std::string set_str(ElemSet s, const std::vector<std::string>& names) {
  std::string out = "{";
  bool first = true;
  for (Elem i = 0; i < static_cast<int>(names.size()); ++i) {
    if (!contains(s, i)) continue;
    if (!first) out += ",";
    out += names[i];
    first = false;
  }
  return out + "}";
}

// ---------------------------------------------------------------------------
// monoids

FinMonoid make_monoid(std::vector<std::string> names, std::vector<Elem> op, Elem neutral) {
  const int n = static_cast<int>(names.size());
  if (n == 0 || n > kMaxCarrier) throw std::invalid_argument("carrier size out of range");
  if (op.size() != static_cast<size_t>(n) * n) throw std::invalid_argument("op table size mismatch");
  for (Elem v : op)
    if (v < 0 || v >= n) throw std::invalid_argument("op table not closed");
  FinMonoid M{std::move(names), std::move(op), neutral};
  for (Elem a = 0; a < n; ++a)
    if (M.mul(neutral, a) != a || M.mul(a, neutral) != a)
      throw std::invalid_argument("neutral element is not two-sided");
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c)
        if (M.mul(M.mul(a, b), c) != M.mul(a, M.mul(b, c)))
          throw std::invalid_argument("op not associative");
  return M;
}

namespace {

std::string cycle_name(const std::vector<int>& perm) {
  const int n = static_cast<int>(perm.size());
  std::vector<bool> seen(n, false);
  std::string out;
  for (int i = 0; i < n; ++i) {
    if (seen[i] || perm[i] == i) continue;
    out += "(";
    int j = i;
    while (!seen[j]) {
      seen[j] = true;
      out += std::to_string(j + 1);
      j = perm[j];
    }
    out += ")";
  }
  return out.empty() ? "e" : out;
}

}  // namespace

FinMonoid symmetric_group(int n) {
  if (n < 1 || n > 4) throw std::invalid_argument("symmetric_group supports n in [1,4]");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  const int m = static_cast<int>(perms.size());
  std::vector<std::string> names(m);
  for (int i = 0; i < m; ++i) names[i] = cycle_name(perms[i]);
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < m; ++i) index[perms[i]] = i;
  std::vector<Elem> op(static_cast<size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      std::vector<int> comp(n);  // (s * t)(x) = s(t(x))
      for (int x = 0; x < n; ++x) comp[x] = perms[i][perms[j][x]];
      op[static_cast<size_t>(i) * m + j] = index.at(comp);
    }
  return make_monoid(std::move(names), std::move(op), 0);
}

// ---------------------------------------------------------------------------
// rings

Elem FinRing::neg(Elem x) const {
  for (Elem y = 0; y < size(); ++y)
    if (a(x, y) == zero) return y;
  throw std::logic_error("missing additive inverse");
}

std::optional<Elem> FinRing::inv(Elem x) const {
  for (Elem y = 0; y < size(); ++y)
    if (m(x, y) == one && m(y, x) == one) return y;
  return std::nullopt;
}

ElemSet FinRing::unit_set() const {
  ElemSet u = 0;
  for (Elem x = 0; x < size(); ++x)
    if (inv(x)) u |= bit(x);
  return u;
}

FinRing make_ring(std::vector<std::string> names, std::vector<Elem> add, std::vector<Elem> mul,
                  Elem zero, Elem one) {
  const int n = static_cast<int>(names.size());
  if (n == 0 || n > kMaxCarrier) throw std::invalid_argument("carrier size out of range");
  if (add.size() != static_cast<size_t>(n) * n || mul.size() != add.size())
    throw std::invalid_argument("table size mismatch");
  for (Elem v : add)
    if (v < 0 || v >= n) throw std::invalid_argument("add table not closed");
  for (Elem v : mul)
    if (v < 0 || v >= n) throw std::invalid_argument("mul table not closed");
  FinRing R{std::move(names), std::move(add), std::move(mul), zero, one, false, false};
  auto fail = [](const char* msg) { throw std::invalid_argument(msg); };
  for (Elem x = 0; x < n; ++x) {
    if (R.a(zero, x) != x || R.a(x, zero) != x) fail("zero is not additive neutral");
    if (R.m(one, x) != x || R.m(x, one) != x) fail("one is not multiplicative neutral");
    if (R.m(zero, x) != zero || R.m(x, zero) != zero) fail("zero is not absorbing");
    bool has_neg = false;
    for (Elem y = 0; y < n && !has_neg; ++y) has_neg = R.a(x, y) == zero;
    if (!has_neg) fail("missing additive inverse");
  }
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      if (R.a(x, y) != R.a(y, x)) fail("addition not commutative");
      for (Elem z = 0; z < n; ++z) {
        if (R.a(R.a(x, y), z) != R.a(x, R.a(y, z))) fail("addition not associative");
        if (R.m(R.m(x, y), z) != R.m(x, R.m(y, z))) fail("multiplication not associative");
        if (R.m(x, R.a(y, z)) != R.a(R.m(x, y), R.m(x, z))) fail("left distributivity fails");
        if (R.m(R.a(x, y), z) != R.a(R.m(x, z), R.m(y, z))) fail("right distributivity fails");
      }
    }
  R.commutative = true;
  for (Elem x = 0; x < n && R.commutative; ++x)
    for (Elem y = 0; y < n; ++y)
      if (R.m(x, y) != R.m(y, x)) { R.commutative = false; break; }
  R.field = R.commutative && n >= 2;
  for (Elem x = 0; x < n && R.field; ++x)
    if (x != zero && !R.inv(x)) R.field = false;
  return R;
}

FinRing zmod(int n) {
  if (n < 1 || n > kMaxCarrier) throw std::invalid_argument("zmod size out of range");
  std::vector<std::string> names(n);
  std::vector<Elem> add(static_cast<size_t>(n) * n), mul(add.size());
  for (int i = 0; i < n; ++i) names[i] = std::to_string(i);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      add[static_cast<size_t>(i) * n + j] = (i + j) % n;
      mul[static_cast<size_t>(i) * n + j] = (i * j) % n;
    }
  return make_ring(std::move(names), std::move(add), std::move(mul), 0, 1 % n);
}

// ---------------------------------------------------------------------------
// GF(p^k)

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

using Poly = std::vector<int>;  // coefficients mod p, index = degree; no trailing zeros

void poly_trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly poly_mul(const Poly& f, const Poly& g, int p) {
  if (f.empty() || g.empty()) return {};
  Poly h(f.size() + g.size() - 1, 0);
  for (size_t i = 0; i < f.size(); ++i)
    for (size_t j = 0; j < g.size(); ++j) h[i + j] = (h[i + j] + f[i] * g[j]) % p;
  poly_trim(h);
  return h;
}

// remainder of f by monic g
Poly poly_rem(Poly f, const Poly& g, int p) {
  poly_trim(f);
  while (f.size() >= g.size()) {
    int c = f.back();
    size_t shift = f.size() - g.size();
    for (size_t i = 0; i < g.size(); ++i) {
      int& t = f[shift + i];
      t = ((t - c * g[i]) % p + p) % p;
    }
    poly_trim(f);
  }
  return f;
}

Poly poly_from_value(long long v, int p, int len) {
  Poly f(len, 0);
  for (int i = 0; i < len; ++i) { f[i] = static_cast<int>(v % p); v /= p; }
  return f;
}

// no monic divisor of degree 1..deg/2
bool is_irreducible(const Poly& f, int p) {
  const int k = static_cast<int>(f.size()) - 1;
  for (int d = 1; 2 * d <= k; ++d) {
    long long count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (long long v = 0; v < count; ++v) {
      Poly div = poly_from_value(v, p, d);
      div.resize(d + 1, 0);
      div[d] = 1;
      if (poly_rem(f, div, p).empty()) return false;
    }
  }
  return true;
}

std::string field_elem_name(const Poly& f, int /*p*/) {
  std::string out;
  for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i) {
    if (f[i] == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0) { out += std::to_string(f[i]); continue; }
    if (f[i] != 1) out += std::to_string(f[i]);
    out += (i == 1) ? "w" : "w^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

}  // namespace

FinRing make_finite_field(int p, int k, int bound) {
  if (!is_prime(p)) throw std::invalid_argument("characteristic is not prime");
  if (k < 1) throw std::invalid_argument("exponent must be >= 1");
  long long q = 1;
  for (int i = 0; i < k; ++i) {
    q *= p;
    if (q > bound) throw std::invalid_argument("field size exceeds carrier bound");
  }
  if (k == 1) return zmod(p);

  Poly irr;
  for (long long v = 0; v < q; ++v) {
    Poly f = poly_from_value(v, p, k);
    f.resize(k + 1, 0);
    f[k] = 1;
    if (is_irreducible(f, p)) { irr = f; break; }
  }

  const int n = static_cast<int>(q);
  std::vector<std::string> names(n);
  std::vector<Elem> add(static_cast<size_t>(n) * n), mul(add.size());
  auto value_of = [&](const Poly& f) {
    long long v = 0;
    for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i) v = v * p + f[i];
    return static_cast<Elem>(v);
  };
  for (int i = 0; i < n; ++i) names[i] = field_elem_name(poly_from_value(i, p, k), p);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Poly fi = poly_from_value(i, p, k);
      Poly fj = poly_from_value(j, p, k);
      Poly s(k, 0);
      for (int t = 0; t < k; ++t) s[t] = (fi[t] + fj[t]) % p;
      poly_trim(s);
      add[static_cast<size_t>(i) * n + j] = value_of(s);
      poly_trim(fi);
      poly_trim(fj);
      mul[static_cast<size_t>(i) * n + j] = value_of(poly_rem(poly_mul(fi, fj, p), irr, p));
    }
  return make_ring(std::move(names), std::move(add), std::move(mul), 0, 1);
}

// ---------------------------------------------------------------------------
// matrix ring

FinRing matrix_ring(const FinRing& R, int n) {
  const int b = R.size();
  long long count = 1;
  for (int i = 0; i < n * n; ++i) {
    count *= b;
    if (count > kMaxCarrier) throw std::invalid_argument("matrix carrier exceeds bound");
  }
  const int m = static_cast<int>(count);
  auto entry = [&](int id, int r, int c) {
    for (int i = n * n - 1; i > r * n + c; --i) id /= b;
    return id % b;
  };
  auto pack = [&](const std::vector<Elem>& e) {
    int id = 0;
    for (int i = 0; i < n * n; ++i) id = id * b + e[i];
    return id;
  };
  // natural-order tables first
  std::vector<Elem> add(static_cast<size_t>(m) * m), mul(add.size());
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      std::vector<Elem> s(n * n), pr(n * n);
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
          s[r * n + c] = R.a(entry(i, r, c), entry(j, r, c));
          Elem acc = R.zero;
          for (int t = 0; t < n; ++t) acc = R.a(acc, R.m(entry(i, r, t), entry(j, t, c)));
          pr[r * n + c] = acc;
        }
      add[static_cast<size_t>(i) * m + j] = pack(s);
      mul[static_cast<size_t>(i) * m + j] = pack(pr);
    }
  std::vector<Elem> id_mat(n * n, R.zero);
  for (int r = 0; r < n; ++r) id_mat[r * n + r] = R.one;
  const int zero_nat = 0, one_nat = pack(id_mat);

  // reorder: zero, one, remaining by natural id
  std::vector<int> order;
  order.push_back(zero_nat);
  order.push_back(one_nat);
  for (int i = 0; i < m; ++i)
    if (i != zero_nat && i != one_nat) order.push_back(i);
  std::vector<int> pos(m);
  for (int i = 0; i < m; ++i) pos[order[i]] = i;

  std::vector<std::string> names(m);
  std::vector<Elem> add2(add.size()), mul2(mul.size());
  for (int i = 0; i < m; ++i) {
    std::string nm = "[";
    for (int r = 0; r < n; ++r) {
      nm += "[";
      for (int c = 0; c < n; ++c) nm += R.names[entry(order[i], r, c)] + (c + 1 < n ? "," : "");
      nm += r + 1 < n ? "]," : "]";
    }
    names[i] = nm + "]";
    for (int j = 0; j < m; ++j) {
      add2[static_cast<size_t>(i) * m + j] = pos[add[static_cast<size_t>(order[i]) * m + order[j]]];
      mul2[static_cast<size_t>(i) * m + j] = pos[mul[static_cast<size_t>(order[i]) * m + order[j]]];
    }
  }
  return make_ring(std::move(names), std::move(add2), std::move(mul2), 0, 1);
}

UnitsMonoid units_monoid(const FinRing& R) {
  std::vector<Elem> ring_elem = set_elems(R.unit_set());
  const int n = static_cast<int>(ring_elem.size());
  std::vector<int> pos(R.size(), -1);
  for (int i = 0; i < n; ++i) pos[ring_elem[i]] = i;
  std::vector<std::string> names(n);
  std::vector<Elem> op(static_cast<size_t>(n) * n);
  Elem neutral = -1;
  for (int i = 0; i < n; ++i) {
    names[i] = R.names[ring_elem[i]];
    if (ring_elem[i] == R.one) neutral = i;
    for (int j = 0; j < n; ++j) {
      Elem pr = R.m(ring_elem[i], ring_elem[j]);
      if (pos[pr] < 0) throw std::logic_error("unit product not a unit");
      op[static_cast<size_t>(i) * n + j] = pos[pr];
    }
  }
  return {make_monoid(std::move(names), std::move(op), neutral), std::move(ring_elem)};
}

// ---------------------------------------------------------------------------
// subgroups

Subgroup subgroup_generated(const FinRing& R, Elem g) {
  if (!R.inv(g)) throw std::invalid_argument("generator is not a unit");
  ElemSet members = bit(R.one);
  Elem x = g;
  while (!contains(members, x)) {
    members |= bit(x);
    x = R.m(x, g);
  }
  return {members, SubKind::multiplicative};
}

std::vector<Subgroup> unit_subgroups(const FinRing& R) {
  std::vector<Elem> units = set_elems(R.unit_set());
  const int m = static_cast<int>(units.size());
  auto order_of = [&](Elem u) {
    int ord = 1;
    Elem x = u;
    while (x != R.one) { x = R.m(x, u); ++ord; }
    return ord;
  };
  Elem gen = -1;
  for (Elem u : units)
    if (order_of(u) == m) { gen = u; break; }
  if (gen < 0) throw std::invalid_argument("unit group is not cyclic");
  std::vector<Subgroup> out;
  for (int d = 1; d <= m; ++d) {
    if (m % d != 0) continue;
    Elem power = R.one;
    for (int i = 0; i < m / d; ++i) power = R.m(power, gen);
    out.push_back(subgroup_generated(R, power));
  }
  std::sort(out.begin(), out.end(),
            [](const Subgroup& a, const Subgroup& b) { return set_size(a.members) < set_size(b.members); });
  return out;
}

bool is_normal_submonoid(const FinMonoid& M, ElemSet N) {
  if (!contains(N, M.neutral)) throw std::invalid_argument("submonoid misses the neutral element");
  for (Elem x : set_elems(N))
    for (Elem y : set_elems(N))
      if (!contains(N, M.mul(x, y))) throw std::invalid_argument("submonoid not closed");
  for (Elem a = 0; a < M.size(); ++a) {
    ElemSet left = 0, right = 0;
    for (Elem g : set_elems(N)) {
      left |= bit(M.mul(g, a));
      right |= bit(M.mul(a, g));
    }
    if (left != right) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// residue monoid

ResidueMonoid residue_monoid(const FinMonoid& T, ElemSet G) {
  if (!is_normal_submonoid(T, G)) throw std::invalid_argument("subgroup is not normal");
  const int n = T.size();
  auto coset_value = [&](Elem a) {
    ElemSet v = 0;
    for (Elem g : set_elems(G)) v |= bit(T.mul(a, g));
    return v;
  };
  std::vector<ElemSet> cosets;
  std::vector<Elem> coset_of(n);
  for (Elem a = 0; a < n; ++a) {
    ElemSet v = coset_value(a);
    auto it = std::find(cosets.begin(), cosets.end(), v);
    if (it == cosets.end()) {
      coset_of[a] = static_cast<Elem>(cosets.size());
      cosets.push_back(v);
    } else {
      coset_of[a] = static_cast<Elem>(it - cosets.begin());
    }
  }
  const int m = static_cast<int>(cosets.size());
  std::vector<Elem> rep(m, -1);
  for (Elem a = n - 1; a >= 0; --a) rep[coset_of[a]] = a;  // least representative
  std::vector<std::string> names(m);
  for (int i = 0; i < m; ++i) names[i] = T.names[rep[i]] + "G";
  std::vector<Elem> op(static_cast<size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) op[static_cast<size_t>(i) * m + j] = coset_of[T.mul(rep[i], rep[j])];
  // well-definedness on coset values, not just representatives
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (coset_of[T.mul(a, b)] != op[static_cast<size_t>(coset_of[a]) * m + coset_of[b]])
        throw std::logic_error("coset product not well-defined");
  ResidueMonoid out{make_monoid(std::move(names), std::move(op), coset_of[T.neutral]),
                    std::move(cosets), std::move(coset_of), false};
  out.is_group = true;
  for (int i = 0; i < m && out.is_group; ++i) {
    bool has_inv = false;
    for (int j = 0; j < m && !has_inv; ++j)
      has_inv = out.monoid.mul(i, j) == out.monoid.neutral && out.monoid.mul(j, i) == out.monoid.neutral;
    out.is_group = has_inv;
  }
  return out;
}

// ---------------------------------------------------------------------------
// semifields

FinSemifield make_semifield(std::vector<std::string> names, std::vector<Elem> add,
                            std::vector<Elem> mul, Elem zero, Elem one) {
  const int n = static_cast<int>(names.size());
  if (n < 2 || n > kMaxCarrier) throw std::invalid_argument("carrier size out of range");
  if (add.size() != static_cast<size_t>(n) * n || mul.size() != add.size())
    throw std::invalid_argument("table size mismatch");
  FinSemifield S{std::move(names), std::move(add), std::move(mul), zero, one};
  auto fail = [](const char* msg) { throw std::invalid_argument(msg); };
  for (Elem x = 0; x < n; ++x) {
    if (S.a(zero, x) != x || S.a(x, zero) != x) fail("zero is not additive neutral");
    if (S.m(zero, x) != zero || S.m(x, zero) != zero) fail("zero is not absorbing");
    if (S.m(one, x) != x || S.m(x, one) != x) fail("one is not multiplicative neutral");
  }
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      if (S.a(x, y) != S.a(y, x)) fail("addition not commutative");
      if (x != zero && y != zero && S.m(x, y) == zero) fail("nonzero product is zero");
      for (Elem z = 0; z < n; ++z) {
        if (S.a(S.a(x, y), z) != S.a(x, S.a(y, z))) fail("addition not associative");
        if (S.m(S.m(x, y), z) != S.m(x, S.m(y, z))) fail("multiplication not associative");
        if (S.m(x, S.a(y, z)) != S.a(S.m(x, y), S.m(x, z))) fail("left distributivity fails");
        if (S.m(S.a(x, y), z) != S.a(S.m(x, z), S.m(y, z))) fail("right distributivity fails");
      }
    }
  for (Elem x = 0; x < n; ++x) {
    if (x == zero) continue;
    bool has_inv = false;
    for (Elem y = 0; y < n && !has_inv; ++y)
      has_inv = y != zero && S.m(x, y) == one && S.m(y, x) == one;
    if (!has_inv) fail("nonzero element without multiplicative inverse");
  }
  return S;
}

FinSemifield boolean_semifield() {
  return make_semifield({"0", "1"}, {0, 1, 1, 1}, {0, 0, 0, 1}, 0, 1);
}

FinSemifield semifield_of_field(const FinRing& F) {
  if (!F.field) throw std::invalid_argument("ring is not a field");
  return make_semifield(F.names, F.add, F.mul, F.zero, F.one);
}

// ---------------------------------------------------------------------------
// kernels

namespace {

void validate_kernel_subgroup(const FinSemifield& S, ElemSet K) {
  if (!contains(K, S.one)) throw std::invalid_argument("kernel misses the unit");
  if (contains(K, S.zero)) throw std::invalid_argument("kernel contains zero");
  for (Elem x : set_elems(K)) {
    bool has_inv = false;
    for (Elem y : set_elems(K)) {
      if (!contains(K, S.m(x, y))) throw std::invalid_argument("kernel not closed under product");
      if (S.m(x, y) == S.one && S.m(y, x) == S.one) has_inv = true;
    }
    if (!has_inv) throw std::invalid_argument("kernel not closed under inverse");
  }
  for (Elem a = 0; a < S.size(); ++a) {  // normality in the unit group
    if (a == S.zero) continue;
    ElemSet left = 0, right = 0;
    for (Elem k : set_elems(K)) {
      left |= bit(S.m(k, a));
      right |= bit(S.m(a, k));
    }
    if (left != right) throw std::invalid_argument("kernel not normal");
  }
}

}  // namespace

Verdict is_kernel(const FinSemifield& S, ElemSet K) {
  validate_kernel_subgroup(S, K);
  for (Elem a1 : set_elems(K))
    for (Elem a2 : set_elems(K))
      for (Elem r1 = 0; r1 < S.size(); ++r1)
        for (Elem r2 = 0; r2 < S.size(); ++r2) {
          if (S.a(r1, r2) != S.one) continue;
          Elem v = S.a(S.m(r1, a1), S.m(r2, a2));
          if (!contains(K, v))
            return {false,
                    "convex combination escapes: " + S.names[r1] + "*" + S.names[a1] + " + " +
                        S.names[r2] + "*" + S.names[a2] + " = " + S.names[v],
                    {a1, a2, r1, r2}};
        }
  return {true, "convexity holds on the full carrier", {}};
}

Verdict semiring_kernel_condition(const FinSemifield& S, ElemSet K) {
  // submonoid validation only: the wider notion drops inverses
  if (!contains(K, S.one)) throw std::invalid_argument("kernel misses the unit");
  if (contains(K, S.zero)) throw std::invalid_argument("kernel contains zero");
  for (Elem x : set_elems(K))
    for (Elem y : set_elems(K))
      if (!contains(K, S.m(x, y))) throw std::invalid_argument("kernel not closed under product");
  for (Elem a1 : set_elems(K))
    for (Elem a2 : set_elems(K))
      for (Elem r1 = 0; r1 < S.size(); ++r1)
        for (Elem r2 = 0; r2 < S.size(); ++r2) {
          if (S.a(r1, r2) != S.one) continue;
          Elem v = S.a(S.m(r1, a1), S.m(r2, a2));
          ElemSet target = 0;  // K * (a1 + a2)
          for (Elem k : set_elems(K)) target |= bit(S.m(k, S.a(a1, a2)));
          if (!contains(target, v))
            return {false, "combination escapes K*(a1+a2)", {a1, a2, r1, r2}};
        }
  return {true, "condition holds on the full carrier", {}};
}

namespace {

// 0, 1, -1, 2, -2, ... clipped to [-window, window]
std::vector<int> canonical_ints(int window) {
  std::vector<int> out{0};
  for (int i = 1; i <= window; ++i) {
    out.push_back(i);
    out.push_back(-i);
  }
  return out;
}

bool in_mz(int a, int modulus) { return modulus == 0 ? a == 0 : a % modulus == 0; }

}  // namespace

Verdict is_kernel_maxplus(int modulus, int window) {
  if (modulus < 0) throw std::invalid_argument("modulus must be >= 0");
  const auto ints = canonical_ints(window);
  for (int a1 : ints) {
    if (!in_mz(a1, modulus)) continue;
    for (int a2 : ints) {
      if (!in_mz(a2, modulus)) continue;
      for (int r1 : ints)
        for (int r2 : ints) {
          if (std::max(r1, r2) != 0) continue;  // r1 + r2 = 1 in max-plus
          int v = std::max(r1 + a1, r2 + a2);
          if (!in_mz(v, modulus))
            return {false,
                    "max(" + std::to_string(r1 + a1) + ", " + std::to_string(r2 + a2) + ") = " +
                        std::to_string(v) + " escapes the subgroup",
                    {a1, a2, r1, r2}};
        }
    }
  }
  return {true, "convexity holds on the sampled window [-" + std::to_string(window) + "," +
                    std::to_string(window) + "]",
          {}};
}

// ---------------------------------------------------------------------------
// kernel <-> congruence

Verdict is_congruence(const FinSemifield& S, const Congruence& C) {
  const int n = S.size();
  if (C.class_of.size() != static_cast<size_t>(n)) throw std::invalid_argument("partition size mismatch");
  for (Elem a1 = 0; a1 < n; ++a1)
    for (Elem a2 = 0; a2 < n; ++a2) {
      if (C.class_of[a1] != C.class_of[a2]) continue;
      for (Elem b = 0; b < n; ++b) {
        if (C.class_of[S.a(a1, b)] != C.class_of[S.a(a2, b)])
          return {false, "not compatible with addition", {a1, a2, b}};
        if (C.class_of[S.m(a1, b)] != C.class_of[S.m(a2, b)])
          return {false, "not compatible with multiplication", {a1, a2, b}};
      }
    }
  return {true, "compatible with both operations", {}};
}

Congruence congruence_from_kernel(const FinSemifield& S, ElemSet K) {
  validate_kernel_subgroup(S, K);
  const int n = S.size();
  std::vector<ElemSet> orbit(n, 0);
  for (Elem a = 0; a < n; ++a)
    for (Elem k : set_elems(K)) orbit[a] |= bit(S.m(k, a));
  Congruence C;
  C.class_of.assign(n, -1);
  int next = 0;
  for (Elem a = 0; a < n; ++a) {
    if (C.class_of[a] >= 0) continue;
    C.class_of[a] = next;
    for (Elem b = a + 1; b < n; ++b)
      if (C.class_of[b] < 0 && orbit[a] == orbit[b]) C.class_of[b] = next;
    ++next;
  }
  return C;
}

ElemSet kernel_from_congruence(const FinSemifield& S, const Congruence& C) {
  ElemSet K = 0;
  for (Elem a = 0; a < S.size(); ++a)
    if (C.class_of[a] == C.class_of[S.one]) K |= bit(a);
  return K;
}

Congruence maxplus_congruence_from_kernel(int modulus, int window) {
  Congruence C;
  const int n = 2 * window + 1;
  C.class_of.assign(n, -1);
  int next = 0;
  for (int i = 0; i < n; ++i) {
    if (C.class_of[i] >= 0) continue;
    C.class_of[i] = next;
    for (int j = i + 1; j < n; ++j) {
      bool same = modulus == 0 ? false : ((j - i) % modulus == 0);
      if (C.class_of[j] < 0 && same) C.class_of[j] = next;
    }
    ++next;
  }
  return C;
}

int maxplus_kernel_from_congruence(const Congruence& C, int window) {
  const int cls = C.class_of[window];  // class of the unit (value 0)
  int modulus = 0;
  for (int v = 1; v <= window; ++v)
    if (C.class_of[window + v] == cls) { modulus = v; break; }
  return modulus;
}

}  // namespace hyperforge
