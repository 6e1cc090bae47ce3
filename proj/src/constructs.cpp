#include "hyperforge/constructs.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace hyperforge {

namespace {

constexpr int kCarrierCap = 63;

std::vector<Elem> decode(long long idx, const std::vector<int>& sizes) {
  std::vector<Elem> tup(sizes.size());
  for (size_t k = 0; k < sizes.size(); ++k) {
    tup[k] = static_cast<Elem>(idx % sizes[k]);
    idx /= sizes[k];
  }
  return tup;
}

Elem encode(const std::vector<Elem>& tup, const std::vector<int>& sizes) {
  long long idx = 0, radix = 1;
  for (size_t k = 0; k < sizes.size(); ++k) {
    idx += tup[k] * radix;
    radix *= sizes[k];
  }
  return static_cast<Elem>(idx);
}

std::vector<std::string> tangible_names(const Pair& P) {
  std::vector<std::string> tn;
  tn.reserve(P.tset.size());
  for (Elem t : P.tset) tn.push_back(P.names[t]);
  return tn;
}

// shared componentwise skeleton; only T and the actions differ between the two
Pair product_core(const std::vector<Pair>& Ps, bool diagonal) {
  if (Ps.empty()) throw std::invalid_argument("product of no pairs");
  std::vector<int> sizes;
  long long total = 1;
  bool with_mul = true;
  for (const Pair& P : Ps) {
    sizes.push_back(P.size());
    total *= P.size();
    if (total > kCarrierCap) throw std::invalid_argument("product carrier exceeds 63 elements");
    with_mul = with_mul && P.has_mul();
  }
  const int k = static_cast<int>(Ps.size());
  const int n = static_cast<int>(total);

  Pair out;
  out.names.resize(n);
  out.null0.assign(n, 1);
  for (Elem x = 0; x < n; ++x) {
    const auto tup = decode(x, sizes);
    std::string nm = "(";
    for (int c = 0; c < k; ++c) {
      nm += Ps[c].names[tup[c]];
      nm += c + 1 < k ? "," : ")";
      if (!Ps[c].is_null(tup[c])) out.null0[x] = 0;
    }
    out.names[x] = k == 1 ? Ps[0].names[tup[0]] : nm;
  }

  out.star.resize(static_cast<size_t>(n) * n);
  if (with_mul) out.mul.resize(static_cast<size_t>(n) * n);
  std::vector<Elem> sv(k), mv(k);
  for (Elem x = 0; x < n; ++x) {
    const auto a = decode(x, sizes);
    for (Elem y = 0; y < n; ++y) {
      const auto b = decode(y, sizes);
      for (int c = 0; c < k; ++c) {
        sv[c] = Ps[c].st(a[c], b[c]);
        if (with_mul) mv[c] = Ps[c].m(a[c], b[c]);
      }
      out.star[static_cast<size_t>(x) * n + y] = encode(sv, sizes);
      if (with_mul) out.mul[static_cast<size_t>(x) * n + y] = encode(mv, sizes);
    }
  }

  std::vector<Elem> iv(k), ov(k);
  for (int c = 0; c < k; ++c) {
    iv[c] = Ps[c].iota;
    ov[c] = Ps[c].one;
  }
  out.iota = encode(iv, sizes);
  out.one = encode(ov, sizes);

  // tangible tuples, each remembered by its per-component T positions
  std::vector<std::pair<Elem, std::vector<int>>> tans;
  if (diagonal) {
    const auto tn0 = tangible_names(Ps[0]);
    for (const Pair& P : Ps)
      if (tangible_names(P) != tn0)
        throw std::invalid_argument("direct sum needs a common T across all summands");
    for (int p = 0; p < Ps[0].tcount(); ++p) {
      std::vector<Elem> tv(k);
      for (int c = 0; c < k; ++c) tv[c] = Ps[c].tset[p];
      tans.emplace_back(encode(tv, sizes), std::vector<int>(k, p));
    }
  } else {
    std::vector<int> pos(k, 0);
    while (true) {
      std::vector<Elem> tv(k);
      for (int c = 0; c < k; ++c) tv[c] = Ps[c].tset[pos[c]];
      tans.emplace_back(encode(tv, sizes), pos);
      int c = 0;
      while (c < k && ++pos[c] == Ps[c].tcount()) pos[c++] = 0;
      if (c == k) break;
    }
  }
  std::sort(tans.begin(), tans.end());

  out.tset.reserve(tans.size());
  out.lact.resize(tans.size());
  out.ract.resize(tans.size());
  std::vector<Elem> lv(k), rv(k);
  for (size_t i = 0; i < tans.size(); ++i) {
    out.tset.push_back(tans[i].first);
    out.lact[i].resize(n);
    out.ract[i].resize(n);
    for (Elem b = 0; b < n; ++b) {
      const auto bt = decode(b, sizes);
      for (int c = 0; c < k; ++c) {
        lv[c] = Ps[c].la(tans[i].second[c], bt[c]);
        rv[c] = Ps[c].ra(tans[i].second[c], bt[c]);
      }
      out.lact[i][b] = encode(lv, sizes);
      out.ract[i][b] = encode(rv, sizes);
    }
  }
  return out;
}

void require_semiring(const Pair& P, const std::string& who) {
  if (!P.has_mul()) throw std::invalid_argument(who + ": base pair has no product");
  const int n = P.size();
  const auto reject = [&](const std::string& law) {
    throw std::invalid_argument(who + ": base is not a semiring pair (" + law + ")");
  };
  for (Elem a = 0; a < n; ++a) {
    if (P.st(P.iota, a) != a || P.st(a, P.iota) != a) reject("iota not neutral");
    if (P.m(P.iota, a) != P.iota || P.m(a, P.iota) != P.iota) reject("iota not absorbing");
    for (Elem b = 0; b < n; ++b) {
      if (P.st(a, b) != P.st(b, a)) reject("star not commutative");
      for (Elem c = 0; c < n; ++c) {
        if (P.st(P.st(a, b), c) != P.st(a, P.st(b, c))) reject("star not associative");
        if (P.m(P.m(a, b), c) != P.m(a, P.m(b, c))) reject("product not associative");
        if (P.m(a, P.st(b, c)) != P.st(P.m(a, b), P.m(a, c)))
          reject("product not left distributive");
        if (P.m(P.st(a, b), c) != P.st(P.m(a, c), P.m(b, c)))
          reject("product not right distributive");
      }
    }
  }
}

}  // namespace

Pair product_pair(const std::vector<Pair>& Ps) { return product_core(Ps, false); }
Pair direct_sum_pair(const std::vector<Pair>& Ps) { return product_core(Ps, true); }

Pair polynomial_pair(const Pair& P, int max_degree, PolyMode mode) {
  require_semiring(P, "polynomial_pair");
  if (max_degree < 0) throw std::invalid_argument("polynomial_pair: negative degree");
  const int nA = P.size(), d = max_degree;
  long long total = 1;
  for (int i = 0; i <= d; ++i) {
    total *= nA;
    if (total > kCarrierCap)
      throw std::invalid_argument("polynomial_pair: carrier exceeds 63 elements");
  }
  const int n = static_cast<int>(total);
  const std::vector<int> sizes(d + 1, nA);

  Pair out;
  out.names.resize(n);
  out.null0.assign(n, 1);
  for (Elem x = 0; x < n; ++x) {
    const auto cf = decode(x, sizes);
    std::string nm = "(";
    for (int i = 0; i <= d; ++i) {
      nm += P.names[cf[i]];
      nm += i < d ? "|" : ")";
      if (!P.is_null(cf[i])) out.null0[x] = 0;
    }
    out.names[x] = nm;
  }

  out.star.resize(static_cast<size_t>(n) * n);
  out.mul.resize(static_cast<size_t>(n) * n);
  for (Elem x = 0; x < n; ++x) {
    const auto a = decode(x, sizes);
    for (Elem y = 0; y < n; ++y) {
      const auto b = decode(y, sizes);
      std::vector<Elem> s(d + 1), c(d + 1, P.iota);
      for (int i = 0; i <= d; ++i) s[i] = P.st(a[i], b[i]);
      for (int i = 0; i <= d; ++i)
        for (int j = 0; j <= d; ++j) {
          const Elem pr = P.m(a[i], b[j]);
          if (i + j > d) {
            if (mode == PolyMode::strict && pr != P.iota)
              throw std::domain_error("polynomial_pair: product of degrees " + std::to_string(i) +
                                      " and " + std::to_string(j) + " exceeds the bound");
            c[d] = P.st(c[d], pr);
          } else {
            c[i + j] = P.st(c[i + j], pr);
          }
        }
      out.star[static_cast<size_t>(x) * n + y] = encode(s, sizes);
      out.mul[static_cast<size_t>(x) * n + y] = encode(c, sizes);
    }
  }

  out.iota = encode(std::vector<Elem>(d + 1, P.iota), sizes);
  std::vector<Elem> mono(d + 1, P.iota);
  mono[0] = P.one;
  out.one = encode(mono, sizes);
  for (int i = 0; i <= d; ++i)
    for (Elem t : P.tset) {
      std::vector<Elem> v(d + 1, P.iota);
      v[i] = t;
      out.tset.push_back(encode(v, sizes));
    }
  std::sort(out.tset.begin(), out.tset.end());
  out.tset.erase(std::unique(out.tset.begin(), out.tset.end()), out.tset.end());
  derive_actions(out);
  return out;
}

Pair matrix_pair(const Pair& P, int n_dim) {
  require_semiring(P, "matrix_pair");
  if (n_dim < 1 || n_dim > 3) throw std::invalid_argument("matrix_pair: n must be 1..3");
  const int nA = P.size(), nn = n_dim * n_dim;
  long long total = 1;
  for (int i = 0; i < nn; ++i) {
    total *= nA;
    if (total > kCarrierCap) throw std::invalid_argument("matrix_pair: carrier exceeds 63 elements");
  }
  const int n = static_cast<int>(total);
  const std::vector<int> sizes(nn, nA);

  Pair out;
  out.names.resize(n);
  out.null0.assign(n, 1);
  for (Elem x = 0; x < n; ++x) {
    const auto e = decode(x, sizes);
    std::string nm = "[";
    for (int i = 0; i < n_dim; ++i)
      for (int j = 0; j < n_dim; ++j) {
        nm += P.names[e[i * n_dim + j]];
        nm += j < n_dim - 1 ? "," : (i < n_dim - 1 ? ";" : "]");
        if (!P.is_null(e[i * n_dim + j])) out.null0[x] = 0;
      }
    out.names[x] = nm;
  }

  out.star.resize(static_cast<size_t>(n) * n);
  out.mul.resize(static_cast<size_t>(n) * n);
  for (Elem x = 0; x < n; ++x) {
    const auto a = decode(x, sizes);
    for (Elem y = 0; y < n; ++y) {
      const auto b = decode(y, sizes);
      std::vector<Elem> s(nn), c(nn, P.iota);
      for (int e = 0; e < nn; ++e) s[e] = P.st(a[e], b[e]);
      for (int i = 0; i < n_dim; ++i)
        for (int kk = 0; kk < n_dim; ++kk) {
          Elem acc = P.iota;
          for (int j = 0; j < n_dim; ++j)
            acc = P.st(acc, P.m(a[i * n_dim + j], b[j * n_dim + kk]));
          c[i * n_dim + kk] = acc;
        }
      out.star[static_cast<size_t>(x) * n + y] = encode(s, sizes);
      out.mul[static_cast<size_t>(x) * n + y] = encode(c, sizes);
    }
  }

  out.iota = encode(std::vector<Elem>(nn, P.iota), sizes);
  std::vector<Elem> id(nn, P.iota);
  for (int i = 0; i < n_dim; ++i) id[i * n_dim + i] = P.one;
  out.one = encode(id, sizes);

  for (int i = 0; i < n_dim; ++i)
    for (int j = 0; j < n_dim; ++j)
      for (Elem t : P.tset) {
        std::vector<Elem> v(nn, P.iota);
        v[i * n_dim + j] = t;
        out.tset.push_back(encode(v, sizes));
      }
  out.tset.push_back(out.one);
  // unit products vanish once n >= 2, so the zero matrix is needed for closure
  if (n_dim >= 2) out.tset.push_back(out.iota);
  std::sort(out.tset.begin(), out.tset.end());
  out.tset.erase(std::unique(out.tset.begin(), out.tset.end()), out.tset.end());
  derive_actions(out);
  return out;
}

Pair semiring_pair(const FinRing& R) {
  Pair out;
  out.names = R.names;
  const int n = R.size();
  out.star.resize(static_cast<size_t>(n) * n);
  out.mul.resize(static_cast<size_t>(n) * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      out.star[static_cast<size_t>(a) * n + b] = R.a(a, b);
      out.mul[static_cast<size_t>(a) * n + b] = R.m(a, b);
    }
  out.iota = R.zero;
  out.tset = set_elems(R.unit_set());
  out.one = R.one;
  out.null0.assign(n, 0);
  out.null0[R.zero] = 1;
  derive_actions(out);
  return out;
}

Pair boolean_pair() {
  Pair out;
  out.names = {"0", "1"};
  out.star = {0, 1, 1, 1};
  out.mul = {0, 0, 0, 1};
  out.iota = 0;
  out.tset = {1};
  out.one = 1;
  out.null0 = {1, 0};
  derive_actions(out);
  return out;
}

// ---------------------------------------------------------------------------
// free T-magmas and congruences

int TermUniverse::find_leaf(int gen, int scalar) const {
  if (scalar == unit) scalar = -1;
  for (int i = 0; i < size(); ++i)
    if (terms[i].is_leaf() && terms[i].gen == gen && terms[i].scalar == scalar) return i;
  return -1;
}

int TermUniverse::find_node(int left, int right) const {
  for (int i = 0; i < size(); ++i)
    if (!terms[i].is_leaf() && terms[i].left == left && terms[i].right == right) return i;
  return -1;
}

TermUniverse free_T_magma(std::vector<std::string> gens, std::vector<std::string> tnames,
                          int unit, int depth, int budget) {
  if (gens.empty()) throw std::invalid_argument("free_T_magma: no generators");
  if (tnames.empty()) throw std::invalid_argument("free_T_magma: empty scalar monoid");
  if (unit < 0 || unit >= static_cast<int>(tnames.size()))
    throw std::invalid_argument("free_T_magma: unit out of range");
  if (depth < 0 || depth > 4) throw std::invalid_argument("free_T_magma: depth must be 0..4");

  TermUniverse U;
  U.gens = std::move(gens);
  U.tnames = std::move(tnames);
  U.unit = unit;
  U.depth = depth;

  const auto push = [&](Term t) {
    if (U.size() >= budget) throw std::length_error("free_T_magma: term budget exceeded");
    U.terms.push_back(std::move(t));
  };
  for (int g = 0; g < static_cast<int>(U.gens.size()); ++g)
    push({g, -1, -1, -1, 0, U.gens[g]});
  for (int s = 0; s < static_cast<int>(U.tnames.size()); ++s) {
    if (s == unit) continue;
    for (int g = 0; g < static_cast<int>(U.gens.size()); ++g)
      push({g, s, -1, -1, 0, U.tnames[s] + "." + U.gens[g]});
  }

  std::vector<int> level_end = {U.size()};  // ids below level_end[h] have height <= h
  for (int h = 1; h <= depth; ++h) {
    const int all = level_end.back();
    const int prev = level_end.size() >= 2 ? level_end[level_end.size() - 2] : 0;
    for (int u = 0; u < all; ++u)
      for (int v = 0; v < all; ++v) {
        if (u < prev && v < prev) continue;  // height would stay below h
        push({-1, -1, u, v, h, "(" + U.terms[u].label + "*" + U.terms[v].label + ")"});
      }
    level_end.push_back(U.size());
  }
  return U;
}

int CongRel::find(int x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

bool CongRel::unite(int u, int v) {
  u = find(u);
  v = find(v);
  if (u == v) return false;
  if (u > v) std::swap(u, v);
  parent[v] = u;  // roots stay the least member of their class
  return true;
}

std::vector<std::vector<int>> CongRel::classes() {
  std::map<int, std::vector<int>> by_root;
  for (int i = 0; i < static_cast<int>(parent.size()); ++i) by_root[find(i)].push_back(i);
  std::vector<std::vector<int>> out;
  out.reserve(by_root.size());
  for (auto& [root, members] : by_root) out.push_back(std::move(members));
  return out;
}

CongRel congruence_closure(const TermUniverse& U, std::vector<std::pair<int, int>> gens) {
  CongRel rel;
  rel.parent.resize(U.size());
  std::iota(rel.parent.begin(), rel.parent.end(), 0);
  for (const auto& [u, v] : gens) {
    if (u < 0 || u >= U.size() || v < 0 || v >= U.size())
      throw std::invalid_argument("congruence_closure: generator outside the universe");
    rel.unite(u, v);
  }

  // children equal => parents equal, to fixpoint; signatures bucket the nodes
  bool changed = true;
  while (changed) {
    changed = false;
    std::map<std::pair<int, int>, int> sig;
    for (int i = 0; i < U.size(); ++i) {
      if (U.terms[i].is_leaf()) continue;
      const std::pair<int, int> key{rel.find(U.terms[i].left), rel.find(U.terms[i].right)};
      const auto [it, fresh] = sig.emplace(key, i);
      if (!fresh && rel.unite(it->second, i)) changed = true;
    }
  }
  rel.closed = true;
  return rel;
}

// ---------------------------------------------------------------------------
// tensor products

namespace {

void validate_magma(const MagmaPair& M, const char* slot) {
  const std::string who = std::string("tensor_product: ") + slot;
  const int n = M.size();
  if (n == 0) throw std::invalid_argument(who + " factor is empty");
  if (static_cast<int>(M.op.size()) != n * n)
    throw std::invalid_argument(who + " factor has a malformed product table");
  for (Elem v : M.op)
    if (v < 0 || v >= n) throw std::invalid_argument(who + " factor product out of range");
  if (M.act.size() != M.tnames.size())
    throw std::invalid_argument(who + " factor action rows do not match T");
  for (const auto& row : M.act) {
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument(who + " factor action row has wrong length");
    for (Elem v : row)
      if (v < 0 || v >= n) throw std::invalid_argument(who + " factor action out of range");
  }
  if (static_cast<int>(M.null0.size()) != n)
    throw std::invalid_argument(who + " factor null flags have wrong length");
}

}  // namespace

MagmaPair right_magma(const Pair& P) {
  MagmaPair M{P.names, P.star, tangible_names(P), P.ract, P.null0};
  return M;
}

MagmaPair left_magma(const Pair& P) {
  MagmaPair M{P.names, P.star, tangible_names(P), P.lact, P.null0};
  return M;
}

MagmaPair point_magma(std::vector<std::string> tnames) {
  MagmaPair M{{"pt"}, {0}, std::move(tnames), {}, {1}};
  M.act.assign(M.tnames.size(), {0});
  return M;
}

int TensorResult::gen_id(Elem x1, Elem x2) const {
  if (x1 < 0 || x1 >= n1 || x2 < 0 || x2 >= n2)
    throw std::invalid_argument("tensor generator out of range");
  return x1 * n2 + x2;
}

int TensorResult::leaf_class(Elem x1, Elem x2) const {
  return class_of[universe.find_leaf(gen_id(x1, x2), -1)];
}

TensorResult tensor_product(const MagmaPair& M1, const MagmaPair& M2, int depth, int budget) {
  validate_magma(M1, "left");
  validate_magma(M2, "right");
  if (M1.tnames != M2.tnames)
    throw std::invalid_argument("tensor_product: factors disagree on T");

  TensorResult T;
  T.depth = depth;
  T.n1 = M1.size();
  T.n2 = M2.size();
  std::vector<std::string> gnames;
  gnames.reserve(static_cast<size_t>(T.n1) * T.n2);
  for (Elem x1 = 0; x1 < T.n1; ++x1)
    for (Elem x2 = 0; x2 < T.n2; ++x2)
      gnames.push_back("(" + M1.names[x1] + "," + M2.names[x2] + ")");
  T.universe = free_T_magma(std::move(gnames), {"1"}, 0, depth, budget);

  // bilinearity in each slot, then the balanced law across the middle
  std::vector<std::pair<int, int>> rels;
  if (depth >= 1) {
    for (Elem v = 0; v < T.n1; ++v)
      for (Elem w = 0; w < T.n1; ++w)
        for (Elem x2 = 0; x2 < T.n2; ++x2) {
          const int prod = T.universe.find_leaf(T.gen_id(M1.m(v, w), x2), -1);
          const int split = T.universe.find_node(T.universe.find_leaf(T.gen_id(v, x2), -1),
                                                 T.universe.find_leaf(T.gen_id(w, x2), -1));
          rels.emplace_back(prod, split);
        }
    for (Elem x1 = 0; x1 < T.n1; ++x1)
      for (Elem v = 0; v < T.n2; ++v)
        for (Elem w = 0; w < T.n2; ++w) {
          const int prod = T.universe.find_leaf(T.gen_id(x1, M2.m(v, w)), -1);
          const int split = T.universe.find_node(T.universe.find_leaf(T.gen_id(x1, v), -1),
                                                 T.universe.find_leaf(T.gen_id(x1, w), -1));
          rels.emplace_back(prod, split);
        }
  }
  for (size_t a = 0; a < M1.tnames.size(); ++a)
    for (Elem x1 = 0; x1 < T.n1; ++x1)
      for (Elem x2 = 0; x2 < T.n2; ++x2)
        rels.emplace_back(T.universe.find_leaf(T.gen_id(M1.act[a][x1], x2), -1),
                          T.universe.find_leaf(T.gen_id(x1, M2.act[a][x2]), -1));

  T.cong = congruence_closure(T.universe, std::move(rels));
  T.classes = T.cong.classes();
  T.class_of.assign(T.universe.size(), -1);
  for (int c = 0; c < static_cast<int>(T.classes.size()); ++c)
    for (int id : T.classes[c]) T.class_of[id] = c;

  // a term sits in M1 (x) nulls / nulls (x) M2 when one slot is null at every leaf
  const int N = T.universe.size();
  std::vector<char> all1(N), all2(N);
  for (int i = 0; i < N; ++i) {
    const Term& t = T.universe.terms[i];
    if (t.is_leaf()) {
      all1[i] = M1.null0[t.gen / T.n2];
      all2[i] = M2.null0[t.gen % T.n2];
    } else {
      all1[i] = all1[t.left] && all1[t.right];
      all2[i] = all2[t.left] && all2[t.right];
    }
  }
  T.null_class.assign(T.classes.size(), 0);
  for (int i = 0; i < N; ++i)
    if (all1[i] || all2[i]) T.null_class[T.class_of[i]] = 1;
  return T;
}

}  // namespace hyperforge
