#include "hyperforge/census.hpp"

#include <stdexcept>
#include <utility>

#include "hyperforge/morphisms.hpp"
#include "hyperforge/quotient.hpp"

namespace hyperforge {

namespace {

constexpr int kMaxQ = 32;

std::vector<std::pair<int, int>> prime_powers_to_32() {
  std::vector<std::pair<int, int>> out;  // (p, k) with p^k <= 32, ascending p^k
  for (int q = 2; q <= kMaxQ; ++q) {
    int p = q;
    for (int d = 2; d * d <= q; ++d)
      if (q % d == 0) {
        p = d;
        break;
      }
    // p is the smallest prime factor; q must be a pure power of it
    int k = 0, v = q;
    while (v % p == 0 && v > 1) {
      v /= p;
      ++k;
    }
    if (v == 1) out.emplace_back(p, k);
  }
  return out;
}

HyperTable strip_mul(HyperTable H) {
  H.mul.clear();
  H.one = -1;
  return H;
}

// one-point table: the degenerate structure every census starts with
HyperTable trivial_table(CensusKind kind) {
  if (kind == CensusKind::hyperfield)
    return make_hypertable({"0"}, {bit(0)}, {0}, 0, 0);
  return make_hypertable({"0"}, {bit(0)}, {}, 0, -1);
}

std::vector<std::string> carrier_names(int n) {
  std::vector<std::string> names(static_cast<size_t>(n));
  names[0] = "0";
  for (int i = 1; i < n; ++i) names[static_cast<size_t>(i)] = "u" + std::to_string(i - 1);
  return names;
}

// walks all (2^n - 1)^rows assignments of nonempty subsets
struct RowWalker {
  int rows, n;
  std::vector<ElemSet> r;
  bool first = true;

  RowWalker(int rows_, int n_) : rows(rows_), n(n_), r(static_cast<size_t>(rows_), 1) {}

  bool next() {
    if (first) {
      first = false;
      return true;
    }
    const ElemSet top = full_set(n);
    for (int i = 0; i < rows; ++i) {
      if (r[static_cast<size_t>(i)] < top) {
        ++r[static_cast<size_t>(i)];
        return true;
      }
      r[static_cast<size_t>(i)] = 1;
    }
    return false;
  }
};

// cyclic multiplication on ids 1..n-1 (1 is the unit), zero absorbing
std::vector<Elem> cyclic_mul(int n) {
  std::vector<Elem> mul(static_cast<size_t>(n) * n, 0);
  for (int i = 0; i < n - 1; ++i)
    for (int j = 0; j < n - 1; ++j)
      mul[static_cast<size_t>(1 + i) * n + (1 + j)] = 1 + (i + j) % (n - 1);
  return mul;
}

std::vector<HyperTable> hyperfield_candidates(int n) {
  std::vector<HyperTable> out;
  const std::vector<Elem> mul = cyclic_mul(n);
  auto inv = [n](Elem a) { return a == 1 ? 1 : 1 + (n - 1) - (a - 1); };

  RowWalker walk(n - 1, n);  // rows 1+u for every nonzero u
  while (walk.next()) {
    std::vector<ElemSet> hsum(static_cast<size_t>(n) * n);
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b) {
        if (a == 0) {
          hsum[static_cast<size_t>(a) * n + b] = bit(b);
        } else if (b == 0) {
          hsum[static_cast<size_t>(a) * n + b] = bit(a);
        } else {
          const Elem c = mul[static_cast<size_t>(inv(a)) * n + b];
          ElemSet scaled = 0;
          for (Elem y : set_elems(walk.r[static_cast<size_t>(c - 1)]))
            scaled |= bit(mul[static_cast<size_t>(a) * n + y]);
          hsum[static_cast<size_t>(a) * n + b] = scaled;
        }
      }
    HyperTable H = make_hypertable(carrier_names(n), std::move(hsum), mul, 0, 1);
    if (check_hyperfield(H).all_pass()) out.push_back(std::move(H));
  }
  return out;
}

std::vector<HyperTable> hypergroup_candidates(int n) {
  std::vector<HyperTable> out;
  RowWalker walk((n - 1) * (n - 1), n);  // every nonzero cell is free
  while (walk.next()) {
    std::vector<ElemSet> hsum(static_cast<size_t>(n) * n);
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b) {
        if (a == 0)
          hsum[static_cast<size_t>(a) * n + b] = bit(b);
        else if (b == 0)
          hsum[static_cast<size_t>(a) * n + b] = bit(a);
        else
          hsum[static_cast<size_t>(a) * n + b] =
              walk.r[static_cast<size_t>((a - 1) * (n - 1) + (b - 1))];
      }
    HyperTable H = make_hypertable(carrier_names(n), std::move(hsum), {}, 0, -1);
    if (check_hypergroup(H).all_pass()) out.push_back(std::move(H));
  }
  return out;
}

}  // namespace

std::vector<CensusEntry> census(int max_order, CensusKind kind) {
  const int guard = kind == CensusKind::hyperfield ? 4 : 3;
  if (max_order < 1 || max_order > guard) throw std::invalid_argument("order guard exceeded");

  // residue tables GF(q)/G by class count, built once, ascending q then |G|
  std::vector<std::pair<HyperTable, std::string>> residues;
  for (const auto& [p, k] : prime_powers_to_32()) {
    const FinRing F = make_finite_field(p, k);
    for (const Subgroup& G : unit_subgroups(F)) {
      Quotient Q = krasner_quotient(F, G);
      if (Q.table.size() > max_order) continue;
      HyperTable T = kind == CensusKind::hyperfield ? Q.table : strip_mul(Q.table);
      residues.emplace_back(std::move(T), "gf:" + std::to_string(F.size()) + "/order:" +
                                              std::to_string(set_size(G.members)));
    }
  }

  std::vector<CensusEntry> out;
  for (int n = 1; n <= max_order; ++n) {
    std::vector<HyperTable> cands;
    if (n == 1)
      cands.push_back(trivial_table(kind));
    else
      cands = kind == CensusKind::hyperfield ? hyperfield_candidates(n)
                                             : hypergroup_candidates(n);
    std::vector<CensusEntry> reps;
    for (HyperTable& H : cands) {
      bool duplicate = false;
      for (const CensusEntry& e : reps)
        if (iso_search(e.table, H).found) {
          duplicate = true;
          break;
        }
      if (duplicate) continue;
      CensusEntry e{n, std::move(H), false, ""};
      for (const auto& [T, name] : residues)
        if (T.size() == n && iso_search(e.table, T).found) {
          e.realizable = true;
          e.realization = name;
          break;
        }
      reps.push_back(std::move(e));
    }
    for (CensusEntry& e : reps) out.push_back(std::move(e));
  }
  return out;
}

}  // namespace hyperforge
