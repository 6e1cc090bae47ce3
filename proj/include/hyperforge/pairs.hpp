#pragma once

#include <string>
#include <vector>

#include "hyperforge/hyperstruct.hpp"
#include "hyperforge/report.hpp"

namespace hyperforge {

// A carrier with a single-valued pairing operation, a distinguished
// multiplicative part T acting on both sides, a neutral element iota, and a
// null subset containing iota. The product over the whole carrier is optional;
// the T-actions are always total.
struct Pair {
  std::vector<std::string> names;
  std::vector<Elem> star;        // row-major size*size
  Elem iota = 0;
  std::vector<Elem> tset;        // carrier indices of T, ascending
  Elem one = -1;                 // unit of T (a carrier index, member of tset)
  std::vector<char> null0;       // null0[a] != 0 iff a is null
  std::vector<Elem> mul;  // full product, row-major; may be empty
  std::vector<std::vector<Elem>> lact, ract;  // |T| rows: lact[i][b] = t_i . b, ract[i][b] = b . t_i
  std::vector<ElemSet> psets;    // backing subsets when built over a hypertable
  bool weakly_admissible = true;

  int size() const { return static_cast<int>(names.size()); }
  int tcount() const { return static_cast<int>(tset.size()); }
  Elem st(Elem a, Elem b) const { return star[static_cast<size_t>(a) * names.size() + b]; }
  bool has_mul() const { return !mul.empty(); }
  Elem m(Elem a, Elem b) const { return mul[static_cast<size_t>(a) * names.size() + b]; }
  Elem la(int ti, Elem b) const { return lact[ti][b]; }
  Elem ra(int ti, Elem b) const { return ract[ti][b]; }
  bool is_null(Elem a) const { return null0[a] != 0; }
  int tpos(Elem t) const;  // position inside tset, -1 when absent
};

// Fills lact/ract from a full product table.
void derive_actions(Pair& P);

// All nonempty subsets of H (carrier index = mask-1) under the lifted
// hypersum; T is the nonzero singletons, iota the singleton of zero, and the
// null subsets are exactly those containing zero. Requires zero, mul, one,
// and a carrier of at most 6 elements.
Pair powerset_pair(const HyperTable& H);

// T with an adjoined absorbing zero and a top element: every sum of two
// nonzero elements is the top, the top absorbs T multiplicatively, and the
// nulls are {0, top}.
Pair infinity_pair(const FinMonoid& T);

// iota neutral and null, T a unital submonoid acting on both sides,
// null absorption under T, T-biset associativity, and distributivity of the
// actions over the pairing operation.
AxiomReport check_pair_axioms(const Pair& P);

// A concrete pre-order candidate on a pair's carrier.
struct SurpassRel {
  std::string kind;      // "subset", "null-step", "equality", "custom"
  int n = 0;
  std::vector<char> le;  // row-major n*n
  bool at(Elem a, Elem b) const { return le[static_cast<size_t>(a) * n + b] != 0; }
};

SurpassRel subset_relation(const Pair& P);     // needs power-set backing
SurpassRel null_step_relation(const Pair& P);  // a <= b iff b = a * c for a null c
SurpassRel equality_relation(const Pair& P);

// Pre-order plus the four surpassing axioms: discreteness on T and iota,
// domination by null steps, minimality of iota, and nulls above iota.
AxiomReport check_surpassing(const Pair& P, const SurpassRel& R);

// b(b1*b2) <= bb1 * bb2 and the mirror image; requires a full product.
AxiomReport check_preceq_distributive(const Pair& P, const SurpassRel& R);

// Elements c with iota <= c.
std::vector<Elem> a_null(const Pair& P, const SurpassRel& R);

struct RelCompare {
  bool left_in_right = true, right_in_left = true;
  std::vector<Elem> witness_lr, witness_rl;  // first pair related one way only
};
RelCompare compare_relations(const SurpassRel& A, const SurpassRel& B);

// For every a in T: some quasi-negative b in T with a*b null exists, and all
// such products agree.
struct PropertyN {
  bool holds = false;
  std::vector<Elem> dagger;  // per tset position: the first quasi-negative, or -1
  std::vector<Elem> circ;    // per tset position: the common product, or -1
  Verdict verdict;
};
PropertyN check_property_N(const Pair& P);

// A candidate t with 1*t null such that a -> a.t maps T into T, is an
// involution, and absorbs on both sides; the first passing candidate wins.
struct NegationMap {
  bool found = false;
  Elem via = -1;
  std::vector<Elem> image;  // per tset position
  std::string detail;
};
NegationMap negation_map(const Pair& P);

// No a in T has two distinct quasi-negatives in T.
Verdict is_uniquely_negated(const Pair& P);

}  // namespace hyperforge
