#pragma once

#include <string>
#include <vector>

#include "hyperforge/pairs.hpp"
#include "hyperforge/quotient.hpp"

namespace hyperforge {

// Total maps between carriers; endpoints are stored by value since every
// fixture is desk-sized.
struct TableArrow {
  HyperTable dom, cod;
  std::vector<Elem> to;
};
struct PairArrow {
  Pair dom, cod;
  std::vector<Elem> to;
};

TableArrow table_identity(const HyperTable& H);
PairArrow pair_identity(const Pair& P);
TableArrow compose(const TableArrow& f, const TableArrow& g);  // g after f
PairArrow compose(const PairArrow& f, const PairArrow& g);

// f(a1 + a2) lands inside f(a1) + f(a2), elementwise over the whole table.
Verdict is_subset_morphism(const TableArrow& f);

// Neutral membership is preserved: iota in a1+a2 forces iota' in f(a1)+f(a2).
// Tables use their zero as the neutral (their designated one when no zero).
Verdict is_weak_morphism(const TableArrow& f);

// Null products are preserved: a1*a2 null forces f(a1)*f(a2) null.
Verdict is_weak_morphism(const PairArrow& f);

// The five order-morphism conditions: iota to iota, T into T', monotone from
// Rdom to Rcod, T-equivariance on both sides, and f(b1*b2) surpassed by
// f(b1)*f(b2).
Verdict is_preceq_morphism(const PairArrow& f, const SurpassRel& Rdom, const SurpassRel& Rcod);

// Lifts an inclusion morphism of tables to the power-set pairs by elementwise
// image. Requires f to pass is_subset_morphism, respect multiplication, and
// fix zero and one; throws otherwise.
PairArrow powerset_extension(const TableArrow& f);

// Residue arrow induced by a surjective monoid homomorphism: each coset bG
// maps to the set of codomain cosets whose member set equals f(b)f(G).
struct ResidueMorphism {
  Quotient dom, cod;
  std::vector<ElemSet> to;  // per domain coset: set of codomain coset indices
  Verdict inclusion;        // image of every coset product inside the product of images
};
ResidueMorphism induced_residue_morphism(const FinMonoid& M, const FinMonoid& N,
                                         const std::vector<Elem>& f, ElemSet G);

// Nested-residue matching: the one-step residue by the larger subgroup versus
// the residue of the residue, with an explicit class bijection and table
// comparison. The ring overload runs the additive residue chain; the monoid
// overload runs the multiplicative coset chain and requires the inner residue
// to stay single-valued.
struct ThirdIso {
  Quotient left, mid, right;
  std::vector<Elem> match;  // left class index -> right class index
  Verdict verdict;
};
ThirdIso third_isomorphism(const FinRing& R, const Subgroup& G, const Subgroup& G1);
ThirdIso third_isomorphism(const FinMonoid& M, ElemSet G, ElemSet G1);

// Backtracking search for a structure bijection (hsum always, mul and the
// zero/one designations when present), pruning by row/column degree
// signatures; returns the least bijection in carrier order or an exhaustion
// report. Carriers up to 10 elements.
struct IsoResult {
  bool found = false;
  std::vector<Elem> map;
  long long nodes_explored = 0;
  std::string detail;
};
IsoResult iso_search(const HyperTable& A, const HyperTable& B);

// Identity and composition laws of the power-set lift over a fixture set,
// plus faithfulness (distinct arrows lift distinctly, singleton restriction
// recovers the base arrow) and null-set containment.
Verdict functor_laws_powerset(const std::vector<TableArrow>& fixtures);

}  // namespace hyperforge
