#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hyperforge/carrier.hpp"
#include "hyperforge/report.hpp"

namespace hyperforge {

// A finite multivalued addition table, optionally paired with a single-valued
// multiplication. hsum is row-major; every entry is a nonempty subset of the
// carrier. zero/one are -1 when absent. A present zero must be hyperneutral
// (0 + a = {a} = a + 0); a present one is only a designated element — its
// neutrality is the business of the axiom checkers, because tables built from
// multiplicative cosets store their hyperoperation in hsum and use one for
// the unit coset.
struct HyperTable {
  std::vector<std::string> names;
  std::vector<ElemSet> hsum;
  std::vector<Elem> mul;  // empty when the table has no multiplication
  Elem zero = -1;
  Elem one = -1;

  int size() const { return static_cast<int>(names.size()); }
  bool has_mul() const { return !mul.empty(); }
  bool has_zero() const { return zero >= 0; }
  bool has_one() const { return one >= 0; }
  ElemSet hs(Elem a, Elem b) const { return hsum[static_cast<size_t>(a) * names.size() + b]; }
  Elem m(Elem a, Elem b) const { return mul[static_cast<size_t>(a) * names.size() + b]; }
};

// Validates shape, nonempty entries, index ranges, and zero-hyperneutrality.
HyperTable make_hypertable(std::vector<std::string> names, std::vector<ElemSet> hsum,
                           std::vector<Elem> mul = {}, Elem zero = -1, Elem one = -1);

// {0,1} with 1+1 = {0,1}.
HyperTable krasner_table();
// {0,1,-1} with 1+(-1) = {0,1,-1}, 1+1 = {1}, (-1)+(-1) = {-1}.
HyperTable signs_table();

// Union of elementwise hypersums. Throws on an empty argument.
ElemSet hsum_sets(const HyperTable& H, ElemSet s1, ElemSet s2);

// Elementwise product {m(a,b)} of two subsets; requires a mul table.
ElemSet mul_sets(const HyperTable& H, ElemSet s1, ElemSet s2);

// The unique b with zero in both a+b and b+a, if exactly one exists.
std::optional<Elem> hypernegative(const HyperTable& H, Elem a);

// Set-level associativity, hyperneutrality, existence and uniqueness of
// hypernegatives, and reversibility (a3 in a1+a2 iff a2 in a3+(-a1)).
// Commutativity is reported but not required.
AxiomReport check_hypergroup(const HyperTable& H);

// check_hypergroup plus multiplicative monoid axioms, two-sided element-level
// distributivity of mul over hsum, and an absorbing zero.
AxiomReport check_hyperring(const HyperTable& H);

// check_hyperring plus: the nonzero elements form a multiplicative group.
AxiomReport check_hyperfield(const HyperTable& H);

// S(S1+S2) subset of SS1 + SS2 and the mirror image, over all nonempty
// subsets when the carrier has at most 6 elements, otherwise over seeded
// random subsets. A non-required entry reports whether inclusion was ever
// strict.
AxiomReport check_powerset_weak_distributivity(const HyperTable& H, unsigned seed = 1,
                                               int samples = 20000);

// All b such that a lies in both a+b and b+a for every a.
ElemSet weak_neutral_elements(const HyperTable& H);

}  // namespace hyperforge
