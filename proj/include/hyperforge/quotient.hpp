#pragma once

#include <functional>
#include <string>
#include <vector>

#include "hyperforge/hyperstruct.hpp"
#include "hyperforge/rat.hpp"

namespace hyperforge {

// A partition of a base carrier into classes, indexed in order of least
// representative. coset_of maps base elements to class indices; rep picks the
// least member of each class.
struct CosetSpace {
  std::vector<ElemSet> cosets;
  std::vector<Elem> coset_of;
  std::vector<Elem> rep;
  int size() const { return static_cast<int>(cosets.size()); }
};

struct Quotient {
  HyperTable table;
  CosetSpace space;
};

// Residue table of a ring by a multiplicative subgroup of units normalized by
// the whole base: carrier = G-orbits (zero stays the singleton {0}),
// mul [b1][b2] = [b1*b2], hsum [b1]+[b2] = classes hit by b1G + b2G.
// Throws if G is not a unit subgroup or some bG != Gb.
Quotient krasner_quotient(const FinRing& R, const Subgroup& G);

// Additive monoid with a monoid action on it. act is row-major over
// (t, module element).
struct FinModule {
  FinMonoid add;
  FinMonoid t;
  std::vector<Elem> act;
  int msize() const { return add.size(); }
  Elem apply(Elem tt, Elem m) const { return act[static_cast<size_t>(tt) * add.size() + m]; }
};

// The additive group of R acted on by its unit monoid.
FinModule module_of_ring(const FinRing& R);

struct QuotientModule {
  HyperTable table;  // no mul
  CosetSpace space;
  ResidueMonoid tbar;        // acting monoid mod G
  std::vector<Elem> act;     // row-major over (tbar class, coset)
};

// Orbit-space hypermodule: [b1]+[b2] = classes hit by Gb1 + Gb2, with the
// induced action of t/G checked well-defined. G is a set of t-indices.
QuotientModule quotient_hypermodule(const FinModule& M, ElemSet G);

enum class CosetMode { right, double_coset };

// Multiplicative-side residue: carrier = right cosets bG (or double cosets
// GbG), hyperoperation [b][b'] = classes hit by the setwise product. The
// designated one is the class of the monoid neutral; there is no zero.
// Throws if the chosen cosets fail to partition the monoid.
Quotient coset_hypermonoid(const FinMonoid& M, ElemSet G, CosetMode mode);

// Additive cosets of a ring with single-valued addition and a multivalued
// multiplication table.
struct MHyperRing {
  std::vector<std::string> names;
  std::vector<ElemSet> cosets;
  std::vector<Elem> coset_of;
  std::vector<Elem> rep;
  std::vector<Elem> add;       // single-valued coset addition
  std::vector<ElemSet> hmul;   // multivalued coset multiplication
  Elem zero = 0;
  Elem one = -1;
  int size() const { return static_cast<int>(cosets.size()); }
  Elem a(Elem x, Elem y) const { return add[static_cast<size_t>(x) * cosets.size() + y]; }
  ElemSet hm(Elem x, Elem y) const { return hmul[static_cast<size_t>(x) * cosets.size() + y]; }
};

// hmul [r1][r2] = {(r1+a)r2 + L : a in L} over least representatives.
// Throws if L is not a left ideal.
MHyperRing m_hyperring(const FinRing& R, ElemSet L);

// hmul [r1][r2] = {(r1r2 + r1g1 + g2r2) + G : g1,g2 in G} over least
// representatives; no associativity promised. Throws if G is not an additive
// subgroup.
MHyperRing m_hyper_from_additive_subgroup(const FinRing& S, ElemSet G);

// Required: coset addition is an abelian group, hmul entries nonempty.
// Informational: hmul associativity and one-sided units, which can fail for
// strictly one-sided ideals and for the additive-subgroup variant.
AxiomReport check_mhyperring(const MHyperRing& M);

// [r1](([r2]+[r3])) is contained in [r1][r2] + [r1][r3] elementwise.
Verdict check_mhyper_distributive(const MHyperRing& M);

// e = 1 + (-1) inside a residue table; throws when 1 has no hypernegative.
ElemSet e_element(const HyperTable& Q);

// Compares three descriptions of e*e when -1 lies in G: classes of
// (G-G)G + (G-G)G, classes of (G-G) - (G-G), and the table-level double
// hypersum of e with itself. Skips (passes) when -1 is outside G.
Verdict check_ee_identity(const FinRing& R, const Subgroup& G);

// Orbit residue of a hypertable by a subgroup U of its multiplicative units:
// classes bU, mul well-defined, hsum = classes hit by elementwise hypersums.
Quotient hypertable_quotient(const HyperTable& H, ElemSet U);

struct SampledQuotient {
  std::vector<std::string> names;
  std::vector<ElemSet> hsum;    // witnessed classes only; entries may be empty
  bool sample_sound = true;     // every witnessed class is genuinely reachable
  long long samples_used = 0;
  Verdict expected_match;       // pass when every expected class was witnessed
};

// Residue table over an infinite base probed through a rational grid.
// transversal lists one representative per class; in_subgroup and coset_index
// describe the subgroup and the classifier. budget bounds the number of
// subgroup samples. A witness outside the expected table throws.
SampledQuotient sampled_quotient(const std::vector<Rat>& transversal,
                                 const std::vector<std::string>& names,
                                 const std::function<bool(const Rat&)>& in_subgroup,
                                 const std::function<int(const Rat&)>& coset_index,
                                 int budget,
                                 const std::vector<ElemSet>* expected = nullptr);

}  // namespace hyperforge
