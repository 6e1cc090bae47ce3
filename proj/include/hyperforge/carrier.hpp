#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "hyperforge/report.hpp"

namespace hyperforge {

// Subset of a finite carrier as a bitmask; carriers hold at most 64 elements.
using ElemSet = std::uint64_t;

constexpr int kMaxCarrier = 64;

inline ElemSet bit(Elem a) { return ElemSet{1} << a; }
inline bool contains(ElemSet s, Elem a) { return (s >> a) & 1u; }
int set_size(ElemSet s);
std::vector<Elem> set_elems(ElemSet s);
ElemSet set_of(std::initializer_list<Elem> xs);
ElemSet full_set(int n);
std::string set_str(ElemSet s, const std::vector<std::string>& names);

// ---------------------------------------------------------------------------
// finite monoids

struct FinMonoid {
  std::vector<std::string> names;
  std::vector<Elem> op;  // row-major size()*size()
  Elem neutral = 0;

  int size() const { return static_cast<int>(names.size()); }
  Elem mul(Elem a, Elem b) const { return op[static_cast<size_t>(a) * names.size() + b]; }
};

// Validates closure, two-sided neutrality, and associativity over all triples.
FinMonoid make_monoid(std::vector<std::string> names, std::vector<Elem> op, Elem neutral);

// Symmetric group on n points (n <= 4), neutral first, rest ordered by
// one-line notation; names in cycle notation on 1..n.
FinMonoid symmetric_group(int n);

// ---------------------------------------------------------------------------
// finite rings and fields

struct FinRing {
  std::vector<std::string> names;
  std::vector<Elem> add, mul;
  Elem zero = 0, one = 1;
  bool commutative = false;
  bool field = false;

  int size() const { return static_cast<int>(names.size()); }
  Elem a(Elem x, Elem y) const { return add[static_cast<size_t>(x) * names.size() + y]; }
  Elem m(Elem x, Elem y) const { return mul[static_cast<size_t>(x) * names.size() + y]; }
  Elem neg(Elem x) const;            // additive inverse (exists: (S,+) is a group)
  std::optional<Elem> inv(Elem x) const;  // two-sided multiplicative inverse
  ElemSet unit_set() const;          // elements with a two-sided inverse
};

// Validates group/monoid/distributivity laws exhaustively; derives the
// commutative and field flags from the tables.
FinRing make_ring(std::vector<std::string> names, std::vector<Elem> add, std::vector<Elem> mul,
                  Elem zero, Elem one);

// Z/n with natural element order.
FinRing zmod(int n);

// GF(p^k) built over the least monic irreducible of degree k (ordered by the
// integer value of the coefficient tuple), so tables are reproducible.
// Element ids are coefficient values sum c_i p^i; names "0","1","w","w+1",...
FinRing make_finite_field(int p, int k, int bound = kMaxCarrier);

// n x n matrices over a finite ring; carrier reordered so zero is element 0
// and the identity matrix element 1. Requires |R|^(n*n) <= 64.
FinRing matrix_ring(const FinRing& R, int n);

// Multiplicative monoid of units of R as a standalone monoid, with a map
// from monoid ids back to ring ids.
struct UnitsMonoid {
  FinMonoid monoid;
  std::vector<Elem> ring_elem;  // monoid id -> ring id
};
UnitsMonoid units_monoid(const FinRing& R);

// ---------------------------------------------------------------------------
// subgroups

enum class SubKind { multiplicative, additive };

struct Subgroup {
  ElemSet members = 0;
  SubKind kind = SubKind::multiplicative;
};

// All subgroups of the (cyclic) unit group, one per divisor of its order,
// sorted by size. Throws if the unit group is not cyclic.
std::vector<Subgroup> unit_subgroups(const FinRing& R);

// Cyclic multiplicative subgroup generated by a unit.
Subgroup subgroup_generated(const FinRing& R, Elem g);

// Setwise test N·a == a·N for all a; N must be a closed submonoid.
bool is_normal_submonoid(const FinMonoid& M, ElemSet N);

// ---------------------------------------------------------------------------
// residue monoid

struct ResidueMonoid {
  FinMonoid monoid;               // carrier = distinct coset values aG
  std::vector<ElemSet> cosets;    // coset value per carrier element
  std::vector<Elem> coset_of;     // base element -> carrier index
  bool is_group = false;          // every class has a two-sided inverse
};

// Cosets aG with product (aG)(bG) = (ab)G; requires G normal (checked) and
// verifies the product is well-defined on coset values.
ResidueMonoid residue_monoid(const FinMonoid& T, ElemSet G);

// ---------------------------------------------------------------------------
// semifields and kernels

struct FinSemifield {
  std::vector<std::string> names;
  std::vector<Elem> add, mul;
  Elem zero = 0, one = 1;

  int size() const { return static_cast<int>(names.size()); }
  Elem a(Elem x, Elem y) const { return add[static_cast<size_t>(x) * names.size() + y]; }
  Elem m(Elem x, Elem y) const { return mul[static_cast<size_t>(x) * names.size() + y]; }
};

// Validates: (S,+) commutative monoid with absorbing zero, (S\{0},·) a group.
FinSemifield make_semifield(std::vector<std::string> names, std::vector<Elem> add,
                            std::vector<Elem> mul, Elem zero, Elem one);

// The two stock finite semifields used in fixtures.
FinSemifield boolean_semifield();          // {0,1}, 1+1 = 1
FinSemifield semifield_of_field(const FinRing& F);

// Convexity check r1*a1 + r2*a2 in K for all a_i in K and r1 + r2 = one;
// exhaustive on finite carriers. Witness layout: {a1, a2, r1, r2}.
Verdict is_kernel(const FinSemifield& S, ElemSet K);

// Variant condition for semirings without units: r1*a1 + r2*a2 in K*(a1+a2).
// Sampled claim only.
Verdict semiring_kernel_condition(const FinSemifield& S, ElemSet K);

// Max-plus semifield over Z (zero = -inf), sampled on the window
// [-window, window]. Subgroups of (Z,+) are m*Z; modulus 0 denotes {0}.
// Integers are enumerated in the order 0, 1, -1, 2, -2, ... so the least
// witness is canonical. Witness layout: {a1, a2, r1, r2} as raw integers.
Verdict is_kernel_maxplus(int modulus, int window = 8);

// ---------------------------------------------------------------------------
// kernel <-> congruence correspondence

// Partition of the carrier; class ids are dense, order of first appearance.
struct Congruence {
  std::vector<int> class_of;
};

// Checks reflexivity is implicit; verifies compatibility with + and * on all
// pairs, i.e. a1 ~ a2 and b1 ~ b2 imply a1+b1 ~ a2+b2 and a1*b1 ~ a2*b2.
Verdict is_congruence(const FinSemifield& S, const Congruence& C);

// a1 ~ a2 iff K*a1 = K*a2 (zero alone in its own class).
Congruence congruence_from_kernel(const FinSemifield& S, ElemSet K);

// The class of the multiplicative unit.
ElemSet kernel_from_congruence(const FinSemifield& S, const Congruence& C);

// Same correspondence on the max-plus integer window; values -w..w are
// indexed by value + w, with a separate class for -inf handled implicitly.
Congruence maxplus_congruence_from_kernel(int modulus, int window = 8);
int maxplus_kernel_from_congruence(const Congruence& C, int window = 8);  // returns modulus

}  // namespace hyperforge
