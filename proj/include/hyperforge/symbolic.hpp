#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "hyperforge/rat.hpp"
#include "hyperforge/report.hpp"

namespace hyperforge {

// Rule-based hyperfields over infinite carriers. All arithmetic is exact:
// tropical values are rationals, circle angles are rationals measured in
// turns and kept in [0,1).
enum class SymField { krasner, sign, tropical, signed_tropical, phase };

struct SymElem {
  SymField field = SymField::krasner;
  bool zero = false;  // the field's hyperzero (0 resp. -inf)
  int sgn = 1;        // krasner/sign unit, or the signed-tropical sign
  Rat val{};          // tropical value, signed-tropical magnitude, phase angle

  std::string str() const;
  friend bool operator==(const SymElem&, const SymElem&) = default;
};

SymElem sym_zero(SymField f);
SymElem sym_one(SymField f);
SymElem sym_krasner_one();
SymElem sym_sign(int s);
SymElem sym_trop(const Rat& v);
SymElem sym_strop(int s, const Rat& mag);
SymElem sym_phase(const Rat& angle);

SymElem mul_sym(const SymElem& x, const SymElem& y);
SymElem neg_sym(const SymElem& x);  // the hypernegative

// --- set values, one canonical family per field ------------------------------

struct KraSet {
  bool z = false, o = false;
  friend bool operator==(const KraSet&, const KraSet&) = default;
};
struct SignSet {
  bool z = false, p = false, m = false;
  friend bool operator==(const SignSet&, const SignSet&) = default;
};
// ninf | closed ray [-inf, *ray] | isolated points above the ray
struct TropSet {
  bool ninf = false;
  std::optional<Rat> ray;
  std::vector<Rat> pts;
  friend bool operator==(const TropSet&, const TropSet&) = default;
};
// ninf | balanced ray {both signs, magnitude <= *bal} | signed points above
struct STropSet {
  bool ninf = false;
  std::optional<Rat> bal;
  std::vector<std::pair<int, Rat>> pts;  // (sign, magnitude)
  friend bool operator==(const STropSet&, const STropSet&) = default;
};
// counterclockwise from lo to hi with endpoint-closed flags;
// lo==hi encodes a single point (both closed) or the circle minus a point
// (both open)
struct PhaseComp {
  Rat lo, hi;
  bool lc = false, hc = false;
  friend bool operator==(const PhaseComp&, const PhaseComp&) = default;
};
struct PhaseSet {
  bool zero = false;  // the complex origin
  bool full = false;  // the whole circle
  std::vector<PhaseComp> comps;
  friend bool operator==(const PhaseSet&, const PhaseSet&) = default;
};

struct SetValue {
  SymField field = SymField::krasner;
  std::variant<KraSet, SignSet, TropSet, STropSet, PhaseSet> v;
  std::string str() const;
};

// Structural equality of canonical forms.
bool operator==(const SetValue& a, const SetValue& b);
inline bool operator!=(const SetValue& a, const SetValue& b) { return !(a == b); }

SetValue canon(SetValue V);
SetValue setvalue_of(const std::vector<SymElem>& xs);  // finite lift, nonempty
SetValue empty_setvalue(SymField f);
bool setvalue_empty(const SetValue& V);
bool setvalue_contains(const SetValue& V, const SymElem& x);
bool setvalue_subset(const SetValue& U, const SetValue& V);
SetValue setvalue_union(const SetValue& U, const SetValue& V);
SetValue scale_setvalue(const SymElem& a, const SetValue& V);

// Exact rule application for two elements of the same field.
SetValue hsum_sym(const SymElem& x, const SymElem& y);

// Union of elementwise hypersums, computed exactly; throws on empty input.
SetValue hsum_setvalues(const SetValue& U, const SetValue& V);

// Associativity, reversibility, hypernegatives, and element-level
// distributivity over every triple drawn from the sample.
AxiomReport spot_check_axioms(SymField f, const std::vector<SymElem>& sample);

struct GapWitness {
  bool found = false;
  std::vector<SymElem> s, s1, s2;
  SetValue lhs, rhs;      // S(S1+S2) and SS1 + SS2
  SymElem extra;          // a member of rhs outside lhs
  long long configurations = 0;
};

// Searches small subsets for strict power-set distributivity failure
// S(S1+S2) strictly inside SS1 + SS2.
GapWitness distributivity_gap(SymField f, long long budget = 100000);

}  // namespace hyperforge
