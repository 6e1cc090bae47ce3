#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hyperforge/carrier.hpp"
#include "hyperforge/report.hpp"

namespace hyperforge {

// Twisted polynomial context: GF(p^k) together with the automorphism
// sigma = Frobenius^frob (Frobenius a -> a^p). Every operation below uses
// the commutation rule x * a = sigma(a) * x, coefficients written on the left.
struct SkewRing {
  FinRing F;
  int p = 0, k = 0;         // field order p^k
  int frob = 0;             // twist exponent, stored reduced mod k
  std::vector<Elem> sigma;  // one application of the twist

  int q() const { return F.size(); }
  Elem twist(Elem a, int times = 1) const;  // sigma^times(a), times >= 0
};

// Builds GF(p^k) and tabulates the twist. frob may be any non-negative
// integer; it acts through the Galois group, which has order k.
SkewRing skew_ring(int p, int k, int frob);

// c[i] is the coefficient on x^i; no trailing zero, so the zero polynomial
// has an empty list. q/frob tag the ring the polynomial was built in.
struct SkewPoly {
  int q = 0, frob = 0;
  std::vector<Elem> c;

  int deg() const { return static_cast<int>(c.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c.empty(); }
  bool operator==(const SkewPoly&) const = default;
};

// Normalizes (strips leading zeros), validates coefficient ids, tags.
SkewPoly make_skew(const SkewRing& R, std::vector<Elem> coeffs);

// Term grammar: coefficient names from the field ("w", "2", "(w+1)" when the
// name itself contains +/-), then an optional x or x^k part; terms joined by
// + or -. Examples: "x^2+w", "x^2+(w+1)*x+1", "x^2-x+2", "0".
SkewPoly skew_parse(const SkewRing& R, const std::string& text);
std::string skew_to_string(const SkewRing& R, const SkewPoly& a);

SkewPoly skew_add(const SkewRing& R, const SkewPoly& a, const SkewPoly& b);
SkewPoly skew_sub(const SkewRing& R, const SkewPoly& a, const SkewPoly& b);

// Product under x^i * b = sigma^i(b) * x^i, extended bilinearly.
SkewPoly skew_mul(const SkewRing& R, const SkewPoly& a, const SkewPoly& b);

// Right division: g = q*f + r with deg r < deg f. f must be monic of
// degree >= 1; the quotient/remainder pair is unique.
std::pair<SkewPoly, SkewPoly> skew_divmod(const SkewRing& R, const SkewPoly& g,
                                          const SkewPoly& f);

// Finite nonassociative algebra on the residues of degree < deg f, with
// [r1][r2] = remainder of the twisted product r1*r2 under right division
// by f. Residue ids are coefficient tuples read little-endian in base q.
struct PumpluenAlgebra {
  SkewRing R;
  SkewPoly f;                     // monic modulus, degree >= 1
  std::vector<SkewPoly> carrier;  // all q^deg(f) residues, by id

  int size() const { return static_cast<int>(carrier.size()); }
  int index_of(const SkewPoly& r) const;
};

PumpluenAlgebra pumpluen_algebra(const SkewRing& R, const SkewPoly& f);

// Remainder of r1*r2; both arguments must already be residues.
SkewPoly pumpluen_mul(const PumpluenAlgebra& A, const SkewPoly& r1, const SkewPoly& r2);

// Unique lowest-degree element of the additive coset g + Rf, found by
// enumerating g + h*f over deg h <= bound (default: high enough to reach
// the division remainder, then one spare level for the stability check).
SkewPoly coset_min(const PumpluenAlgebra& A, const SkewPoly& g, int bound = -1);

// Residue ids of the multivalued coset product
//   { (r1 + h*f)*r2 + Rf : deg h <= bound },
// each coset named by its lowest-degree element. Sorted, deduplicated.
std::vector<int> hyperproduct_classes(const PumpluenAlgebra& A, const SkewPoly& r1,
                                      const SkewPoly& r2, int bound);

// First triple (by id) with ([a][b])[c] != [a]([b][c]); pass = found,
// witness = the three ids, detail shows both bracketings.
Verdict nonassoc_witness(const PumpluenAlgebra& A);

// For sampled residue pairs: the lowest-degree element of r1*r2 + Rf equals
// pumpluen_mul(r1, r2), that minimum is unique and stable one h-degree level
// beyond the bound, and its class appears in the coset product set.
// witness = [id r1, id r2] of the first failing pair.
Verdict crosscheck_mhyperring(const PumpluenAlgebra& A, int samples = 50,
                              unsigned seed = 0);

}  // namespace hyperforge
