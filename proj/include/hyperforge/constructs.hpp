#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hyperforge/pairs.hpp"

namespace hyperforge {

// componentwise structure on tuples; T = tuples of tangibles
Pair product_pair(const std::vector<Pair>& Ps);

// same carrier as the product, but one shared T acting diagonally
Pair direct_sum_pair(const std::vector<Pair>& Ps);

// how products whose degree would exceed the bound are handled
enum class PolyMode {
  saturate,  // identify l^(d+1) with l^d, keeping the monomial monoid closed
  strict,    // refuse the construction when any product overflows
};

// coefficient vectors of length d+1; T = scaled monomials t.l^i
Pair polynomial_pair(const Pair& P, int max_degree, PolyMode mode = PolyMode::saturate);

// n-by-n matrices; T = scaled matrix units plus the zero and identity matrices
Pair matrix_pair(const Pair& P, int n);

// the field GF(q) (or Z/m) viewed as a pair: star = addition, T = units
Pair semiring_pair(const FinRing& R);

// two-element idempotent semifield 0 < 1 with 1+1 = 1
Pair boolean_pair();

// binary tree over generator leaves, optionally scaled by a nonunit T element
struct Term {
  int gen = -1;              // generator index (leaves only)
  int scalar = -1;           // acting T index, -1 when none (unit normalized away)
  int left = -1, right = -1; // children term ids (nodes only)
  int depth = 0;             // tree height; scalars do not add height
  std::string label;
  bool is_leaf() const { return gen >= 0; }
};

struct TermUniverse {
  std::vector<std::string> gens, tnames;
  int unit = 0;   // index into tnames of the identity scalar
  int depth = 0;
  std::vector<Term> terms;
  int size() const { return static_cast<int>(terms.size()); }
  int find_leaf(int gen, int scalar) const;  // -1 when absent; unit scalar = plain leaf
  int find_node(int left, int right) const;  // -1 when absent
};

// every term of height <= depth over the given generators and scalars
TermUniverse free_T_magma(std::vector<std::string> gens, std::vector<std::string> tnames,
                          int unit, int depth, int budget = 20000);

// union-find partition of a term universe, closed under u~u' and v~v' => u*v ~ u'*v'
struct CongRel {
  std::vector<int> parent;
  bool closed = false;
  int find(int x);
  bool same(int u, int v) { return find(u) == find(v); }
  bool unite(int u, int v);  // true when the classes were distinct
  std::vector<std::vector<int>> classes();  // sorted members, ordered by least member
};

CongRel congruence_closure(const TermUniverse& U, std::vector<std::pair<int, int>> gens);

// finite magma with a one-sided T-action and a null subset, the tensor factor shape
struct MagmaPair {
  std::vector<std::string> names;
  std::vector<Elem> op;                // row-major single-valued product
  std::vector<std::string> tnames;
  std::vector<std::vector<Elem>> act;  // act[t][x]: x.t on the right factor, t.x on the left
  std::vector<char> null0;
  int size() const { return static_cast<int>(names.size()); }
  Elem m(Elem a, Elem b) const { return op[static_cast<size_t>(a) * names.size() + b]; }
};

MagmaPair right_magma(const Pair& P);  // carrier under star, T acting on the right
MagmaPair left_magma(const Pair& P);   // carrier under star, T acting on the left
MagmaPair point_magma(std::vector<std::string> tnames);  // one absorbing null point

// classes of the free magma over generator pairs modulo bilinearity and the
// balanced law (x.a, y) ~ (x, a.y); null classes meet a term all of whose
// leaves are null in one fixed slot
struct TensorResult {
  TermUniverse universe;
  CongRel cong;
  std::vector<std::vector<int>> classes;
  std::vector<int> class_of;     // term id -> class index
  std::vector<char> null_class;  // per class
  int depth = 0;
  int n1 = 0, n2 = 0;  // factor sizes
  int gen_id(Elem x1, Elem x2) const;
  int leaf_class(Elem x1, Elem x2) const;
};

TensorResult tensor_product(const MagmaPair& M1, const MagmaPair& M2, int depth,
                            int budget = 20000);

}  // namespace hyperforge
