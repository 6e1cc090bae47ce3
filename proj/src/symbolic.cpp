#include "hyperforge/symbolic.hpp"

#include <algorithm>
#include <stdexcept>

namespace hyperforge {
namespace {

const Rat kHalf{1, 2};

Rat m1(const Rat& r) { return r.mod1(); }
Rat ccw_dist(const Rat& p, const Rat& q) { return (q - p).mod1(); }

// midpoint going counterclockwise from p to q; p==q means the full loop
Rat ccw_mid(const Rat& p, const Rat& q) {
  Rat d = ccw_dist(p, q);
  if (d.num == 0) d = Rat(1);
  return m1(p + d * kHalf);
}

void sort_unique(std::vector<Rat>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

bool comp_contains(const PhaseComp& c, const Rat& u) {
  if (c.lo == c.hi) {
    if (c.lc && c.hc) return u == c.lo;   // single point
    if (!c.lc && !c.hc) return u != c.lo; // circle minus a point
    return true;
  }
  Rat t = ccw_dist(c.lo, u);
  Rat len = ccw_dist(c.lo, c.hi);
  if (t.num == 0) return c.lc;
  if (t == len) return c.hc;
  return t < len;
}

bool circle_contains(const PhaseSet& s, const Rat& u) {
  if (s.full) return true;
  for (const auto& c : s.comps)
    if (comp_contains(c, u)) return true;
  return false;
}

bool circle_empty(const PhaseSet& s) { return !s.full && s.comps.empty(); }

std::vector<Rat> circle_endpoints(const PhaseSet& s) {
  std::vector<Rat> out;
  for (const auto& c : s.comps) {
    out.push_back(c.lo);
    out.push_back(c.hi);
  }
  sort_unique(out);
  return out;
}

bool in_open_ccw(const Rat& c, const Rat& x, const Rat& y) {
  Rat d = ccw_dist(x, c);
  if (d.num == 0) return false;
  Rat len = ccw_dist(x, y);
  if (len.num == 0) return true;  // the whole circle minus x
  return d < len;
}

// exact "B meets the open counterclockwise interval (x, y)" test: any nonempty
// intersection has a boundary on the candidate grid or swallows one of its
// cell midpoints
bool circle_meets_open(const PhaseSet& B, const Rat& x, const Rat& y) {
  if (circle_empty(B)) return false;
  std::vector<Rat> grid = circle_endpoints(B);
  grid.push_back(m1(x));
  grid.push_back(m1(y));
  sort_unique(grid);
  std::vector<Rat> cand = grid;
  for (std::size_t i = 0; i < grid.size(); ++i)
    cand.push_back(ccw_mid(grid[i], grid[(i + 1) % grid.size()]));
  for (const auto& c : cand)
    if (in_open_ccw(c, x, y) && circle_contains(B, c)) return true;
  return false;
}

bool circles_meet(const PhaseSet& A, const PhaseSet& B) {
  if (circle_empty(A) || circle_empty(B)) return false;
  if (A.full || B.full) return true;  // the other side is nonempty
  std::vector<Rat> grid = circle_endpoints(A);
  for (const auto& e : circle_endpoints(B)) grid.push_back(e);
  sort_unique(grid);
  std::vector<Rat> cand = grid;
  for (std::size_t i = 0; i < grid.size(); ++i)
    cand.push_back(ccw_mid(grid[i], grid[(i + 1) % grid.size()]));
  for (const auto& c : cand)
    if (circle_contains(A, c) && circle_contains(B, c)) return true;
  return false;
}

PhaseSet rotate_circle(PhaseSet s, const Rat& theta) {
  for (auto& c : s.comps) {
    c.lo = m1(c.lo + theta);
    c.hi = m1(c.hi + theta);
  }
  return s;
}

// u lies in some a+b with a in A, b in B (circle parts only). For a fixed
// nonzero direction a the contributing b form open intervals bounded by u and
// the antipode of a, so refining by B's endpoints (and their antipodes) makes
// the answer constant on each cell of the a-grid.
bool fixed_a_reaches(const Rat& a, const Rat& u, const PhaseSet& B) {
  if (a == u) return circle_contains(B, a) || circle_contains(B, m1(a + kHalf));
  if (a == m1(u + kHalf)) return circle_contains(B, u);
  Rat anti = m1(a + kHalf);
  if (ccw_dist(a, u) < kHalf) return circle_meets_open(B, u, anti);
  return circle_meets_open(B, anti, u);
}

bool in_phase_product(const Rat& u, const PhaseSet& A, const PhaseSet& B) {
  if (circle_empty(A) || circle_empty(B)) return false;
  std::vector<Rat> agrid = {u, m1(u + kHalf)};
  for (const auto& e : circle_endpoints(A)) agrid.push_back(e);
  for (const auto& e : circle_endpoints(B)) {
    agrid.push_back(e);
    agrid.push_back(m1(e + kHalf));
  }
  sort_unique(agrid);
  for (const auto& a : agrid)
    if (circle_contains(A, a) && fixed_a_reaches(a, u, B)) return true;
  for (std::size_t i = 0; i < agrid.size(); ++i) {
    Rat mid = ccw_mid(agrid[i], agrid[(i + 1) % agrid.size()]);
    if (circle_contains(A, mid) && fixed_a_reaches(mid, u, B)) return true;
  }
  return false;
}

// canonical component list from point/cell membership over a sorted grid
template <class Pred>
PhaseSet rebuild_circle(std::vector<Rat> grid, Pred in) {
  PhaseSet out;
  if (grid.empty()) grid.push_back(Rat(0));
  sort_unique(grid);
  std::size_t k = grid.size();
  // unit 2i is the grid point, unit 2i+1 the open cell after it
  std::vector<bool> val(2 * k);
  for (std::size_t i = 0; i < k; ++i) {
    val[2 * i] = in(grid[i]);
    val[2 * i + 1] = in(ccw_mid(grid[i], grid[(i + 1) % k]));
  }
  std::size_t off = 2 * k;
  for (std::size_t i = 0; i < 2 * k; ++i)
    if (!val[i]) { off = i; break; }
  if (off == 2 * k) {
    out.full = true;
    return out;
  }
  std::size_t i = (off + 1) % (2 * k);
  while (i != off) {
    if (!val[i]) { i = (i + 1) % (2 * k); continue; }
    std::size_t first = i, last = i;
    while (true) {
      std::size_t nxt = (last + 1) % (2 * k);
      if (nxt == off || !val[nxt]) break;
      last = nxt;
    }
    PhaseComp c;
    c.lc = first % 2 == 0;
    c.lo = grid[first / 2];
    c.hc = last % 2 == 0;
    c.hi = last % 2 == 0 ? grid[last / 2] : grid[(last / 2 + 1) % k];
    out.comps.push_back(c);
    if (last == (off + 2 * k - 1) % (2 * k)) break;
    i = (last + 1) % (2 * k);
  }
  // rotate so components start at the smallest lo
  std::sort(out.comps.begin(), out.comps.end(),
            [](const PhaseComp& a, const PhaseComp& b) {
              return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi);
            });
  return out;
}

PhaseSet phase_canon(PhaseSet s) {
  if (s.full) {
    s.comps.clear();
    return s;
  }
  if (s.comps.empty()) return s;
  PhaseSet rebuilt = rebuild_circle(circle_endpoints(s), [&](const Rat& u) {
    return circle_contains(s, u);
  });
  rebuilt.zero = s.zero;
  return rebuilt;
}

PhaseSet phase_union(const PhaseSet& a, const PhaseSet& b) {
  PhaseSet u;
  u.zero = a.zero || b.zero;
  u.full = a.full || b.full;
  if (!u.full) {
    u.comps = a.comps;
    u.comps.insert(u.comps.end(), b.comps.begin(), b.comps.end());
  }
  return phase_canon(std::move(u));
}

PhaseSet hsum_phase(const PhaseSet& A, const PhaseSet& B) {
  PhaseSet prod;
  if (!circle_empty(A) && !circle_empty(B)) {
    std::vector<Rat> grid;
    for (const auto& e : circle_endpoints(A)) {
      grid.push_back(e);
      grid.push_back(m1(e + kHalf));
    }
    for (const auto& e : circle_endpoints(B)) {
      grid.push_back(e);
      grid.push_back(m1(e + kHalf));
    }
    prod = rebuild_circle(std::move(grid), [&](const Rat& u) {
      return in_phase_product(u, A, B);
    });
    prod.zero = circles_meet(A, rotate_circle(B, kHalf));
  }
  prod.zero = prod.zero || (A.zero && B.zero);
  PhaseSet carried;  // the origin is neutral
  if (A.zero) carried = phase_union(carried, PhaseSet{false, B.full, B.comps});
  if (B.zero) carried = phase_union(carried, PhaseSet{false, A.full, A.comps});
  return phase_union(prod, carried);
}

TropSet trop_canon(TropSet s) {
  if (s.ray) s.ninf = true;
  sort_unique(s.pts);
  if (s.ray)
    s.pts.erase(std::remove_if(s.pts.begin(), s.pts.end(),
                               [&](const Rat& p) { return p <= *s.ray; }),
                s.pts.end());
  return s;
}

void trop_add_ray(TropSet& s, const Rat& top) {
  if (!s.ray || *s.ray < top) s.ray = top;
}

TropSet hsum_trop(const TropSet& a, const TropSet& b) {
  struct Item { int kind; Rat v; };  // 0 ninf, 1 ray top, 2 point
  auto items = [](const TropSet& s) {
    std::vector<Item> out;
    if (s.ninf) out.push_back({0, Rat(0)});
    if (s.ray) out.push_back({1, *s.ray});
    for (const auto& p : s.pts) out.push_back({2, p});
    return out;
  };
  TropSet acc;
  for (const auto& x : items(a))
    for (const auto& y : items(b)) {
      if (x.kind == 0 && y.kind == 0) { acc.ninf = true; continue; }
      if (x.kind == 0) { (y.kind == 1 ? trop_add_ray(acc, y.v) : void(acc.pts.push_back(y.v))); continue; }
      if (y.kind == 0) { (x.kind == 1 ? trop_add_ray(acc, x.v) : void(acc.pts.push_back(x.v))); continue; }
      if (x.kind == 1 && y.kind == 1) { trop_add_ray(acc, x.v < y.v ? y.v : x.v); continue; }
      if (x.kind == 1 || y.kind == 1) {
        const Rat& top = x.kind == 1 ? x.v : y.v;
        const Rat& p = x.kind == 1 ? y.v : x.v;
        if (p > top) acc.pts.push_back(p); else trop_add_ray(acc, top);
        continue;
      }
      if (x.v == y.v) trop_add_ray(acc, x.v);
      else acc.pts.push_back(x.v < y.v ? y.v : x.v);
    }
  return trop_canon(std::move(acc));
}

bool spt_less(const std::pair<int, Rat>& a, const std::pair<int, Rat>& b) {
  if (a.second != b.second) return a.second < b.second;
  return a.first < b.first;
}

STropSet strop_canon(STropSet s) {
  if (s.bal) s.ninf = true;
  std::sort(s.pts.begin(), s.pts.end(), spt_less);
  s.pts.erase(std::unique(s.pts.begin(), s.pts.end()), s.pts.end());
  if (s.bal)
    s.pts.erase(std::remove_if(s.pts.begin(), s.pts.end(),
                               [&](const auto& p) { return p.second <= *s.bal; }),
                s.pts.end());
  return s;
}

void strop_add_bal(STropSet& s, const Rat& top) {
  if (!s.bal || *s.bal < top) s.bal = top;
}

STropSet hsum_strop(const STropSet& a, const STropSet& b) {
  struct Item { int kind; int s; Rat m; };  // 0 ninf, 1 balanced top, 2 point
  auto items = [](const STropSet& v) {
    std::vector<Item> out;
    if (v.ninf) out.push_back({0, 1, Rat(0)});
    if (v.bal) out.push_back({1, 1, *v.bal});
    for (const auto& p : v.pts) out.push_back({2, p.first, p.second});
    return out;
  };
  STropSet acc;
  for (const auto& x : items(a))
    for (const auto& y : items(b)) {
      if (x.kind == 0 && y.kind == 0) { acc.ninf = true; continue; }
      if (x.kind == 0 || y.kind == 0) {
        const Item& z = x.kind == 0 ? y : x;
        if (z.kind == 1) strop_add_bal(acc, z.m); else acc.pts.push_back({z.s, z.m});
        continue;
      }
      if (x.kind == 1 && y.kind == 1) { strop_add_bal(acc, x.m < y.m ? y.m : x.m); continue; }
      if (x.kind == 1 || y.kind == 1) {
        const Item& bal = x.kind == 1 ? x : y;
        const Item& pt = x.kind == 1 ? y : x;
        if (pt.m > bal.m) acc.pts.push_back({pt.s, pt.m}); else strop_add_bal(acc, bal.m);
        continue;
      }
      if (x.m != y.m) { const Item& big = x.m < y.m ? y : x; acc.pts.push_back({big.s, big.m}); continue; }
      if (x.s == y.s) acc.pts.push_back({x.s, x.m});
      else strop_add_bal(acc, x.m);
    }
  return strop_canon(std::move(acc));
}

KraSet hsum_kra(const KraSet& a, const KraSet& b) {
  KraSet r;
  if (a.z && b.z) r.z = true;
  if (a.z && b.o) r.o = true;
  if (a.o && b.z) r.o = true;
  if (a.o && b.o) { r.z = true; r.o = true; }
  return r;
}

SignSet hsum_sign(const SignSet& a, const SignSet& b) {
  SignSet r;
  if (a.z && b.z) r.z = true;
  if (a.z) { r.p = r.p || b.p; r.m = r.m || b.m; }
  if (b.z) { r.p = r.p || a.p; r.m = r.m || a.m; }
  if (a.p && b.p) r.p = true;
  if (a.m && b.m) r.m = true;
  if ((a.p && b.m) || (a.m && b.p)) { r.z = r.p = r.m = true; }
  return r;
}

const char* field_name(SymField f) {
  switch (f) {
    case SymField::krasner: return "krasner";
    case SymField::sign: return "sign";
    case SymField::tropical: return "tropical";
    case SymField::signed_tropical: return "signed-tropical";
    case SymField::phase: return "phase";
  }
  return "?";
}

void require_same_field(SymField a, SymField b) {
  if (a != b)
    throw std::invalid_argument(std::string("mixed fields: ") + field_name(a) +
                                " vs " + field_name(b));
}

}  // namespace

std::string SymElem::str() const {
  switch (field) {
    case SymField::krasner: return zero ? "0" : "1";
    case SymField::sign: return zero ? "0" : (sgn < 0 ? "-1" : "1");
    case SymField::tropical: return zero ? "-inf" : val.str();
    case SymField::signed_tropical:
      return zero ? "-inf" : (sgn < 0 ? "-|" : "+|") + val.str() + "|";
    case SymField::phase: return zero ? "0" : "ang(" + val.str() + ")";
  }
  return "?";
}

SymElem sym_zero(SymField f) {
  SymElem e;
  e.field = f;
  e.zero = true;
  return e;
}

SymElem sym_one(SymField f) {
  switch (f) {
    case SymField::krasner: return sym_krasner_one();
    case SymField::sign: return sym_sign(1);
    case SymField::tropical: return sym_trop(Rat(0));
    case SymField::signed_tropical: return sym_strop(1, Rat(0));
    case SymField::phase: return sym_phase(Rat(0));
  }
  throw std::invalid_argument("unknown field");
}

SymElem sym_krasner_one() {
  SymElem e;
  e.field = SymField::krasner;
  return e;
}

SymElem sym_sign(int s) {
  if (s != 1 && s != -1) throw std::invalid_argument("sign must be +-1");
  SymElem e;
  e.field = SymField::sign;
  e.sgn = s;
  return e;
}

SymElem sym_trop(const Rat& v) {
  SymElem e;
  e.field = SymField::tropical;
  e.val = v;
  return e;
}

SymElem sym_strop(int s, const Rat& mag) {
  if (s != 1 && s != -1) throw std::invalid_argument("sign must be +-1");
  SymElem e;
  e.field = SymField::signed_tropical;
  e.sgn = s;
  e.val = mag;
  return e;
}

SymElem sym_phase(const Rat& angle) {
  SymElem e;
  e.field = SymField::phase;
  e.val = angle.mod1();
  return e;
}

SymElem mul_sym(const SymElem& x, const SymElem& y) {
  require_same_field(x.field, y.field);
  if (x.zero || y.zero) return sym_zero(x.field);
  switch (x.field) {
    case SymField::krasner: return sym_krasner_one();
    case SymField::sign: return sym_sign(x.sgn * y.sgn);
    case SymField::tropical: return sym_trop(x.val + y.val);
    case SymField::signed_tropical: return sym_strop(x.sgn * y.sgn, x.val + y.val);
    case SymField::phase: return sym_phase(x.val + y.val);
  }
  throw std::invalid_argument("unknown field");
}

SymElem neg_sym(const SymElem& x) {
  if (x.zero) return x;
  switch (x.field) {
    case SymField::krasner:
    case SymField::tropical: return x;
    case SymField::sign: return sym_sign(-x.sgn);
    case SymField::signed_tropical: return sym_strop(-x.sgn, x.val);
    case SymField::phase: return sym_phase(x.val + kHalf);
  }
  throw std::invalid_argument("unknown field");
}

SetValue canon(SetValue V) {
  switch (V.field) {
    case SymField::tropical: V.v = trop_canon(std::get<TropSet>(std::move(V.v))); break;
    case SymField::signed_tropical: V.v = strop_canon(std::get<STropSet>(std::move(V.v))); break;
    case SymField::phase: V.v = phase_canon(std::get<PhaseSet>(std::move(V.v))); break;
    default: break;
  }
  return V;
}

bool operator==(const SetValue& a, const SetValue& b) {
  if (a.field != b.field) return false;
  return canon(a).v == canon(b).v;
}

SetValue empty_setvalue(SymField f) {
  SetValue V;
  V.field = f;
  switch (f) {
    case SymField::krasner: V.v = KraSet{}; break;
    case SymField::sign: V.v = SignSet{}; break;
    case SymField::tropical: V.v = TropSet{}; break;
    case SymField::signed_tropical: V.v = STropSet{}; break;
    case SymField::phase: V.v = PhaseSet{}; break;
  }
  return V;
}

SetValue setvalue_of(const std::vector<SymElem>& xs) {
  if (xs.empty()) throw std::invalid_argument("empty element list");
  SetValue V = empty_setvalue(xs.front().field);
  for (const auto& x : xs) {
    require_same_field(V.field, x.field);
    switch (V.field) {
      case SymField::krasner: {
        auto& s = std::get<KraSet>(V.v);
        (x.zero ? s.z : s.o) = true;
        break;
      }
      case SymField::sign: {
        auto& s = std::get<SignSet>(V.v);
        if (x.zero) s.z = true;
        else (x.sgn > 0 ? s.p : s.m) = true;
        break;
      }
      case SymField::tropical: {
        auto& s = std::get<TropSet>(V.v);
        if (x.zero) s.ninf = true;
        else s.pts.push_back(x.val);
        break;
      }
      case SymField::signed_tropical: {
        auto& s = std::get<STropSet>(V.v);
        if (x.zero) s.ninf = true;
        else s.pts.push_back({x.sgn, x.val});
        break;
      }
      case SymField::phase: {
        auto& s = std::get<PhaseSet>(V.v);
        if (x.zero) s.zero = true;
        else s.comps.push_back({x.val, x.val, true, true});
        break;
      }
    }
  }
  return canon(std::move(V));
}

bool setvalue_empty(const SetValue& V) {
  switch (V.field) {
    case SymField::krasner: {
      const auto& s = std::get<KraSet>(V.v);
      return !s.z && !s.o;
    }
    case SymField::sign: {
      const auto& s = std::get<SignSet>(V.v);
      return !s.z && !s.p && !s.m;
    }
    case SymField::tropical: {
      const auto& s = std::get<TropSet>(V.v);
      return !s.ninf && !s.ray && s.pts.empty();
    }
    case SymField::signed_tropical: {
      const auto& s = std::get<STropSet>(V.v);
      return !s.ninf && !s.bal && s.pts.empty();
    }
    case SymField::phase: {
      const auto& s = std::get<PhaseSet>(V.v);
      return !s.zero && circle_empty(s);
    }
  }
  return true;
}

bool setvalue_contains(const SetValue& V, const SymElem& x) {
  require_same_field(V.field, x.field);
  switch (V.field) {
    case SymField::krasner: {
      const auto& s = std::get<KraSet>(V.v);
      return x.zero ? s.z : s.o;
    }
    case SymField::sign: {
      const auto& s = std::get<SignSet>(V.v);
      if (x.zero) return s.z;
      return x.sgn > 0 ? s.p : s.m;
    }
    case SymField::tropical: {
      const auto& s = std::get<TropSet>(V.v);
      if (x.zero) return s.ninf || s.ray.has_value();
      if (s.ray && x.val <= *s.ray) return true;
      return std::find(s.pts.begin(), s.pts.end(), x.val) != s.pts.end();
    }
    case SymField::signed_tropical: {
      const auto& s = std::get<STropSet>(V.v);
      if (x.zero) return s.ninf || s.bal.has_value();
      if (s.bal && x.val <= *s.bal) return true;
      return std::find(s.pts.begin(), s.pts.end(),
                       std::make_pair(x.sgn, x.val)) != s.pts.end();
    }
    case SymField::phase: {
      const auto& s = std::get<PhaseSet>(V.v);
      if (x.zero) return s.zero;
      return circle_contains(s, x.val);
    }
  }
  return false;
}

bool setvalue_subset(const SetValue& U, const SetValue& V) {
  require_same_field(U.field, V.field);
  SetValue a = canon(U), b = canon(V);
  switch (a.field) {
    case SymField::krasner: {
      const auto& x = std::get<KraSet>(a.v);
      const auto& y = std::get<KraSet>(b.v);
      return (!x.z || y.z) && (!x.o || y.o);
    }
    case SymField::sign: {
      const auto& x = std::get<SignSet>(a.v);
      const auto& y = std::get<SignSet>(b.v);
      return (!x.z || y.z) && (!x.p || y.p) && (!x.m || y.m);
    }
    case SymField::tropical: {
      const auto& x = std::get<TropSet>(a.v);
      const auto& y = std::get<TropSet>(b.v);
      if (x.ninf && !(y.ninf || y.ray)) return false;
      if (x.ray && !(y.ray && *x.ray <= *y.ray)) return false;
      for (const auto& p : x.pts)
        if (!setvalue_contains(b, sym_trop(p))) return false;
      return true;
    }
    case SymField::signed_tropical: {
      const auto& x = std::get<STropSet>(a.v);
      const auto& y = std::get<STropSet>(b.v);
      if (x.ninf && !(y.ninf || y.bal)) return false;
      if (x.bal && !(y.bal && *x.bal <= *y.bal)) return false;
      for (const auto& p : x.pts)
        if (!setvalue_contains(b, sym_strop(p.first, p.second))) return false;
      return true;
    }
    case SymField::phase: {
      const auto& x = std::get<PhaseSet>(a.v);
      const auto& y = std::get<PhaseSet>(b.v);
      if (x.zero && !y.zero) return false;
      if (y.full || circle_empty(x)) return true;
      if (x.full) return false;
      std::vector<Rat> grid = circle_endpoints(x);
      for (const auto& e : circle_endpoints(y)) grid.push_back(e);
      sort_unique(grid);
      for (std::size_t i = 0; i < grid.size(); ++i) {
        if (circle_contains(x, grid[i]) && !circle_contains(y, grid[i])) return false;
        Rat mid = ccw_mid(grid[i], grid[(i + 1) % grid.size()]);
        if (circle_contains(x, mid) && !circle_contains(y, mid)) return false;
      }
      return true;
    }
  }
  return false;
}

SetValue setvalue_union(const SetValue& U, const SetValue& V) {
  require_same_field(U.field, V.field);
  SetValue R = U;
  switch (R.field) {
    case SymField::krasner: {
      auto& x = std::get<KraSet>(R.v);
      const auto& y = std::get<KraSet>(V.v);
      x.z = x.z || y.z;
      x.o = x.o || y.o;
      break;
    }
    case SymField::sign: {
      auto& x = std::get<SignSet>(R.v);
      const auto& y = std::get<SignSet>(V.v);
      x.z = x.z || y.z;
      x.p = x.p || y.p;
      x.m = x.m || y.m;
      break;
    }
    case SymField::tropical: {
      auto& x = std::get<TropSet>(R.v);
      const auto& y = std::get<TropSet>(V.v);
      x.ninf = x.ninf || y.ninf;
      if (y.ray) trop_add_ray(x, *y.ray);
      x.pts.insert(x.pts.end(), y.pts.begin(), y.pts.end());
      break;
    }
    case SymField::signed_tropical: {
      auto& x = std::get<STropSet>(R.v);
      const auto& y = std::get<STropSet>(V.v);
      x.ninf = x.ninf || y.ninf;
      if (y.bal) strop_add_bal(x, *y.bal);
      x.pts.insert(x.pts.end(), y.pts.begin(), y.pts.end());
      break;
    }
    case SymField::phase:
      R.v = phase_union(std::get<PhaseSet>(R.v), std::get<PhaseSet>(V.v));
      break;
  }
  return canon(std::move(R));
}

SetValue scale_setvalue(const SymElem& a, const SetValue& V) {
  require_same_field(a.field, V.field);
  if (setvalue_empty(V)) return V;
  if (a.zero) return setvalue_of({sym_zero(a.field)});
  SetValue R = V;
  switch (R.field) {
    case SymField::krasner:
      break;
    case SymField::sign:
      if (a.sgn < 0) {
        auto& s = std::get<SignSet>(R.v);
        std::swap(s.p, s.m);
      }
      break;
    case SymField::tropical: {
      auto& s = std::get<TropSet>(R.v);
      if (s.ray) s.ray = *s.ray + a.val;
      for (auto& p : s.pts) p = p + a.val;
      break;
    }
    case SymField::signed_tropical: {
      auto& s = std::get<STropSet>(R.v);
      if (s.bal) s.bal = *s.bal + a.val;
      for (auto& p : s.pts) p = {p.first * a.sgn, p.second + a.val};
      break;
    }
    case SymField::phase: {
      auto& s = std::get<PhaseSet>(R.v);
      PhaseSet rot = rotate_circle(s, a.val);
      rot.zero = s.zero;
      rot.full = s.full;
      s = std::move(rot);
      break;
    }
  }
  return canon(std::move(R));
}

SetValue hsum_setvalues(const SetValue& U, const SetValue& V) {
  require_same_field(U.field, V.field);
  if (setvalue_empty(U) || setvalue_empty(V))
    throw std::invalid_argument("hypersum of an empty set value");
  SetValue R = empty_setvalue(U.field);
  switch (U.field) {
    case SymField::krasner:
      R.v = hsum_kra(std::get<KraSet>(U.v), std::get<KraSet>(V.v));
      break;
    case SymField::sign:
      R.v = hsum_sign(std::get<SignSet>(U.v), std::get<SignSet>(V.v));
      break;
    case SymField::tropical:
      R.v = hsum_trop(std::get<TropSet>(canon(U).v), std::get<TropSet>(canon(V).v));
      break;
    case SymField::signed_tropical:
      R.v = hsum_strop(std::get<STropSet>(canon(U).v), std::get<STropSet>(canon(V).v));
      break;
    case SymField::phase:
      R.v = hsum_phase(std::get<PhaseSet>(canon(U).v), std::get<PhaseSet>(canon(V).v));
      break;
  }
  return canon(std::move(R));
}

SetValue hsum_sym(const SymElem& x, const SymElem& y) {
  return hsum_setvalues(setvalue_of({x}), setvalue_of({y}));
}

std::string SetValue::str() const {
  std::string out = "{";
  auto add = [&](const std::string& s) {
    if (out.size() > 1) out += ", ";
    out += s;
  };
  switch (field) {
    case SymField::krasner: {
      const auto& s = std::get<KraSet>(v);
      if (s.z) add("0");
      if (s.o) add("1");
      break;
    }
    case SymField::sign: {
      const auto& s = std::get<SignSet>(v);
      if (s.z) add("0");
      if (s.p) add("1");
      if (s.m) add("-1");
      break;
    }
    case SymField::tropical: {
      const auto& s = std::get<TropSet>(v);
      if (s.ray) add("[-inf," + s.ray->str() + "]");
      else if (s.ninf) add("-inf");
      for (const auto& p : s.pts) add(p.str());
      break;
    }
    case SymField::signed_tropical: {
      const auto& s = std::get<STropSet>(v);
      if (s.bal) add("bal(" + s.bal->str() + ")");
      else if (s.ninf) add("-inf");
      for (const auto& p : s.pts) add((p.first < 0 ? "-|" : "+|") + p.second.str() + "|");
      break;
    }
    case SymField::phase: {
      const auto& s = std::get<PhaseSet>(v);
      if (s.zero) add("0");
      if (s.full) add("circle");
      for (const auto& c : s.comps) {
        if (c.lo == c.hi && c.lc && c.hc) add("ang(" + c.lo.str() + ")");
        else
          add(std::string(c.lc ? "[" : "(") + c.lo.str() + "," + c.hi.str() +
              (c.hc ? "]" : ")"));
      }
      break;
    }
  }
  return out + "}";
}

AxiomReport spot_check_axioms(SymField f, const std::vector<SymElem>& sample) {
  if (sample.empty()) throw std::invalid_argument("empty sample");
  for (const auto& x : sample) require_same_field(f, x.field);
  AxiomReport rep;
  const int n = static_cast<int>(sample.size());
  auto pt = [&](int i) { return setvalue_of({sample[i]}); };

  AxiomCheck neutral{"hyperzero-neutral", true, true, {}, "", 0};
  SymElem z = sym_zero(f);
  for (int i = 0; i < n && neutral.pass; ++i) {
    ++neutral.tuples_checked;
    if (hsum_sym(z, sample[i]) != pt(i) || hsum_sym(sample[i], z) != pt(i)) {
      neutral.pass = false;
      neutral.witness = {i};
      neutral.detail = "hyperzero not neutral at " + sample[i].str();
    }
  }
  rep.add(neutral);

  AxiomCheck comm{"commutativity", true, false, {}, "", 0};
  for (int i = 0; i < n && comm.pass; ++i)
    for (int j = 0; j < n && comm.pass; ++j) {
      ++comm.tuples_checked;
      if (hsum_sym(sample[i], sample[j]) != hsum_sym(sample[j], sample[i])) {
        comm.pass = false;
        comm.witness = {i, j};
      }
    }
  rep.add(comm);

  AxiomCheck assoc{"associativity", true, true, {}, "", 0};
  for (int i = 0; i < n && assoc.pass; ++i)
    for (int j = 0; j < n && assoc.pass; ++j)
      for (int k = 0; k < n && assoc.pass; ++k) {
        ++assoc.tuples_checked;
        SetValue lhs = hsum_setvalues(hsum_sym(sample[i], sample[j]), pt(k));
        SetValue rhs = hsum_setvalues(pt(i), hsum_sym(sample[j], sample[k]));
        if (lhs != rhs) {
          assoc.pass = false;
          assoc.witness = {i, j, k};
          assoc.detail = lhs.str() + " vs " + rhs.str();
        }
      }
  rep.add(assoc);

  AxiomCheck negex{"hypernegative-existence", true, true, {}, "", 0};
  AxiomCheck negun{"hypernegative-uniqueness-on-sample", true, true, {}, "", 0};
  for (int i = 0; i < n; ++i) {
    ++negex.tuples_checked;
    SymElem ng = neg_sym(sample[i]);
    if (negex.pass &&
        (!setvalue_contains(hsum_sym(sample[i], ng), z) ||
         !setvalue_contains(hsum_sym(ng, sample[i]), z))) {
      negex.pass = false;
      negex.witness = {i};
    }
    for (int j = 0; j < n && negun.pass; ++j) {
      ++negun.tuples_checked;
      if (sample[j] == ng) continue;
      if (setvalue_contains(hsum_sym(sample[i], sample[j]), z)) {
        negun.pass = false;
        negun.witness = {i, j};
        negun.detail = "second hypernegative " + sample[j].str() + " for " + sample[i].str();
      }
    }
  }
  rep.add(negex);
  rep.add(negun);

  AxiomCheck rev{"reversibility", true, true, {}, "", 0};
  for (int i = 0; i < n && rev.pass; ++i)
    for (int j = 0; j < n && rev.pass; ++j)
      for (int k = 0; k < n && rev.pass; ++k) {
        ++rev.tuples_checked;
        bool fwd = setvalue_contains(hsum_sym(sample[i], sample[j]), sample[k]);
        bool bwd = setvalue_contains(hsum_sym(sample[k], neg_sym(sample[i])), sample[j]);
        if (fwd != bwd) {
          rev.pass = false;
          rev.witness = {i, j, k};
        }
      }
  rep.add(rev);

  AxiomCheck dist{"distributivity", true, true, {}, "", 0};
  for (int i = 0; i < n && dist.pass; ++i)
    for (int j = 0; j < n && dist.pass; ++j)
      for (int k = 0; k < n && dist.pass; ++k) {
        ++dist.tuples_checked;
        SetValue lhs = scale_setvalue(sample[i], hsum_sym(sample[j], sample[k]));
        SetValue rhs = hsum_sym(mul_sym(sample[i], sample[j]), mul_sym(sample[i], sample[k]));
        if (lhs != rhs) {
          dist.pass = false;
          dist.witness = {i, j, k};
          dist.detail = lhs.str() + " vs " + rhs.str();
        }
      }
  rep.add(dist);
  return rep;
}

namespace {

std::vector<SymElem> gap_pool(SymField f) {
  switch (f) {
    case SymField::krasner:
      return {sym_zero(f), sym_krasner_one()};
    case SymField::sign:
      return {sym_zero(f), sym_sign(1), sym_sign(-1)};
    case SymField::tropical:
      return {sym_zero(f), sym_trop(Rat(0)), sym_trop(Rat(1)), sym_trop(Rat(2))};
    case SymField::signed_tropical:
      return {sym_zero(f), sym_strop(1, Rat(0)), sym_strop(-1, Rat(0)), sym_strop(1, Rat(1))};
    case SymField::phase: {
      std::vector<SymElem> out;
      for (int k = 0; k < 8; ++k) out.push_back(sym_phase(Rat(k, 8)));
      return out;
    }
  }
  throw std::invalid_argument("unknown field");
}

// nonempty subsets of pool indices, ordered by size then lexicographically
std::vector<std::vector<int>> subsets_by_size(int n, int cap) {
  std::vector<std::vector<int>> out;
  for (int sz = 1; sz <= cap; ++sz) {
    std::vector<int> idx(sz);
    for (int i = 0; i < sz; ++i) idx[i] = i;
    while (true) {
      out.push_back(idx);
      int i = sz - 1;
      while (i >= 0 && idx[i] == n - sz + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < sz; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return out;
}

// some element of rhs missing from lhs; both canonical, lhs strictly inside rhs
SymElem pick_extra(const SetValue& rhs, const SetValue& lhs) {
  std::vector<SymElem> cand;
  switch (rhs.field) {
    case SymField::krasner:
      cand = {sym_zero(rhs.field), sym_krasner_one()};
      break;
    case SymField::sign:
      cand = {sym_zero(rhs.field), sym_sign(1), sym_sign(-1)};
      break;
    case SymField::tropical: {
      cand.push_back(sym_zero(rhs.field));
      const auto& a = std::get<TropSet>(rhs.v);
      const auto& b = std::get<TropSet>(lhs.v);
      std::vector<Rat> qs;
      if (a.ray) { qs.push_back(*a.ray); qs.push_back(*a.ray - Rat(1)); }
      if (b.ray) qs.push_back(*b.ray);
      for (const auto& p : a.pts) qs.push_back(p);
      for (const auto& p : b.pts) qs.push_back(p);
      sort_unique(qs);
      std::size_t m = qs.size();
      for (std::size_t i = 0; i + 1 < m; ++i) qs.push_back((qs[i] + qs[i + 1]) * kHalf);
      for (const auto& q : qs) cand.push_back(sym_trop(q));
      break;
    }
    case SymField::signed_tropical: {
      cand.push_back(sym_zero(rhs.field));
      const auto& a = std::get<STropSet>(rhs.v);
      const auto& b = std::get<STropSet>(lhs.v);
      std::vector<Rat> qs;
      if (a.bal) { qs.push_back(*a.bal); qs.push_back(*a.bal - Rat(1)); }
      if (b.bal) qs.push_back(*b.bal);
      for (const auto& p : a.pts) qs.push_back(p.second);
      for (const auto& p : b.pts) qs.push_back(p.second);
      sort_unique(qs);
      std::size_t m = qs.size();
      for (std::size_t i = 0; i + 1 < m; ++i) qs.push_back((qs[i] + qs[i + 1]) * kHalf);
      for (const auto& q : qs) {
        cand.push_back(sym_strop(1, q));
        cand.push_back(sym_strop(-1, q));
      }
      break;
    }
    case SymField::phase: {
      cand.push_back(sym_zero(rhs.field));
      const auto& a = std::get<PhaseSet>(rhs.v);
      const auto& b = std::get<PhaseSet>(lhs.v);
      std::vector<Rat> grid = circle_endpoints(a);
      for (const auto& e : circle_endpoints(b)) grid.push_back(e);
      if (grid.empty()) grid.push_back(Rat(0));
      sort_unique(grid);
      for (std::size_t i = 0; i < grid.size(); ++i) {
        cand.push_back(sym_phase(grid[i]));
        cand.push_back(sym_phase(ccw_mid(grid[i], grid[(i + 1) % grid.size()])));
      }
      break;
    }
  }
  for (const auto& c : cand)
    if (setvalue_contains(rhs, c) && !setvalue_contains(lhs, c)) return c;
  throw std::logic_error("strict inclusion without a locatable witness");
}

}  // namespace

GapWitness distributivity_gap(SymField f, long long budget) {
  GapWitness w;
  std::vector<SymElem> pool = gap_pool(f);
  int n = static_cast<int>(pool.size());
  int cap = n <= 4 ? n : 2;
  std::vector<std::vector<int>> subs = subsets_by_size(n, cap);
  auto lift = [&](const std::vector<int>& idx) {
    std::vector<SymElem> out;
    for (int i : idx) out.push_back(pool[i]);
    return out;
  };
  for (const auto& s1i : subs)
    for (const auto& s2i : subs)
      for (const auto& si : subs) {
        if (w.configurations >= budget) return w;
        ++w.configurations;
        std::vector<SymElem> S = lift(si), S1 = lift(s1i), S2 = lift(s2i);
        SetValue inner = hsum_setvalues(setvalue_of(S1), setvalue_of(S2));
        SetValue lhs = empty_setvalue(f);
        for (const auto& s : S) lhs = setvalue_union(lhs, scale_setvalue(s, inner));
        std::vector<SymElem> p1, p2;
        for (const auto& s : S) {
          for (const auto& x : S1) p1.push_back(mul_sym(s, x));
          for (const auto& x : S2) p2.push_back(mul_sym(s, x));
        }
        SetValue rhs = hsum_setvalues(setvalue_of(p1), setvalue_of(p2));
        if (!setvalue_subset(lhs, rhs))
          throw std::logic_error("set product escaped the distributive hull");
        if (lhs == rhs) continue;
        w.found = true;
        w.s = S;
        w.s1 = S1;
        w.s2 = S2;
        w.lhs = lhs;
        w.rhs = rhs;
        w.extra = pick_extra(rhs, lhs);
        return w;
      }
  return w;
}

}  // namespace hyperforge
