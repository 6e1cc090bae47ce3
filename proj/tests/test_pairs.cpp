#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "hyperforge/pairs.hpp"
#include "hyperforge/quotient.hpp"
#include "oracles.hpp"

using namespace hyperforge;

namespace {

// carrier index of a subset in a power-set pair (index = mask - 1)
Elem pidx(std::initializer_list<Elem> xs) { return static_cast<Elem>(set_of(xs) - 1); }

// elementwise hypersum of two subsets recomputed straight from the base table
Elem star_oracle(const HyperTable& H, ElemSet a, ElemSet b) {
  ElemSet u = 0;
  for (Elem x : set_elems(a))
    for (Elem y : set_elems(b)) u |= H.hs(x, y);
  return static_cast<Elem>(u - 1);
}

// can b be reached from a by pairing with a zero-containing subset?
bool step_oracle(const HyperTable& H, const Pair& P, Elem a, Elem b) {
  for (Elem c = 0; c < P.size(); ++c)
    if (contains(P.psets[c], H.zero) && star_oracle(H, P.psets[a], P.psets[c]) == b) return true;
  return false;
}

// supertropical-flavoured five-element carrier: bottom, two tangible values,
// and their two ghost shadows; star is max with ghostly ties
Pair ghost_pair() {
  Pair P;
  P.names = {"-inf", "0", "1", "0v", "1v"};
  P.star = {0, 1, 2, 3, 4,   //
            1, 3, 2, 3, 4,   //
            2, 2, 4, 2, 4,   //
            3, 3, 2, 3, 4,   //
            4, 4, 4, 4, 4};
  P.iota = 0;
  P.tset = {1};
  P.one = 1;
  P.null0 = {1, 0, 0, 1, 1};
  P.lact = {{0, 1, 2, 3, 4}};
  P.ract = {{0, 1, 2, 3, 4}};
  return P;
}

ElemSet second_column_zero(const FinRing& m2) {
  ElemSet out = 0;
  for (Elem x = 0; x < m2.size(); ++x)
    if (m2.names[x][4] == '0' && m2.names[x][10] == '0') out |= bit(x);
  return out;
}

}  // namespace

TEST_CASE("power-set pair over the two-element hyperfield") {
  auto H = krasner_table();
  auto P = powerset_pair(H);

  REQUIRE(P.size() == 3);
  CHECK(P.names == std::vector<std::string>{"{0}", "{1}", "{0,1}"});
  CHECK(P.iota == pidx({0}));
  CHECK(P.one == pidx({1}));
  CHECK(P.tset == std::vector<Elem>{pidx({1})});
  CHECK(P.null0 == std::vector<char>{1, 0, 1});  // exactly the 0-containing subsets

  for (Elem a = 0; a < P.size(); ++a)
    for (Elem b = 0; b < P.size(); ++b) {
      CHECK(P.st(a, b) == star_oracle(H, P.psets[a], P.psets[b]));
      CHECK(P.st(a, b) == P.st(b, a));
    }
  CHECK(P.st(pidx({1}), pidx({1})) == pidx({0, 1}));

  auto rep = check_pair_axioms(P);
  INFO(rep.summary());
  CHECK(rep.all_pass());
  for (const auto& c : rep.checks) CHECK(c.tuples_checked > 0);

  auto Rsub = subset_relation(P), Rstep = null_step_relation(P);
  CHECK(check_surpassing(P, Rsub).all_pass());
  CHECK(check_surpassing(P, Rstep).all_pass());
  CHECK(Rsub.at(pidx({1}), pidx({0, 1})));

  // on this pair the two orderings coincide
  auto cmp = compare_relations(Rstep, Rsub);
  CHECK(cmp.left_in_right);
  CHECK(cmp.right_in_left);

  // elements above iota are exactly the flagged nulls
  CHECK(a_null(P, Rsub) == std::vector<Elem>{pidx({0}), pidx({0, 1})});
  CHECK(a_null(P, Rstep) == std::vector<Elem>{pidx({0}), pidx({0, 1})});
}

TEST_CASE("power-set pair over the sign carrier") {
  auto H = signs_table();
  auto P = powerset_pair(H);

  REQUIRE(P.size() == 7);
  int nulls = 0;
  for (Elem a = 0; a < P.size(); ++a) {
    const bool flagged = P.is_null(a);
    CHECK(flagged == contains(P.psets[a], H.zero));
    nulls += flagged ? 1 : 0;
  }
  CHECK(nulls == 4);
  CHECK(P.tset == std::vector<Elem>{pidx({1}), pidx({2})});

  for (Elem a = 0; a < P.size(); ++a)
    for (Elem b = 0; b < P.size(); ++b)
      CHECK(P.st(a, b) == star_oracle(H, P.psets[a], P.psets[b]));
  CHECK(P.st(pidx({1}), pidx({2})) == pidx({0, 1, 2}));
  CHECK(P.st(pidx({1}), pidx({1})) == pidx({1}));
  CHECK(P.st(pidx({1}), pidx({0, 1})) == pidx({1}));

  auto rep = check_pair_axioms(P);
  INFO(rep.summary());
  CHECK(rep.all_pass());

  auto Rsub = subset_relation(P), Rstep = null_step_relation(P);
  CHECK(check_surpassing(P, Rsub).all_pass());
  CHECK(check_surpassing(P, Rstep).all_pass());
  const bool singletons_incomparable =
      !Rsub.at(pidx({1}), pidx({2})) && !Rsub.at(pidx({2}), pidx({1}));
  CHECK(singletons_incomparable);

  // every null bump grows the set, but {1} can never grow to exactly {0,1}
  auto cmp = compare_relations(Rstep, Rsub);
  CHECK(cmp.left_in_right);
  CHECK_FALSE(cmp.right_in_left);
  CHECK(cmp.witness_rl == std::vector<Elem>{pidx({1}), pidx({0, 1})});
  const bool witness_genuine = Rsub.at(cmp.witness_rl[0], cmp.witness_rl[1]) &&
                               !step_oracle(H, P, cmp.witness_rl[0], cmp.witness_rl[1]);
  CHECK(witness_genuine);

  for (Elem a = 0; a < P.size(); ++a)
    for (Elem b = 0; b < P.size(); ++b) CHECK(Rstep.at(a, b) == step_oracle(H, P, a, b));

  auto an = a_null(P, Rsub);
  REQUIRE(an.size() == 4);
  for (Elem c : an) CHECK(P.is_null(c));
}

TEST_CASE("power-set pair over a field residue table") {
  auto f5 = make_finite_field(5, 1);
  auto Q = krasner_quotient(f5, subgroup_generated(f5, 4));  // classes {0},{1,4},{2,3}
  REQUIRE(Q.table.size() == 3);
  auto P = powerset_pair(Q.table);

  REQUIRE(P.size() == 7);
  auto rep = check_pair_axioms(P);
  INFO(rep.summary());
  CHECK(rep.all_pass());

  for (Elem a = 0; a < P.size(); ++a)
    for (Elem b = 0; b < P.size(); ++b)
      CHECK(P.st(a, b) == star_oracle(Q.table, P.psets[a], P.psets[b]));

  auto Rsub = subset_relation(P), Rstep = null_step_relation(P);
  CHECK(check_surpassing(P, Rsub).all_pass());
  CHECK(check_surpassing(P, Rstep).all_pass());
  auto cmp = compare_relations(Rstep, Rsub);
  CHECK(cmp.left_in_right);
  CHECK_FALSE(cmp.right_in_left);

  auto an = a_null(P, Rsub);
  for (Elem c = 0; c < P.size(); ++c) {
    const bool above = std::find(an.begin(), an.end(), c) != an.end();
    CHECK(above == P.is_null(c));
  }

  // both nonzero classes contain their own additive inverses, so each is its
  // own quasi-negative
  auto N = check_property_N(P);
  CHECK(N.holds);
  CHECK(N.verdict.pass);
  CHECK(N.dagger == std::vector<Elem>{pidx({1}), pidx({2})});
  CHECK(N.circ == std::vector<Elem>{pidx({0, 2}), pidx({0, 1})});

  auto nm = negation_map(P);
  REQUIRE(nm.found);
  CHECK(nm.via == P.one);
  CHECK(nm.image == P.tset);  // identity
  CHECK(is_uniquely_negated(P).pass);
}

TEST_CASE("hypernegation gives the canonical quasi-negatives on sign subsets") {
  auto P = powerset_pair(signs_table());

  auto N = check_property_N(P);
  CHECK(N.holds);
  CHECK(N.dagger == std::vector<Elem>{pidx({2}), pidx({1})});          // swap
  CHECK(N.circ == std::vector<Elem>{pidx({0, 1, 2}), pidx({0, 1, 2})});

  auto nm = negation_map(P);
  REQUIRE(nm.found);
  CHECK(nm.via == pidx({2}));
  CHECK(nm.image == std::vector<Elem>{pidx({2}), pidx({1})});
  CHECK(is_uniquely_negated(P).pass);

  auto K = powerset_pair(krasner_table());
  auto NK = check_property_N(K);
  CHECK(NK.holds);
  CHECK(NK.dagger == std::vector<Elem>{pidx({1})});
  CHECK(NK.circ == std::vector<Elem>{pidx({0, 1})});
  auto nmk = negation_map(K);
  REQUIRE(nmk.found);
  CHECK(nmk.via == K.one);
  CHECK(nmk.image == K.tset);
}

TEST_CASE("adjoined-top pair over a unit group") {
  auto um = units_monoid(zmod(3));
  auto P = infinity_pair(um.monoid);

  REQUIRE(P.size() == 4);
  CHECK(P.names == std::vector<std::string>{"0", "1", "2", "inf"});
  CHECK(P.iota == 0);
  CHECK(P.one == 1);
  CHECK(P.tset == std::vector<Elem>{1, 2});
  CHECK(P.null0 == std::vector<char>{1, 0, 0, 1});

  CHECK(P.st(0, 2) == 2);
  CHECK(P.st(1, 2) == 3);
  CHECK(P.st(1, 1) == 3);
  CHECK(P.st(3, 3) == 3);
  CHECK(P.m(1, 2) == 2);
  CHECK(P.m(2, 2) == 1);
  CHECK(P.m(2, 3) == 3);
  CHECK(P.m(0, 3) == 0);  // absorbing zero wins against the top

  auto rep = check_pair_axioms(P);
  INFO(rep.summary());
  CHECK(rep.all_pass());

  auto Rstep = null_step_relation(P);
  CHECK(check_surpassing(P, Rstep).all_pass());
  CHECK(Rstep.at(1, 3));
  CHECK_FALSE(Rstep.at(1, 2));
  CHECK(a_null(P, Rstep) == std::vector<Elem>{0, 3});

  auto N = check_property_N(P);
  CHECK(N.holds);
  CHECK(N.circ == std::vector<Elem>{3, 3});

  // identity negation exists, yet negatives are far from unique: every
  // tangible pair collides into the top
  auto nm = negation_map(P);
  REQUIRE(nm.found);
  CHECK(nm.via == P.one);
  CHECK(nm.image == P.tset);
  auto uq = is_uniquely_negated(P);
  CHECK_FALSE(uq.pass);
  CHECK(uq.witness == std::vector<Elem>{1, 1, 2});

  // exact distributivity means the equality relation already satisfies the
  // product comparison
  auto dist = check_preceq_distributive(P, equality_relation(P));
  INFO(dist.summary());
  CHECK(dist.all_pass());
}

TEST_CASE("adjoined-top pair over the trivial monoid") {
  auto P = infinity_pair(make_monoid({"e"}, {0}, 0));
  REQUIRE(P.size() == 3);
  CHECK(P.names == std::vector<std::string>{"0", "e", "inf"});
  CHECK(check_pair_axioms(P).all_pass());
  auto N = check_property_N(P);
  CHECK(N.holds);
  CHECK(N.dagger == std::vector<Elem>{1});
  CHECK(N.circ == std::vector<Elem>{2});
  CHECK(negation_map(P).found);
  CHECK(is_uniquely_negated(P).pass);
}

TEST_CASE("idempotent tangible sums keep quasi-negatives but kill the negation map") {
  auto c3 = make_monoid({"1", "g", "g2"}, {0, 1, 2, 1, 2, 0, 2, 0, 1}, 0);
  auto P = infinity_pair(c3);
  for (Elem t : P.tset) P.star[static_cast<size_t>(t) * P.size() + t] = t;

  auto rep = check_pair_axioms(P);
  INFO(rep.summary());
  CHECK(rep.all_pass());  // group actions are injective, so sums still spread

  auto N = check_property_N(P);
  CHECK(N.holds);
  CHECK(N.dagger == std::vector<Elem>{2, 1, 1});  // first partner distinct from self
  CHECK(N.circ == std::vector<Elem>{4, 4, 4});

  // both non-unit candidates pair the unit into the nulls, but squaring a
  // generator is not an involution
  auto nm = negation_map(P);
  CHECK_FALSE(nm.found);
  CHECK(nm.detail.find("2 candidate") != std::string::npos);

  auto uq = is_uniquely_negated(P);
  CHECK_FALSE(uq.pass);
  CHECK(uq.witness == std::vector<Elem>{1, 2, 3});
}

TEST_CASE("ghost-layered pair passes the reachability ordering") {
  auto P = ghost_pair();
  auto rep = check_pair_axioms(P);
  INFO(rep.summary());
  CHECK(rep.all_pass());

  auto R = null_step_relation(P);
  auto sur = check_surpassing(P, R);
  INFO(sur.summary());
  CHECK(sur.all_pass());

  CHECK(R.at(1, 3));        // a value is surpassed by its ghost
  CHECK(R.at(1, 4));        // and by any larger ghost
  CHECK(R.at(3, 4));
  CHECK(R.at(0, 4));
  CHECK_FALSE(R.at(2, 3));  // larger value never sinks to a smaller ghost
  CHECK_FALSE(R.at(1, 2));  // tangibles stay incomparable
  CHECK_FALSE(R.at(4, 3));

  CHECK(a_null(P, R) == std::vector<Elem>{0, 3, 4});

  auto N = check_property_N(P);
  CHECK(N.holds);
  CHECK(N.dagger == std::vector<Elem>{1});
  CHECK(N.circ == std::vector<Elem>{3});
  CHECK(negation_map(P).found);
  CHECK(is_uniquely_negated(P).pass);

  CHECK_THROWS_AS(check_preceq_distributive(P, R), std::invalid_argument);  // no product
}

TEST_CASE("pair axiom checks expose a broken null set") {
  auto B = powerset_pair(signs_table());
  std::fill(B.null0.begin(), B.null0.end(), 0);
  B.null0[pidx({0})] = 1;
  B.null0[pidx({1})] = 1;  // {1} is not absorbed by the T-action of {-1}

  auto rep = check_pair_axioms(B);
  CHECK_FALSE(rep.all_pass());
  const auto* na = rep.find("null-absorbing");
  REQUIRE(na != nullptr);
  CHECK_FALSE(na->pass);
  CHECK(na->witness == std::vector<Elem>{pidx({2}), pidx({1})});

  auto N = check_property_N(B);
  CHECK_FALSE(N.holds);
  CHECK(N.verdict.witness == std::vector<Elem>{pidx({2})});  // {-1} lost its partner
}

TEST_CASE("equality is a valid ordering when iota is the only null") {
  auto D = powerset_pair(krasner_table());
  D.null0 = {1, 0, 0};
  REQUIRE(check_pair_axioms(D).all_pass());
  auto sur = check_surpassing(D, equality_relation(D));
  INFO(sur.summary());
  CHECK(sur.all_pass());
}

TEST_CASE("products distribute up to the subset ordering on power-set pairs") {
  for (auto H : {krasner_table(), signs_table()}) {
    auto P = powerset_pair(H);
    auto rep = check_preceq_distributive(P, subset_relation(P));
    INFO(rep.summary());
    CHECK(rep.all_pass());
    const long long cube = static_cast<long long>(P.size()) * P.size() * P.size();
    for (const auto& c : rep.checks) CHECK(c.tuples_checked == cube);
  }

  auto f5 = make_finite_field(5, 1);
  auto Q = krasner_quotient(f5, subgroup_generated(f5, 4));
  auto P = powerset_pair(Q.table);
  CHECK(check_preceq_distributive(P, subset_relation(P)).all_pass());

  // coset multiplication in the matrix residue spreads inside the coset sum
  auto m2 = matrix_ring(make_finite_field(2, 1), 2);
  auto M = m_hyperring(m2, second_column_zero(m2));
  CHECK(check_mhyper_distributive(M).pass);
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(powerset_pair(make_hypertable({"a"}, {bit(0)}, {0}, -1, 0)),
                  std::invalid_argument);  // no zero
  CHECK_THROWS_AS(
      powerset_pair(make_hypertable({"0", "1"}, {bit(0), bit(1), bit(1), set_of({0, 1})}, {}, 0)),
      std::invalid_argument);  // no product

  auto f7 = zmod(7);
  std::vector<ElemSet> hs(49);
  for (Elem a = 0; a < 7; ++a)
    for (Elem b = 0; b < 7; ++b) hs[static_cast<size_t>(a) * 7 + b] = bit(f7.a(a, b));
  auto big = make_hypertable(f7.names, hs, f7.mul, 0, 1);
  CHECK_THROWS_AS(powerset_pair(big), std::invalid_argument);  // 2^7-1 subsets is too many

  auto P = powerset_pair(krasner_table());
  auto K = powerset_pair(signs_table());
  CHECK_THROWS_AS(check_surpassing(P, subset_relation(K)), std::invalid_argument);
  CHECK_THROWS_AS(compare_relations(subset_relation(P), subset_relation(K)),
                  std::invalid_argument);

  auto bad = P;
  bad.tset = {2, 1};  // not ascending
  CHECK_THROWS_AS(check_pair_axioms(bad), std::invalid_argument);
  bad = P;
  bad.one = 0;  // unit must live in T
  CHECK_THROWS_AS(check_pair_axioms(bad), std::invalid_argument);
  bad = P;
  bad.star[0] = 99;
  CHECK_THROWS_AS(check_pair_axioms(bad), std::invalid_argument);
  bad = P;
  bad.mul.clear();
  CHECK_THROWS_AS(derive_actions(bad), std::invalid_argument);
  CHECK_THROWS_AS(check_preceq_distributive(bad, subset_relation(P)), std::invalid_argument);

  auto G = ghost_pair();
  CHECK_THROWS_AS(subset_relation(G), std::invalid_argument);  // no subset backing
}
