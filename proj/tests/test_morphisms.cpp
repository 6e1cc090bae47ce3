#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "hyperforge/morphisms.hpp"
#include "oracles.hpp"

using namespace hyperforge;

namespace {

// carrier index of a subset in a power-set pair (index = mask - 1)
Elem pidx(std::initializer_list<Elem> xs) { return static_cast<Elem>(set_of(xs) - 1); }

// residue table of GF(5) by the unit subgroup {1,4}: classes [0], [1]={1,4}, [2]={2,3}
HyperTable gf5_residue() {
  const FinRing f5 = make_finite_field(5, 1);
  return krasner_quotient(f5, subgroup_generated(f5, 4)).table;
}

FinMonoid cyclic(int n) {
  std::vector<std::string> names(n);
  std::vector<Elem> op(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    names[i] = std::to_string(i);
    for (int j = 0; j < n; ++j) op[static_cast<size_t>(i) * n + j] = (i + j) % n;
  }
  return make_monoid(std::move(names), std::move(op), 0);
}

}  // namespace

TEST_CASE("inclusion and weak laws for maps between hypersum tables") {
  const HyperTable S = signs_table();
  const HyperTable K = krasner_table();

  const TableArrow id = table_identity(S);
  CHECK(is_subset_morphism(id).pass);
  CHECK(is_weak_morphism(id).pass);

  // negation of the sign carrier: hypersums are symmetric under it
  const TableArrow swap{S, S, {0, 2, 1}};
  CHECK(is_subset_morphism(swap).pass);
  CHECK(is_weak_morphism(swap).pass);
  CHECK(compose(swap, swap).to == std::vector<Elem>{0, 1, 2});
  CHECK(compose(id, swap).to == swap.to);

  // collapse both signs onto 1
  const TableArrow s2k{S, K, {0, 1, 1}};
  CHECK(is_subset_morphism(s2k).pass);
  CHECK(is_weak_morphism(s2k).pass);

  // everything to zero still preserves zero membership
  const TableArrow zero{S, K, {0, 0, 0}};
  CHECK(is_weak_morphism(zero).pass);

  // 1+1 reaches 0 in the two-element hyperfield but not among the signs
  const TableArrow k2s{K, S, {0, 1}};
  const Verdict w = is_weak_morphism(k2s);
  CHECK_FALSE(w.pass);
  CHECK(w.witness == std::vector<Elem>{1, 1});

  CHECK_THROWS_AS(compose(s2k, swap), std::invalid_argument);
}

TEST_CASE("inclusion morphisms between residue tables") {
  const HyperTable Q5 = gf5_residue();
  const HyperTable K = krasner_table();

  // merge the two nonzero classes
  const TableArrow q2k{Q5, K, {0, 1, 1}};
  const Verdict sub = is_subset_morphism(q2k);
  CHECK(sub.pass);
  CHECK(is_weak_morphism(q2k).pass);

  // 1+1 lands on {0,1} upstairs but [1]+[1] misses [1] downstairs
  const TableArrow k2q{K, Q5, {0, 1}};
  const Verdict bad = is_subset_morphism(k2q);
  CHECK_FALSE(bad.pass);
  CHECK(bad.witness == std::vector<Elem>{1, 1});
  CHECK(bad.detail.find("escapes") != std::string::npos);
}

TEST_CASE("power-set lift of an inclusion morphism") {
  const HyperTable Q5 = gf5_residue();
  const HyperTable S = signs_table();
  const HyperTable K = krasner_table();

  const PairArrow extq = powerset_extension({Q5, K, {0, 1, 1}});
  CHECK(extq.dom.size() == 7);
  CHECK(extq.cod.size() == 3);
  CHECK(extq.to == std::vector<Elem>{0, 1, 2, 1, 2, 1, 2});
  CHECK(extq.to[pidx({1, 2})] == pidx({1}));

  const PairArrow exts = powerset_extension({S, K, {0, 1, 1}});
  CHECK(exts.to[pidx({0, 2})] == pidx({0, 1}));

  // lifted collapses are order morphisms for the subset orderings
  const SurpassRel rq = subset_relation(extq.dom), rk = subset_relation(extq.cod);
  const Verdict ord = is_preceq_morphism(extq, rq, rk);
  CHECK(ord.pass);
  CHECK(ord.detail == "all five order-morphism conditions hold");
  CHECK(is_weak_morphism(extq).pass);

  // a lift must start from an inclusion morphism that respects products
  CHECK_THROWS_AS(powerset_extension({K, Q5, {0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(powerset_extension({S, S, {0, 2, 1}}), std::invalid_argument);
}

TEST_CASE("order-morphism conditions fail one at a time") {
  const Pair PK = powerset_pair(krasner_table());
  const SurpassRel r = subset_relation(PK);

  // {1} lands on the non-tangible subset {0,1}
  const PairArrow ghost{PK, PK, {0, 2, 2}};
  const Verdict g = is_preceq_morphism(ghost, r, r);
  CHECK_FALSE(g.pass);
  CHECK(g.witness == std::vector<Elem>{1});
  CHECK(g.detail.find("leaves the codomain T") != std::string::npos);

  // iota must be fixed
  const PairArrow moved{PK, PK, {2, 1, 2}};
  const Verdict m = is_preceq_morphism(moved, r, r);
  CHECK_FALSE(m.pass);
  CHECK(m.witness == std::vector<Elem>{0});
  CHECK(m.detail.find("iota") != std::string::npos);

  // {1}+{0,1} is null upstairs, its image {0}+{1} is not
  const PairArrow leak{PK, PK, {1, 0, 1}};
  const Verdict w = is_weak_morphism(leak);
  CHECK_FALSE(w.pass);
  CHECK(w.witness == std::vector<Elem>{1, 2});

  const Pair PS = powerset_pair(signs_table());
  CHECK_THROWS_AS(is_preceq_morphism(ghost, subset_relation(PS), r), std::invalid_argument);
}

TEST_CASE("residue morphisms induced by monoid surjections") {
  const FinMonoid U7 = units_monoid(zmod(7)).monoid;  // units 1..6 at indices 0..5
  const ElemSet G = set_of({0, 1, 3});                // {1,2,4}, the squares

  SUBCASE("identity map on the unit group") {
    const ResidueMorphism r = induced_residue_morphism(U7, U7, {0, 1, 2, 3, 4, 5}, G);
    CHECK(r.dom.table.size() == 2);
    CHECK(r.cod.table.size() == 2);
    CHECK(r.to == std::vector<ElemSet>{bit(0), bit(1)});
    CHECK(r.inclusion.pass);
    CHECK(r.inclusion.detail.find("subgroup normal") != std::string::npos);
  }

  SUBCASE("projection onto a cyclic image collapses the cosets") {
    const ResidueMorphism r = induced_residue_morphism(U7, cyclic(3), {0, 1, 2, 2, 1, 0}, G);
    CHECK(r.dom.table.size() == 2);
    CHECK(r.cod.table.size() == 1);
    CHECK(r.to == std::vector<ElemSet>{bit(0), bit(0)});
    CHECK(r.inclusion.pass);
    CHECK(r.inclusion.detail.find("2 -> 1") != std::string::npos);
  }

  SUBCASE("parity of permutations, non-normal coset space upstairs") {
    const FinMonoid S3 = symmetric_group(3);
    const ResidueMorphism r =
        induced_residue_morphism(S3, cyclic(2), {0, 1, 1, 0, 0, 1}, set_of({0, 1}));
    CHECK(r.dom.table.size() == 3);
    CHECK(r.cod.table.size() == 1);
    CHECK(r.to == std::vector<ElemSet>{bit(0), bit(0), bit(0)});
    CHECK(r.inclusion.pass);
    CHECK(r.inclusion.detail.find("not normal") != std::string::npos);
  }

  SUBCASE("rejects maps that are not surjective homomorphisms") {
    CHECK_THROWS_AS(induced_residue_morphism(U7, cyclic(3), {0, 1, 2, 2, 1, 1}, G),
                    std::invalid_argument);
    const FinMonoid S3 = symmetric_group(3);
    CHECK_THROWS_AS(induced_residue_morphism(S3, cyclic(2), {0, 0, 0, 0, 0, 0}, set_of({0, 1})),
                    std::invalid_argument);
  }
}

TEST_CASE("third isomorphism for field residues") {
  const FinRing F13 = make_finite_field(13, 1);
  const Subgroup G = subgroup_generated(F13, 12);   // {1,12}
  const Subgroup G1 = subgroup_generated(F13, 5);   // {1,5,8,12}

  SUBCASE("nested unit subgroups of GF(13)") {
    const ThirdIso T = third_isomorphism(F13, G, G1);
    CHECK(T.left.table.size() == 4);
    CHECK(T.mid.table.size() == 7);
    CHECK(T.right.table.size() == 4);
    CHECK(T.verdict.pass);
    CHECK(T.match[T.left.table.zero] == T.right.table.zero);
    CHECK(T.match[T.left.table.one] == T.right.table.one);
    CHECK(T.verdict.detail.find("4 classes matched") != std::string::npos);
  }

  SUBCASE("equal subgroups give the residue of a point") {
    const ThirdIso T = third_isomorphism(F13, G1, G1);
    CHECK(T.left.table.size() == 4);
    CHECK(T.right.table.size() == 4);
    CHECK(T.verdict.pass);
  }

  SUBCASE("trivial inner subgroup recovers the one-step residue") {
    const ThirdIso T = third_isomorphism(F13, subgroup_generated(F13, 1), G1);
    CHECK(T.mid.table.size() == 13);
    CHECK(T.left.table.size() == 4);
    CHECK(T.right.table.size() == 4);
    CHECK(T.verdict.pass);
  }

  SUBCASE("containment is required") {
    CHECK_THROWS_AS(third_isomorphism(F13, G1, G), std::invalid_argument);
  }
}

TEST_CASE("third isomorphism for coset hypermonoids") {
  const FinMonoid U7 = units_monoid(zmod(7)).monoid;
  const FinMonoid S3 = symmetric_group(3);

  SUBCASE("trivial inner subgroup") {
    const ThirdIso T = third_isomorphism(U7, set_of({0}), set_of({0, 1, 3}));
    CHECK(T.left.table.size() == 2);
    CHECK(T.mid.table.size() == 6);
    CHECK(T.right.table.size() == 2);
    CHECK(T.verdict.pass);
  }

  SUBCASE("chain through the sign subgroup") {
    const ThirdIso T = third_isomorphism(U7, set_of({0, 5}), full_set(6));
    CHECK(T.left.table.size() == 1);
    CHECK(T.mid.table.size() == 3);
    CHECK(T.right.table.size() == 1);
    CHECK(T.verdict.pass);
  }

  SUBCASE("alternating subgroup of the permutations") {
    const ThirdIso T = third_isomorphism(S3, set_of({0}), set_of({0, 3, 4}));
    CHECK(T.left.table.size() == 2);
    CHECK(T.right.table.size() == 2);
    CHECK(T.verdict.pass);
    CHECK(T.match[T.left.table.one] == T.right.table.one);
  }

  SUBCASE("a non-normal inner subgroup leaves a multivalued middle stage") {
    CHECK_THROWS_WITH_AS(third_isomorphism(S3, set_of({0, 1}), full_set(6)),
                         doctest::Contains("multivalued"), std::invalid_argument);
    CHECK_THROWS_AS(third_isomorphism(U7, set_of({0, 1, 3}), set_of({0})),
                    std::invalid_argument);
  }
}

TEST_CASE("isomorphism search over small tables") {
  const HyperTable K = krasner_table();
  const HyperTable S = signs_table();
  const HyperTable Q5 = gf5_residue();
  const FinRing f3 = make_finite_field(3, 1);
  const HyperTable Q3 = krasner_quotient(f3, subgroup_generated(f3, 2)).table;

  SUBCASE("the residue of GF(3) by its units is the two-element hyperfield") {
    const IsoResult r = iso_search(Q3, K);
    CHECK(r.found);
    CHECK(r.map == std::vector<Elem>{0, 1});
    CHECK(r.nodes_explored == 2);

    const IsoResult back = iso_search(K, Q3);
    CHECK(back.found);
    for (Elem i = 0; i < 2; ++i) CHECK(back.map[r.map[i]] == i);
  }

  SUBCASE("the sign carrier is not a residue of GF(5)") {
    const IsoResult r = iso_search(S, Q5);
    CHECK_FALSE(r.found);
    CHECK(r.detail == "search exhausted; no structure bijection exists");
    const IsoResult r2 = iso_search(Q5, S);
    CHECK_FALSE(r2.found);
  }

  SUBCASE("a table is isomorphic to itself by the least bijection") {
    const IsoResult r = iso_search(S, S);
    CHECK(r.found);
    CHECK(r.map == std::vector<Elem>{0, 1, 2});
    const IsoResult rq = iso_search(Q5, Q5);
    CHECK(rq.found);
    CHECK(rq.map == std::vector<Elem>{0, 1, 2});
  }

  SUBCASE("shape mismatches end the search before it starts") {
    const IsoResult r = iso_search(K, S);
    CHECK_FALSE(r.found);
    CHECK(r.detail == "carrier sizes differ");
    CHECK(r.nodes_explored == 0);

    const HyperTable bare = make_hypertable({"0", "1"}, {bit(0), bit(1), bit(1), bit(0) | bit(1)});
    const IsoResult r2 = iso_search(bare, K);
    CHECK_FALSE(r2.found);
    CHECK(r2.detail.find("shapes differ") != std::string::npos);
  }

  SUBCASE("large carriers are rejected") {
    const FinRing f11 = make_finite_field(11, 1);
    const HyperTable big = krasner_quotient(f11, subgroup_generated(f11, 1)).table;
    CHECK(big.size() == 11);
    CHECK_THROWS_AS(iso_search(big, big), std::invalid_argument);
  }
}

TEST_CASE("power-set lifting is functorial") {
  const HyperTable S = signs_table();
  const HyperTable K = krasner_table();
  const HyperTable Q5 = gf5_residue();

  const std::vector<TableArrow> fixtures = {
      table_identity(S), {S, K, {0, 1, 1}}, table_identity(K), {Q5, K, {0, 1, 1}},
      table_identity(Q5)};
  const Verdict v = functor_laws_powerset(fixtures);
  CHECK(v.pass);
  CHECK(v.detail == "32 functor-law instances verified over 5 fixtures");

  const Verdict bad = functor_laws_powerset({{K, Q5, {0, 1}}});
  CHECK_FALSE(bad.pass);
  CHECK(bad.detail.find("not an inclusion") != std::string::npos);
}

TEST_CASE("input validation") {
  const HyperTable S = signs_table();
  const HyperTable K = krasner_table();

  CHECK_THROWS_AS(is_subset_morphism({S, K, {0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(is_subset_morphism({S, K, {0, 1, 5}}), std::invalid_argument);

  const HyperTable bare = make_hypertable({"a"}, {bit(0)});
  CHECK_THROWS_AS(is_weak_morphism(table_identity(bare)), std::invalid_argument);

  const FinMonoid U7 = units_monoid(zmod(7)).monoid;
  CHECK_THROWS_AS(induced_residue_morphism(U7, U7, {0, 1, 2, 3, 4}, set_of({0})),
                  std::invalid_argument);
  CHECK_THROWS_AS(induced_residue_morphism(U7, U7, {0, 1, 2, 3, 4, 9}, set_of({0})),
                  std::invalid_argument);
}
