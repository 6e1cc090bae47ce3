#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hyperforge/hyperstruct.hpp"

using namespace hyperforge;

namespace {

// carrier {0, Q, N} matching GF(5) cosets of {1,4}: Q={1,4}, N={2,3};
// sums enumerated by hand over the base field
HyperTable gf5_quotient_table() {
  ElemSet zq = bit(0) | bit(1), zn = bit(0) | bit(2), qn = bit(1) | bit(2);
  std::vector<ElemSet> hsum = {
      bit(0), bit(1), bit(2),
      bit(1), zn,     qn,
      bit(2), qn,     zq};
  std::vector<Elem> mul = {0, 0, 0, 0, 1, 2, 0, 2, 1};
  return make_hypertable({"0", "Q", "N"}, std::move(hsum), std::move(mul), 0, 1);
}

// GF(2) viewed as a hypertable: 1+1 = {0}, a singleton
HyperTable gf2_table() {
  std::vector<ElemSet> hsum = {bit(0), bit(1), bit(1), bit(0)};
  return make_hypertable({"0", "1"}, std::move(hsum), {0, 0, 0, 1}, 0, 1);
}

// 1+1 = {1}: no x with 0 in 1+x, so hypernegatives fail
HyperTable no_negative_table() {
  std::vector<ElemSet> hsum = {bit(0), bit(1), bit(1), bit(1)};
  return make_hypertable({"0", "1"}, std::move(hsum), {}, 0, -1);
}

}  // namespace

TEST_CASE("construction rejects malformed tables") {
  CHECK_THROWS_AS(make_hypertable({"0", "1"}, {bit(0), bit(1), bit(1), 0}),
                  std::invalid_argument);  // empty entry
  CHECK_THROWS_AS(make_hypertable({"0", "1"}, {bit(0), bit(1), bit(1), bit(2)}),
                  std::invalid_argument);  // out of range
  CHECK_THROWS_AS(make_hypertable({"0", "1"}, {bit(1), bit(1), bit(1), bit(0)}, {}, 0),
                  std::invalid_argument);  // zero not hyperneutral
  CHECK_THROWS_AS(make_hypertable({"0", "1"}, {bit(0), bit(1), bit(1)}), std::invalid_argument);
}

TEST_CASE("two-element hyperfield with 1+1={0,1}") {
  auto K = krasner_table();
  CHECK(hsum_sets(K, bit(1), bit(1)) == (bit(0) | bit(1)));
  CHECK(hsum_sets(K, bit(0), bit(0) | bit(1)) == (bit(0) | bit(1)));
  auto rep = check_hyperfield(K);
  CHECK(rep.all_pass());
  CHECK(hypernegative(K, 1) == 1);
  CHECK(weak_neutral_elements(K) == bit(0));
}

TEST_CASE("sign hyperfield") {
  auto S = signs_table();
  auto rep = check_hyperfield(S);
  CHECK(rep.all_pass());
  CHECK(rep.find("commutativity")->pass);
  CHECK(hypernegative(S, 1) == 2);
  CHECK(hypernegative(S, 2) == 1);
  // {1,-1} + {1} unions the 1+1 and -1+1 entries
  CHECK(hsum_sets(S, bit(1) | bit(2), bit(1)) == full_set(3));
  CHECK(weak_neutral_elements(S) == bit(0));
}

TEST_CASE("three-coset quotient table is a hyperfield") {
  auto Q = gf5_quotient_table();
  CHECK(check_hyperfield(Q).all_pass());
  CHECK(weak_neutral_elements(Q) == bit(0));
  CHECK(hypernegative(Q, 1) == 1);  // -Q = Q since -1 lands in {1,4}
}

TEST_CASE("GF(2) read as a hypertable is a hyperfield distinct from the 2-element one") {
  auto G = gf2_table();
  CHECK(check_hyperfield(G).all_pass());
  CHECK(G.hs(1, 1) == bit(0));
  CHECK(krasner_table().hs(1, 1) == (bit(0) | bit(1)));
}

TEST_CASE("missing hypernegative is caught with a replayable witness") {
  auto H = no_negative_table();
  auto rep = check_hypergroup(H);
  CHECK_FALSE(rep.all_pass());
  auto* ck = rep.find("hypernegative-existence");
  REQUIRE(ck != nullptr);
  CHECK_FALSE(ck->pass);
  REQUIRE(ck->witness == std::vector<Elem>{1});
  // replay: no b puts 0 into 1+b and b+1
  for (Elem b = 0; b < H.size(); ++b) {
    bool both = contains(H.hs(1, b), 0) && contains(H.hs(b, 1), 0);
    CHECK_FALSE(both);
  }
  CHECK_FALSE(rep.find("reversibility")->pass);
}

TEST_CASE("hsum_sets rejects empty input and mul_sets needs a table") {
  auto K = krasner_table();
  CHECK_THROWS_AS(hsum_sets(K, 0, bit(1)), std::invalid_argument);
  CHECK_THROWS_AS(mul_sets(no_negative_table(), bit(1), bit(1)), std::invalid_argument);
}

TEST_CASE("hsum_sets is monotone under set inclusion") {
  for (auto H : {krasner_table(), signs_table(), gf5_quotient_table()}) {
    const ElemSet top = full_set(H.size());
    for (ElemSet big1 = 1; big1 <= top; ++big1)
      for (ElemSet s1 = big1; s1 != 0; s1 = (s1 - 1) & big1)  // submask walk
        for (ElemSet big2 = 1; big2 <= top; ++big2)
          for (ElemSet s2 = big2; s2 != 0; s2 = (s2 - 1) & big2) {
            ElemSet sub = hsum_sets(H, s1, s2);
            CHECK((sub & ~hsum_sets(H, big1, big2)) == 0);
          }
  }
}

TEST_CASE("hsum_sets is associative on nonempty subsets of a hypergroup") {
  for (auto H : {signs_table(), gf5_quotient_table()}) {
    REQUIRE(check_hypergroup(H).all_pass());
    const ElemSet top = full_set(H.size());
    for (ElemSet a = 1; a <= top; ++a)
      for (ElemSet b = 1; b <= top; ++b)
        for (ElemSet c = 1; c <= top; ++c)
          CHECK(hsum_sets(H, hsum_sets(H, a, b), c) == hsum_sets(H, a, hsum_sets(H, b, c)));
  }
}

TEST_CASE("reversibility also holds in the mirrored form for commutative tables") {
  for (auto H : {krasner_table(), signs_table(), gf5_quotient_table()}) {
    for (Elem a1 = 0; a1 < H.size(); ++a1) {
      Elem m2 = *hypernegative(H, a1);
      for (Elem a2 = 0; a2 < H.size(); ++a2)
        for (Elem a3 = 0; a3 < H.size(); ++a3)
          CHECK(contains(H.hs(a2, a1), a3) == contains(H.hs(a3, m2), a2));
    }
  }
}

TEST_CASE("power-set weak distributivity holds with equality on the 2-element hyperfield") {
  auto rep = check_powerset_weak_distributivity(krasner_table());
  CHECK(rep.all_pass());
  auto* strict = rep.find("strict-inclusion-observed");
  REQUIRE(strict != nullptr);
  CHECK(strict->tuples_checked == 0);  // equality in every subset triple
}

TEST_CASE("power-set weak distributivity holds on signs and the coset table") {
  CHECK(check_powerset_weak_distributivity(signs_table()).all_pass());
  CHECK(check_powerset_weak_distributivity(gf5_quotient_table()).all_pass());
}
