#include "doctest.h"

#include "haar/error.hpp"
#include "haar/group.hpp"

#include <cmath>

using namespace haar;

namespace {

int involutions(const GroupTable & G)
{
  int c = 0;
  for (Elem x = 1; x < G.order(); ++x)
    c += G.mul(x, x) == GroupTable::id;
  return c;
}

}  // namespace

TEST_CASE("make_group")
{
  auto C4 = make_group("C4");
  CHECK(C4.order() == 4);
  CHECK(C4.inv(1) == 3);
  auto Q8 = make_group("Q8");
  CHECK(Q8.order() == 8);
  CHECK(involutions(Q8) == 1);
  auto E = make_group("C2^3");
  CHECK(E.order() == 8);
  CHECK(involutions(E) == 7);
  CHECK(make_group("D4").order() == 8);
  CHECK(make_group("S4").order() == 24);
  CHECK(make_group("A5").order() == 60);
  CHECK(make_group("C3xC3").order() == 9);
  CHECK(make_group("Dic(C4xC2,4)").order() == 16);
  CHECK_THROWS_AS(make_group("C 4"), ParseError);
  CHECK_THROWS_AS(make_group("X4"), ParseError);
  CHECK_THROWS_AS(make_group("S8"), ParseError);
  CHECK_THROWS_AS(make_group("C4097"), CapExceeded);
}

TEST_CASE("generalized dicyclic")
{
  auto C4 = cyclic_group(4);
  auto Q = generalized_dicyclic(C4, 2);
  CHECK(Q.order() == 8);
  CHECK(involutions(Q) == 1);
  CHECK(Q.mul(4, 4) == 2);
  for (Elem a = 0; a < 4; ++a)
    CHECK(Q.conj(a, 4) == Q.inv(a));
  CHECK(involutions(generalized_dicyclic(cyclic_group(6), 3)) == 1);
  CHECK_THROWS_AS(generalized_dicyclic(C4, 1), PreconditionError);
  CHECK_THROWS_AS(generalized_dicyclic(make_group("C2^2"), 1), PreconditionError);
}

TEST_CASE("c_value")
{
  CHECK(c_value(cyclic_group(4), cyclic_group(4).full_set()) == 3);
  auto E = make_group("C2^3");
  CHECK(c_value(E, E.full_set()) == 8);
  CHECK(c_value(quaternion_group(), quaternion_group().empty_set()) == 0);
  CHECK_THROWS_AS(c_value(cyclic_group(4), cyclic_group(4).set_of({1})), PreconditionError);
}

TEST_CASE("double cosets")
{
  auto S3 = make_group("S3");
  auto t12 = *S3.find_label("(1 2)");
  auto t13 = *S3.find_label("(1 3)");
  auto H = S3.set_of({0, t12});
  auto K = S3.set_of({0, t13});
  auto dc = double_cosets(S3, H, K);
  REQUIRE(dc.size() == 2);
  std::vector<std::size_t> sizes{dc[0].count(), dc[1].count()};
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<std::size_t>{2, 4});
  auto C4 = cyclic_group(4);
  CHECK(double_cosets(C4, C4.set_of({0}), C4.set_of({0})).size() == 4);
  CHECK(double_cosets(S3, S3.full_set(), S3.full_set()).size() == 1);
  CHECK_THROWS_AS(double_cosets(C4, C4.set_of({1}), C4.full_set()), PreconditionError);
}

TEST_CASE("subgroups and automorphisms")
{
  CHECK(enumerate_subgroups(cyclic_group(4)).size() == 3);
  CHECK(enumerate_subgroups(quaternion_group()).size() == 6);
  CHECK(enumerate_subgroups(cyclic_group(2)).size() == 2);
  CHECK(enumerate_subgroups(make_group("S4")).size() == 30);
  CHECK_THROWS_AS(enumerate_subgroups(cyclic_group(65)), CapExceeded);

  CHECK(automorphisms_of_group(cyclic_group(4)).size() == 2);
  CHECK(automorphisms_of_group(make_group("S3")).size() == 6);
  CHECK(automorphisms_of_group(cyclic_group(2)).size() == 1);
  CHECK(automorphisms_of_group(quaternion_group()).size() == 24);
  CHECK(automorphisms_of_group(make_group("C2^3")).size() == 168);
  CHECK_THROWS_AS(automorphisms_of_group(cyclic_group(25)), CapExceeded);
  for (const auto & a : automorphisms_of_group(make_group("D4")))
    CHECK(is_group_automorphism(make_group("D4"), a));
}

TEST_CASE("classification")
{
  auto q = classify_group(quaternion_group());
  CHECK(q.is_generalized_dicyclic);
  CHECK(q.is_q8_times_e2);
  REQUIRE(q.q8);
  CHECK(q.q8->ell == 0);
  auto d = classify_group(make_group("Dic(C6,3)"));
  CHECK(d.is_generalized_dicyclic);
  CHECK_FALSE(d.is_q8_times_e2);
  auto e = classify_group(make_group("C2^3"));
  CHECK(e.is_elementary_abelian_2);
  CHECK_FALSE(e.is_abelian_exp_gt_2);
  auto c4 = classify_group(cyclic_group(4));
  CHECK(c4.is_abelian_exp_gt_2);
  CHECK(c4.exponent == 4);
  CHECK_FALSE(classify_group(make_group("D4")).is_generalized_dicyclic);
  CHECK_FALSE(classify_group(make_group("S3")).is_generalized_dicyclic);
  auto q2 = classify_group(make_group("Q8xC2"));
  CHECK(q2.is_q8_times_e2);
  CHECK(q2.q8->ell == 1);
  CHECK(classify_group(make_group("Dic(C4xC2,4)")).is_q8_times_e2);
  CHECK_FALSE(classify_group(make_group("Dic(C8,4)")).is_q8_times_e2);
}

TEST_CASE("catalog bounds on subgroup and automorphism counts")
{
  for (const char * spec : {"C2", "C6", "C2^3", "Q8", "D4", "S3", "A4", "S4", "C3xC3", "Dic(C6,3)", "Q8xC2", "D6"}) {
    auto G = make_group(spec);
    const double L = std::log2(static_cast<double>(G.order()));
    CHECK(static_cast<double>(enumerate_subgroups(G).size()) < std::exp2(L * L / 4 + 3));
    if (G.order() <= 24)
      CHECK(static_cast<double>(automorphisms_of_group(G).size()) <= std::exp2(L * L));
  }
}
