#include "doctest.h"

#include "haar/error.hpp"
#include "haar/graph.hpp"
#include "haar/oracles.hpp"

using namespace haar;

TEST_CASE("inverse-closed subset counts")
{
  auto C6 = cyclic_group(6);
  auto r = check_inverse_closed_count(C6, C6.full_set());
  CHECK(r.pass);
  CHECK(r.counts["brute_force"] == 16);
  CHECK(check_inverse_closed_count(C6, C6.empty_set()).counts["brute_force"] == 1);
  auto E = make_group("C2^3");
  CHECK(check_inverse_closed_count(E, E.full_set()).counts["brute_force"] == 256);
  CHECK_THROWS_AS(check_inverse_closed_count(C6, C6.set_of({1})), PreconditionError);
  OracleLimits tiny;
  tiny.max_set_size = 3;
  CHECK_THROWS_AS(check_inverse_closed_count(C6, C6.full_set(), tiny), CapExceeded);
}

TEST_CASE("parity and binomial checks")
{
  CHECK(check_parity_counts(3).counts["odd"] == 4);
  CHECK(check_parity_counts(1).counts["even"] == 1);
  CHECK(check_parity_counts(10).counts["odd"] == 512);
  CHECK_THROWS_AS(check_parity_counts(0), PreconditionError);
  CHECK(check_binomial_bound(4).counts["max_binomial"] == "6");
  CHECK(check_binomial_bound(1).pass);
  auto r = check_binomial_bound(30);
  CHECK(r.pass);
  CHECK(r.counts["max_binomial"] == "155117520");
}

TEST_CASE("double coset bound")
{
  auto S3 = make_group("S3");
  auto H = S3.set_of({0, *S3.find_label("(1 2)")});
  auto K = S3.set_of({0, *S3.find_label("(1 3)")});
  auto r = check_double_coset_bound(S3, H, K);
  CHECK(r.pass);
  CHECK(r.counts["double_cosets"] == 2);
  auto C4 = cyclic_group(4);
  auto n = check_double_coset_bound(C4, C4.set_of({0, 2}), C4.set_of({0, 2}));
  CHECK(n.pass);
  CHECK(n.counts["normal_branch"] == true);
  auto q = check_double_coset_bound_all(quaternion_group());
  CHECK(q.pass);
  CHECK(q.counts["pairs"] == 36);
}

TEST_CASE("bipartite graphs invariant under a two-orbit group")
{
  auto M = PermGroup::from_generators({Permutation::from_cycles(6, "(0 1 2)(3 4 5)")}, 6);
  auto r = check_bipartite_double_coset(M);
  CHECK(r.pass);
  CHECK(r.counts["kappa"] == 3);
  CHECK(r.counts["bipartite_graphs"] == 8);
  auto trivial = check_bipartite_double_coset(PermGroup::from_generators({}, 2));
  CHECK(trivial.counts["kappa"] == 1);
  CHECK(trivial.counts["bipartite_graphs"] == 2);
  auto s3 = PermGroup::from_generators({Permutation::from_cycles(6, "(0 1)(3 4)"), Permutation::from_cycles(6, "(0 1 2)(3 4 5)")}, 6);
  auto d = check_bipartite_double_coset(s3);
  CHECK(d.pass);
  CHECK(d.counts["kappa"] == 2);  // diagonal and off-diagonal pairs
  CHECK(d.counts["three_quarter_bound_applies"] == true);
  CHECK_THROWS_AS(check_bipartite_double_coset(PermGroup::from_generators({}, 3)), PreconditionError);
}

TEST_CASE("inversion bounds")
{
  auto s3 = check_inversion_bounds(make_group("S3"));
  CHECK(s3.pass);
  CHECK(s3.counts["max_inverted"] == 4);
  auto e = check_inversion_bounds(make_group("C2^3"));
  CHECK(e.pass);
  CHECK(e.counts["elements_of_order_le_2"] == 8);
  auto d6 = check_coset_involution_bound(make_group("D6"));
  CHECK(d6.pass);
  for (const auto & row : d6.counts["subgroups_checked"])
    CHECK(row["involutions_outside"].get<int>() <= 4);
  CHECK_THROWS_AS(check_coset_involution_bound(make_group("D4")), PreconditionError);
}

TEST_CASE("odd quotient fibers")
{
  auto C4 = cyclic_group(4);
  auto r = check_odd_quotient_fibers(C4, C4.set_of({0, 2}));
  CHECK(r.pass);
  CHECK(r.counts["fiber_size_min"] == 4);
  CHECK(r.counts["fiber_size_max"] == 4);
  auto C2 = cyclic_group(2);
  CHECK(check_odd_quotient_fibers(C2, C2.full_set()).counts["expected_fiber_size"] == 2);
  CHECK_THROWS_AS(check_odd_quotient_fibers(C4, C4.set_of({0})), PreconditionError);
  auto S3 = make_group("S3");
  CHECK_THROWS_AS(check_odd_quotient_fibers(S3, S3.set_of({0, 1})), PreconditionError);
}

TEST_CASE("orbit bounds")
{
  auto c4 = check_orbit_bound(cyclic_group(4), OrbitClass::abelian_exp_gt_2);
  CHECK(c4.pass);
  CHECK(c4.counts["elements_checked"] == 7);
  CHECK(c4.counts["max_orbits"].get<int>() <= 3);
  auto q8 = check_orbit_bound(quaternion_group(), OrbitClass::q8_times_e2);
  CHECK(q8.pass);
  CHECK(q8.counts["order_M"] == "64");
  CHECK(q8.counts["max_orbits"].get<int>() <= 7);
  auto q82 = check_orbit_bound(make_group("Q8xC2"), OrbitClass::q8_times_e2);
  CHECK(q82.pass);
  CHECK(q82.counts["index_M_over_G"] == "8");
  auto dic = check_orbit_bound(make_group("Dic(C6,3)"), OrbitClass::dicyclic_not_q8_e2);
  CHECK(dic.pass);
  CHECK(dic.counts["order_M"] == "24");
  CHECK(dic.counts["max_orbits"].get<int>() <= 9);
  CHECK_THROWS_AS(check_orbit_bound(quaternion_group(), OrbitClass::dicyclic_not_q8_e2), PreconditionError);
  CHECK_THROWS_AS(check_orbit_bound(make_group("C2^2"), OrbitClass::abelian_exp_gt_2), PreconditionError);
}

TEST_CASE("group size bounds")
{
  auto q = check_group_size_bounds(quaternion_group());
  CHECK(q.pass);
  CHECK(q.counts["automorphisms"] == 24);
  CHECK(q.counts["subgroups"] == 6);
  CHECK(check_group_size_bounds(cyclic_group(2)).counts["subgroups"] == 2);
  CHECK(check_group_size_bounds(make_group("S4")).pass);
}

TEST_CASE("runner")
{
  OracleRequest req;
  req.group = "C6";
  auto r = run_oracle("L2.2", req);
  REQUIRE_FALSE(r.empty());
  for (const auto & x : r)
    CHECK(x.pass);
  OracleRequest fib;
  fib.group = "C4";
  fib.core = "0x5";
  auto f = run_oracle("L5.1", fib);
  REQUIRE(f.size() == 1);
  CHECK(f[0].counts["expected_fiber_size"] == 4);
  CHECK_THROWS_AS(run_oracle("L9.9"), ParseError);
  CHECK(to_json(f[0])["result"] == "PASS");
}
