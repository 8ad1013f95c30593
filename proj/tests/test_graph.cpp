#include "doctest.h"

#include "haar/error.hpp"
#include "haar/graph.hpp"

using namespace haar;

namespace {

ElementSet mask_set(int n, unsigned mask)
{
  ElementSet s(static_cast<std::size_t>(n));
  for (int g = 0; g < n; ++g)
    if ((mask >> g) & 1U)
      s.set(static_cast<std::size_t>(g));
  return s;
}

}  // namespace

TEST_CASE("Cayley digraphs")
{
  auto C3 = cyclic_group(3);
  auto tri = cayley_digraph(C3, C3.set_of({1}));
  CHECK_FALSE(tri.undirected());
  CHECK(tri.arc_count() == 3);
  CHECK(tri.has_arc(0, 1));
  auto C4 = cyclic_group(4);
  auto sq = cayley_digraph(C4, C4.set_of({1, 3}));
  CHECK(sq.undirected());
  CHECK(sq.arc_count() == 8);
  CHECK(cayley_digraph(make_group("C2^2"), make_group("C2^2").empty_set()).arc_count() == 0);
}

TEST_CASE("Haar graphs")
{
  auto C2 = cyclic_group(2);
  auto h = haar_graph(C2, C2.set_of({1}));
  CHECK(h.has_arc(0, 3));
  CHECK(h.has_arc(1, 2));
  CHECK(h.arc_count() == 4);
  auto C3 = cyclic_group(3);
  auto m = haar_graph(C3, C3.set_of({0}));
  for (int g = 0; g < 3; ++g)
    CHECK(m.has_arc(g, 3 + g));
  auto C4 = cyclic_group(4);
  CHECK(haar_graph(C4, C4.full_set()).arc_count() == 32);
}

TEST_CASE("m-Cayley digraphs")
{
  auto C3 = cyclic_group(3);
  SetMatrix sm(2, 3);
  sm.entry(0, 1) = C3.set_of({1});
  sm.entry(1, 0) = C3.inverse_of(sm.entry(0, 1));
  CHECK(m_cayley_digraph(C3, sm) == haar_graph(C3, C3.set_of({1})));
  SetMatrix one(1, std::vector<ElementSet>{C3.set_of({1})});
  CHECK(m_cayley_digraph(C3, one) == cayley_digraph(C3, C3.set_of({1})));
  auto C2 = cyclic_group(2);
  SetMatrix full(2, std::vector<ElementSet>(4, C2.full_set()));
  auto k = m_cayley_digraph(C2, full);
  CHECK(k.arc_count() == 16);
  CHECK(k.undirected());
}

TEST_CASE("standard double cover equals the Haar graph")
{
  for (const char * spec : {"C1", "C2", "C3", "C4", "C2^2", "C5", "C6", "S3"}) {
    auto G = make_group(spec);
    for (unsigned mask = 0; mask < (1U << G.order()); ++mask) {
      auto S = mask_set(G.order(), mask);
      CHECK(standard_double_cover(cayley_digraph(G, S)) == haar_graph(G, S));
    }
  }
  CHECK(standard_double_cover(ColoredDigraph(3, false)).arc_count() == 0);
  auto C3 = cyclic_group(3);
  // One edge per arc: the directed triangle lifts to 3K2, the undirected one to a 6-cycle.
  CHECK(standard_double_cover(cayley_digraph(C3, C3.set_of({1}))).arc_count() == 6);
  auto hex = standard_double_cover(cayley_digraph(C3, C3.set_of({1, 2})));
  CHECK(hex.arc_count() == 12);
  for (int u = 0; u < 6; ++u)
    CHECK(hex.out_row(u).count() == 2);
}

TEST_CASE("odd quotients")
{
  auto C4 = cyclic_group(4);
  auto C = C4.set_of({0, 2});
  auto q = odd_quotient(haar_graph(C4, C4.set_of({0, 1})), haar_coset_partition(C4, C));
  auto C2 = cyclic_group(2);
  CHECK(q == haar_graph(C2, C2.full_set()));
  CHECK(odd_quotient(haar_graph(C4, C4.full_set()), haar_coset_partition(C4, C)).arc_count() == 0);

  auto g = cayley_digraph(C4, C4.set_of({1}));
  std::vector<std::vector<int>> singles{{0}, {1}, {2}, {3}};
  CHECK(odd_quotient(g, BlockPartition(4, singles)) == g);

  std::vector<std::vector<int>> bad{{0, 1}, {2, 3}};
  ColoredDigraph path(4, true);
  path.add_edge(0, 2);
  CHECK_THROWS_AS(odd_quotient(path, BlockPartition(4, bad)), PreconditionError);
}

TEST_CASE("R(G) and iota")
{
  auto C2 = cyclic_group(2);
  auto r = right_regular_action(C2, 2);
  REQUIRE(r.size() == 1);
  CHECK(r[0] == Permutation::from_cycles(4, "(0 1)(2 3)"));
  CHECK(iota_permutation(C2) == Permutation::from_cycles(4, "(0 2)(1 3)"));
  CHECK_THROWS_AS(iota_permutation(make_group("S3")), PreconditionError);
  auto Q8 = quaternion_group();
  auto rq = PermGroup::from_generators(right_regular_action(Q8, 2), 16);
  CHECK(rq.order() == 8);
  CHECK(rq.orbits().size() == 2);

  for (const char * spec : {"C3", "C4", "C2^2", "C6"}) {
    auto G = make_group(spec);
    auto iota = iota_permutation(G);
    auto R = PermGroup::from_generators(right_regular_action(G, 2), 2 * G.order());
    for (unsigned mask = 0; mask < (1U << G.order()); ++mask) {
      auto h = haar_graph(G, mask_set(G.order(), mask));
      CHECK(is_automorphism(h, iota));
      for (const auto & x : R.generators())
        CHECK(is_automorphism(h, x));
    }
    for (const auto & x : R.generators())
      CHECK(R.contains(iota * x * iota.inverse()));
  }
}

TEST_CASE("emission")
{
  auto C3 = cyclic_group(3);
  auto e = to_edge_list(haar_graph(C3, C3.set_of({0})));
  CHECK(e == "# vertices 6 edges 3 undirected\n0 3\n1 4\n2 5\n");
  auto d = to_dot(cayley_digraph(C3, C3.set_of({1})));
  CHECK(d.find("digraph") == 0);
  CHECK(d.find("0 -> 1;") != std::string::npos);
}
