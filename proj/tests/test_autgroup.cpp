#include "doctest.h"

#include "brute.hpp"
#include "haar/autgroup.hpp"
#include "haar/error.hpp"

#include <random>

using namespace haar;

namespace {

ColoredDigraph cycle(int v)
{
  ColoredDigraph g(v, true);
  for (int u = 0; u < v; ++u)
    g.add_edge(u, (u + 1) % v);
  return g;
}

ColoredDigraph random_digraph(std::mt19937_64 & rng, int v)
{
  std::uniform_int_distribution<int> coin(0, 3);
  std::uniform_int_distribution<int> color(0, 2);
  const bool undirected = coin(rng) == 0;
  const bool colored = coin(rng) == 0;
  ColoredDigraph g(v, undirected);
  for (int u = 0; u < v; ++u) {
    if (colored)
      g.set_color(u, color(rng));
    for (int w = undirected ? u : 0; w < v; ++w)
      if (coin(rng) < 2) {
        if (undirected)
          g.add_edge(u, w);
        else
          g.add_arc(u, w);
      }
  }
  return g;
}

}  // namespace

TEST_CASE("small graphs")
{
  CHECK(automorphism_order(cycle(4)) == 8);
  CHECK(automorphism_order(cycle(5)) == 10);
  CHECK(automorphism_order(ColoredDigraph(1, true)) == 1);
  CHECK(automorphism_order(ColoredDigraph(6, true)) == 720);
  CHECK_THROWS_AS(automorphism_order(ColoredDigraph(0, true)), PreconditionError);

  ColoredDigraph petersen(10, true);
  for (int i = 0; i < 5; ++i) {
    petersen.add_edge(i, (i + 1) % 5);
    petersen.add_edge(i, i + 5);
    petersen.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  CHECK(automorphism_order(petersen) == 120);
}

TEST_CASE("edgeless Haar graph has order (2n)!")
{
  auto G = cyclic_group(6);
  CHECK(automorphism_order(haar_graph(G, G.empty_set())) == BigNat(479001600));
}

TEST_CASE("search agrees with brute force on random colored digraphs")
{
  std::mt19937_64 rng(20240611);
  for (int trial = 0; trial < 300; ++trial) {
    int v = 1 + static_cast<int>(rng() % 7);
    auto g = random_digraph(rng, v);
    auto r = search_automorphisms(g);
    CHECK(r.order == brute::aut_order(g));
    for (const auto & p : r.trace.generators)
      CHECK(is_automorphism(g, p));
    CHECK(automorphism_group(g).order() == r.order);
  }
}

TEST_CASE("Haar graphs of groups of order at most 4 agree with brute force")
{
  for (const char * spec : {"C1", "C2", "C3", "C4", "C2^2"}) {
    auto G = make_group(spec);
    const int n = G.order();
    for (unsigned mask = 0; mask < (1U << n); ++mask) {
      ElementSet S(static_cast<std::size_t>(n));
      for (int g = 0; g < n; ++g)
        if ((mask >> g) & 1U)
          S.set(static_cast<std::size_t>(g));
      auto h = haar_graph(G, S);
      CHECK(automorphism_order(h) == brute::aut_order(h));
      auto hc = colored_haar_graph(G, S);
      CHECK(automorphism_order(hc) == brute::aut_order(hc));
    }
  }
}

TEST_CASE("Aut^+ of the Haar graph of C2 with S = {1}")
{
  auto G = cyclic_group(2);
  auto S = G.set_of({1});
  CHECK(automorphism_order(haar_graph(G, S)) == 8);
  CHECK(aut_plus_haar(G, S).order() == 2);
}

TEST_CASE("representation predicates")
{
  auto C3 = cyclic_group(3);
  CHECK(is_drr(C3, C3.set_of({1})));
  CHECK_FALSE(is_drr(C3, C3.set_of({1, 2})));
  CHECK_THROWS_AS(is_grr(C3, C3.set_of({1})), PreconditionError);
  CHECK_FALSE(is_hgr(C3, C3.set_of({0, 1})));
  CHECK_THROWS_AS(is_haar_optimal_abelian(make_group("S3"), make_group("S3").set_of({1})), PreconditionError);

  auto C2 = cyclic_group(2);
  SetMatrix sm(2, 2);
  sm.entry(0, 1) = C2.set_of({0});
  sm.entry(1, 0) = C2.set_of({0});
  CHECK_FALSE(is_msr(C2, sm, MsrKind::skew));
  sm.entry(0, 0) = C2.set_of({1});
  CHECK_THROWS_AS(is_msr(C2, sm, MsrKind::skew), PreconditionError);
}
