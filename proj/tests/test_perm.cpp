#include "doctest.h"

#include "haar/error.hpp"
#include "haar/graph.hpp"
#include "haar/perm.hpp"

#include <algorithm>
#include <random>
#include <set>

using namespace haar;

namespace {

std::size_t closure_size(const std::vector<Permutation> & gens, int d)
{
  std::set<Permutation> seen{Permutation::identity(d)};
  std::vector<Permutation> queue{Permutation::identity(d)};
  for (std::size_t k = 0; k < queue.size(); ++k)
    for (const auto & g : gens) {
      auto p = queue[k] * g;
      if (seen.insert(p).second)
        queue.push_back(p);
    }
  return seen.size();
}

}  // namespace

TEST_CASE("permutation basics")
{
  auto p = Permutation::from_cycles(4, "(0 1)(2 3)");
  CHECK(p(0) == 1);
  CHECK(p.to_cycles() == "(0 1)(2 3)");
  CHECK(Permutation::identity(3).to_cycles() == "()");
  CHECK((p * p).is_identity());
  auto a = Permutation::from_cycles(3, "(0 1)");
  auto b = Permutation::from_cycles(3, "(1 2)");
  CHECK((a * b)(0) == 2);  // a first, then b
  CHECK(a.inverse() == a);
  CHECK_THROWS(Permutation(std::vector<int>{0, 0}));
  CHECK(orbit_count_of_cycle(Permutation::identity(4)) == 4);
  CHECK(orbit_count_of_cycle(p) == 2);
  CHECK(orbit_count_of_cycle(Permutation::from_cycles(4, "(1 3)")) == 3);
}

TEST_CASE("group orders")
{
  CHECK(PermGroup::from_generators({Permutation::from_cycles(3, "(0 1 2)")}, 3).order() == 3);
  CHECK(PermGroup::from_generators({Permutation::from_cycles(4, "(0 1)"), Permutation::from_cycles(4, "(0 1 2 3)")}, 4).order() == 24);
  CHECK(PermGroup::from_generators({}, 5).order() == 1);
  CHECK_THROWS_AS(PermGroup::from_generators({Permutation::identity(3)}, 4), PreconditionError);

  std::vector<Permutation> big{Permutation::from_cycles(20, "(0 1)"), Permutation::from_cycles(20, "(0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 18 19)")};
  CHECK(PermGroup::from_generators(big, 20).order() == BigNat("2432902008176640000"));
}

TEST_CASE("orbits and semiregularity")
{
  auto g = PermGroup::from_generators({Permutation::from_cycles(4, "(0 1)(2 3)")}, 4);
  CHECK(g.orbits() == std::vector<std::vector<int>>{{0, 1}, {2, 3}});
  CHECK(g.is_semiregular());
  CHECK(PermGroup::from_generators({}, 3).orbits().size() == 3);
  CHECK_FALSE(PermGroup::from_generators({Permutation::from_cycles(3, "(0 1)")}, 3).is_semiregular());
  auto s3 = PermGroup::from_generators({Permutation::from_cycles(3, "(0 1)"), Permutation::from_cycles(3, "(0 1 2)")}, 3);
  CHECK_FALSE(s3.is_semiregular());
  auto C3 = cyclic_group(3);
  auto r = PermGroup::from_generators(right_regular_action(C3, 2), 6);
  CHECK(r.orbits().size() == 2);
  CHECK(PermGroup::from_generators(right_regular_action(cyclic_group(4), 2), 8).is_semiregular());
}

TEST_CASE("Schreier-Sims agrees with brute-force closure")
{
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 200; ++trial) {
    int d = 1 + static_cast<int>(rng() % 7);
    int k = static_cast<int>(rng() % 4);
    std::vector<Permutation> gens;
    for (int i = 0; i < k; ++i) {
      std::vector<int> img(static_cast<std::size_t>(d));
      for (int x = 0; x < d; ++x)
        img[static_cast<std::size_t>(x)] = x;
      std::shuffle(img.begin(), img.end(), rng);
      gens.emplace_back(img);
    }
    auto G = PermGroup::from_generators(gens, d);
    CHECK(G.order() == closure_size(gens, d));
    for (const auto & g : gens)
      CHECK(G.contains(g));
    CHECK(G.contains(Permutation::identity(d)));
    CHECK(G.elements().size() == closure_size(gens, d));
    std::size_t total = 0;
    for (const auto & o : G.orbits())
      total += o.size();
    CHECK(total == static_cast<std::size_t>(d));
    auto again = PermGroup::from_generators(gens, d);
    CHECK(again.base() == G.base());
    CHECK(again.strong_generators() == G.strong_generators());
  }
}
