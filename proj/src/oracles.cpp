#include "haar/oracles.hpp"

#include "haar/error.hpp"
#include "haar/graph.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <numeric>

namespace haar {

namespace {

using json = nlohmann::ordered_json;

void require_cap(bool ok, const std::string & what)
{
  if (!ok)
    throw CapExceeded(what + " exceeds the oracle cap (raise caps to override)");
}

OracleResult start(const std::string & id, json parameters)
{
  OracleResult r;
  r.lemma_id = id;
  r.parameters = std::move(parameters);
  r.pass = true;
  return r;
}

void fail(OracleResult & r, json counterexample)
{
  if (r.pass) {
    r.pass = false;
    r.counterexample = std::move(counterexample);
  }
}

json set_json(const GroupTable & G, const ElementSet & s)
{
  json labels = json::array();
  s.for_each([&](std::size_t x) { labels.push_back(G.label(static_cast<Elem>(x))); });
  return {{"mask", s.to_hex()}, {"elements", labels}};
}

std::string graph_key(const ColoredDigraph & g)
{
  std::string key;
  for (const auto & row : g.rows()) {
    key += row.to_hex();
    key += '|';
  }
  return key;
}

int involution_count(const GroupTable & G, const ElementSet & within)
{
  int c = 0;
  within.for_each([&](std::size_t x) { c += G.mul(static_cast<Elem>(x), static_cast<Elem>(x)) == GroupTable::id; });
  return c;
}

/// Permutation of G's element indices given by an image function.
template <class F>
Permutation element_map(const GroupTable & G, F && f)
{
  std::vector<int> img(static_cast<std::size_t>(G.order()));
  for (Elem g = 0; g < G.order(); ++g)
    img[static_cast<std::size_t>(g)] = f(g);
  return Permutation(std::move(img));
}

}  // namespace

json to_json(const OracleResult & r)
{
  json j;
  j["lemma"] = r.lemma_id;
  j["parameters"] = r.parameters;
  j["result"] = r.pass ? "PASS" : "FAIL";
  j["pass"] = r.pass;
  j["counts"] = r.counts;
  j["counterexample"] = r.counterexample;
  if (!r.note.empty())
    j["note"] = r.note;
  return j;
}

OracleLimits OracleLimits::raised()
{
  OracleLimits l;
  l.max_set_size = 26;
  l.max_parity_k = 26;
  l.max_binomial_k = 1000;
  l.max_group_order = 24;  // automorphism enumeration has its own hard cap
  l.max_bipartite_side = 6;
  l.max_fiber_order = 20;
  l.max_orbit_order = 128;
  return l;
}

// --- inverse-closed subset count

OracleResult check_inverse_closed_count(const GroupTable & G, const ElementSet & S, const OracleLimits & limits)
{
  if (!G.is_inverse_closed(S))
    throw PreconditionError("S must be inverse-closed");
  const auto elems = S.indices();
  require_cap(static_cast<int>(elems.size()) <= limits.max_set_size, "|S| = " + std::to_string(elems.size()));
  OracleResult r = start("L2.2", {{"group", G.name()}, {"S", set_json(G, S)}});

  const std::size_t k = elems.size();
  std::vector<std::size_t> inv_pos(k);
  for (std::size_t p = 0; p < k; ++p)
    inv_pos[p] = static_cast<std::size_t>(std::find(elems.begin(), elems.end(), G.inv(elems[p])) - elems.begin());
  std::uint64_t closed = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    bool ok = true;
    for (std::size_t p = 0; p < k && ok; ++p)
      if (((mask >> p) & 1U) && !((mask >> inv_pos[p]) & 1U))
        ok = false;
    closed += ok;
  }
  const int c = c_value(G, S);
  const std::uint64_t predicted = std::uint64_t{1} << c;
  r.counts = {{"brute_force", closed}, {"c", c}, {"two_to_c", predicted}};
  if (closed != predicted)
    fail(r, {{"S", set_json(G, S)}, {"brute_force", closed}, {"two_to_c", predicted}});
  return r;
}

// --- parity counts and binomial bound

OracleResult check_parity_counts(int k, const OracleLimits & limits)
{
  if (k < 1)
    throw PreconditionError("parity check needs a non-empty set (k >= 1)");
  require_cap(k <= limits.max_parity_k, "k = " + std::to_string(k));
  OracleResult r = start("L2.5", {{"k", k}});
  std::uint64_t odd = 0;
  std::uint64_t even = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask)
    (std::popcount(mask) % 2 ? odd : even) += 1;
  r.counts = {{"odd", odd}, {"even", even}, {"half", std::uint64_t{1} << (k - 1)}};
  if (odd != even || odd != (std::uint64_t{1} << (k - 1)))
    fail(r, {{"k", k}, {"odd", odd}, {"even", even}});
  return r;
}

OracleResult check_binomial_bound(int k, const OracleLimits & limits)
{
  if (k < 1)
    throw PreconditionError("binomial bound needs k >= 1");
  require_cap(k <= limits.max_binomial_k, "k = " + std::to_string(k));
  OracleResult r = start("L2.6", {{"k", k}});
  // Pascal row, exact.
  std::vector<BigNat> row{1};
  for (int i = 1; i <= k; ++i) {
    std::vector<BigNat> next(row.size() + 1, 0);
    for (std::size_t j = 0; j < row.size(); ++j) {
      next[j] += row[j];
      next[j + 1] += row[j];
    }
    row = std::move(next);
  }
  BigNat best = *std::max_element(row.begin(), row.end());
  // max C(k,j) <= 2^k / sqrt(k)  <=>  k * max^2 <= 4^k.
  const BigNat lhs = best * best * k;
  const BigNat rhs = BigNat(1) << (2 * k);
  r.counts = {{"max_binomial", best.str()}, {"k_times_max_squared", lhs.str()}, {"four_to_k", rhs.str()}};
  if (lhs > rhs)
    fail(r, {{"k", k}, {"max_binomial", best.str()}});
  return r;
}

// --- group-size bounds

OracleResult check_group_size_bounds(const GroupTable & G, const OracleLimits & limits)
{
  require_cap(G.order() <= limits.max_group_order && G.order() <= kAutomorphismEnumerationCap, "|G| = " + std::to_string(G.order()));
  OracleResult r = start("L2.4bc", {{"group", G.name()}});
  const std::size_t autos = automorphisms_of_group(G).size();
  const std::size_t subs = enumerate_subgroups(G).size();
  const long double L = std::log2(static_cast<long double>(G.order()));
  const long double aut_log2 = std::log2(static_cast<long double>(autos));
  const long double sub_log2 = std::log2(static_cast<long double>(subs));
  r.counts = {{"automorphisms", autos},
              {"aut_bound_log2", static_cast<double>(L * L)},
              {"subgroups", subs},
              {"subgroup_bound_log2", static_cast<double>(L * L / 4 + 3)}};
  // Both sides are logs of integers; 1e-12 absorbs rounding when they coincide.
  if (aut_log2 > L * L + 1e-12L)
    fail(r, {{"clause", "b"}, {"automorphisms", autos}});
  if (!(sub_log2 < L * L / 4 + 3))
    fail(r, {{"clause", "c"}, {"subgroups", subs}});
  return r;
}

// --- inversion and involution bounds

OracleResult check_inversion_bounds(const GroupTable & G, const OracleLimits & limits)
{
  require_cap(G.order() <= limits.max_group_order && G.order() <= kAutomorphismEnumerationCap, "|G| = " + std::to_string(G.order()));
  const int n = G.order();
  OracleResult r = start("L2.7", {{"group", G.name()}});
  const bool abelian = G.is_abelian();
  int max_inverted = -1;
  if (!abelian) {
    for (const auto & a : automorphisms_of_group(G)) {
      int inverted = 0;
      for (Elem g = 0; g < n; ++g)
        inverted += a(g) == G.inv(g);
      if (inverted > max_inverted)
        max_inverted = inverted;
      if (4 * inverted > 3 * n)
        fail(r, {{"clause", "inversion"}, {"automorphism", a.to_cycles()}, {"inverted", inverted}});
    }
  }
  const int invol = involution_count(G, G.full_set());
  const bool elementary = G.exponent() <= 2;
  if (4 * invol > 3 * n && !elementary)
    fail(r, {{"clause", "involution-density"}, {"elements_of_order_le_2", invol}});
  r.counts = {{"order", n},
              {"abelian", abelian},
              {"max_inverted", abelian ? json(nullptr) : json(max_inverted)},
              {"inversion_bound", 0.75 * n},
              {"elements_of_order_le_2", invol},
              {"elementary_abelian_2", elementary}};
  if (abelian)
    r.note = "inversion clause is about nonabelian groups; only the involution-density clause applies";
  return r;
}

OracleResult check_coset_involution_bound(const GroupTable & X, const OracleLimits & limits)
{
  require_cap(X.order() <= limits.max_group_order, "|X| = " + std::to_string(X.order()));
  OracleResult r = start("L2.7", {{"group", X.name()}, {"clause", "coset"}});
  json checked = json::array();
  for (const auto & G : index_two_subgroups(X)) {
    bool abelian = true;
    const auto gs = G.indices();
    for (Elem a : gs)
      for (Elem b : gs)
        abelian = abelian && X.mul(a, b) == X.mul(b, a);
    if (abelian)
      continue;
    const int outside = involution_count(X, ~G);
    const auto half = static_cast<int>(G.count());
    checked.push_back({{"G", set_json(X, G)}, {"involutions_outside", outside}, {"bound", 0.75 * half}});
    if (4 * outside > 3 * half)
      fail(r, {{"G", set_json(X, G)}, {"involutions_outside", outside}});
  }
  if (checked.empty())
    throw PreconditionError(X.name() + " has no nonabelian subgroup of index 2");
  r.counts = {{"subgroups_checked", checked}};
  return r;
}

// --- double-coset bound

OracleResult check_double_coset_bound(const GroupTable & G, const ElementSet & H, const ElementSet & K, const OracleLimits & limits)
{
  require_cap(G.order() <= std::max(limits.max_group_order, kSubgroupEnumerationCap), "|G| = " + std::to_string(G.order()));
  OracleResult r = start("L2.8", {{"group", G.name()}, {"H", set_json(G, H)}, {"K", set_json(G, K)}});
  const auto dc = double_cosets(G, H, K);
  const auto n = static_cast<std::size_t>(G.order());
  const std::size_t ih = n / H.count();
  const std::size_t ik = n / K.count();
  const bool bound = 4 * dc.size() <= 3 * std::max(ih, ik);
  const bool normal_branch = H == K && G.is_normal_subgroup(H);
  r.counts = {{"double_cosets", dc.size()}, {"index_H", ih}, {"index_K", ik}, {"bound_branch", bound}, {"normal_branch", normal_branch}};
  if (!bound && !normal_branch)
    fail(r, {{"H", set_json(G, H)}, {"K", set_json(G, K)}, {"double_cosets", dc.size()}});
  return r;
}

OracleResult check_double_coset_bound_all(const GroupTable & G, const OracleLimits & limits)
{
  require_cap(G.order() <= std::max(limits.max_group_order, kSubgroupEnumerationCap), "|G| = " + std::to_string(G.order()));
  OracleResult r = start("L2.8", {{"group", G.name()}, {"pairs", "all"}});
  const auto subs = enumerate_subgroups(G);
  std::size_t pairs = 0;
  std::size_t normal_only = 0;
  for (const auto & H : subs)
    for (const auto & K : subs) {
      auto one = check_double_coset_bound(G, H, K, limits);
      ++pairs;
      if (!one.counts["bound_branch"].get<bool>())
        ++normal_only;
      if (!one.pass)
        fail(r, one.counterexample);
    }
  r.counts = {{"subgroups", subs.size()}, {"pairs", pairs}, {"pairs_needing_normal_branch", normal_only}};
  return r;
}

// --- invariant bipartite graphs

OracleResult check_bipartite_double_coset(const PermGroup & M, const OracleLimits & limits)
{
  const auto orbits = M.orbits();
  if (orbits.size() != 2)
    throw PreconditionError("M must have exactly two orbits, found " + std::to_string(orbits.size()));
  const auto & U = orbits[0];
  const auto & W = orbits[1];
  require_cap(static_cast<int>(U.size()) <= limits.max_bipartite_side && static_cast<int>(W.size()) <= limits.max_bipartite_side,
              "orbit sizes " + std::to_string(U.size()) + "+" + std::to_string(W.size()));
  json gens = json::array();
  for (const auto & g : M.generators())
    gens.push_back(g.to_cycles());
  OracleResult r = start("L2.9", {{"degree", M.degree()}, {"generators", gens}, {"U", U}, {"W", W}});

  // Edge (U[a], W[b]) is bit a*|W| + b; each generator permutes the bits.
  const std::size_t bits = U.size() * W.size();
  std::vector<int> upos(static_cast<std::size_t>(M.degree()), -1);
  std::vector<int> wpos(static_cast<std::size_t>(M.degree()), -1);
  for (std::size_t a = 0; a < U.size(); ++a)
    upos[static_cast<std::size_t>(U[a])] = static_cast<int>(a);
  for (std::size_t b = 0; b < W.size(); ++b)
    wpos[static_cast<std::size_t>(W[b])] = static_cast<int>(b);
  std::vector<std::vector<std::size_t>> bit_image;
  for (const auto & g : M.generators()) {
    std::vector<std::size_t> img(bits);
    for (std::size_t a = 0; a < U.size(); ++a)
      for (std::size_t b = 0; b < W.size(); ++b)
        img[a * W.size() + b] = static_cast<std::size_t>(upos[static_cast<std::size_t>(g(U[a]))]) * W.size() +
                                static_cast<std::size_t>(wpos[static_cast<std::size_t>(g(W[b]))]);
    bit_image.push_back(std::move(img));
  }
  std::uint64_t invariant_graphs = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask) {
    bool ok = true;
    for (const auto & img : bit_image) {
      for (std::size_t e = 0; e < bits && ok; ++e)
        if (((mask >> e) & 1U) && !((mask >> img[e]) & 1U))
          ok = false;
      if (!ok)
        break;
    }
    invariant_graphs += ok;
  }

  // kappa = |M_w \ M / M_u| from the element list.
  const auto elems = M.elements();
  const int u = U.front();
  const int w = W.front();
  std::vector<std::size_t> mu;
  std::vector<std::size_t> mw;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (elems[i](u) == u)
      mu.push_back(i);
    if (elems[i](w) == w)
      mw.push_back(i);
  }
  std::map<Permutation, std::size_t> index;
  for (std::size_t i = 0; i < elems.size(); ++i)
    index.emplace(elems[i], i);
  std::vector<char> seen(elems.size(), 0);
  std::size_t kappa = 0;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (seen[i])
      continue;
    ++kappa;
    for (std::size_t a : mw)
      for (std::size_t b : mu)
        seen[index.at(elems[a] * elems[i] * elems[b])] = 1;
  }

  const std::uint64_t predicted = std::uint64_t{1} << kappa;
  const bool semiregular = M.is_semiregular();
  const bool bound_applies = U.size() == W.size() && !semiregular;
  r.counts = {{"order", M.order().str()},
              {"bipartite_graphs", invariant_graphs},
              {"kappa", kappa},
              {"two_to_kappa", predicted},
              {"semiregular", semiregular},
              {"three_quarter_bound_applies", bound_applies}};
  if (invariant_graphs != predicted)
    fail(r, {{"bipartite_graphs", invariant_graphs}, {"two_to_kappa", predicted}});
  if (bound_applies && 4 * kappa > 3 * U.size())
    fail(r, {{"kappa", kappa}, {"U", U.size()}});
  return r;
}

// --- odd-quotient fibers

OracleResult check_odd_quotient_fibers(const GroupTable & G, const ElementSet & C, const OracleLimits & limits)
{
  const int n = G.order();
  require_cap(n <= limits.max_fiber_order, "|G| = " + std::to_string(n));
  if (!G.is_normal_subgroup(C))
    throw PreconditionError("C must be a normal subgroup");
  if (C.count() < 2)
    throw PreconditionError("C must be nontrivial");
  OracleResult r = start("L5.1", {{"group", G.name()}, {"C", set_json(G, C)}});
  const auto partition = haar_coset_partition(G, C);
  std::map<std::string, std::uint64_t> fibers;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    ElementSet S(static_cast<std::size_t>(n));
    for (int g = 0; g < n; ++g)
      if ((mask >> g) & 1U)
        S.set(static_cast<std::size_t>(g));
    ++fibers[graph_key(odd_quotient(haar_graph(G, S), partition))];
  }
  const std::uint64_t expected = std::uint64_t{1} << (n - n / static_cast<int>(C.count()));
  std::uint64_t smallest = ~std::uint64_t{0};
  std::uint64_t largest = 0;
  for (const auto & [key, size] : fibers) {
    smallest = std::min(smallest, size);
    largest = std::max(largest, size);
    if (size != expected)
      fail(r, {{"quotient_rows", key}, {"fiber_size", size}, {"expected", expected}});
  }
  r.counts = {{"subsets", std::uint64_t{1} << n}, {"fibers", fibers.size()}, {"fiber_size_min", smallest}, {"fiber_size_max", largest},
              {"expected_fiber_size", expected}};
  return r;
}

// --- orbit bounds

std::string to_string(OrbitClass c)
{
  switch (c) {
    case OrbitClass::abelian_exp_gt_2: return "abelian-exp>2";
    case OrbitClass::q8_times_e2: return "q8xE2";
    case OrbitClass::dicyclic_not_q8_e2: return "gen-dicyclic-not-q8e2";
  }
  return "?";
}

PermGroup orbit_group(const GroupTable & G, OrbitClass c)
{
  const auto cls = classify_group(G);
  std::vector<Permutation> gens = right_regular_action(G, 1);
  switch (c) {
    case OrbitClass::abelian_exp_gt_2:
      if (!cls.is_abelian_exp_gt_2)
        throw PreconditionError(G.name() + " is not abelian of exponent > 2");
      gens.push_back(element_map(G, [&](Elem g) { return G.inv(g); }));
      break;
    case OrbitClass::q8_times_e2: {
      if (!cls.is_q8_times_e2)
        throw PreconditionError(G.name() + " is not Q8 x C2^l");
      const auto & w = *cls.q8;
      for (Elem u : {w.i, w.j, w.k}) {
        const Elem minus_u = G.inv(u);
        std::vector<int> img(static_cast<std::size_t>(G.order()));
        std::iota(img.begin(), img.end(), 0);
        w.e_elements.for_each([&](std::size_t e) {
          const Elem a = G.mul(u, static_cast<Elem>(e));
          const Elem b = G.mul(minus_u, static_cast<Elem>(e));
          img[static_cast<std::size_t>(a)] = b;
          img[static_cast<std::size_t>(b)] = a;
        });
        gens.emplace_back(std::move(img));
      }
      break;
    }
    case OrbitClass::dicyclic_not_q8_e2: {
      if (!cls.is_generalized_dicyclic || cls.is_q8_times_e2)
        throw PreconditionError(G.name() + " is not generalized dicyclic outside Q8 x C2^l");
      const auto & A = cls.dicyclic->abelian_half;
      gens.push_back(element_map(G, [&](Elem g) { return A.test(static_cast<std::size_t>(g)) ? g : G.inv(g); }));
      break;
    }
  }
  return PermGroup::from_generators(std::move(gens), G.order());
}

OracleResult check_orbit_bound(const GroupTable & G, OrbitClass c, const OracleLimits & limits)
{
  const int n = G.order();
  require_cap(n <= limits.max_orbit_order, "|G| = " + std::to_string(n));
  const char * id = c == OrbitClass::abelian_exp_gt_2 ? "L7.2" : c == OrbitClass::q8_times_e2 ? "L7.5" : "L7.8";
  OracleResult r = start(id, {{"group", G.name()}, {"class", to_string(c)}});
  const PermGroup M = orbit_group(G, c);
  // Bound num/den * |G| on the orbit count of every non-identity element.
  const int num = c == OrbitClass::abelian_exp_gt_2 ? 5 : c == OrbitClass::q8_times_e2 ? 7 : 3;
  const int den = c == OrbitClass::abelian_exp_gt_2 ? 6 : c == OrbitClass::q8_times_e2 ? 8 : 4;
  int worst = 0;
  std::size_t checked = 0;
  for (const auto & s : M.elements()) {
    if (s.is_identity())
      continue;
    ++checked;
    const int orbits = orbit_count_of_cycle(s);
    worst = std::max(worst, orbits);
    if (den * orbits > num * n)
      fail(r, {{"element", s.to_cycles()}, {"orbits", orbits}});
  }
  r.counts = {{"order_G", n}, {"order_M", M.order().str()}, {"elements_checked", checked}, {"max_orbits", worst},
              {"bound", static_cast<double>(num) * n / den}};
  if (c == OrbitClass::q8_times_e2) {
    r.counts["index_M_over_G"] = BigNat(M.order() / n).str();
    if (M.order() != BigNat(8) * n)
      fail(r, {{"order_M", M.order().str()}, {"expected", 8 * n}});
  }
  return r;
}

// --- suite

const std::vector<std::string> & oracle_ids()
{
  static const std::vector<std::string> ids{"L2.2", "L2.4bc", "L2.5", "L2.6", "L2.7", "L2.8", "L2.9", "L5.1", "L7.2", "L7.5", "L7.8"};
  return ids;
}

const std::vector<std::string> & default_group_grid()
{
  static const std::vector<std::string> grid{
      "C2",   "C3",   "C4",    "C5",        "C6",         "C7",         "C8",         "C9",           "C10",          "C12",
      "C2^2", "C2^3", "C2^4",  "C4xC2",     "C3xC3",      "C6xC2",      "C4xC4",      "S3",           "D4",           "D5",
      "D6",   "Q8",   "Q8xC2", "Q8xC2^2",   "A4",         "S4",         "Dic(C6,3)",  "Dic(C8,4)",    "Dic(C10,5)",   "Dic(C12,6)",
      "Dic(C4xC2,4)", "Dic(C6xC2,6)"};
  return grid;
}

namespace {

std::vector<GroupTable> grid_groups(int max_order)
{
  std::vector<GroupTable> out;
  for (const auto & spec : default_group_grid()) {
    auto G = make_group(spec);
    if (G.order() <= max_order)
      out.push_back(std::move(G));
  }
  return out;
}

std::vector<PermGroup> default_two_orbit_groups()
{
  std::vector<PermGroup> out;
  auto P = [](int d, const char * c) { return Permutation::from_cycles(d, c); };
  out.push_back(PermGroup::from_generators({P(6, "(0 1 2)(3 4 5)")}, 6));
  out.push_back(PermGroup::from_generators({}, 2));
  out.push_back(PermGroup::from_generators({P(6, "(0 1)(3 4)"), P(6, "(0 1 2)(3 4 5)")}, 6));
  out.push_back(PermGroup::from_generators({P(8, "(0 1 2 3)(4 5 6 7)"), P(8, "(1 3)(5 7)")}, 8));
  out.push_back(PermGroup::from_generators({P(8, "(0 1)(2 3)(4 5)(6 7)"), P(8, "(0 2)(1 3)(4 6)(5 7)")}, 8));
  // S3 on three points and, through the sign, on two.
  out.push_back(PermGroup::from_generators({P(5, "(0 1)(3 4)"), P(5, "(0 1 2)")}, 5));
  // Stabilizer of a point in each copy: not semiregular, kappa counted against 3|U|/4.
  out.push_back(PermGroup::from_generators({P(8, "(1 2 3)(5 6 7)"), P(8, "(0 1)(4 5)")}, 8));
  // Regular actions of C4 and C2^2 side by side (semiregular).
  out.push_back(PermGroup::from_generators(right_regular_action(cyclic_group(4), 2), 8));
  return out;
}

ElementSet mask_or_default(const GroupTable & G, const std::optional<std::string> & hex, const ElementSet & fallback)
{
  return hex ? ElementSet::from_hex(static_cast<std::size_t>(G.order()), *hex) : fallback;
}

}  // namespace

std::vector<OracleResult> run_oracle(const std::string & id, const OracleRequest & req, const OracleLimits & limits)
{
  std::vector<OracleResult> out;
  std::vector<GroupTable> groups;
  const bool single = req.group.has_value();
  if (single)
    groups.push_back(make_group(*req.group));

  if (id == "L2.2") {
    if (!single)
      groups = grid_groups(limits.max_set_size);
    for (const auto & G : groups) {
      if (req.set) {
        out.push_back(check_inverse_closed_count(G, mask_or_default(G, req.set, G.full_set()), limits));
        continue;
      }
      ElementSet nonid = G.full_set();
      nonid.reset(0);
      for (const auto & S : {G.full_set(), G.empty_set(), nonid, G.order_le2(G.full_set())})
        if (static_cast<int>(S.count()) <= limits.max_set_size)
          out.push_back(check_inverse_closed_count(G, S, limits));
    }
  } else if (id == "L2.4bc") {
    if (!single)
      groups = grid_groups(std::min(limits.max_group_order, kAutomorphismEnumerationCap));
    for (const auto & G : groups)
      out.push_back(check_group_size_bounds(G, limits));
  } else if (id == "L2.5") {
    if (req.k)
      out.push_back(check_parity_counts(*req.k, limits));
    else
      for (int k = 1; k <= std::min(limits.max_parity_k, 20); ++k)
        out.push_back(check_parity_counts(k, limits));
  } else if (id == "L2.6") {
    if (req.k)
      out.push_back(check_binomial_bound(*req.k, limits));
    else
      for (int k = 1; k <= std::min(limits.max_binomial_k, 60); ++k)
        out.push_back(check_binomial_bound(k, limits));
  } else if (id == "L2.7") {
    if (!single)
      groups = grid_groups(std::min(limits.max_group_order, kAutomorphismEnumerationCap));
    for (const auto & G : groups) {
      out.push_back(check_inversion_bounds(G, limits));
      auto halves = index_two_subgroups(G);
      bool has_nonabelian_half = std::any_of(halves.begin(), halves.end(), [&](const ElementSet & H) {
        const auto hs = H.indices();
        for (Elem a : hs)
          for (Elem b : hs)
            if (G.mul(a, b) != G.mul(b, a))
              return true;
        return false;
      });
      if (has_nonabelian_half)
        out.push_back(check_coset_involution_bound(G, limits));
    }
  } else if (id == "L2.8") {
    if (!single)
      groups = grid_groups(limits.max_group_order);
    for (const auto & G : groups) {
      if (req.h || req.k_set)
        out.push_back(check_double_coset_bound(G, mask_or_default(G, req.h, G.full_set()), mask_or_default(G, req.k_set, G.full_set()), limits));
      else
        out.push_back(check_double_coset_bound_all(G, limits));
    }
  } else if (id == "L2.9") {
    if (!req.generators.empty() || req.degree) {
      if (!req.degree)
        throw PreconditionError("L2.9 needs --degree with --gens");
      std::vector<Permutation> gens;
      for (const auto & g : req.generators)
        gens.push_back(Permutation::from_cycles(*req.degree, g));
      out.push_back(check_bipartite_double_coset(PermGroup::from_generators(std::move(gens), *req.degree), limits));
    } else {
      for (const auto & M : default_two_orbit_groups())
        out.push_back(check_bipartite_double_coset(M, limits));
    }
  } else if (id == "L5.1") {
    if (!single)
      groups = grid_groups(std::min(limits.max_fiber_order, 12));
    for (const auto & G : groups) {
      if (req.core) {
        out.push_back(check_odd_quotient_fibers(G, ElementSet::from_hex(static_cast<std::size_t>(G.order()), *req.core), limits));
        continue;
      }
      for (const auto & C : enumerate_subgroups(G))
        if (C.count() > 1 && G.is_normal_subgroup(C))
          out.push_back(check_odd_quotient_fibers(G, C, limits));
    }
  } else if (id == "L7.2" || id == "L7.5" || id == "L7.8") {
    const OrbitClass c = id == "L7.2" ? OrbitClass::abelian_exp_gt_2 : id == "L7.5" ? OrbitClass::q8_times_e2 : OrbitClass::dicyclic_not_q8_e2;
    if (!single) {
      for (auto & G : grid_groups(limits.max_orbit_order)) {
        const auto cls = classify_group(G);
        const bool member = c == OrbitClass::abelian_exp_gt_2 ? cls.is_abelian_exp_gt_2
                            : c == OrbitClass::q8_times_e2   ? cls.is_q8_times_e2
                                                             : cls.is_generalized_dicyclic && !cls.is_q8_times_e2;
        if (member)
          groups.push_back(std::move(G));
      }
    }
    for (const auto & G : groups)
      out.push_back(check_orbit_bound(G, c, limits));
  } else {
    throw ParseError("unknown lemma id '" + id + "'");
  }
  return out;
}

std::vector<OracleResult> run_oracle_suite(const OracleLimits & limits)
{
  std::vector<OracleResult> all;
  for (const auto & id : oracle_ids()) {
    auto part = run_oracle(id, {}, limits);
    all.insert(all.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return all;
}

}  // namespace haar
