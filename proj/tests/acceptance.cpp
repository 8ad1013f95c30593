// Acceptance run: one PASS/FAIL line per criterion on stdout, details on stderr.
// Exit status is 0 iff every criterion passes.

#include "brute.hpp"

#include "haar/autgroup.hpp"
#include "haar/census.hpp"
#include "haar/oracles.hpp"

#include <boost/math/distributions/normal.hpp>

#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <iostream>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace haar;

namespace {

// Pinned tolerances and fixed inputs.
constexpr std::uint64_t kCalibrationSeed = 0x5EED;
constexpr std::uint64_t kCalibrationSamples = 20000;
constexpr int kRandomDigraphs = 500;
constexpr int kMaxRandomVertices = 7;
constexpr double kNepsTimeLimitSeconds = 1.0;
constexpr int kNepsVerifyPoints = 64;
// Family-wise confidence for the many-case consistency check (Bonferroni over the cases).
constexpr double kFamilywiseAlpha = 0.05;

std::shared_ptr<const GroupTable> group(const std::string & spec)
{
  return std::make_shared<const GroupTable>(make_group(spec));
}

CensusReport exhaustive(const std::string & spec, FamilyKind kind, Predicate p, int m = 1, int workers = 1, bool trace = false)
{
  CensusOptions o;
  o.workers = workers;
  o.trace = trace;
  return exhaustive_census(FamilySpec(kind, group(spec), m), p, o);
}

CensusReport sampled(const std::string & spec, FamilyKind kind, Predicate p, int m = 1, int workers = 1, bool trace = false)
{
  CensusOptions o;
  o.workers = workers;
  o.trace = trace;
  return monte_carlo_census(FamilySpec(kind, group(spec), m), p, kCalibrationSamples, kCalibrationSeed, o);
}

bool ci_contains(const CensusReport & r, double p)
{
  return r.wilson_ci_95.first <= p && p <= r.wilson_ci_95.second;
}

std::string describe(const CensusReport & r)
{
  std::ostringstream s;
  s << r.group_name << ' ' << to_string(r.family_kind) << " m=" << r.m << ' ' << to_string(r.predicate) << ' ' << r.mode << ": " << r.hits << '/'
    << r.evaluated;
  if (r.mode != "exhaustive")
    s << " ci=[" << r.wilson_ci_95.first << ", " << r.wilson_ci_95.second << ']';
  return s.str();
}

bool criterion_drr_exceptions(std::ostream & log)
{
  const std::vector<std::pair<std::string, int>> cases{{"C2^2", 4}, {"C2^3", 8}, {"C3xC3", 9}, {"Q8", 8}, {"C2^4", 16}};
  bool ok = true;
  for (const auto & [spec, n] : cases) {
    auto r = exhaustive(spec, FamilyKind::subsets, Predicate::drr);
    log << "  " << describe(r) << '\n';
    ok = ok && r.hits == 0 && r.total == (BigNat(1) << n);
  }
  return ok;
}

bool criterion_grr_exceptions(std::ostream & log)
{
  bool ok = true;
  for (const char * spec : {"C4", "C3xC3", "Q8", "Dic(C6,3)"}) {
    auto G = group(spec);
    auto r = exhaustive(spec, FamilyKind::inverse_closed_subsets, Predicate::grr);
    log << "  " << describe(r) << " (2^c = 2^" << c_value(*G, G->full_set()) << ")\n";
    ok = ok && r.hits == 0 && r.total == (BigNat(1) << c_value(*G, G->full_set()));
  }
  ok = ok && exhaustive("C4", FamilyKind::inverse_closed_subsets, Predicate::grr).total == 8;

  // Witness outside the exception classes.
  auto D6 = group("D6");
  const auto cls = classify_group(*D6);
  FamilySpec f(FamilyKind::inverse_closed_subsets, D6);
  bool found = false;
  for (std::uint64_t k = 0; k < (std::uint64_t{1} << f.bit_length()) && !found; ++k) {
    const auto S = std::get<ElementSet>(member_at(f, k));
    if (is_grr(*D6, S)) {
      found = true;
      log << "  witness: D6, S = " << S.to_hex() << " (index " << k << "), |Aut Cay(D6,S)| = " << automorphism_order(cayley_digraph(*D6, S)) << '\n';
    }
  }
  return ok && found && !cls.is_abelian && !cls.is_generalized_dicyclic;
}

bool criterion_abelian_haar(std::ostream & log)
{
  bool ok = true;
  long checked = 0;
  for (const char * spec : {"C1", "C2", "C3", "C4", "C2^2", "C5", "C6"}) {
    const auto G = make_group(spec);
    const int n = G.order();
    const Permutation iota = iota_permutation(G);
    for (unsigned mask = 0; mask < (1U << n); ++mask) {
      ElementSet S(static_cast<std::size_t>(n));
      for (int g = 0; g < n; ++g)
        if ((mask >> g) & 1U)
          S.set(static_cast<std::size_t>(g));
      const bool iota_ok = is_automorphism(haar_graph(G, S), iota);
      const BigNat plus = aut_plus_haar(G, S).order();
      const bool divides = plus % n == 0;
      const bool hgr = is_hgr(G, S);
      if (!iota_ok || !divides || hgr) {
        log << "  counterexample: " << spec << " S=" << S.to_hex() << " iota=" << iota_ok << " |Aut+|=" << plus << " hgr=" << hgr << '\n';
        ok = false;
      }
      ++checked;
    }
  }
  log << "  " << checked << " (group, subset) pairs\n";
  return ok;
}

bool criterion_neps(std::ostream & log)
{
  const auto start = std::chrono::steady_clock::now();
  NepsConfig config;
  config.verify_points = kNepsVerifyPoints;
  const NepsResult r = find_n_eps(0.1, config);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  log << "  n_0.1 = " << r.n_eps << " (log2 " << r.log2_n_eps << "), verified at " << r.verified_points << " points, " << seconds << " s\n";
  return r.n_eps > (BigNat(1) << 67) && !neps_inequality_holds_at(r.last_failure, 0.1) && neps_inequality_holds_at(r.n_eps, 0.1) && r.verified_points == kNepsVerifyPoints &&
         seconds < kNepsTimeLimitSeconds;
}

bool criterion_oracles(std::ostream & log)
{
  const auto results = run_oracle_suite();
  bool ok = !results.empty();
  std::map<std::string, int> per_lemma;
  bool q8_index = false;
  for (const auto & r : results) {
    ++per_lemma[r.lemma_id];
    if (!r.pass) {
      log << "  FAIL " << to_json(r).dump() << '\n';
      ok = false;
    }
    if (r.lemma_id == "L7.5" && r.parameters.value("group", "") == "Q8xC2")
      q8_index = r.counts.value("index_M_over_G", "") == "8";
    if (r.lemma_id == "L7.5" && r.parameters.value("group", "") == "Q8")
      q8_index = q8_index || r.counts.value("index_M_over_G", "") == "8";
  }
  for (const auto & id : oracle_ids()) {
    log << "  " << id << ": " << per_lemma[id] << " checks\n";
    ok = ok && per_lemma[id] > 0;
  }
  return ok && q8_index;
}

ColoredDigraph random_colored_digraph(std::mt19937_64 & rng, int v)
{
  std::uniform_int_distribution<int> coin(0, 3);
  std::uniform_int_distribution<int> colors(1, 3);
  std::uniform_real_distribution<double> unit(0, 1);
  const bool undirected = coin(rng) == 0;
  const int palette = colors(rng);
  const double density = unit(rng);
  ColoredDigraph g(v, undirected);
  std::uniform_int_distribution<int> color(0, palette - 1);
  for (int u = 0; u < v; ++u) {
    g.set_color(u, color(rng));
    for (int w = undirected ? u : 0; w < v; ++w)
      if (unit(rng) < density) {
        if (undirected)
          g.add_edge(u, w);
        else
          g.add_arc(u, w);
      }
  }
  return g;
}

bool criterion_engine(std::ostream & log)
{
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<int> size(1, kMaxRandomVertices);
  int agree = 0;
  for (int t = 0; t < kRandomDigraphs; ++t) {
    auto g = random_colored_digraph(rng, size(rng));
    agree += automorphism_order(g) == brute::aut_order(g);
  }
  int haar_agree = 0;
  int haar_total = 0;
  for (const char * spec : {"C1", "C2", "C3", "C4", "C2^2"}) {
    const auto G = make_group(spec);
    const int n = G.order();
    for (unsigned mask = 0; mask < (1U << n); ++mask) {
      ElementSet S(static_cast<std::size_t>(n));
      for (int g = 0; g < n; ++g)
        if ((mask >> g) & 1U)
          S.set(static_cast<std::size_t>(g));
      for (const auto & g : {haar_graph(G, S), colored_haar_graph(G, S)}) {
        ++haar_total;
        haar_agree += automorphism_order(g) == brute::aut_order(g);
      }
    }
  }
  log << "  random: " << agree << '/' << kRandomDigraphs << ", Haar graphs n<=4: " << haar_agree << '/' << haar_total << '\n';
  return agree == kRandomDigraphs && haar_agree == haar_total;
}

bool criterion_calibration(std::ostream & log)
{
  struct Case
  {
    const char * spec;
    Predicate p;
  };
  bool ok = true;
  for (const auto & c : {Case{"C3", Predicate::hgr}, Case{"S3", Predicate::hgr}, Case{"C2^2", Predicate::drr}}) {
    const auto ex = exhaustive(c.spec, FamilyKind::subsets, c.p);
    const auto mc = sampled(c.spec, FamilyKind::subsets, c.p);
    log << "  " << describe(ex) << " p=" << ex.proportion << " | " << describe(mc) << '\n';
    ok = ok && ci_contains(mc, ex.proportion);
  }
  return ok;
}

bool criterion_desk_scale(std::ostream & log)
{
  // The asymptotic bounds say nothing at feasible sizes.
  const auto b20 = eval_bounds(std::exp2(20.0L), 0.1, 1);
  const auto b_small = eval_bounds(16, 0.1, 4);
  bool ok = b20.f_eps < 0 && b20.haar_bound_vacuous && b_small.msr_bound <= 0;
  log << "  f_0.1(2^20) = " << static_cast<double>(b20.f_eps) << ", 1 - m^2/sqrt(n) at n=16, m=4: " << static_cast<double>(b_small.msr_bound) << '\n';

  // Every exhaustive proportion is reproduced by Monte Carlo.
  struct Case
  {
    const char * spec;
    FamilyKind kind;
    Predicate p;
    int m;
  };
  const std::vector<Case> cases{
      {"C3", FamilyKind::subsets, Predicate::drr, 1},
      {"C5", FamilyKind::subsets, Predicate::drr, 1},
      {"S3", FamilyKind::subsets, Predicate::drr, 1},
      {"C2^3", FamilyKind::subsets, Predicate::drr, 1},
      {"D4", FamilyKind::inverse_closed_subsets, Predicate::grr, 1},
      {"D6", FamilyKind::inverse_closed_subsets, Predicate::grr, 1},
      {"C4", FamilyKind::subsets, Predicate::hgr, 1},
      {"C5", FamilyKind::subsets, Predicate::haar_optimal, 1},
      {"C2", FamilyKind::set_matrices, Predicate::dmsr, 2},
      {"C3", FamilyKind::inverse_closed_set_matrices, Predicate::gmsr, 2},
      {"S3", FamilyKind::skew_set_matrices, Predicate::mpgsr, 2},
      {"C3", FamilyKind::skew_set_matrices, Predicate::mpgsr, 3},
  };
  const double z = boost::math::quantile(boost::math::normal(), 1 - kFamilywiseAlpha / (2.0 * static_cast<double>(cases.size())));
  log << "  family-wise 95% over " << cases.size() << " cases: z = " << z << '\n';
  for (const auto & c : cases) {
    const auto ex = exhaustive(c.spec, c.kind, c.p, c.m);
    const auto mc = sampled(c.spec, c.kind, c.p, c.m);
    const std::uint64_t hits = static_cast<std::uint64_t>(mc.hits);
    const auto ci = wilson_interval(hits, kCalibrationSamples, z);
    const bool in = ci.first <= ex.proportion && ex.proportion <= ci.second;
    log << "  " << describe(ex) << " p=" << ex.proportion << " | mc " << mc.hits << '/' << mc.evaluated << " ci=[" << ci.first << ", " << ci.second << "] "
        << (in ? "ok" : "MISS") << (ci_contains(mc, ex.proportion) ? "" : " (outside the per-case 95% interval)") << '\n';
    ok = ok && in;
  }

  // Skew 2x2 set-matrices against Haar graphs, member by member.
  for (const char * spec : {"C1", "C2", "C3", "C4", "C2^2"}) {
    const auto skew = exhaustive(spec, FamilyKind::skew_set_matrices, Predicate::mpgsr, 2, 1, true);
    const auto hgr = exhaustive(spec, FamilyKind::subsets, Predicate::hgr, 1, 1, true);
    bool rows = skew.trace.size() == hgr.trace.size();
    for (std::size_t i = 0; rows && i < skew.trace.size(); ++i)
      rows = skew.trace[i].aut_order == hgr.trace[i].aut_order;
    log << "  " << spec << ": 2-PGSR " << skew.hits << '/' << skew.total << ", HGR " << hgr.hits << '/' << hgr.total << (rows ? ", rows identical" : ", rows differ")
        << '\n';
    ok = ok && rows && skew.hits == hgr.hits && skew.total == hgr.total;
  }
  return ok;
}

std::string normalized(const CensusReport & r)
{
  auto j = to_json(r);
  j.erase("wall_seconds");
  j.erase("workers");
  return j.dump() + '\n' + trace_csv(r);
}

bool criterion_determinism(std::ostream & log)
{
  bool ok = true;
  const auto check = [&](const std::function<CensusReport(int)> & run, const std::string & label) {
    const bool same = normalized(run(1)) == normalized(run(4));
    log << "  " << label << (same ? ": identical" : ": DIFFERENT") << '\n';
    ok = ok && same;
  };
  check([](int w) { return exhaustive("C2^3", FamilyKind::subsets, Predicate::drr, 1, w, true); }, "exhaustive C2^3 drr");
  check([](int w) { return exhaustive("D6", FamilyKind::inverse_closed_subsets, Predicate::grr, 1, w, true); }, "exhaustive D6 grr");
  check([](int w) { return sampled("S3", FamilyKind::subsets, Predicate::hgr, 1, w, true); }, "monte-carlo S3 hgr");
  check([](int w) { return sampled("C4", FamilyKind::skew_set_matrices, Predicate::mpgsr, 3, w, true); }, "monte-carlo C4 3-pgsr");
  return ok;
}

}  // namespace

int main()
{
  const std::vector<std::pair<std::string, std::function<bool(std::ostream &)>>> criteria{
      {"DRR exceptions", criterion_drr_exceptions},
      {"GRR exceptions and witness", criterion_grr_exceptions},
      {"abelian Haar graphs", criterion_abelian_haar},
      {"n_0.1 > 2^67", criterion_neps},
      {"lemma oracle suite", criterion_oracles},
      {"automorphism engine vs brute force", criterion_engine},
      {"Monte-Carlo calibration", criterion_calibration},
      {"desk-scale consistency", criterion_desk_scale},
      {"worker determinism", criterion_determinism},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = criteria[i].second(std::cerr);
    } catch (const std::exception & e) {
      std::cerr << "  exception: " << e.what() << '\n';
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << "criterion " << i + 1 << " " << (ok ? "PASS" : "FAIL") << "  " << criteria[i].first << " (" << seconds << " s)" << std::endl;
    all = all && ok;
  }
  return all ? 0 : 1;
}
