#include "haar/census.hpp"

#include "haar/autgroup.hpp"
#include "haar/error.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <cmath>
#include <random>
#include <sstream>
#include <thread>

namespace haar {

namespace {

constexpr double kZ95 = 1.959963984540054;

std::size_t choose2(int m)
{
  return static_cast<std::size_t>(m) * static_cast<std::size_t>(m - 1) / 2;
}

/// Inverse-closed subset from one bit per slot, reading bits [offset, offset + slots).
ElementSet decode_slots(const FamilySpec & f, const Bitset & bits, std::size_t offset)
{
  ElementSet s = f.group().empty_set();
  const auto & slots = f.slots();
  for (std::size_t k = 0; k < slots.size(); ++k)
    if (bits.test(offset + k)) {
      s.set(static_cast<std::size_t>(slots[k].first));
      s.set(static_cast<std::size_t>(slots[k].second));
    }
  return s;
}

ElementSet decode_free(const FamilySpec & f, const Bitset & bits, std::size_t offset)
{
  const auto n = static_cast<std::size_t>(f.group().order());
  ElementSet s(n);
  for (std::size_t g = 0; g < n; ++g)
    if (bits.test(offset + g))
      s.set(g);
  return s;
}

struct WorkerTally
{
  std::uint64_t hits = 0;
  std::uint64_t degenerate = 0;
  std::uint64_t degenerate_hits = 0;
};

bool is_degenerate(const FamilySpec & f, const Connection & c)
{
  if (f.is_matrix_family())
    return false;
  const auto k = std::get<ElementSet>(c).count();
  return k == 0 || k == static_cast<std::size_t>(f.group().order());
}

/// Runs body(k, tally) for k in [0, count) on `workers` threads; chunks are claimed from a shared counter.
template <class Body>
WorkerTally parallel_count(std::uint64_t count, int workers, Body && body)
{
  workers = std::max(1, workers);
  constexpr std::uint64_t chunk = 64;
  std::atomic<std::uint64_t> next{0};
  std::vector<WorkerTally> tallies(static_cast<std::size_t>(workers));
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto run = [&](std::size_t w) {
    try {
      while (true) {
        std::uint64_t start = next.fetch_add(chunk);
        if (start >= count)
          return;
        std::uint64_t stop = std::min(count, start + chunk);
        for (std::uint64_t k = start; k < stop; ++k)
          body(k, tallies[w]);
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure)
        failure = std::current_exception();
      next.store(count);
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
      pool.emplace_back(run, static_cast<std::size_t>(w));
    for (auto & t : pool)
      t.join();
  }
  if (failure)
    std::rethrow_exception(failure);
  WorkerTally total;
  for (const auto & t : tallies) {
    total.hits += t.hits;
    total.degenerate += t.degenerate;
    total.degenerate_hits += t.degenerate_hits;
  }
  return total;
}

CensusReport report_header(const FamilySpec & f, Predicate p, const CensusOptions & options)
{
  CensusReport r;
  r.family_kind = f.kind();
  r.group_name = f.group().name();
  r.group_order = f.group().order();
  r.m = f.m();
  r.bit_length = f.bit_length();
  r.predicate = p;
  r.total = f.cardinality();
  r.workers = std::max(1, options.workers);
  if (r.group_order >= 2) {
    int m = f.is_matrix_family() ? f.m() : (p == Predicate::hgr || p == Predicate::haar_optimal ? 2 : 1);
    r.bounds = eval_bounds(static_cast<long double>(r.group_order), 0.1, m);
  }
  return r;
}

}  // namespace

// --- Families ----------------------------------------------------------------

std::string to_string(FamilyKind kind)
{
  switch (kind) {
    case FamilyKind::subsets: return "subsets";
    case FamilyKind::inverse_closed_subsets: return "inverse-closed-subsets";
    case FamilyKind::set_matrices: return "set-matrices";
    case FamilyKind::inverse_closed_set_matrices: return "inverse-closed-set-matrices";
    case FamilyKind::skew_set_matrices: return "skew-set-matrices";
  }
  return "?";
}

FamilyKind parse_family_kind(const std::string & name)
{
  if (name == "subsets")
    return FamilyKind::subsets;
  if (name == "inverse-closed" || name == "inverse-closed-subsets")
    return FamilyKind::inverse_closed_subsets;
  if (name == "matrices" || name == "set-matrices")
    return FamilyKind::set_matrices;
  if (name == "inverse-closed-matrices" || name == "inverse-closed-set-matrices")
    return FamilyKind::inverse_closed_set_matrices;
  if (name == "skew" || name == "skew-set-matrices")
    return FamilyKind::skew_set_matrices;
  throw ParseError("unknown family '" + name + "'");
}

FamilySpec::FamilySpec(FamilyKind kind, std::shared_ptr<const GroupTable> group, int m) : kind_(kind), group_(std::move(group)), m_(m)
{
  if (!group_)
    throw PreconditionError("family needs a group");
  if (!is_matrix_family())
    m_ = 1;
  if (m_ < 1)
    throw PreconditionError("family needs m >= 1");
  const int n = group_->order();
  for (Elem g = 0; g < n; ++g)
    if (g <= group_->inv(g))
      slots_.emplace_back(g, group_->inv(g));
  const auto nn = static_cast<std::size_t>(n);
  const auto c = slots_.size();
  const auto mm = static_cast<std::size_t>(m_);
  switch (kind_) {
    case FamilyKind::subsets: bits_ = nn; break;
    case FamilyKind::inverse_closed_subsets: bits_ = c; break;
    case FamilyKind::set_matrices: bits_ = mm * mm * nn; break;
    case FamilyKind::inverse_closed_set_matrices: bits_ = choose2(m_) * nn + mm * c; break;
    case FamilyKind::skew_set_matrices: bits_ = choose2(m_) * nn; break;
  }
}

Connection decode_member(const FamilySpec & f, const Bitset & bits)
{
  if (bits.size() != f.bit_length())
    throw PreconditionError("member bit string has the wrong length");
  const GroupTable & G = f.group();
  const auto n = static_cast<std::size_t>(G.order());
  const int m = f.m();
  switch (f.kind()) {
    case FamilyKind::subsets: return decode_free(f, bits, 0);
    case FamilyKind::inverse_closed_subsets: return decode_slots(f, bits, 0);
    case FamilyKind::set_matrices: {
      SetMatrix sm(m, G.order());
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
          sm.entry(i, j) = decode_free(f, bits, (static_cast<std::size_t>(i) * static_cast<std::size_t>(m) + static_cast<std::size_t>(j)) * n);
      return sm;
    }
    case FamilyKind::inverse_closed_set_matrices:
    case FamilyKind::skew_set_matrices: {
      SetMatrix sm(m, G.order());
      std::size_t offset = 0;
      if (f.kind() == FamilyKind::inverse_closed_set_matrices)
        for (int i = 0; i < m; ++i, offset += f.slots().size())
          sm.entry(i, i) = decode_slots(f, bits, offset);
      for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j, offset += n) {
          sm.entry(i, j) = decode_free(f, bits, offset);
          sm.entry(j, i) = G.inverse_of(sm.entry(i, j));
        }
      return sm;
    }
  }
  throw PreconditionError("unknown family kind");
}

Connection member_at(const FamilySpec & f, std::uint64_t index)
{
  if (f.bit_length() > 63)
    throw CapExceeded("member_at needs at most 63 index bits");
  Bitset bits(f.bit_length());
  for (std::size_t k = 0; k < f.bit_length(); ++k)
    if ((index >> k) & 1U)
      bits.set(k);
  return decode_member(f, bits);
}

Bitset sample_bits(const FamilySpec & f, std::uint64_t seed, std::uint64_t counter)
{
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), static_cast<std::uint32_t>(counter),
                    static_cast<std::uint32_t>(counter >> 32)};
  std::mt19937_64 engine(seq);
  Bitset bits(f.bit_length());
  std::uint64_t word = 0;
  for (std::size_t k = 0; k < f.bit_length(); ++k) {
    if (k % 64 == 0)
      word = engine();
    if ((word >> (k % 64)) & 1U)
      bits.set(k);
  }
  return bits;
}

Connection sample_family(const FamilySpec & f, std::uint64_t seed, std::uint64_t counter)
{
  return decode_member(f, sample_bits(f, seed, counter));
}

// --- Predicates ----------------------------------------------------------------

std::string to_string(Predicate p)
{
  switch (p) {
    case Predicate::drr: return "drr";
    case Predicate::grr: return "grr";
    case Predicate::hgr: return "hgr";
    case Predicate::haar_optimal: return "haar-optimal";
    case Predicate::dmsr: return "dmsr";
    case Predicate::gmsr: return "gmsr";
    case Predicate::mpgsr: return "mpgsr";
  }
  return "?";
}

Predicate parse_predicate(const std::string & name)
{
  for (Predicate p : {Predicate::drr, Predicate::grr, Predicate::hgr, Predicate::haar_optimal, Predicate::dmsr, Predicate::gmsr, Predicate::mpgsr})
    if (to_string(p) == name)
      return p;
  if (name == "haar_optimal")
    return Predicate::haar_optimal;
  throw ParseError("unknown predicate '" + name + "'");
}

FamilyKind family_for(Predicate p)
{
  switch (p) {
    case Predicate::drr:
    case Predicate::hgr:
    case Predicate::haar_optimal: return FamilyKind::subsets;
    case Predicate::grr: return FamilyKind::inverse_closed_subsets;
    case Predicate::dmsr: return FamilyKind::set_matrices;
    case Predicate::gmsr: return FamilyKind::inverse_closed_set_matrices;
    case Predicate::mpgsr: return FamilyKind::skew_set_matrices;
  }
  return FamilyKind::subsets;
}

void check_applicable(const FamilySpec & f, Predicate p)
{
  // Subset predicates also accept the inverse-closed family; it is a subfamily.
  const FamilyKind want = family_for(p);
  const bool ok = f.kind() == want || (want == FamilyKind::subsets && f.kind() == FamilyKind::inverse_closed_subsets);
  if (!ok)
    throw PreconditionError("predicate " + to_string(p) + " is evaluated over " + to_string(want) + ", not " + to_string(f.kind()));
  if (p == Predicate::haar_optimal && !f.group().is_abelian())
    throw PreconditionError("haar-optimal is defined for abelian groups");
}

Evaluation evaluate(const FamilySpec & f, Predicate p, const Connection & member)
{
  const GroupTable & G = f.group();
  Evaluation e;
  switch (p) {
    case Predicate::drr:
    case Predicate::grr: e.aut_order = automorphism_order(cayley_digraph(G, std::get<ElementSet>(member))); break;
    case Predicate::hgr: e.aut_order = automorphism_order(haar_graph(G, std::get<ElementSet>(member))); break;
    case Predicate::haar_optimal: e.aut_order = automorphism_order(colored_haar_graph(G, std::get<ElementSet>(member))); break;
    case Predicate::dmsr:
    case Predicate::gmsr:
    case Predicate::mpgsr: e.aut_order = automorphism_order(m_cayley_digraph(G, std::get<SetMatrix>(member))); break;
  }
  e.hit = e.aut_order == G.order();
  return e;
}

// --- Censuses ------------------------------------------------------------------

std::pair<double, double> wilson_interval(std::uint64_t hits, std::uint64_t trials, double z)
{
  if (trials == 0)
    return {0.0, 1.0};
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(hits) / n;
  const double z2 = z * z;
  const double denom = 1 + z2 / n;
  const double center = (p + z2 / (2 * n)) / denom;
  const double half = z * std::sqrt(p * (1 - p) / n + z2 / (4 * n * n)) / denom;
  // Rounding can push an endpoint a hair past p at p = 0 or 1.
  return {std::clamp(std::min(center - half, p), 0.0, 1.0), std::clamp(std::max(center + half, p), 0.0, 1.0)};
}

std::pair<double, double> wilson_interval_95(std::uint64_t hits, std::uint64_t trials)
{
  return wilson_interval(hits, trials, kZ95);
}

CensusReport exhaustive_census(const FamilySpec & f, Predicate p, const CensusOptions & options)
{
  check_applicable(f, p);
  if (f.bit_length() > static_cast<std::size_t>(options.exhaustive_cap_bits))
    throw CapExceeded("family has 2^" + std::to_string(f.bit_length()) + " members, above the exhaustive cap 2^" +
                      std::to_string(options.exhaustive_cap_bits) + "; use a Monte-Carlo census or raise the cap");
  if (f.bit_length() > 40)
    throw CapExceeded("exhaustive censuses are limited to 2^40 members");
  const auto start = std::chrono::steady_clock::now();
  CensusReport r = report_header(f, p, options);
  r.mode = "exhaustive";
  const std::uint64_t count = std::uint64_t{1} << f.bit_length();
  std::vector<BigNat> orders;
  if (options.trace)
    orders.resize(count);
  auto tally = parallel_count(count, r.workers, [&](std::uint64_t k, WorkerTally & t) {
    Connection c = member_at(f, k);
    Evaluation e = evaluate(f, p, c);
    if (e.hit)
      ++t.hits;
    if (is_degenerate(f, c)) {
      ++t.degenerate;
      if (e.hit)
        ++t.degenerate_hits;
    }
    if (options.trace)
      orders[k] = std::move(e.aut_order);
  });
  if (options.trace)
    for (std::uint64_t k = 0; k < count; ++k)
      r.trace.push_back({std::to_string(k), std::move(orders[k])});
  r.evaluated = count;
  r.hits = tally.hits;
  r.misses = count - tally.hits;
  r.proportion = static_cast<double>(tally.hits) / static_cast<double>(count);
  // Every member was evaluated: the proportion is exact.
  r.wilson_ci_95 = {r.proportion, r.proportion};
  r.degenerate_rows = tally.degenerate;
  r.degenerate_hits = tally.degenerate_hits;
  r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

CensusReport monte_carlo_census(const FamilySpec & f, Predicate p, std::uint64_t samples, std::uint64_t seed, const CensusOptions & options)
{
  check_applicable(f, p);
  if (samples < 1)
    throw PreconditionError("a Monte-Carlo census needs at least one sample");
  const auto start = std::chrono::steady_clock::now();
  CensusReport r = report_header(f, p, options);
  r.mode = "monte-carlo";
  r.seed = seed;
  std::vector<TraceRow> rows;
  if (options.trace)
    rows.resize(samples);
  auto tally = parallel_count(samples, r.workers, [&](std::uint64_t k, WorkerTally & t) {
    Bitset bits = sample_bits(f, seed, k);
    Connection c = decode_member(f, bits);
    Evaluation e = evaluate(f, p, c);
    if (e.hit)
      ++t.hits;
    if (is_degenerate(f, c)) {
      ++t.degenerate;
      if (e.hit)
        ++t.degenerate_hits;
    }
    if (options.trace)
      rows[k] = {bits.to_hex(), std::move(e.aut_order)};
  });
  r.trace = std::move(rows);
  r.evaluated = samples;
  r.hits = tally.hits;
  r.misses = samples - tally.hits;
  r.proportion = static_cast<double>(tally.hits) / static_cast<double>(samples);
  r.wilson_ci_95 = wilson_interval_95(tally.hits, samples);
  r.degenerate_rows = tally.degenerate;
  r.degenerate_hits = tally.degenerate_hits;
  r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

nlohmann::ordered_json to_json(const CensusReport & r)
{
  nlohmann::ordered_json j;
  j["family"] = {{"kind", to_string(r.family_kind)}, {"group", r.group_name}, {"order", r.group_order}, {"m", r.m}, {"bit_length", r.bit_length}};
  j["predicate"] = to_string(r.predicate);
  j["mode"] = r.mode;
  j["total"] = r.total.str();
  j["total_symbolic"] = "2^" + std::to_string(r.bit_length);
  j["samples"] = r.evaluated.str();
  j["hits"] = r.hits.str();
  j["misses"] = r.misses.str();
  j["proportion"] = r.proportion;
  j["wilson_ci_95"] = {r.wilson_ci_95.first, r.wilson_ci_95.second};
  j["seed"] = r.seed ? nlohmann::ordered_json(std::to_string(*r.seed)) : nlohmann::ordered_json(nullptr);
  j["degenerate_rows"] = r.degenerate_rows.str();
  j["degenerate_hits"] = r.degenerate_hits.str();
  if (r.bounds) {
    auto b = to_json(*r.bounds);
    b["note"] = "asymptotic bound evaluated at this n; not asserted at desk scale";
    j["bound_comparison"] = std::move(b);
  } else {
    j["bound_comparison"] = nullptr;
  }
  j["workers"] = r.workers;
  j["wall_seconds"] = r.wall_seconds;
  return j;
}

std::string trace_csv(const CensusReport & r)
{
  std::ostringstream out;
  out << "family_index,predicate,aut_order\n";
  for (const auto & row : r.trace)
    out << row.family_index << ',' << to_string(r.predicate) << ',' << row.aut_order.str() << '\n';
  return out.str();
}

}  // namespace haar
