#pragma once

#include "haar/bitset.hpp"
#include "haar/graph.hpp"
#include "haar/group.hpp"
#include "haar/perm.hpp"

#include "json.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace haar {

// --- Families -------------------------------------------------------------

enum class FamilyKind
{
  subsets,
  inverse_closed_subsets,
  set_matrices,
  inverse_closed_set_matrices,
  skew_set_matrices
};

std::string to_string(FamilyKind kind);
/// Accepts the canonical names and the CLI short forms
/// (subsets, inverse-closed, matrices, inverse-closed-matrices, skew).
FamilyKind parse_family_kind(const std::string & name);

/**
 * A family of connection objects of one group, parameterized by a bit string.
 *
 * Bit layout (d = bit_length()):
 *  - subsets: bit g <-> element g (n bits);
 *  - inverse-closed subsets: one bit per slot {g, g^-1}, slots in order of
 *    their smaller element (c(G) bits);
 *  - set-matrices: entries row-major, n bits each (m^2 n bits);
 *  - inverse-closed set-matrices: the m diagonal entries with c(G) bits each,
 *    then S_{i,j} for i<j in lexicographic order with n bits each, and
 *    S_{j,i} = S_{i,j}^-1;
 *  - skew set-matrices: only the S_{i,j}, i<j, block (C(m,2) n bits).
 */
class FamilySpec
{
public:
  FamilySpec(FamilyKind kind, std::shared_ptr<const GroupTable> group, int m = 1);

  FamilyKind kind() const { return kind_; }
  const GroupTable & group() const { return *group_; }
  const std::shared_ptr<const GroupTable> & group_ptr() const { return group_; }
  int m() const { return m_; }
  bool is_matrix_family() const { return kind_ != FamilyKind::subsets && kind_ != FamilyKind::inverse_closed_subsets; }

  std::size_t bit_length() const { return bits_; }
  /// Exactly 2^bit_length().
  BigNat cardinality() const { return BigNat(1) << bits_; }

  /// Inverse-pair slots {g, g^-1} with g <= g^-1, ordered by g.
  const std::vector<std::pair<Elem, Elem>> & slots() const { return slots_; }

private:
  FamilyKind kind_;
  std::shared_ptr<const GroupTable> group_;
  int m_ = 1;
  std::size_t bits_ = 0;
  std::vector<std::pair<Elem, Elem>> slots_;
};

using Connection = std::variant<ElementSet, SetMatrix>;

/// Decode a bit string of length bit_length() into the family member it names.
Connection decode_member(const FamilySpec & family, const Bitset & bits);
/// Member number index (bit k of index is bit k of the string); needs bit_length() <= 63.
Connection member_at(const FamilySpec & family, std::uint64_t index);

/// Bits of Monte-Carlo sample number counter, derived from (seed, counter) alone.
Bitset sample_bits(const FamilySpec & family, std::uint64_t seed, std::uint64_t counter);
/// Uniform member of the family for sample number counter of the stream seed.
Connection sample_family(const FamilySpec & family, std::uint64_t seed, std::uint64_t counter);

// --- Predicates -----------------------------------------------------------

enum class Predicate
{
  drr,           // Cay(G,S), subsets
  grr,           // Cay(G,S), inverse-closed subsets
  hgr,           // H(G,S), subsets
  haar_optimal,  // Aut^+(H(G,S)) == G, abelian G, subsets
  dmsr,          // Cay(G,SM), set-matrices
  gmsr,          // Cay(G,SM), inverse-closed set-matrices
  mpgsr          // Cay(G,SM), skew set-matrices
};

std::string to_string(Predicate p);
Predicate parse_predicate(const std::string & name);
/// The family kind a predicate is evaluated over.
FamilyKind family_for(Predicate p);

struct Evaluation
{
  bool hit = false;
  BigNat aut_order;
};

/// Throws PreconditionError when the predicate does not apply to the family or group.
void check_applicable(const FamilySpec & family, Predicate p);
/// Order of the relevant automorphism group; hit iff it equals |G|.
Evaluation evaluate(const FamilySpec & family, Predicate p, const Connection & member);

// --- Bounds ---------------------------------------------------------------

struct BoundReport
{
  long double n = 0;
  double eps = 0;
  int m = 1;
  long double f_eps = 0;
  long double h_eps = 0;
  /// log2 of 2^{n - f_eps}: the Haar non-HGR count bound in log form.
  long double haar_bound_log2 = 0;
  long double msr_bound = 0;
  bool neps_inequality_holds = false;
  /// f_eps <= 0: the count bound is at least 2^n, the number of all subsets.
  bool haar_bound_vacuous = false;
  /// 1 - m^2/sqrt(n) <= 0.
  bool msr_bound_vacuous = false;
};

/// Throws PreconditionError unless n >= 2, 0 < eps <= 0.1 and m >= 1.
BoundReport eval_bounds(long double n, double eps, int m);

/// Strict inequality (6+2L)(t+L)^2 + (1-L)(t+L) + L^2 + 2L < n^{1-eps}, L = log2 n, t = n^{0.5-eps},
/// evaluated in 50-digit binary floating point. eps is rounded to 12 decimal places.
bool neps_inequality_holds_at(const BigNat & n, double eps);
bool neps_inequality_holds_at_log2(double log2_n, double eps);

struct NepsConfig
{
  double ceiling_log2 = 96;
  /// Scan resolution in log2 units.
  double scan_step_log2 = 1.0 / 16;
  int verify_points = 64;
};

struct NepsResult
{
  BigNat n_eps;          // 1 + largest n at which the inequality fails
  double log2_n_eps = 0;
  BigNat last_failure;
  int verified_points = 0;
  double ceiling_log2 = 0;
};

/// Throws PreconditionError for eps outside (0, 0.1], std::runtime_error when the boundary is not bracketed below the ceiling.
NepsResult find_n_eps(double eps, const NepsConfig & config = {});

// --- Censuses -------------------------------------------------------------

struct CensusOptions
{
  int workers = 1;
  bool trace = false;
  int exhaustive_cap_bits = 24;
};

struct TraceRow
{
  /// Decimal member index (exhaustive) or the sampled bit string in hex (Monte Carlo).
  std::string family_index;
  BigNat aut_order;
};

struct CensusReport
{
  FamilyKind family_kind = FamilyKind::subsets;
  std::string group_name;
  int group_order = 0;
  int m = 1;
  std::size_t bit_length = 0;
  Predicate predicate = Predicate::drr;
  std::string mode;  // "exhaustive" | "monte-carlo"
  BigNat total;      // family size
  BigNat evaluated;  // total (exhaustive) or samples (Monte Carlo)
  BigNat hits;
  BigNat misses;
  double proportion = 0;
  std::pair<double, double> wilson_ci_95{0, 0};
  std::optional<std::uint64_t> seed;
  /// Members with |S| in {0, n} (subset families only), and the hits among them.
  BigNat degenerate_rows;
  BigNat degenerate_hits;
  std::optional<BoundReport> bounds;
  std::vector<TraceRow> trace;
  int workers = 1;
  double wall_seconds = 0;
};

/// Wilson score interval for normal quantile z; (0, 1) for zero trials.
std::pair<double, double> wilson_interval(std::uint64_t hits, std::uint64_t trials, double z);
/// Wilson score interval at 95% confidence.
std::pair<double, double> wilson_interval_95(std::uint64_t hits, std::uint64_t trials);

/// Every member in index order. Throws CapExceeded when bit_length() exceeds the cap.
CensusReport exhaustive_census(const FamilySpec & family, Predicate predicate, const CensusOptions & options = {});

/// samples i.i.d. uniform members; sample k depends only on (seed, k).
CensusReport monte_carlo_census(const FamilySpec & family, Predicate predicate, std::uint64_t samples, std::uint64_t seed,
                                const CensusOptions & options = {});

nlohmann::ordered_json to_json(const BoundReport & b);
nlohmann::ordered_json to_json(const NepsResult & r);
/// Counts as decimal strings; the seed echoed as given.
nlohmann::ordered_json to_json(const CensusReport & r);
/// CSV with header family_index,predicate,aut_order.
std::string trace_csv(const CensusReport & r);

}  // namespace haar
