#pragma once

#include "haar/group.hpp"
#include "haar/perm.hpp"

#include "json.hpp"

#include <optional>
#include <string>
#include <vector>

namespace haar {

/// Outcome of one brute-force lemma check. A failing result always carries a counterexample.
struct OracleResult
{
  std::string lemma_id;
  nlohmann::ordered_json parameters = nlohmann::ordered_json::object();
  bool pass = false;
  nlohmann::ordered_json counts = nlohmann::ordered_json::object();
  nlohmann::ordered_json counterexample;  // null on PASS
  std::string note;
};

nlohmann::ordered_json to_json(const OracleResult & r);

/// Per-oracle size caps; exceeding one throws CapExceeded.
struct OracleLimits
{
  int max_set_size = 20;        // L2.2: |S|
  int max_parity_k = 20;        // L2.5
  int max_binomial_k = 60;      // L2.6
  int max_group_order = 24;     // L2.4bc, L2.7, L2.8
  int max_bipartite_side = 5;   // L2.9: |U|, |W|
  int max_fiber_order = 16;     // L5.1
  int max_orbit_order = 48;     // L7.2, L7.5, L7.8

  /// The single override switch: raises every cap.
  static OracleLimits raised();
};

OracleResult check_inverse_closed_count(const GroupTable & G, const ElementSet & S, const OracleLimits & limits = {});
OracleResult check_parity_counts(int k, const OracleLimits & limits = {});
OracleResult check_binomial_bound(int k, const OracleLimits & limits = {});
OracleResult check_group_size_bounds(const GroupTable & G, const OracleLimits & limits = {});
/// Automorphism inversion bound (nonabelian G) and the involution-density clause.
OracleResult check_inversion_bounds(const GroupTable & G, const OracleLimits & limits = {});
/// |I(X \ G)| <= 3|G|/4 for every nonabelian index-2 subgroup G of X; throws PreconditionError when X has none.
OracleResult check_coset_involution_bound(const GroupTable & X, const OracleLimits & limits = {});
OracleResult check_double_coset_bound(const GroupTable & G, const ElementSet & H, const ElementSet & K, const OracleLimits & limits = {});
/// check_double_coset_bound over every ordered pair of subgroups.
OracleResult check_double_coset_bound_all(const GroupTable & G, const OracleLimits & limits = {});
/// M must have exactly two orbits; the 3/4 clause is checked when they have equal size and M is not semiregular.
OracleResult check_bipartite_double_coset(const PermGroup & M, const OracleLimits & limits = {});
OracleResult check_odd_quotient_fibers(const GroupTable & G, const ElementSet & C, const OracleLimits & limits = {});

enum class OrbitClass
{
  abelian_exp_gt_2,      // M(G) = G x| <inversion>, bound 5|G|/6
  q8_times_e2,           // M(G) = <G, alpha_i, alpha_j, alpha_k>, bound 7|G|/8, |M(G)| = 8|G|
  dicyclic_not_q8_e2     // M(G) = G x| <iota>, iota inverting G \ A, bound 3|G|/4
};

std::string to_string(OrbitClass c);
/// M(G) as a permutation group on the elements of G; throws PreconditionError on a class mismatch.
PermGroup orbit_group(const GroupTable & G, OrbitClass c);
OracleResult check_orbit_bound(const GroupTable & G, OrbitClass c, const OracleLimits & limits = {});

/// Stable lemma ids, in suite order.
const std::vector<std::string> & oracle_ids();

/// Optional parameters for a single oracle run; unset fields fall back to the default grid.
struct OracleRequest
{
  std::optional<std::string> group;  // group spec
  std::optional<std::string> set;    // hex mask (L2.2)
  std::optional<std::string> core;   // hex mask of C (L5.1)
  std::optional<std::string> h;      // hex masks (L2.8)
  std::optional<std::string> k_set;
  std::optional<int> k;              // L2.5, L2.6
  std::vector<std::string> generators;  // cycle notation (L2.9)
  std::optional<int> degree;
};

/// Runs one oracle id, either on the request's parameters or over its default grid.
std::vector<OracleResult> run_oracle(const std::string & id, const OracleRequest & request = {}, const OracleLimits & limits = {});

/// Every oracle over its default grid.
std::vector<OracleResult> run_oracle_suite(const OracleLimits & limits = {});

/// Group specs of the default grid (catalog groups within the default caps).
const std::vector<std::string> & default_group_grid();

}  // namespace haar
