#pragma once

#include "haar/graph.hpp"
#include "haar/group.hpp"
#include "haar/perm.hpp"

#include <utility>
#include <vector>

namespace haar {

/// Record of one automorphism search.
struct RefinementTrace
{
  /// Input colors renumbered to 0..k-1 in increasing order of the original color ids.
  std::vector<int> initial_coloring;
  /// (target cell, individualized vertex) along the first path of the search tree.
  std::vector<std::pair<int, int>> decisions;
  std::vector<Permutation> generators;
};

struct AutSearchResult
{
  RefinementTrace trace;
  /// Individualized vertices of the first path; a base for Aut.
  std::vector<int> base;
  /// Orbit length of base[i] under the pointwise stabilizer of base[0..i-1].
  std::vector<std::size_t> basic_orbit_lengths;
  BigNat order = 1;
};

/**
 * Individualization-refinement search for Aut(g).
 *
 * Refinement iterates the signature (color, out-neighbour color counts,
 * in-neighbour color counts) to a fixpoint. The search individualizes the
 * first vertex of the first smallest non-singleton cell along a first path,
 * then, from the deepest level up, searches the sibling subtrees for
 * automorphisms, skipping siblings already in the orbit of the first-path
 * vertex under the automorphisms found so far. The order is the product of
 * the resulting basic orbit lengths.
 */
AutSearchResult search_automorphisms(const ColoredDigraph & g);

/// |Aut(g)| via search_automorphisms, without building a BSGS.
BigNat automorphism_order(const ColoredDigraph & g);

/// Aut(g) as a PermGroup on the vertices.
PermGroup automorphism_group(const ColoredDigraph & g);

/// Haar graph with G_+ colored 0 and G_- colored 1.
ColoredDigraph colored_haar_graph(const GroupTable & G, const ElementSet & S);

/// Aut^+(H(G,S)): automorphisms fixing both layers setwise.
PermGroup aut_plus_haar(const GroupTable & G, const ElementSet & S);

/// Cay(G,S) is a DRR: |Aut| == |G|. R(G) is always inside Aut, so equal orders force Aut == R(G).
bool is_drr(const GroupTable & G, const ElementSet & S);
/// As is_drr for inverse-closed S; throws PreconditionError otherwise.
bool is_grr(const GroupTable & G, const ElementSet & S);
/// |Aut(H(G,S))| == |G|.
bool is_hgr(const GroupTable & G, const ElementSet & S);
/// |Aut^+(H(G,S))| == |G| for abelian G; throws PreconditionError for nonabelian G.
bool is_haar_optimal_abelian(const GroupTable & G, const ElementSet & S);

enum class MsrKind
{
  digraph,  // DmSR
  graph,    // GmSR, needs an inverse-closed set-matrix
  skew      // m-PGSR, needs a skew set-matrix
};

/// |Aut(Cay(G, SM))| == |G|, after checking the set-matrix flags the kind requires.
bool is_msr(const GroupTable & G, const SetMatrix & SM, MsrKind kind);

}  // namespace haar
