#pragma once

#include "haar/bitset.hpp"
#include "haar/group.hpp"
#include "haar/perm.hpp"

#include <string>
#include <vector>

namespace haar {

/**
 * Dense digraph with vertex colors.
 *
 * Row u of the adjacency holds the out-neighbours of u. The undirected flag
 * is set by constructors whose output is symmetric; loops are allowed.
 */
class ColoredDigraph
{
public:
  ColoredDigraph() = default;
  explicit ColoredDigraph(int vertex_count, bool undirected = false);

  int vertex_count() const { return v_; }
  bool undirected() const { return undirected_; }
  void set_undirected(bool flag) { undirected_ = flag; }

  bool has_arc(int u, int w) const { return adj_[static_cast<std::size_t>(u)].test(static_cast<std::size_t>(w)); }
  void add_arc(int u, int w) { adj_[static_cast<std::size_t>(u)].set(static_cast<std::size_t>(w)); }
  void add_edge(int u, int w)
  {
    add_arc(u, w);
    add_arc(w, u);
  }
  const Bitset & out_row(int u) const { return adj_[static_cast<std::size_t>(u)]; }
  const std::vector<Bitset> & rows() const { return adj_; }

  int color(int u) const { return colors_[static_cast<std::size_t>(u)]; }
  void set_color(int u, int c) { colors_[static_cast<std::size_t>(u)] = c; }
  const std::vector<int> & colors() const { return colors_; }

  std::size_t arc_count() const;
  bool is_symmetric() const;
  /// Rows of the reversed digraph.
  std::vector<Bitset> in_rows() const;

  friend bool operator==(const ColoredDigraph &, const ColoredDigraph &) = default;

private:
  int v_ = 0;
  bool undirected_ = false;
  std::vector<Bitset> adj_;
  std::vector<int> colors_;
};

/// Whether p preserves arcs, non-arcs, and colors of g.
bool is_automorphism(const ColoredDigraph & g, const Permutation & p);

/// m x m matrix of element subsets of a group of order n; entry (i, j) is 0-based.
class SetMatrix
{
public:
  SetMatrix(int m, int n);
  SetMatrix(int m, std::vector<ElementSet> entries);

  int m() const { return m_; }
  int group_order() const { return n_; }
  const ElementSet & entry(int i, int j) const { return entries_[index(i, j)]; }
  ElementSet & entry(int i, int j) { return entries_[index(i, j)]; }
  const std::vector<ElementSet> & entries() const { return entries_; }

  /// S_{j,i} == S_{i,j}^-1 for all i, j.
  bool is_inverse_closed(const GroupTable & G) const;
  /// Inverse-closed with every diagonal entry empty.
  bool is_skew(const GroupTable & G) const;

  friend bool operator==(const SetMatrix &, const SetMatrix &) = default;

private:
  std::size_t index(int i, int j) const { return static_cast<std::size_t>(i) * static_cast<std::size_t>(m_) + static_cast<std::size_t>(j); }

  int m_ = 0;
  int n_ = 0;
  std::vector<ElementSet> entries_;
};

/// Ordered partition of the vertices 0..v-1.
class BlockPartition
{
public:
  /// Throws PreconditionError unless blocks partition 0..vertex_count-1.
  BlockPartition(int vertex_count, std::vector<std::vector<int>> blocks);

  int vertex_count() const { return v_; }
  const std::vector<std::vector<int>> & blocks() const { return blocks_; }
  std::size_t size() const { return blocks_.size(); }

private:
  int v_ = 0;
  std::vector<std::vector<int>> blocks_;
};

/// Vertex (g, i) of an m-copy construction, i 0-based.
inline int copy_vertex(int n, Elem g, int i)
{
  return i * n + g;
}

/// Arc (g, h) iff h g^-1 in S. Undirected flag iff S is inverse-closed.
ColoredDigraph cayley_digraph(const GroupTable & G, const ElementSet & S);

/// Bipartite graph on G x {1,2}: (g,1) ~ (h,2) iff h g^-1 in S. One color.
ColoredDigraph haar_graph(const GroupTable & G, const ElementSet & S);

/// Arcs ((g,i),(sg,j)) for s in S_{i,j}. Undirected flag iff SM is inverse-closed.
ColoredDigraph m_cayley_digraph(const GroupTable & G, const SetMatrix & SM);

/// Bipartite lift: edge {(g,1),(h,2)} for every arc (g,h). Colors copied to both layers.
ColoredDigraph standard_double_cover(const ColoredDigraph & D);

/**
 * Block digraph with arc B -> C iff every vertex of B has an odd number of
 * out-neighbours in C. Throws PreconditionError when the count is not
 * constant over B for some pair (B, C).
 */
ColoredDigraph odd_quotient(const ColoredDigraph & g, const BlockPartition & blocks);

/// Right cosets C g on both Haar layers: {(Cg)_+} then {(Cg)_-}, each ordered by smallest element.
BlockPartition haar_coset_partition(const GroupTable & G, const ElementSet & C);

/// Generators R(x): (g,i) -> (gx,i) on m*n points, one per element of G's greedy generating set.
std::vector<Permutation> right_regular_action(const GroupTable & G, int m);

/// g_e -> (g^-1)_{-e} on the 2n Haar vertices. Throws PreconditionError unless G is abelian.
Permutation iota_permutation(const GroupTable & G);

/// One "u w" line per arc in lexicographic order (u <= w only, for undirected graphs), after a "#" header.
std::string to_edge_list(const ColoredDigraph & g);
std::string to_dot(const ColoredDigraph & g);

}  // namespace haar
