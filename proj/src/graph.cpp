#include "haar/graph.hpp"

#include "haar/error.hpp"

#include <algorithm>
#include <sstream>

namespace haar {

ColoredDigraph::ColoredDigraph(int vertex_count, bool undirected)
    : v_(vertex_count), undirected_(undirected), adj_(static_cast<std::size_t>(vertex_count), Bitset(static_cast<std::size_t>(vertex_count))),
      colors_(static_cast<std::size_t>(vertex_count), 0)
{
}

std::size_t ColoredDigraph::arc_count() const
{
  std::size_t c = 0;
  for (const auto & row : adj_)
    c += row.count();
  return c;
}

bool ColoredDigraph::is_symmetric() const
{
  for (int u = 0; u < v_; ++u)
    for (int w = u + 1; w < v_; ++w)
      if (has_arc(u, w) != has_arc(w, u))
        return false;
  return true;
}

std::vector<Bitset> ColoredDigraph::in_rows() const
{
  std::vector<Bitset> in(static_cast<std::size_t>(v_), Bitset(static_cast<std::size_t>(v_)));
  for (int u = 0; u < v_; ++u)
    adj_[static_cast<std::size_t>(u)].for_each([&](std::size_t w) { in[w].set(static_cast<std::size_t>(u)); });
  return in;
}

bool is_automorphism(const ColoredDigraph & g, const Permutation & p)
{
  const int v = g.vertex_count();
  if (p.degree() != v)
    return false;
  for (int u = 0; u < v; ++u)
    if (g.color(u) != g.color(p(u)))
      return false;
  // Arc counts agree, so mapping every arc onto an arc also maps non-arcs onto non-arcs.
  for (int u = 0; u < v; ++u) {
    const Bitset & row = g.out_row(u);
    const Bitset & img_row = g.out_row(p(u));
    if (row.count() != img_row.count())
      return false;
    bool ok = true;
    row.for_each([&](std::size_t w) {
      if (ok && !img_row.test(static_cast<std::size_t>(p(static_cast<int>(w)))))
        ok = false;
    });
    if (!ok)
      return false;
  }
  return true;
}

// --- SetMatrix -------------------------------------------------------------

SetMatrix::SetMatrix(int m, int n) : m_(m), n_(n), entries_(static_cast<std::size_t>(m) * static_cast<std::size_t>(m), ElementSet(static_cast<std::size_t>(n)))
{
  if (m < 1)
    throw PreconditionError("set-matrix needs m >= 1");
}

SetMatrix::SetMatrix(int m, std::vector<ElementSet> entries) : m_(m), entries_(std::move(entries))
{
  if (m < 1 || entries_.size() != static_cast<std::size_t>(m) * static_cast<std::size_t>(m))
    throw PreconditionError("set-matrix needs m*m entries");
  n_ = static_cast<int>(entries_.front().size());
  for (const auto & e : entries_)
    if (static_cast<int>(e.size()) != n_)
      throw PreconditionError("set-matrix entries must share one universe");
}

bool SetMatrix::is_inverse_closed(const GroupTable & G) const
{
  for (int i = 0; i < m_; ++i)
    for (int j = i; j < m_; ++j)
      if (entry(j, i) != G.inverse_of(entry(i, j)))
        return false;
  return true;
}

bool SetMatrix::is_skew(const GroupTable & G) const
{
  for (int i = 0; i < m_; ++i)
    if (!entry(i, i).none())
      return false;
  return is_inverse_closed(G);
}

// --- BlockPartition --------------------------------------------------------

BlockPartition::BlockPartition(int vertex_count, std::vector<std::vector<int>> blocks) : v_(vertex_count), blocks_(std::move(blocks))
{
  std::vector<char> seen(static_cast<std::size_t>(v_), 0);
  std::size_t total = 0;
  for (const auto & b : blocks_) {
    if (b.empty())
      throw PreconditionError("partition blocks must be non-empty");
    for (int x : b) {
      if (x < 0 || x >= v_ || seen[static_cast<std::size_t>(x)])
        throw PreconditionError("blocks do not partition the vertex set");
      seen[static_cast<std::size_t>(x)] = 1;
      ++total;
    }
  }
  if (total != static_cast<std::size_t>(v_))
    throw PreconditionError("blocks do not cover the vertex set");
}

// --- Constructions ---------------------------------------------------------

ColoredDigraph cayley_digraph(const GroupTable & G, const ElementSet & S)
{
  const int n = G.order();
  ColoredDigraph d(n, G.is_inverse_closed(S));
  for (Elem g = 0; g < n; ++g)
    S.for_each([&](std::size_t s) { d.add_arc(g, G.mul(static_cast<Elem>(s), g)); });
  return d;
}

ColoredDigraph haar_graph(const GroupTable & G, const ElementSet & S)
{
  const int n = G.order();
  ColoredDigraph d(2 * n, true);
  for (Elem g = 0; g < n; ++g)
    S.for_each([&](std::size_t s) { d.add_edge(copy_vertex(n, g, 0), copy_vertex(n, G.mul(static_cast<Elem>(s), g), 1)); });
  return d;
}

ColoredDigraph m_cayley_digraph(const GroupTable & G, const SetMatrix & SM)
{
  const int n = G.order();
  const int m = SM.m();
  if (SM.group_order() != n)
    throw PreconditionError("set-matrix universe does not match the group order");
  ColoredDigraph d(m * n, SM.is_inverse_closed(G));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      SM.entry(i, j).for_each([&](std::size_t s) {
        for (Elem g = 0; g < n; ++g)
          d.add_arc(copy_vertex(n, g, i), copy_vertex(n, G.mul(static_cast<Elem>(s), g), j));
      });
  return d;
}

ColoredDigraph standard_double_cover(const ColoredDigraph & D)
{
  const int v = D.vertex_count();
  ColoredDigraph c(2 * v, true);
  for (int u = 0; u < v; ++u) {
    c.set_color(u, D.color(u));
    c.set_color(v + u, D.color(u));
    D.out_row(u).for_each([&](std::size_t w) { c.add_edge(u, v + static_cast<int>(w)); });
  }
  return c;
}

ColoredDigraph odd_quotient(const ColoredDigraph & g, const BlockPartition & partition)
{
  if (partition.vertex_count() != g.vertex_count())
    throw PreconditionError("partition size does not match the graph");
  const auto & blocks = partition.blocks();
  const int k = static_cast<int>(blocks.size());
  std::vector<Bitset> masks;
  for (const auto & b : blocks)
    masks.push_back(Bitset::from_indices(static_cast<std::size_t>(g.vertex_count()), b));

  bool equal_sizes = std::all_of(blocks.begin(), blocks.end(), [&](const auto & b) { return b.size() == blocks.front().size(); });
  ColoredDigraph q(k, g.undirected() && equal_sizes);
  for (int bi = 0; bi < k; ++bi)
    for (int ci = 0; ci < k; ++ci) {
      const auto & B = blocks[static_cast<std::size_t>(bi)];
      std::size_t e = g.out_row(B.front()).intersect_count(masks[static_cast<std::size_t>(ci)]);
      for (int u : B)
        if (g.out_row(u).intersect_count(masks[static_cast<std::size_t>(ci)]) != e)
          throw PreconditionError("odd quotient: vertices of block " + std::to_string(bi) +
                                  " have different neighbour counts in block " + std::to_string(ci));
      if (e % 2 == 1)
        q.add_arc(bi, ci);
    }
  return q;
}

BlockPartition haar_coset_partition(const GroupTable & G, const ElementSet & C)
{
  if (!G.is_subgroup(C))
    throw PreconditionError("coset partition requires a subgroup");
  const int n = G.order();
  std::vector<std::vector<int>> blocks;
  for (int layer = 0; layer < 2; ++layer) {
    ElementSet covered = G.empty_set();
    for (Elem g = 0; g < n; ++g) {
      if (covered.test(static_cast<std::size_t>(g)))
        continue;
      ElementSet coset = G.right_coset(C, g);
      covered |= coset;
      std::vector<int> block;
      coset.for_each([&](std::size_t x) { block.push_back(copy_vertex(n, static_cast<Elem>(x), layer)); });
      blocks.push_back(std::move(block));
    }
  }
  return BlockPartition(2 * n, std::move(blocks));
}

std::vector<Permutation> right_regular_action(const GroupTable & G, int m)
{
  if (m < 1)
    throw PreconditionError("right regular action needs m >= 1");
  const int n = G.order();
  std::vector<Permutation> gens;
  for (Elem x : G.generating_set()) {
    std::vector<int> img(static_cast<std::size_t>(m * n));
    for (int i = 0; i < m; ++i)
      for (Elem g = 0; g < n; ++g)
        img[static_cast<std::size_t>(copy_vertex(n, g, i))] = copy_vertex(n, G.mul(g, x), i);
    gens.emplace_back(std::move(img));
  }
  return gens;
}

Permutation iota_permutation(const GroupTable & G)
{
  if (!G.is_abelian())
    throw PreconditionError("iota is only an automorphism of Haar graphs of abelian groups");
  const int n = G.order();
  std::vector<int> img(static_cast<std::size_t>(2 * n));
  for (Elem g = 0; g < n; ++g) {
    img[static_cast<std::size_t>(copy_vertex(n, g, 0))] = copy_vertex(n, G.inv(g), 1);
    img[static_cast<std::size_t>(copy_vertex(n, g, 1))] = copy_vertex(n, G.inv(g), 0);
  }
  return Permutation(std::move(img));
}

// --- Emission --------------------------------------------------------------

std::string to_edge_list(const ColoredDigraph & g)
{
  std::ostringstream out;
  std::ostringstream body;
  std::size_t count = 0;
  for (int u = 0; u < g.vertex_count(); ++u)
    g.out_row(u).for_each([&](std::size_t w) {
      if (g.undirected() && static_cast<int>(w) < u)
        return;
      body << u << ' ' << w << '\n';
      ++count;
    });
  out << "# vertices " << g.vertex_count() << (g.undirected() ? " edges " : " arcs ") << count
      << (g.undirected() ? " undirected" : " directed") << '\n'
      << body.str();
  return out.str();
}

std::string to_dot(const ColoredDigraph & g)
{
  std::ostringstream out;
  const bool und = g.undirected();
  out << (und ? "graph" : "digraph") << " G {\n";
  for (int u = 0; u < g.vertex_count(); ++u)
    out << "  " << u << " [color_class=" << g.color(u) << "];\n";
  for (int u = 0; u < g.vertex_count(); ++u)
    g.out_row(u).for_each([&](std::size_t w) {
      if (und && static_cast<int>(w) < u)
        return;
      out << "  " << u << (und ? " -- " : " -> ") << w << ";\n";
    });
  out << "}\n";
  return out.str();
}

}  // namespace haar
