#include "haar/autgroup.hpp"

#include "haar/error.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>

namespace haar {

namespace {

/// Ordered partition: cell index per vertex, cells numbered 0..cells-1.
struct Partition
{
  std::vector<int> cell;
  int cells = 0;
  std::uint64_t invariant = 0;

  bool discrete(int v) const { return cells == v; }
};

std::uint64_t mix(std::uint64_t h, std::uint64_t x)
{
  h ^= x + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
  h *= 0xBF58476D1CE4E5B9ULL;
  return h ^ (h >> 31);
}

class Refiner
{
public:
  explicit Refiner(const ColoredDigraph & g) : g_(g), v_(g.vertex_count()), directed_(!g.is_symmetric())
  {
    out_ = g.rows();
    if (directed_)
      in_ = g.in_rows();
  }

  int vertex_count() const { return v_; }

  /// Refines p to the coarsest equitable partition below it and stores its invariant.
  void refine(Partition & p) const
  {
    const auto v = static_cast<std::size_t>(v_);
    std::vector<int> order(v);
    std::vector<std::vector<int>> sig(v);
    std::vector<Bitset> masks;
    while (true) {
      const auto k = static_cast<std::size_t>(p.cells);
      masks.assign(k, Bitset(v));
      for (std::size_t u = 0; u < v; ++u)
        masks[static_cast<std::size_t>(p.cell[u])].set(u);
      for (std::size_t u = 0; u < v; ++u) {
        auto & s = sig[u];
        s.assign(1 + (directed_ ? 2 : 1) * k, 0);
        s[0] = p.cell[u];
        for (std::size_t c = 0; c < k; ++c)
          s[1 + c] = static_cast<int>(out_[u].intersect_count(masks[c]));
        if (directed_)
          for (std::size_t c = 0; c < k; ++c)
            s[1 + k + c] = static_cast<int>(in_[u].intersect_count(masks[c]));
      }
      std::iota(order.begin(), order.end(), 0);
      std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return sig[static_cast<std::size_t>(a)] < sig[static_cast<std::size_t>(b)]; });
      int next = 0;
      std::vector<int> cell(v);
      for (std::size_t r = 0; r < v; ++r) {
        if (r > 0 && sig[static_cast<std::size_t>(order[r])] != sig[static_cast<std::size_t>(order[r - 1])])
          ++next;
        cell[static_cast<std::size_t>(order[r])] = next;
      }
      const int new_cells = v ? next + 1 : 0;
      p.cell = std::move(cell);
      if (new_cells == p.cells) {
        // Equitable: the quotient matrix is an isomorphism invariant of the node.
        std::uint64_t h = mix(0, k);
        std::vector<int> rep(k, -1);
        std::vector<int> size(k, 0);
        for (std::size_t u = 0; u < v; ++u) {
          auto c = static_cast<std::size_t>(p.cell[u]);
          ++size[c];
          if (rep[c] < 0)
            rep[c] = static_cast<int>(u);
        }
        for (std::size_t c = 0; c < k; ++c) {
          h = mix(h, static_cast<std::uint64_t>(size[c]));
          const auto & s = sig[static_cast<std::size_t>(rep[c])];
          for (std::size_t t = 1; t < s.size(); ++t)
            h = mix(h, static_cast<std::uint64_t>(s[t]));
        }
        p.invariant = h;
        return;
      }
      p.cells = new_cells;
    }
  }

  /// Splits vertex w off the front of its cell and refines.
  Partition individualize(const Partition & p, int w) const
  {
    Partition q;
    q.cells = p.cells + 1;
    q.cell.resize(p.cell.size());
    const int cw = p.cell[static_cast<std::size_t>(w)];
    for (std::size_t u = 0; u < p.cell.size(); ++u) {
      int c = p.cell[u];
      q.cell[u] = (c < cw || static_cast<int>(u) == w) ? c : c + 1;
    }
    refine(q);
    return q;
  }

  /// First cell of minimum size > 1, or -1 when discrete.
  int target_cell(const Partition & p) const
  {
    std::vector<int> size(static_cast<std::size_t>(p.cells), 0);
    for (int c : p.cell)
      ++size[static_cast<std::size_t>(c)];
    int best = -1;
    for (int c = 0; c < p.cells; ++c)
      if (size[static_cast<std::size_t>(c)] > 1 && (best < 0 || size[static_cast<std::size_t>(c)] < size[static_cast<std::size_t>(best)]))
        best = c;
    return best;
  }

  std::vector<int> cell_members(const Partition & p, int c) const
  {
    std::vector<int> out;
    for (int u = 0; u < v_; ++u)
      if (p.cell[static_cast<std::size_t>(u)] == c)
        out.push_back(u);
    return out;
  }

  const ColoredDigraph & graph() const { return g_; }

private:
  const ColoredDigraph & g_;
  int v_;
  bool directed_;
  std::vector<Bitset> out_;
  std::vector<Bitset> in_;
};

/// Orbit of point under the group generated by gens.
std::vector<char> orbit_of(int point, const std::vector<Permutation> & gens, int degree)
{
  std::vector<char> in(static_cast<std::size_t>(degree), 0);
  std::vector<int> queue{point};
  in[static_cast<std::size_t>(point)] = 1;
  for (std::size_t k = 0; k < queue.size(); ++k)
    for (const auto & g : gens) {
      int y = g(queue[k]);
      if (!in[static_cast<std::size_t>(y)]) {
        in[static_cast<std::size_t>(y)] = 1;
        queue.push_back(y);
      }
    }
  return in;
}

class Search
{
public:
  explicit Search(const ColoredDigraph & g) : refiner_(g), v_(g.vertex_count()) {}

  AutSearchResult run()
  {
    AutSearchResult result;
    Partition root = initial_partition(result.trace.initial_coloring);
    refiner_.refine(root);

    path_.push_back(root);
    while (!path_.back().discrete(v_)) {
      const Partition & node = path_.back();
      int c = refiner_.target_cell(node);
      int w = refiner_.cell_members(node, c).front();
      result.trace.decisions.emplace_back(c, w);
      result.base.push_back(w);
      targets_.push_back(c);
      path_.push_back(refiner_.individualize(node, w));
    }
    first_leaf_ = labeling(path_.back());

    const std::size_t depth = result.base.size();
    result.basic_orbit_lengths.assign(depth, 1);
    for (std::size_t level = depth; level-- > 0;) {
      const int base_point = result.base[level];
      auto orbit = orbit_of(base_point, generators_, v_);
      for (int w : refiner_.cell_members(path_[level], targets_[level])) {
        if (orbit[static_cast<std::size_t>(w)])
          continue;
        Partition child = refiner_.individualize(path_[level], w);
        if (child.invariant != path_[level + 1].invariant)
          continue;
        if (auto found = find_automorphism(child, level + 1)) {
          generators_.push_back(std::move(*found));
          orbit = orbit_of(base_point, generators_, v_);
        }
      }
      result.basic_orbit_lengths[level] = static_cast<std::size_t>(std::count(orbit.begin(), orbit.end(), 1));
    }
    result.order = 1;
    for (std::size_t len : result.basic_orbit_lengths)
      result.order *= len;
    result.trace.generators = generators_;
    return result;
  }

private:
  Partition initial_partition(std::vector<int> & initial) const
  {
    const auto & colors = refiner_.graph().colors();
    std::vector<int> distinct(colors.begin(), colors.end());
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    Partition p;
    p.cells = static_cast<int>(distinct.size());
    p.cell.resize(colors.size());
    for (std::size_t u = 0; u < colors.size(); ++u)
      p.cell[u] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), colors[u]) - distinct.begin());
    initial = p.cell;
    return p;
  }

  std::vector<int> labeling(const Partition & leaf) const
  {
    std::vector<int> lab(static_cast<std::size_t>(v_));
    for (int u = 0; u < v_; ++u)
      lab[static_cast<std::size_t>(leaf.cell[static_cast<std::size_t>(u)])] = u;
    return lab;
  }

  /// Depth-first search below node for a leaf equivalent to the first leaf.
  std::optional<Permutation> find_automorphism(const Partition & node, std::size_t level)
  {
    if (node.discrete(v_)) {
      auto lab = labeling(node);
      std::vector<int> img(static_cast<std::size_t>(v_));
      for (int c = 0; c < v_; ++c)
        img[static_cast<std::size_t>(first_leaf_[static_cast<std::size_t>(c)])] = lab[static_cast<std::size_t>(c)];
      Permutation p(std::move(img));
      if (is_automorphism(refiner_.graph(), p))
        return p;
      return std::nullopt;
    }
    if (level >= targets_.size())
      return std::nullopt;
    int c = refiner_.target_cell(node);
    if (c != targets_[level])
      return std::nullopt;
    for (int w : refiner_.cell_members(node, c)) {
      Partition child = refiner_.individualize(node, w);
      if (child.invariant != path_[level + 1].invariant)
        continue;
      if (auto found = find_automorphism(child, level + 1))
        return found;
    }
    return std::nullopt;
  }

  Refiner refiner_;
  int v_;
  std::vector<Partition> path_;
  std::vector<int> targets_;
  std::vector<int> first_leaf_;
  std::vector<Permutation> generators_;
};

}  // namespace

AutSearchResult search_automorphisms(const ColoredDigraph & g)
{
  if (g.vertex_count() < 1)
    throw PreconditionError("automorphism search needs at least one vertex");
  return Search(g).run();
}

BigNat automorphism_order(const ColoredDigraph & g)
{
  return search_automorphisms(g).order;
}

PermGroup automorphism_group(const ColoredDigraph & g)
{
  auto result = search_automorphisms(g);
  return PermGroup::from_generators(std::move(result.trace.generators), g.vertex_count());
}

ColoredDigraph colored_haar_graph(const GroupTable & G, const ElementSet & S)
{
  ColoredDigraph h = haar_graph(G, S);
  for (Elem g = 0; g < G.order(); ++g)
    h.set_color(copy_vertex(G.order(), g, 1), 1);
  return h;
}

PermGroup aut_plus_haar(const GroupTable & G, const ElementSet & S)
{
  return automorphism_group(colored_haar_graph(G, S));
}

bool is_drr(const GroupTable & G, const ElementSet & S)
{
  return automorphism_order(cayley_digraph(G, S)) == G.order();
}

bool is_grr(const GroupTable & G, const ElementSet & S)
{
  if (!G.is_inverse_closed(S))
    throw PreconditionError("GRR test requires an inverse-closed connection set");
  return is_drr(G, S);
}

bool is_hgr(const GroupTable & G, const ElementSet & S)
{
  return automorphism_order(haar_graph(G, S)) == G.order();
}

bool is_haar_optimal_abelian(const GroupTable & G, const ElementSet & S)
{
  if (!G.is_abelian())
    throw PreconditionError("Haar optimality test is defined for abelian groups");
  return automorphism_order(colored_haar_graph(G, S)) == G.order();
}

bool is_msr(const GroupTable & G, const SetMatrix & SM, MsrKind kind)
{
  if (kind == MsrKind::graph && !SM.is_inverse_closed(G))
    throw PreconditionError("GmSR test requires an inverse-closed set-matrix");
  if (kind == MsrKind::skew && !SM.is_skew(G))
    throw PreconditionError("m-PGSR test requires a skew set-matrix");
  return automorphism_order(m_cayley_digraph(G, SM)) == G.order();
}

}  // namespace haar
