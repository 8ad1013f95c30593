#include "haar/perm.hpp"

#include "haar/error.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace haar {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images))
{
  std::vector<char> seen(images_.size(), 0);
  for (int x : images_) {
    if (x < 0 || static_cast<std::size_t>(x) >= images_.size() || seen[static_cast<std::size_t>(x)])
      throw PreconditionError("permutation images do not form a bijection");
    seen[static_cast<std::size_t>(x)] = 1;
  }
}

Permutation Permutation::identity(int degree)
{
  std::vector<int> img(static_cast<std::size_t>(degree));
  std::iota(img.begin(), img.end(), 0);
  Permutation p;
  p.images_ = std::move(img);
  return p;
}

Permutation Permutation::from_cycles(int degree, std::string_view text)
{
  std::vector<int> img(static_cast<std::size_t>(degree));
  std::iota(img.begin(), img.end(), 0);
  std::vector<char> used(static_cast<std::size_t>(degree), 0);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(')
      throw ParseError("cycle notation: expected '(' in \"" + std::string(text) + "\"");
    ++i;
    std::vector<int> cycle;
    while (true) {
      skip_ws();
      if (i >= text.size())
        throw ParseError("cycle notation: unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (text[i] == ',') {
        ++i;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw ParseError("cycle notation: bad character '" + std::string(1, text[i]) + "'");
      int v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        v = v * 10 + (text[i++] - '0');
      if (v >= degree)
        throw ParseError("cycle notation: point " + std::to_string(v) + " exceeds degree " + std::to_string(degree));
      if (used[static_cast<std::size_t>(v)])
        throw ParseError("cycle notation: point " + std::to_string(v) + " repeated");
      used[static_cast<std::size_t>(v)] = 1;
      cycle.push_back(v);
    }
    for (std::size_t k = 0; k < cycle.size(); ++k)
      img[static_cast<std::size_t>(cycle[k])] = cycle[(k + 1) % cycle.size()];
    skip_ws();
  }
  return Permutation(std::move(img));
}

bool Permutation::is_identity() const
{
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != static_cast<int>(i))
      return false;
  return true;
}

Permutation Permutation::inverse() const
{
  Permutation r;
  r.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    r.images_[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
  return r;
}

std::vector<int> Permutation::fixed_points() const
{
  std::vector<int> out;
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] == static_cast<int>(i))
      out.push_back(static_cast<int>(i));
  return out;
}

std::vector<std::vector<int>> Permutation::cycles() const
{
  std::vector<std::vector<int>> out;
  std::vector<char> seen(images_.size(), 0);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start])
      continue;
    std::vector<int> cyc;
    for (int x = static_cast<int>(start); !seen[static_cast<std::size_t>(x)]; x = images_[static_cast<std::size_t>(x)]) {
      seen[static_cast<std::size_t>(x)] = 1;
      cyc.push_back(x);
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

int Permutation::cycle_count() const
{
  int count = 0;
  std::vector<char> seen(images_.size(), 0);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start])
      continue;
    ++count;
    for (std::size_t x = start; !seen[x]; x = static_cast<std::size_t>(images_[x]))
      seen[x] = 1;
  }
  return count;
}

std::string Permutation::to_cycles() const
{
  std::ostringstream out;
  for (const auto & cyc : cycles()) {
    if (cyc.size() < 2)
      continue;
    out << '(';
    for (std::size_t k = 0; k < cyc.size(); ++k)
      out << (k ? " " : "") << cyc[k];
    out << ')';
  }
  std::string s = out.str();
  return s.empty() ? "()" : s;
}

Permutation operator*(const Permutation & a, const Permutation & b)
{
  Permutation r;
  r.images_.resize(a.images_.size());
  for (std::size_t i = 0; i < a.images_.size(); ++i)
    r.images_[i] = b.images_[static_cast<std::size_t>(a.images_[i])];
  return r;
}

std::size_t PermutationHash::operator()(const Permutation & p) const
{
  std::size_t h = 1469598103934665603ULL;
  for (int x : p.images()) {
    h ^= static_cast<std::size_t>(x);
    h *= 1099511628211ULL;
  }
  return h;
}

int orbit_count_of_cycle(const Permutation & p)
{
  return p.cycle_count();
}

// --- PermGroup ------------------------------------------------------------

namespace {

int first_moved_point(const Permutation & p)
{
  for (int i = 0; i < p.degree(); ++i)
    if (p(i) != i)
      return i;
  return -1;
}

}  // namespace

void PermGroup::rebuild_level(std::size_t level)
{
  Level & L = levels_[level];
  L.orbit.clear();
  L.transversal.clear();
  L.transversal_inv.clear();
  L.slot.assign(static_cast<std::size_t>(degree_), -1);

  // Strong generators fixing every earlier base point.
  std::vector<const Permutation *> gens;
  for (const auto & s : strong_) {
    bool fixes = true;
    for (std::size_t j = 0; j < level && fixes; ++j)
      fixes = s(base_[j]) == base_[j];
    if (fixes)
      gens.push_back(&s);
  }

  L.orbit.push_back(L.base_point);
  L.slot[static_cast<std::size_t>(L.base_point)] = 0;
  L.transversal.push_back(Permutation::identity(degree_));
  L.transversal_inv.push_back(Permutation::identity(degree_));
  for (std::size_t k = 0; k < L.orbit.size(); ++k) {
    int beta = L.orbit[k];
    for (const Permutation * g : gens) {
      int img = (*g)(beta);
      if (L.slot[static_cast<std::size_t>(img)] >= 0)
        continue;
      L.slot[static_cast<std::size_t>(img)] = static_cast<int>(L.orbit.size());
      L.orbit.push_back(img);
      Permutation u = L.transversal[k] * (*g);
      L.transversal_inv.push_back(u.inverse());
      L.transversal.push_back(std::move(u));
    }
  }
}

std::pair<Permutation, std::size_t> PermGroup::sift(Permutation p, std::size_t from_level) const
{
  for (std::size_t j = from_level; j < levels_.size(); ++j) {
    const Level & L = levels_[j];
    int beta = p(L.base_point);
    int s = L.slot[static_cast<std::size_t>(beta)];
    if (s < 0)
      return {std::move(p), j};
    p = p * L.transversal_inv[static_cast<std::size_t>(s)];
  }
  return {std::move(p), levels_.size()};
}

PermGroup PermGroup::from_generators(std::vector<Permutation> generators, int degree)
{
  for (const auto & g : generators)
    if (g.degree() != degree)
      throw PreconditionError("generator of degree " + std::to_string(g.degree()) + " in a group of degree " +
                              std::to_string(degree));

  PermGroup G;
  G.degree_ = degree;
  G.generators_ = std::move(generators);

  for (const auto & g : G.generators_) {
    if (g.is_identity())
      continue;
    G.strong_.push_back(g);
    bool fixes_base = std::all_of(G.base_.begin(), G.base_.end(), [&](int b) { return g(b) == b; });
    if (fixes_base) {
      G.base_.push_back(first_moved_point(g));
      G.levels_.push_back(Level{G.base_.back(), {}, {}, {}, {}});
    }
  }
  for (std::size_t i = 0; i < G.levels_.size(); ++i)
    G.rebuild_level(i);

  std::size_t i = G.levels_.size();
  while (i-- > 0) {
    bool complete = true;
    // Snapshot: rebuilding levels invalidates references.
    const std::vector<int> orbit = G.levels_[i].orbit;
    std::vector<Permutation> gens;
    for (const auto & s : G.strong_) {
      bool fixes = true;
      for (std::size_t j = 0; j < i && fixes; ++j)
        fixes = s(G.base_[j]) == G.base_[j];
      if (fixes)
        gens.push_back(s);
    }
    for (std::size_t k = 0; k < orbit.size() && complete; ++k) {
      for (const auto & x : gens) {
        const Level & L = G.levels_[i];
        const Permutation & u_beta = L.transversal[static_cast<std::size_t>(L.slot[static_cast<std::size_t>(orbit[k])])];
        int beta_x = x(orbit[k]);
        const Permutation & u_inv = L.transversal_inv[static_cast<std::size_t>(L.slot[static_cast<std::size_t>(beta_x)])];
        Permutation h = u_beta * x * u_inv;
        if (h.is_identity())
          continue;
        auto [residue, j] = G.sift(std::move(h), i + 1);
        if (j == G.levels_.size() && residue.is_identity())
          continue;
        complete = false;
        if (j == G.levels_.size()) {
          G.base_.push_back(first_moved_point(residue));
          G.levels_.push_back(Level{G.base_.back(), {}, {}, {}, {}});
        }
        G.strong_.push_back(std::move(residue));
        for (std::size_t l = i + 1; l <= j; ++l)
          G.rebuild_level(l);
        // Resume at level j; the loop decrement is undone here.
        i = j + 1;
        break;
      }
    }
  }

  G.order_ = 1;
  for (const auto & L : G.levels_)
    G.order_ *= L.orbit.size();
  return G;
}

bool PermGroup::contains(const Permutation & p) const
{
  if (p.degree() != degree_)
    return false;
  auto [residue, j] = sift(p, 0);
  return j == levels_.size() && residue.is_identity();
}

std::vector<std::vector<int>> PermGroup::orbits() const
{
  std::vector<int> parent(static_cast<std::size_t>(degree_));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  for (const auto & g : generators_)
    for (int x = 0; x < degree_; ++x) {
      int a = find(x), b = find(g(x));
      if (a != b)
        parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    }
  std::vector<std::vector<int>> blocks;
  std::vector<int> block_of(static_cast<std::size_t>(degree_), -1);
  for (int x = 0; x < degree_; ++x) {
    int r = find(x);
    if (block_of[static_cast<std::size_t>(r)] < 0) {
      block_of[static_cast<std::size_t>(r)] = static_cast<int>(blocks.size());
      blocks.emplace_back();
    }
    blocks[static_cast<std::size_t>(block_of[static_cast<std::size_t>(r)])].push_back(x);
  }
  return blocks;
}

bool PermGroup::is_semiregular() const
{
  for (const auto & orb : orbits())
    if (BigNat(orb.size()) != order_)
      return false;
  return true;
}

std::vector<Permutation> PermGroup::elements(std::size_t cap) const
{
  if (order_ > cap)
    throw CapExceeded("group of order " + order_.str() + " exceeds element enumeration cap " + std::to_string(cap));
  std::vector<Permutation> out{Permutation::identity(degree_)};
  // Every element factors uniquely as u_k * ... * u_1 over the transversals.
  for (std::size_t level = levels_.size(); level-- > 0;) {
    std::vector<Permutation> next;
    next.reserve(out.size() * levels_[level].transversal.size());
    for (const auto & g : out)
      for (const auto & u : levels_[level].transversal)
        next.push_back(g * u);
    out = std::move(next);
  }
  return out;
}

}  // namespace haar
