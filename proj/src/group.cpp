#include "haar/group.hpp"

#include "haar/error.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <queue>
#include <random>
#include <unordered_set>

namespace haar {

namespace {

constexpr int kFullAssociativityCheck = 64;

std::string index_label(int i)
{
  return std::to_string(i);
}

}  // namespace

// --- GroupTable -----------------------------------------------------------

GroupTable::GroupTable(std::string name, int order, std::vector<std::uint16_t> table, std::vector<std::string> labels)
    : n_(order), name_(std::move(name)), mul_(std::move(table)), labels_(std::move(labels))
{
  if (n_ < 1)
    throw PreconditionError("group order must be positive");
  if (n_ > kMaxGroupOrder)
    throw CapExceeded("group order " + std::to_string(n_) + " exceeds " + std::to_string(kMaxGroupOrder));
  const auto n = static_cast<std::size_t>(n_);
  if (mul_.size() != n * n)
    throw PreconditionError("multiplication table must have n*n entries");
  for (auto v : mul_)
    if (v >= n)
      throw PreconditionError("multiplication table entry out of range");

  // Latin square.
  std::vector<char> seen(n);
  for (std::size_t a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t b = 0; b < n; ++b)
      if (seen[mul_[a * n + b]]++)
        throw PreconditionError(name_ + ": multiplication table row " + std::to_string(a) + " is not a permutation");
  }
  for (std::size_t b = 0; b < n; ++b) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t a = 0; a < n; ++a)
      if (seen[mul_[a * n + b]]++)
        throw PreconditionError(name_ + ": multiplication table column " + std::to_string(b) + " is not a permutation");
  }

  for (Elem x = 0; x < n_; ++x)
    if (mul(id, x) != x || mul(x, id) != x)
      throw PreconditionError(name_ + ": element 0 is not the identity");

  inv_.assign(n, -1);
  for (Elem x = 0; x < n_; ++x)
    for (Elem y = 0; y < n_; ++y)
      if (mul(x, y) == id) {
        inv_[static_cast<std::size_t>(x)] = y;
        break;
      }
  for (Elem x = 0; x < n_; ++x)
    if (mul(inv(x), x) != id || inv(inv(x)) != x)
      throw PreconditionError(name_ + ": inverse table inconsistent at " + std::to_string(x));

  auto assoc = [&](Elem a, Elem b, Elem c) {
    if (mul(mul(a, b), c) != mul(a, mul(b, c)))
      throw PreconditionError(name_ + ": associativity fails at (" + std::to_string(a) + "," + std::to_string(b) + "," +
                              std::to_string(c) + ")");
  };
  if (n_ <= kFullAssociativityCheck) {
    for (Elem a = 0; a < n_; ++a)
      for (Elem b = 0; b < n_; ++b)
        for (Elem c = 0; c < n_; ++c)
          assoc(a, b, c);
  } else {
    std::mt19937_64 rng(0x9E3779B97F4A7C15ULL ^ n);
    std::uniform_int_distribution<Elem> pick(0, n_ - 1);
    for (std::size_t t = 0; t < 10 * n * n; ++t)
      assoc(pick(rng), pick(rng), pick(rng));
  }

  if (labels_.empty())
    for (int i = 0; i < n_; ++i)
      labels_.push_back(index_label(i));
  if (labels_.size() != n)
    throw PreconditionError("label count does not match group order");
}

Elem GroupTable::pow(Elem a, long long k) const
{
  if (k < 0) {
    a = inv(a);
    k = -k;
  }
  Elem r = id;
  while (k > 0) {
    if (k & 1)
      r = mul(r, a);
    a = mul(a, a);
    k >>= 1;
  }
  return r;
}

int GroupTable::element_order(Elem a) const
{
  int k = 1;
  for (Elem x = a; x != id; x = mul(x, a))
    ++k;
  return k;
}

std::optional<Elem> GroupTable::find_label(std::string_view label) const
{
  for (int i = 0; i < n_; ++i)
    if (labels_[static_cast<std::size_t>(i)] == label)
      return i;
  return std::nullopt;
}

ElementSet GroupTable::set_of(std::initializer_list<Elem> elems) const
{
  return ElementSet::from_indices(static_cast<std::size_t>(n_), std::vector<int>(elems));
}

ElementSet GroupTable::inverse_of(const ElementSet & s) const
{
  ElementSet r(static_cast<std::size_t>(n_));
  s.for_each([&](std::size_t x) { r.set(static_cast<std::size_t>(inv(static_cast<Elem>(x)))); });
  return r;
}

ElementSet GroupTable::order_le2(const ElementSet & s) const
{
  ElementSet r(static_cast<std::size_t>(n_));
  s.for_each([&](std::size_t x) {
    if (mul(static_cast<Elem>(x), static_cast<Elem>(x)) == id)
      r.set(x);
  });
  return r;
}

bool GroupTable::is_subgroup(const ElementSet & s) const
{
  if (s.size() != static_cast<std::size_t>(n_) || !s.test(id))
    return false;
  const auto elems = s.indices();
  for (Elem a : elems) {
    if (!s.test(static_cast<std::size_t>(inv(a))))
      return false;
    for (Elem b : elems)
      if (!s.test(static_cast<std::size_t>(mul(a, b))))
        return false;
  }
  return true;
}

bool GroupTable::is_normal_subgroup(const ElementSet & s) const
{
  if (!is_subgroup(s))
    return false;
  const auto elems = s.indices();
  for (Elem g = 0; g < n_; ++g)
    for (Elem h : elems)
      if (!s.test(static_cast<std::size_t>(conj(h, g))))
        return false;
  return true;
}

ElementSet GroupTable::closure(std::span<const Elem> gens) const
{
  ElementSet s(static_cast<std::size_t>(n_));
  std::vector<Elem> queue{id};
  s.set(id);
  for (std::size_t k = 0; k < queue.size(); ++k)
    for (Elem g : gens) {
      Elem h = mul(queue[k], g);
      if (!s.test(static_cast<std::size_t>(h))) {
        s.set(static_cast<std::size_t>(h));
        queue.push_back(h);
      }
    }
  return s;
}

std::vector<Elem> GroupTable::generating_set() const
{
  std::vector<Elem> gens;
  ElementSet cur = closure(gens);
  for (Elem g = 1; g < n_; ++g) {
    if (cur.test(static_cast<std::size_t>(g)))
      continue;
    gens.push_back(g);
    cur = closure(gens);
  }
  return gens;
}

ElementSet GroupTable::right_coset(const ElementSet & H, Elem g) const
{
  ElementSet r(static_cast<std::size_t>(n_));
  H.for_each([&](std::size_t h) { r.set(static_cast<std::size_t>(mul(static_cast<Elem>(h), g))); });
  return r;
}

bool GroupTable::is_abelian() const
{
  for (Elem a = 0; a < n_; ++a)
    for (Elem b = a + 1; b < n_; ++b)
      if (mul(a, b) != mul(b, a))
        return false;
  return true;
}

int GroupTable::exponent() const
{
  long long e = 1;
  for (Elem a = 0; a < n_; ++a)
    e = std::lcm(e, static_cast<long long>(element_order(a)));
  return static_cast<int>(e);
}

// --- Catalog constructors ---------------------------------------------------

namespace {

template <typename F>
std::vector<std::uint16_t> table_from(int n, F && f)
{
  std::vector<std::uint16_t> mul(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      mul[static_cast<std::size_t>(a) * static_cast<std::size_t>(n) + static_cast<std::size_t>(b)] =
          static_cast<std::uint16_t>(f(a, b));
  return mul;
}

void check_order(long long n)
{
  if (n > kMaxGroupOrder)
    throw CapExceeded("group order " + std::to_string(n) + " exceeds " + std::to_string(kMaxGroupOrder));
}

std::string perm_label(const std::vector<int> & p)
{
  // Cycle notation on points 1..d.
  std::string s;
  std::vector<char> seen(p.size(), 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == static_cast<int>(i))
      continue;
    s += '(';
    for (std::size_t x = i; !seen[x]; x = static_cast<std::size_t>(p[x])) {
      seen[x] = 1;
      if (s.back() != '(')
        s += ' ';
      s += std::to_string(x + 1);
    }
    s += ')';
  }
  return s.empty() ? "()" : s;
}

GroupTable permutation_group_table(std::string name, int degree, bool even_only)
{
  if (degree < 1 || degree > 7)
    throw PreconditionError("symmetric/alternating degree must be in 1..7");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(static_cast<std::size_t>(degree));
  std::iota(p.begin(), p.end(), 0);
  do {
    if (even_only) {
      int inversions = 0;
      for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
          inversions += p[i] > p[j];
      if (inversions % 2)
        continue;
    }
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  std::vector<int> code(1);
  auto encode = [&](const std::vector<int> & q) {
    int c = 0;
    for (int x : q)
      c = c * degree + x;
    return c;
  };
  int span = 1;
  for (int i = 0; i < degree; ++i)
    span *= degree;
  code.assign(static_cast<std::size_t>(span), -1);
  for (std::size_t i = 0; i < perms.size(); ++i)
    code[static_cast<std::size_t>(encode(perms[i]))] = static_cast<int>(i);

  const int n = static_cast<int>(perms.size());
  // Right action: a*b applies a first, then b.
  auto mul = table_from(n, [&](int a, int b) {
    std::vector<int> r(static_cast<std::size_t>(degree));
    for (int x = 0; x < degree; ++x)
      r[static_cast<std::size_t>(x)] = perms[static_cast<std::size_t>(b)][static_cast<std::size_t>(perms[static_cast<std::size_t>(a)][static_cast<std::size_t>(x)])];
    return code[static_cast<std::size_t>(encode(r))];
  });
  std::vector<std::string> labels;
  for (const auto & q : perms)
    labels.push_back(perm_label(q));
  return GroupTable(std::move(name), n, std::move(mul), std::move(labels));
}

}  // namespace

GroupTable cyclic_group(int n)
{
  if (n < 1)
    throw PreconditionError("cyclic group order must be positive");
  check_order(n);
  return GroupTable("C" + std::to_string(n), n, table_from(n, [&](int a, int b) { return (a + b) % n; }));
}

GroupTable elementary_abelian_group(int rank)
{
  if (rank < 0 || rank > 12)
    throw CapExceeded("elementary abelian rank must be in 0..12");
  const int n = 1 << rank;
  return GroupTable("C2^" + std::to_string(rank), n, table_from(n, [](int a, int b) { return a ^ b; }));
}

GroupTable dihedral_group(int n)
{
  if (n < 1)
    throw PreconditionError("dihedral parameter must be positive");
  check_order(2LL * n);
  // r^k has index k; s r^k has index n + k.
  auto mul = table_from(2 * n, [&](int a, int b) {
    int ra = a % n, sa = a / n, rb = b % n, sb = b / n;
    int r = sb ? ((rb - ra) % n + n) % n : (ra + rb) % n;
    return (sa ^ sb) * n + r;
  });
  std::vector<std::string> labels;
  for (int s = 0; s < 2; ++s)
    for (int k = 0; k < n; ++k) {
      std::string l = s ? "s" : "";
      if (k == 1)
        l += "r";
      else if (k > 1)
        l += "r^" + std::to_string(k);
      labels.push_back(l.empty() ? "1" : l);
    }
  return GroupTable("D" + std::to_string(n), 2 * n, std::move(mul), std::move(labels));
}

GroupTable quaternion_group()
{
  // Index 2*u + neg for unit u in {1,i,j,k}.
  static constexpr int kUnit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr int kSign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  auto mul = table_from(8, [](int a, int b) {
    int ua = a / 2, ub = b / 2;
    int neg = (a % 2) ^ (b % 2) ^ kSign[ua][ub];
    return 2 * kUnit[ua][ub] + neg;
  });
  return GroupTable("Q8", 8, std::move(mul), {"1", "-1", "i", "-i", "j", "-j", "k", "-k"});
}

GroupTable symmetric_group(int degree)
{
  return permutation_group_table("S" + std::to_string(degree), degree, false);
}

GroupTable alternating_group(int degree)
{
  return permutation_group_table("A" + std::to_string(degree), degree, true);
}

GroupTable direct_product(const GroupTable & a, const GroupTable & b)
{
  const int na = a.order(), nb = b.order();
  check_order(static_cast<long long>(na) * nb);
  auto mul = table_from(na * nb, [&](int x, int y) { return a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb); });
  std::vector<std::string> labels;
  for (int x = 0; x < na * nb; ++x)
    labels.push_back("(" + a.label(x / nb) + "," + b.label(x % nb) + ")");
  return GroupTable(a.name() + "x" + b.name(), na * nb, std::move(mul), std::move(labels));
}

GroupTable generalized_dicyclic(const GroupTable & A, Elem y)
{
  const int m = A.order();
  if (!A.is_abelian())
    throw PreconditionError("generalized dicyclic: A must be abelian");
  if (m % 2 != 0)
    throw PreconditionError("generalized dicyclic: A must have even order");
  if (A.exponent() <= 2)
    throw PreconditionError("generalized dicyclic: A must have exponent > 2");
  if (y <= 0 || y >= m || A.mul(y, y) != GroupTable::id)
    throw PreconditionError("generalized dicyclic: y must be an involution of A");
  check_order(2LL * m);
  // Element a x^e has index e*m + a; x^e b = b^{(-1)^e} x^e and x^2 = y.
  auto mul = table_from(2 * m, [&](int p, int q) {
    int a = p % m, e = p / m, b = q % m, f = q / m;
    int r = A.mul(a, e ? A.inv(b) : b);
    if (e && f)
      r = A.mul(r, y);
    return ((e + f) % 2) * m + r;
  });
  std::vector<std::string> labels;
  for (int e = 0; e < 2; ++e)
    for (int a = 0; a < m; ++a)
      labels.push_back(e ? (a == 0 ? std::string("x") : A.label(a) + "x") : A.label(a));
  return GroupTable("Dic(" + A.name() + "," + std::to_string(y) + ")", 2 * m, std::move(mul), std::move(labels));
}

// --- Parser ------------------------------------------------------------------

namespace {

int parse_int(std::string_view s, std::string_view context)
{
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw ParseError("group spec: bad integer \"" + std::string(s) + "\" in " + std::string(context));
  return v;
}

GroupTable parse_spec(std::string_view spec);

GroupTable parse_atom(std::string_view s)
{
  if (s.empty())
    throw ParseError("group spec: empty factor");
  if (s == "Q8")
    return quaternion_group();
  if (s.starts_with("Dic(")) {
    if (s.back() != ')')
      throw ParseError("group spec: unterminated Dic(...) in \"" + std::string(s) + "\"");
    std::string_view inner = s.substr(4, s.size() - 5);
    int depth = 0;
    std::size_t comma = std::string_view::npos;
    for (std::size_t i = 0; i < inner.size(); ++i) {
      if (inner[i] == '(')
        ++depth;
      else if (inner[i] == ')')
        --depth;
      else if (inner[i] == ',' && depth == 0)
        comma = i;
    }
    if (comma == std::string_view::npos)
      throw ParseError("group spec: Dic needs \"Dic(<spec>,<y>)\"");
    GroupTable A = parse_spec(inner.substr(0, comma));
    return generalized_dicyclic(A, parse_int(inner.substr(comma + 1), s));
  }
  if (s.starts_with("C2^"))
    return elementary_abelian_group(parse_int(s.substr(3), s));
  const char head = s.front();
  if (head == 'C' || head == 'D' || head == 'S' || head == 'A') {
    int k = parse_int(s.substr(1), s);
    if (k < 1)
      throw ParseError("group spec: parameter must be positive in \"" + std::string(s) + "\"");
    switch (head) {
    case 'C':
      if (k > kMaxGroupOrder)
        throw CapExceeded("group order " + std::to_string(k) + " exceeds " + std::to_string(kMaxGroupOrder));
      return cyclic_group(k);
    case 'D':
      if (2LL * k > kMaxGroupOrder)
        throw CapExceeded("group order " + std::to_string(2LL * k) + " exceeds " + std::to_string(kMaxGroupOrder));
      return dihedral_group(k);
    case 'S':
      if (k > 7)
        throw ParseError("group spec: S<n> requires n <= 7");
      return symmetric_group(k);
    default:
      if (k > 7)
        throw ParseError("group spec: A<n> requires n <= 7");
      return alternating_group(k);
    }
  }
  throw ParseError("group spec: unrecognised factor \"" + std::string(s) + "\"");
}

GroupTable parse_spec(std::string_view spec)
{
  for (char c : spec)
    if (std::isspace(static_cast<unsigned char>(c)))
      throw ParseError("group spec: whitespace is not allowed");
  std::vector<std::string_view> factors;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < spec.size(); ++i) {
    if (spec[i] == '(')
      ++depth;
    else if (spec[i] == ')')
      --depth;
    else if (spec[i] == 'x' && depth == 0) {
      factors.push_back(spec.substr(start, i - start));
      start = i + 1;
    }
    if (depth < 0)
      throw ParseError("group spec: unbalanced parentheses");
  }
  if (depth != 0)
    throw ParseError("group spec: unbalanced parentheses");
  factors.push_back(spec.substr(start));

  GroupTable g = parse_atom(factors.front());
  for (std::size_t k = 1; k < factors.size(); ++k) {
    GroupTable h = parse_atom(factors[k]);
    if (static_cast<long long>(g.order()) * h.order() > kMaxGroupOrder)
      throw CapExceeded("group order exceeds " + std::to_string(kMaxGroupOrder));
    g = direct_product(g, h);
  }
  return g;
}

}  // namespace

GroupTable make_group(std::string_view spec)
{
  GroupTable g = parse_spec(spec);
  // Display name is the spec as written.
  std::vector<std::uint16_t> mul(static_cast<std::size_t>(g.order()) * static_cast<std::size_t>(g.order()));
  for (Elem a = 0; a < g.order(); ++a)
    for (Elem b = 0; b < g.order(); ++b)
      mul[static_cast<std::size_t>(a) * static_cast<std::size_t>(g.order()) + static_cast<std::size_t>(b)] =
          static_cast<std::uint16_t>(g.mul(a, b));
  std::vector<std::string> labels;
  for (Elem a = 0; a < g.order(); ++a)
    labels.push_back(g.label(a));
  return GroupTable(std::string(spec), g.order(), std::move(mul), std::move(labels));
}

// --- Subsets, cosets, subgroups ------------------------------------------------

int c_value(const GroupTable & G, const ElementSet & S)
{
  if (!G.is_inverse_closed(S))
    throw PreconditionError("c(S) requires an inverse-closed set");
  return static_cast<int>((S.count() + G.order_le2(S).count()) / 2);
}

std::vector<ElementSet> double_cosets(const GroupTable & G, const ElementSet & H, const ElementSet & K)
{
  if (!G.is_subgroup(H) || !G.is_subgroup(K))
    throw PreconditionError("double cosets require subgroups H and K");
  const auto hs = H.indices();
  const auto ks = K.indices();
  ElementSet covered = G.empty_set();
  std::vector<ElementSet> blocks;
  for (Elem x = 0; x < G.order(); ++x) {
    if (covered.test(static_cast<std::size_t>(x)))
      continue;
    ElementSet block = G.empty_set();
    for (Elem h : hs) {
      Elem hx = G.mul(h, x);
      for (Elem k : ks)
        block.set(static_cast<std::size_t>(G.mul(hx, k)));
    }
    covered |= block;
    blocks.push_back(std::move(block));
  }
  return blocks;
}

std::vector<ElementSet> enumerate_subgroups(const GroupTable & G)
{
  if (G.order() > kSubgroupEnumerationCap)
    throw CapExceeded("subgroup enumeration is capped at order " + std::to_string(kSubgroupEnumerationCap));
  struct Node
  {
    ElementSet set;
    std::vector<Elem> gens;
  };
  std::unordered_set<ElementSet, BitsetHash> seen;
  std::vector<Node> found;
  found.push_back({G.closure({}), {}});
  seen.insert(found.front().set);
  // Every subgroup <g1,...,gr> is reached through the chain <g1> < <g1,g2> < ...
  for (std::size_t k = 0; k < found.size(); ++k) {
    for (Elem g = 1; g < G.order(); ++g) {
      if (found[k].set.test(static_cast<std::size_t>(g)))
        continue;
      std::vector<Elem> gens = found[k].gens;
      gens.push_back(g);
      ElementSet s = G.closure(gens);
      if (seen.insert(s).second)
        found.push_back({std::move(s), std::move(gens)});
    }
  }
  std::vector<ElementSet> out;
  out.reserve(found.size());
  for (auto & node : found)
    out.push_back(std::move(node.set));
  std::sort(out.begin(), out.end(), [](const ElementSet & a, const ElementSet & b) {
    if (a.count() != b.count())
      return a.count() < b.count();
    return a < b;
  });
  return out;
}

bool is_group_automorphism(const GroupTable & G, const Permutation & perm)
{
  if (perm.degree() != G.order() || perm(GroupTable::id) != GroupTable::id)
    return false;
  for (Elem a = 0; a < G.order(); ++a)
    for (Elem b = 0; b < G.order(); ++b)
      if (perm(G.mul(a, b)) != G.mul(perm(a), perm(b)))
        return false;
  return true;
}

std::vector<Permutation> automorphisms_of_group(const GroupTable & G)
{
  if (G.order() > kAutomorphismEnumerationCap)
    throw CapExceeded("group automorphism enumeration is capped at order " + std::to_string(kAutomorphismEnumerationCap));
  const int n = G.order();
  const auto gens = G.generating_set();
  std::vector<std::vector<Elem>> candidates(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (Elem y = 0; y < n; ++y)
      if (G.element_order(y) == G.element_order(gens[i]))
        candidates[i].push_back(y);

  std::vector<Permutation> out;
  std::vector<Elem> images(gens.size());
  std::vector<Elem> phi(static_cast<std::size_t>(n));
  std::vector<char> used(static_cast<std::size_t>(n));

  // Extends the generator images along a BFS over words; a consistent,
  // injective extension is a homomorphism because every edge (h, h*g_i) is checked.
  auto try_extend = [&]() -> bool {
    std::fill(phi.begin(), phi.end(), -1);
    std::fill(used.begin(), used.end(), 0);
    phi[0] = GroupTable::id;
    used[0] = 1;
    std::vector<Elem> queue{GroupTable::id};
    for (std::size_t k = 0; k < queue.size(); ++k) {
      Elem h = queue[k];
      for (std::size_t i = 0; i < gens.size(); ++i) {
        Elem hg = G.mul(h, gens[i]);
        Elem want = G.mul(phi[static_cast<std::size_t>(h)], images[i]);
        if (phi[static_cast<std::size_t>(hg)] >= 0) {
          if (phi[static_cast<std::size_t>(hg)] != want)
            return false;
          continue;
        }
        if (used[static_cast<std::size_t>(want)])
          return false;
        phi[static_cast<std::size_t>(hg)] = want;
        used[static_cast<std::size_t>(want)] = 1;
        queue.push_back(hg);
      }
    }
    return static_cast<int>(queue.size()) == n;
  };

  auto recurse = [&](auto && self, std::size_t depth) -> void {
    if (depth == gens.size()) {
      if (try_extend())
        out.emplace_back(phi);
      return;
    }
    for (Elem y : candidates[depth]) {
      images[depth] = y;
      self(self, depth + 1);
    }
  };
  recurse(recurse, 0);
  std::sort(out.begin(), out.end());
  return out;
}

// --- Classification ----------------------------------------------------------

std::vector<ElementSet> index_two_subgroups(const GroupTable & G)
{
  const int n = G.order();
  if (n % 2 != 0)
    return {};
  // Every index-2 subgroup contains the subgroup Q generated by all squares,
  // and G/Q is elementary abelian, so index-2 subgroups are the kernels of
  // nonzero linear functionals on G/Q.
  std::vector<Elem> squares;
  ElementSet sq = G.empty_set();
  for (Elem g = 0; g < n; ++g)
    sq.set(static_cast<std::size_t>(G.mul(g, g)));
  squares = sq.indices();
  ElementSet Q = G.closure(squares);

  std::vector<Elem> basis;
  std::vector<Elem> gens = squares;
  ElementSet cur = Q;
  for (Elem g = 0; g < n; ++g) {
    if (cur.test(static_cast<std::size_t>(g)))
      continue;
    basis.push_back(g);
    gens.push_back(g);
    cur = G.closure(gens);
  }
  const std::size_t r = basis.size();
  if (r == 0)
    return {};

  std::vector<int> coord(static_cast<std::size_t>(n), -1);
  std::vector<Elem> queue;
  Q.for_each([&](std::size_t q) {
    coord[q] = 0;
    queue.push_back(static_cast<Elem>(q));
  });
  for (std::size_t k = 0; k < queue.size(); ++k) {
    Elem h = queue[k];
    for (std::size_t i = 0; i < r; ++i) {
      Elem hg = G.mul(h, basis[i]);
      if (coord[static_cast<std::size_t>(hg)] < 0) {
        coord[static_cast<std::size_t>(hg)] = coord[static_cast<std::size_t>(h)] ^ (1 << i);
        queue.push_back(hg);
      }
    }
    for (Elem q : squares) {
      Elem hq = G.mul(h, q);
      if (coord[static_cast<std::size_t>(hq)] < 0) {
        coord[static_cast<std::size_t>(hq)] = coord[static_cast<std::size_t>(h)];
        queue.push_back(hq);
      }
    }
  }

  std::vector<ElementSet> out;
  for (int f = 1; f < (1 << r); ++f) {
    ElementSet A = G.empty_set();
    for (Elem g = 0; g < n; ++g)
      if (std::popcount(static_cast<unsigned>(coord[static_cast<std::size_t>(g)] & f)) % 2 == 0)
        A.set(static_cast<std::size_t>(g));
    out.push_back(std::move(A));
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::optional<DicyclicWitness> find_dicyclic_witness(const GroupTable & G)
{
  if (G.exponent() <= 2)
    return std::nullopt;
  for (const auto & A : index_two_subgroups(G)) {
    const auto as = A.indices();
    bool abelian = true;
    int exponent = 1;
    for (std::size_t p = 0; p < as.size() && abelian; ++p) {
      exponent = std::lcm(exponent, G.element_order(as[p]));
      for (std::size_t q = p + 1; q < as.size() && abelian; ++q)
        abelian = G.mul(as[p], as[q]) == G.mul(as[q], as[p]);
    }
    if (!abelian || exponent <= 2)
      continue;
    Elem x = static_cast<Elem>((~A).find_first());
    Elem y = G.mul(x, x);
    // x^2 is inverted by x, hence has order <= 2; x^2 = 1 is the generalized dihedral case.
    if (y == GroupTable::id)
      continue;
    bool inverts = std::all_of(as.begin(), as.end(), [&](Elem a) { return G.conj(a, x) == G.inv(a); });
    if (inverts)
      return DicyclicWitness{A, x, y};
  }
  return std::nullopt;
}

std::optional<Q8Witness> find_q8_witness(const GroupTable & G)
{
  const int n = G.order();
  if (n < 8 || n % 8 != 0 || (n & (n - 1)) != 0 || G.exponent() != 4)
    return std::nullopt;
  std::vector<Elem> order4;
  for (Elem g = 0; g < n; ++g)
    if (G.element_order(g) == 4)
      order4.push_back(g);
  for (Elem i : order4) {
    const Elem minus_one = G.mul(i, i);
    for (Elem j : order4) {
      if (G.mul(j, j) != minus_one || G.conj(i, j) != G.inv(i))
        continue;
      const Elem ij[] = {i, j};
      if (G.closure(ij).count() != 8)
        continue;
      // G = Q x E iff the centralizer of Q is elementary abelian of order n/4.
      ElementSet C = G.empty_set();
      bool elementary = true;
      for (Elem c = 0; c < n && elementary; ++c)
        if (G.mul(c, i) == G.mul(i, c) && G.mul(c, j) == G.mul(j, c)) {
          C.set(static_cast<std::size_t>(c));
          elementary = G.mul(c, c) == GroupTable::id;
        }
      if (!elementary || static_cast<int>(C.count()) != n / 4)
        continue;
      Q8Witness w;
      w.i = i;
      w.j = j;
      w.k = G.mul(i, j);
      std::vector<Elem> span{minus_one};
      ElementSet cur = G.closure(span);
      for (Elem c : C.indices()) {
        if (cur.test(static_cast<std::size_t>(c)))
          continue;
        w.e_basis.push_back(c);
        span.push_back(c);
        cur = G.closure(span);
      }
      w.e_elements = G.closure(w.e_basis);
      w.ell = static_cast<int>(w.e_basis.size());
      return w;
    }
  }
  return std::nullopt;
}

}  // namespace

GroupClass classify_group(const GroupTable & G)
{
  GroupClass c;
  c.is_abelian = G.is_abelian();
  c.exponent = G.exponent();
  c.is_elementary_abelian_2 = c.exponent <= 2;
  c.is_abelian_exp_gt_2 = c.is_abelian && c.exponent > 2;
  c.dicyclic = find_dicyclic_witness(G);
  c.is_generalized_dicyclic = c.dicyclic.has_value();
  if (c.is_generalized_dicyclic)
    c.q8 = find_q8_witness(G);
  c.is_q8_times_e2 = c.q8.has_value();
  return c;
}

}  // namespace haar
