#pragma once

#include "haar/bitset.hpp"
#include "haar/perm.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace haar {

/// Element of a GroupTable, identified by its dense index.
using Elem = int;

/// Subset of a group's elements as a bitmask over element indices.
using ElementSet = Bitset;

inline constexpr int kMaxGroupOrder = 4096;
inline constexpr int kSubgroupEnumerationCap = 64;
inline constexpr int kAutomorphismEnumerationCap = 24;

/**
 * A finite group as a full multiplication table over indices 0..n-1.
 *
 * Index 0 is always the identity. The constructor verifies the group axioms:
 * Latin square, two-sided identity at 0, inverses, and associativity (every
 * triple for n <= 64, 10*n^2 pseudo-random triples beyond).
 */
class GroupTable
{
public:
  static constexpr Elem id = 0;

  /// mul is row-major: mul[a*n + b] == a*b. Throws PreconditionError when an axiom fails.
  GroupTable(std::string name, int order, std::vector<std::uint16_t> mul, std::vector<std::string> labels = {});

  int order() const { return n_; }
  const std::string & name() const { return name_; }

  Elem mul(Elem a, Elem b) const { return mul_[static_cast<std::size_t>(a) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(b)]; }
  Elem inv(Elem a) const { return inv_[static_cast<std::size_t>(a)]; }
  Elem pow(Elem a, long long k) const;
  Elem conj(Elem a, Elem x) const { return mul(mul(inv(x), a), x); }  // x^-1 a x
  int element_order(Elem a) const;

  const std::string & label(Elem a) const { return labels_[static_cast<std::size_t>(a)]; }
  std::optional<Elem> find_label(std::string_view label) const;

  ElementSet empty_set() const { return ElementSet(static_cast<std::size_t>(n_)); }
  ElementSet full_set() const { return ElementSet::full(static_cast<std::size_t>(n_)); }
  ElementSet set_of(std::initializer_list<Elem> elems) const;

  ElementSet inverse_of(const ElementSet & s) const;
  bool is_inverse_closed(const ElementSet & s) const { return inverse_of(s) == s; }
  /// Elements of s of order at most 2, identity included.
  ElementSet order_le2(const ElementSet & s) const;
  bool is_subgroup(const ElementSet & s) const;
  bool is_normal_subgroup(const ElementSet & s) const;
  /// Subgroup generated by gens.
  ElementSet closure(std::span<const Elem> gens) const;
  /// Greedy generating set: repeatedly adds the smallest element outside the current closure.
  std::vector<Elem> generating_set() const;
  /// Right coset H*g.
  ElementSet right_coset(const ElementSet & H, Elem g) const;

  bool is_abelian() const;
  int exponent() const;

private:
  int n_ = 0;
  std::string name_;
  std::vector<std::uint16_t> mul_;
  std::vector<Elem> inv_;
  std::vector<std::string> labels_;
};

/**
 * Build a group from its textual spec:
 *   C<n> | C2^<l> | D<n> (order 2n) | Q8 | S<n> | A<n> (n <= 7) | Dic(<spec>,<y>) | <spec>x<spec>
 * Whitespace is not allowed. Throws ParseError or CapExceeded (order > 4096).
 */
GroupTable make_group(std::string_view spec);

GroupTable cyclic_group(int n);
GroupTable elementary_abelian_group(int rank);
GroupTable dihedral_group(int n);
GroupTable quaternion_group();
GroupTable symmetric_group(int degree);
GroupTable alternating_group(int degree);
/// Element (a, b) has index a * |B| + b.
GroupTable direct_product(const GroupTable & a, const GroupTable & b);

/**
 * <A, x | x^2 = y, x^-1 a x = a^-1 for a in A>.
 *
 * A keeps indices 0..|A|-1; the element a*x has index |A| + a, so x itself is
 * index |A|. Requires A abelian of even order and exponent > 2, and y an
 * involution of A.
 */
GroupTable generalized_dicyclic(const GroupTable & A, Elem y);

/// (|S| + |I(S)|) / 2 for inverse-closed S; throws PreconditionError otherwise.
int c_value(const GroupTable & G, const ElementSet & S);

/// The partition of G into double cosets HxK, blocks ordered by their smallest element.
std::vector<ElementSet> double_cosets(const GroupTable & G, const ElementSet & H, const ElementSet & K);

/// Every subgroup of G, ordered by (size, mask). Throws CapExceeded for n > 64.
std::vector<ElementSet> enumerate_subgroups(const GroupTable & G);

/// Aut(G) as permutations of the element indices. Throws CapExceeded for n > 24.
std::vector<Permutation> automorphisms_of_group(const GroupTable & G);

struct DicyclicWitness
{
  ElementSet abelian_half;  // A: abelian, index 2, exponent > 2
  Elem x = 0;               // an element outside A
  Elem y = 0;               // x^2, an involution
};

struct Q8Witness
{
  Elem i = 0;
  Elem j = 0;
  Elem k = 0;                 // i*j
  std::vector<Elem> e_basis;  // basis of the elementary abelian complement E
  ElementSet e_elements;      // all of E
  int ell = 0;
};

struct GroupClass
{
  bool is_abelian = false;
  int exponent = 1;
  bool is_elementary_abelian_2 = false;
  bool is_abelian_exp_gt_2 = false;
  bool is_generalized_dicyclic = false;
  bool is_q8_times_e2 = false;
  std::optional<DicyclicWitness> dicyclic;
  std::optional<Q8Witness> q8;
};

GroupClass classify_group(const GroupTable & G);

/// Index-2 subgroups of G (kernels of homomorphisms onto C2), in mask order.
std::vector<ElementSet> index_two_subgroups(const GroupTable & G);

/// Whether perm (acting on element indices) is an automorphism of G.
bool is_group_automorphism(const GroupTable & G, const Permutation & perm);

}  // namespace haar
