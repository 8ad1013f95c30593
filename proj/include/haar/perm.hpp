#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace haar {

/// Arbitrary-precision natural number; automorphism group orders reach (2n)!.
using BigNat = boost::multiprecision::cpp_int;

/**
 * A bijection on the points 0..degree()-1.
 *
 * Products act on the right: (a * b)(x) == b(a(x)), i.e. apply a first.
 */
class Permutation
{
public:
  Permutation() = default;
  /// Throws PreconditionError unless images is a bijection on 0..size-1.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int degree);
  /// Parse cycle notation such as "(0 1)(2 3)"; "()" or "" is the identity.
  static Permutation from_cycles(int degree, std::string_view cycles);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int point) const { return images_[static_cast<std::size_t>(point)]; }
  const std::vector<int> & images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  std::vector<int> fixed_points() const;
  /// Number of cycles, fixed points included.
  int cycle_count() const;
  std::vector<std::vector<int>> cycles() const;
  /// Cycle notation without fixed points; the identity prints as "()".
  std::string to_cycles() const;

  friend Permutation operator*(const Permutation & a, const Permutation & b);
  friend bool operator==(const Permutation &, const Permutation &) = default;
  friend auto operator<=>(const Permutation &, const Permutation &) = default;

private:
  std::vector<int> images_;
};

struct PermutationHash
{
  std::size_t operator()(const Permutation & p) const;
};

/// Number of orbits of <p> on the points, i.e. its cycle count.
int orbit_count_of_cycle(const Permutation & p);

/**
 * Permutation group stored as a base and strong generating set.
 *
 * Built by deterministic Schreier-Sims: the base is extended with the
 * smallest point moved by each new strong generator, and Schreier
 * generators are examined in a fixed order, so equal generator lists give
 * identical BSGS data.
 */
class PermGroup
{
public:
  /// Throws PreconditionError on a generator of the wrong degree.
  static PermGroup from_generators(std::vector<Permutation> generators, int degree);

  int degree() const { return degree_; }
  const std::vector<Permutation> & generators() const { return generators_; }
  const std::vector<int> & base() const { return base_; }
  const std::vector<Permutation> & strong_generators() const { return strong_; }
  /// Orbit length of base()[level] under the pointwise stabilizer of the earlier base points.
  std::size_t transversal_length(std::size_t level) const { return levels_[level].orbit.size(); }

  const BigNat & order() const { return order_; }
  bool contains(const Permutation & p) const;

  /// Orbit partition of the points, blocks ordered by their smallest point.
  std::vector<std::vector<int>> orbits() const;
  bool is_semiregular() const;

  /// Every element of the group; throws CapExceeded when order() > cap.
  std::vector<Permutation> elements(std::size_t cap = 1u << 20) const;

private:
  struct Level
  {
    int base_point = 0;
    std::vector<int> orbit;
    std::vector<int> slot;  // point -> index into orbit/transversal, -1 when absent
    std::vector<Permutation> transversal;
    std::vector<Permutation> transversal_inv;
  };

  PermGroup() = default;

  void rebuild_level(std::size_t level);
  std::pair<Permutation, std::size_t> sift(Permutation p, std::size_t from_level) const;

  int degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<int> base_;
  std::vector<Permutation> strong_;
  std::vector<Level> levels_;
  BigNat order_ = 1;
};

}  // namespace haar
