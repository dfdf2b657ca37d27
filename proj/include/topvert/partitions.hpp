#pragma once

#include <array>
#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "topvert/pseries.hpp"

namespace topvert {

/// An integer partition, parts weakly decreasing and positive.
class Partition {
 public:
  Partition() = default;
  /// Throws ParseError unless `parts` is weakly decreasing and positive.
  explicit Partition(std::vector<int> parts);

  static Partition box() { return Partition({1}); }

  const std::vector<int>& parts() const { return parts_; }
  /// The i-th part, 0-based; zero past the length.
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const;
  long norm2() const;
  bool empty() const { return parts_.empty(); }
  Partition conjugate() const;
  /// Diagram inclusion: other is a subset of this.
  bool contains(const Partition& other) const;

  /// "3,1" style; "-" is the empty partition.
  std::string to_string() const;
  static Partition parse(std::string_view text);

  friend auto operator<=>(const Partition&, const Partition&) = default;
  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

struct PartitionStats {
  int size = 0;
  long norm2 = 0;
  int length = 0;
};
PartitionStats stats(const Partition& p);

/// All partitions of n, reverse-lexicographic (n first, 1^n last).
std::vector<Partition> partitions_of(int n);
/// Partitions of 0..n in order of size, each size reverse-lexicographic.
std::vector<Partition> partitions_up_to(int n);
/// All eta with eta inside both a and b.
std::vector<Partition> common_subpartitions(const Partition& a, const Partition& b);

using Cell = std::array<int, 3>;

/// Asymptotic legs along the i, j and k axes. The i-leg is the cylinder over
/// lambda in the (j, k) plane: (i, j, k) belongs to it when j < lambda_k.
/// Likewise (i, j, k) is in the j-leg when k < mu_i and in the k-leg when i < nu_j.
struct LegTriple {
  Partition lambda, mu, nu;

  /// (mu, nu, lambda)
  LegTriple cycled() const { return {mu, nu, lambda}; }
  /// (mu', lambda', nu'), the reflection through the plane i = j.
  LegTriple reflected() const { return {mu.conjugate(), lambda.conjugate(), nu.conjugate()}; }
  int total_size() const { return lambda.size() + mu.size() + nu.size(); }
  /// max(lambda_1, l(lambda), mu_1, l(mu), nu_1, l(nu))
  int max_extent() const;
  int legs_containing(const Cell& c) const;

  std::string to_string() const;
  /// "3,1;2;-"
  static LegTriple parse(std::string_view text);

  friend auto operator<=>(const LegTriple&, const LegTriple&) = default;
  friend bool operator==(const LegTriple&, const LegTriple&) = default;
};

/// Every leg triple with total size at most n.
std::vector<LegTriple> leg_triples_up_to(int n);

struct MinimalConfig {
  /// Cells lying in two or three legs with their leg count.
  std::vector<std::pair<Cell, int>> overlaps;
  long base_volume = 0;
};
MinimalConfig minimal_config(const LegTriple& legs);

/// A 3D partition stored as its legs plus the finitely many boxes outside them.
struct Partition3D {
  LegTriple legs;
  std::vector<Cell> extra;

  /// Every box has its three predecessors present and no extra box repeats or
  /// lies in a leg.
  bool is_valid() const;
  long renormalized_volume() const;
};

struct EnumerateOptions {
  /// Side of the search cube for extra boxes; 0 picks the default.
  int box = 0;
  int jobs = 1;
};

/// budget + max_extent + 1
int default_bounding_box(const LegTriple& legs, int budget);

/// Number of 3D partitions asymptotic to `legs` of each renormalized volume
/// base_volume .. base_volume + budget.
std::map<long, Integer> enumerate_asymptotic(const LegTriple& legs, int budget,
                                             const EnumerateOptions& opts = {});

/// V(p) from box counting, exact up to the integral part of `top`.
PSeries vertex_box_counting(const LegTriple& legs, HalfExp top, const EnumerateOptions& opts = {});

}  // namespace topvert
