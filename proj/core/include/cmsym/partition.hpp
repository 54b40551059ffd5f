#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace cmsym {

/// Weakly decreasing sequence of positive integers.
class Partition {
 public:
  Partition() = default;
  /// Sorts the parts; throws std::invalid_argument on a non-positive part.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  int weight() const { return weight_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int operator[](std::size_t i) const { return parts_[i]; }

  /// Number of parts equal to `a`.
  int multiplicity(int a) const;

  Partition with_part(int a) const;
  /// Requires multiplicity(a) > 0.
  Partition without_part(int a) const;
  /// Multiset union (product p_lambda * p_mu).
  Partition merged(const Partition& other) const;

  /// Canonical map order: by weight, then lexicographically by parts.
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b);
  friend bool operator==(const Partition& a, const Partition& b) = default;

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

enum class Dominance { less, equal, greater, incomparable };

/// Dominance order on partitions of equal weight; throws WeightMismatch.
Dominance dominance_compare(const Partition& a, const Partition& b);

/// a is dominated by b (a ⊴ b), equal weights.
bool dominated_by(const Partition& a, const Partition& b);

/// Partitions of n, reverse lexicographic (dominant first: (n), ..., (1^n)).
std::vector<Partition> partitions_of(int n);

/// Partitions of weight <= n, highest weight first, each weight in
/// reverse lexicographic order. This is the total refinement of the
/// (degree, dominance) order used for filtered bases.
std::vector<Partition> partitions_up_to(int n);

/// Strict order of the (degree, dominance) refinement: true when `a` comes
/// before `b` in partitions_up_to ordering (i.e. a is "higher").
bool refinement_before(const Partition& a, const Partition& b);

/// "2,1"; the empty partition is "-".
std::string to_string(const Partition& p);
/// Inverse of to_string; throws ParseError.
Partition parse_partition(std::string_view text);

}  // namespace cmsym
