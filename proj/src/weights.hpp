#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "arith.hpp"

namespace fanohyp::weights {

using Entry = long long;

// A GL(n) weight: dense integer vector of fixed length, most-significant
// coordinate first. Entries stay tiny in practice; every quantity that can
// actually grow (dimensions, ranks) is computed in Int.
using Weight = std::vector<Entry>;

/// Weakly decreasing sequence of non-negative integers, trailing zeros
/// stripped. The empty partition is the trivial highest weight.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<Entry> parts);

  const std::vector<Entry>& parts() const { return parts_; }
  std::size_t rows() const { return parts_.size(); }
  /// i-th part, zero beyond the last row.
  Entry part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
  Entry sum() const;
  bool empty() const { return parts_.empty(); }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

  std::string to_string() const;

 private:
  std::vector<Entry> parts_;
};

Partition conjugate(const Partition& p);

Weight rho(int n);

/// Dotted Weyl action of the adjacent transposition swapping positions
/// i, i+1 (0-based): (.., a, b, ..) -> (.., b-1, a+1, ..). An involution.
Weight dotted_step(const Weight& alpha, std::size_t i);

struct DottedNormalization {
  enum class Status { Singular, Regular };
  Status status = Status::Singular;
  // Valid only when Regular: length of the sorting Weyl element and the
  // dominant representative of the dotted orbit.
  int length = 0;
  Weight dominant;

  bool singular() const { return status == Status::Singular; }
};

/// Decide whether alpha + rho has a repeated entry (singular: the dotted
/// orbit contains no dominant weight) and otherwise return the dominant
/// representative together with the length of the sorting permutation.
DottedNormalization normalize(const Weight& alpha);

/// Dimension of the irreducible GL(n) representation with highest weight
/// lambda, by the Weyl dimension formula. lambda must be weakly decreasing;
/// shorter inputs are padded with zeros, longer ones are accepted when the
/// tail carries no information (all zero) and give 0 when the tail is
/// positive (more than n rows).
Int weyl_dim(const Weight& lambda, int n);

inline Int weyl_dim(const Partition& lambda, int n) {
  return weyl_dim(lambda.parts(), n);
}

std::string to_string(const Weight& w);

}  // namespace fanohyp::weights
