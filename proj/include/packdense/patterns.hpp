#ifndef PACKDENSE_PATTERNS_HPP
#define PACKDENSE_PATTERNS_HPP

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "packdense/checked_int.hpp"

namespace packdense {

/// A permutation of 1..n in one-line notation.
class Permutation {
 public:
  Permutation() = default;
  /// Throws InvalidInput unless `ranks` is a rearrangement of 1..n.
  explicit Permutation(std::vector<int> ranks);

  static Permutation identity(int n);

  /// Accepts whitespace- or comma-separated ranks, or contiguous digits
  /// ("41523") when there is no separator.
  static Permutation parse(std::string_view text);

  [[nodiscard]] int size() const { return static_cast<int>(ranks_.size()); }
  [[nodiscard]] std::span<const int> ranks() const { return ranks_; }
  int operator[](int i) const { return ranks_[static_cast<std::size_t>(i)]; }

  /// Contiguous digits for n <= 9, space separated otherwise.
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> ranks_;
};

/// Composition of n describing a layered permutation: each layer is a
/// descending run and the runs ascend.
class LayerProfile {
 public:
  /// Throws InvalidInput on an empty profile or a non-positive layer.
  explicit LayerProfile(std::vector<int> layers);

  /// Comma-separated layer lengths, e.g. "3,2,3,1".
  static LayerProfile parse(std::string_view text);

  [[nodiscard]] std::span<const int> layers() const { return layers_; }
  [[nodiscard]] int layer_count() const { return static_cast<int>(layers_.size()); }
  [[nodiscard]] int total() const { return total_; }

  [[nodiscard]] Permutation expand() const;
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const LayerProfile&, const LayerProfile&) = default;

 private:
  std::vector<int> layers_;
  int total_ = 0;
};

/// The pattern 1 (ell+1) ell ... 2, i.e. layer profile (1, ell).
Permutation qell_pattern(int ell);

/// True iff a and b have the same pairwise comparisons. Throws InvalidInput
/// on a length mismatch or repeated entries.
bool same_type(std::span<const int> a, std::span<const int> b);

/// Number of copies of q in p. Zero when |q| > |p|.
///
/// Backtracks over positions of p, keeping for each pattern prefix the value
/// window (largest chosen value that must stay below, smallest that must stay
/// above) so inconsistent partial embeddings are cut immediately.
Int128 count_occurrences(const Permutation& p, const Permutation& q);

/// Reusable counter for one pattern; count() is const and thread-safe.
class PatternCounter {
 public:
  explicit PatternCounter(Permutation q);

  /// `p` must hold distinct values; only their relative order matters.
  [[nodiscard]] Int128 count(std::span<const int> p) const;
  [[nodiscard]] const Permutation& pattern() const { return q_; }

 private:
  Permutation q_;
  // for pattern position t: index (< t) of the nearest smaller / larger value, or -1
  std::vector<int> below_;
  std::vector<int> above_;
};

/// Reference counter: enumerates all C(|p|,|q|) index subsets and tests each
/// with same_type. Restricted to |p| <= 12.
Int128 count_occurrences_naive(const Permutation& p, const Permutation& q);

inline constexpr int kNaiveCountMaxLength = 12;

std::optional<LayerProfile> decompose_layers(const Permutation& p);

/// Copies of q_ell in the layered permutation with this profile:
/// sum over layers j >= 2 of (b_1 + ... + b_{j-1}) * C(b_j, ell).
Int128 count_qell_in_layered(const LayerProfile& profile, int ell);

/// Copies of the layered pattern q in the layered permutation p. Each layer
/// of q lands inside a single layer of p, on strictly increasing layers.
Int128 count_layered_in_layered(const LayerProfile& q_profile, const LayerProfile& p_profile);

/// Reverse the sequence and map rank i to n+1-i.
Permutation reverse_complement(const Permutation& p);

}  // namespace packdense

#endif  // PACKDENSE_PATTERNS_HPP
