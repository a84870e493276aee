// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace altgraph {

// Largest degree accepted by enumerate_alternating; n! stays well inside
// 64 bits.
inline constexpr int kMaxEnumeratePoints = 12;
// Largest degree accepted by rank/unrank (20! < 2^63).
inline constexpr int kMaxRankPoints = 20;

/// A bijection of {1..n} in one-line notation.
///
/// The public interface is 1-based: `image(i)` is the image of point i.
/// Products follow the left-to-right convention: compose(s, t) applies s
/// first, then t, so compose(s, t).image(i) == t.image(s.image(i)).
class Permutation {
 public:
  Permutation() = default;

  /// Builds from 1-based images; throws InvalidArgument unless `images` is a
  /// bijection of {1..images.size()}.
  explicit Permutation(std::span<const int> images);
  Permutation(std::initializer_list<int> images)
      : Permutation(std::span<const int>(images.begin(), images.size())) {}

  int size() const noexcept { return static_cast<int>(zero_based_.size()); }
  int image(int point) const;
  std::vector<int> one_line() const;

  // Internal 0-based images.
  std::span<const std::uint8_t> zero_based() const noexcept { return zero_based_; }
  static Permutation from_zero_based(std::span<const std::uint8_t> images);

  bool is_identity() const noexcept;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::uint8_t> zero_based_;
};

/// Index of an element of A_n in canonical (lexicographic one-line) order.
struct AltGroupIndex {
  std::uint64_t value = 0;
  friend auto operator<=>(const AltGroupIndex&, const AltGroupIndex&) = default;
};

Permutation identity(int n);
Permutation compose(const Permutation& first, const Permutation& second);
Permutation inverse(const Permutation& p);

/// Cycle (c0 c1 ... ck) on n points: c0 -> c1 -> ... -> ck -> c0.
Permutation from_cycle(int n, std::span<const int> cycle);
inline Permutation from_cycle(int n, std::initializer_list<int> cycle) {
  return from_cycle(n, std::span<const int>(cycle.begin(), cycle.size()));
}

/// +1 for even, -1 for odd.
int sign(const Permutation& p);
inline bool is_even(const Permutation& p) { return sign(p) == 1; }

std::uint64_t factorial(int n);
/// |A_n| = n!/2 (1 for n < 2).
std::uint64_t alternating_order(int n);

AltGroupIndex rank(const Permutation& p);
Permutation unrank(int n, AltGroupIndex index);

/// All of A_n in rank order. Requires 3 <= n <= kMaxEnumeratePoints.
std::vector<Permutation> enumerate_alternating(int n);

/// Parses cycle notation such as "(1,2,3)" or "(1,2,3)(4,5,6)". The product
/// is read left to right; "()" and "e" denote the identity. Whitespace is
/// ignored.
Permutation parse_cycles(int n, std::string_view text);

/// Parses a list of permutations separated by ';' or by ',' between cycles,
/// e.g. "(1,2,3);(1,3,2)" or "(1,2,3),(1,3,2)".
std::vector<Permutation> parse_permutation_list(int n, std::string_view text);

/// Disjoint-cycle form, "e" for the identity.
std::string to_cycle_string(const Permutation& p);

namespace detail {

// Rank of a 0-based one-line image among the even permutations, no checks.
// Requires the input to be even.
std::uint64_t rank_even_unchecked(const std::uint8_t* images, int n) noexcept;

bool is_even_unchecked(const std::uint8_t* images, int n) noexcept;

// Calls fn(index, images) for every element of A_n in rank order, with
// 0-based images valid only during the call.
template <typename Fn>
void for_each_alternating(int n, Fn&& fn) {
  std::vector<std::uint8_t> images(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) images[k] = static_cast<std::uint8_t>(k);
  std::uint64_t index = 0;
  do {
    if (is_even_unchecked(images.data(), n)) fn(index++, static_cast<const std::uint8_t*>(images.data()));
  } while (std::next_permutation(images.begin(), images.end()));
}

}  // namespace detail

}  // namespace altgraph
