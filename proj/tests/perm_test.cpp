// SPDX-License-Identifier: Apache-2.0
#include "altgraph/perm.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "altgraph/error.hpp"

namespace altgraph {
namespace {

Permutation random_permutation(int n, std::mt19937& rng) {
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 1);
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation(images);
}

// Parity by inversion count; independent of the cycle-based sign().
int inversion_sign(const Permutation& p) {
  const auto a = p.one_line();
  int inversions = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (a[i] > a[j]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

TEST(Perm, IdentityBasics) {
  EXPECT_EQ(identity(3).one_line(), (std::vector<int>{1, 2, 3}));
  EXPECT_EQ(sign(identity(4)), 1);
  const Permutation p{3, 1, 4, 2};
  EXPECT_EQ(compose(identity(4), p), p);
  EXPECT_EQ(compose(p, identity(4)), p);
}

TEST(Perm, ComposeAppliesFirstArgumentFirst) {
  const Permutation c = from_cycle(3, {1, 2, 3});
  EXPECT_EQ(compose(c, c).one_line(), (std::vector<int>{3, 1, 2}));
  EXPECT_EQ(compose(c, c), from_cycle(3, {1, 3, 2}));

  // (s t)_i = t_{s_i}.
  const Permutation s = from_cycle(4, {1, 2});
  const Permutation t = from_cycle(4, {2, 3});
  const Permutation st = compose(s, t);
  for (int i = 1; i <= 4; ++i) EXPECT_EQ(st.image(i), t.image(s.image(i)));
  EXPECT_EQ(st.image(1), 3);
}

TEST(Perm, LeftFactorsReachNeighborBlocks) {
  // tau with tau_n = i: (1,2,k) tau keeps the image of n, (1,n,2) tau sends 1 to i.
  const int n = 6;
  const Permutation tau{4, 6, 1, 5, 3, 2};  // tau_6 = 2
  ASSERT_EQ(sign(tau), 1);
  for (int k = 3; k <= n - 1; ++k) {
    EXPECT_EQ(compose(from_cycle(n, {1, 2, k}), tau).image(n), 2);
    EXPECT_EQ(compose(from_cycle(n, {1, k, 2}), tau).image(n), 2);
  }
  EXPECT_EQ(compose(from_cycle(n, {1, n, 2}), tau).image(1), 2);
  EXPECT_EQ(compose(from_cycle(n, {1, 2, n}), tau).image(2), 2);
}

TEST(Perm, ComposeRejectsMismatchedSizes) {
  EXPECT_THROW(compose(identity(3), identity(4)), DimensionError);
}

TEST(Perm, Inverse) {
  EXPECT_EQ(inverse(from_cycle(3, {1, 2, 3})), from_cycle(3, {1, 3, 2}));
  EXPECT_EQ(inverse(identity(5)), identity(5));
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const Permutation p = random_permutation(1 + trial % 9, rng);
    EXPECT_EQ(inverse(inverse(p)), p);
    EXPECT_TRUE(compose(p, inverse(p)).is_identity());
  }
}

TEST(Perm, FromCycle) {
  EXPECT_EQ(from_cycle(4, {1, 2, 3}).one_line(), (std::vector<int>{2, 3, 1, 4}));
  EXPECT_EQ(from_cycle(5, {1, 3, 2}).one_line(), (std::vector<int>{3, 1, 2, 4, 5}));
  const Permutation t = from_cycle(3, {1, 2});
  EXPECT_EQ(t.one_line(), (std::vector<int>{2, 1, 3}));
  EXPECT_EQ(sign(t), -1);
  EXPECT_THROW(from_cycle(4, {1, 2, 1}), InvalidArgument);
  EXPECT_THROW(from_cycle(4, {1, 5}), InvalidArgument);
  EXPECT_THROW(from_cycle(4, {0, 2}), InvalidArgument);
}

TEST(Perm, ConstructorValidatesBijection) {
  EXPECT_THROW((Permutation{1, 1, 3}), InvalidArgument);
  EXPECT_THROW((Permutation{1, 4, 2}), InvalidArgument);
  EXPECT_THROW(identity(3).image(4), RangeError);
}

TEST(Perm, Sign) {
  for (int n = 3; n <= 6; ++n)
    for (int a = 1; a <= n; ++a)
      for (int b = 1; b <= n; ++b)
        for (int c = 1; c <= n; ++c) {
          if (a == b || b == c || a == c) continue;
          EXPECT_EQ(sign(from_cycle(n, {a, b, c})), 1);
          EXPECT_EQ(sign(from_cycle(n, {a, b})), -1);
        }
  std::vector<int> images{1, 2, 3, 4};
  int even = 0;
  int total = 0;
  do {
    ++total;
    if (sign(Permutation(images)) == 1) ++even;
  } while (std::next_permutation(images.begin(), images.end()));
  EXPECT_EQ(total, 24);
  EXPECT_EQ(even, 12);
}

TEST(Perm, SignMatchesInversionParity) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const Permutation p = random_permutation(1 + trial % 10, rng);
    EXPECT_EQ(sign(p), inversion_sign(p));
  }
}

TEST(PermProperty, Associativity) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 8;
    const auto a = random_permutation(n, rng);
    const auto b = random_permutation(n, rng);
    const auto c = random_permutation(n, rng);
    EXPECT_EQ(compose(compose(a, b), c), compose(a, compose(b, c)));
  }
}

TEST(PermProperty, SignIsHomomorphism) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 9;
    const auto a = random_permutation(n, rng);
    const auto b = random_permutation(n, rng);
    EXPECT_EQ(sign(compose(a, b)), sign(a) * sign(b));
  }
}

TEST(PermProperty, ThreeCycleTimesReverseIsIdentity) {
  for (int n = 3; n <= 7; ++n)
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k) {
          if (i == j || j == k || i == k) continue;
          EXPECT_TRUE(compose(from_cycle(n, {i, j, k}), from_cycle(n, {i, k, j})).is_identity());
        }
}

TEST(Rank, SmallGroupsAreBijective) {
  std::set<std::uint64_t> ranks;
  for (const Permutation& p : enumerate_alternating(3)) ranks.insert(rank(p).value);
  EXPECT_EQ(ranks, (std::set<std::uint64_t>{0, 1, 2}));

  ranks.clear();
  for (const Permutation& p : enumerate_alternating(4)) ranks.insert(rank(p).value);
  EXPECT_EQ(ranks.size(), 12u);
  EXPECT_EQ(*ranks.rbegin(), 11u);
}

TEST(Rank, RoundTripOverAlternatingGroups) {
  for (int n = 3; n <= 6; ++n) {
    const auto all = enumerate_alternating(n);
    for (std::size_t v = 0; v < all.size(); ++v) {
      EXPECT_EQ(rank(all[v]).value, v);
      EXPECT_EQ(unrank(n, {v}), all[v]);
      EXPECT_EQ(unrank(n, rank(all[v])), all[v]);
    }
  }
}

TEST(Rank, OrderIsLexicographicAmongEvenPermutations) {
  // Oracle: filter std::next_permutation order by inversion parity.
  for (int n = 3; n <= 7; ++n) {
    std::vector<int> images(n);
    std::iota(images.begin(), images.end(), 1);
    std::uint64_t expected = 0;
    do {
      const Permutation p(images);
      if (inversion_sign(p) != 1) continue;
      ASSERT_EQ(rank(p).value, expected) << to_cycle_string(p);
      ++expected;
    } while (std::next_permutation(images.begin(), images.end()));
    EXPECT_EQ(expected, alternating_order(n));
  }
}

TEST(Rank, Errors) {
  EXPECT_THROW(rank(from_cycle(4, {1, 2})), ParityError);
  EXPECT_THROW(unrank(4, {12}), RangeError);
  EXPECT_NO_THROW(unrank(4, {11}));
}

TEST(Enumerate, SizesAndParity) {
  const auto a3 = enumerate_alternating(3);
  ASSERT_EQ(a3.size(), 3u);
  EXPECT_EQ(a3[0], identity(3));
  EXPECT_EQ(std::set<Permutation>(a3.begin(), a3.end()),
            (std::set<Permutation>{identity(3), from_cycle(3, {1, 2, 3}), from_cycle(3, {1, 3, 2})}));
  EXPECT_EQ(enumerate_alternating(5).size(), 60u);
  for (int n = 4; n <= 6; ++n)
    for (const auto& p : enumerate_alternating(n)) EXPECT_EQ(sign(p), 1);
  const auto a6 = enumerate_alternating(6);
  EXPECT_TRUE(std::is_sorted(a6.begin(), a6.end()));
  EXPECT_EQ(std::set<Permutation>(a6.begin(), a6.end()).size(), a6.size());
  EXPECT_THROW(enumerate_alternating(2), RangeError);
  EXPECT_THROW(enumerate_alternating(13), RangeError);
}

TEST(Parse, CycleNotation) {
  EXPECT_EQ(parse_cycles(5, "(1,2,3)"), from_cycle(5, {1, 2, 3}));
  EXPECT_EQ(parse_cycles(6, " ( 1, 2 ,3 )( 4,5,6 ) "),
            compose(from_cycle(6, {1, 2, 3}), from_cycle(6, {4, 5, 6})));
  EXPECT_EQ(parse_cycles(4, "e"), identity(4));
  EXPECT_EQ(parse_cycles(4, "()"), identity(4));
  // Products read left to right.
  EXPECT_EQ(parse_cycles(4, "(1,2)(2,3)"), compose(from_cycle(4, {1, 2}), from_cycle(4, {2, 3})));
  EXPECT_THROW(parse_cycles(4, "(1,2"), InvalidArgument);
  EXPECT_THROW(parse_cycles(4, "1,2)"), InvalidArgument);
  EXPECT_THROW(parse_cycles(4, "(1,,2)"), InvalidArgument);
  EXPECT_THROW(parse_cycles(4, "(1,x)"), InvalidArgument);
  EXPECT_THROW(parse_cycles(4, "(1,9)"), InvalidArgument);
  EXPECT_THROW(parse_cycles(4, ""), InvalidArgument);
}

TEST(Parse, PermutationLists) {
  const auto list = parse_permutation_list(4, "(1,2,3);(1,3,2), (1,2)(3,4)");
  ASSERT_EQ(list.size(), 3u);
  EXPECT_EQ(list[0], from_cycle(4, {1, 2, 3}));
  EXPECT_EQ(list[1], from_cycle(4, {1, 3, 2}));
  EXPECT_EQ(list[2], compose(from_cycle(4, {1, 2}), from_cycle(4, {3, 4})));
  EXPECT_THROW(parse_permutation_list(4, "(1,2,3);;(1,3,2)"), InvalidArgument);
  EXPECT_THROW(parse_permutation_list(4, "((1,2)"), InvalidArgument);
}

TEST(Parse, CycleStringRoundTrip) {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + trial % 9;
    const Permutation p = random_permutation(n, rng);
    EXPECT_EQ(parse_cycles(n, to_cycle_string(p)), p);
  }
}

}  // namespace
}  // namespace altgraph
