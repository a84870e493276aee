// SPDX-License-Identifier: Apache-2.0
#include "altgraph/perm.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cctype>
#include <numeric>
#include <string>

#include "altgraph/error.hpp"

namespace altgraph {

namespace {

constexpr int kMaxPoints = 255;

void require_same_size(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size())
    throw DimensionError("permutations act on " + std::to_string(a.size()) +
                         " and " + std::to_string(b.size()) + " points");
}

std::string strip_spaces(std::string_view text) {
  std::string out;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

}  // namespace

Permutation::Permutation(std::span<const int> images) {
  const auto n = static_cast<int>(images.size());
  if (n > kMaxPoints)
    throw InvalidArgument("permutation on more than 255 points");
  std::vector<bool> seen(n, false);
  zero_based_.resize(n);
  for (int i = 0; i < n; ++i) {
    const int v = images[i];
    if (v < 1 || v > n)
      throw InvalidArgument("image " + std::to_string(v) + " outside {1.." +
                            std::to_string(n) + "}");
    if (seen[v - 1])
      throw InvalidArgument("image " + std::to_string(v) + " repeated");
    seen[v - 1] = true;
    zero_based_[i] = static_cast<std::uint8_t>(v - 1);
  }
}

Permutation Permutation::from_zero_based(std::span<const std::uint8_t> images) {
  std::vector<int> one(images.size());
  std::transform(images.begin(), images.end(), one.begin(),
                 [](std::uint8_t v) { return int{v} + 1; });
  return Permutation(one);
}

int Permutation::image(int point) const {
  if (point < 1 || point > size())
    throw RangeError("point " + std::to_string(point) + " outside {1.." +
                     std::to_string(size()) + "}");
  return zero_based_[point - 1] + 1;
}

std::vector<int> Permutation::one_line() const {
  std::vector<int> out(zero_based_.size());
  std::transform(zero_based_.begin(), zero_based_.end(), out.begin(),
                 [](std::uint8_t v) { return int{v} + 1; });
  return out;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < zero_based_.size(); ++i)
    if (zero_based_[i] != i) return false;
  return true;
}

Permutation identity(int n) {
  if (n < 1) throw InvalidArgument("identity needs n >= 1");
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 1);
  return Permutation(images);
}

Permutation compose(const Permutation& first, const Permutation& second) {
  require_same_size(first, second);
  const auto a = first.zero_based();
  const auto b = second.zero_based();
  std::vector<std::uint8_t> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = b[a[i]];
  return Permutation::from_zero_based(out);
}

Permutation inverse(const Permutation& p) {
  const auto a = p.zero_based();
  std::vector<std::uint8_t> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[a[i]] = static_cast<std::uint8_t>(i);
  return Permutation::from_zero_based(out);
}

Permutation from_cycle(int n, std::span<const int> cycle) {
  if (n < 1) throw InvalidArgument("cycle needs n >= 1");
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 1);
  std::vector<bool> used(n, false);
  for (int c : cycle) {
    if (c < 1 || c > n)
      throw InvalidArgument("cycle point " + std::to_string(c) +
                            " outside {1.." + std::to_string(n) + "}");
    if (used[c - 1])
      throw InvalidArgument("cycle point " + std::to_string(c) + " repeated");
    used[c - 1] = true;
  }
  for (std::size_t k = 0; k < cycle.size(); ++k)
    images[cycle[k] - 1] = cycle[(k + 1) % cycle.size()];
  return Permutation(images);
}

int sign(const Permutation& p) {
  const auto a = p.zero_based();
  std::vector<bool> visited(a.size(), false);
  std::size_t cycles = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (visited[i]) continue;
    ++cycles;
    for (std::size_t j = i; !visited[j]; j = a[j]) visited[j] = true;
  }
  return (a.size() - cycles) % 2 == 0 ? 1 : -1;
}

std::uint64_t factorial(int n) {
  if (n < 0 || n > kMaxRankPoints)
    throw RangeError("factorial argument " + std::to_string(n) + " unsupported");
  std::uint64_t f = 1;
  for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
  return f;
}

std::uint64_t alternating_order(int n) { return n < 2 ? 1 : factorial(n) / 2; }

namespace detail {

// In lexicographic order of S_n (n >= 2), positions 2k and 2k+1 differ by a
// swap of the last two entries, so exactly one of each pair is even and the
// even rank is the full lexicographic rank halved.
std::uint64_t rank_even_unchecked(const std::uint8_t* images, int n) noexcept {
  static constexpr auto kFact = [] {
    std::array<std::uint64_t, kMaxRankPoints + 1> f{};
    f[0] = 1;
    for (int k = 1; k <= kMaxRankPoints; ++k) f[k] = f[k - 1] * k;
    return f;
  }();
  std::uint32_t unused = (n >= 32) ? ~0u : ((1u << n) - 1u);
  std::uint64_t lex = 0;
  for (int k = 0; k < n; ++k) {
    const std::uint32_t v = images[k];
    lex += static_cast<std::uint64_t>(std::popcount(unused & ((1u << v) - 1u))) *
           kFact[n - 1 - k];
    unused &= ~(1u << v);
  }
  return lex / 2;
}

bool is_even_unchecked(const std::uint8_t* images, int n) noexcept {
  std::uint32_t visited = 0;
  int cycles = 0;
  for (int i = 0; i < n; ++i) {
    if (visited & (1u << i)) continue;
    ++cycles;
    for (int j = i; !(visited & (1u << j)); j = images[j]) visited |= 1u << j;
  }
  return (n - cycles) % 2 == 0;
}

}  // namespace detail

AltGroupIndex rank(const Permutation& p) {
  if (p.size() > kMaxRankPoints)
    throw RangeError("rank supports at most " + std::to_string(kMaxRankPoints) +
                     " points");
  if (sign(p) != 1) throw ParityError("rank is defined on even permutations only");
  return {detail::rank_even_unchecked(p.zero_based().data(), p.size())};
}

Permutation unrank(int n, AltGroupIndex index) {
  if (n < 1 || n > kMaxRankPoints)
    throw RangeError("unrank supports 1 <= n <= " + std::to_string(kMaxRankPoints));
  const std::uint64_t order = alternating_order(n);
  if (index.value >= order)
    throw RangeError("index " + std::to_string(index.value) + " outside [0, " +
                     std::to_string(order) + ")");
  std::uint64_t lex = n < 2 ? 0 : 2 * index.value;
  std::vector<std::uint8_t> pool(n);
  std::iota(pool.begin(), pool.end(), std::uint8_t{0});
  std::vector<std::uint8_t> out;
  out.reserve(n);
  for (int k = n; k >= 1; --k) {
    const std::uint64_t f = factorial(k - 1);
    const auto digit = static_cast<std::size_t>(lex / f);
    lex %= f;
    out.push_back(pool[digit]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(digit));
  }
  auto p = Permutation::from_zero_based(out);
  if (sign(p) != 1) {
    std::swap(out[n - 2], out[n - 1]);
    p = Permutation::from_zero_based(out);
  }
  return p;
}

std::vector<Permutation> enumerate_alternating(int n) {
  if (n < 3 || n > kMaxEnumeratePoints)
    throw RangeError("enumerate_alternating supports 3 <= n <= " +
                     std::to_string(kMaxEnumeratePoints));
  std::vector<Permutation> out;
  out.reserve(alternating_order(n));
  detail::for_each_alternating(n, [&](std::uint64_t, const std::uint8_t* images) {
    out.push_back(Permutation::from_zero_based({images, static_cast<std::size_t>(n)}));
  });
  return out;
}

Permutation parse_cycles(int n, std::string_view text) {
  const std::string s = strip_spaces(text);
  if (s.empty()) throw InvalidArgument("empty cycle notation");
  if (s == "e") return identity(n);
  Permutation result = identity(n);
  std::size_t pos = 0;
  while (pos < s.size()) {
    if (s[pos] != '(')
      throw InvalidArgument("malformed cycle notation '" + std::string(text) +
                            "': expected '('");
    const std::size_t close = s.find(')', pos);
    if (close == std::string::npos)
      throw InvalidArgument("malformed cycle notation '" + std::string(text) +
                            "': missing ')'");
    std::vector<int> points;
    std::string_view body(s.data() + pos + 1, close - pos - 1);
    while (!body.empty()) {
      const std::size_t comma = body.find(',');
      const std::string_view token = body.substr(0, comma);
      if (token.empty() ||
          !std::all_of(token.begin(), token.end(),
                       [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw InvalidArgument("malformed cycle notation '" + std::string(text) + "'");
      points.push_back(std::stoi(std::string(token)));
      if (comma == std::string_view::npos) break;
      body.remove_prefix(comma + 1);
      if (body.empty())
        throw InvalidArgument("malformed cycle notation '" + std::string(text) + "'");
    }
    result = compose(result, from_cycle(n, points));
    pos = close + 1;
  }
  return result;
}

std::vector<Permutation> parse_permutation_list(int n, std::string_view text) {
  const std::string s = strip_spaces(text);
  std::vector<Permutation> out;
  std::size_t start = 0;
  int depth = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    const bool end = i == s.size();
    if (!end && s[i] == '(') ++depth;
    if (!end && s[i] == ')') --depth;
    if (depth < 0 || depth > 1)
      throw InvalidArgument("malformed permutation list '" + std::string(text) + "'");
    if (end || (depth == 0 && (s[i] == ';' || s[i] == ','))) {
      if (i == start)
        throw InvalidArgument("empty entry in permutation list '" + std::string(text) + "'");
      out.push_back(parse_cycles(n, std::string_view(s).substr(start, i - start)));
      start = i + 1;
    }
  }
  if (depth != 0)
    throw InvalidArgument("malformed permutation list '" + std::string(text) + "'");
  return out;
}

std::string to_cycle_string(const Permutation& p) {
  const auto a = p.zero_based();
  std::vector<bool> visited(a.size(), false);
  std::string out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (visited[i] || a[i] == i) continue;
    out += '(';
    for (std::size_t j = i; !visited[j]; j = a[j]) {
      visited[j] = true;
      if (j != i) out += ',';
      out += std::to_string(j + 1);
    }
    out += ')';
  }
  return out.empty() ? "e" : out;
}

}  // namespace altgraph
