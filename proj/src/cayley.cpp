// SPDX-License-Identifier: Apache-2.0
#include "altgraph/cayley.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <set>

#include "altgraph/error.hpp"

namespace altgraph {

std::string to_string(Family f) {
  switch (f) {
    case Family::AG: return "AG";
    case Family::EAG: return "EAG";
    case Family::CAG: return "CAG";
    case Family::Custom: return "custom";
  }
  return "custom";
}

Family parse_family(std::string_view name) {
  std::string upper;
  for (char c : name) upper.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  if (upper == "AG") return Family::AG;
  if (upper == "EAG") return Family::EAG;
  if (upper == "CAG") return Family::CAG;
  throw InvalidArgument("unknown family '" + std::string(name) + "' (expected AG, EAG or CAG)");
}

std::string generator_tag(Family f) {
  switch (f) {
    case Family::AG: return "T1";
    case Family::EAG: return "T2";
    case Family::CAG: return "T3";
    case Family::Custom: return "custom";
  }
  return "custom";
}

std::size_t expected_generator_count(Family family, int n) {
  const auto m = static_cast<std::size_t>(n);
  switch (family) {
    case Family::AG: return 2 * (m - 2);
    case Family::EAG: return (m - 1) * (m - 2);
    case Family::CAG: return m * (m - 1) * (m - 2) / 3;
    case Family::Custom: break;
  }
  throw InvalidArgument("custom generating sets have no closed-form size");
}

GeneratingSet generating_set(Family family, int n) {
  if (n < 3) throw InvalidArgument("generating sets need n >= 3");
  GeneratingSet gens{n, {}, family};
  auto add_pair = [&](int a, int b, int c) {
    gens.elements.push_back(from_cycle(n, {a, b, c}));
    gens.elements.push_back(from_cycle(n, {a, c, b}));
  };
  switch (family) {
    case Family::AG:
      for (int i = 3; i <= n; ++i) add_pair(1, 2, i);
      break;
    case Family::EAG:
      for (int i = 2; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) add_pair(1, i, j);
      break;
    case Family::CAG:
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
          for (int k = j + 1; k <= n; ++k) add_pair(i, j, k);
      break;
    case Family::Custom:
      throw InvalidArgument("generating_set needs AG, EAG or CAG");
  }
  return gens;
}

void validate(const GeneratingSet& gens) {
  if (gens.n < 3) throw InvalidArgument("generating sets need n >= 3");
  std::set<Permutation> seen;
  for (const Permutation& t : gens.elements) {
    if (t.size() != gens.n)
      throw InvalidArgument("generator " + to_cycle_string(t) + " acts on " +
                            std::to_string(t.size()) + " points, expected " +
                            std::to_string(gens.n));
    if (t.is_identity()) throw InvalidArgument("generating set contains the identity");
    if (sign(t) != 1)
      throw InvalidArgument("generator " + to_cycle_string(t) + " is odd");
    if (!seen.insert(t).second)
      throw InvalidArgument("generator " + to_cycle_string(t) + " repeated");
  }
  for (const Permutation& t : gens.elements)
    if (!seen.contains(inverse(t)))
      throw InvalidArgument("generating set not closed under inverse: missing " +
                            to_cycle_string(inverse(t)));
}

GeneratingSet custom_generating_set(int n, std::vector<Permutation> elements) {
  GeneratingSet gens{n, std::move(elements), Family::Custom};
  validate(gens);
  return gens;
}

CayleyGraph build_cayley(const GeneratingSet& gens, const BuildOptions& options) {
  validate(gens);
  const int n = gens.n;
  if (n > options.max_points)
    throw CapExceeded("refusing to build a Cayley graph on A_" + std::to_string(n) +
                      " (cap n <= " + std::to_string(options.max_points) + ")");
  if (n > kMaxEnumeratePoints)
    throw CapExceeded("n above the enumeration limit " + std::to_string(kMaxEnumeratePoints));

  const std::size_t order = alternating_order(n);
  const std::size_t degree = gens.elements.size();
  const auto width = static_cast<std::size_t>(n);

  // A_n packed in rank order.
  std::vector<std::uint8_t> packed;
  packed.reserve(order * width);
  detail::for_each_alternating(n, [&](std::uint64_t, const std::uint8_t* images) {
    packed.insert(packed.end(), images, images + width);
  });

  std::vector<std::size_t> offsets(order + 1);
  for (std::size_t v = 0; v <= order; ++v) offsets[v] = v * degree;
  std::vector<Vertex> neighbors(order * degree);
  std::uint8_t product[kMaxEnumeratePoints];
  for (std::size_t v = 0; v < order; ++v) {
    const std::uint8_t* g = packed.data() + v * width;
    Vertex* out = neighbors.data() + v * degree;
    for (std::size_t k = 0; k < degree; ++k) {
      const auto t = gens.elements[k].zero_based();
      for (std::size_t p = 0; p < width; ++p) product[p] = g[t[p]];
      out[k] = static_cast<Vertex>(detail::rank_even_unchecked(product, n));
    }
  }
  return CayleyGraph(Graph(std::move(offsets), std::move(neighbors)), gens);
}

CayleyGraph build_family(Family family, int n, const BuildOptions& options) {
  return build_cayley(generating_set(family, n), options);
}

int recursive_block_position(Family family, int n) {
  switch (family) {
    case Family::AG: return n;
    case Family::EAG: return 2;
    case Family::CAG: return 1;
    case Family::Custom: break;
  }
  throw InvalidArgument("custom graphs have no recursive block");
}

Permutation phi_image(const Permutation& tau, int i, Family family) {
  const int n = tau.size();
  const int position = recursive_block_position(family, n);
  if (tau.image(position) != i)
    throw InvalidArgument("permutation is not in the block (image of " +
                          std::to_string(position) + " is not " + std::to_string(i) + ")");
  std::vector<int> images;
  images.reserve(n - 1);
  for (int p = 1; p <= n; ++p) {
    if (p == position) continue;
    const int v = tau.image(p);
    images.push_back(v == n ? i : v);
  }
  Permutation image(images);
  if (sign(image) != 1) {
    for (int& v : images) v = v == 1 ? 2 : (v == 2 ? 1 : v);
    image = Permutation(images);
  }
  return image;
}

VertexMap phi_isomorphism(int n, int i, Family family) {
  if (n < 4) throw InvalidArgument("phi_isomorphism needs n >= 4");
  if (i < 1 || i > n) throw RangeError("block value outside {1..n}");
  if (n > kMaxEnumeratePoints) throw CapExceeded("n above the enumeration limit");
  const int position = recursive_block_position(family, n);
  VertexMap map;
  const auto elements = enumerate_alternating(n);
  for (std::size_t v = 0; v < elements.size(); ++v) {
    if (elements[v].image(position) != i) continue;
    map.source.push_back(static_cast<Vertex>(v));
    map.target.push_back(static_cast<Vertex>(rank(phi_image(elements[v], i, family)).value));
  }
  return map;
}

void write_edge_list(std::ostream& out, const CayleyGraph& g) {
  out << "# family=" << to_string(g.family()) << " n=" << g.n() << " order=" << g.order()
      << " degree=" << g.cayley_degree() << '\n';
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v : g.neighbors(u))
      if (u < v) out << u << ' ' << v << '\n';
}

}  // namespace altgraph
