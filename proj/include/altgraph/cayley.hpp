// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "altgraph/graph.hpp"
#include "altgraph/perm.hpp"

namespace altgraph {

/// Graph families on A_n. AG uses T1 = {(1,2,i),(1,i,2)}, EAG uses
/// T2 = {(1,i,j),(1,j,i)}, CAG uses all 3-cycles T3.
enum class Family { AG, EAG, CAG, Custom };

std::string to_string(Family f);
/// Accepts "AG", "EAG", "CAG" (case-insensitive); throws InvalidArgument.
Family parse_family(std::string_view name);
/// "T1", "T2", "T3" or "custom".
std::string generator_tag(Family f);

/// Default refusal threshold for building Cayley graphs (|A_9| = 181440).
inline constexpr int kDefaultMaxBuildPoints = 9;

struct GeneratingSet {
  int n = 0;
  std::vector<Permutation> elements;
  Family family = Family::Custom;
};

/// The family generating set on n points, n >= 3.
GeneratingSet generating_set(Family family, int n);

/// Validates a user-supplied set: identity excluded, every element even and
/// on n points, no duplicates, closed under inverse. Throws InvalidArgument.
GeneratingSet custom_generating_set(int n, std::vector<Permutation> elements);
void validate(const GeneratingSet& gens);

std::size_t expected_generator_count(Family family, int n);

/// Cay(A_n, T) with edges {g, t g}, where t g = compose(t, g) applies t
/// first. Vertices are AltGroupIndex values.
class CayleyGraph : public Graph {
 public:
  CayleyGraph(Graph graph, GeneratingSet gens)
      : Graph(std::move(graph)), gens_(std::move(gens)) {}

  int n() const noexcept { return gens_.n; }
  Family family() const noexcept { return gens_.family; }
  const GeneratingSet& generators() const noexcept { return gens_; }
  /// Common degree |T|.
  std::size_t cayley_degree() const noexcept { return gens_.elements.size(); }

 private:
  GeneratingSet gens_;
};

struct BuildOptions {
  int max_points = kDefaultMaxBuildPoints;
};

CayleyGraph build_cayley(const GeneratingSet& gens, const BuildOptions& options = {});
CayleyGraph build_family(Family family, int n, const BuildOptions& options = {});

/// Graph family's block used for the recursive step: X(i) = {t_n = i} for
/// AG, X_i(2) = {t_2 = i} for EAG, X_i(1) = {t_1 = i} for CAG. Returns the
/// fixed position (1-based).
int recursive_block_position(Family family, int n);

/// Bijection from the recursive block of the n-point family graph onto the
/// vertex set of the (n-1)-point graph of the same family. The fixed
/// position is deleted and the value n is renamed to i; if the result is odd
/// the values 1 and 2 are swapped as well, which moves it back into A_{n-1}
/// without disturbing adjacency (value relabelings commute with t g).
/// Sources are ascending vertex indices of the block.
VertexMap phi_isomorphism(int n, int i, Family family);

/// The image of one block element under phi_isomorphism, as a permutation.
Permutation phi_image(const Permutation& tau, int i, Family family);

/// Text edge list: header "# family=<tag> n=<n> order=<order> degree=<degree>"
/// then one "u v" line per edge with u < v, LF endings.
void write_edge_list(std::ostream& out, const CayleyGraph& g);

}  // namespace altgraph
