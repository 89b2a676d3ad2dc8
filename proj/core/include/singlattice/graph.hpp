#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "singlattice/arith.hpp"
#include "singlattice/exact_linalg.hpp"

namespace singlattice {

using VertexIndex = std::size_t;

/// Sorted, duplicate-free list of vertex indices.
using VertexSet = std::vector<VertexIndex>;

struct VertexData {
  std::string id;
  Integer self_intersection;
  Integer genus = 0;
  bool smooth = true;
};

/// Intersection of two distinct components; always stored with a < b.
struct Edge {
  VertexIndex a = 0;
  VertexIndex b = 0;
  Integer multiplicity = 1;
};

/// Integer combination of the exceptional components, indexed in vertex
/// declaration order.
class Cycle {
 public:
  Cycle() = default;
  explicit Cycle(std::vector<Integer> coefficients) : c_(std::move(coefficients)) {}

  static Cycle zero(std::size_t n) { return Cycle(std::vector<Integer>(n)); }
  static Cycle unit(std::size_t n, VertexIndex i);
  static Cycle reduced(std::size_t n, const VertexSet& support);

  std::size_t size() const noexcept { return c_.size(); }
  const Integer& operator[](std::size_t i) const { return c_[i]; }
  Integer& operator[](std::size_t i) { return c_[i]; }
  const std::vector<Integer>& coefficients() const noexcept { return c_; }

  bool is_zero() const;
  /// All coefficients >= 0.
  bool is_effective() const;
  /// Effective and nonzero.
  bool is_positive() const;
  /// Every nonzero coefficient equals 1.
  bool is_reduced_on_support() const;
  VertexSet support() const;
  /// Sum of coefficients.
  Integer height() const;

  Cycle& operator+=(const Cycle& o);
  Cycle& operator-=(const Cycle& o);
  friend Cycle operator+(Cycle a, const Cycle& b) { return a += b; }
  friend Cycle operator-(Cycle a, const Cycle& b) { return a -= b; }
  friend Cycle operator*(const Integer& k, Cycle a);
  friend bool operator==(const Cycle& a, const Cycle& b) = default;

 private:
  std::vector<Integer> c_;
};

/// Componentwise a <= b.
bool componentwise_le(const Cycle& a, const Cycle& b);

struct CycleLexLess {
  bool operator()(const Cycle& a, const Cycle& b) const;
};

struct CycleHash {
  std::size_t operator()(const Cycle& c) const;
};

/// Cycle with rational coefficients (pullbacks across contractions).
class RationalCycle {
 public:
  RationalCycle() = default;
  explicit RationalCycle(std::vector<Rational> coefficients) : c_(std::move(coefficients)) {}
  explicit RationalCycle(const Cycle& integral);

  std::size_t size() const noexcept { return c_.size(); }
  const Rational& operator[](std::size_t i) const { return c_[i]; }
  Rational& operator[](std::size_t i) { return c_[i]; }
  const std::vector<Rational>& coefficients() const noexcept { return c_; }

  bool is_integral() const;
  /// Throws PreconditionError if some coefficient is not an integer.
  Cycle to_cycle() const;

  friend bool operator==(const RationalCycle& a, const RationalCycle& b) = default;

 private:
  std::vector<Rational> c_;
};

/// Weighted dual graph of a resolution. Structural invariants (unique ids,
/// nonnegative genera, positive multiplicities, no loops) are enforced at
/// construction; connectedness and negative definiteness are checked by
/// validate_graph.
class ResolutionGraph {
 public:
  ResolutionGraph() = default;
  ResolutionGraph(std::vector<VertexData> vertices, std::vector<Edge> edges,
                  std::string name = {});

  const std::string& name() const noexcept { return name_; }
  std::size_t size() const noexcept { return vertices_.size(); }
  const VertexData& vertex(VertexIndex i) const { return vertices_.at(i); }
  const std::vector<VertexData>& vertices() const noexcept { return vertices_; }
  /// Sorted by (a, b).
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  std::optional<VertexIndex> index_of(std::string_view id) const;
  /// Throws PreconditionError for an unknown id.
  VertexIndex require_index(std::string_view id) const;

  /// E_i . E_j
  const Integer& form(VertexIndex i, VertexIndex j) const { return matrix_[i][j]; }
  const Matrix<Integer>& intersection_matrix() const noexcept { return matrix_; }
  const std::vector<VertexIndex>& neighbors(VertexIndex i) const { return adjacency_[i]; }
  /// K . E_i by adjunction.
  const Integer& canonical_degree(VertexIndex i) const { return canonical_[i]; }

  VertexSet all_vertices() const;
  /// Connected components of the subgraph induced on `s`, each sorted,
  /// ordered by their smallest vertex.
  std::vector<VertexSet> components_of(const VertexSet& s) const;
  bool is_connected_subset(const VertexSet& s) const;

 private:
  std::string name_;
  std::vector<VertexData> vertices_;
  std::vector<Edge> edges_;
  Matrix<Integer> matrix_;
  std::vector<std::vector<VertexIndex>> adjacency_;
  std::vector<Integer> canonical_;
};

struct GraphValidation {
  bool ok = false;
  bool connected = false;
  bool negative_definite = false;
  /// Leading principal minors of the intersection matrix, up to and
  /// including the first one with the wrong sign.
  std::vector<Integer> minors;
  /// Set when the graph is disconnected.
  std::vector<VertexSet> components;
  std::string diagnostic;
};

GraphValidation validate_graph(const ResolutionGraph& g);

/// Throws ValidationError with the diagnostic if validate_graph fails.
void require_valid(const ResolutionGraph& g);

struct CanonicalDegrees {
  std::vector<Integer> k;
};

CanonicalDegrees canonical_degrees(const ResolutionGraph& g);

/// c . E_i
Integer pairing_with_vertex(const ResolutionGraph& g, const Cycle& c, VertexIndex i);

Integer intersection_number(const ResolutionGraph& g, const Cycle& a, const Cycle& b);
Rational intersection_number(const ResolutionGraph& g, const RationalCycle& a,
                             const RationalCycle& b);

/// chi(C) = -C(C+K)/2.
Integer euler_chi(const ResolutionGraph& g, const Cycle& c);
/// p_a(C) = 1 - chi(C).
Integer pa_cycle(const ResolutionGraph& g, const Cycle& c);

bool is_anti_nef_on(const ResolutionGraph& g, const Cycle& l, const VertexSet& s);
bool is_anti_nef(const ResolutionGraph& g, const Cycle& l);

/// Vertices with l . E_i = 0, split into connected components.
std::vector<VertexSet> orthogonal_components(const ResolutionGraph& g, const Cycle& l);

struct EdgeSite {
  VertexIndex a;
  VertexIndex b;
};
using BlowUpSite = std::variant<VertexIndex, EdgeSite>;

/// Result of blowing up a point of the exceptional set. The new (-1)-curve
/// is appended as the last vertex.
class BlowUp {
 public:
  BlowUp(ResolutionGraph graph, BlowUpSite site);

  const ResolutionGraph& graph() const noexcept { return graph_; }
  VertexIndex exceptional() const noexcept { return graph_.size() - 1; }
  const BlowUpSite& site() const noexcept { return site_; }

  /// f^*D for a cycle D on the original graph.
  Cycle total_transform(const Cycle& d) const;

 private:
  ResolutionGraph graph_;
  BlowUpSite site_;
};

BlowUp blow_up(const ResolutionGraph& g, const BlowUpSite& site);

/// Every vertex and every edge of g, vertices first.
std::vector<BlowUpSite> all_blow_up_sites(const ResolutionGraph& g);

/// The unique c + sum a_i E_i (E_i contracted, a_i rational) orthogonal to
/// every contracted vertex. `c` must vanish on `contracted`.
RationalCycle numerical_pullback(const ResolutionGraph& g, const VertexSet& contracted,
                                 const Cycle& c);

}  // namespace singlattice
