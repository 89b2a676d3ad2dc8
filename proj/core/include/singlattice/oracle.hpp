#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "singlattice/graph.hpp"
#include "singlattice/lattice.hpp"

/// Definition-level brute-force routines used to cross-check the
/// constructive algorithms. They enumerate integer boxes directly and share
/// no code with lattice.cpp or bounds.cpp beyond the graph type.
namespace singlattice::oracle {

using Vec = std::vector<std::int64_t>;

/// Intersection form and canonical degrees in machine integers. Throws
/// PreconditionError if an entry is too large for overflow-free
/// enumeration.
class SmallForm {
 public:
  explicit SmallForm(const ResolutionGraph& g);

  std::size_t size() const noexcept { return k_.size(); }
  std::int64_t pair(const Vec& a, const Vec& b) const;
  std::int64_t pair_vertex(const Vec& a, std::size_t i) const;
  /// -(a.a + k.a) / 2
  std::int64_t chi(const Vec& a) const;

 private:
  std::vector<Vec> m_;
  Vec k_;
};

Vec to_vec(const Cycle& c);
Cycle to_cycle(const Vec& v);

/// Number of points of the box [0, hi], saturating at SIZE_MAX.
std::size_t box_points(const Vec& hi);

/// Largest N with (N + 1)^n <= max_points (at least 1).
std::int64_t uniform_bound(std::size_t n, std::size_t max_points);

/// Determinant by cofactor expansion (n <= 10).
Integer cofactor_determinant(const Matrix<Integer>& m);

/// Leading principal minors by cofactor expansion.
std::vector<Integer> leading_minors(const Matrix<Integer>& m);

/// No D1 with 0 < D1 < d is anti-nef on d - D1. `d` must be positive.
bool is_chain_connected(const ResolutionGraph& g, const Cycle& d);

/// Every chain-connected D with 0 < D <= bound.
std::vector<Cycle> chain_connected_below(const ResolutionGraph& g, const Cycle& bound);

/// Componentwise minimum of the positive cycles with support s, anti-nef
/// on s and coefficients <= n; empty if the box contains none or the
/// minimum is not itself such a cycle.
std::optional<Cycle> fundamental_cycle_in_box(const ResolutionGraph& g, const VertexSet& s,
                                              std::int64_t n);

/// Componentwise minimum of {0 < C <= d : chi(C) = chi(d)}; empty if that
/// set has no minimum.
std::optional<Cycle> minimal_model(const ResolutionGraph& g, const Cycle& d);

struct BoxMinimum {
  Integer value;
  /// Lexicographically smallest minimizer in the box.
  Cycle witness;
};

/// min chi(D) - a.D over D supported in s with 0 <= D_i <= hi_i (D != 0
/// unless allow_zero). Empty if the box has no admissible point.
std::optional<BoxMinimum> minimize_chi_in_box(const ResolutionGraph& g, const VertexSet& s,
                                              const Cycle& a, bool allow_zero, const Vec& hi);

/// Checks Konno's decomposition conditions with the brute-force
/// chain-connectedness test. Returns the first violated condition.
std::optional<std::string> konno_violation(const ResolutionGraph& g, const Cycle& d,
                                           const std::vector<CccPart>& parts);

/// Every decomposition of d satisfying Konno's conditions, as multisets
/// ordered by descending height then lexicographically. Empty optional if
/// the search exceeds `node_limit`.
std::optional<std::vector<std::vector<CccPart>>> all_ccc_decompositions(
    const ResolutionGraph& g, const Cycle& d, std::size_t node_limit);

/// First D in [0, hi] with l.D != 0 and l.D <= -2 chi(D), if any.
std::optional<Cycle> rohr_counterexample(const ResolutionGraph& g, const Cycle& l, const Vec& hi);

/// Whether d = c1 + c2 with c1 chain-connected, l.c1 != 0, c2 >= 0 on
/// l-perp and c1 anti-nef on c2.
bool is_extension(const ResolutionGraph& g, const Cycle& l, const Cycle& c1, const Cycle& c2);

/// Checks lambda dominance over the box: every extension C1 + C2 with
/// C1 chain-connected below zf (every chain-connected cycle lies below the
/// fundamental cycle) and C2 <= n coordinatewise has its floored ratio
/// <= lambda, and the claimed witness attains lambda. Returns a description
/// of the first violation.
std::optional<std::string> lambda_violation(const ResolutionGraph& g, const Cycle& z,
                                            const Integer& lambda, const Cycle& c1,
                                            const Cycle& c2, const Cycle& zf, std::int64_t n);

}  // namespace singlattice::oracle
