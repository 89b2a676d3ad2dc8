#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "singlattice/graph.hpp"
#include "singlattice/lattice.hpp"

namespace singlattice {

/// Members C of the chain set with l.C != 0. Throws PreconditionError if l
/// is numerically trivial.
std::vector<Cycle> restricted_B(const ResolutionGraph& g, const Cycle& l);
std::vector<Cycle> restricted_B(const ResolutionGraph& g, const ChainSet& b, const Cycle& l);

enum class ConditionMode { rohr, exact, remark1, remark2 };

std::string_view to_string(ConditionMode mode);
/// Throws PreconditionError for an unknown name.
ConditionMode parse_condition_mode(std::string_view name);

/// Verdict on an inequality of the form l.C > -2 * (chi term) over a
/// finite family of cycles.
///
///   rohr     l.C > -2 chi(C)               for every C in the chain set
///   exact    l.C > -2 chi(C)               for every extension C = C1 + C2,
///                                          C1 in B(l), C2 >= 0 on l-perp,
///                                          C1 anti-nef on C2
///   remark1  l.C > -2 (chi(C) + chi_l)     for every C in B(l)
///   remark2  l.C > -2 (chi(Z_f) + chi_l)   for every C in B(l)
///
/// In the remark modes chi_l enters only when negative (see
/// vanishing_condition).
struct ConditionVerdict {
  ConditionMode mode = ConditionMode::exact;
  bool holds = false;
  /// A cycle attaining the minimum margin; present iff holds is false.
  std::optional<Cycle> witness;
  /// Minimum of l.C + 2 * (chi term) over the checked cycles.
  Integer margin;
  /// min chi over positive cycles supported on l-perp (0 if l-perp is
  /// empty); reported by the remark modes.
  std::optional<Integer> chi_perp;
};

/// Decides the condition exactly in every mode. The extension family in
/// exact mode is infinite; for each C1 the inner minimum of chi(C1 + C2)
/// is found by minimize_chi_shifted.
///
/// chi_l is replaced by min(chi_l, 0) in the remark modes: C2 = 0 is an
/// admissible extension, so only a negative chi_l can lower the bound.
/// This keeps remark2 => remark1 => exact.
ConditionVerdict vanishing_condition(const ResolutionGraph& g, const Cycle& l, ConditionMode mode);

/// Evaluates all four modes and throws InvariantViolation unless
/// remark2 => remark1 => exact.
std::vector<ConditionVerdict> check_mode_consistency(const ResolutionGraph& g, const Cycle& l);

struct LambdaResult {
  /// max over extensions D of floor((2 p_a(D) - 2) / (-Z.D)).
  Integer value;
  Cycle c1;
  Cycle c2;
  /// -2 chi(c1 + c2) and -Z.c1 at the witness.
  Integer numerator;
  Integer denominator;
};

/// lambda(Z, X) on the given graph. For fixed C1 the denominator -Z.C1 does
/// not depend on C2, so the maximum over the infinite extension family is
/// attained where chi(C1 + C2) is minimal. Requires z positive and
/// anti-nef.
LambdaResult lambda_exact(const ResolutionGraph& g, const Cycle& z);

struct AlmostConeProfile {
  VertexIndex central = 0;
  Integer genus;   // p_f
  Integer degree;  // -Z_f.C
  Integer delta;   // max(2, degree)
};

struct AlmostConeCheck {
  std::optional<AlmostConeProfile> profile;
  /// Failing condition when profile is empty.
  std::string reason;
};

/// p_f >= 1 and the minimal model of Z_f is a single smooth component C
/// with Z_f.C < 0.
AlmostConeCheck almost_cone_profile(const ResolutionGraph& g);

enum class AcCase { zc_negative, zc_zero, global };
std::string_view to_string(AcCase c);

struct AcBound {
  Integer bound;
  AcCase which = AcCase::global;
  AlmostConeProfile profile;
};

/// Almost-cone bound floor((2g - 2) / divisor) + 2 where the divisor is the
/// gonality lower bound (z.C < 0), delta (z.C = 0), or their minimum
/// (no z). A lower bound for the gonality gives a valid upper bound.
AcBound ac_bound(const ResolutionGraph& g, const std::optional<Cycle>& z,
                 const Integer& gonality_lower = 2);

/// Nested fundamental cycles Z_0 = Z_B, Z_{i+1} = fundamental cycle of the
/// component of Z_i-perp (inside s) containing the minimally elliptic cycle
/// C, stopping at the first Z_m with Z_m.C < 0. Requires chi(Z_B) = 0.
std::vector<Cycle> elliptic_sequence(const ResolutionGraph& g,
                                     const std::optional<VertexSet>& s = std::nullopt);

/// The connected component of z-perp that contains supp(M), M the minimal
/// model of Z_f, if one exists.
std::optional<VertexSet> orthogonal_component_containing_mc(const ResolutionGraph& g, const Cycle& z);

/// Cycle W with red(W) = b, anti-nef on b, reduced at every connecting
/// component and W.M <= -2 (M the minimal model of Z_f). W = Z_b when
/// Z_b.M <= -2, otherwise W = Z_b + Z_b' with b' the component of
/// (Z_b-perp within b) u supp(M) containing supp(M).
/// Throws PreconditionError naming the failed precondition.
Cycle connecting_cycle_W(const ResolutionGraph& g, const Cycle& z, const VertexSet& b);

/// floor((a - 1) b / a) for 2 <= a <= b.
Integer zariski_formula(const Integer& a, const Integer& b);

struct BoundEntry {
  std::string label;
  Integer value;
  std::string source;
  std::string witness;
};

struct BoundReport {
  std::vector<BoundEntry> bounds;
  Integer best;
  std::vector<std::string> notes;

  const BoundEntry* find(std::string_view label) const;
};

struct BoundOptions {
  std::optional<Integer> pg;
  Integer gonality_lower = 2;
};

/// Upper bounds for the normal reduction number of the ideal represented
/// by z: p_a + 1, lambda + 2, p_g + 1 (if p_g is supplied) and the
/// almost-cone bound (if applicable).
BoundReport br_bound_report(const ResolutionGraph& g, const Cycle& z, const BoundOptions& opts = {});

}  // namespace singlattice
