#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "singlattice/graph.hpp"

namespace singlattice {

/// Picks which eligible vertex Laufer's algorithm increments next.
/// `eligible` is nonempty and sorted; the default takes the first.
using IncrementChooser = std::function<VertexIndex(const std::vector<VertexIndex>& eligible)>;

/// Minimal positive cycle Z with supp(Z) = s that is anti-nef on s.
/// Starts from the reduced cycle on s and increments a coefficient with
/// positive self-pairing until none is left. Throws PreconditionError if s
/// is empty or disconnected.
Cycle fundamental_cycle(const ResolutionGraph& g, const VertexSet& s,
                        const IncrementChooser& choose = {});
Cycle fundamental_cycle(const ResolutionGraph& g);

/// C_1 = E_seed, C_i = C_{i-1} + E_j with C_{i-1}.E_j > 0 (lowest j),
/// ending at Z_f.
std::vector<Cycle> computation_sequence(const ResolutionGraph& g, VertexIndex seed);

/// The finite set of cycles occurring in computation sequences for Z_f,
/// i.e. the chain-connected cycles. Members are sorted by height, then
/// lexicographically.
class ChainSet {
 public:
  ChainSet() = default;
  explicit ChainSet(std::vector<Cycle> members);

  const std::vector<Cycle>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool contains(const Cycle& c) const { return index_.count(c) != 0; }

 private:
  std::vector<Cycle> members_;
  std::unordered_set<Cycle, CycleHash> index_;
};

/// Closure of the unit cycles under C -> C + E_j whenever C.E_j > 0.
ChainSet enumerate_B(const ResolutionGraph& g);

/// Whether `d` is reachable from a unit cycle through states C <= d with
/// positive-pairing steps. Throws PreconditionError unless d is positive.
bool is_chain_connected(const ResolutionGraph& g, const Cycle& d);

/// Maximal chain-connected C <= d by greedy saturation from every support
/// vertex. `d` must be positive.
Cycle chain_connected_component(const ResolutionGraph& g, const Cycle& d);

struct CccPart {
  Integer multiplicity;
  Cycle cycle;
};

struct CccDecomposition {
  std::vector<CccPart> parts;
  /// Greedy extraction failed verification and the exhaustive search ran.
  bool fallback_used = false;
};

/// Konno's chain-connected component decomposition d = sum m_i D_i.
/// Throws PreconditionError unless d is positive, InvariantViolation if no
/// verified decomposition is found.
CccDecomposition ccc_decompose(const ResolutionGraph& g, const Cycle& d);

/// Checks the decomposition conditions: the parts are distinct,
/// chain-connected and re-sum to d; for i < j the supports are disjoint or
/// D_i >= D_j, and D_i is anti-nef on D_j; D_i is anti-nef on itself when
/// m_i >= 2. Returns a description of the first failure.
std::optional<std::string> check_ccc(const ResolutionGraph& g, const Cycle& d,
                                     const std::vector<CccPart>& parts);

/// Process-wide number of times ccc_decompose needed its exhaustive search.
std::size_t ccc_fallback_activations();

/// The minimal model of d: the smallest C <= d with chi(C) = chi(d),
/// equivalently the largest C <= d with K + C nef on C. Requires d
/// chain-connected with chi(d) <= 0.
Cycle minimal_model(const ResolutionGraph& g, const Cycle& d);

struct ChiMinimum {
  Integer value;
  /// Lexicographically smallest minimizer.
  Cycle witness;
  /// Per-vertex upper bound on every minimizer's coefficients (0 off the
  /// searched support).
  std::vector<Integer> search_bound;
};

/// Exact minimum of chi(D) - a.D over integer D >= 0 supported in s
/// (D != 0 unless allow_zero). Branch and bound over the ellipsoid given
/// by an exact LDL^T factorization of -M restricted to s.
ChiMinimum minimize_chi_shifted(const ResolutionGraph& g, const VertexSet& s, const Cycle& a,
                                bool allow_zero);

struct GenusInvariants {
  Cycle fundamental_cycle;
  Integer p_f;
  Integer p_a;
  Cycle pa_witness;
};

GenusInvariants genus_invariants(const ResolutionGraph& g);

}  // namespace singlattice
