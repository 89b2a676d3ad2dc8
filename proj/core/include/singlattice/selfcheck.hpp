#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "singlattice/graph.hpp"

namespace singlattice {

enum class CheckStatus { pass, fail, skipped };
std::string_view to_string(CheckStatus s);

struct CheckOutcome {
  std::string name;
  CheckStatus status = CheckStatus::pass;
  std::string detail;
};

struct SelfCheckOptions {
  /// Upper limit on the lattice points an oracle enumeration may visit.
  std::size_t max_box = 1'000'000;
  /// Node budget of the exhaustive decomposition search.
  std::size_t ccc_node_limit = 200'000;
};

/// SINGLATTICE_MAX_BOX if set to a positive integer, else the default.
std::size_t max_box_from_env();

// Each check compares a constructive routine with its brute-force oracle on
// one graph. A check whose oracle would exceed max_box reports skipped.

/// Bareiss minors against cofactor expansion.
CheckOutcome check_minors(const ResolutionGraph& g, const SelfCheckOptions& opts);
/// Laufer's algorithm against box enumeration and a reversed increment order.
CheckOutcome check_fundamental_cycle(const ResolutionGraph& g, const SelfCheckOptions& opts);
/// enumerate_B against the chain-connected cycles below Z_f, plus
/// computation sequences and p_a(C) <= p_f on the chain set.
CheckOutcome check_chain_set(const ResolutionGraph& g, const SelfCheckOptions& opts);
/// is_chain_connected against the definition on every 0 < D <= Z_f + E.
CheckOutcome check_chain_connected(const ResolutionGraph& g, const SelfCheckOptions& opts);
/// ccc_decompose against Konno's conditions and the exhaustive search.
CheckOutcome check_ccc(const ResolutionGraph& g, const SelfCheckOptions& opts);
/// minimal_model against min{C <= D : chi(C) = chi(D)} on the chain set.
CheckOutcome check_minimal_model(const ResolutionGraph& g, const SelfCheckOptions& opts);
/// minimize_chi_shifted against box enumeration.
CheckOutcome check_chi_minimum(const ResolutionGraph& g, const SelfCheckOptions& opts);
/// p_f <= p_a.
CheckOutcome check_genus(const ResolutionGraph& g, const SelfCheckOptions& opts);
/// Mode monotonicity, and exact mode against the bounded Röhr box.
CheckOutcome check_conditions(const ResolutionGraph& g, const SelfCheckOptions& opts);
/// lambda_exact against box enumeration of extensions.
CheckOutcome check_lambda(const ResolutionGraph& g, const SelfCheckOptions& opts);
/// br_bound_report on Z_f.
CheckOutcome check_bounds(const ResolutionGraph& g, const SelfCheckOptions& opts);
/// elliptic_sequence postconditions (graphs with p_f = 1).
CheckOutcome check_elliptic_sequence(const ResolutionGraph& g, const SelfCheckOptions& opts);
/// connecting_cycle_W for z = Z_f when its preconditions hold.
CheckOutcome check_connecting_cycle(const ResolutionGraph& g, const SelfCheckOptions& opts);
/// Invariance of genera, almost-cone data, chi and the form under every
/// blow-up, and the numerical pullback of total transforms.
CheckOutcome check_blow_ups(const ResolutionGraph& g, const SelfCheckOptions& opts);
/// Printing the graph and computed cycles and parsing them back.
CheckOutcome check_roundtrip(const ResolutionGraph& g, const SelfCheckOptions& opts);

/// Runs every check above in order. Requires a valid graph.
std::vector<CheckOutcome> run_self_checks(const ResolutionGraph& g, const SelfCheckOptions& opts = {});

}  // namespace singlattice
