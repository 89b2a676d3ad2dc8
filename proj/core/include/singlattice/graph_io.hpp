#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "singlattice/graph.hpp"

namespace singlattice {

/// A parsed graph file: the graph plus its named cycles in declaration order.
struct GraphDocument {
  ResolutionGraph graph;
  std::vector<std::pair<std::string, Cycle>> cycles;

  /// Throws PreconditionError if no cycle has this name.
  const Cycle& cycle(std::string_view name) const;
};

/// Line-oriented graph format:
///
///   graph <name>                        optional, first statement
///   v <id> sq=<int> [g=<int>] [sing]    vertex
///   e <id> <id> [m=<int>]               edge, multiplicity defaults to 1
///   cycle <name> <id>=<int> ...         named cycle, omitted ids are 0
///
/// `#` comments run to end of line. Throws ParseError. The graph is not
/// checked for connectedness or negative definiteness here.
GraphDocument parse_graph(std::string_view text);

GraphDocument load_graph_file(const std::string& path);

/// `id:coef` pairs in declaration order, space separated.
std::string format_cycle(const ResolutionGraph& g, const Cycle& c);
std::string format_cycle(const ResolutionGraph& g, const RationalCycle& c);

/// `cycle <name> id=coef ...` statement accepted by parse_graph.
std::string format_cycle_statement(const ResolutionGraph& g, std::string_view name,
                                   const Cycle& c);

/// Comma separated ids, e.g. `E1,E2`.
std::string format_vertex_set(const ResolutionGraph& g, const VertexSet& s);

/// Parses `id,id,...` into a sorted vertex set. Throws PreconditionError.
VertexSet parse_vertex_list(const ResolutionGraph& g, std::string_view list);

/// Graph file text that parses back to `g`.
std::string format_graph(const ResolutionGraph& g);

}  // namespace singlattice
