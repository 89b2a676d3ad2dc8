#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "singlattice/arith.hpp"
#include "singlattice/graph.hpp"
#include "singlattice/graph_io.hpp"

namespace singlattice {

/// Where an expected value comes from.
///   literature: stated for the example in the source literature
///   derived:    worked out by hand and confirmed by an oracle
///   regression: produced by the oracle-checked implementation and pinned
enum class Provenance { literature, derived, regression };
enum class Comparator { eq, at_least };

std::string_view to_string(Provenance p);
std::string_view to_string(Comparator c);

struct Expectation {
  /// One of corpus_quantities().
  std::string quantity;
  Comparator comparator = Comparator::eq;
  Integer expected;
  Provenance provenance = Provenance::literature;
};

struct CorpusEntry {
  std::string name;
  std::string graph_source;
  std::vector<Expectation> expectations;
};

/// Graph texts of the bundled families.
std::string hy_graph_text(int d);            // single vertex, sq = -d, g = (d-1)(d-2)/2
std::string kyc_graph_text(int p, int m);    // chain E1 (sq -1, g p), E2..Em (sq -2)
std::string fig2_graph_text();               // star F0 (sq -2, g 1) with three -2 leaves
std::string tom_graph_text();
std::string a1_graph_text();
std::string star_ac_graph_text();

/// Entries in declaration order: A1, HY(3..8), KYC(p,m), FIG2, TOM, STAR-AC.
const std::vector<CorpusEntry>& corpus_entries();

GraphDocument corpus_document(const CorpusEntry& entry);

/// Names accepted in Expectation::quantity.
const std::vector<std::string>& corpus_quantities();

/// Evaluates a named quantity. Quantities involving an ideal use the
/// document's cycle `z` if present, else Z_f; the gonality lower bound is 2.
/// `zariski(a,b)` evaluates zariski_formula and ignores the graph.
Integer corpus_quantity(const GraphDocument& doc, std::string_view quantity);

struct ExpectationResult {
  Expectation expectation;
  Integer actual;
  bool passed = false;
  /// Set when computing the quantity threw.
  std::string error;
};

struct EntryReport {
  std::string name;
  std::vector<ExpectationResult> results;
  bool passed() const;
};

/// Runs every entry, using up to `jobs` threads. Reports are in declaration
/// order regardless of scheduling.
std::vector<EntryReport> run_corpus(std::size_t jobs = 1);

/// Deterministic table of the reports, ending with a summary line.
std::string format_corpus_report(const std::vector<EntryReport>& reports);

}  // namespace singlattice
