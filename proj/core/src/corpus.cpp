#include "singlattice/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

#include "singlattice/bounds.hpp"
#include "singlattice/errors.hpp"
#include "singlattice/lattice.hpp"

namespace singlattice {

namespace {

Expectation lit(std::string q, Integer v) {
  return {std::move(q), Comparator::eq, std::move(v), Provenance::literature};
}
Expectation derived(std::string q, Integer v, Comparator c = Comparator::eq) {
  return {std::move(q), c, std::move(v), Provenance::derived};
}
Expectation regression(std::string q, Integer v) {
  return {std::move(q), Comparator::eq, std::move(v), Provenance::regression};
}

std::vector<CorpusEntry> build_corpus() {
  std::vector<CorpusEntry> out;
  out.push_back({"A1",
                 a1_graph_text(),
                 {lit("p_f", 0), lit("p_a", 0), derived("zf_height", 1),
                  derived("lambda_plus_two", 1), lit("best_bound", 1)}});
  for (int d = 3; d <= 8; ++d) {
    const int u = d / 2 - 1;
    out.push_back({"HY(" + std::to_string(d) + ")",
                   hy_graph_text(d),
                   {lit("p_f", (d - 1) * (d - 2) / 2), lit("p_a", 1 + d * u * (d - u - 2) / 2),
                    lit("lambda_plus_two", d - 1), lit("best_bound", d - 1),
                    derived("ac_degree", d)}});
  }
  for (int p = 1; p <= 3; ++p) {
    for (int m = 1; m <= 3; ++m) {
      CorpusEntry e{"KYC(" + std::to_string(p) + "," + std::to_string(m) + ")",
                    kyc_graph_text(p, m),
                    {lit("p_f", p), lit("p_a", m * p * (p - 1) / 2 + 1), derived("zf_height", m)}};
      if (m == 3) e.expectations.push_back(derived("chain_set_size", 6));
      if (p == 1 && m == 3) e.expectations.push_back(derived("elliptic_length", 3));
      out.push_back(std::move(e));
    }
  }
  out.push_back({"FIG2",
                 fig2_graph_text(),
                 {lit("p_f", 2), lit("p_a", 2), lit("zf_height", 5), lit("mc_zf_height", 5),
                  derived("lambda_plus_two", 3), derived("best_bound", 3)}});
  out.push_back({"TOM",
                 tom_graph_text(),
                 {lit("p_f", 2), derived("zf_height", 4), derived("p_a", 3, Comparator::at_least),
                  regression("p_a", 3), lit("zariski(2,9)", 4)}});
  out.push_back({"STAR-AC",
                 star_ac_graph_text(),
                 {derived("p_f", 2), derived("ac_degree", 1), derived("ac_delta", 2),
                  derived("ac_global_bound", 3), derived("w_height", 1)}});
  return out;
}

Cycle ideal_cycle(const GraphDocument& doc) {
  for (const auto& [name, c] : doc.cycles) {
    if (name == "z") return c;
  }
  return fundamental_cycle(doc.graph);
}

AlmostConeProfile require_profile(const ResolutionGraph& g) {
  const auto ac = almost_cone_profile(g);
  if (!ac.profile) throw PreconditionError("not an almost cone: " + ac.reason);
  return *ac.profile;
}

}  // namespace

std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::literature: return "literature";
    case Provenance::derived: return "derived";
    case Provenance::regression: return "regression";
  }
  return "?";
}

std::string_view to_string(Comparator c) { return c == Comparator::eq ? "==" : ">="; }

std::string hy_graph_text(int d) {
  return "graph HY_" + std::to_string(d) + "\nv E sq=-" + std::to_string(d) +
         " g=" + std::to_string((d - 1) * (d - 2) / 2) + "\n";
}

std::string kyc_graph_text(int p, int m) {
  std::string s = "graph KYC_p" + std::to_string(p) + "_m" + std::to_string(m) + "\n";
  s += "v E1 sq=-1 g=" + std::to_string(p) + "\n";
  for (int i = 2; i <= m; ++i) s += "v E" + std::to_string(i) + " sq=-2\n";
  for (int i = 2; i <= m; ++i) s += "e E" + std::to_string(i - 1) + " E" + std::to_string(i) + "\n";
  return s;
}

std::string fig2_graph_text() {
  return "graph FIG2\n"
         "v F0 sq=-2 g=1\n"
         "v F1 sq=-2\n"
         "v F2 sq=-2\n"
         "v F3 sq=-2\n"
         "e F0 F1\n"
         "e F0 F2\n"
         "e F0 F3\n";
}

std::string tom_graph_text() {
  return "graph TOM\n"
         "v E1 sq=-2\n"
         "v E2 sq=-3\n"
         "v E3 sq=-1 g=1\n"
         "v E4 sq=-1 g=1\n"
         "e E1 E2\n"
         "e E2 E3\n"
         "e E2 E4\n";
}

std::string a1_graph_text() { return "graph A1\nv E sq=-2\n"; }

std::string star_ac_graph_text() {
  return "graph STAR_AC\n"
         "v C sq=-2 g=2\n"
         "v E1 sq=-2\n"
         "e C E1\n"
         "cycle z C=1 E1=2\n";
}

const std::vector<CorpusEntry>& corpus_entries() {
  static const std::vector<CorpusEntry> entries = build_corpus();
  return entries;
}

GraphDocument corpus_document(const CorpusEntry& entry) { return parse_graph(entry.graph_source); }

const std::vector<std::string>& corpus_quantities() {
  static const std::vector<std::string> names{
      "p_f",       "p_a",        "zf_height",       "mc_zf_height", "chain_set_size",
      "lambda_plus_two", "best_bound", "ac_degree", "ac_delta", "ac_global_bound",
      "elliptic_length", "w_height", "zariski(a,b)"};
  return names;
}

Integer corpus_quantity(const GraphDocument& doc, std::string_view q) {
  const ResolutionGraph& g = doc.graph;
  if (q.rfind("zariski(", 0) == 0 && q.back() == ')') {
    const auto inner = q.substr(8, q.size() - 9);
    const auto comma = inner.find(',');
    Integer a, b;
    if (comma == std::string_view::npos || !parse_integer(std::string(inner.substr(0, comma)), a) ||
        !parse_integer(std::string(inner.substr(comma + 1)), b)) {
      throw PreconditionError("malformed quantity '" + std::string(q) + "'");
    }
    return zariski_formula(a, b);
  }
  require_valid(g);
  if (q == "p_f") return genus_invariants(g).p_f;
  if (q == "p_a") return genus_invariants(g).p_a;
  if (q == "zf_height") return fundamental_cycle(g).height();
  if (q == "mc_zf_height") return minimal_model(g, fundamental_cycle(g)).height();
  if (q == "chain_set_size") return Integer(enumerate_B(g).size());
  if (q == "lambda_plus_two") return br_bound_report(g, ideal_cycle(doc)).find("lambda_plus_two")->value;
  if (q == "best_bound") return br_bound_report(g, ideal_cycle(doc)).best;
  if (q == "ac_degree") return require_profile(g).degree;
  if (q == "ac_delta") return require_profile(g).delta;
  if (q == "ac_global_bound") return ac_bound(g, std::nullopt).bound;
  if (q == "elliptic_length") return Integer(elliptic_sequence(g).size());
  if (q == "w_height") {
    const Cycle z = ideal_cycle(doc);
    const auto b = orthogonal_component_containing_mc(g, z);
    if (!b) throw PreconditionError("no component of z-perp contains the minimal model");
    return connecting_cycle_W(g, z, *b).height();
  }
  throw PreconditionError("unknown quantity '" + std::string(q) + "'");
}

bool EntryReport::passed() const {
  return std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed; });
}

std::vector<EntryReport> run_corpus(std::size_t jobs) {
  const auto& entries = corpus_entries();
  std::vector<EntryReport> reports(entries.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < entries.size(); i = next++) {
      const auto& e = entries[i];
      EntryReport r{e.name, {}};
      std::optional<GraphDocument> doc;
      std::string load_error;
      try {
        doc = corpus_document(e);
      } catch (const std::exception& ex) {
        load_error = ex.what();
      }
      for (const auto& x : e.expectations) {
        ExpectationResult res{x, 0, false, load_error};
        if (doc) {
          try {
            res.actual = corpus_quantity(*doc, x.quantity);
            res.passed = x.comparator == Comparator::eq ? res.actual == x.expected
                                                        : res.actual >= x.expected;
          } catch (const std::exception& ex) {
            res.error = ex.what();
          }
        }
        r.results.push_back(std::move(res));
      }
      reports[i] = std::move(r);
    }
  };
  jobs = std::clamp<std::size_t>(jobs, 1, entries.size());
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return reports;
}

std::string format_corpus_report(const std::vector<EntryReport>& reports) {
  std::ostringstream out;
  std::size_t total = 0, passed = 0;
  for (const auto& r : reports) {
    for (const auto& x : r.results) {
      ++total;
      if (x.passed) ++passed;
      out << r.name << '.' << x.expectation.quantity << " = ";
      if (x.error.empty()) {
        out << x.actual;
      } else {
        out << "error (" << x.error << ')';
      }
      out << " | expected " << to_string(x.expectation.comparator) << ' ' << x.expectation.expected
          << " | " << to_string(x.expectation.provenance) << " | " << (x.passed ? "pass" : "FAIL")
          << '\n';
    }
  }
  out << "summary = " << passed << '/' << total << " expectations passed\n";
  return out.str();
}

}  // namespace singlattice
