#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "printers.hpp"
#include "singlattice/corpus.hpp"
#include "singlattice/errors.hpp"
#include "singlattice/lattice.hpp"
#include "singlattice/selfcheck.hpp"

namespace {

using namespace singlattice;

TEST(Corpus, EveryExpectationPasses) {
  const auto reports = run_corpus(1);
  ASSERT_EQ(reports.size(), corpus_entries().size());
  for (const auto& r : reports) {
    for (const auto& e : r.results) {
      EXPECT_TRUE(e.passed) << r.name << '.' << e.expectation.quantity << " = " << to_string(e.actual)
                            << ", expected " << to_string(e.expectation.expected) << ' ' << e.error;
    }
  }
}

TEST(Corpus, OutputIndependentOfThreadCount) {
  const std::string one = format_corpus_report(run_corpus(1));
  EXPECT_EQ(format_corpus_report(run_corpus(3)), one);
  EXPECT_EQ(format_corpus_report(run_corpus(16)), one);
  EXPECT_NE(one.find("summary = "), std::string::npos);
}

TEST(Corpus, NamesAreUniqueAndQuantitiesKnown) {
  std::set<std::string> names;
  const auto& known = corpus_quantities();
  for (const auto& entry : corpus_entries()) {
    EXPECT_TRUE(names.insert(entry.name).second) << entry.name;
    for (const auto& e : entry.expectations) {
      const bool listed = std::find(known.begin(), known.end(), e.quantity) != known.end() ||
                          e.quantity.rfind("zariski(", 0) == 0;
      EXPECT_TRUE(listed) << e.quantity;
    }
  }
  EXPECT_THROW(corpus_quantity(corpus_document(corpus_entries().front()), "bogus"), PreconditionError);
}

TEST(Corpus, EveryGraphPassesSelfChecks) {
  SelfCheckOptions opts;
  opts.max_box = 200'000;
  for (const auto& entry : corpus_entries()) {
    const auto doc = corpus_document(entry);
    for (const auto& r : run_self_checks(doc.graph, opts)) {
      EXPECT_NE(r.status, CheckStatus::fail) << entry.name << ' ' << r.name << ": " << r.detail;
    }
  }
}

TEST(Corpus, FamilyTextsParse) {
  EXPECT_EQ(corpus_document({"x", hy_graph_text(4), {}}).graph.vertex(0).genus, 3);
  const auto kyc = corpus_document({"x", kyc_graph_text(2, 4), {}}).graph;
  EXPECT_EQ(kyc.size(), 4u);
  EXPECT_EQ(kyc.vertex(0).self_intersection, -1);
}

}  // namespace
