#include "singlattice/selfcheck.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <set>

#include "singlattice/bounds.hpp"
#include "singlattice/errors.hpp"
#include "singlattice/graph_io.hpp"
#include "singlattice/lattice.hpp"
#include "singlattice/oracle.hpp"

namespace singlattice {

namespace {

CheckOutcome pass(std::string name, std::string detail = {}) {
  return {std::move(name), CheckStatus::pass, std::move(detail)};
}
CheckOutcome fail(std::string name, std::string detail) {
  return {std::move(name), CheckStatus::fail, std::move(detail)};
}
CheckOutcome skip(std::string name, std::string detail) {
  return {std::move(name), CheckStatus::skipped, std::move(detail)};
}

std::size_t saturating_mul(std::size_t a, std::size_t b) {
  if (b != 0 && a > std::numeric_limits<std::size_t>::max() / b) {
    return std::numeric_limits<std::size_t>::max();
  }
  return a * b;
}

std::size_t as_size(const Integer& x) {
  if (x < 0) return 0;
  if (x > Integer(std::numeric_limits<std::size_t>::max() / 4)) {
    return std::numeric_limits<std::size_t>::max() / 4;
  }
  return static_cast<std::size_t>(x);
}

// Points visited when every 0 <= D <= t runs a brute-force test over its own
// box [0, D].
std::size_t nested_box_work(const Cycle& t) {
  std::size_t w = 1;
  for (std::size_t i = 0; i < t.size(); ++i) {
    const std::size_t ti = as_size(t[i]);
    w = saturating_mul(w, saturating_mul(ti + 1, ti + 2) / 2);
  }
  return w;
}

// Z_f + E if its nested sweep fits the budget, else Z_f, else nothing.
std::optional<Cycle> sweep_bound(const ResolutionGraph& g, const SelfCheckOptions& opts) {
  const Cycle zf = fundamental_cycle(g);
  const Cycle wide = zf + Cycle::reduced(g.size(), g.all_vertices());
  if (nested_box_work(wide) <= opts.max_box) return wide;
  if (nested_box_work(zf) <= opts.max_box) return zf;
  return std::nullopt;
}

template <class F>
void for_each_positive_below(const Cycle& t, F&& f) {
  Cycle d = Cycle::zero(t.size());
  for (;;) {
    std::size_t i = t.size();
    while (i > 0) {
      --i;
      if (d[i] < t[i]) {
        d[i] += 1;
        break;
      }
      d[i] = 0;
      if (i == 0) return;
    }
    if (t.size() == 0) return;
    f(static_cast<const Cycle&>(d));
  }
}

oracle::Vec uniform_box(const ResolutionGraph& g, std::size_t max_points) {
  return oracle::Vec(g.size(), oracle::uniform_bound(g.size(), std::max<std::size_t>(max_points, 1)));
}

bool within(const Cycle& c, const oracle::Vec& hi) {
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] > hi[i]) return false;
  }
  return true;
}

std::vector<std::pair<Integer, Cycle>> canonical_parts(const std::vector<CccPart>& parts) {
  std::vector<std::pair<Integer, Cycle>> out;
  for (const auto& p : parts) out.emplace_back(p.multiplicity, p.cycle);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return CycleLexLess{}(a.second, b.second);
    return a.first < b.first;
  });
  return out;
}

}  // namespace

std::string_view to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skipped: return "skipped";
  }
  return "?";
}

std::size_t max_box_from_env() {
  const char* v = std::getenv("SINGLATTICE_MAX_BOX");
  if (!v || !*v) return SelfCheckOptions{}.max_box;
  char* end = nullptr;
  const unsigned long long x = std::strtoull(v, &end, 10);
  if (*end != '\0' || x == 0) return SelfCheckOptions{}.max_box;
  return static_cast<std::size_t>(x);
}

CheckOutcome check_minors(const ResolutionGraph& g, const SelfCheckOptions&) {
  const std::string name = "minors";
  if (g.size() > 10) return skip(name, "more than 10 vertices");
  const auto v = validate_graph(g);
  const auto brute = oracle::leading_minors(g.intersection_matrix());
  for (std::size_t k = 0; k < v.minors.size(); ++k) {
    if (v.minors[k] != brute[k]) {
      return fail(name, "minor " + std::to_string(k + 1) + ": " + to_string(v.minors[k]) +
                            " vs cofactor " + to_string(brute[k]));
    }
  }
  bool nd = true;
  for (std::size_t k = 0; k < brute.size(); ++k) {
    const bool negative = brute[k] < 0;
    nd = nd && brute[k] != 0 && negative == (k % 2 == 0);
  }
  if (nd != v.negative_definite) return fail(name, "negative definiteness verdicts differ");
  return pass(name, std::to_string(brute.size()) + " minors agree");
}

CheckOutcome check_fundamental_cycle(const ResolutionGraph& g, const SelfCheckOptions& opts) {
  const std::string name = "fundamental_cycle";
  const Cycle zf = fundamental_cycle(g);
  const Cycle reversed = fundamental_cycle(
      g, g.all_vertices(), [](const std::vector<VertexIndex>& e) { return e.back(); });
  if (reversed != zf) return fail(name, "increment order changes the result: " + format_cycle(g, reversed));
  Integer top = 0;
  for (const auto& c : zf.coefficients()) top = std::max(top, c);
  const std::int64_t n = static_cast<std::int64_t>(top) + 1;
  if (oracle::box_points(oracle::Vec(g.size(), n)) > opts.max_box) {
    return skip(name, "box of side " + std::to_string(n) + " exceeds the budget");
  }
  const auto brute = oracle::fundamental_cycle_in_box(g, g.all_vertices(), n);
  if (!brute || *brute != zf) {
    return fail(name, "box minimum " + (brute ? format_cycle(g, *brute) : std::string("none")) +
                          " vs " + format_cycle(g, zf));
  }
  return pass(name, format_cycle(g, zf));
}

CheckOutcome check_chain_set(const ResolutionGraph& g, const SelfCheckOptions& opts) {
  const std::string name = "chain_set";
  const Cycle zf = fundamental_cycle(g);
  const ChainSet b = enumerate_B(g);
  const Integer pf = pa_cycle(g, zf);
  for (const auto& c : b.members()) {
    if (pa_cycle(g, c) > pf) return fail(name, "p_a(C) > p_f at " + format_cycle(g, c));
  }
  for (VertexIndex v = 0; v < g.size(); ++v) {
    const auto seq = computation_sequence(g, v);
    if (seq.back() != zf) return fail(name, "computation sequence does not end at Z_f");
    for (const auto& c : seq) {
      if (!b.contains(c)) return fail(name, "sequence element outside B: " + format_cycle(g, c));
    }
  }
  if (nested_box_work(zf) > opts.max_box) return skip(name, "oracle box exceeds the budget");
  const auto brute = oracle::chain_connected_below(g, zf);
  std::set<std::vector<Integer>> lhs, rhs;
  for (const auto& c : b.members()) lhs.insert(c.coefficients());
  for (const auto& c : brute) rhs.insert(c.coefficients());
  if (lhs != rhs) {
    return fail(name, "chain set has " + std::to_string(lhs.size()) + " members, oracle " +
                          std::to_string(rhs.size()));
  }
  return pass(name, std::to_string(b.size()) + " members");
}

CheckOutcome check_chain_connected(const ResolutionGraph& g, const SelfCheckOptions& opts) {
  const std::string name = "chain_connected";
  const auto t = sweep_bound(g, opts);
  if (!t) return skip(name, "oracle box exceeds the budget");
  std::size_t count = 0;
  std::optional<Cycle> bad;
  for_each_positive_below(*t, [&](const Cycle& d) {
    if (bad) return;
    ++count;
    if (is_chain_connected(g, d) != oracle::is_chain_connected(g, d)) bad = d;
  });
  if (bad) return fail(name, "verdicts differ at " + format_cycle(g, *bad));
  return pass(name, std::to_string(count) + " cycles below " + format_cycle(g, *t));
}

CheckOutcome check_ccc(const ResolutionGraph& g, const SelfCheckOptions& opts) {
  const std::string name = "ccc";
  const auto t = sweep_bound(g, opts);
  if (!t) return skip(name, "oracle box exceeds the budget");
  std::size_t count = 0, unique_checked = 0;
  std::optional<std::string> bad;
  for_each_positive_below(*t, [&](const Cycle& d) {
    if (bad) return;
    ++count;
    const auto dec = ccc_decompose(g, d);
    if (auto v = oracle::konno_violation(g, d, dec.parts)) {
      bad = format_cycle(g, d) + ": " + *v;
      return;
    }
    const auto all = oracle::all_ccc_decompositions(g, d, opts.ccc_node_limit);
    if (!all) return;
    ++unique_checked;
    if (all->size() != 1 || canonical_parts(all->front()) != canonical_parts(dec.parts)) {
      bad = format_cycle(g, d) + ": " + std::to_string(all->size()) +
            " decompositions found by exhaustive search";
    }
  });
  if (bad) return fail(name, *bad);
  return pass(name, std::to_string(count) + " cycles, uniqueness on " + std::to_string(unique_checked));
}

CheckOutcome check_minimal_model(const ResolutionGraph& g, const SelfCheckOptions& opts) {
  const std::string name = "minimal_model";
  std::size_t count = 0;
  const ChainSet chains = enumerate_B(g);
  for (const auto& c : chains.members()) {
    if (euler_chi(g, c) > 0) continue;
    if (oracle::box_points(oracle::to_vec(c)) > opts.max_box) continue;
    ++count;
    const Cycle m = minimal_model(g, c);
    const auto brute = oracle::minimal_model(g, c);
    if (!brute || *brute != m) {
      return fail(name, format_cycle(g, c) + ": " + format_cycle(g, m) + " vs oracle " +
                            (brute ? format_cycle(g, *brute) : std::string("none")));
    }
    for (VertexIndex i : m.support()) {
      if (g.canonical_degree(i) + pairing_with_vertex(g, m, i) < 0) {
        return fail(name, "K + C is not nef on " + format_cycle(g, m));
      }
    }
  }
  if (count == 0) return skip(name, "no chain-connected cycle with chi <= 0");
  return pass(name, std::to_string(count) + " cycles");
}

CheckOutcome check_chi_minimum(const ResolutionGraph& g, const SelfCheckOptions& opts) {
  const std::string name = "chi_minimum";
  const std::size_t n = g.size();
  const auto hi = uniform_box(g, opts.max_box);
  struct Case {
    Cycle a;
    bool allow_zero;
  };
  const Cycle zero = Cycle::zero(n);
  const std::vector<Case> cases{{zero, false},
                                {zero, true},
                                {Cycle::reduced(n, g.all_vertices()), false},
                                {fundamental_cycle(g), true}};
  std::size_t compared = 0;
  for (const auto& c : cases) {
    const auto bb = minimize_chi_shifted(g, g.all_vertices(), c.a, c.allow_zero);
    const auto box = oracle::minimize_chi_in_box(g, g.all_vertices(), c.a, c.allow_zero, hi);
    if (!box) continue;
    if (box->value < bb.value) {
      return fail(name, "box finds " + to_string(box->value) + " below " + to_string(bb.value) +
                            " at " + format_cycle(g, box->witness));
    }
    if (within(bb.witness, hi)) {
      ++compared;
      if (box->value != bb.value || box->witness != bb.witness) {
        return fail(name, "minimum " + to_string(bb.value) + " at " + format_cycle(g, bb.witness) +
                              " vs box " + to_string(box->value) + " at " +
                              format_cycle(g, box->witness));
      }
    }
  }
  return pass(name, std::to_string(compared) + " exact comparisons, box side " + std::to_string(hi[0]));
}

CheckOutcome check_genus(const ResolutionGraph& g, const SelfCheckOptions&) {
  const auto gi = genus_invariants(g);
  if (gi.p_f > gi.p_a) return fail("genus", "p_f > p_a");
  if (pa_cycle(g, gi.pa_witness) != gi.p_a) return fail("genus", "p_a witness does not attain p_a");
  return pass("genus", "p_f = " + to_string(gi.p_f) + ", p_a = " + to_string(gi.p_a));
}

CheckOutcome check_conditions(const ResolutionGraph& g, const SelfCheckOptions& opts) {
  const std::string name = "conditions";
  const std::size_t n = g.size();
  std::vector<Cycle> ls{Cycle::zero(n) - Cycle::reduced(n, g.all_vertices()),
                        Cycle::zero(n) - fundamental_cycle(g)};
  for (VertexIndex v = 0; v < n; ++v) ls.push_back(Cycle::zero(n) - Cycle::unit(n, v));
  const auto hi = uniform_box(g, opts.max_box);
  std::size_t checked = 0, holding = 0;
  for (const auto& l : ls) {
    bool trivial = true;
    for (VertexIndex v = 0; v < n; ++v) trivial = trivial && pairing_with_vertex(g, l, v) == 0;
    if (trivial) continue;
    ++checked;
    const auto verdicts = check_mode_consistency(g, l);
    const auto& exact = verdicts[1];
    if (exact.holds) {
      ++holding;
      if (auto d = oracle::rohr_counterexample(g, l, hi)) {
        return fail(name, "exact mode holds for l = " + format_cycle(g, l) +
                              " but the box violates it at " + format_cycle(g, *d));
      }
    } else {
      const Cycle& w = *exact.witness;
      if (intersection_number(g, l, w) > -2 * euler_chi(g, w)) {
        return fail(name, "witness " + format_cycle(g, w) + " satisfies the inequality");
      }
    }
  }
  return pass(name, std::to_string(checked) + " divisors, exact holds for " + std::to_string(holding));
}

CheckOutcome check_lambda(const ResolutionGraph& g, const SelfCheckOptions& opts) {
  const std::string name = "lambda";
  const Cycle zf = fundamental_cycle(g);
  const auto lam = lambda_exact(g, zf);
  const std::size_t members = enumerate_B(g).size();
  const std::int64_t side =
      oracle::uniform_bound(g.size(), std::max<std::size_t>(opts.max_box / std::max<std::size_t>(members, 1), 1));
  if (nested_box_work(zf) > opts.max_box) return skip(name, "oracle box exceeds the budget");
  if (auto v = oracle::lambda_violation(g, zf, lam.value, lam.c1, lam.c2, zf, side)) {
    return fail(name, *v);
  }
  return pass(name, "lambda = " + to_string(lam.value));
}

CheckOutcome check_bounds(const ResolutionGraph& g, const SelfCheckOptions&) {
  const std::string name = "bounds";
  const auto r = br_bound_report(g, fundamental_cycle(g));
  Integer m = r.bounds.front().value;
  for (const auto& e : r.bounds) {
    if (e.value < 1) return fail(name, e.label + " is below 1");
    m = std::min(m, e.value);
  }
  if (m != r.best) return fail(name, "best is not the minimum");
  if (almost_cone_profile(g).profile) ac_bound(g, std::nullopt);
  return pass(name, "best = " + to_string(r.best));
}

CheckOutcome check_elliptic_sequence(const ResolutionGraph& g, const SelfCheckOptions&) {
  const std::string name = "elliptic_sequence";
  const Cycle zf = fundamental_cycle(g);
  if (euler_chi(g, zf) != 0) return skip(name, "p_f != 1");
  const auto seq = elliptic_sequence(g);
  const Cycle c = minimal_model(g, zf);
  for (std::size_t i = 0; i < seq.size(); ++i) {
    const Cycle& z = seq[i];
    const std::string tag = "Z_" + std::to_string(i);
    if (!is_anti_nef_on(g, z, z.support())) return fail(name, tag + " is not anti-nef on its support");
    if (euler_chi(g, z) != 0) return fail(name, "chi(" + tag + ") != 0");
    for (VertexIndex v : c.support()) {
      if (z[v] != c[v]) return fail(name, tag + " differs from C at " + g.vertex(v).id);
    }
    const Integer zc = intersection_number(g, z, c);
    if ((i + 1 < seq.size() && zc != 0) || (i + 1 == seq.size() && zc >= 0)) {
      return fail(name, tag + ".C has the wrong sign");
    }
  }
  return pass(name, "length " + std::to_string(seq.size()));
}

CheckOutcome check_connecting_cycle(const ResolutionGraph& g, const SelfCheckOptions&) {
  const std::string name = "connecting_cycle";
  const Cycle zf = fundamental_cycle(g);
  const auto b = orthogonal_component_containing_mc(g, zf);
  if (!b) return skip(name, "no component of Z_f-perp contains the minimal model");
  try {
    const Cycle w = connecting_cycle_W(g, zf, *b);
    return pass(name, "W = " + format_cycle(g, w));
  } catch (const PreconditionError& e) {
    return skip(name, e.what());
  }
}

CheckOutcome check_blow_ups(const ResolutionGraph& g, const SelfCheckOptions&) {
  const std::string name = "blow_up";
  const auto base = genus_invariants(g);
  const auto ac = almost_cone_profile(g);
  const auto sites = all_blow_up_sites(g);
  for (const auto& site : sites) {
    const auto bu = blow_up(g, site);
    const auto& y = bu.graph();
    const std::string where =
        "blow-up at " + (std::holds_alternative<VertexIndex>(site)
                             ? g.vertex(std::get<VertexIndex>(site)).id
                             : g.vertex(std::get<EdgeSite>(site).a).id + "-" +
                                   g.vertex(std::get<EdgeSite>(site).b).id);
    const auto up = genus_invariants(y);
    if (up.p_f != base.p_f || up.p_a != base.p_a) return fail(name, where + " changes p_f or p_a");
    const Cycle pulled = bu.total_transform(base.fundamental_cycle);
    if (pulled != up.fundamental_cycle) return fail(name, where + ": f*Z_f is not the fundamental cycle");
    const auto ac_up = almost_cone_profile(y);
    if (ac.profile.has_value() != ac_up.profile.has_value()) {
      return fail(name, where + " changes the almost-cone status");
    }
    if (ac.profile && (ac.profile->genus != ac_up.profile->genus ||
                       ac.profile->degree != ac_up.profile->degree)) {
      return fail(name, where + " changes the almost-cone data");
    }
    std::vector<Cycle> probes{base.fundamental_cycle, base.pa_witness};
    for (VertexIndex v = 0; v < g.size(); ++v) probes.push_back(Cycle::unit(g.size(), v));
    for (const auto& d : probes) {
      if (euler_chi(y, bu.total_transform(d)) != euler_chi(g, d)) {
        return fail(name, where + " changes chi of " + format_cycle(g, d));
      }
    }
    for (VertexIndex i = 0; i < g.size(); ++i) {
      for (VertexIndex j = i; j < g.size(); ++j) {
        const auto a = bu.total_transform(Cycle::unit(g.size(), i));
        const auto b = bu.total_transform(Cycle::unit(g.size(), j));
        if (intersection_number(y, a, b) != g.form(i, j)) return fail(name, where + " changes the form");
      }
    }
    Cycle truncated = pulled;
    truncated[bu.exceptional()] = 0;
    if (numerical_pullback(y, {bu.exceptional()}, truncated) != RationalCycle(pulled)) {
      return fail(name, where + ": numerical pullback differs from the total transform");
    }
  }
  return pass(name, std::to_string(sites.size()) + " sites");
}

CheckOutcome check_roundtrip(const ResolutionGraph& g, const SelfCheckOptions&) {
  const std::string name = "roundtrip";
  const auto gi = genus_invariants(g);
  const std::string text = format_graph(g) + format_cycle_statement(g, "zf", gi.fundamental_cycle) +
                           "\n" + format_cycle_statement(g, "pa", gi.pa_witness) + "\n";
  const auto doc = parse_graph(text);
  if (format_graph(doc.graph) != format_graph(g)) return fail(name, "graph text does not round-trip");
  if (doc.cycle("zf") != gi.fundamental_cycle || doc.cycle("pa") != gi.pa_witness) {
    return fail(name, "cycle statements do not round-trip");
  }
  return pass(name);
}

std::vector<CheckOutcome> run_self_checks(const ResolutionGraph& g, const SelfCheckOptions& opts) {
  require_valid(g);
  using Check = CheckOutcome (*)(const ResolutionGraph&, const SelfCheckOptions&);
  static constexpr std::pair<const char*, Check> checks[] = {
      {"minors", check_minors},
      {"fundamental_cycle", check_fundamental_cycle},
      {"chain_set", check_chain_set},
      {"chain_connected", check_chain_connected},
      {"ccc", check_ccc},
      {"minimal_model", check_minimal_model},
      {"chi_minimum", check_chi_minimum},
      {"genus", check_genus},
      {"conditions", check_conditions},
      {"lambda", check_lambda},
      {"bounds", check_bounds},
      {"elliptic_sequence", check_elliptic_sequence},
      {"connecting_cycle", check_connecting_cycle},
      {"blow_up", check_blow_ups},
      {"roundtrip", check_roundtrip},
  };
  std::vector<CheckOutcome> out;
  for (const auto& [name, check] : checks) {
    try {
      out.push_back(check(g, opts));
    } catch (const InvariantViolation& e) {
      out.push_back(fail(name, e.what()));
    } catch (const PreconditionError& e) {
      out.push_back(skip(name, e.what()));
    } catch (const std::exception& e) {
      out.push_back(fail(name, e.what()));
    }
  }
  return out;
}

}  // namespace singlattice
