#include "singlattice/bounds.hpp"

#include <algorithm>

#include "singlattice/errors.hpp"
#include "singlattice/graph_io.hpp"

namespace singlattice {

namespace {

void require_size(const ResolutionGraph& g, const Cycle& c, const char* what) {
  if (c.size() != g.size()) throw GraphMismatch(std::string(what) + ": cycle length mismatch");
}

void require_nontrivial(const ResolutionGraph& g, const Cycle& l, const char* what) {
  require_size(g, l, what);
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (pairing_with_vertex(g, l, i) != 0) return;
  }
  throw PreconditionError(std::string(what) + ": cycle is numerically trivial");
}

void require_ideal_cycle(const ResolutionGraph& g, const Cycle& z, const char* what) {
  require_size(g, z, what);
  if (!z.is_positive()) throw PreconditionError(std::string(what) + ": cycle must be positive");
  if (!is_anti_nef(g, z)) throw PreconditionError(std::string(what) + ": cycle must be anti-nef");
}

VertexSet perp_vertices(const ResolutionGraph& g, const Cycle& l) {
  VertexSet s;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (pairing_with_vertex(g, l, i) == 0) s.push_back(i);
  }
  return s;
}

// Vertices of l-perp on which c1 is anti-nef: the admissible support of the
// second part of an extension c1 + c2.
VertexSet extension_support(const ResolutionGraph& g, const VertexSet& perp, const Cycle& c1) {
  VertexSet s;
  for (VertexIndex i : perp) {
    if (pairing_with_vertex(g, c1, i) <= 0) s.push_back(i);
  }
  return s;
}

bool contains_all(const VertexSet& outer, const VertexSet& inner) {
  return std::includes(outer.begin(), outer.end(), inner.begin(), inner.end());
}

// Keeps the smallest margin, ties broken by the lexicographically smallest
// witness.
struct WorstCase {
  std::optional<Integer> margin;
  Cycle witness;

  void offer(const Integer& m, const Cycle& w) {
    if (!margin || m < *margin || (m == *margin && CycleLexLess{}(w, witness))) {
      margin = m;
      witness = w;
    }
  }
};

}  // namespace

std::vector<Cycle> restricted_B(const ResolutionGraph& g, const ChainSet& b, const Cycle& l) {
  require_nontrivial(g, l, "restricted_B");
  std::vector<Cycle> out;
  for (const auto& c : b.members()) {
    if (intersection_number(g, l, c) != 0) out.push_back(c);
  }
  return out;
}

std::vector<Cycle> restricted_B(const ResolutionGraph& g, const Cycle& l) {
  require_nontrivial(g, l, "restricted_B");
  return restricted_B(g, enumerate_B(g), l);
}

std::string_view to_string(ConditionMode mode) {
  switch (mode) {
    case ConditionMode::rohr: return "rohr";
    case ConditionMode::exact: return "exact";
    case ConditionMode::remark1: return "remark1";
    case ConditionMode::remark2: return "remark2";
  }
  return "?";
}

ConditionMode parse_condition_mode(std::string_view name) {
  for (auto m : {ConditionMode::rohr, ConditionMode::exact, ConditionMode::remark1,
                 ConditionMode::remark2}) {
    if (to_string(m) == name) return m;
  }
  throw PreconditionError("unknown condition mode '" + std::string(name) + "'");
}

ConditionVerdict vanishing_condition(const ResolutionGraph& g, const Cycle& l, ConditionMode mode) {
  require_nontrivial(g, l, "vanishing_condition");
  const ChainSet b = enumerate_B(g);
  ConditionVerdict v;
  v.mode = mode;
  WorstCase worst;

  if (mode == ConditionMode::rohr) {
    for (const auto& c : b.members()) {
      worst.offer(intersection_number(g, l, c) + 2 * euler_chi(g, c), c);
    }
  } else if (mode == ConditionMode::exact) {
    const VertexSet perp = perp_vertices(g, l);
    for (const auto& c1 : restricted_B(g, b, l)) {
      const auto inner = minimize_chi_shifted(g, extension_support(g, perp, c1), c1, true);
      const Integer min_chi = euler_chi(g, c1) + inner.value;
      worst.offer(intersection_number(g, l, c1) + 2 * min_chi, c1 + inner.witness);
    }
  } else {
    const VertexSet perp = perp_vertices(g, l);
    Integer chi_perp = 0;
    if (!perp.empty()) chi_perp = minimize_chi_shifted(g, perp, Cycle::zero(g.size()), false).value;
    v.chi_perp = chi_perp;
    const Integer correction = std::min(chi_perp, Integer(0));
    const Integer chi_zf = euler_chi(g, fundamental_cycle(g));
    for (const auto& c : restricted_B(g, b, l)) {
      const Integer chi = mode == ConditionMode::remark1 ? euler_chi(g, c) : chi_zf;
      worst.offer(intersection_number(g, l, c) + 2 * (chi + correction), c);
    }
  }

  v.margin = *worst.margin;
  v.holds = v.margin > 0;
  if (!v.holds) v.witness = worst.witness;
  return v;
}

std::vector<ConditionVerdict> check_mode_consistency(const ResolutionGraph& g, const Cycle& l) {
  std::vector<ConditionVerdict> all;
  for (auto m : {ConditionMode::rohr, ConditionMode::exact, ConditionMode::remark1,
                 ConditionMode::remark2}) {
    all.push_back(vanishing_condition(g, l, m));
  }
  const bool exact = all[1].holds, remark1 = all[2].holds, remark2 = all[3].holds;
  if (remark2 && !remark1) throw InvariantViolation("remark2 holds but remark1 fails");
  if (remark1 && !exact) throw InvariantViolation("remark1 holds but exact fails");
  return all;
}

LambdaResult lambda_exact(const ResolutionGraph& g, const Cycle& z) {
  require_ideal_cycle(g, z, "lambda_exact");
  const VertexSet perp = perp_vertices(g, z);
  std::optional<LambdaResult> best;
  for (const auto& c1 : restricted_B(g, enumerate_B(g), z)) {
    const auto inner = minimize_chi_shifted(g, extension_support(g, perp, c1), c1, true);
    LambdaResult r;
    r.c1 = c1;
    r.c2 = inner.witness;
    r.numerator = -2 * (euler_chi(g, c1) + inner.value);
    r.denominator = -intersection_number(g, z, c1);
    if (r.denominator <= 0) throw InvariantViolation("lambda_exact: -Z.C1 is not positive");
    r.value = floor_div(r.numerator, r.denominator);
    if (!best || r.value > best->value ||
        (r.value == best->value &&
         (CycleLexLess{}(r.c1, best->c1) || (r.c1 == best->c1 && CycleLexLess{}(r.c2, best->c2))))) {
      best = std::move(r);
    }
  }
  return *best;
}

AlmostConeCheck almost_cone_profile(const ResolutionGraph& g) {
  AlmostConeCheck out;
  const Cycle zf = fundamental_cycle(g);
  const Integer pf = pa_cycle(g, zf);
  if (pf < 1) {
    out.reason = "p_f = " + to_string(pf) + " < 1";
    return out;
  }
  const Cycle m = minimal_model(g, zf);
  const auto supp = m.support();
  if (supp.size() != 1 || m[supp.front()] != 1) {
    out.reason = "minimal model of Z_f (" + format_cycle(g, m) + ") is not a single component";
    return out;
  }
  const VertexIndex c = supp.front();
  if (!g.vertex(c).smooth) {
    out.reason = "central candidate " + g.vertex(c).id + " is singular";
    return out;
  }
  const Integer zc = pairing_with_vertex(g, zf, c);
  if (zc >= 0) {
    out.reason = "Z_f." + g.vertex(c).id + " = " + to_string(zc) + " is not negative";
    return out;
  }
  if (g.vertex(c).genus != pf) {
    throw InvariantViolation("almost_cone_profile: central genus differs from p_f");
  }
  AlmostConeProfile p;
  p.central = c;
  p.genus = pf;
  p.degree = -zc;
  p.delta = std::max(Integer(2), p.degree);
  out.profile = p;
  return out;
}

std::string_view to_string(AcCase c) {
  switch (c) {
    case AcCase::zc_negative: return "ZC_negative";
    case AcCase::zc_zero: return "ZC_zero";
    case AcCase::global: return "global";
  }
  return "?";
}

AcBound ac_bound(const ResolutionGraph& g, const std::optional<Cycle>& z,
                 const Integer& gonality_lower) {
  if (gonality_lower < 2) throw PreconditionError("ac_bound: gonality lower bound must be >= 2");
  const auto check = almost_cone_profile(g);
  if (!check.profile) throw PreconditionError("ac_bound: not an almost cone (" + check.reason + ")");
  AcBound out;
  out.profile = *check.profile;
  const Integer numerator = 2 * out.profile.genus - 2;
  if (z) {
    require_ideal_cycle(g, *z, "ac_bound");
    const Integer zc = pairing_with_vertex(g, *z, out.profile.central);
    if (zc > 0) throw InvariantViolation("ac_bound: anti-nef cycle pairs positively with C");
    if (zc < 0) {
      out.which = AcCase::zc_negative;
      out.bound = floor_div(numerator, gonality_lower) + 2;
    } else {
      out.which = AcCase::zc_zero;
      out.bound = floor_div(numerator, out.profile.delta) + 2;
    }
  } else {
    out.which = AcCase::global;
    out.bound = floor_div(numerator, std::min(gonality_lower, out.profile.delta)) + 2;
    if (out.bound > out.profile.genus + 1) {
      throw InvariantViolation("ac_bound: global bound exceeds g + 1");
    }
  }
  return out;
}

std::vector<Cycle> elliptic_sequence(const ResolutionGraph& g, const std::optional<VertexSet>& s) {
  const VertexSet region = s ? *s : g.all_vertices();
  Cycle z = fundamental_cycle(g, region);
  const Integer chi = euler_chi(g, z);
  if (chi != 0) {
    throw PreconditionError("elliptic_sequence: chi(Z_B) = " + to_string(chi) + ", expected 0");
  }
  const Cycle c = minimal_model(g, z);
  const VertexSet c_supp = c.support();
  std::vector<Cycle> seq{z};
  while (intersection_number(g, z, c) == 0) {
    VertexSet perp;
    for (VertexIndex v : region) {
      if (pairing_with_vertex(g, z, v) == 0) perp.push_back(v);
    }
    std::optional<VertexSet> next_region;
    for (auto& comp : g.components_of(perp)) {
      if (contains_all(comp, c_supp)) next_region = std::move(comp);
    }
    if (!next_region) {
      throw InvariantViolation("elliptic_sequence: minimally elliptic cycle left the orthogonal part");
    }
    Cycle next = fundamental_cycle(g, *next_region);
    if (next == z) throw InvariantViolation("elliptic_sequence: sequence does not shrink");
    z = std::move(next);
    seq.push_back(z);
  }
  return seq;
}

std::optional<VertexSet> orthogonal_component_containing_mc(const ResolutionGraph& g,
                                                            const Cycle& z) {
  require_size(g, z, "orthogonal_component_containing_mc");
  const Cycle zf = fundamental_cycle(g);
  if (euler_chi(g, zf) > 0) return std::nullopt;
  const VertexSet m_supp = minimal_model(g, zf).support();
  for (auto& comp : orthogonal_components(g, z)) {
    if (contains_all(comp, m_supp)) return comp;
  }
  return std::nullopt;
}

Cycle connecting_cycle_W(const ResolutionGraph& g, const Cycle& z, const VertexSet& b) {
  require_ideal_cycle(g, z, "connecting_cycle_W");
  const Cycle zf = fundamental_cycle(g);
  if (euler_chi(g, zf) > 0) {
    throw PreconditionError("connecting_cycle_W: p_f = 0, Z_f has no minimal model");
  }
  const Cycle m = minimal_model(g, zf);
  const VertexSet m_supp = m.support();

  const auto comps = orthogonal_components(g, z);
  if (std::find(comps.begin(), comps.end(), b) == comps.end() || !contains_all(b, m_supp)) {
    throw PreconditionError(
        "connecting_cycle_W: B is not a component of the z-orthogonal subgraph containing supp(M)");
  }
  if (intersection_number(g, zf, m) >= 0) {
    throw PreconditionError("connecting_cycle_W: Z_f.M is not negative");
  }
  for (VertexIndex v : m_supp) {
    if (zf[v] != m[v]) {
      throw PreconditionError("connecting_cycle_W: Z_f - M contains the component " +
                              g.vertex(v).id + " of M");
    }
  }
  const Cycle zb = fundamental_cycle(g, b);
  if (!componentwise_le(m, zb)) throw PreconditionError("connecting_cycle_W: M is not below Z_B");
  for (VertexIndex v : m_supp) {
    if (zb[v] != m[v]) {
      throw PreconditionError("connecting_cycle_W: Z_B - M contains the component " +
                              g.vertex(v).id + " of M");
    }
  }
  if (minimal_model(g, zb) != m) {
    throw PreconditionError("connecting_cycle_W: M is not the minimal model of Z_B");
  }

  Cycle w = zb;
  if (intersection_number(g, zb, m) > -2) {
    VertexSet region = m_supp;
    for (VertexIndex v : b) {
      if (pairing_with_vertex(g, zb, v) == 0) region.push_back(v);
    }
    std::sort(region.begin(), region.end());
    region.erase(std::unique(region.begin(), region.end()), region.end());
    std::optional<VertexSet> b_prime;
    for (auto& comp : g.components_of(region)) {
      if (contains_all(comp, m_supp)) b_prime = std::move(comp);
    }
    if (!b_prime) throw InvariantViolation("connecting_cycle_W: supp(M) is not connected");
    w += fundamental_cycle(g, *b_prime);
  }

  if (w.support() != b) throw InvariantViolation("connecting_cycle_W: red(W) != B");
  if (!is_anti_nef_on(g, w, b)) throw InvariantViolation("connecting_cycle_W: W is not anti-nef on B");
  for (VertexIndex v : b) {
    const auto& nb = g.neighbors(v);
    const bool connecting = std::any_of(nb.begin(), nb.end(), [&](VertexIndex u) {
      return !std::binary_search(b.begin(), b.end(), u);
    });
    if (connecting && w[v] != 1) {
      throw InvariantViolation("connecting_cycle_W: W is not reduced at connecting component " +
                               g.vertex(v).id);
    }
  }
  if (intersection_number(g, w, m) > -2) throw InvariantViolation("connecting_cycle_W: W.M > -2");
  return w;
}

Integer zariski_formula(const Integer& a, const Integer& b) {
  if (a < 2 || b < a) throw PreconditionError("zariski_formula: requires 2 <= a <= b");
  return floor_div((a - 1) * b, a);
}

const BoundEntry* BoundReport::find(std::string_view label) const {
  for (const auto& e : bounds) {
    if (e.label == label) return &e;
  }
  return nullptr;
}

BoundReport br_bound_report(const ResolutionGraph& g, const Cycle& z, const BoundOptions& opts) {
  require_ideal_cycle(g, z, "br_bound_report");
  if (opts.gonality_lower < 2) throw PreconditionError("br_bound_report: gonality lower bound must be >= 2");
  if (opts.pg && *opts.pg < 0) throw PreconditionError("br_bound_report: p_g must be nonnegative");

  BoundReport r;
  const auto genera = genus_invariants(g);
  r.bounds.push_back({"pa_plus_one", genera.p_a + 1, "arithmetic genus: br(A) <= p_a + 1",
                      "p_a = " + to_string(genera.p_a) + " at " + format_cycle(g, genera.pa_witness)});

  const auto lambda = lambda_exact(g, z);
  Integer lambda_bound = lambda.value + 2;
  if (lambda_bound < 1) {
    r.notes.push_back("lambda + 2 = " + to_string(lambda_bound) + " clamped to 1");
    lambda_bound = 1;
  }
  r.bounds.push_back({"lambda_plus_two", lambda_bound,
                      "lambda(Z,X) on this graph: br(I) <= lambda(I) + 2 <= lambda(Z,X) + 2",
                      "lambda = " + to_string(lambda.value) + " at C1 = " +
                          format_cycle(g, lambda.c1) + ", C2 = " + format_cycle(g, lambda.c2)});

  if (opts.pg) {
    r.bounds.push_back({"pg_plus_one", *opts.pg + 1, "geometric genus (externally supplied): br(A) <= p_g + 1",
                        "p_g = " + to_string(*opts.pg)});
  }

  const auto ac = almost_cone_profile(g);
  if (ac.profile) {
    const auto b = ac_bound(g, z, opts.gonality_lower);
    const bool gon = b.which == AcCase::zc_negative;
    r.bounds.push_back(
        {gon ? "ac_gonality" : "ac_delta", b.bound,
         gon ? "almost cone, Z.C < 0: br(I) <= floor((2g-2)/gon(C)) + 2"
             : "almost cone, Z.C = 0: br(I) <= floor((2g-2)/delta) + 2",
         "central = " + g.vertex(b.profile.central).id + ", g = " + to_string(b.profile.genus) +
             ", degree = " + to_string(b.profile.degree) + ", delta = " + to_string(b.profile.delta) +
             (gon ? ", gonality >= " + to_string(opts.gonality_lower) : std::string())});
  }

  r.best = r.bounds.front().value;
  for (const auto& e : r.bounds) r.best = std::min(r.best, e.value);
  return r;
}

}  // namespace singlattice
