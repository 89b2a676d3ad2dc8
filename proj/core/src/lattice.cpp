#include "singlattice/lattice.hpp"

#include <algorithm>
#include <atomic>
#include <deque>

#include "singlattice/errors.hpp"
#include "singlattice/exact_linalg.hpp"

namespace singlattice {

namespace {

std::atomic<std::size_t> g_ccc_fallbacks{0};

void require_size(const ResolutionGraph& g, const Cycle& c, const char* what) {
  if (c.size() != g.size()) throw GraphMismatch(std::string(what) + ": cycle length mismatch");
}

void require_positive(const ResolutionGraph& g, const Cycle& c, const char* what) {
  require_size(g, c, what);
  if (!c.is_positive()) throw PreconditionError(std::string(what) + ": cycle must be positive");
}

void require_vertex_set(const ResolutionGraph& g, const VertexSet& s, const char* what) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] >= g.size() || (i > 0 && s[i] <= s[i - 1])) {
      throw PreconditionError(std::string(what) + ": malformed vertex set");
    }
  }
}

// All states reachable from the unit cycles on supp(bound) through
// C -> C + E_j (C.E_j > 0, C + E_j <= bound). Without a bound the closure is
// finite because every reachable state lies below Z_f.
std::vector<Cycle> positive_pairing_closure(const ResolutionGraph& g, const Cycle* bound,
                                            const Cycle* stop_at = nullptr,
                                            bool* reached = nullptr) {
  const std::size_t n = g.size();
  std::unordered_set<Cycle, CycleHash> seen;
  std::deque<Cycle> queue;
  std::vector<Cycle> order;
  for (std::size_t i = 0; i < n; ++i) {
    if (bound && (*bound)[i] <= 0) continue;
    Cycle u = Cycle::unit(n, i);
    if (seen.insert(u).second) queue.push_back(std::move(u));
  }
  while (!queue.empty()) {
    Cycle c = std::move(queue.front());
    queue.pop_front();
    if (stop_at && c == *stop_at) {
      if (reached) *reached = true;
      return order;
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (bound && c[j] >= (*bound)[j]) continue;
      if (pairing_with_vertex(g, c, j) <= 0) continue;
      Cycle next = c;
      next[j] += 1;
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
    order.push_back(std::move(c));
  }
  return order;
}

void sort_by_height_then_lex(std::vector<Cycle>& v) {
  std::sort(v.begin(), v.end(), [](const Cycle& a, const Cycle& b) {
    const Integer ha = a.height(), hb = b.height();
    if (ha != hb) return ha < hb;
    return CycleLexLess{}(a, b);
  });
}

std::vector<CccPart> merge_parts(const std::vector<Cycle>& pieces) {
  std::vector<CccPart> parts;
  for (const auto& p : pieces) {
    if (!parts.empty() && parts.back().cycle == p) {
      parts.back().multiplicity += 1;
    } else {
      parts.push_back({Integer(1), p});
    }
  }
  return parts;
}

// Depth-first search over every choice of maximal chain-connected cycle at
// each extraction step.
bool exhaustive_ccc(const ResolutionGraph& g, const Cycle& d, const Cycle& remaining,
                    std::vector<Cycle>& pieces, std::vector<CccPart>& out) {
  if (remaining.is_zero()) {
    auto parts = merge_parts(pieces);
    if (check_ccc(g, d, parts)) return false;
    out = std::move(parts);
    return true;
  }
  auto states = positive_pairing_closure(g, &remaining);
  std::vector<Cycle> maximal;
  for (const auto& s : states) {
    const bool dominated = std::any_of(states.begin(), states.end(), [&](const Cycle& t) {
      return t != s && componentwise_le(s, t);
    });
    if (!dominated) maximal.push_back(s);
  }
  std::sort(maximal.begin(), maximal.end(), [](const Cycle& a, const Cycle& b) {
    const Integer ha = a.height(), hb = b.height();
    if (ha != hb) return ha > hb;
    return CycleLexLess{}(a, b);
  });
  for (const auto& m : maximal) {
    pieces.push_back(m);
    if (exhaustive_ccc(g, d, remaining - m, pieces, out)) return true;
    pieces.pop_back();
  }
  return false;
}

}  // namespace

// ------------------------------------------------------- fundamental cycle

Cycle fundamental_cycle(const ResolutionGraph& g, const VertexSet& s,
                        const IncrementChooser& choose) {
  require_vertex_set(g, s, "fundamental_cycle");
  if (s.empty()) throw PreconditionError("fundamental_cycle: empty support");
  if (!g.is_connected_subset(s)) throw PreconditionError("fundamental_cycle: support is disconnected");
  Cycle z = Cycle::reduced(g.size(), s);
  std::vector<VertexIndex> eligible;
  for (;;) {
    eligible.clear();
    for (VertexIndex i : s) {
      if (pairing_with_vertex(g, z, i) > 0) eligible.push_back(i);
    }
    if (eligible.empty()) return z;
    const VertexIndex pick = choose ? choose(eligible) : eligible.front();
    if (std::find(eligible.begin(), eligible.end(), pick) == eligible.end()) {
      throw PreconditionError("fundamental_cycle: chooser returned an ineligible vertex");
    }
    z[pick] += 1;
  }
}

Cycle fundamental_cycle(const ResolutionGraph& g) { return fundamental_cycle(g, g.all_vertices()); }

std::vector<Cycle> computation_sequence(const ResolutionGraph& g, VertexIndex seed) {
  if (seed >= g.size()) throw PreconditionError("computation_sequence: unknown seed vertex");
  std::vector<Cycle> seq{Cycle::unit(g.size(), seed)};
  for (;;) {
    const Cycle& c = seq.back();
    std::optional<VertexIndex> next;
    for (std::size_t j = 0; j < g.size() && !next; ++j) {
      if (pairing_with_vertex(g, c, j) > 0) next = j;
    }
    if (!next) return seq;
    Cycle d = c;
    d[*next] += 1;
    seq.push_back(std::move(d));
  }
}

// -------------------------------------------------------------- chain set

ChainSet::ChainSet(std::vector<Cycle> members) : members_(std::move(members)) {
  sort_by_height_then_lex(members_);
  index_.insert(members_.begin(), members_.end());
}

ChainSet enumerate_B(const ResolutionGraph& g) {
  return ChainSet(positive_pairing_closure(g, nullptr));
}

bool is_chain_connected(const ResolutionGraph& g, const Cycle& d) {
  require_positive(g, d, "is_chain_connected");
  const auto supp = d.support();
  if (supp.size() == 1 && d[supp.front()] == 1) return true;
  if (!g.is_connected_subset(supp)) return false;
  bool reached = false;
  positive_pairing_closure(g, &d, &d, &reached);
  return reached;
}

// ------------------------------------------------------------------- CCC

Cycle chain_connected_component(const ResolutionGraph& g, const Cycle& d) {
  require_positive(g, d, "chain_connected_component");
  std::optional<Cycle> best;
  for (VertexIndex v : d.support()) {
    Cycle c = Cycle::unit(g.size(), v);
    for (;;) {
      std::optional<VertexIndex> next;
      for (std::size_t j = 0; j < g.size() && !next; ++j) {
        if (c[j] < d[j] && pairing_with_vertex(g, c, j) > 0) next = j;
      }
      if (!next) break;
      c[*next] += 1;
    }
    if (!best) {
      best = std::move(c);
    } else if (componentwise_le(*best, c)) {
      best = std::move(c);
    } else if (!componentwise_le(c, *best) && c.height() > best->height()) {
      best = std::move(c);
    }
  }
  return *best;
}

std::optional<std::string> check_ccc(const ResolutionGraph& g, const Cycle& d,
                                     const std::vector<CccPart>& parts) {
  require_size(g, d, "check_ccc");
  Cycle sum = Cycle::zero(g.size());
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const auto& p = parts[i];
    if (p.multiplicity < 1) return "part " + std::to_string(i + 1) + " has multiplicity < 1";
    if (p.cycle.size() != g.size() || !p.cycle.is_positive()) {
      return "part " + std::to_string(i + 1) + " is not a positive cycle";
    }
    if (!is_chain_connected(g, p.cycle)) {
      return "part " + std::to_string(i + 1) + " is not chain-connected";
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (parts[j].cycle == p.cycle) return "parts " + std::to_string(j + 1) + " and " +
                                            std::to_string(i + 1) + " coincide";
    }
    sum += p.multiplicity * p.cycle;
  }
  if (sum != d) return std::string("parts do not sum to the cycle");
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const auto& di = parts[i].cycle;
    for (std::size_t j = i + 1; j < parts.size(); ++j) {
      const auto& dj = parts[j].cycle;
      const auto sj = dj.support();
      const bool disjoint = std::none_of(sj.begin(), sj.end(), [&](VertexIndex v) { return di[v] != 0; });
      if (!disjoint && !componentwise_le(dj, di)) {
        return "parts " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
               " overlap without domination";
      }
      if (!is_anti_nef_on(g, di, sj)) {
        return "part " + std::to_string(i + 1) + " is not anti-nef on part " + std::to_string(j + 1);
      }
    }
    if (parts[i].multiplicity >= 2 && !is_anti_nef_on(g, di, di.support())) {
      return "part " + std::to_string(i + 1) + " has multiplicity >= 2 but is not anti-nef on itself";
    }
  }
  return std::nullopt;
}

CccDecomposition ccc_decompose(const ResolutionGraph& g, const Cycle& d) {
  require_positive(g, d, "ccc_decompose");
  std::vector<Cycle> pieces;
  Cycle remaining = d;
  while (!remaining.is_zero()) {
    Cycle c = chain_connected_component(g, remaining);
    remaining -= c;
    pieces.push_back(std::move(c));
  }
  CccDecomposition out;
  out.parts = merge_parts(pieces);
  if (!check_ccc(g, d, out.parts)) return out;

  ++g_ccc_fallbacks;
  out.fallback_used = true;
  pieces.clear();
  if (!exhaustive_ccc(g, d, d, pieces, out.parts)) {
    throw InvariantViolation("ccc_decompose: no decomposition satisfies the CCC conditions");
  }
  return out;
}

std::size_t ccc_fallback_activations() { return g_ccc_fallbacks.load(); }

// ----------------------------------------------------------- minimal model

Cycle minimal_model(const ResolutionGraph& g, const Cycle& d) {
  require_positive(g, d, "minimal_model");
  if (!is_chain_connected(g, d)) {
    throw PreconditionError("minimal_model: cycle is not chain-connected");
  }
  const Integer chi = euler_chi(g, d);
  if (chi > 0) throw PreconditionError("minimal_model: chi(D) = " + to_string(chi) + " > 0");

  Cycle c = d;
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (c[i] != 0 && g.canonical_degree(i) + pairing_with_vertex(g, c, i) < 0) {
        c[i] -= 1;
        changed = true;
        break;
      }
    }
  }
  if (!c.is_positive() || euler_chi(g, c) != chi) {
    throw InvariantViolation("minimal_model: stripping changed chi");
  }
  return c;
}

// ------------------------------------------------------- chi minimization

namespace {

class ChiSearch {
 public:
  ChiSearch(const ResolutionGraph& g, const VertexSet& s, const Cycle& a, bool allow_zero)
      : g_(g), s_(s), m_(s.size()), allow_zero_(allow_zero) {
    q_.assign(m_, std::vector<Integer>(m_));
    Matrix<Rational> qr(m_, std::vector<Rational>(m_));
    for (std::size_t r = 0; r < m_; ++r) {
      for (std::size_t c = 0; c < m_; ++c) {
        q_[r][c] = -g.form(s[r], s[c]);
        qr[r][c] = q_[r][c];
      }
    }
    // 2(chi(D) - a.D) = D^T Q D + h^T D with Q = -M|_s.
    h_.resize(m_);
    std::vector<Rational> rhs(m_);
    for (std::size_t r = 0; r < m_; ++r) {
      h_[r] = -g.canonical_degree(s[r]) - 2 * pairing_with_vertex(g, a, s[r]);
      rhs[r] = Rational(-h_[r]) / 2;
    }
    center_ = solve_exact(qr, rhs);
    offset_ = 0;  // center^T Q center
    for (std::size_t r = 0; r < m_; ++r) {
      Rational row = 0;
      for (std::size_t c = 0; c < m_; ++c) row += qr[r][c] * center_[c];
      offset_ += center_[r] * row;
    }
    ldl_ = ldl_decompose(qr);
    inverse_ = inverse_exact(qr);
  }

  ChiMinimum run() {
    const std::size_t n = g_.size();
    std::vector<Integer> d(m_);
    if (allow_zero_) {
      consider(d);
    } else {
      for (std::size_t i = 0; i < m_; ++i) {
        d.assign(m_, 0);
        d[i] = 1;
        consider(d);
      }
    }
    // Every minimizer lies in the ellipsoid (x - c)^T Q (x - c) <= budget;
    // its coordinate extent is sqrt(budget * (Q^-1)_ii).
    ChiMinimum out;
    out.search_bound.assign(n, 0);
    const Rational budget = Rational(best_value_) + offset_;
    for (std::size_t i = 0; i < m_; ++i) {
      const Integer reach = isqrt(ceil(budget * inverse_[i][i])) + 1;
      const Integer ub = floor(center_[i]) + reach + 1;
      out.search_bound[s_[i]] = ub > 0 ? ub : Integer(0);
    }

    d.assign(m_, 0);
    descend(static_cast<std::ptrdiff_t>(m_) - 1, Rational(0), d);

    if (best_value_ % 2 != 0) throw InvariantViolation("minimize_chi_shifted: odd objective");
    out.value = best_value_ / 2;
    out.witness = Cycle::zero(n);
    for (std::size_t i = 0; i < m_; ++i) out.witness[s_[i]] = best_[i];
    return out;
  }

 private:
  Integer objective(const std::vector<Integer>& d) const {
    Integer f = 0;
    for (std::size_t r = 0; r < m_; ++r) {
      if (d[r] == 0) continue;
      Integer row = 0;
      for (std::size_t c = 0; c < m_; ++c) row += q_[r][c] * d[c];
      f += d[r] * (row + h_[r]);
    }
    return f;
  }

  void consider(const std::vector<Integer>& d) {
    if (!allow_zero_ &&
        std::all_of(d.begin(), d.end(), [](const Integer& v) { return v == 0; })) {
      return;
    }
    const Integer f = objective(d);
    // The witness order is lexicographic on the full coefficient vector,
    // which restricted to s is lexicographic on d.
    if (!have_best_ || f < best_value_ ||
        (f == best_value_ && std::lexicographical_compare(d.begin(), d.end(), best_.begin(), best_.end()))) {
      have_best_ = true;
      best_value_ = f;
      best_ = d;
    }
  }

  Rational budget() const { return Rational(best_value_) + offset_; }

  void descend(std::ptrdiff_t level, const Rational& partial, std::vector<Integer>& d) {
    if (level < 0) {
      consider(d);
      return;
    }
    const auto i = static_cast<std::size_t>(level);
    Rational shift = 0;
    for (std::size_t j = i + 1; j < m_; ++j) shift += ldl_.lower[j][i] * (Rational(d[j]) - center_[j]);
    const Rational mid = center_[i] - shift;
    const Rational& weight = ldl_.diag[i];

    Rational room = budget() - partial;
    if (room < 0) return;
    const Integer reach = isqrt(floor(room / weight)) + 1;
    Integer lo = ceil(mid) - reach;
    if (lo < 0) lo = 0;
    const Integer hi = floor(mid) + reach;
    for (Integer v = lo; v <= hi; ++v) {
      const Rational dev = Rational(v) - mid;
      const Rational next = partial + weight * dev * dev;
      if (next > budget()) continue;
      d[i] = v;
      descend(level - 1, next, d);
    }
    d[i] = 0;
  }

  const ResolutionGraph& g_;
  const VertexSet& s_;
  std::size_t m_;
  bool allow_zero_;
  Matrix<Integer> q_;
  std::vector<Integer> h_;
  std::vector<Rational> center_;
  Rational offset_;
  LdlFactor ldl_;
  Matrix<Rational> inverse_;

  bool have_best_ = false;
  Integer best_value_;
  std::vector<Integer> best_;
};

}  // namespace

ChiMinimum minimize_chi_shifted(const ResolutionGraph& g, const VertexSet& s, const Cycle& a,
                                bool allow_zero) {
  require_size(g, a, "minimize_chi_shifted");
  require_vertex_set(g, s, "minimize_chi_shifted");
  if (s.empty()) {
    if (!allow_zero) throw PreconditionError("minimize_chi_shifted: empty support");
    return {Integer(0), Cycle::zero(g.size()), std::vector<Integer>(g.size())};
  }
  ChiMinimum out = ChiSearch(g, s, a, allow_zero).run();
  if (euler_chi(g, out.witness) - intersection_number(g, a, out.witness) != out.value) {
    throw InvariantViolation("minimize_chi_shifted: witness does not attain the value");
  }
  return out;
}

GenusInvariants genus_invariants(const ResolutionGraph& g) {
  GenusInvariants r;
  r.fundamental_cycle = fundamental_cycle(g);
  r.p_f = pa_cycle(g, r.fundamental_cycle);
  auto m = minimize_chi_shifted(g, g.all_vertices(), Cycle::zero(g.size()), false);
  r.p_a = 1 - m.value;
  r.pa_witness = std::move(m.witness);
  return r;
}

}  // namespace singlattice
