#include "singlattice/oracle.hpp"

#include <algorithm>
#include <limits>

#include "singlattice/errors.hpp"

namespace singlattice::oracle {

namespace {

constexpr std::int64_t kEntryLimit = std::int64_t{1} << 20;

std::int64_t small(const Integer& x, const char* what) {
  if (x > kEntryLimit || x < -kEntryLimit) {
    throw PreconditionError(std::string("oracle: ") + what + " too large for enumeration");
  }
  return static_cast<std::int64_t>(x);
}

// Visits every v with lo <= v <= hi in lexicographic order until f returns
// false.
template <class F>
void for_each_in_box(const Vec& lo, const Vec& hi, F&& f) {
  const std::size_t n = lo.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (lo[i] > hi[i]) return;
  }
  Vec v = lo;
  for (;;) {
    if (!f(static_cast<const Vec&>(v))) return;
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (v[i] < hi[i]) {
        ++v[i];
        break;
      }
      v[i] = lo[i];
      if (i == 0) return;
    }
    if (n == 0) return;
  }
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x == 0; });
}

bool le(const Vec& a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

std::int64_t floor_div64(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// a anti-nef on every component of supp(b)
bool anti_nef_on(const SmallForm& f, const Vec& a, const Vec& b) {
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (b[i] != 0 && f.pair_vertex(a, i) > 0) return false;
  }
  return true;
}

bool chain_connected(const SmallForm& f, const Vec& d) {
  bool ok = true;
  const Vec lo(d.size(), 0);
  Vec rest(d.size());
  for_each_in_box(lo, d, [&](const Vec& d1) {
    if (is_zero(d1) || d1 == d) return true;
    for (std::size_t i = 0; i < d.size(); ++i) rest[i] = d[i] - d1[i];
    if (anti_nef_on(f, d1, rest)) {
      ok = false;
      return false;
    }
    return true;
  });
  return ok;
}

Vec componentwise_min(const std::vector<Vec>& vs) {
  Vec m = vs.front();
  for (const auto& v : vs) {
    for (std::size_t i = 0; i < m.size(); ++i) m[i] = std::min(m[i], v[i]);
  }
  return m;
}

std::int64_t height(const Vec& v) {
  std::int64_t h = 0;
  for (auto x : v) h += x;
  return h;
}

}  // namespace

SmallForm::SmallForm(const ResolutionGraph& g) : m_(g.size(), Vec(g.size())), k_(g.size()) {
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = 0; j < g.size(); ++j) m_[i][j] = small(g.form(i, j), "intersection entry");
    k_[i] = small(g.canonical_degree(i), "canonical degree");
  }
}

std::int64_t SmallForm::pair_vertex(const Vec& a, std::size_t i) const {
  std::int64_t s = 0;
  for (std::size_t j = 0; j < a.size(); ++j) s += m_[i][j] * a[j];
  return s;
}

std::int64_t SmallForm::pair(const Vec& a, const Vec& b) const {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0) s += a[i] * pair_vertex(b, i);
  }
  return s;
}

std::int64_t SmallForm::chi(const Vec& a) const {
  std::int64_t s = pair(a, a);
  for (std::size_t i = 0; i < a.size(); ++i) s += k_[i] * a[i];
  if (s % 2 != 0) throw InvariantViolation("oracle: C.C + K.C is odd");
  return -s / 2;
}

Vec to_vec(const Cycle& c) {
  Vec v(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) v[i] = small(c[i], "cycle coefficient");
  return v;
}

Cycle to_cycle(const Vec& v) {
  std::vector<Integer> c(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) c[i] = v[i];
  return Cycle(std::move(c));
}

std::size_t box_points(const Vec& hi) {
  std::size_t total = 1;
  for (auto h : hi) {
    const auto side = static_cast<std::size_t>(std::max<std::int64_t>(h, 0)) + 1;
    if (total > std::numeric_limits<std::size_t>::max() / side) {
      return std::numeric_limits<std::size_t>::max();
    }
    total *= side;
  }
  return total;
}

std::int64_t uniform_bound(std::size_t n, std::size_t max_points) {
  std::int64_t best = 1;
  for (std::int64_t side = 2;; ++side) {
    if (box_points(Vec(n, side)) > max_points) break;
    best = side;
    if (side > (std::int64_t{1} << 30)) break;
  }
  return best;
}

Integer cofactor_determinant(const Matrix<Integer>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n > 10) throw PreconditionError("oracle: cofactor expansion limited to 10x10");
  if (n == 1) return m[0][0];
  Integer det = 0;
  for (std::size_t col = 0; col < n; ++col) {
    if (m[0][col] == 0) continue;
    Matrix<Integer> minor(n - 1, std::vector<Integer>(n - 1));
    for (std::size_t r = 1; r < n; ++r) {
      for (std::size_t c = 0, cc = 0; c < n; ++c) {
        if (c != col) minor[r - 1][cc++] = m[r][c];
      }
    }
    const Integer term = m[0][col] * cofactor_determinant(minor);
    det += (col % 2 == 0) ? term : Integer(-term);
  }
  return det;
}

std::vector<Integer> leading_minors(const Matrix<Integer>& m) {
  std::vector<Integer> out;
  for (std::size_t k = 1; k <= m.size(); ++k) {
    Matrix<Integer> sub(k, std::vector<Integer>(k));
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) sub[i][j] = m[i][j];
    }
    out.push_back(cofactor_determinant(sub));
  }
  return out;
}

bool is_chain_connected(const ResolutionGraph& g, const Cycle& d) {
  if (d.size() != g.size()) throw GraphMismatch("oracle: cycle length mismatch");
  if (!d.is_positive()) throw PreconditionError("oracle: chain-connectedness needs a positive cycle");
  return chain_connected(SmallForm(g), to_vec(d));
}

std::vector<Cycle> chain_connected_below(const ResolutionGraph& g, const Cycle& bound) {
  const SmallForm f(g);
  std::vector<Cycle> out;
  for_each_in_box(Vec(g.size(), 0), to_vec(bound), [&](const Vec& d) {
    if (!is_zero(d) && chain_connected(f, d)) out.push_back(to_cycle(d));
    return true;
  });
  return out;
}

std::optional<Cycle> fundamental_cycle_in_box(const ResolutionGraph& g, const VertexSet& s,
                                              std::int64_t n) {
  const SmallForm f(g);
  Vec lo(g.size(), 0), hi(g.size(), 0);
  for (auto v : s) {
    lo[v] = 1;
    hi[v] = n;
  }
  std::vector<Vec> found;
  for_each_in_box(lo, hi, [&](const Vec& z) {
    if (anti_nef_on(f, z, z)) found.push_back(z);
    return true;
  });
  if (found.empty()) return std::nullopt;
  const Vec m = componentwise_min(found);
  if (std::find(found.begin(), found.end(), m) == found.end()) return std::nullopt;
  return to_cycle(m);
}

std::optional<Cycle> minimal_model(const ResolutionGraph& g, const Cycle& d) {
  const SmallForm f(g);
  const Vec dv = to_vec(d);
  const std::int64_t target = f.chi(dv);
  std::vector<Vec> found;
  for_each_in_box(Vec(g.size(), 0), dv, [&](const Vec& c) {
    if (!is_zero(c) && f.chi(c) == target) found.push_back(c);
    return true;
  });
  if (found.empty()) return std::nullopt;
  const Vec m = componentwise_min(found);
  if (std::find(found.begin(), found.end(), m) == found.end()) return std::nullopt;
  return to_cycle(m);
}

std::optional<BoxMinimum> minimize_chi_in_box(const ResolutionGraph& g, const VertexSet& s,
                                              const Cycle& a, bool allow_zero, const Vec& hi) {
  const SmallForm f(g);
  const Vec av = to_vec(a);
  Vec box(g.size(), 0);
  for (auto v : s) box[v] = hi[v];
  std::optional<std::int64_t> best;
  Vec witness;
  for_each_in_box(Vec(g.size(), 0), box, [&](const Vec& d) {
    if (!allow_zero && is_zero(d)) return true;
    const std::int64_t q = f.chi(d) - f.pair(av, d);
    // Lexicographic visiting order keeps the first minimizer.
    if (!best || q < *best) {
      best = q;
      witness = d;
    }
    return true;
  });
  if (!best) return std::nullopt;
  return BoxMinimum{*best, to_cycle(witness)};
}

std::optional<std::string> konno_violation(const ResolutionGraph& g, const Cycle& d,
                                           const std::vector<CccPart>& parts) {
  const SmallForm f(g);
  std::vector<Vec> ds;
  Vec sum(g.size(), 0);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const std::string tag = "part " + std::to_string(i + 1);
    if (parts[i].multiplicity < 1) return tag + ": multiplicity < 1";
    if (!parts[i].cycle.is_positive()) return tag + ": not positive";
    const Vec v = to_vec(parts[i].cycle);
    if (!chain_connected(f, v)) return tag + ": not chain-connected";
    if (std::find(ds.begin(), ds.end(), v) != ds.end()) return tag + ": repeated";
    const std::int64_t m = small(parts[i].multiplicity, "multiplicity");
    for (std::size_t k = 0; k < v.size(); ++k) sum[k] += m * v[k];
    ds.push_back(v);
  }
  if (sum != to_vec(d)) return std::string("condition (1): parts do not sum to the cycle");
  for (std::size_t i = 0; i < ds.size(); ++i) {
    for (std::size_t j = i + 1; j < ds.size(); ++j) {
      bool disjoint = true;
      for (std::size_t k = 0; k < g.size(); ++k) disjoint = disjoint && (ds[i][k] == 0 || ds[j][k] == 0);
      if (!disjoint && !le(ds[j], ds[i])) {
        return "condition (2) fails for parts " + std::to_string(i + 1) + ", " + std::to_string(j + 1);
      }
      if (!anti_nef_on(f, ds[i], ds[j])) {
        return "condition (3) fails for parts " + std::to_string(i + 1) + ", " + std::to_string(j + 1);
      }
    }
    if (parts[i].multiplicity >= 2 && !anti_nef_on(f, ds[i], ds[i])) {
      return "condition (4) fails for part " + std::to_string(i + 1);
    }
  }
  return std::nullopt;
}

std::optional<std::vector<std::vector<CccPart>>> all_ccc_decompositions(
    const ResolutionGraph& g, const Cycle& d, std::size_t node_limit) {
  const SmallForm f(g);
  std::vector<Vec> cands;
  for (const auto& c : chain_connected_below(g, d)) cands.push_back(to_vec(c));
  // Descending height: a valid order exists iff this order is valid, since
  // nested parts must come larger first and the other conditions are
  // symmetric for disjoint parts.
  std::sort(cands.begin(), cands.end(), [](const Vec& a, const Vec& b) {
    const auto ha = height(a), hb = height(b);
    if (ha != hb) return ha > hb;
    return a < b;
  });

  std::vector<std::vector<CccPart>> out;
  std::vector<std::pair<std::int64_t, std::size_t>> chosen;
  std::size_t nodes = 0;
  bool aborted = false;

  auto compatible = [&](std::size_t idx, std::int64_t mult) {
    const Vec& dj = cands[idx];
    if (mult >= 2 && !anti_nef_on(f, dj, dj)) return false;
    for (const auto& [m, i] : chosen) {
      const Vec& di = cands[i];
      bool disjoint = true;
      for (std::size_t k = 0; k < dj.size(); ++k) disjoint = disjoint && (di[k] == 0 || dj[k] == 0);
      if (!disjoint && !le(dj, di)) return false;
      if (!anti_nef_on(f, di, dj)) return false;
    }
    return true;
  };

  Vec rest = to_vec(d);
  auto search = [&](auto&& self, std::size_t idx) -> void {
    if (aborted) return;
    if (++nodes > node_limit) {
      aborted = true;
      return;
    }
    if (is_zero(rest)) {
      std::vector<CccPart> parts;
      for (const auto& [m, i] : chosen) parts.push_back({Integer(m), to_cycle(cands[i])});
      out.push_back(std::move(parts));
      return;
    }
    for (std::size_t i = idx; i < cands.size(); ++i) {
      const Vec& c = cands[i];
      for (std::int64_t m = 1; ; ++m) {
        bool fits = true;
        for (std::size_t k = 0; k < c.size(); ++k) fits = fits && m * c[k] <= rest[k];
        if (!fits) break;
        if (!compatible(i, m)) continue;
        for (std::size_t k = 0; k < c.size(); ++k) rest[k] -= m * c[k];
        chosen.push_back({m, i});
        self(self, i + 1);
        chosen.pop_back();
        for (std::size_t k = 0; k < c.size(); ++k) rest[k] += m * c[k];
      }
    }
  };
  search(search, 0);
  if (aborted) return std::nullopt;
  return out;
}

std::optional<Cycle> rohr_counterexample(const ResolutionGraph& g, const Cycle& l, const Vec& hi) {
  const SmallForm f(g);
  const Vec lv = to_vec(l);
  std::optional<Cycle> bad;
  for_each_in_box(Vec(g.size(), 0), hi, [&](const Vec& d) {
    if (is_zero(d)) return true;
    const std::int64_t ld = f.pair(lv, d);
    if (ld != 0 && ld <= -2 * f.chi(d)) {
      bad = to_cycle(d);
      return false;
    }
    return true;
  });
  return bad;
}

bool is_extension(const ResolutionGraph& g, const Cycle& l, const Cycle& c1, const Cycle& c2) {
  const SmallForm f(g);
  const Vec lv = to_vec(l), v1 = to_vec(c1), v2 = to_vec(c2);
  if (is_zero(v1) || !c2.is_effective()) return false;
  if (f.pair(lv, v1) == 0 || !chain_connected(f, v1)) return false;
  for (std::size_t i = 0; i < v2.size(); ++i) {
    if (v2[i] != 0 && f.pair_vertex(lv, i) != 0) return false;
  }
  return anti_nef_on(f, v1, v2);
}

std::optional<std::string> lambda_violation(const ResolutionGraph& g, const Cycle& z,
                                            const Integer& lambda, const Cycle& c1,
                                            const Cycle& c2, const Cycle& zf, std::int64_t n) {
  const SmallForm f(g);
  const Vec zv = to_vec(z);
  if (!is_extension(g, z, c1, c2)) return std::string("witness is not an extension");
  {
    Vec d = to_vec(c1 + c2);
    const auto w = floor_div64(-2 * f.chi(d), -f.pair(zv, to_vec(c1)));
    if (Integer(w) != lambda) return "witness ratio " + std::to_string(w) + " != lambda";
  }
  const std::int64_t lam = small(lambda, "lambda");
  for (const auto& cc : chain_connected_below(g, zf)) {
    const Vec v1 = to_vec(cc);
    const std::int64_t den = -f.pair(zv, v1);
    if (den == 0) continue;
    if (den < 0) return std::string("z pairs positively with a chain-connected cycle");
    Vec hi(g.size(), 0);
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (f.pair_vertex(zv, i) == 0 && f.pair_vertex(v1, i) <= 0) hi[i] = n;
    }
    std::optional<std::string> bad;
    Vec d(g.size());
    for_each_in_box(Vec(g.size(), 0), hi, [&](const Vec& v2) {
      for (std::size_t i = 0; i < d.size(); ++i) d[i] = v1[i] + v2[i];
      const auto r = floor_div64(-2 * f.chi(d), den);
      if (r > lam) {
        bad = "ratio " + std::to_string(r) + " exceeds lambda";
        return false;
      }
      return true;
    });
    if (bad) return bad;
  }
  return std::nullopt;
}

}  // namespace singlattice::oracle
