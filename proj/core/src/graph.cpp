#include "singlattice/graph.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

#include "singlattice/errors.hpp"

namespace singlattice {

namespace {

void require_same_size(const ResolutionGraph& g, std::size_t n, const char* what) {
  if (n != g.size()) {
    throw GraphMismatch(std::string(what) + ": cycle has " + std::to_string(n) +
                        " coefficients, graph has " + std::to_string(g.size()) + " vertices");
  }
}

bool valid_token(std::string_view s) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(), [](char ch) {
    return (ch >= 'A' && ch <= 'Z') || (ch >= 'a' && ch <= 'z') || (ch >= '0' && ch <= '9') ||
           ch == '_';
  });
}

}  // namespace

// ---------------------------------------------------------------- Cycle

Cycle Cycle::unit(std::size_t n, VertexIndex i) {
  Cycle c = zero(n);
  c.c_.at(i) = 1;
  return c;
}

Cycle Cycle::reduced(std::size_t n, const VertexSet& support) {
  Cycle c = zero(n);
  for (VertexIndex i : support) c.c_.at(i) = 1;
  return c;
}

bool Cycle::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Integer& v) { return v == 0; });
}

bool Cycle::is_effective() const {
  return std::all_of(c_.begin(), c_.end(), [](const Integer& v) { return v >= 0; });
}

bool Cycle::is_positive() const { return is_effective() && !is_zero(); }

bool Cycle::is_reduced_on_support() const {
  return std::all_of(c_.begin(), c_.end(), [](const Integer& v) { return v == 0 || v == 1; });
}

VertexSet Cycle::support() const {
  VertexSet s;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] != 0) s.push_back(i);
  }
  return s;
}

Integer Cycle::height() const {
  Integer h = 0;
  for (const auto& v : c_) h += v;
  return h;
}

Cycle& Cycle::operator+=(const Cycle& o) {
  if (o.size() != size()) throw GraphMismatch("cycle addition: length mismatch");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Cycle& Cycle::operator-=(const Cycle& o) {
  if (o.size() != size()) throw GraphMismatch("cycle subtraction: length mismatch");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

Cycle operator*(const Integer& k, Cycle a) {
  for (auto& v : a.c_) v *= k;
  return a;
}

bool componentwise_le(const Cycle& a, const Cycle& b) {
  if (a.size() != b.size()) throw GraphMismatch("cycle comparison: length mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

bool CycleLexLess::operator()(const Cycle& a, const Cycle& b) const {
  return std::lexicographical_compare(a.coefficients().begin(), a.coefficients().end(),
                                      b.coefficients().begin(), b.coefficients().end());
}

std::size_t CycleHash::operator()(const Cycle& c) const {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (const auto& v : c.coefficients()) {
    const std::size_t x = boost::multiprecision::hash_value(v);
    h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

// -------------------------------------------------------- RationalCycle

RationalCycle::RationalCycle(const Cycle& integral) {
  c_.reserve(integral.size());
  for (const auto& v : integral.coefficients()) c_.emplace_back(v);
}

bool RationalCycle::is_integral() const {
  return std::all_of(c_.begin(), c_.end(),
                     [](const Rational& v) { return boost::multiprecision::denominator(v) == 1; });
}

Cycle RationalCycle::to_cycle() const {
  if (!is_integral()) throw PreconditionError("rational cycle has non-integral coefficients");
  std::vector<Integer> out;
  out.reserve(c_.size());
  for (const auto& v : c_) out.push_back(boost::multiprecision::numerator(v));
  return Cycle(std::move(out));
}

// ------------------------------------------------------ ResolutionGraph

ResolutionGraph::ResolutionGraph(std::vector<VertexData> vertices, std::vector<Edge> edges,
                                 std::string name)
    : name_(std::move(name)), vertices_(std::move(vertices)) {
  const std::size_t n = vertices_.size();
  if (n == 0) throw PreconditionError("a resolution graph needs at least one vertex");
  for (std::size_t i = 0; i < n; ++i) {
    const auto& v = vertices_[i];
    if (!valid_token(v.id)) throw PreconditionError("invalid vertex id '" + v.id + "'");
    if (v.genus < 0) throw PreconditionError("vertex " + v.id + " has negative genus");
    for (std::size_t j = 0; j < i; ++j) {
      if (vertices_[j].id == v.id) throw PreconditionError("duplicate vertex id '" + v.id + "'");
    }
  }
  matrix_.assign(n, std::vector<Integer>(n));
  adjacency_.assign(n, {});
  for (std::size_t i = 0; i < n; ++i) matrix_[i][i] = vertices_[i].self_intersection;
  for (auto e : edges) {
    if (e.a >= n || e.b >= n) throw PreconditionError("edge endpoint out of range");
    if (e.a == e.b) throw PreconditionError("self-loop on vertex " + vertices_[e.a].id);
    if (e.multiplicity <= 0) throw PreconditionError("edge multiplicity must be positive");
    if (e.a > e.b) std::swap(e.a, e.b);
    if (matrix_[e.a][e.b] != 0) {
      throw PreconditionError("repeated edge " + vertices_[e.a].id + " " + vertices_[e.b].id);
    }
    matrix_[e.a][e.b] = e.multiplicity;
    matrix_[e.b][e.a] = e.multiplicity;
    adjacency_[e.a].push_back(e.b);
    adjacency_[e.b].push_back(e.a);
    edges_.push_back(e);
  }
  std::sort(edges_.begin(), edges_.end(),
            [](const Edge& x, const Edge& y) { return std::pair(x.a, x.b) < std::pair(y.a, y.b); });
  for (auto& adj : adjacency_) std::sort(adj.begin(), adj.end());
  canonical_.reserve(n);
  for (const auto& v : vertices_) canonical_.push_back(-v.self_intersection - 2 + 2 * v.genus);
}

std::optional<VertexIndex> ResolutionGraph::index_of(std::string_view id) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (vertices_[i].id == id) return i;
  }
  return std::nullopt;
}

VertexIndex ResolutionGraph::require_index(std::string_view id) const {
  if (auto i = index_of(id)) return *i;
  throw PreconditionError("unknown vertex id '" + std::string(id) + "'");
}

VertexSet ResolutionGraph::all_vertices() const {
  VertexSet s(size());
  for (std::size_t i = 0; i < s.size(); ++i) s[i] = i;
  return s;
}

std::vector<VertexSet> ResolutionGraph::components_of(const VertexSet& s) const {
  std::vector<char> in(size(), 0), seen(size(), 0);
  for (VertexIndex i : s) in.at(i) = 1;
  std::vector<VertexSet> out;
  for (std::size_t start = 0; start < size(); ++start) {
    if (!in[start] || seen[start]) continue;
    VertexSet comp;
    std::queue<VertexIndex> q;
    q.push(start);
    seen[start] = 1;
    while (!q.empty()) {
      const VertexIndex v = q.front();
      q.pop();
      comp.push_back(v);
      for (VertexIndex w : adjacency_[v]) {
        if (in[w] && !seen[w]) {
          seen[w] = 1;
          q.push(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool ResolutionGraph::is_connected_subset(const VertexSet& s) const {
  return !s.empty() && components_of(s).size() == 1;
}

// ----------------------------------------------------------- validation

GraphValidation validate_graph(const ResolutionGraph& g) {
  GraphValidation r;
  const auto comps = g.components_of(g.all_vertices());
  r.connected = comps.size() == 1;
  if (!r.connected) r.components = comps;

  r.minors = leading_principal_minors(g.intersection_matrix());
  r.negative_definite = r.minors.size() == g.size();
  for (std::size_t k = 0; k < r.minors.size(); ++k) {
    // The (k+1)-th leading minor of a negative definite matrix has sign (-1)^(k+1).
    const bool want_negative = (k % 2) == 0;
    const bool good = want_negative ? r.minors[k] < 0 : r.minors[k] > 0;
    if (!good) {
      r.negative_definite = false;
      r.minors.resize(k + 1);
      break;
    }
  }
  r.ok = r.connected && r.negative_definite;

  std::ostringstream diag;
  if (!r.negative_definite) {
    const std::size_t k = r.minors.size();
    diag << "not negative definite: leading principal minor " << k << " = "
         << r.minors.back() << " (expected sign " << (k % 2 == 1 ? "-" : "+") << ")";
  } else if (!r.connected) {
    diag << "graph is disconnected: components";
    for (const auto& c : comps) {
      diag << " {";
      for (std::size_t i = 0; i < c.size(); ++i) diag << (i ? "," : "") << g.vertex(c[i]).id;
      diag << "}";
    }
  }
  r.diagnostic = diag.str();
  return r;
}

void require_valid(const ResolutionGraph& g) {
  const auto v = validate_graph(g);
  if (!v.ok) throw ValidationError(v.diagnostic);
}

// ------------------------------------------------------------ arithmetic

CanonicalDegrees canonical_degrees(const ResolutionGraph& g) {
  CanonicalDegrees k;
  k.k.reserve(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) k.k.push_back(g.canonical_degree(i));
  return k;
}

Integer pairing_with_vertex(const ResolutionGraph& g, const Cycle& c, VertexIndex i) {
  Integer s = c[i] * g.form(i, i);
  for (VertexIndex j : g.neighbors(i)) {
    if (c[j] != 0) s += c[j] * g.form(i, j);
  }
  return s;
}

Integer intersection_number(const ResolutionGraph& g, const Cycle& a, const Cycle& b) {
  require_same_size(g, a.size(), "intersection_number");
  require_same_size(g, b.size(), "intersection_number");
  Integer s = 0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (a[i] != 0) s += a[i] * pairing_with_vertex(g, b, i);
  }
  return s;
}

Rational intersection_number(const ResolutionGraph& g, const RationalCycle& a,
                             const RationalCycle& b) {
  require_same_size(g, a.size(), "intersection_number");
  require_same_size(g, b.size(), "intersection_number");
  Rational s = 0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (a[i] == 0) continue;
    Rational row = b[i] * g.form(i, i);
    for (VertexIndex j : g.neighbors(i)) row += b[j] * g.form(i, j);
    s += a[i] * row;
  }
  return s;
}

Integer euler_chi(const ResolutionGraph& g, const Cycle& c) {
  require_same_size(g, c.size(), "euler_chi");
  Integer twice = intersection_number(g, c, c);
  for (std::size_t i = 0; i < g.size(); ++i) twice += g.canonical_degree(i) * c[i];
  if (boost::multiprecision::abs(twice) % 2 != 0) {
    throw InvariantViolation("euler_chi: C(C+K) is odd");
  }
  return -twice / 2;
}

Integer pa_cycle(const ResolutionGraph& g, const Cycle& c) { return 1 - euler_chi(g, c); }

bool is_anti_nef_on(const ResolutionGraph& g, const Cycle& l, const VertexSet& s) {
  require_same_size(g, l.size(), "is_anti_nef_on");
  return std::all_of(s.begin(), s.end(),
                     [&](VertexIndex i) { return pairing_with_vertex(g, l, i) <= 0; });
}

bool is_anti_nef(const ResolutionGraph& g, const Cycle& l) {
  return is_anti_nef_on(g, l, g.all_vertices());
}

std::vector<VertexSet> orthogonal_components(const ResolutionGraph& g, const Cycle& l) {
  require_same_size(g, l.size(), "orthogonal_components");
  VertexSet perp;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (pairing_with_vertex(g, l, i) == 0) perp.push_back(i);
  }
  return g.components_of(perp);
}

// --------------------------------------------------------------- blow-up

BlowUp::BlowUp(ResolutionGraph graph, BlowUpSite site)
    : graph_(std::move(graph)), site_(site) {}

Cycle BlowUp::total_transform(const Cycle& d) const {
  if (d.size() + 1 != graph_.size()) throw GraphMismatch("total_transform: length mismatch");
  std::vector<Integer> c = d.coefficients();
  if (const auto* v = std::get_if<VertexIndex>(&site_)) {
    c.push_back(d[*v]);
  } else {
    const auto& e = std::get<EdgeSite>(site_);
    c.push_back(d[e.a] + d[e.b]);
  }
  return Cycle(std::move(c));
}

BlowUp blow_up(const ResolutionGraph& g, const BlowUpSite& site) {
  std::vector<VertexData> verts = g.vertices();
  std::vector<Edge> edges = g.edges();
  const VertexIndex e0 = verts.size();

  std::string id = "E0";
  for (int n = 1; g.index_of(id); ++n) id = "E0_" + std::to_string(n);

  if (const auto* v = std::get_if<VertexIndex>(&site)) {
    if (*v >= g.size()) throw PreconditionError("blow_up: unknown vertex");
    verts[*v].self_intersection -= 1;
    edges.push_back({*v, e0, 1});
  } else {
    auto e = std::get<EdgeSite>(site);
    if (e.a >= g.size() || e.b >= g.size()) throw PreconditionError("blow_up: unknown vertex");
    if (e.a > e.b) std::swap(e.a, e.b);
    auto it = std::find_if(edges.begin(), edges.end(),
                           [&](const Edge& x) { return x.a == e.a && x.b == e.b; });
    if (it == edges.end()) {
      throw PreconditionError("blow_up: no edge between " + g.vertex(e.a).id + " and " +
                              g.vertex(e.b).id);
    }
    it->multiplicity -= 1;
    if (it->multiplicity == 0) edges.erase(it);
    verts[e.a].self_intersection -= 1;
    verts[e.b].self_intersection -= 1;
    edges.push_back({e.a, e0, 1});
    edges.push_back({e.b, e0, 1});
  }
  verts.push_back({id, Integer(-1), Integer(0), true});
  return BlowUp(ResolutionGraph(std::move(verts), std::move(edges), g.name()), site);
}

std::vector<BlowUpSite> all_blow_up_sites(const ResolutionGraph& g) {
  std::vector<BlowUpSite> sites;
  for (std::size_t i = 0; i < g.size(); ++i) sites.emplace_back(i);
  for (const auto& e : g.edges()) sites.emplace_back(EdgeSite{e.a, e.b});
  return sites;
}

// --------------------------------------------------------------- pullback

RationalCycle numerical_pullback(const ResolutionGraph& g, const VertexSet& contracted,
                                 const Cycle& c) {
  require_same_size(g, c.size(), "numerical_pullback");
  for (VertexIndex i : contracted) {
    if (c.coefficients().at(i) != 0) {
      throw PreconditionError("numerical_pullback: cycle has a nonzero coefficient on contracted "
                              "vertex " + g.vertex(i).id);
    }
  }
  RationalCycle out(c);
  if (contracted.empty()) return out;

  const std::size_t m = contracted.size();
  Matrix<Rational> a(m, std::vector<Rational>(m));
  std::vector<Rational> rhs(m);
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t s = 0; s < m; ++s) a[r][s] = g.form(contracted[r], contracted[s]);
    rhs[r] = -pairing_with_vertex(g, c, contracted[r]);
  }
  const auto x = solve_exact(std::move(a), std::move(rhs));
  for (std::size_t r = 0; r < m; ++r) out[contracted[r]] = x[r];
  return out;
}

}  // namespace singlattice
