#include "singlattice/graph_io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "singlattice/errors.hpp"

namespace singlattice {

namespace {

struct Token {
  std::string text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size() || line[i] == '#') break;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r' &&
           line[i] != '#') {
      ++i;
    }
    out.push_back({std::string(line.substr(start, i - start)), start + 1});
  }
  return out;
}

bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(), [](char ch) {
    return (ch >= 'A' && ch <= 'Z') || (ch >= 'a' && ch <= 'z') || (ch >= '0' && ch <= '9') ||
           ch == '_';
  });
}

struct PendingEdge {
  Token a, b;
  Integer multiplicity;
  std::size_t line;
};

struct PendingCoefficient {
  Token id;
  Integer value;
};

struct PendingCycle {
  std::string name;
  std::vector<PendingCoefficient> coefficients;
  std::size_t line;
};

class Parser {
 public:
  GraphDocument run(std::string_view text) {
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t end = text.find('\n', pos);
      if (end == std::string_view::npos) end = text.size();
      ++line_no;
      statement(tokenize(text.substr(pos, end - pos)), line_no);
      if (end == text.size()) break;
      pos = end + 1;
    }
    return finish();
  }

 private:
  [[noreturn]] static void fail(std::size_t line, std::size_t col, const std::string& what) {
    throw ParseError(line, col, what);
  }

  static void check_identifier(const Token& t, std::size_t line, const char* what) {
    if (!is_identifier(t.text)) {
      fail(line, t.column, std::string("invalid ") + what + " '" + t.text +
                               "' (expected [A-Za-z0-9_]+)");
    }
  }

  static Integer integer_value(const std::string& text, std::size_t line, std::size_t col) {
    Integer v;
    if (!parse_integer(text, v)) fail(line, col, "expected an integer, got '" + text + "'");
    return v;
  }

  void statement(const std::vector<Token>& tokens, std::size_t line) {
    if (tokens.empty()) return;
    const Token& head = tokens.front();
    const bool first = !seen_statement_;
    seen_statement_ = true;

    if (head.text == "graph") {
      if (!first) fail(line, head.column, "'graph' must be the first statement");
      if (tokens.size() != 2) fail(line, head.column, "expected 'graph <name>'");
      check_identifier(tokens[1], line, "graph name");
      name_ = tokens[1].text;
    } else if (head.text == "v") {
      vertex(tokens, line);
    } else if (head.text == "e") {
      edge(tokens, line);
    } else if (head.text == "cycle") {
      cycle(tokens, line);
    } else {
      fail(line, head.column, "unknown statement '" + head.text + "'");
    }
  }

  void vertex(const std::vector<Token>& t, std::size_t line) {
    if (t.size() < 3) fail(line, t[0].column, "expected 'v <id> sq=<int> [g=<int>] [sing]'");
    check_identifier(t[1], line, "vertex id");
    if (index_.count(t[1].text)) fail(line, t[1].column, "duplicate vertex id '" + t[1].text + "'");
    VertexData v;
    v.id = t[1].text;
    bool have_sq = false, have_g = false, have_sing = false;
    for (std::size_t i = 2; i < t.size(); ++i) {
      const auto& tok = t[i];
      if (tok.text.rfind("sq=", 0) == 0) {
        if (have_sq) fail(line, tok.column, "repeated sq=");
        v.self_intersection = integer_value(tok.text.substr(3), line, tok.column + 3);
        have_sq = true;
      } else if (tok.text.rfind("g=", 0) == 0) {
        if (have_g) fail(line, tok.column, "repeated g=");
        v.genus = integer_value(tok.text.substr(2), line, tok.column + 2);
        if (v.genus < 0) fail(line, tok.column + 2, "genus must be nonnegative");
        have_g = true;
      } else if (tok.text == "sing") {
        if (have_sing) fail(line, tok.column, "repeated sing");
        v.smooth = false;
        have_sing = true;
      } else {
        fail(line, tok.column, "unexpected vertex attribute '" + tok.text + "'");
      }
    }
    if (!have_sq) fail(line, t[0].column, "vertex " + v.id + " is missing sq=<int>");
    index_[v.id] = vertices_.size();
    vertices_.push_back(std::move(v));
  }

  void edge(const std::vector<Token>& t, std::size_t line) {
    if (t.size() < 3 || t.size() > 4) fail(line, t[0].column, "expected 'e <id> <id> [m=<int>]'");
    check_identifier(t[1], line, "vertex id");
    check_identifier(t[2], line, "vertex id");
    if (t[1].text == t[2].text) fail(line, t[2].column, "self-loop on vertex " + t[1].text);
    Integer m = 1;
    if (t.size() == 4) {
      if (t[3].text.rfind("m=", 0) != 0) {
        fail(line, t[3].column, "unexpected edge attribute '" + t[3].text + "'");
      }
      m = integer_value(t[3].text.substr(2), line, t[3].column + 2);
      if (m <= 0) fail(line, t[3].column + 2, "edge multiplicity must be positive");
    }
    auto key = std::minmax(t[1].text, t[2].text);
    if (!edge_keys_.insert({key.first, key.second}).second) {
      fail(line, t[0].column, "repeated edge " + t[1].text + " " + t[2].text);
    }
    edges_.push_back({t[1], t[2], m, line});
  }

  void cycle(const std::vector<Token>& t, std::size_t line) {
    if (t.size() < 3) fail(line, t[0].column, "expected 'cycle <name> <id>=<int> ...'");
    check_identifier(t[1], line, "cycle name");
    for (const auto& c : cycles_) {
      if (c.name == t[1].text) fail(line, t[1].column, "duplicate cycle name '" + t[1].text + "'");
    }
    PendingCycle pc{t[1].text, {}, line};
    for (std::size_t i = 2; i < t.size(); ++i) {
      const auto eq = t[i].text.find('=');
      if (eq == std::string::npos) fail(line, t[i].column, "expected <id>=<int>, got '" + t[i].text + "'");
      Token id{t[i].text.substr(0, eq), t[i].column};
      check_identifier(id, line, "vertex id");
      for (const auto& prev : pc.coefficients) {
        if (prev.id.text == id.text) fail(line, id.column, "repeated coefficient for " + id.text);
      }
      pc.coefficients.push_back(
          {id, integer_value(t[i].text.substr(eq + 1), line, t[i].column + eq + 1)});
    }
    cycles_.push_back(std::move(pc));
  }

  VertexIndex resolve(const Token& t, std::size_t line) const {
    auto it = index_.find(t.text);
    if (it == index_.end()) fail(line, t.column, "unknown vertex id '" + t.text + "'");
    return it->second;
  }

  GraphDocument finish() {
    if (vertices_.empty()) fail(1, 1, "graph has no vertices");
    std::vector<Edge> edges;
    for (const auto& e : edges_) {
      edges.push_back({resolve(e.a, e.line), resolve(e.b, e.line), e.multiplicity});
    }
    GraphDocument doc{ResolutionGraph(vertices_, std::move(edges), name_), {}};
    for (const auto& pc : cycles_) {
      Cycle c = Cycle::zero(vertices_.size());
      for (const auto& coef : pc.coefficients) c[resolve(coef.id, pc.line)] = coef.value;
      doc.cycles.emplace_back(pc.name, std::move(c));
    }
    return doc;
  }

  bool seen_statement_ = false;
  std::string name_;
  std::vector<VertexData> vertices_;
  std::map<std::string, VertexIndex> index_;
  std::vector<PendingEdge> edges_;
  std::set<std::pair<std::string, std::string>> edge_keys_;
  std::vector<PendingCycle> cycles_;
};

}  // namespace

const Cycle& GraphDocument::cycle(std::string_view name) const {
  for (const auto& [n, c] : cycles) {
    if (n == name) return c;
  }
  throw PreconditionError("no cycle named '" + std::string(name) + "'");
}

GraphDocument parse_graph(std::string_view text) { return Parser().run(text); }

GraphDocument load_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw PreconditionError("cannot open graph file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_graph(ss.str());
}

std::string format_cycle(const ResolutionGraph& g, const Cycle& c) {
  std::string out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out += ' ';
    out += g.vertex(i).id + ':' + to_string(c[i]);
  }
  return out;
}

std::string format_cycle(const ResolutionGraph& g, const RationalCycle& c) {
  std::string out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out += ' ';
    out += g.vertex(i).id + ':' + to_string(c[i]);
  }
  return out;
}

std::string format_cycle_statement(const ResolutionGraph& g, std::string_view name,
                                   const Cycle& c) {
  std::string out = "cycle " + std::string(name);
  for (std::size_t i = 0; i < c.size(); ++i) out += ' ' + g.vertex(i).id + '=' + to_string(c[i]);
  return out;
}

std::string format_vertex_set(const ResolutionGraph& g, const VertexSet& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += g.vertex(s[i]).id;
  }
  return out;
}

VertexSet parse_vertex_list(const ResolutionGraph& g, std::string_view list) {
  VertexSet s;
  std::size_t pos = 0;
  while (pos <= list.size()) {
    std::size_t end = list.find(',', pos);
    if (end == std::string_view::npos) end = list.size();
    const auto id = list.substr(pos, end - pos);
    if (id.empty()) throw PreconditionError("empty vertex id in list '" + std::string(list) + "'");
    s.push_back(g.require_index(id));
    if (end == list.size()) break;
    pos = end + 1;
  }
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
    throw PreconditionError("repeated vertex id in list '" + std::string(list) + "'");
  }
  return s;
}

std::string format_graph(const ResolutionGraph& g) {
  std::ostringstream out;
  if (!g.name().empty()) out << "graph " << g.name() << '\n';
  for (const auto& v : g.vertices()) {
    out << "v " << v.id << " sq=" << v.self_intersection;
    if (v.genus != 0) out << " g=" << v.genus;
    if (!v.smooth) out << " sing";
    out << '\n';
  }
  for (const auto& e : g.edges()) {
    out << "e " << g.vertex(e.a).id << ' ' << g.vertex(e.b).id;
    if (e.multiplicity != 1) out << " m=" << e.multiplicity;
    out << '\n';
  }
  return out.str();
}

}  // namespace singlattice
