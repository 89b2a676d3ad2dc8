#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <functional>
#include <optional>
#include <sstream>

#include "singlattice/bounds.hpp"
#include "singlattice/corpus.hpp"
#include "singlattice/errors.hpp"
#include "singlattice/graph_io.hpp"
#include "singlattice/lattice.hpp"
#include "singlattice/selfcheck.hpp"

namespace singlattice::cli {

namespace {

const char* yes_no(bool b) { return b ? "yes" : "no"; }

GraphDocument load(const std::string& path) {
  GraphDocument doc = load_graph_file(path);
  require_valid(doc.graph);
  return doc;
}

// A cycle declared in the file, or one of the built-in names Zf (the
// fundamental cycle) and E (the reduced exceptional cycle).
Cycle named_cycle(const GraphDocument& doc, const std::string& name) {
  for (const auto& [n, c] : doc.cycles) {
    if (n == name) return c;
  }
  if (name == "Zf") return fundamental_cycle(doc.graph);
  if (name == "E") return Cycle::reduced(doc.graph.size(), doc.graph.all_vertices());
  throw PreconditionError("no cycle named '" + name + "' (declare it with a cycle statement)");
}

void header(std::ostream& out, const ResolutionGraph& g) {
  out << "graph = " << (g.name().empty() ? "-" : g.name()) << '\n';
}

void cmd_invariants(std::ostream& out, const std::string& file) {
  const GraphDocument doc = load_graph_file(file);
  const auto& g = doc.graph;
  const auto v = validate_graph(g);
  header(out, g);
  out << "vertices = " << g.size() << '\n';
  out << "connected = " << yes_no(v.connected) << '\n';
  out << "negative_definite = " << yes_no(v.negative_definite) << '\n';
  out << "minors =";
  for (const auto& m : v.minors) out << ' ' << m;
  out << '\n';
  if (!v.ok) {
    out << "diagnostic = " << v.diagnostic << '\n';
    throw ValidationError(v.diagnostic);
  }
  const auto gi = genus_invariants(g);
  out << "Z_f = " << format_cycle(g, gi.fundamental_cycle) << '\n';
  out << "p_f = " << gi.p_f << '\n';
  out << "p_a = " << gi.p_a << '\n';
  out << "p_a_witness = " << format_cycle(g, gi.pa_witness) << '\n';
}

void cmd_zf(std::ostream& out, const std::string& file, const std::string& support) {
  const auto doc = load(file);
  const auto& g = doc.graph;
  const VertexSet s = support.empty() ? g.all_vertices() : parse_vertex_list(g, support);
  header(out, g);
  out << "support = " << format_vertex_set(g, s) << '\n';
  out << "Z = " << format_cycle(g, fundamental_cycle(g, s)) << '\n';
}

void cmd_b(std::ostream& out, const std::string& file, const std::string& restrict_to) {
  const auto doc = load(file);
  const auto& g = doc.graph;
  const ChainSet b = enumerate_B(g);
  std::vector<Cycle> members = b.members();
  header(out, g);
  if (!restrict_to.empty()) {
    const Cycle l = named_cycle(doc, restrict_to);
    members = restricted_B(g, b, l);
    out << "L = " << format_cycle(g, l) << '\n';
  }
  out << "count = " << members.size() << '\n';
  for (std::size_t i = 0; i < members.size(); ++i) {
    out << "B." << i + 1 << " = " << format_cycle(g, members[i]) << '\n';
  }
}

void cmd_ccc(std::ostream& out, const std::string& file, const std::string& name) {
  const auto doc = load(file);
  const auto& g = doc.graph;
  const Cycle d = named_cycle(doc, name);
  const auto dec = ccc_decompose(g, d);
  header(out, g);
  out << "cycle = " << format_cycle(g, d) << '\n';
  out << "parts = " << dec.parts.size() << '\n';
  for (std::size_t i = 0; i < dec.parts.size(); ++i) {
    out << "part." << i + 1 << ".multiplicity = " << dec.parts[i].multiplicity << '\n';
    out << "part." << i + 1 << ".cycle = " << format_cycle(g, dec.parts[i].cycle) << '\n';
  }
  out << "fallback_used = " << yes_no(dec.fallback_used) << '\n';
}

void cmd_mc(std::ostream& out, const std::string& file, const std::string& name) {
  const auto doc = load(file);
  const auto& g = doc.graph;
  const Cycle d = named_cycle(doc, name);
  const Cycle m = minimal_model(g, d);
  header(out, g);
  out << "cycle = " << format_cycle(g, d) << '\n';
  out << "chi = " << euler_chi(g, d) << '\n';
  out << "minimal_model = " << format_cycle(g, m) << '\n';
}

int cmd_condition(std::ostream& out, const std::string& file, const std::string& name,
                  const std::string& mode) {
  const auto doc = load(file);
  const auto& g = doc.graph;
  const ConditionMode m = parse_condition_mode(mode);
  const Cycle l = named_cycle(doc, name);
  const auto v = vanishing_condition(g, l, m);
  header(out, g);
  out << "L = " << format_cycle(g, l) << '\n';
  out << "mode = " << to_string(v.mode) << '\n';
  if (v.chi_perp) out << "chi_perp = " << *v.chi_perp << '\n';
  out << "margin = " << v.margin << '\n';
  out << "holds = " << yes_no(v.holds) << '\n';
  if (v.witness) out << "witness = " << format_cycle(g, *v.witness) << '\n';
  return v.holds ? ok : condition_fails;
}

void cmd_lambda(std::ostream& out, const std::string& file, const std::string& name) {
  const auto doc = load(file);
  const auto& g = doc.graph;
  const Cycle z = named_cycle(doc, name);
  const auto r = lambda_exact(g, z);
  header(out, g);
  out << "Z = " << format_cycle(g, z) << '\n';
  out << "lambda = " << r.value << '\n';
  out << "ratio = " << r.numerator << '/' << r.denominator << '\n';
  out << "C1 = " << format_cycle(g, r.c1) << '\n';
  out << "C2 = " << format_cycle(g, r.c2) << '\n';
}

void cmd_bounds(std::ostream& out, const std::string& file, const std::string& name,
                const std::optional<std::string>& pg, const std::string& gonality) {
  const auto doc = load(file);
  const auto& g = doc.graph;
  BoundOptions opts;
  if (pg) {
    Integer v;
    if (!parse_integer(*pg, v)) throw PreconditionError("--pg expects an integer");
    opts.pg = v;
  }
  if (!parse_integer(gonality, opts.gonality_lower)) throw PreconditionError("--gonality expects an integer");
  const Cycle z = named_cycle(doc, name);
  const auto r = br_bound_report(g, z, opts);
  header(out, g);
  out << "ideal = " << format_cycle(g, z) << '\n';
  for (const auto& e : r.bounds) {
    out << "bound." << e.label << " = " << e.value << '\n';
    out << "bound." << e.label << ".source = " << e.source << '\n';
    out << "bound." << e.label << ".witness = " << e.witness << '\n';
  }
  for (const auto& n : r.notes) out << "note = " << n << '\n';
  out << "best = " << r.best << '\n';
}

void cmd_almost_cone(std::ostream& out, const std::string& file) {
  const auto doc = load(file);
  const auto& g = doc.graph;
  const auto ac = almost_cone_profile(g);
  header(out, g);
  out << "almost_cone = " << yes_no(ac.profile.has_value()) << '\n';
  if (!ac.profile) {
    out << "reason = " << ac.reason << '\n';
    return;
  }
  const auto& p = *ac.profile;
  out << "central = " << g.vertex(p.central).id << '\n';
  out << "genus = " << p.genus << '\n';
  out << "degree = " << p.degree << '\n';
  out << "delta = " << p.delta << '\n';
  out << "ac_bound.global = " << ac_bound(g, std::nullopt).bound << '\n';
}

void cmd_elliptic(std::ostream& out, const std::string& file, const std::string& support) {
  const auto doc = load(file);
  const auto& g = doc.graph;
  std::optional<VertexSet> s;
  if (!support.empty()) s = parse_vertex_list(g, support);
  const auto seq = elliptic_sequence(g, s);
  header(out, g);
  out << "length = " << seq.size() << '\n';
  for (std::size_t i = 0; i < seq.size(); ++i) out << "Z." << i << " = " << format_cycle(g, seq[i]) << '\n';
  out << "minimally_elliptic = " << format_cycle(g, minimal_model(g, seq.front())) << '\n';
}

void cmd_zariski(std::ostream& out, const std::string& a, const std::string& b) {
  Integer x, y;
  if (!parse_integer(a, x) || !parse_integer(b, y)) throw PreconditionError("zariski expects two integers");
  const Integer br_m = zariski_formula(x, y);
  out << "a = " << x << '\n' << "b = " << y << '\n';
  out << "br_m = " << br_m << '\n';
}

int cmd_verify(std::ostream& out, const std::string& file) {
  const auto doc = load(file);
  SelfCheckOptions opts;
  opts.max_box = max_box_from_env();
  const auto results = run_self_checks(doc.graph, opts);
  header(out, doc.graph);
  out << "max_box = " << opts.max_box << '\n';
  std::size_t passed = 0, skipped = 0, failed = 0;
  for (const auto& r : results) {
    out << "check." << r.name << " = " << to_string(r.status);
    if (!r.detail.empty()) out << " (" << r.detail << ')';
    out << '\n';
    if (r.status == CheckStatus::pass) ++passed;
    if (r.status == CheckStatus::skipped) ++skipped;
    if (r.status == CheckStatus::fail) ++failed;
  }
  out << "summary = " << passed << " passed, " << skipped << " skipped, " << failed << " failed\n";
  return failed == 0 ? ok : invariant_violation;
}

int cmd_corpus(std::ostream& out, std::size_t jobs) {
  const auto reports = run_corpus(jobs);
  out << format_corpus_report(reports);
  const bool all = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed(); });
  return all ? ok : invariant_violation;
}

}  // namespace

CommandResult run_command(const std::vector<std::string>& args) {
  CLI::App app{"Exact invariants of normal surface singularities from resolution graphs",
               "singlattice"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "singlattice 0.1.0");

  std::ostringstream out, err;
  std::function<int()> action;

  std::string file, support, restrict_to, cycle, l_name, mode, ideal, gonality = "2", a, b;
  std::optional<std::string> pg;
  std::size_t jobs = 1;

  auto file_arg = [&](CLI::App* sub) { sub->add_option("FILE", file, "Graph file")->required(); };

  auto* inv = app.add_subcommand("invariants", "Genera, fundamental cycle and definiteness");
  file_arg(inv);
  inv->callback([&] { action = [&] { cmd_invariants(out, file); return int(ok); }; });

  auto* zf = app.add_subcommand("zf", "Fundamental cycle on a connected support");
  file_arg(zf);
  zf->add_option("--support", support, "Comma-separated vertex ids");
  zf->callback([&] { action = [&] { cmd_zf(out, file, support); return int(ok); }; });

  auto* bset = app.add_subcommand("b", "Chain-connected cycles below Z_f");
  file_arg(bset);
  bset->add_option("--restrict-to", restrict_to, "Keep cycles with nonzero pairing against this cycle");
  bset->callback([&] { action = [&] { cmd_b(out, file, restrict_to); return int(ok); }; });

  auto* ccc = app.add_subcommand("ccc", "Chain-connected component decomposition");
  file_arg(ccc);
  ccc->add_option("--cycle", cycle, "Cycle name")->required();
  ccc->callback([&] { action = [&] { cmd_ccc(out, file, cycle); return int(ok); }; });

  auto* mc = app.add_subcommand("mc", "Minimal model of a chain-connected cycle");
  file_arg(mc);
  mc->add_option("--cycle", cycle, "Cycle name")->required();
  mc->callback([&] { action = [&] { cmd_mc(out, file, cycle); return int(ok); }; });

  auto* cond = app.add_subcommand("condition", "Check L.C > -2 chi(C) in one of four modes");
  file_arg(cond);
  cond->add_option("--l", l_name, "Cycle name of L")->required();
  cond->add_option("--mode", mode, "rohr, exact, remark1 or remark2")->required();
  cond->callback([&] { action = [&] { return cmd_condition(out, file, l_name, mode); }; });

  auto* lam = app.add_subcommand("lambda", "lambda(Z, X) on the given graph");
  file_arg(lam);
  lam->add_option("--ideal", ideal, "Cycle name of Z")->required();
  lam->callback([&] { action = [&] { cmd_lambda(out, file, ideal); return int(ok); }; });

  auto* bounds = app.add_subcommand("bounds", "Upper bounds for the normal reduction number");
  file_arg(bounds);
  bounds->add_option("--ideal", ideal, "Cycle name of Z")->required();
  bounds->add_option("--pg", pg, "Geometric genus, if known");
  bounds->add_option("--gonality", gonality, "Lower bound for the gonality of the central curve");
  bounds->callback([&] { action = [&] { cmd_bounds(out, file, ideal, pg, gonality); return int(ok); }; });

  auto* ac = app.add_subcommand("almost-cone", "Almost-cone detection and profile");
  file_arg(ac);
  ac->callback([&] { action = [&] { cmd_almost_cone(out, file); return int(ok); }; });

  auto* ell = app.add_subcommand("elliptic-seq", "Elliptic sequence of a support with chi(Z) = 0");
  file_arg(ell);
  ell->add_option("--support", support, "Comma-separated vertex ids");
  ell->callback([&] { action = [&] { cmd_elliptic(out, file, support); return int(ok); }; });

  auto* zar = app.add_subcommand("zariski", "floor((a-1)b/a)");
  zar->add_option("A", a, "a")->required();
  zar->add_option("B", b, "b")->required();
  zar->callback([&] { action = [&] { cmd_zariski(out, a, b); return int(ok); }; });

  auto* ver = app.add_subcommand("verify", "Cross-check every algorithm against its oracle");
  file_arg(ver);
  ver->callback([&] { action = [&] { return cmd_verify(out, file); }; });

  auto* corp = app.add_subcommand("corpus", "Run the bundled example corpus");
  corp->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  corp->callback([&] { action = [&] { return cmd_corpus(out, jobs); }; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return {code == 0 ? int(ok) : int(parse_error), out.str(), err.str()};
  }

  int code = ok;
  bool failed = true;
  try {
    code = action();
    failed = false;
  } catch (const ParseError& e) {
    err << "error: parse: " << e.what() << '\n';
    code = parse_error;
  } catch (const ValidationError& e) {
    err << "error: invalid graph: " << e.what() << '\n';
    code = validation_error;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    code = precondition_error;
  } catch (const InvariantViolation& e) {
    err << "internal error: " << e.what() << '\n';
    code = invariant_violation;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    code = invariant_violation;
  }
  std::string text = out.str();
  // Drop a line left half-written by the exception.
  if (failed && !text.empty() && text.back() != '\n') text.erase(text.find_last_of('\n') + 1);
  return {code, std::move(text), err.str()};
}

}  // namespace singlattice::cli
