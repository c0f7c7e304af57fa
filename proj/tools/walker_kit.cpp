// walker-kit: batch driver over the Walker-Einstein symmetry toolkit.
// Exit codes: 0 all checks passed, 1 a check failed, 2 usage error.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <sstream>

#include "walker/cli/checks.hpp"
#include "walker/expr/latex.hpp"
#include "walker/liealg/adjoint.hpp"
#include "walker/liealg/replay.hpp"

using namespace walker;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::uint64_t seed = 42;
  double tol = 1e-9;
  int samples = 100;
  std::string report = "text";
  std::string catalog_path;
  std::string mode = "symbolic";
};

struct Output {
  Report report;
  std::string body;  // text preamble (tables, matrices)
};

const std::vector<CatalogEntry>& entries(const Globals& g) {
  static std::optional<std::vector<CatalogEntry>> loaded;
  if (g.catalog_path.empty()) return builtin();
  if (!loaded) loaded = load_catalog(g.catalog_path);
  return *loaded;
}

const CatalogEntry& entry(const Globals& g, const std::string& id) {
  const CatalogEntry* e = find_entry(entries(g), id);
  if (!e) throw UsageError("unknown catalog entry '" + id + "'");
  return *e;
}

CheckOptions options(const Globals& g) {
  CheckOptions o;
  if (g.mode == "symbolic") o.mode = CheckMode::Symbolic;
  else if (g.mode == "numeric") o.mode = CheckMode::Numeric;
  else throw UsageError("--mode must be symbolic or numeric");
  o.samples = g.samples;
  o.tol = g.tol;
  o.seed = g.seed;
  return o;
}

Expr parse_user(const std::string& text, const char* flag) {
  ParseOptions po;
  po.any_param = true;
  try {
    return parse(text, po);
  } catch (const ParseError& e) {
    throw UsageError(std::string(flag) + ": " + e.what());
  }
}

std::string pad(std::string s, std::size_t w) {
  if (s.size() < w) s.append(w - s.size(), ' ');
  return s;
}

Output cmd_brackets() {
  Output out;
  out.report.command = "brackets";
  const auto& sc = symmetry_algebra();
  ojson table = ojson::array();
  std::vector<std::vector<std::string>> cells(7, std::vector<std::string>(7));
  std::size_t w = 2;
  for (std::size_t i = 0; i < 7; ++i) {
    ojson row = ojson::array();
    for (std::size_t j = 0; j < 7; ++j) {
      RVector v(7);
      for (std::size_t k = 0; k < 7; ++k) v[k] = sc(k, i, j);
      bool zero = std::all_of(v.begin(), v.end(), [](const Rational& q) { return q == 0; });
      cells[i][j] = zero ? "0" : render_generator(to_coeffs(v));
      w = std::max(w, cells[i][j].size());
      row.push_back(cells[i][j]);
    }
    table.push_back(row);
  }
  out.body = pad("[row, col]", 6) + "  ";
  for (std::size_t j = 0; j < 7; ++j) out.body += pad("X" + std::to_string(j + 1), w) + "  ";
  out.body += "\n";
  for (std::size_t i = 0; i < 7; ++i) {
    out.body += pad("X" + std::to_string(i + 1), 10) + "  ";
    for (std::size_t j = 0; j < 7; ++j) out.body += pad(cells[i][j], w) + "  ";
    out.body += "\n";
  }
  CheckRecord closure = timed([&] {
    std::array<VectorField, 7> basis = symmetry_basis();
    int failures = 0;
    for (std::size_t i = 0; i < 7; ++i)
      for (std::size_t j = 0; j < 7; ++j)
        if (!decompose(bracket(basis[i], basis[j]), basis)) ++failures;
    CheckRecord r = detail::verdict("brackets.closure", failures == 0,
                                    std::to_string(49 - failures) + "/49 brackets decompose in X1..X7");
    r.data = {{"table", table}};
    return r;
  });
  out.report.add(closure);
  out.report.add(timed([&] {
    int f = jacobi_failures(sc);
    return detail::verdict("brackets.jacobi", f == 0, std::to_string(35 - f) + "/35 triples satisfy Jacobi");
  }));
  return out;
}

Output cmd_adjoint(int gen, const std::string& s_text, const std::string& sign_text) {
  if (gen < 1 || gen > 7) throw UsageError("--gen must be in 1..7");
  AdjointSign sign;
  if (sign_text == "minus") sign = AdjointSign::Minus;
  else if (sign_text == "plus") sign = AdjointSign::Plus;
  else throw UsageError("--sign must be minus or plus");
  Expr s = parse_user(s_text, "--s");
  Output out;
  out.report.command = "adjoint";
  EMatrix m = adjoint_matrix(static_cast<std::size_t>(gen - 1), s, sign);
  ojson rows = ojson::array();
  for (std::size_t k = 0; k < 7; ++k) {
    CoeffVector col;
    for (std::size_t i = 0; i < 7; ++i) col[i] = m[i][k];
    std::string img = render_generator(col);
    out.body += "Ad(exp(" + render(s) + " X" + std::to_string(gen) + ")) X" + std::to_string(k + 1) + " = " + img + "\n";
    rows.push_back(img);
  }
  CheckRecord r = detail::verdict("adjoint.X" + std::to_string(gen), true,
                                  std::string("convention ") + adjoint_sign_name(sign));
  r.data = {{"s", render(s)}, {"images", rows}};
  out.report.add(r);
  return out;
}

std::vector<std::string> split_generators(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    auto b = part.find_first_not_of(' ');
    auto e = part.find_last_not_of(' ');
    if (b != std::string::npos) out.push_back(part.substr(b, e - b + 1));
  }
  return out;
}

Output cmd_subalgebra(const std::string& gens, bool check_closed) {
  Output out;
  out.report.command = "subalgebra";
  Subalgebra h;
  try {
    h = make_subalgebra(split_generators(gens));
  } catch (const ParseError& e) {
    throw UsageError(std::string("--gens: ") + e.what());
  }
  if (h.gens.empty()) throw UsageError("--gens is empty");
  std::vector<std::string> rendered;
  for (const auto& g : h.gens) rendered.push_back(render_generator(g));
  out.body = "generators: " + detail::join(rendered, "; ") + "\nparameters: " + detail::join(h.params) + "\n";
  CheckRecord r = detail::verdict("subalgebra.parse", true, std::to_string(h.gens.size()) + " generators");
  r.data = {{"generators", rendered}, {"params", h.params}};
  out.report.add(r);
  if (check_closed) out.report.add(timed([&] { return closure_record("subalgebra.closure", h); }));
  return out;
}

Output cmd_symmetries(const Globals& g) {
  Output out;
  out.report.command = "symmetries";
  auto basis = symmetry_basis();
  for (std::size_t i = 0; i < 7; ++i)
    out.report.add(symmetry_record("symmetry.X" + std::to_string(i + 1), basis[i], g.samples, g.seed, true));
  out.report.add(symmetry_record("symmetry.negative-control", negative_control_field(), g.samples, g.seed, false));
  return out;
}

Output cmd_einstein(const Globals& g, const std::string& a, const std::string& b, const std::string& c,
                    const std::string& id) {
  Output out;
  out.report.command = "einstein";
  Expr ea, eb, ec;
  std::string label = "metric";
  if (!id.empty()) {
    const CatalogEntry& e = entry(g, id);
    if (e.solutions.empty()) throw UsageError("entry '" + id + "' has no solution");
    SolutionTriple s = entry_solution(e.solutions[0]);
    ea = s.a, eb = s.b, ec = s.c;
    label = id;
  } else {
    if (a.empty() || b.empty() || c.empty()) throw UsageError("einstein needs --a, --b and --c, or --entry");
    ea = parse_user(a, "--a"), eb = parse_user(b, "--b"), ec = parse_user(c, "--c");
  }
  out.body = "g = " + line_element(build_metric(ea, eb, ec)) + "\n";
  for (auto& r : einstein_checks(label, ea, eb, ec, options(g))) out.report.add(std::move(r));
  return out;
}

Output cmd_verify(const Globals& g, const std::string& id, bool all) {
  if (all == !id.empty()) throw UsageError("verify needs exactly one of --entry or --all");
  Output out;
  out.report.command = all ? "verify --all" : "verify --entry " + id;
  CheckOptions o = options(g);
  if (all) {
    for (const auto& e : entries(g))
      for (auto& r : verify_entry(e, o)) out.report.add(std::move(r));
  } else {
    for (auto& r : verify_entry(entry(g, id), o)) out.report.add(std::move(r));
  }
  return out;
}

Output cmd_defect(const Globals& g, const std::string& id) {
  const CatalogEntry& e = entry(g, id);
  if (e.generators.empty() || e.solutions.empty()) throw UsageError("entry '" + id + "' needs a subalgebra and a solution");
  Output out;
  out.report.command = "defect";
  Subalgebra h = entry_subalgebra(e);
  for (std::size_t k = 0; k < e.solutions.size(); ++k) {
    out.report.add(timed([&] {
      std::string rid = e.id + ".solution" + std::to_string(k + 1) + ".defect";
      try {
        int d = defect(h, entry_solution(e.solutions[k]), g.seed);
        int bound = std::min<int>(static_cast<int>(h.gens.size()), 3);
        CheckRecord r = detail::verdict(rid, true, "delta = " + std::to_string(d) + " (bound " +
                                                       std::to_string(bound) + ")");
        r.data = {{"defect", d}, {"bound", bound}};
        if (e.delta) r.data["declared"] = *e.delta;
        return r;
      } catch (const std::exception& ex) {
        return detail::verdict(rid, false, ex.what());
      }
    }));
  }
  if (!e.invariants.empty()) {
    RankResult rr = invariant_rank(entry_invariants(e), g.seed);
    CheckRecord r = detail::verdict(e.id + ".rank", true,
                                    "rank " + std::to_string(rr.rank) + ", delta " + std::to_string(rr.defect));
    r.data = {{"rank", rr.rank}, {"delta", rr.defect}};
    out.report.add(r);
  }
  return out;
}

Output cmd_reducibility(const Globals& g, const std::string& id) {
  const CatalogEntry& e = entry(g, id);
  if (e.generators.size() != 2 || e.solutions.empty())
    throw UsageError("entry '" + id + "' needs a two-dimensional subalgebra and a solution");
  Output out;
  out.report.command = "reducibility";
  for (std::size_t k = 0; k < e.solutions.size(); ++k) out.report.add(reducibility_record(e, k, options(g)));
  return out;
}

Output cmd_probe(const Globals& g) {
  Output out;
  out.report.command = "equivalence-probe";
  out.report.add(timed([&] {
    ProbeReport p = equivalence_probe(g.samples, g.seed);
    CheckRecord r = detail::verdict("equivalence-probe", p.pass,
                                    "max |E| on-shell " + format_double(p.max_on_shell) + ", min max|E| off-shell " +
                                        format_double(p.min_generic) + " over " + std::to_string(p.samples) +
                                        " jets");
    ojson rows = ojson::array();
    for (const auto& row : p.correspondence) {
      ojson ents = ojson::array();
      std::string line = row.component + " =";
      for (const auto& en : row.entries) {
        ents.push_back({{"equation", en.equation + 1}, {"coefficient", en.coefficient}, {"constant", en.constant}});
        line += " " + (en.constant ? format_double(en.coefficient) : std::string("f")) + "*eq" +
                std::to_string(en.equation + 1);
      }
      if (row.entries.empty()) line += " 0";
      out.body += line + "\n";
      rows.push_back({{"component", row.component}, {"entries", ents}});
    }
    r.data = {{"switched_sign", p.switched}, {"correspondence", rows}};
    if (!p.counterexample.empty()) r.witness = p.counterexample;
    return r;
  }));
  return out;
}

Output cmd_emit_metric(const Globals& g, const std::string& id, const std::string& format) {
  const CatalogEntry& e = entry(g, id);
  if (e.solutions.empty()) throw UsageError("entry '" + id + "' has no solution");
  SolutionTriple s = entry_solution(e.solutions[0]);
  Metric4 m = build_metric(s.a, s.b, s.c);
  Output out;
  out.report.command = "emit-metric";
  CheckRecord r = detail::verdict("metric." + id, true);
  if (format == "latex") {
    auto wrap = [](const Expr& x) {
      std::string t = to_latex(x);
      return x.is(Kind::Add) ? "\\left(" + t + "\\right)" : t;
    };
    std::string tex = "g = 2(dx\\circ dy + dt\\circ dz) + " + wrap(m.g[2][2]) + "\\, dy\\circ dy + " + wrap(m.g[3][3]) +
                      "\\, dz\\circ dz + " + wrap(Expr(2) * m.g[2][3]) + "\\, dy\\circ dz";
    out.body = tex + "\n";
    r.data = {{"latex", tex}};
  } else if (format == "json") {
    ojson rows = ojson::array();
    for (std::size_t i = 0; i < 4; ++i) {
      ojson row = ojson::array();
      for (std::size_t j = 0; j < 4; ++j) row.push_back(render(m.g[i][j]));
      rows.push_back(row);
    }
    r.data = {{"coordinates", {"x", "t", "y", "z"}}, {"g", rows}, {"params", e.solutions[0].params}};
    out.body = rows.dump() + "\n";
  } else if (format == "text") {
    out.body = "g = " + line_element(m) + "\n";
    r.data = {{"line_element", line_element(m)}};
  } else {
    throw UsageError("--format must be latex, json or text");
  }
  out.report.add(r);
  return out;
}

Output cmd_replay() {
  Output out;
  out.report.command = "replay";
  ReplayReport rep = replay_all();
  for (const auto& o : rep.outcomes) {
    CheckRecord r = detail::verdict("replay." + o.id, o.pass, o.detail);
    r.data = {{"result", render_generator(o.result)}};
    out.report.add(r);
  }
  if (rep.switched) {
    std::vector<std::string> failed;
    for (const auto& o : rep.first_attempt)
      if (!o.pass) failed.push_back(o.id);
    out.report.notes.push_back(std::string("replay switched to the ") + adjoint_sign_name(rep.sign) +
                               " convention; under the other convention these cases failed: " +
                               detail::join(failed));
  }
  return out;
}

Output cmd_catalog(const Globals& g, const std::string& save) {
  Output out;
  out.report.command = "catalog";
  const auto& es = entries(g);
  for (const auto& e : es) out.body += pad(e.id, 22) + pad(e.kind, 20) + e.provenance + "\n";
  CheckRecord r = detail::verdict("catalog.load", true, std::to_string(es.size()) + " entries");
  if (!save.empty()) {
    save_catalog(es, save);
    r.detail += ", saved to " + save;
  }
  out.report.add(r);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"walker-kit: symmetry, PIS and Einstein checks for 4D Walker metrics"};
  app.require_subcommand(1);
  Globals g;
  auto add_globals = [&](CLI::App* sub) {
    sub->add_option("--seed", g.seed, "RNG seed")->capture_default_str();
    sub->add_option("--tol", g.tol, "numeric zero tolerance")->capture_default_str();
    sub->add_option("--samples", g.samples, "sample count")->capture_default_str()->check(CLI::PositiveNumber);
    sub->add_option("--report", g.report, "report format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
    sub->add_option("--catalog", g.catalog_path, "catalog file (JSON Lines) instead of the builtin one");
  };
  add_globals(&app);

  auto* brackets = app.add_subcommand("brackets", "7x7 bracket table and Jacobi verdict");
  int gen = 0;
  std::string s_text, sign_text = "minus";
  auto* adjoint = app.add_subcommand("adjoint", "matrix of Ad(exp(s Xi))");
  adjoint->add_option("--gen", gen, "generator index 1..7")->required();
  adjoint->add_option("--s", s_text, "group parameter (number or symbol)")->required();
  adjoint->add_option("--sign", sign_text, "exponent convention: minus (exp(-s ad)) or plus")->capture_default_str();
  std::string gens;
  bool check_closed = false;
  auto* subalg = app.add_subcommand("subalgebra", "parse a subalgebra and optionally check closure");
  subalg->add_option("--gens", gens, "comma-separated generators, e.g. \"X1, X3 + alpha*X6\"")->required();
  subalg->add_flag("--check-closed", check_closed, "verify [g1, g2] lies in the span");
  auto* symm = app.add_subcommand("symmetries", "certify X1..X7 on seeded on-shell jets");
  std::string ea, eb, ec, entry_id;
  auto* einstein = app.add_subcommand("einstein", "Ricci and Einstein verdicts for a Walker metric");
  einstein->add_option("--a", ea);
  einstein->add_option("--b", eb);
  einstein->add_option("--c", ec);
  einstein->add_option("--entry", entry_id, "catalog entry whose first solution is used");
  bool all = false;
  auto* verify = app.add_subcommand("verify", "verify catalog entries");
  verify->add_option("--entry", entry_id);
  verify->add_flag("--all", all);
  verify->add_option("--mode", g.mode, "symbolic (symbolic first, numeric fallback) or numeric")->capture_default_str();
  auto* defect_cmd = app.add_subcommand("defect", "defect structure of an entry's solutions");
  defect_cmd->add_option("--entry", entry_id)->required();
  auto* reduc = app.add_subcommand("reducibility", "one-parameter subgroups leaving a solution invariant");
  reduc->add_option("--entry", entry_id)->required();
  auto* probe = app.add_subcommand("equivalence-probe", "4D Einstein condition versus the 2D system on random jets");
  std::string format = "text";
  auto* emit = app.add_subcommand("emit-metric", "print the metric of an entry");
  emit->add_option("--entry", entry_id)->required();
  emit->add_option("--format", format, "latex, json or text")->capture_default_str();
  auto* replay_cmd = app.add_subcommand("replay", "replay the adjoint normalizations of the X1 case");
  std::string save;
  auto* catalog_cmd = app.add_subcommand("catalog", "list catalog entries");
  catalog_cmd->add_option("--save", save, "write the catalog as JSON Lines");
  for (auto* sub : {brackets, adjoint, subalg, symm, einstein, verify, defect_cmd, reduc, probe, emit, replay_cmd,
                    catalog_cmd})
    add_globals(sub);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  Output out;
  try {
    if (*brackets) out = cmd_brackets();
    else if (*adjoint) out = cmd_adjoint(gen, s_text, sign_text);
    else if (*subalg) out = cmd_subalgebra(gens, check_closed);
    else if (*symm) out = cmd_symmetries(g);
    else if (*einstein) out = cmd_einstein(g, ea, eb, ec, entry_id);
    else if (*verify) out = cmd_verify(g, entry_id, all);
    else if (*defect_cmd) out = cmd_defect(g, entry_id);
    else if (*reduc) out = cmd_reducibility(g, entry_id);
    else if (*probe) out = cmd_probe(g);
    else if (*emit) out = cmd_emit_metric(g, entry_id, format);
    else if (*replay_cmd) out = cmd_replay();
    else if (*catalog_cmd) out = cmd_catalog(g, save);
  } catch (const UsageError& e) {
    std::cerr << "walker-kit: " << e.what() << "\n";
    return 2;
  } catch (const CatalogError& e) {
    std::cerr << "walker-kit: catalog: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "walker-kit: " << e.what() << "\n";
    return 1;
  }
  out.report.seed = g.seed;
  if (g.report == "json") std::cout << out.report.to_json().dump(2) << "\n";
  else std::cout << out.body << out.report.to_text();
  return out.report.ok() ? 0 : 1;
}
