#pragma once

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "walker/expr/parse.hpp"
#include "walker/liealg/subalgebra.hpp"
#include "walker/pis/ansatz.hpp"
#include "walker/pis/invariants.hpp"

namespace walker {

using Bindings = std::vector<std::pair<std::string, std::string>>;  // key text -> expression text, ordered

struct CatalogSolution {
  std::string a, b, c;
  std::vector<std::string> params;
  bool operator==(const CatalogSolution&) const = default;
};

struct CatalogAnsatz {
  Bindings bindings;  // keys among "a", "b", "c"
  std::vector<std::string> arbitrary;
  std::vector<std::string> unknowns;
  bool operator==(const CatalogAnsatz&) const = default;
};

// Reduced system in the unknowns of the ansatz, plus candidate families.
struct CatalogReduced {
  std::vector<std::string> residuals;
  std::vector<std::string> consistency;
  std::vector<std::string> inequations;
  std::vector<Bindings> families;  // keys such as "f(t)", "g(t)", "a"
  bool operator==(const CatalogReduced&) const = default;
};

struct CatalogEntry {
  std::string id;
  std::string kind;  // optimal-1d, optimal-2d, reduced, pis, invariant-solution
  std::vector<std::string> generators;
  std::vector<std::string> params;
  std::vector<std::string> invariants;
  std::optional<CatalogAnsatz> ansatz;
  std::optional<CatalogReduced> reduced;
  std::vector<CatalogSolution> solutions;
  std::optional<int> delta;
  std::string domain;
  std::string provenance;
  bool operator==(const CatalogEntry&) const = default;
};

class CatalogError : public std::runtime_error {
 public:
  CatalogError(const std::string& what, std::size_t line, std::size_t offset)
      : std::runtime_error("line " + std::to_string(line) + ", offset " + std::to_string(offset) + ": " + what),
        line_(line),
        offset_(offset) {}
  std::size_t line() const { return line_; }
  std::size_t offset() const { return offset_; }

 private:
  std::size_t line_, offset_;
};

// ---- expression access ----

inline ParseOptions catalog_parse_options(const std::vector<std::string>& params) {
  ParseOptions o;
  o.extra_params.insert(params.begin(), params.end());
  return o;
}

inline Subalgebra entry_subalgebra(const CatalogEntry& e) { return make_subalgebra(e.generators); }

inline InvariantSet entry_invariants(const CatalogEntry& e) {
  InvariantSet s;
  for (const auto& m : e.invariants) s.members.push_back(parse(m, catalog_parse_options(e.params)));
  return s;
}

inline SolutionTriple entry_solution(const CatalogSolution& s) {
  auto o = catalog_parse_options(s.params);
  return {parse(s.a, o), parse(s.b, o), parse(s.c, o), s.params};
}

inline PISAnsatz entry_ansatz(const CatalogAnsatz& a) {
  PISAnsatz out;
  for (const auto& [k, v] : a.bindings) out.bindings.emplace_back(parse(k), parse(v));
  out.arbitrary = a.arbitrary;
  for (const auto& u : a.unknowns) out.unknowns.push_back(parse(u));
  return out;
}

inline std::vector<std::pair<Expr, Expr>> entry_family(const Bindings& b) {
  std::vector<std::pair<Expr, Expr>> out;
  for (const auto& [k, v] : b) out.emplace_back(parse(k), parse(v));
  return out;
}

inline std::vector<Expr> parse_all(const std::vector<std::string>& texts) {
  std::vector<Expr> out;
  for (const auto& t : texts) out.push_back(parse(t));
  return out;
}

inline const CatalogEntry* find_entry(const std::vector<CatalogEntry>& entries, std::string_view id) {
  for (const auto& e : entries)
    if (e.id == id) return &e;
  return nullptr;
}

// ---- serialization: one JSON object per line ----

namespace detail {

using ojson = nlohmann::ordered_json;

inline ojson bindings_json(const Bindings& b) {
  ojson o = ojson::object();
  for (const auto& [k, v] : b) o[k] = v;
  return o;
}

inline ojson entry_json(const CatalogEntry& e) {
  ojson j;
  j["id"] = e.id;
  j["kind"] = e.kind;
  j["subalgebra"] = {{"generators", e.generators}, {"params", e.params}};
  j["invariants"] = e.invariants;
  if (e.ansatz)
    j["ansatz"] = {{"bindings", bindings_json(e.ansatz->bindings)},
                   {"arbitrary", e.ansatz->arbitrary},
                   {"unknowns", e.ansatz->unknowns}};
  if (e.reduced) {
    ojson fams = ojson::array();
    for (const auto& f : e.reduced->families) fams.push_back(bindings_json(f));
    j["reduced"] = {{"residuals", e.reduced->residuals},
                    {"consistency", e.reduced->consistency},
                    {"inequations", e.reduced->inequations},
                    {"families", fams}};
  }
  ojson sols = ojson::array();
  for (const auto& s : e.solutions) sols.push_back({{"a", s.a}, {"b", s.b}, {"c", s.c}, {"params", s.params}});
  j["solutions"] = sols;
  if (e.delta) j["delta"] = *e.delta;
  j["domain"] = e.domain;
  j["provenance"] = e.provenance;
  return j;
}

class EntryReader {
 public:
  EntryReader(std::string_view line, std::size_t lineno) : line_(line), lineno_(lineno) {}

  [[noreturn]] void fail(const std::string& msg, std::string_view near = {}) const {
    std::size_t off = 0;
    if (!near.empty()) {
      auto p = line_.find(near);
      if (p != std::string_view::npos) off = p;
    }
    throw CatalogError(msg, lineno_, off);
  }

  void only(const ojson& o, std::initializer_list<const char*> allowed, const std::string& where) const {
    if (!o.is_object()) fail(where + " must be an object");
    for (const auto& [k, v] : o.items()) {
      bool ok = std::any_of(allowed.begin(), allowed.end(), [&](const char* a) { return k == a; });
      if (!ok) fail("unknown field '" + where + k + "'", "\"" + k + "\"");
    }
  }

  std::string str(const ojson& o, const char* key, const std::string& where, bool required = true) const {
    if (!o.contains(key)) {
      if (required) fail("missing field '" + where + key + "'");
      return {};
    }
    if (!o[key].is_string()) fail("field '" + where + key + "' must be a string", std::string("\"") + key + "\"");
    return o[key].get<std::string>();
  }

  std::vector<std::string> strs(const ojson& o, const char* key, const std::string& where) const {
    std::vector<std::string> out;
    if (!o.contains(key)) return out;
    if (!o[key].is_array()) fail("field '" + where + key + "' must be an array", std::string("\"") + key + "\"");
    for (const auto& v : o[key]) {
      if (!v.is_string()) fail("field '" + where + key + "' must hold strings", std::string("\"") + key + "\"");
      out.push_back(v.get<std::string>());
    }
    return out;
  }

  Bindings bindings(const ojson& o, const std::string& where) const {
    if (!o.is_object()) fail(where + " must be an object");
    Bindings b;
    for (const auto& [k, v] : o.items()) {
      if (!v.is_string()) fail("field '" + where + "." + k + "' must be a string", "\"" + k + "\"");
      b.emplace_back(k, v.get<std::string>());
    }
    return b;
  }

  void expr(const std::string& text, const std::string& field, const ParseOptions& opts = {}) const {
    try {
      parse(text, opts);
    } catch (const ParseError& e) {
      std::size_t at = std::min(e.offset(), text.size());
      std::size_t lo = at, hi = at;
      auto word = [](char ch) { return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_'; };
      while (lo > 0 && word(text[lo - 1])) --lo;
      while (hi < text.size() && word(text[hi])) ++hi;
      std::string token = text.substr(lo, hi - lo);
      std::size_t base = line_.find(text);
      std::size_t off = base == std::string_view::npos ? 0 : base + lo;
      throw CatalogError(field + ": " + e.what() + (token.empty() ? "" : " near '" + token + "'"), lineno_, off);
    }
  }

  CatalogEntry read(const ojson& j) const {
    only(j, {"id", "kind", "subalgebra", "invariants", "ansatz", "reduced", "solutions", "delta", "domain",
             "provenance"},
         "");
    CatalogEntry e;
    e.id = str(j, "id", "");
    e.kind = str(j, "kind", "");
    e.provenance = str(j, "provenance", "");
    e.domain = str(j, "domain", "", false);
    if (j.contains("subalgebra")) {
      const auto& s = j["subalgebra"];
      only(s, {"generators", "params"}, "subalgebra.");
      e.generators = strs(s, "generators", "subalgebra.");
      e.params = strs(s, "params", "subalgebra.");
      for (std::size_t i = 0; i < e.generators.size(); ++i) {
        try {
          parse_generator(e.generators[i]);
        } catch (const ParseError& err) {
          expr(e.generators[i], "subalgebra.generators[" + std::to_string(i) + "]", [] {
            ParseOptions o;
            for (int k = 1; k <= 7; ++k) o.extra_params.insert("X" + std::to_string(k));
            return o;
          }());
          fail("subalgebra.generators[" + std::to_string(i) + "]: " + err.what(), e.generators[i]);
        }
      }
    }
    auto popts = catalog_parse_options(e.params);
    e.invariants = strs(j, "invariants", "");
    for (std::size_t i = 0; i < e.invariants.size(); ++i)
      expr(e.invariants[i], "invariants[" + std::to_string(i) + "]", popts);
    if (j.contains("ansatz")) {
      const auto& a = j["ansatz"];
      only(a, {"bindings", "arbitrary", "unknowns"}, "ansatz.");
      CatalogAnsatz an;
      if (a.contains("bindings")) an.bindings = bindings(a["bindings"], "ansatz.bindings");
      an.arbitrary = strs(a, "arbitrary", "ansatz.");
      an.unknowns = strs(a, "unknowns", "ansatz.");
      for (const auto& [k, v] : an.bindings) {
        if (k != "a" && k != "b" && k != "c") fail("ansatz binding key must be a, b or c", "\"" + k + "\"");
        expr(v, "ansatz.bindings." + k);
      }
      for (const auto& u : an.unknowns) expr(u, "ansatz.unknowns");
      e.ansatz = an;
    }
    if (j.contains("reduced")) {
      const auto& r = j["reduced"];
      only(r, {"residuals", "consistency", "inequations", "families"}, "reduced.");
      CatalogReduced red;
      red.residuals = strs(r, "residuals", "reduced.");
      red.consistency = strs(r, "consistency", "reduced.");
      red.inequations = strs(r, "inequations", "reduced.");
      if (r.contains("families")) {
        if (!r["families"].is_array()) fail("field 'reduced.families' must be an array", "\"families\"");
        for (const auto& f : r["families"]) red.families.push_back(bindings(f, "reduced.families[]"));
      }
      for (const auto& t : red.residuals) expr(t, "reduced.residuals");
      for (const auto& t : red.consistency) expr(t, "reduced.consistency");
      for (const auto& t : red.inequations) expr(t, "reduced.inequations");
      for (const auto& f : red.families)
        for (const auto& [k, v] : f) {
          expr(k, "reduced.families key");
          expr(v, "reduced.families." + k);
        }
      e.reduced = red;
    }
    if (j.contains("solutions")) {
      if (!j["solutions"].is_array()) fail("field 'solutions' must be an array", "\"solutions\"");
      std::size_t i = 0;
      for (const auto& s : j["solutions"]) {
        std::string where = "solutions[" + std::to_string(i++) + "].";
        only(s, {"a", "b", "c", "params"}, where);
        CatalogSolution sol{str(s, "a", where), str(s, "b", where), str(s, "c", where), strs(s, "params", where)};
        auto o = catalog_parse_options(sol.params);
        expr(sol.a, where + "a", o);
        expr(sol.b, where + "b", o);
        expr(sol.c, where + "c", o);
        e.solutions.push_back(std::move(sol));
      }
    }
    if (j.contains("delta")) {
      if (!j["delta"].is_number_integer()) fail("field 'delta' must be an integer", "\"delta\"");
      e.delta = j["delta"].get<int>();
    }
    return e;
  }

 private:
  std::string_view line_;
  std::size_t lineno_;
};

}  // namespace detail

inline std::string dump_catalog(const std::vector<CatalogEntry>& entries) {
  std::string out;
  for (const auto& e : entries) out += detail::entry_json(e).dump() + "\n";
  return out;
}

inline std::vector<CatalogEntry> parse_catalog(std::string_view text) {
  std::vector<CatalogEntry> out;
  std::size_t lineno = 0, pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    detail::ojson j;
    try {
      j = detail::ojson::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw CatalogError(std::string("malformed JSON: ") + e.what(), lineno, e.byte > 0 ? e.byte - 1 : 0);
    }
    detail::EntryReader r(line, lineno);
    out.push_back(r.read(j));
  }
  return out;
}

inline void save_catalog(const std::vector<CatalogEntry>& entries, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << dump_catalog(entries);
}

inline std::vector<CatalogEntry> load_catalog(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot read " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_catalog(ss.str());
}

}  // namespace walker
