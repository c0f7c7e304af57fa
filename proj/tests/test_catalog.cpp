#include <catch_amalgamated.hpp>

#include <filesystem>

#include "walker/catalog/builtin.hpp"
#include "walker/expr/render.hpp"

using namespace walker;

namespace {

std::size_t count_kind(const std::string& kind) {
  return std::count_if(builtin().begin(), builtin().end(), [&](const auto& e) { return e.kind == kind; });
}

void check_round_trip(const std::string& text, const std::vector<std::string>& params) {
  Expr e = parse(text, catalog_parse_options(params));
  INFO(text << " -> " << render(e));
  CHECK(parse(render(e), catalog_parse_options(params)) == e);
}

}  // namespace

TEST_CASE("builtin contents") {
  const auto& all = builtin();
  CHECK(all.size() >= 13 + 48 + 4 + 3 + 4 + 1);
  CHECK(count_kind("optimal-1d") == 13);
  CHECK(count_kind("optimal-2d") == 54);
  std::set<std::string> ids;
  for (const auto& e : all) {
    CHECK(ids.insert(e.id).second);
    CHECK_FALSE(e.provenance.empty());
  }
  const CatalogEntry* f2 = find_entry(all, "eq25.family2");
  REQUIRE(f2);
  REQUIRE(f2->solutions.size() == 1);
  SolutionTriple s = entry_solution(f2->solutions[0]);
  CHECK(is_zero(s.a - parse("c1*t + c2")).verdict == Verdict::ZeroSymbolic);
  CHECK(is_zero(s.b - parse("c1*c3^2*t + c5")).verdict == Verdict::ZeroSymbolic);
  CHECK(is_zero(s.c - parse("c3*(c1*t + c2) + c1*c4")).verdict == Verdict::ZeroSymbolic);

  const CatalogEntry* r3 = find_entry(all, "table1.row3");
  REQUIRE(r3);
  CHECK(is_zero(entry_solution(r3->solutions[0]).a - parse("4*(t + c1)/(c2*x + c3)^2")).verdict ==
        Verdict::ZeroSymbolic);
  for (auto id : {"a71.pipeline", "eq25.family1", "eq25.family3", "eq25.family4", "eq26.family1", "eq26.family2",
                  "eq26.family3", "table1.row1", "table1.row2", "table1.row4", "eq27", "thm31.X13", "thm32.A7_1",
                  "thm32.A2_12"})
    CHECK(find_entry(all, id));
  CHECK_FALSE(find_entry(all, "nope"));
}

TEST_CASE("every shipped expression round-trips through parse and render") {
  for (const auto& e : builtin()) {
    for (const auto& g : e.generators) CHECK(render_generator(parse_generator(render_generator(parse_generator(g)))) ==
                                             render_generator(parse_generator(g)));
    for (const auto& m : e.invariants) check_round_trip(m, e.params);
    for (const auto& s : e.solutions)
      for (const auto& t : {s.a, s.b, s.c}) check_round_trip(t, s.params);
    if (e.ansatz)
      for (const auto& [k, v] : e.ansatz->bindings) check_round_trip(v, {});
    if (e.reduced) {
      for (const auto& t : e.reduced->residuals) check_round_trip(t, {});
      for (const auto& t : e.reduced->consistency) check_round_trip(t, {});
      for (const auto& f : e.reduced->families)
        for (const auto& [k, v] : f) check_round_trip(v, {});
    }
  }
}

TEST_CASE("every shipped subalgebra closes") {
  for (const auto& e : builtin()) {
    if (e.generators.size() != 2) continue;
    INFO(e.id);
    ClosureResult r = subalgebra_closed(entry_subalgebra(e));
    CHECK(r.closed);
  }
}

TEST_CASE("save and load round trip") {
  std::string text = dump_catalog(builtin());
  auto back = parse_catalog(text);
  CHECK(back == builtin());
  CHECK(dump_catalog(back) == text);

  auto path = std::filesystem::temp_directory_path() / "walker_catalog_test.jsonl";
  save_catalog(builtin(), path.string());
  CHECK(load_catalog(path.string()) == builtin());
  std::filesystem::remove(path);

  CHECK(parse_catalog("").empty());
  CHECK(dump_catalog({}).empty());
  CHECK(parse_catalog("\n\n").empty());
}

TEST_CASE("schema violations") {
  std::string good = R"({"id":"x","kind":"pis","solutions":[{"a":"a_1","b":"0","c":"0","params":[]}],"provenance":"p"})";
  CHECK(parse_catalog(good).size() == 1);

  std::string bad_index = R"({"id":"x","kind":"pis","solutions":[{"a":"a_5","b":"0","c":"0","params":[]}],"provenance":"p"})";
  try {
    parse_catalog("\n" + bad_index);
    FAIL("expected a parse error");
  } catch (const CatalogError& e) {
    std::string msg = e.what();
    CHECK(msg.find("a_5") != std::string::npos);
    CHECK(msg.find("solutions[0].a") != std::string::npos);
    CHECK(e.line() == 2);
    CHECK(bad_index.substr(e.offset(), 3) == "a_5");
  }

  std::string unknown = R"({"id":"x","kind":"pis","colour":"red","provenance":"p"})";
  try {
    parse_catalog(unknown);
    FAIL("expected a schema error");
  } catch (const CatalogError& e) {
    CHECK(std::string(e.what()).find("colour") != std::string::npos);
    CHECK(e.line() == 1);
    CHECK(unknown.substr(e.offset(), 8) == "\"colour\"");
  }

  std::string nested = R"({"id":"x","kind":"pis","solutions":[{"a":"0","b":"0","c":"0","d":"0"}],"provenance":"p"})";
  CHECK_THROWS_AS(parse_catalog(nested), CatalogError);
  CHECK_THROWS_AS(parse_catalog(R"({"id":"x","kind":"pis"})"), CatalogError);
  CHECK_THROWS_AS(parse_catalog(R"({"id":"x",)"), CatalogError);
  CHECK_THROWS_AS(parse_catalog(R"({"id":"x","kind":"k","provenance":"p","subalgebra":{"generators":["X8"]}})"),
                  CatalogError);
  CHECK_THROWS_AS(parse_catalog(R"({"id":"x","kind":"k","provenance":"p","delta":"one"})"), CatalogError);
}
