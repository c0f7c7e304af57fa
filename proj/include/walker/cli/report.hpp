#pragma once

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "json.hpp"
#include "walker/expr/eval.hpp"

namespace walker {

using ojson = nlohmann::ordered_json;

struct CheckRecord {
  std::string id;
  bool pass = false;
  std::string verdict;  // PASS / FAIL, or a descriptive verdict for report-only records
  std::string detail;
  ojson witness;  // null when absent
  ojson data;     // extra structured fields, null when absent
  double seconds = 0;
};

inline ojson point_json(const NumericPoint& p) {
  ojson o = ojson::object();
  for (const auto& [k, v] : p) o[k] = v;
  return o;
}

inline std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

struct Report {
  std::string command;
  std::uint64_t seed = 42;
  std::vector<CheckRecord> checks;
  std::vector<std::string> notes;

  void add(CheckRecord r) { checks.push_back(std::move(r)); }

  std::size_t failed() const {
    std::size_t n = 0;
    for (const auto& c : checks) n += c.pass ? 0 : 1;
    return n;
  }
  bool ok() const { return failed() == 0; }

  // Timing is left out so two runs with the same seed give identical bytes.
  ojson to_json() const {
    ojson j;
    j["command"] = command;
    j["seed"] = seed;
    ojson arr = ojson::array();
    for (const auto& c : checks) {
      ojson r;
      r["id"] = c.id;
      r["verdict"] = c.verdict;
      r["pass"] = c.pass;
      r["detail"] = c.detail;
      if (!c.witness.is_null()) r["witness"] = c.witness;
      if (!c.data.is_null()) r["data"] = c.data;
      arr.push_back(std::move(r));
    }
    j["checks"] = std::move(arr);
    if (!notes.empty()) j["notes"] = notes;
    j["summary"] = {{"total", checks.size()}, {"passed", checks.size() - failed()}, {"failed", failed()}};
    return j;
  }

  std::string to_text() const {
    std::string out;
    for (const auto& c : checks) {
      out += (c.pass ? "PASS  " : "FAIL  ") + c.id;
      if (c.verdict != "PASS" && c.verdict != "FAIL") out += "  [" + c.verdict + "]";
      if (!c.detail.empty()) out += "  " + c.detail;
      if (c.seconds > 0) out += "  (" + format_double(c.seconds) + " s)";
      out += "\n";
      if (!c.witness.is_null()) out += "      witness: " + c.witness.dump() + "\n";
    }
    for (const auto& n : notes) out += "note: " + n + "\n";
    out += std::to_string(checks.size() - failed()) + "/" + std::to_string(checks.size()) + " checks passed\n";
    return out;
  }
};

// Runs f, timing it into the returned record.
template <class F>
CheckRecord timed(F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  CheckRecord r = f();
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

}  // namespace walker
