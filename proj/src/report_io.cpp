#include <charconv>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "gsc/verify.hpp"
#include "json.hpp"

namespace gsc {
namespace {

using nlohmann::ordered_json;

// Double rounded to 15 significant digits; nlohmann prints the shortest
// round-trip text for it, which is then the 15-digit form.
double round15(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 15);
  double out = 0.0;
  std::from_chars(buf, res.ptr, out);
  return out;
}

ordered_json set_json(const std::vector<std::string>& forms) {
  ordered_json arr = ordered_json::array();
  for (const auto& f : forms) arr.push_back(f);
  return arr;
}

ordered_json to_json(const VerificationReport& r, bool include_runtime) {
  ordered_json j;
  j["theorem"] = r.theorem;
  j["n"] = r.n;
  if (r.delta) {
    j["delta"] = *r.delta;
  } else {
    j["delta"] = "all";
  }
  j["alpha"] = round15(r.alpha);
  j["class"] = to_string(r.graph_class);
  j["status"] = to_string(r.status);
  if (!r.note.empty()) j["note"] = r.note;
  if (r.status == ReportStatus::kRefused) {
    if (include_runtime) j["runtime_ms"] = r.runtime_ms;
    return j;
  }
  if (r.regime) j["regime"] = to_string(*r.regime);
  j["brute_max"] = round15(r.brute_max);
  j["bound"] = round15(r.bound);
  j["relative_gap"] = round15(r.relative_gap);
  j["extremal_set"] = set_json(r.extremal_set);
  j["expected_set"] = set_json(r.expected_set);
  j["bound_ok"] = r.bound_ok;
  j["characterization_ok"] = r.characterization_ok;
  j["graph_count"] = r.graph_count;
  if (r.k_expected) {
    j["k_expected"] = *r.k_expected;
    j["k_values"] = r.k_values;
    j["k_ok"] = r.k_ok;
  }
  if (r.theorem == 3) {
    if (r.second_max) j["second_max"] = round15(*r.second_max);
    if (r.second_bound) j["second_bound"] = round15(*r.second_bound);
    j["second_extremal_set"] = set_json(r.second_extremal_set);
    j["second_expected_set"] = set_json(r.second_expected_set);
  }
  if (!r.witnesses.empty()) j["witnesses"] = set_json(r.witnesses);
  if (include_runtime) j["runtime_ms"] = r.runtime_ms;
  return j;
}

std::string delta_text(const VerificationReport& r) { return r.delta ? std::to_string(*r.delta) : "all"; }

}  // namespace

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, round15(x));
  return std::string(buf, res.ptr);
}

void write_jsonl(std::ostream& out, const std::vector<VerificationReport>& reports, bool include_runtime) {
  for (const auto& r : reports) out << to_json(r, include_runtime).dump() << '\n';
}

void write_csv(std::ostream& out, const std::vector<VerificationReport>& reports) {
  out << "n,delta,alpha,class,brute_max,bound,gap,n_extremal,characterization_ok\n";
  for (const auto& r : reports) {
    out << r.n << ',' << delta_text(r) << ',' << format_number(r.alpha) << ',' << to_string(r.graph_class) << ',';
    if (r.status == ReportStatus::kRefused) {
      out << ",,,,\n";
      continue;
    }
    out << format_number(r.brute_max) << ',' << format_number(r.bound) << ',' << format_number(r.relative_gap) << ','
        << r.extremal_set.size() << ',' << (r.characterization_ok ? "true" : "false") << '\n';
  }
}

void write_table(std::ostream& out, const std::vector<VerificationReport>& reports) {
  auto cell = [&](const std::string& s, int w) { out << std::left << std::setw(w) << s; };
  cell("thm", 4);
  cell("n", 4);
  cell("delta", 6);
  cell("alpha", 10);
  cell("status", 9);
  cell("brute_max", 19);
  cell("bound", 19);
  cell("#ext", 6);
  cell("#graphs", 8);
  out << "note\n";
  for (const auto& r : reports) {
    cell(std::to_string(r.theorem), 4);
    cell(std::to_string(r.n), 4);
    cell(delta_text(r), 6);
    cell(format_number(r.alpha), 10);
    cell(to_string(r.status), 9);
    const bool has_values = r.status != ReportStatus::kRefused;
    cell(has_values ? format_number(r.brute_max) : "-", 19);
    cell(has_values ? format_number(r.bound) : "-", 19);
    cell(has_values ? std::to_string(r.extremal_set.size()) : "-", 6);
    cell(has_values ? std::to_string(r.graph_count) : "-", 8);
    out << r.note << '\n';
  }
}

}  // namespace gsc
