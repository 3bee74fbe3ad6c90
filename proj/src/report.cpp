#include "gaudin/report.hpp"

#include "gaudin/errors.hpp"
#include "gaudin/numerics.hpp"
#include "gaudin/params.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>

namespace gaudin {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::ill_conditioned: return "ill-conditioned";
  }
  return "fail";
}

Verdict judge(double measured, double tolerance, double condition) {
  if (measured <= tolerance) return Verdict::pass;
  if (condition > kIllConditioned) return Verdict::ill_conditioned;
  return Verdict::fail;
}

std::string inputs_digest(const std::string& description) { return hex64(fnv1a(description)); }

nlohmann::ordered_json complex_json(Complex c) {
  return nlohmann::ordered_json{{"re", c.real()}, {"im", c.imag()}};
}

void Report::append(const Report& other) {
  records_.insert(records_.end(), other.records_.begin(), other.records_.end());
}

bool Report::all_pass() const {
  return std::all_of(records_.begin(), records_.end(),
                     [](const CheckRecord& r) { return r.verdict != Verdict::fail; });
}

std::size_t Report::count(Verdict v) const {
  return static_cast<std::size_t>(std::count_if(records_.begin(), records_.end(),
                                                [v](const CheckRecord& r) { return r.verdict == v; }));
}

void Report::sort() {
  std::stable_sort(records_.begin(), records_.end(), [](const CheckRecord& a, const CheckRecord& b) {
    if (a.suite != b.suite) return a.suite < b.suite;
    return a.check_id < b.check_id;
  });
}

nlohmann::ordered_json Report::to_json(const CheckRecord& r) const {
  nlohmann::ordered_json j;
  j["suite"] = r.suite;
  j["check_id"] = r.check_id;
  j["inputs_digest"] = r.inputs_digest;
  // JSON has no infinity or NaN; those become null.
  if (std::isfinite(r.measured)) {
    j["measured"] = r.measured;
  } else {
    j["measured"] = nullptr;
  }
  j["tolerance"] = r.tolerance;
  j["verdict"] = to_string(r.verdict);
  j["seed"] = r.seed;
  j["params_hash"] = r.params_hash;
  j["detail"] = r.detail;
  if (r.wall_time_ms) j["wall_time_ms"] = *r.wall_time_ms;
  return j;
}

void Report::write_jsonl(std::ostream& out) const {
  for (const auto& r : records_) out << to_json(r).dump() << '\n';
}

void Report::append_to_file(const std::string& path) const {
  std::ofstream out(path, std::ios::app);
  if (!out) throw ConfigError("cannot open report file " + path);
  write_jsonl(out);
}

void Report::print_summary(std::ostream& out) const {
  for (const auto& r : records_) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%10.3e <= %9.2e", r.measured, r.tolerance);
    out << (r.verdict == Verdict::pass ? "  ok   " : r.verdict == Verdict::fail ? "  FAIL " : "  ILL  ")
        << buf << "  " << r.suite << '/' << r.check_id << '\n';
  }
  out << records_.size() << " checks: " << count(Verdict::pass) << " pass, "
      << count(Verdict::fail) << " fail, " << count(Verdict::ill_conditioned)
      << " ill-conditioned\n";
}

}  // namespace gaudin
