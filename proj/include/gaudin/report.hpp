#pragma once

// Verification records and their JSON-lines serialization.

#include "gaudin/tensor.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace gaudin {

enum class Verdict { pass, fail, ill_conditioned };

std::string to_string(Verdict v);

struct CheckRecord {
  std::string suite;
  std::string check_id;
  std::string inputs_digest;
  double measured = 0.0;
  double tolerance = 0.0;
  Verdict verdict = Verdict::fail;
  std::uint64_t seed = 0;
  std::string params_hash;
  nlohmann::ordered_json detail = nlohmann::ordered_json::object();
  std::optional<double> wall_time_ms;
};

// pass iff measured <= tolerance; a failing value whose determinant condition
// exceeds kIllConditioned is downgraded to ill_conditioned.
Verdict judge(double measured, double tolerance, double condition = 1.0);

// Digest of a textual description of a check's inputs.
std::string inputs_digest(const std::string& description);

nlohmann::ordered_json complex_json(Complex c);

class Report {
 public:
  void add(CheckRecord record) { records_.push_back(std::move(record)); }
  void append(const Report& other);

  const std::vector<CheckRecord>& records() const { return records_; }
  bool all_pass() const;
  std::size_t count(Verdict v) const;

  // Records ordered by (suite, check_id); insertion order breaks ties.
  void sort();

  nlohmann::ordered_json to_json(const CheckRecord& r) const;
  void write_jsonl(std::ostream& out) const;
  // Appends one line per record.
  void append_to_file(const std::string& path) const;

  // One line per record, for the terminal.
  void print_summary(std::ostream& out) const;

 private:
  std::vector<CheckRecord> records_;
};

}  // namespace gaudin
