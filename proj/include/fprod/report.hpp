#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "fprod/divcong.hpp"

namespace fprod {

// One verified instance. `check` names which part of the argument was tested
// (the congruence itself, a witness integrality, a coefficientwise test...).
struct CheckResult {
  std::string item;
  nlohmann::json params = nlohmann::json::object();
  std::string check;
  bool verdict = false;
  std::optional<CongruenceCertificate> certificate;
  std::size_t precision = 0;
  double wall_time_ms = 0.0;
};

struct Report {
  std::vector<CheckResult> results;

  bool all_pass() const;
  void append(Report other);
};

using CheckTask = std::function<CheckResult()>;

// Runs tasks and stores result i at index i. The OpenMP version distributes
// tasks over threads; the serial version is the reference ordering. Both
// rethrow the first exception raised by any task.
Report run_tasks(const std::vector<CheckTask>& tasks);
Report run_tasks_serial(const std::vector<CheckTask>& tasks);

// Wraps `body` with a wall-clock timer.
CheckResult timed(const std::function<CheckResult()>& body);

inline constexpr int kReportSchema = 1;

nlohmann::json to_json(const CheckResult& r, bool include_timing = true);
nlohmann::json to_json(const Report& r, bool include_timing = true);

}  // namespace fprod
