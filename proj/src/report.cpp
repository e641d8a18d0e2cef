#include "fprod/report.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <mutex>

namespace fprod {

bool Report::all_pass() const {
  return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.verdict; });
}

void Report::append(Report other) {
  for (auto& r : other.results) results.push_back(std::move(r));
}

Report run_tasks_serial(const std::vector<CheckTask>& tasks) {
  Report out;
  out.results.reserve(tasks.size());
  for (const auto& t : tasks) out.results.push_back(t());
  return out;
}

Report run_tasks(const std::vector<CheckTask>& tasks) {
  Report out;
  out.results.resize(tasks.size());
  std::exception_ptr error;
  std::mutex error_mutex;
  const auto n = static_cast<std::ptrdiff_t>(tasks.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      out.results[static_cast<std::size_t>(i)] = tasks[static_cast<std::size_t>(i)]();
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return out;
}

CheckResult timed(const std::function<CheckResult()>& body) {
  const auto start = std::chrono::steady_clock::now();
  CheckResult r = body();
  r.wall_time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

nlohmann::json to_json(const CheckResult& r, bool include_timing) {
  nlohmann::json j = {{"item", r.item},
                      {"params", r.params},
                      {"check", r.check},
                      {"verdict", r.verdict},
                      {"certificate", r.certificate ? to_json(*r.certificate) : nlohmann::json(nullptr)},
                      {"precision", r.precision}};
  if (include_timing) j["wall_time_ms"] = r.wall_time_ms;
  return j;
}

nlohmann::json to_json(const Report& r, bool include_timing) {
  nlohmann::json results = nlohmann::json::array();
  for (const auto& c : r.results) results.push_back(to_json(c, include_timing));
  return {{"schema", kReportSchema}, {"all_pass", r.all_pass()}, {"results", results}};
}

}  // namespace fprod
