#pragma once

#include <chrono>
#include <cstdlib>
#include <string>

#include "coxlen/errors.hpp"

namespace coxlen {

/// Wall-clock guard for potentially long searches. Inactive by default;
/// the CLI arms one per command from the COXLEN_BUDGET_MS environment
/// variable. check() is cheap enough to call inside inner loops: it only
/// consults the clock every 1024 ticks.
class Deadline {
public:
  Deadline() = default;

  static Deadline after_ms(long ms) {
    Deadline d;
    d.active_ = true;
    d.end_ = std::chrono::steady_clock::now() + std::chrono::milliseconds(ms);
    return d;
  }

  /// Reads COXLEN_BUDGET_MS; unset, empty or non-positive means unlimited.
  static Deadline from_env() {
    const char* v = std::getenv("COXLEN_BUDGET_MS");
    if (v == nullptr || *v == '\0')
      return Deadline();
    char* end = nullptr;
    long ms = std::strtol(v, &end, 10);
    if (end == v || ms <= 0)
      return Deadline();
    return after_ms(ms);
  }

  bool active() const { return active_; }

  void check(const char* what) const {
    if (!active_)
      return;
    if ((++tick_ & 1023u) != 0)
      return;
    if (std::chrono::steady_clock::now() > end_)
      throw SearchBudgetExceeded(std::string("wall-clock budget exceeded during ") + what);
  }

private:
  std::chrono::steady_clock::time_point end_{};
  bool active_ = false;
  mutable unsigned tick_ = 0;
};

} // namespace coxlen
