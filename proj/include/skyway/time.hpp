#pragma once

#include <cmath>
#include <compare>
#include <cstdint>
#include <string>

namespace skyway {

// Fixed-point time in minutes. One tick is 1/kTicksPerMinute of a minute, so
// schedule arithmetic and payoff sums are exact integer math and FCFS
// tie-breaking does not depend on floating-point rounding.
class Minutes {
 public:
  static constexpr std::int64_t kTicksPerMinute = 100;  // 0.01 min resolution

  constexpr Minutes() = default;

  static constexpr Minutes from_ticks(std::int64_t ticks) { return Minutes(ticks); }

  // Rounds to the nearest tick.
  static Minutes from_minutes(double minutes) {
    return Minutes(std::llround(minutes * static_cast<double>(kTicksPerMinute)));
  }

  constexpr std::int64_t ticks() const { return ticks_; }

  // Value in minutes as a double (for display and statistics only).
  constexpr double count() const {
    return static_cast<double>(ticks_) / static_cast<double>(kTicksPerMinute);
  }

  constexpr auto operator<=>(const Minutes&) const = default;

  constexpr Minutes operator+(Minutes other) const { return Minutes(ticks_ + other.ticks_); }
  constexpr Minutes operator-(Minutes other) const { return Minutes(ticks_ - other.ticks_); }
  constexpr Minutes operator-() const { return Minutes(-ticks_); }

  Minutes& operator+=(Minutes other) {
    ticks_ += other.ticks_;
    return *this;
  }
  Minutes& operator-=(Minutes other) {
    ticks_ -= other.ticks_;
    return *this;
  }

  constexpr bool negative() const { return ticks_ < 0; }
  constexpr bool zero() const { return ticks_ == 0; }

 private:
  explicit constexpr Minutes(std::int64_t ticks) : ticks_(ticks) {}

  std::int64_t ticks_ = 0;
};

constexpr Minutes max(Minutes a, Minutes b) { return a < b ? b : a; }
constexpr Minutes min(Minutes a, Minutes b) { return b < a ? b : a; }

// Decimal rendering at the tick resolution, e.g. "24.00" or "-3.50".
std::string format_minutes(Minutes m);

}  // namespace skyway
