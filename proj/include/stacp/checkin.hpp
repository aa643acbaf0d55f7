#ifndef STACP_CHECKIN_HPP
#define STACP_CHECKIN_HPP

#include <cstdint>
#include <string>

namespace stacp {

// One user-POI visit event. Timestamps are UTC epoch seconds; inputs with a
// zone offset are normalized at parse time, inputs without one are taken as
// written. No geolocation-based timezone inference is attempted.
struct CheckIn {
  std::string user;
  std::string poi;
  std::int64_t timestamp = 0;  // seconds since Unix epoch
  double lat = 0.0;
  double lon = 0.0;

  friend bool operator==(const CheckIn&, const CheckIn&) = default;
};

// Broken-down UTC time, enough for the state policies.
struct CivilTime {
  int year, month, day;
  int hour, minute, second;
  int weekday;  // 0 = Monday .. 6 = Sunday
};

CivilTime civil_from_epoch(std::int64_t ts);
std::int64_t epoch_from_civil(int year, int month, int day, int hour, int minute, int second);

// Default two temporal states. The allocation and factorization layers are
// written against state indices, so swapping in another two-state partition
// (weekday/weekend) only changes the policy.
enum class TemporalState : int { kWorking = 0, kLeisure = 1 };

inline const char* state_name(int state) {
  return state == 0 ? "working" : "leisure";
}

// Total function from instants to states.
struct StatePolicy {
  enum class Kind { kWorkingLeisure, kWeekdayWeekend };
  Kind kind = Kind::kWorkingLeisure;
  // [work_begin_hour, work_end_hour) on Mon-Fri counts as working time
  int work_begin_hour = 8;
  int work_end_hour = 18;

  int n_states() const { return 2; }

  int assign(std::int64_t timestamp) const {
    CivilTime t = civil_from_epoch(timestamp);
    bool weekday = t.weekday < 5;
    if (kind == Kind::kWeekdayWeekend)
      return weekday ? 0 : 1;
    bool working = weekday && t.hour >= work_begin_hour && t.hour < work_end_hour;
    return working ? 0 : 1;
  }
};

inline TemporalState assign_temporal_state(const CheckIn& c, const StatePolicy& policy) {
  return static_cast<TemporalState>(policy.assign(c.timestamp));
}

}  // namespace stacp

#endif
