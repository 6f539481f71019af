#pragma once

#include <map>
#include <string>
#include <vector>

#include "imrel/errors.hpp"

namespace imrel {

enum class EventType { Failure, Maintenance, Censor };

struct EventRecord {
  std::string unit_id;
  std::string component_id;
  EventType event_type;
  double time = 0.0;  // hours since unit start
};

// Observation window of one component on one unit: maintenance epochs
// tau_1 < ... < tau_K < censor_time partition (0, censor_time] into K+1
// periods; failures_by_period[m] holds the failure times of period m+1,
// each in (tau_m, tau_{m+1}] (tau_0 = 0, last bound = censor_time).
// A failure at exactly tau_m belongs to the period that maintenance closes.
struct ComponentHistory {
  std::string unit_id;
  std::vector<double> maintenance_times;
  std::vector<std::vector<double>> failures_by_period;  // size K+1
  double censor_time = 0.0;

  int n_periods() const { return static_cast<int>(maintenance_times.size()) + 1; }
  int n_failures() const {
    int n = 0;
    for (const auto& f : failures_by_period) n += static_cast<int>(f.size());
    return n;
  }
  // Start/end of 1-based period m.
  double period_start(int m) const { return m == 1 ? 0.0 : maintenance_times[m - 2]; }
  double period_end(int m) const {
    return m == n_periods() ? censor_time : maintenance_times[m - 1];
  }

  bool operator==(const ComponentHistory&) const = default;
};

struct FleetHistory {
  // component id -> one history per unit (sorted by unit id)
  std::map<std::string, std::vector<ComponentHistory>> components;

  bool operator==(const FleetHistory&) const = default;
};

// Parse a CSV event log (header unit_id,component_id,event_type,time_hours)
// into validated per-(unit,component) histories. Throws ParseError kinds on
// malformed input: MissingCensor, DuplicateCensor, NonMonotonicTimes,
// UnknownEventType, NegativeTime.
FleetHistory parse_event_log(const std::string& csv_text);

// Inverse of parse_event_log; parse(to_csv(h)) == h. Rows are ordered by
// component id, unit id, time, with failures before a same-time maintenance.
std::string to_csv(const FleetHistory& fleet);

enum class TimeUnit { Days, Hours, Years };
// Exact scaling through hours (24 h/day, 8760 h/year).
double time_unit_convert(double value, TimeUnit from, TimeUnit to);
bool parse_time_unit(const std::string& name, TimeUnit& out);

// Validate and assemble one history from raw event times (used by the parser
// and the simulator). Failure times are bucketed by the boundary rule above.
ComponentHistory make_history(std::string unit_id,
                              std::vector<double> maintenance_times,
                              const std::vector<double>& failure_times,
                              double censor_time);

}  // namespace imrel
