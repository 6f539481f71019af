#include "imrel/history.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

namespace imrel {

namespace {

struct RawEvents {
  std::vector<double> maintenances;
  std::vector<double> failures;
  std::vector<double> censors;
};

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

}  // namespace

ComponentHistory make_history(std::string unit_id,
                              std::vector<double> maintenance_times,
                              const std::vector<double>& failure_times,
                              double censor_time) {
  ComponentHistory h;
  h.unit_id = std::move(unit_id);
  h.maintenance_times = std::move(maintenance_times);
  h.censor_time = censor_time;
  for (std::size_t i = 0; i < h.maintenance_times.size(); ++i) {
    if (i > 0 && !(h.maintenance_times[i] > h.maintenance_times[i - 1]))
      throw NonMonotonicTimes("maintenance times of unit " + h.unit_id +
                              " are not strictly increasing");
    if (!(h.maintenance_times[i] < censor_time))
      throw NonMonotonicTimes("maintenance at or after censor time for unit " + h.unit_id);
  }
  h.failures_by_period.assign(h.maintenance_times.size() + 1, {});
  for (double t : failure_times) {
    if (t > censor_time)
      throw NonMonotonicTimes("failure after censor time for unit " + h.unit_id);
    // first period whose closing bound >= t: failure at tau_m closes period m
    auto it = std::lower_bound(h.maintenance_times.begin(), h.maintenance_times.end(), t);
    h.failures_by_period[it - h.maintenance_times.begin()].push_back(t);
  }
  for (auto& f : h.failures_by_period) std::sort(f.begin(), f.end());
  return h;
}

FleetHistory parse_event_log(const std::string& csv_text) {
  std::istringstream in(csv_text);
  std::string line;
  long line_no = 0;

  if (!std::getline(in, line)) throw ParseError("empty input");
  ++line_no;
  {
    auto header = split_csv_line(line);
    const std::vector<std::string> expect = {"unit_id", "component_id", "event_type",
                                             "time_hours"};
    bool ok = header.size() == 4;
    for (std::size_t i = 0; ok && i < 4; ++i) ok = trim(header[i]) == expect[i];
    if (!ok)
      throw ParseError("expected header unit_id,component_id,event_type,time_hours", line_no);
  }

  std::map<std::string, std::map<std::string, RawEvents>> raw;  // component -> unit
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    auto fields = split_csv_line(line);
    if (fields.size() != 4) throw ParseError("expected 4 comma-separated fields", line_no);
    const std::string unit = trim(fields[0]);
    const std::string comp = trim(fields[1]);
    const std::string type = trim(fields[2]);
    const std::string tstr = trim(fields[3]);
    if (unit.empty() || comp.empty()) throw ParseError("empty identifier", line_no);

    double t = 0.0;
    auto [p, ec] = std::from_chars(tstr.data(), tstr.data() + tstr.size(), t);
    if (ec != std::errc() || p != tstr.data() + tstr.size() || !std::isfinite(t))
      throw ParseError("unparseable time '" + tstr + "'", line_no);
    if (t < 0.0) throw NegativeTime("negative time " + tstr, line_no);

    RawEvents& ev = raw[comp][unit];
    if (type == "failure") {
      ev.failures.push_back(t);
    } else if (type == "maintenance") {
      ev.maintenances.push_back(t);
    } else if (type == "censor") {
      ev.censors.push_back(t);
    } else {
      throw UnknownEventType("unknown event type '" + type + "'", line_no);
    }
  }
  if (raw.empty()) throw ParseError("no event rows");

  FleetHistory fleet;
  for (auto& [comp, units] : raw) {
    auto& list = fleet.components[comp];
    for (auto& [unit, ev] : units) {  // std::map: unit ids already sorted
      if (ev.censors.empty())
        throw MissingCensor("no censor record for unit " + unit + ", component " + comp);
      if (ev.censors.size() > 1)
        throw DuplicateCensor("multiple censor records for unit " + unit + ", component " +
                              comp);
      std::sort(ev.maintenances.begin(), ev.maintenances.end());
      for (std::size_t i = 1; i < ev.maintenances.size(); ++i)
        if (ev.maintenances[i] == ev.maintenances[i - 1])
          throw NonMonotonicTimes("duplicate maintenance time for unit " + unit +
                                  ", component " + comp);
      list.push_back(make_history(unit, std::move(ev.maintenances), ev.failures,
                                  ev.censors.front()));
    }
  }
  return fleet;
}

namespace {

void append_time(std::string& out, double t) {
  char buf[32];
  auto [p, ec] = std::to_chars(buf, buf + sizeof buf, t);
  out.append(buf, p);
}

void append_row(std::string& out, const std::string& unit, const std::string& comp,
                const char* type, double t) {
  out += unit;
  out += ',';
  out += comp;
  out += ',';
  out += type;
  out += ',';
  append_time(out, t);
  out += '\n';
}

}  // namespace

std::string to_csv(const FleetHistory& fleet) {
  std::string out = "unit_id,component_id,event_type,time_hours\n";
  for (const auto& [comp, units] : fleet.components) {
    for (const ComponentHistory& h : units) {
      for (int m = 1; m <= h.n_periods(); ++m) {
        for (double t : h.failures_by_period[m - 1])
          append_row(out, h.unit_id, comp, "failure", t);
        if (m < h.n_periods())
          append_row(out, h.unit_id, comp, "maintenance", h.maintenance_times[m - 1]);
      }
      append_row(out, h.unit_id, comp, "censor", h.censor_time);
    }
  }
  return out;
}

double time_unit_convert(double value, TimeUnit from, TimeUnit to) {
  if (value < 0.0) throw Error("time values must be nonnegative");
  auto hours_per = [](TimeUnit u) {
    switch (u) {
      case TimeUnit::Days: return 24.0;
      case TimeUnit::Years: return 8760.0;
      default: return 1.0;
    }
  };
  return value * hours_per(from) / hours_per(to);
}

bool parse_time_unit(const std::string& name, TimeUnit& out) {
  if (name == "days") out = TimeUnit::Days;
  else if (name == "hours") out = TimeUnit::Hours;
  else if (name == "years") out = TimeUnit::Years;
  else return false;
  return true;
}

}  // namespace imrel
