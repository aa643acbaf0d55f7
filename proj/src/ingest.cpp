#include "stacp/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "stacp/errors.hpp"

namespace stacp {

namespace {

// days-from-civil / civil-from-days (proleptic Gregorian, epoch 1970-01-01)
std::int64_t days_from_civil(int y, int m, int d) {
  y -= m <= 2;
  const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
  const unsigned yoe = static_cast<unsigned>(y - era * 400);
  const unsigned doy = static_cast<unsigned>((153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1);
  const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
  return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

}  // namespace

CivilTime civil_from_epoch(std::int64_t ts) {
  std::int64_t days = ts / 86400;
  std::int64_t rem = ts % 86400;
  if (rem < 0) {
    rem += 86400;
    --days;
  }
  CivilTime out{};
  out.weekday = static_cast<int>(((days % 7) + 7 + 3) % 7);  // 1970-01-01 was a Thursday
  out.hour = static_cast<int>(rem / 3600);
  out.minute = static_cast<int>((rem % 3600) / 60);
  out.second = static_cast<int>(rem % 60);

  days += 719468;
  const std::int64_t era = (days >= 0 ? days : days - 146096) / 146097;
  const unsigned doe = static_cast<unsigned>(days - era * 146097);
  const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
  const std::int64_t y = static_cast<std::int64_t>(yoe) + era * 400;
  const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
  const unsigned mp = (5 * doy + 2) / 153;
  out.day = static_cast<int>(doy - (153 * mp + 2) / 5 + 1);
  out.month = static_cast<int>(mp < 10 ? mp + 3 : mp - 9);
  out.year = static_cast<int>(y + (out.month <= 2));
  return out;
}

std::int64_t epoch_from_civil(int year, int month, int day, int hour, int minute, int second) {
  return days_from_civil(year, month, day) * 86400 + hour * 3600 + minute * 60 + second;
}

DatasetProfile DatasetProfile::named(const std::string& name) {
  DatasetProfile p;
  p.name = name;
  if (name == "custom" || name == "foursquare") {
    // canonical order
  } else if (name == "gowalla") {
    p.col_user = 0;
    p.col_time = 1;
    p.col_lat = 2;
    p.col_lon = 3;
    p.col_poi = 4;
  } else {
    throw ConfigError("unknown dataset profile '" + name + "'");
  }
  return p;
}

DatasetProfile DatasetProfile::custom(const std::string& order) {
  DatasetProfile p;
  p.name = "custom";
  p.col_user = p.col_poi = p.col_time = p.col_lat = p.col_lon = -1;
  std::stringstream ss(order);
  std::string tok;
  int col = 0;
  while (std::getline(ss, tok, ',')) {
    if (tok == "user") p.col_user = col;
    else if (tok == "poi") p.col_poi = col;
    else if (tok == "time") p.col_time = col;
    else if (tok == "lat") p.col_lat = col;
    else if (tok == "lon") p.col_lon = col;
    else if (tok == "skip" || tok.empty()) { /* ignored column */ }
    else throw ConfigError("unknown column token '" + tok + "' in dataset.columns");
    ++col;
  }
  if (p.col_user < 0 || p.col_poi < 0 || p.col_time < 0 || p.col_lat < 0 || p.col_lon < 0)
    throw ConfigError("dataset.columns must name user, poi, time, lat and lon");
  return p;
}

int DatasetProfile::min_columns() const {
  return 1 + std::max({col_user, col_poi, col_time, col_lat, col_lon});
}

namespace {

std::vector<std::string> split_fields(const std::string& line) {
  const char delim = line.find('\t') != std::string::npos ? '\t' : ',';
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = line.find(delim, start);
    std::string f = line.substr(start, pos == std::string::npos ? pos : pos - start);
    while (!f.empty() && (f.back() == '\r' || f.back() == ' ')) f.pop_back();
    std::size_t lead = f.find_first_not_of(' ');
    out.push_back(lead == std::string::npos ? std::string() : f.substr(lead));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

bool parse_double(const std::string& s, double& out) {
  if (s.empty()) return false;
  const char* begin = s.data();
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(begin, end, out);
  return ec == std::errc() && ptr == end && std::isfinite(out);
}

bool parse_int(const std::string& s, int& out) {
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

// epoch seconds (integral or with a fractional tail) or ISO-8601
// YYYY-MM-DD[T ]HH:MM:SS[.frac][Z|+HH:MM|-HH:MM|+HHMM|-HHMM]
bool parse_timestamp(const std::string& s, std::int64_t& out) {
  if (s.empty()) return false;
  bool numeric = true;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.' ||
        (i == 0 && (c == '-' || c == '+')))
      continue;
    numeric = false;
    break;
  }
  if (numeric && s.find('.') == std::string::npos) {
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && ptr == s.data() + s.size();
  }
  if (numeric) {
    double v;
    if (!parse_double(s, v)) return false;
    out = static_cast<std::int64_t>(std::floor(v));
    return true;
  }

  int year, month, day, hour, minute, second;
  int n = 0;
  if (std::sscanf(s.c_str(), "%4d-%2d-%2d%*1[T ]%2d:%2d:%2d%n", &year, &month, &day, &hour,
                  &minute, &second, &n) != 6)
    return false;
  if (month < 1 || month > 12 || day < 1 || day > 31 || hour > 23 || minute > 59 || second > 60)
    return false;
  std::int64_t ts = epoch_from_civil(year, month, day, hour, minute, second);

  std::string rest = s.substr(static_cast<std::size_t>(n));
  if (!rest.empty() && rest[0] == '.') {  // drop fractional seconds
    std::size_t i = 1;
    while (i < rest.size() && std::isdigit(static_cast<unsigned char>(rest[i]))) ++i;
    rest = rest.substr(i);
  }
  if (!rest.empty()) {
    if (rest == "Z" || rest == "z") {
      // already UTC
    } else if (rest[0] == '+' || rest[0] == '-') {
      int oh = 0, om = 0;
      if (std::sscanf(rest.c_str() + 1, "%2d:%2d", &oh, &om) < 1 &&
          std::sscanf(rest.c_str() + 1, "%2d%2d", &oh, &om) < 1)
        return false;
      if (rest.size() == 5 && rest.find(':') == std::string::npos)
        std::sscanf(rest.c_str() + 1, "%2d%2d", &oh, &om);
      std::int64_t off = oh * 3600 + om * 60;
      ts += (rest[0] == '+') ? -off : off;
    } else {
      return false;
    }
  }
  out = ts;
  return true;
}

}  // namespace

ParseResult parse_checkins(const std::string& path, const DatasetProfile& profile) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open check-in file '" + path + "'");

  ParseResult result;
  const int need = profile.min_columns();
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line == "\r") continue;
    auto fields = split_fields(line);
    CheckIn c;
    bool ok = static_cast<int>(fields.size()) >= need;
    if (ok) {
      c.user = fields[static_cast<std::size_t>(profile.col_user)];
      c.poi = fields[static_cast<std::size_t>(profile.col_poi)];
      ok = !c.user.empty() && !c.poi.empty() &&
           parse_timestamp(fields[static_cast<std::size_t>(profile.col_time)], c.timestamp) &&
           parse_double(fields[static_cast<std::size_t>(profile.col_lat)], c.lat) &&
           parse_double(fields[static_cast<std::size_t>(profile.col_lon)], c.lon) &&
           c.lat >= -90.0 && c.lat <= 90.0 && c.lon >= -180.0 && c.lon <= 180.0;
    }
    if (!ok) {
      ++result.rejected;
      if (result.reject_samples.size() < 5) result.reject_samples.push_back(line);
      continue;
    }
    result.checkins.push_back(std::move(c));
  }
  if (result.checkins.empty())
    throw DataError("no valid check-in rows in '" + path + "' (" +
                    std::to_string(result.rejected) + " rejected)");
  return result;
}

void write_checkins(std::ostream& out, const std::vector<CheckIn>& checkins) {
  char buf[128];
  for (const CheckIn& c : checkins) {
    std::snprintf(buf, sizeof(buf), "%lld\t%.17g\t%.17g", static_cast<long long>(c.timestamp),
                  c.lat, c.lon);
    out << c.user << '\t' << c.poi << '\t' << buf << '\n';
  }
}

void write_checkins_file(const std::string& path, const std::vector<CheckIn>& checkins) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot write '" + path + "'");
  write_checkins(out, checkins);
}

DatasetSplit chronological_split(const std::vector<CheckIn>& checkins,
                                 const StatePolicy& policy, const SplitRatios& ratios) {
  if (checkins.empty()) throw DataError("chronological split: no check-ins");
  const double rsum = ratios.train + ratios.validation + ratios.test;
  if (ratios.train < 0 || ratios.validation < 0 || ratios.test < 0 ||
      std::abs(rsum - 1.0) > 1e-9)
    throw ConfigError("split ratios must be nonnegative and sum to 1");

  DatasetSplit split;
  split.n_states = policy.n_states();

  // catalogs over the full dataset, in first-appearance order
  std::vector<std::vector<Event>> events;
  for (const CheckIn& c : checkins) {
    const int u = split.users.add(c.user);
    const int p = split.pois.add(c.poi);
    if (static_cast<std::size_t>(p) >= split.poi_coords.size())
      split.poi_coords.push_back({c.lat, c.lon});
    if (static_cast<std::size_t>(u) >= events.size()) events.emplace_back();
    events[static_cast<std::size_t>(u)].push_back(
        Event{p, c.timestamp, GeoPoint{c.lat, c.lon}, policy.assign(c.timestamp)});
  }

  const int m = split.users.size();
  split.train.resize(static_cast<std::size_t>(m));
  split.validation.resize(static_cast<std::size_t>(m));
  split.test.resize(static_cast<std::size_t>(m));
  split.flagged.assign(static_cast<std::size_t>(m), 0);

  for (int u = 0; u < m; ++u) {
    auto& ev = events[static_cast<std::size_t>(u)];
    // ties in timestamp keep stable input order
    std::stable_sort(ev.begin(), ev.end(),
                     [](const Event& a, const Event& b) { return a.timestamp < b.timestamp; });
    const std::size_t n = ev.size();
    std::size_t n_train, n_test;
    if (n < 3) {
      split.flagged[static_cast<std::size_t>(u)] = 1;
      n_train = n == 1 ? 1 : 1;
      n_test = n == 1 ? 0 : 1;
    } else {
      n_train = static_cast<std::size_t>(std::floor(ratios.train * static_cast<double>(n)));
      n_test = static_cast<std::size_t>(std::floor(ratios.test * static_cast<double>(n)));
    }
    auto& tr = split.train[static_cast<std::size_t>(u)];
    auto& va = split.validation[static_cast<std::size_t>(u)];
    auto& te = split.test[static_cast<std::size_t>(u)];
    tr.assign(ev.begin(), ev.begin() + static_cast<std::ptrdiff_t>(n_train));
    va.assign(ev.begin() + static_cast<std::ptrdiff_t>(n_train),
              ev.end() - static_cast<std::ptrdiff_t>(n_test));
    te.assign(ev.end() - static_cast<std::ptrdiff_t>(n_test), ev.end());
  }
  return split;
}

InteractionMatrix build_matrix(const std::vector<std::vector<Event>>& part, int n_users,
                               int n_pois, std::optional<int> state_filter) {
  if (static_cast<int>(part.size()) != n_users)
    throw DataError("matrix build: collection does not match the user catalog");
  InteractionMatrix r(n_users, n_pois);
  for (int u = 0; u < n_users; ++u) {
    std::vector<std::pair<int, std::int64_t>> counts;
    for (const Event& e : part[static_cast<std::size_t>(u)]) {
      if (e.poi < 0 || e.poi >= n_pois)
        throw DataError("matrix build: POI index outside the catalog");
      if (state_filter && e.state != *state_filter) continue;
      counts.emplace_back(e.poi, 1);
    }
    std::sort(counts.begin(), counts.end());
    auto& row = r.rows[static_cast<std::size_t>(u)];
    for (const auto& [poi, one] : counts) {
      if (!row.empty() && row.back().first == poi)
        row.back().second += one;
      else
        row.emplace_back(poi, one);
    }
  }
  return r;
}

namespace {

std::vector<CheckIn> to_checkins(const DatasetSplit& split,
                                 const std::vector<std::vector<Event>>& part) {
  std::vector<CheckIn> out;
  for (int u = 0; u < split.n_users(); ++u) {
    for (const Event& e : part[static_cast<std::size_t>(u)]) {
      out.push_back(CheckIn{split.users.ids[static_cast<std::size_t>(u)],
                            split.pois.ids[static_cast<std::size_t>(e.poi)], e.timestamp,
                            e.pos.lat, e.pos.lon});
    }
  }
  return out;
}

}  // namespace

void write_split(const DatasetSplit& split, const std::string& out_dir) {
  namespace fs = std::filesystem;
  fs::create_directories(out_dir);
  write_checkins_file(out_dir + "/train.checkins", to_checkins(split, split.train));
  write_checkins_file(out_dir + "/validation.checkins", to_checkins(split, split.validation));
  write_checkins_file(out_dir + "/test.checkins", to_checkins(split, split.test));

  std::ofstream cat(out_dir + "/catalog.tsv");
  if (!cat) throw DataError("cannot write '" + out_dir + "/catalog.tsv'");
  for (int u = 0; u < split.users.size(); ++u)
    cat << "u\t" << u << '\t' << split.users.ids[static_cast<std::size_t>(u)] << '\n';
  for (int p = 0; p < split.pois.size(); ++p)
    cat << "p\t" << p << '\t' << split.pois.ids[static_cast<std::size_t>(p)] << '\n';
}

void write_state_export(const std::string& path, const std::vector<CheckIn>& checkins,
                        const StatePolicy& policy, const std::string& user_filter) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot write '" + path + "'");
  char buf[128];
  for (const CheckIn& c : checkins) {
    if (!user_filter.empty() && c.user != user_filter) continue;
    std::snprintf(buf, sizeof(buf), "%lld\t%.17g\t%.17g", static_cast<long long>(c.timestamp),
                  c.lat, c.lon);
    out << c.user << '\t' << c.poi << '\t' << buf << '\t'
        << state_name(policy.assign(c.timestamp)) << '\n';
  }
}

}  // namespace stacp
