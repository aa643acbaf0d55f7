#ifndef STACP_INGEST_HPP
#define STACP_INGEST_HPP

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "stacp/checkin.hpp"
#include "stacp/geo.hpp"
#include "stacp/matrix.hpp"

namespace stacp {

// Column layout of a check-in file. Built-in profiles:
//   custom     user, poi, time, lat, lon   (also the canonical output order)
//   gowalla    user, time, lat, lon, poi
//   foursquare user, poi, time, lat, lon
// Fields are tab- or comma-separated; the timestamp is ISO-8601 or epoch
// seconds.
struct DatasetProfile {
  std::string name = "custom";
  int col_user = 0, col_poi = 1, col_time = 2, col_lat = 3, col_lon = 4;

  static DatasetProfile named(const std::string& name);
  // order: permutation of the tokens user,poi,time,lat,lon
  static DatasetProfile custom(const std::string& order);
  int min_columns() const;
};

struct ParseResult {
  std::vector<CheckIn> checkins;
  std::int64_t rejected = 0;              // malformed or out-of-range rows
  std::vector<std::string> reject_samples;  // first few offending lines, for the report
};

// Reads every well-formed row; malformed rows are counted, never silently
// dropped. Duplicate (user, poi, timestamp) triples are kept: re-visits carry
// signal. Throws DataError on an unreadable file or zero valid rows.
ParseResult parse_checkins(const std::string& path, const DatasetProfile& profile);

// Canonical serialization (user \t poi \t epoch \t lat \t lon), exact
// round-trip with parse_checkins under the custom profile.
void write_checkins(std::ostream& out, const std::vector<CheckIn>& checkins);
void write_checkins_file(const std::string& path, const std::vector<CheckIn>& checkins);

struct SplitRatios {
  double train = 0.7, validation = 0.1, test = 0.2;
};

// Index-encoded event, carrying everything later stages need.
struct Event {
  int poi;
  std::int64_t timestamp;
  GeoPoint pos;
  int state;
};

// Chronological per-user split over the full catalogs. For a user with n
// events: train = first floor(r_train*n), test = last floor(r_test*n),
// validation = the remainder between them. Users with n < 3 keep their
// events in training (n==2 still donates its last event to test) and are
// flagged out of evaluation averages.
struct DatasetSplit {
  Catalog users;
  Catalog pois;
  std::vector<GeoPoint> poi_coords;  // first-seen coordinates per POI
  std::vector<std::vector<Event>> train, validation, test;
  std::vector<char> flagged;  // users with fewer than 3 check-ins
  int n_states = 2;

  int n_users() const { return users.size(); }
  int n_pois() const { return pois.size(); }
};

DatasetSplit chronological_split(const std::vector<CheckIn>& checkins,
                                 const StatePolicy& policy,
                                 const SplitRatios& ratios = {});

// Frequency matrix over one split part, optionally restricted to a single
// temporal state. Entry (u,l) = number of matching events of u at l.
InteractionMatrix build_matrix(const std::vector<std::vector<Event>>& part,
                               int n_users, int n_pois,
                               std::optional<int> state_filter = std::nullopt);

// train/validation/test files in canonical format plus one catalog file
// ("u\tindex\tid" / "p\tindex\tid" lines).
void write_split(const DatasetSplit& split, const std::string& out_dir);

// Per-check-in state export for external map plotting:
// user \t poi \t epoch \t lat \t lon \t state. user_filter narrows to one user id.
void write_state_export(const std::string& path, const std::vector<CheckIn>& checkins,
                        const StatePolicy& policy, const std::string& user_filter = "");

}  // namespace stacp

#endif
