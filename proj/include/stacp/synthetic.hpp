#ifndef STACP_SYNTHETIC_HPP
#define STACP_SYNTHETIC_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "stacp/checkin.hpp"
#include "stacp/geo.hpp"

namespace stacp {

// Desk-scale generator for the planted-center phenomenon: POIs cluster in
// towns, every user owns distinct working and leisure towns, and visits fall
// around the active state's town centers. Working visits default to repeat
// behavior (a favorite POI per center) while leisure visits explore the whole
// cluster; state_bias skews the visit counts toward working time.
struct SyntheticSpec {
  int users = 50;
  int pois = 200;
  int centers_per_state = 2;
  double radius_km = 10.0;
  int visits_per_user = 100;
  std::uint64_t seed = 1;

  int towns = 12;                    // shared cluster sites users pick from
  double min_separation_km = 40.0;   // between town centers
  double work_share = 0.5;           // fraction of visits in working time
  double work_repeat = 0.7;          // prob. a working visit hits the center's favorite
  double leisure_repeat = 0.0;       // same for leisure
  int span_days = 365;

  // Fully symmetric states: balanced shares, identical exploration.
  SyntheticSpec& symmetric() {
    work_share = 0.5;
    work_repeat = 0.2;
    leisure_repeat = 0.2;
    return *this;
  }
  // Work-repeat / leisure-explore asymmetry with working-heavy counts.
  SyntheticSpec& asymmetric() {
    work_share = 0.65;
    work_repeat = 0.7;
    leisure_repeat = 0.0;
    return *this;
  }
};

struct SyntheticDataset {
  std::vector<CheckIn> checkins;
  // planted truth per state, for generator-vs-allocator round trips:
  // [state][user][center]
  std::array<std::vector<std::vector<GeoPoint>>, 2> planted_centers;
};

SyntheticDataset generate_synthetic(const SyntheticSpec& spec);

// Generates and writes in the canonical check-in format.
void generate_synthetic_file(const SyntheticSpec& spec, const std::string& path);

}  // namespace stacp

#endif
