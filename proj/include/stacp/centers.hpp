#ifndef STACP_CENTERS_HPP
#define STACP_CENTERS_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "stacp/geo.hpp"

namespace stacp {

// A geographic anchor a user's check-ins cluster around, owned by one
// (user, temporal state) pair. The location is the anchor POI's coordinates,
// freq the total check-ins absorbed into the region.
struct ActivityCenter {
  GeoPoint location;
  std::int64_t freq = 0;
  int anchor_poi = -1;
  std::vector<int> member_pois;
  int state = 0;
};

struct CenterConfig {
  double d_km = 15.0;   // region radius
  double alpha = 0.02;  // frequency-share threshold for keeping a region
};

struct ContextConfig {
  double lambda = 0.5;  // weight of the working-time state in the interpolation
};

// Greedy region growing over a (POI index -> frequency) profile: repeatedly
// anchor at the most-visited unconsumed POI (ties to the lower index), absorb
// every unconsumed POI within d km, and keep the region as a center iff its
// frequency share of the whole profile exceeds alpha. Sub-threshold regions
// still consume their POIs so the loop terminates once every POI is covered.
std::vector<ActivityCenter> allocate_centers(
    const std::vector<std::pair<int, std::int64_t>>& profile,
    const std::vector<GeoPoint>& poi_coords, const CenterConfig& cfg,
    int state = 0);

// Sum over centers of (1 / max(dist, 0.01 km)) * (freq share within the
// list). Zero for an empty list; the fusion layer decides what that means.
double state_center_score(const GeoPoint& l, const std::vector<ActivityCenter>& centers);

// lambda * working + (1 - lambda) * leisure. A state without centers drops
// out and the other takes full weight; with both empty the score is the
// neutral multiplier 1 so the fusion product degrades to pure MF.
double context_score(const GeoPoint& l,
                     const std::vector<ActivityCenter>& working_centers,
                     const std::vector<ActivityCenter>& leisure_centers,
                     const ContextConfig& cfg);

}  // namespace stacp

#endif
