#ifndef STACP_GEO_HPP
#define STACP_GEO_HPP

#include <vector>

#include "stacp/matrix.hpp"

namespace stacp {

struct GeoPoint {
  double lat = 0.0;
  double lon = 0.0;
};

inline constexpr double kEarthRadiusKm = 6371.0;

// Shared clamp for distances that end up in a denominator or a log.
inline constexpr double kMinDistanceKm = 0.01;

// Great-circle distance on the 6371 km sphere.
double haversine_km(const GeoPoint& p, const GeoPoint& q);

// Log-log linear model of visit likelihood vs distance, fitted on the
// pairwise distances between each user's visited POIs. score ~ a * d^b,
// b < 0 on real data.
struct PowerLawModel {
  double a = 1.0;
  double b = 0.0;
};

// Buckets pairwise distances (bucket_km wide), then least-squares fits
// log(count) against log(bucket midpoint). Throws NumericError when fewer
// than two distinct buckets are populated.
PowerLawModel fit_power_law(const InteractionMatrix& train,
                            const std::vector<GeoPoint>& poi_coords,
                            double bucket_km = 0.5);

// Geometric mean of a*dist(candidate, v)^b over the visited POIs; the product
// form is evaluated in log-space and normalized by the visit count before
// re-exponentiating so long histories do not underflow. Per-user rankings are
// unchanged by the normalization. Throws DataError on an empty history.
double powerlaw_score(const PowerLawModel& model, const GeoPoint& candidate,
                      const std::vector<GeoPoint>& visited);

}  // namespace stacp

#endif
