#include "stacp/geo.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "stacp/errors.hpp"

namespace stacp {

double haversine_km(const GeoPoint& p, const GeoPoint& q) {
  constexpr double deg = M_PI / 180.0;
  const double lat1 = p.lat * deg, lat2 = q.lat * deg;
  const double dlat = (q.lat - p.lat) * deg;
  const double dlon = (q.lon - p.lon) * deg;
  const double sa = std::sin(dlat / 2.0), so = std::sin(dlon / 2.0);
  double h = sa * sa + std::cos(lat1) * std::cos(lat2) * so * so;
  h = std::clamp(h, 0.0, 1.0);
  return 2.0 * kEarthRadiusKm * std::asin(std::sqrt(h));
}

PowerLawModel fit_power_law(const InteractionMatrix& train,
                            const std::vector<GeoPoint>& poi_coords,
                            double bucket_km) {
  if (bucket_km <= 0.0) throw NumericError("power-law fit: bucket width must be positive");

  // histogram of within-user pairwise distances between distinct visited POIs
  std::map<std::int64_t, std::int64_t> buckets;
  for (const auto& row : train.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      for (std::size_t j = i + 1; j < row.size(); ++j) {
        double d = haversine_km(poi_coords[static_cast<std::size_t>(row[i].first)],
                                poi_coords[static_cast<std::size_t>(row[j].first)]);
        d = std::max(d, kMinDistanceKm);
        ++buckets[static_cast<std::int64_t>(d / bucket_km)];
      }
    }
  }
  if (buckets.size() < 2)
    throw NumericError("power-law fit: degenerate input, need pairwise distances in at least "
                       "two distinct buckets");

  // least squares of ln(count) on ln(bucket midpoint)
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(buckets.size());
  for (const auto& [idx, count] : buckets) {
    const double x = std::log((static_cast<double>(idx) + 0.5) * bucket_km);
    const double y = std::log(static_cast<double>(count));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double denom = n * sxx - sx * sx;
  if (std::abs(denom) < 1e-12)
    throw NumericError("power-law fit: degenerate input, all distances in one bucket");
  PowerLawModel model;
  model.b = (n * sxy - sx * sy) / denom;
  model.a = std::exp((sy - model.b * sx) / n);
  return model;
}

double powerlaw_score(const PowerLawModel& model, const GeoPoint& candidate,
                      const std::vector<GeoPoint>& visited) {
  if (visited.empty()) throw DataError("power-law score: empty visited list");
  double log_sum = 0.0;
  for (const GeoPoint& v : visited) {
    const double d = std::max(haversine_km(candidate, v), kMinDistanceKm);
    log_sum += std::log(model.a) + model.b * std::log(d);
  }
  return std::exp(log_sum / static_cast<double>(visited.size()));
}

}  // namespace stacp
