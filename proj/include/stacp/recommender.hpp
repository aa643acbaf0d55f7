#ifndef STACP_RECOMMENDER_HPP
#define STACP_RECOMMENDER_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "stacp/centers.hpp"
#include "stacp/factorization.hpp"
#include "stacp/geo.hpp"
#include "stacp/matrix.hpp"

namespace stacp {

enum class Method {
  kStacp,
  kNoCtx,       // static x temporal, context term dropped
  kNoTc,        // centers allocated without temporal states
  kTopPopular,
  kPfm,
  kPfmpd,
};

Method method_from_name(const std::string& name);
const char* method_name(Method m);

// Everything the fusion score needs, all built from the same training split.
struct FusionInputs {
  const FactorModel* static_model = nullptr;
  const TemporalModelSet* temporal = nullptr;
  // [user][state] and [user] center lists
  const std::vector<std::vector<std::vector<ActivityCenter>>>* state_centers = nullptr;
  const std::vector<std::vector<ActivityCenter>>* merged_centers = nullptr;
  ContextConfig context;
  const std::vector<GeoPoint>* poi_coords = nullptr;
  const InteractionMatrix* train = nullptr;
  // baseline inputs
  const std::vector<std::int64_t>* poi_popularity = nullptr;
  PowerLawModel power_law;
  const std::vector<std::vector<GeoPoint>>* visited_coords = nullptr;  // per user
};

// The three-way product: static preference x spatio-temporal context x
// temporal preference.
double stacp_score(const FusionInputs& in, int u, int l);

double ablation_score(Method variant, const FusionInputs& in, int u, int l);

double baseline_score(Method method, const FusionInputs& in, int u, int l);

double method_score(Method method, const FusionInputs& in, int u, int l);

struct Recommendation {
  int user = -1;
  std::vector<int> pois;      // ranked, best first
  std::vector<double> scores; // aligned, non-increasing
  bool truncated = false;     // fewer candidates than requested
};

// Top N of the candidate set by method score, ties to the lower POI index.
// The caller supplies candidates (the full catalog minus the user's training
// POIs).
Recommendation recommend_top_n(const FusionInputs& in, Method method, int u, int n,
                               const std::vector<int>& candidates);

// All POIs not visited by u in training, ascending.
std::vector<int> candidate_pois(const InteractionMatrix& train, int u);

void write_recommendations(const std::string& path,
                           const std::vector<Recommendation>& recs,
                           const Catalog& users, const Catalog& pois);

}  // namespace stacp

#endif
