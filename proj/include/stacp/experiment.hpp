#ifndef STACP_EXPERIMENT_HPP
#define STACP_EXPERIMENT_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "stacp/centers.hpp"
#include "stacp/checkin.hpp"
#include "stacp/evaluation.hpp"
#include "stacp/factorization.hpp"
#include "stacp/ingest.hpp"
#include "stacp/recommender.hpp"
#include "stacp/synthetic.hpp"

namespace stacp {

// Full description of one run. Parsed from a key=value config file with
// command-line overrides; every field is validated before any stage runs.
struct ExperimentConfig {
  std::string dataset_path;
  DatasetProfile profile;
  StatePolicy policy;
  SplitRatios ratios;
  CenterConfig centers;    // d = 15, alpha = 0.02
  ContextConfig context;   // lambda = 0.5
  FactorHyper factor;
  double powerlaw_bucket_km = 0.5;
  std::vector<Method> methods = {Method::kStacp, Method::kNoCtx, Method::kNoTc,
                                 Method::kTopPopular, Method::kPfm, Method::kPfmpd};
  std::vector<int> cutoffs = {10, 20};
  std::uint64_t seed = 1;
  int workers = 0;  // 0 = hardware concurrency
  std::string out_dir = "out";

  std::string sweep_axis;           // training-fraction | d | alpha | lambda
  std::vector<double> sweep_grid;

  SyntheticSpec synth;
};

// key = value grammar, '#' comments. Unknown keys are an error.
ExperimentConfig parse_config_file(const std::string& path);
ExperimentConfig parse_config_text(const std::string& text);
void apply_override(ExperimentConfig& cfg, const std::string& key, const std::string& value);
// Throws ConfigError naming the first invalid field.
void validate_config(const ExperimentConfig& cfg);

// Canonical serialization of the fields that affect results; hashed into the
// manifest so reruns can be checked for bit-identity.
std::string canonical_config(const ExperimentConfig& cfg);
std::uint64_t config_hash(const ExperimentConfig& cfg);

// Models, centers and auxiliary signals trained on one training matrix.
struct TrainedStack {
  InteractionMatrix train_matrix;
  std::vector<InteractionMatrix> state_matrices;
  FactorModel static_model;
  TemporalModelSet temporal;
  std::vector<std::vector<std::vector<ActivityCenter>>> state_centers;  // [user][state]
  std::vector<std::vector<ActivityCenter>> merged_centers;              // [user]
  std::vector<std::int64_t> poi_popularity;
  PowerLawModel power_law;
  bool power_law_ok = false;
  std::vector<std::vector<GeoPoint>> visited_coords;  // per user, training POIs
};

bool needs_factorization(const std::vector<Method>& methods);

TrainedStack train_stack(const DatasetSplit& split, const ExperimentConfig& cfg,
                         const InteractionMatrix* train_override = nullptr);

FusionInputs fusion_inputs(const TrainedStack& stack, const ExperimentConfig& cfg);

struct ExperimentResult {
  EvalReport report;
  DatasetSplit split;
};

// ingest -> split -> train -> recommend -> evaluate, artifacts persisted under
// cfg.out_dir (splits, checkpoints, centers, recommendations, report,
// manifest). Reruns with the same config and seed are byte-identical.
ExperimentResult run_experiment(const ExperimentConfig& cfg);

// One full retrain per grid point; rows keyed by axis value.
struct SweepRow {
  double axis_value = 0.0;
  // method -> metric -> aggregate
  std::map<std::string, std::map<std::string, double>> aggregates;
  std::vector<int> excluded_users;  // users emptied by subsampling
};

std::vector<SweepRow> run_sweep(const ExperimentConfig& cfg);
void write_sweep_csv(const std::vector<SweepRow>& rows, const std::string& axis,
                     const std::string& path);

}  // namespace stacp

#endif
