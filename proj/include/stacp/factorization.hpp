#ifndef STACP_FACTORIZATION_HPP
#define STACP_FACTORIZATION_HPP

#include <Eigen/Core>
#include <cstdint>
#include <string>
#include <vector>

#include "stacp/matrix.hpp"

namespace stacp {

struct FactorHyper {
  int k = 30;
  double sigma = 2.0;          // prior shape, broadcast over factors
  double rho = 1.0;            // prior scale, broadcast over factors
  double learning_rate = 1e-4;
  int max_epochs = 300;
  double tolerance = 1e-6;     // relative objective change
  double floor = 1e-8;         // positivity floor for factor entries
  std::uint64_t seed = 0;
};

// Nonnegative factors of the Poisson model: R_ul ~ Poisson((U^T L)_ul) with
// the printed shape/scale prior on every entry. Columns are users/POIs.
struct FactorModel {
  Eigen::MatrixXd u_factors;  // K x m
  Eigen::MatrixXd l_factors;  // K x n
  Eigen::VectorXd sigma;      // per-factor prior shape
  Eigen::VectorXd rho;        // per-factor prior scale
  double floor = 1e-8;
  std::uint64_t seed = 0;
  int epochs_run = 0;

  int k() const { return static_cast<int>(u_factors.rows()); }
  int n_users() const { return static_cast<int>(u_factors.cols()); }
  int n_pois() const { return static_cast<int>(l_factors.cols()); }

  double static_score(int u, int l) const {
    return u_factors.col(u).dot(l_factors.col(l));
  }
};

// Log-posterior kernel, additive constant dropped:
//   sum_ik ((sigma_k-1) ln(U_ik/rho_k) - U_ik/rho_k)
// + sum_jk ((sigma_k-1) ln(L_jk/rho_k) - L_jk/rho_k)
// + sum_ij (R_ij ln(U^T L)_ij - (U^T L)_ij)
// The R ln(.) term is summed over nonzeros only; the -(U^T L) term over all
// cells via sum_k (sum_i U_ik)(sum_j L_jk). Throws NumericError if a factor
// entry is not strictly positive.
double objective(const FactorModel& model, const InteractionMatrix& r);

// Analytic gradient of the objective:
//   d/dU_ik = (sigma_k-1)/U_ik - 1/rho_k + sum_j R_ij L_jk/(U^T L)_ij - sum_j L_jk
// and symmetrically for L.
void gradient(const FactorModel& model, const InteractionMatrix& r,
              Eigen::MatrixXd& grad_u, Eigen::MatrixXd& grad_l);

// Projected gradient ascent. Each epoch backtracks from the configured rate
// (halving, with the accepted rate carried forward and doubled after a
// success) until the objective does not decrease, then clamps every entry to
// the floor. Stops on max_epochs, relative objective change < tolerance, or
// a dead line search. Initialization is uniform (0,1)/sqrt(K), seeded.
// Throws NumericError naming the epoch if the objective becomes non-finite.
FactorModel train(const InteractionMatrix& r, const FactorHyper& hyper);

// Little-endian binary checkpoint: header (K, m, n, seed, epochs, floor,
// sigma, rho) then U and L row-major as 64-bit floats. Round-trips bit-exact.
void save_model(const FactorModel& model, const std::string& path);
FactorModel load_model(const std::string& path);

// One model per temporal state, trained independently on the state
// sub-matrices; the temporal preference is the sum of their predictions.
struct TemporalModelSet {
  std::vector<FactorModel> per_state;
  std::vector<char> empty_state;  // states whose sub-matrix had no entries

  double temporal_score(int u, int l) const {
    double s = 0.0;
    for (const auto& m : per_state) s += m.static_score(u, l);
    return s;
  }
};

TemporalModelSet train_temporal(const std::vector<InteractionMatrix>& per_state,
                                const FactorHyper& hyper);

}  // namespace stacp

#endif
