#ifndef STACP_EVALUATION_HPP
#define STACP_EVALUATION_HPP

#include <cstdint>
#include <map>
#include <string>
#include <unordered_set>
#include <vector>

namespace stacp {

// Binary-relevance ranking metrics over one user's recommendation list.
// relevant = the user's held-out POI set. N <= 0 throws ConfigError.
double precision_at(const std::vector<int>& recs, const std::unordered_set<int>& relevant, int n);
double recall_at(const std::vector<int>& recs, const std::unordered_set<int>& relevant, int n);
// DCG = sum_{i=1..N} rel_i / log2(i+1), IDCG over min(N, |relevant|) hits,
// so a perfect prefix scores exactly 1.
double ndcg_at(const std::vector<int>& recs, const std::unordered_set<int>& relevant, int n);

struct TTestResult {
  double t = 0.0;
  double p = 1.0;
  bool significant = false;  // p < 0.05
  bool degenerate = false;   // zero-variance differences with nonzero mean
};

// Classical paired two-tailed t-test on aligned per-user values. Zero
// variance with nonzero mean is significant by convention and flagged;
// all-zero differences are not significant.
TTestResult paired_ttest(const std::vector<double>& a, const std::vector<double>& b);

// Student's t two-tailed tail probability, via the regularized incomplete
// beta function.
double students_t_two_tailed_p(double t, double dof);

// Per-method evaluation block: one value per evaluated user for each
// metric@N, plus the aggregate mean.
struct MethodEval {
  std::string method;
  // key "precision@10" etc -> per-user vector aligned with eval_users
  std::map<std::string, std::vector<double>> per_user;
  std::map<std::string, double> aggregate;
};

struct SignificanceEntry {
  std::string method_a, method_b, metric;
  TTestResult test;
};

struct EvalReport {
  std::vector<int> eval_users;        // user indices included in the averages
  std::vector<int> excluded_users;    // flagged or empty-test users, listed
  std::vector<MethodEval> methods;
  std::vector<SignificanceEntry> significance;
  std::uint64_t config_hash = 0;
  std::uint64_t seed = 0;
};

MethodEval evaluate_method(const std::string& method_name,
                           const std::vector<std::vector<int>>& rec_lists,
                           const std::vector<std::unordered_set<int>>& relevant_sets,
                           const std::vector<int>& cutoffs);

// significance of the first method against every other, per metric
void add_significance(EvalReport& report, const std::string& reference_method);

std::string report_table(const EvalReport& report);
void write_report_json(const EvalReport& report, const std::string& path);
void write_report_table(const EvalReport& report, const std::string& path);

}  // namespace stacp

#endif
