#pragma once

#include <vector>

namespace moead {

// One-sided rank-sum p-value for the alternative "y tends to exceed x".
// Ties get midranks. Exact distribution (conditional on the observed ranks)
// when min(n, m) < 10, normal approximation with tie-corrected variance and
// continuity correction otherwise. Degenerate pooled samples give p = 1.
double wilcoxon_rank_sum(const std::vector<double>& x, const std::vector<double>& y);

// The two paths, exposed for cross-checking.
double wilcoxon_exact_p(const std::vector<double>& x, const std::vector<double>& y);
double wilcoxon_normal_p(const std::vector<double>& x, const std::vector<double>& y);

// Performance score per configuration: P[i] counts the rivals j whose sample
// significantly exceeds sample i at level alpha (larger values better, so a
// high score means i is beaten often; 0 is best).
std::vector<int> performance_scores(const std::vector<std::vector<double>>& samples,
                                    double alpha = 0.05);

// Average performance score across instances: scores[instance][config].
std::vector<double> average_performance_scores(const std::vector<std::vector<int>>& scores);

}  // namespace moead
