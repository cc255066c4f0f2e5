#include "moead/stats.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace moead {

namespace {

struct Ranked {
    std::vector<double> ranks_x, ranks_y;  // midranks
    std::vector<int> doubled;              // 2 * midrank of every pooled value, integers
    std::vector<int> doubled_y;
    double tie_term = 0.0;  // sum of t^3 - t over tie groups
};

Ranked midranks(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.empty() || y.empty()) throw std::invalid_argument("rank-sum test needs nonempty samples");
    struct Entry {
        double v;
        bool from_y;
    };
    std::vector<Entry> pooled;
    pooled.reserve(x.size() + y.size());
    for (const double v : x) pooled.push_back({v, false});
    for (const double v : y) pooled.push_back({v, true});
    std::sort(pooled.begin(), pooled.end(), [](const Entry& a, const Entry& b) { return a.v < b.v; });

    Ranked r;
    r.doubled.reserve(pooled.size());
    std::size_t i = 0;
    while (i < pooled.size()) {
        std::size_t j = i;
        while (j < pooled.size() && pooled[j].v == pooled[i].v) ++j;
        const double t = static_cast<double>(j - i);
        r.tie_term += t * t * t - t;
        // midrank of positions i..j-1 (1-based ranks)
        const double rank = (static_cast<double>(i + 1) + static_cast<double>(j)) / 2.0;
        for (std::size_t p = i; p < j; ++p) {
            const int d2 = static_cast<int>(std::llround(2.0 * rank));
            r.doubled.push_back(d2);
            if (pooled[p].from_y) {
                r.ranks_y.push_back(rank);
                r.doubled_y.push_back(d2);
            } else {
                r.ranks_x.push_back(rank);
            }
        }
        i = j;
    }
    return r;
}

double phi_upper(double z) { return 0.5 * std::erfc(z / std::sqrt(2.0)); }

}  // namespace

double wilcoxon_normal_p(const std::vector<double>& x, const std::vector<double>& y) {
    const Ranked r = midranks(x, y);
    const double n = static_cast<double>(x.size());
    const double m = static_cast<double>(y.size());
    const double N = n + m;
    double rank_sum_y = 0.0;
    for (const double v : r.ranks_y) rank_sum_y += v;
    const double u = rank_sum_y - m * (m + 1.0) / 2.0;
    const double mean = n * m / 2.0;
    const double var = n * m / 12.0 * ((N + 1.0) - r.tie_term / (N * (N - 1.0)));
    if (var <= 0.0) return 1.0;  // pooled sample is constant
    const double z = (u - mean - 0.5) / std::sqrt(var);
    return phi_upper(z);
}

double wilcoxon_exact_p(const std::vector<double>& x, const std::vector<double>& y) {
    const Ranked r = midranks(x, y);
    const std::size_t N = r.doubled.size();
    const std::size_t m = y.size();
    // tail side: count assignments of the y labels whose rank sum reaches the
    // observed one. Counting over the smaller side keeps the table small.
    const bool over_y = m <= x.size();
    const std::size_t s = over_y ? m : x.size();
    int total_doubled = 0;
    for (const int d : r.doubled) total_doubled += d;
    int observed_y = 0;
    for (const int d : r.doubled_y) observed_y += d;
    const int observed = over_y ? observed_y : total_doubled - observed_y;

    // ways[c][t] = number of c-subsets of the pooled doubled ranks with sum t
    const int max_sum = total_doubled;
    std::vector<std::vector<double>> ways(s + 1, std::vector<double>(max_sum + 1, 0.0));
    ways[0][0] = 1.0;
    for (std::size_t item = 0; item < N; ++item) {
        const int d = r.doubled[item];
        const std::size_t cap = std::min(s, item + 1);
        for (std::size_t c = cap; c >= 1; --c)
            for (int t = max_sum - d; t >= 0; --t)
                if (ways[c - 1][t] > 0.0) ways[c][t + d] += ways[c - 1][t];
    }
    double hit = 0.0, total = 0.0;
    for (int t = 0; t <= max_sum; ++t) {
        total += ways[s][t];
        // y-side tail is "rank sum >= observed"; counting the x side flips it
        const bool in_tail = over_y ? t >= observed : t <= observed;
        if (in_tail) hit += ways[s][t];
    }
    return hit / total;
}

double wilcoxon_rank_sum(const std::vector<double>& x, const std::vector<double>& y) {
    const std::size_t n = x.size(), m = y.size();
    if (n == 0 || m == 0) throw std::invalid_argument("rank-sum test needs nonempty samples");
    if (std::min(n, m) >= 10 || n + m > 128) return wilcoxon_normal_p(x, y);
    return wilcoxon_exact_p(x, y);
}

std::vector<int> performance_scores(const std::vector<std::vector<double>>& samples,
                                    double alpha) {
    const std::size_t c = samples.size();
    std::vector<int> p(c, 0);
    for (std::size_t i = 0; i < c; ++i)
        for (std::size_t j = 0; j < c; ++j) {
            if (i == j) continue;
            if (wilcoxon_rank_sum(samples[i], samples[j]) < alpha) ++p[i];
        }
    return p;
}

std::vector<double> average_performance_scores(const std::vector<std::vector<int>>& scores) {
    if (scores.empty()) throw std::invalid_argument("no instances to average over");
    const std::size_t c = scores.front().size();
    std::vector<double> aps(c, 0.0);
    for (const auto& row : scores) {
        if (row.size() != c) throw std::invalid_argument("ragged score table");
        for (std::size_t i = 0; i < c; ++i) aps[i] += row[i];
    }
    for (double& v : aps) v /= static_cast<double>(scores.size());
    return aps;
}

}  // namespace moead
