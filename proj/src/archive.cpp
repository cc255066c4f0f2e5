#include "moead/archive.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace moead {

bool dominates(const ObjectiveVector& a, const ObjectiveVector& b) {
    if (a.size() != b.size() || a.empty())
        throw std::invalid_argument("dominance requires vectors of identical nonzero dimension");
    bool strict = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i]) return false;
        if (a[i] < b[i]) strict = true;
    }
    return strict;
}

std::vector<std::size_t> nondominated_indices(const std::vector<ObjectiveVector>& pts) {
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        bool drop = false;
        for (std::size_t j = 0; j < pts.size() && !drop; ++j) {
            if (j == i) continue;
            if (dominates(pts[j], pts[i])) drop = true;
            if (pts[j] == pts[i] && j < i) drop = true;  // keep first duplicate only
        }
        if (!drop) keep.push_back(i);
    }
    return keep;
}

bool Archive::insert(Solution s) {
    const int m = static_cast<int>(s.f.size());
    if (m == 0) throw std::invalid_argument("cannot archive a solution without objectives");
    if (m_ == 0)
        m_ = m;
    else if (m != m_)
        throw std::invalid_argument("archived solutions must share an objective dimension");

    const double* cand = s.f.data();
    kills_.clear();
    const std::size_t rows = sols_.size();
    for (std::size_t r = 0; r < rows; ++r) {
        if (!alive_[r]) continue;
        const double* row = obj_.data() + r * m_;
        bool row_le = true, row_lt = false;
        bool cand_le = true, cand_lt = false;
        for (int j = 0; j < m_; ++j) {
            const double a = row[j], b = cand[j];
            if (a < b) {
                row_lt = true;
                cand_le = false;
            } else if (a > b) {
                cand_lt = true;
                row_le = false;
            }
            if (!row_le && !cand_le) break;  // incomparable
        }
        if (row_le && !cand_lt && !row_lt) return false;  // duplicate objectives
        if (row_le && row_lt) return false;               // dominated by a member
        if (cand_le && cand_lt) kills_.push_back(r);
    }
    for (const std::size_t r : kills_) {
        alive_[r] = 0;
        --live_;
    }
    obj_.insert(obj_.end(), s.f.begin(), s.f.end());
    sols_.push_back(std::move(s));
    alive_.push_back(1);
    ++live_;
    if (sols_.size() > 1024 && live_ * 2 < sols_.size()) compact();
    return true;
}

void Archive::compact() {
    std::size_t w = 0;
    for (std::size_t r = 0; r < sols_.size(); ++r) {
        if (!alive_[r]) continue;
        if (w != r) {
            sols_[w] = std::move(sols_[r]);
            std::copy_n(obj_.begin() + r * m_, m_, obj_.begin() + w * m_);
        }
        ++w;
    }
    sols_.resize(w);
    obj_.resize(w * m_);
    alive_.assign(w, 1);
}

std::vector<Solution> Archive::members() const {
    std::vector<Solution> out;
    out.reserve(live_);
    for_each([&](const Solution& s) { out.push_back(s); });
    return out;
}

std::vector<ObjectiveVector> Archive::objectives() const {
    std::vector<ObjectiveVector> out;
    out.reserve(live_);
    for_each([&](const Solution& s) { out.push_back(s.f); });
    return out;
}

std::size_t default_reduction_size(int M) {
    switch (M) {
        case 2: return 200;
        case 3: return 210;
        case 4: return 220;
        case 5: return 210;
        default: throw std::invalid_argument("no default reduction size for M outside [2, 5]");
    }
}

std::vector<Solution> reduce(const Archive& archive, const ReductionConfig& cfg,
                             const ObjectiveVector& ideal, const ObjectiveVector& nadir) {
    if (archive.empty()) throw std::invalid_argument("cannot reduce an empty archive");
    const int m = archive.objective_count();
    if (static_cast<int>(ideal.size()) != m || static_cast<int>(nadir.size()) != m)
        throw std::invalid_argument("ideal/nadir dimension mismatch");
    const std::size_t b = cfg.b != 0 ? cfg.b : default_reduction_size(m);

    std::vector<Solution> pool = archive.members();
    if (pool.size() <= b) return pool;

    const std::size_t n = pool.size();
    std::vector<double> norm(n * m);
    for (std::size_t i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j)
            norm[i * m + j] =
                (pool[i].f[j] - ideal[j]) / std::max(nadir[j] - ideal[j], 1e-12);

    std::vector<char> picked(n, 0);
    std::vector<std::size_t> selection;
    selection.reserve(b);

    // one extreme per objective: minimal f_j, ties by the next objective, then
    // by insertion order
    for (int j = 0; j < m && selection.size() < b; ++j) {
        std::size_t best = n;
        for (std::size_t i = 0; i < n; ++i) {
            if (picked[i]) continue;
            if (best == n) {
                best = i;
                continue;
            }
            const double a = norm[i * m + j], c = norm[best * m + j];
            if (a < c) {
                best = i;
            } else if (a == c) {
                const int j2 = (j + 1) % m;
                if (norm[i * m + j2] < norm[best * m + j2]) best = i;
            }
        }
        if (best < n) {
            picked[best] = 1;
            selection.push_back(best);
        }
    }

    // fill the rest farthest-first in the normalized space
    std::vector<double> min_d2(n, std::numeric_limits<double>::infinity());
    auto account = [&](std::size_t chosen) {
        const double* c = norm.data() + chosen * m;
        for (std::size_t i = 0; i < n; ++i) {
            if (picked[i]) continue;
            const double* p = norm.data() + i * m;
            double d2 = 0.0;
            for (int j = 0; j < m; ++j) {
                const double d = p[j] - c[j];
                d2 += d * d;
            }
            min_d2[i] = std::min(min_d2[i], d2);
        }
    };
    for (const std::size_t s : selection) account(s);
    while (selection.size() < b) {
        std::size_t best = n;
        double best_d2 = -1.0;
        for (std::size_t i = 0; i < n; ++i) {
            if (picked[i]) continue;
            if (min_d2[i] > best_d2) {
                best_d2 = min_d2[i];
                best = i;
            }
        }
        picked[best] = 1;
        selection.push_back(best);
        account(best);
    }

    std::sort(selection.begin(), selection.end());  // stable output order
    std::vector<Solution> out;
    out.reserve(selection.size());
    for (const std::size_t i : selection) out.push_back(std::move(pool[i]));
    return out;
}

}  // namespace moead
