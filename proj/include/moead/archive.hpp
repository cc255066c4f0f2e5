#pragma once

#include <cstddef>
#include <vector>

#include "moead/types.hpp"

namespace moead {

// True iff a is no worse than b in every objective and better in at least one
// (minimization).
bool dominates(const ObjectiveVector& a, const ObjectiveVector& b);

// Indices of the nondominated members of pts, keeping first occurrence of
// duplicate objective vectors.
std::vector<std::size_t> nondominated_indices(const std::vector<ObjectiveVector>& pts);

// Unbounded external archive: holds every nondominated solution seen so far,
// rejecting dominated candidates and exact objective duplicates. Membership
// order is insertion order of the survivors.
class Archive {
public:
    // Returns true iff s was added. Adding removes any members it dominates.
    bool insert(Solution s);

    std::size_t size() const { return live_; }
    bool empty() const { return live_ == 0; }
    int objective_count() const { return m_; }

    // Survivors in insertion order.
    std::vector<Solution> members() const;
    std::vector<ObjectiveVector> objectives() const;

    template <typename F>
    void for_each(F&& fn) const {
        for (std::size_t r = 0; r < sols_.size(); ++r)
            if (alive_[r]) fn(sols_[r]);
    }

private:
    void compact();

    int m_ = 0;
    std::size_t live_ = 0;
    std::vector<Solution> sols_;
    std::vector<double> obj_;  // row-major mirror of sols_[r].f for fast scans
    std::vector<char> alive_;
    std::vector<std::size_t> kills_;  // scratch
};

struct ReductionConfig {
    std::size_t b = 0;  // target size; 0 picks the per-M default below
};

// 200 / 210 / 220 / 210 for M = 2 / 3 / 4 / 5.
std::size_t default_reduction_size(int M);

// Distance-based subset of size min(b, |archive|): objectives are normalized by
// [ideal, nadir], the extreme solution per objective is kept, then remaining
// slots are filled greedily with the candidate farthest (normalized Euclidean)
// from the chosen set. Ties fall back to insertion order.
std::vector<Solution> reduce(const Archive& archive, const ReductionConfig& cfg,
                             const ObjectiveVector& ideal, const ObjectiveVector& nadir);

}  // namespace moead
