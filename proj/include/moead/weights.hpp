#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace moead {

struct WeightSet {
    int M = 0;
    int H = 0;  // lattice resolution
    std::vector<std::vector<double>> vectors;
};

// Number of simplex-lattice vectors: C(H + M - 1, M - 1).
std::uint64_t simplex_lattice_size(int M, int H);

// All weight vectors with components i/H summing to 1, in descending
// lexicographic order of the integer compositions (so (1,0,...,0) comes first).
WeightSet das_dennis(int M, int H);

// The H whose lattice has exactly mu vectors; throws std::invalid_argument
// naming the two nearest achievable sizes otherwise.
int resolution_for_mu(int M, std::size_t mu);

struct Neighborhood {
    int T = 0;
    // table[i] = indices of the T weight vectors closest to vector i (including i),
    // sorted by Euclidean distance, ties broken by lower index.
    std::vector<std::vector<std::size_t>> table;
};

Neighborhood build_neighborhood(const WeightSet& ws, int T);

}  // namespace moead
