#include "moead/weights.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace moead {

namespace {

void check_m(int M) {
    if (M < 2) throw std::invalid_argument("objective count must be at least 2");
}

}  // namespace

std::uint64_t simplex_lattice_size(int M, int H) {
    check_m(M);
    if (H < 1) throw std::invalid_argument("lattice resolution must be at least 1");
    // C(H + M - 1, M - 1), kept exact by dividing at each step
    std::uint64_t n = 1;
    for (int i = 1; i <= M - 1; ++i) n = n * (H + i) / i;
    return n;
}

WeightSet das_dennis(int M, int H) {
    check_m(M);
    if (H < 1) throw std::invalid_argument("lattice resolution must be at least 1");
    WeightSet ws;
    ws.M = M;
    ws.H = H;
    ws.vectors.reserve(simplex_lattice_size(M, H));
    std::vector<int> h(M, 0);
    // descending enumeration of compositions of H into M parts
    auto rec = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == M - 1) {
            h[pos] = remaining;
            std::vector<double> w(M);
            for (int i = 0; i < M; ++i) w[i] = static_cast<double>(h[i]) / H;
            ws.vectors.push_back(std::move(w));
            return;
        }
        for (int v = remaining; v >= 0; --v) {
            h[pos] = v;
            self(self, pos + 1, remaining - v);
        }
    };
    rec(rec, 0, H);
    return ws;
}

int resolution_for_mu(int M, std::size_t mu) {
    check_m(M);
    std::uint64_t prev = 0;
    for (int H = 1;; ++H) {
        const std::uint64_t n = simplex_lattice_size(M, H);
        if (n == mu) return H;
        if (n > mu) {
            std::string nearest = prev == 0
                                      ? "smallest achievable is " + std::to_string(n)
                                      : "nearest achievable are " + std::to_string(prev) + " and " +
                                            std::to_string(n);
            throw std::invalid_argument("population size " + std::to_string(mu) +
                                        " is not a simplex-lattice size for " + std::to_string(M) +
                                        " objectives; " + nearest);
        }
        prev = n;
    }
}

Neighborhood build_neighborhood(const WeightSet& ws, int T) {
    const std::size_t mu = ws.vectors.size();
    if (T < 1 || static_cast<std::size_t>(T) > mu)
        throw std::invalid_argument("neighborhood size must be in [1, population size]");
    Neighborhood nb;
    nb.T = T;
    nb.table.resize(mu);
    std::vector<std::pair<double, std::size_t>> order(mu);
    for (std::size_t i = 0; i < mu; ++i) {
        for (std::size_t j = 0; j < mu; ++j) {
            double d2 = 0.0;
            for (int c = 0; c < ws.M; ++c) {
                const double d = ws.vectors[i][c] - ws.vectors[j][c];
                d2 += d * d;
            }
            order[j] = {d2, j};
        }
        std::sort(order.begin(), order.end());
        nb.table[i].resize(T);
        for (int t = 0; t < T; ++t) nb.table[i][t] = order[t].second;
    }
    return nb;
}

}  // namespace moead
