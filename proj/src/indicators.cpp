#include "moead/indicators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace moead {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// Dimension-sweep hypervolume (Fonseca/Paquete/Lopez-Ibanez variant 3).
// Points are shifted so the reference point is the origin; every coordinate of
// a contributing point is then negative.
struct HvSweep {
    struct Node {
        std::vector<double> point;
        std::vector<Node*> next, prev;
        std::vector<double> area, volume;
        int ignore = 0;
    };

    int d;
    Node sentinel;
    std::vector<Node> nodes;

    explicit HvSweep(const std::vector<ObjectiveVector>& shifted) : d(0) {
        d = static_cast<int>(shifted.empty() ? 0 : shifted[0].size());
        sentinel.point.assign(d, kNegInf);
        sentinel.next.assign(d, &sentinel);
        sentinel.prev.assign(d, &sentinel);
        sentinel.area.assign(d, 0.0);
        sentinel.volume.assign(d, 0.0);
        nodes.resize(shifted.size());
        for (std::size_t i = 0; i < shifted.size(); ++i) {
            nodes[i].point = shifted[i];
            nodes[i].next.assign(d, nullptr);
            nodes[i].prev.assign(d, nullptr);
            nodes[i].area.assign(d, 0.0);
            nodes[i].volume.assign(d, 0.0);
        }
        std::vector<Node*> order(nodes.size());
        for (std::size_t i = 0; i < nodes.size(); ++i) order[i] = &nodes[i];
        for (int dim = 0; dim < d; ++dim) {
            std::stable_sort(order.begin(), order.end(), [dim](const Node* a, const Node* b) {
                return a->point[dim] < b->point[dim];
            });
            Node* prev = &sentinel;
            for (Node* n : order) {
                prev->next[dim] = n;
                n->prev[dim] = prev;
                prev = n;
            }
            prev->next[dim] = &sentinel;
            sentinel.prev[dim] = prev;
        }
    }

    static void remove(Node* n, int index, std::vector<double>& bounds) {
        for (int i = 0; i < index; ++i) {
            n->prev[i]->next[i] = n->next[i];
            n->next[i]->prev[i] = n->prev[i];
            if (bounds[i] > n->point[i]) bounds[i] = n->point[i];
        }
    }

    static void reinsert(Node* n, int index, std::vector<double>& bounds) {
        for (int i = 0; i < index; ++i) {
            n->prev[i]->next[i] = n;
            n->next[i]->prev[i] = n;
            if (bounds[i] > n->point[i]) bounds[i] = n->point[i];
        }
    }

    double run() {
        if (nodes.empty()) return 0.0;
        std::vector<double> bounds(d, kNegInf);
        return recursive(d - 1, nodes.size(), bounds);
    }

    double recursive(int dim, std::size_t length, std::vector<double>& bounds) {
        Node* const snt = &sentinel;
        if (length == 0) return 0.0;
        if (dim == 0) return -snt->next[0]->point[0];
        if (dim == 1) {
            Node* q = snt->next[1];
            double h = q->point[0];
            Node* p = q->next[1];
            double hvol = 0.0;
            while (p != snt) {
                hvol += h * (q->point[1] - p->point[1]);
                if (p->point[0] < h) h = p->point[0];
                q = p;
                p = q->next[1];
            }
            hvol += h * q->point[1];
            return hvol;
        }

        double hvol = 0.0;
        Node* p = snt;
        Node* q = p->prev[dim];
        while (q != snt) {
            if (q->ignore < dim) q->ignore = 0;
            q = q->prev[dim];
        }
        q = p->prev[dim];
        while (length > 1 &&
               (q->point[dim] > bounds[dim] || q->prev[dim]->point[dim] >= bounds[dim])) {
            p = q;
            remove(p, dim, bounds);
            q = p->prev[dim];
            --length;
        }
        Node* q_prev = q->prev[dim];
        if (length > 1) {
            hvol = q_prev->volume[dim] + q_prev->area[dim] * (q->point[dim] - q_prev->point[dim]);
        } else {
            q->area[0] = 1.0;
            for (int i = 1; i <= dim; ++i) q->area[i] = q->area[i - 1] * -q->point[i - 1];
        }
        q->volume[dim] = hvol;
        if (q->ignore >= dim) {
            q->area[dim] = q_prev->area[dim];
        } else {
            q->area[dim] = recursive(dim - 1, length, bounds);
            if (q->area[dim] <= q_prev->area[dim]) q->ignore = dim;
        }
        while (p != snt) {
            const double pd = p->point[dim];
            hvol += q->area[dim] * (pd - q->point[dim]);
            bounds[dim] = pd;
            reinsert(p, dim, bounds);
            ++length;
            q = p;
            p = p->next[dim];
            q->volume[dim] = hvol;
            if (q->ignore >= dim) {
                q->area[dim] = q->prev[dim]->area[dim];
            } else {
                q->area[dim] = recursive(dim - 1, length, bounds);
                if (q->area[dim] <= q->prev[dim]->area[dim]) q->ignore = dim;
            }
        }
        hvol -= q->area[dim] * q->point[dim];
        return hvol;
    }
};

void check_set(const std::vector<ObjectiveVector>& pts, std::size_t m, const char* what) {
    for (const auto& p : pts) {
        if (p.size() != m) throw std::invalid_argument(std::string(what) + ": ragged point set");
        for (const double v : p)
            if (!std::isfinite(v))
                throw std::invalid_argument(std::string(what) + ": non-finite coordinate");
    }
}

}  // namespace

double hypervolume_raw(const std::vector<ObjectiveVector>& points, const ObjectiveVector& ref) {
    const std::size_t m = ref.size();
    if (m < 2) throw std::invalid_argument("hypervolume needs at least 2 objectives");
    check_set(points, m, "hypervolume");
    std::vector<ObjectiveVector> shifted;
    shifted.reserve(points.size());
    for (const auto& p : points) {
        bool inside = true;
        for (std::size_t j = 0; j < m && inside; ++j) inside = p[j] < ref[j];
        if (!inside) continue;  // contributes nothing
        ObjectiveVector s(m);
        for (std::size_t j = 0; j < m; ++j) s[j] = p[j] - ref[j];
        shifted.push_back(std::move(s));
    }
    if (shifted.empty()) return 0.0;
    HvSweep sweep(shifted);
    return sweep.run();
}

double hypervolume(const std::vector<ObjectiveVector>& points, const ObjectiveVector& ideal,
                   const ObjectiveVector& nadir) {
    const std::size_t m = ideal.size();
    if (nadir.size() != m) throw std::invalid_argument("ideal/nadir dimension mismatch");
    check_set(points, m, "hypervolume");
    std::vector<ObjectiveVector> kept;
    kept.reserve(points.size());
    for (const auto& p : points) {
        ObjectiveVector q(m);
        bool keep = true;
        for (std::size_t j = 0; j < m; ++j) {
            q[j] = (p[j] - ideal[j]) / std::max(nadir[j] - ideal[j], 1e-12);
            if (q[j] >= kHvRefCoord) keep = false;
        }
        if (keep) kept.push_back(std::move(q));
    }
    if (kept.empty()) return 0.0;
    const ObjectiveVector ref(m, kHvRefCoord);
    return hypervolume_raw(kept, ref) / std::pow(kHvRefCoord, static_cast<double>(m));
}

namespace {

double mean_min_distance(const std::vector<ObjectiveVector>& from,
                         const std::vector<ObjectiveVector>& to) {
    if (from.empty() || to.empty())
        throw std::invalid_argument("distance indicators need nonempty sets");
    const std::size_t m = from[0].size();
    check_set(from, m, "distance indicator");
    check_set(to, m, "distance indicator");
    double total = 0.0;
    for (const auto& a : from) {
        double best = std::numeric_limits<double>::infinity();
        for (const auto& b : to) {
            double d2 = 0.0;
            for (std::size_t j = 0; j < m; ++j) {
                const double d = a[j] - b[j];
                d2 += d * d;
            }
            best = std::min(best, d2);
        }
        total += std::sqrt(best);
    }
    return total / static_cast<double>(from.size());
}

}  // namespace

double gd(const std::vector<ObjectiveVector>& a, const std::vector<ObjectiveVector>& ref) {
    return mean_min_distance(a, ref);
}

double igd(const std::vector<ObjectiveVector>& a, const std::vector<ObjectiveVector>& ref) {
    return mean_min_distance(ref, a);
}

double ms(const std::vector<ObjectiveVector>& a) {
    if (a.empty()) throw std::invalid_argument("spread of an empty set is undefined");
    const std::size_t m = a[0].size();
    check_set(a, m, "spread");
    double sum = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
        double lo = a[0][j], hi = a[0][j];
        for (const auto& p : a) {
            lo = std::min(lo, p[j]);
            hi = std::max(hi, p[j]);
        }
        sum += (hi - lo) * (hi - lo);
    }
    return std::sqrt(sum);
}

}  // namespace moead
