#include "moead/problems.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <span>
#include <stdexcept>

#include "moead/weights.hpp"

namespace moead {

namespace {

constexpr double kPi = std::numbers::pi;

// ---- DTLZ ----

double dtlz_g_rastrigin(std::span<const double> xm) {
    double s = 0.0;
    for (const double v : xm) {
        const double d = v - 0.5;
        s += d * d - std::cos(20.0 * kPi * d);
    }
    return 100.0 * (static_cast<double>(xm.size()) + s);
}

double dtlz_g_sphere(std::span<const double> xm) {
    double s = 0.0;
    for (const double v : xm) {
        const double d = v - 0.5;
        s += d * d;
    }
    return s;
}

ObjectiveVector eval_dtlz(const ProblemSpec& spec, const DecisionVector& z) {
    const int M = spec.M;
    const std::span<const double> xm(z.data() + (M - 1), spec.k);
    ObjectiveVector f(M);
    if (spec.id == ProblemId::dtlz1) {
        const double g = dtlz_g_rastrigin(xm);
        for (int m = 0; m < M; ++m) {
            double v = 0.5 * (1.0 + g);
            for (int i = 0; i < M - 1 - m; ++i) v *= z[i];
            if (m > 0) v *= 1.0 - z[M - 1 - m];
            f[m] = v;
        }
        return f;
    }
    const double g = spec.id == ProblemId::dtlz3 ? dtlz_g_rastrigin(xm) : dtlz_g_sphere(xm);
    const double alpha = spec.id == ProblemId::dtlz4 ? 100.0 : 1.0;
    auto pos = [&](int i) { return alpha == 1.0 ? z[i] : std::pow(z[i], alpha); };
    for (int m = 0; m < M; ++m) {
        double v = 1.0 + g;
        for (int i = 0; i < M - 1 - m; ++i) v *= std::cos(pos(i) * kPi / 2.0);
        if (m > 0) v *= std::sin(pos(M - 1 - m) * kPi / 2.0);
        f[m] = v;
    }
    return f;
}

// ---- WFG transformation functions ----

double correct01(double v) { return v < 0.0 ? 0.0 : (v > 1.0 ? 1.0 : v); }

double b_poly(double y, double alpha) { return correct01(std::pow(y, alpha)); }

double b_flat(double y, double a, double b, double c) {
    const double v = a + std::min(0.0, std::floor(y - b)) * (a * (b - y) / b) -
                     std::min(0.0, std::floor(c - y)) * ((1.0 - a) * (y - c) / (1.0 - c));
    return correct01(v);
}

double b_param(double y, double u, double a, double b, double c) {
    const double v = a - (1.0 - 2.0 * u) * std::fabs(std::floor(0.5 - u) + a);
    return correct01(std::pow(y, b + (c - b) * v));
}

double s_linear(double y, double a) {
    return correct01(std::fabs(y - a) / std::fabs(std::floor(a - y) + a));
}

double s_decept(double y, double a, double b, double c) {
    const double t1 = std::floor(y - a + b) * (1.0 - c + (a - b) / b) / (a - b);
    const double t2 = std::floor(a + b - y) * (1.0 - c + (1.0 - a - b) / b) / (1.0 - a - b);
    return correct01(1.0 + (std::fabs(y - a) - b) * (t1 + t2 + 1.0 / b));
}

double s_multi(double y, double a, double b, double c) {
    const double t1 = std::fabs(y - c) / (2.0 * (std::floor(c - y) + c));
    const double t2 = (4.0 * a + 2.0) * kPi * (0.5 - t1);
    return correct01((1.0 + std::cos(t2) + 4.0 * b * t1 * t1) / (b + 2.0));
}

double r_sum(std::span<const double> ys, std::span<const double> ws) {
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < ys.size(); ++i) {
        num += ws[i] * ys[i];
        den += ws[i];
    }
    return correct01(num / den);
}

double r_sum_unit(std::span<const double> ys) {
    double num = 0.0;
    for (const double y : ys) num += y;
    return correct01(num / static_cast<double>(ys.size()));
}

double r_nonsep(std::span<const double> ys, int a) {
    const std::size_t n = ys.size();
    double num = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        num += ys[j];
        for (int s = 0; s <= a - 2; ++s) num += std::fabs(ys[j] - ys[(j + s + 1) % n]);
    }
    const double half = std::ceil(a / 2.0);
    const double den = (static_cast<double>(n) / a) * half * (1.0 + 2.0 * a - 2.0 * half);
    return correct01(num / den);
}

// group-wise weighted-sum reduction to M values: M-1 position groups of size
// k/(M-1), then the whole distance tail
std::vector<double> reduce_sum(const std::vector<double>& y, int k, int M, bool index_weights) {
    std::vector<double> t(M);
    const int gs = k / (M - 1);
    auto weighted = [&](int lo, int hi) {
        double num = 0.0, den = 0.0;
        for (int i = lo; i < hi; ++i) {
            const double w = index_weights ? 2.0 * (i + 1) : 1.0;
            num += w * y[i];
            den += w;
        }
        return correct01(num / den);
    };
    for (int j = 0; j < M - 1; ++j) t[j] = weighted(j * gs, (j + 1) * gs);
    t[M - 1] = weighted(k, static_cast<int>(y.size()));
    return t;
}

std::vector<double> reduce_nonsep(const std::vector<double>& y, int k, int M, int l) {
    std::vector<double> t(M);
    const int gs = k / (M - 1);
    for (int j = 0; j < M - 1; ++j)
        t[j] = r_nonsep(std::span<const double>(y.data() + j * gs, gs), gs);
    t[M - 1] = r_nonsep(std::span<const double>(y.data() + k, y.size() - k), l);
    return t;
}

// ---- WFG shape functions ----

std::vector<double> shape_concave(const std::vector<double>& x, int M) {
    std::vector<double> h(M);
    for (int j = 0; j < M; ++j) {
        double v = 1.0;
        for (int i = 0; i < M - 1 - j; ++i) v *= std::sin(x[i] * kPi / 2.0);
        if (j > 0) v *= std::cos(x[M - 1 - j] * kPi / 2.0);
        h[j] = v;
    }
    return h;
}

std::vector<double> shape_convex(const std::vector<double>& x, int M) {
    std::vector<double> h(M);
    for (int j = 0; j < M; ++j) {
        double v = 1.0;
        for (int i = 0; i < M - 1 - j; ++i) v *= 1.0 - std::cos(x[i] * kPi / 2.0);
        if (j > 0) v *= 1.0 - std::sin(x[M - 1 - j] * kPi / 2.0);
        h[j] = v;
    }
    return h;
}

std::vector<double> shape_linear(const std::vector<double>& x, int M) {
    std::vector<double> h(M);
    for (int j = 0; j < M; ++j) {
        double v = 1.0;
        for (int i = 0; i < M - 1 - j; ++i) v *= x[i];
        if (j > 0) v *= 1.0 - x[M - 1 - j];
        h[j] = v;
    }
    return h;
}

double shape_mixed(double x1, double alpha, double a) {
    const double t = 2.0 * a * kPi;
    return std::pow(1.0 - x1 - std::cos(t * x1 + kPi / 2.0) / t, alpha);
}

double shape_disc(double x1, double alpha, double beta, double a) {
    const double c = std::cos(a * std::pow(x1, beta) * kPi);
    return 1.0 - std::pow(x1, alpha) * c * c;
}

ObjectiveVector wfg_assemble(const std::vector<double>& t, const ProblemSpec& spec) {
    const int M = spec.M;
    std::vector<double> x(M);
    for (int i = 0; i + 1 < M; ++i) {
        // WFG3 degenerates all but the first position coordinate
        const double a = (spec.id == ProblemId::wfg3 && i > 0) ? 0.0 : 1.0;
        x[i] = std::max(t[M - 1], a) * (t[i] - 0.5) + 0.5;
    }
    x[M - 1] = t[M - 1];

    std::vector<double> h;
    switch (spec.id) {
        case ProblemId::wfg1:
            h = shape_convex(x, M);
            h[M - 1] = shape_mixed(x[0], 1.0, 5.0);
            break;
        case ProblemId::wfg2:
            h = shape_convex(x, M);
            h[M - 1] = shape_disc(x[0], 1.0, 1.0, 5.0);
            break;
        case ProblemId::wfg3: h = shape_linear(x, M); break;
        default: h = shape_concave(x, M); break;
    }

    ObjectiveVector f(M);
    for (int m = 0; m < M; ++m) f[m] = x[M - 1] + 2.0 * (m + 1) * h[m];
    return f;
}

ObjectiveVector eval_wfg(const ProblemSpec& spec, const DecisionVector& z) {
    const int n = spec.D;
    const int k = spec.k;
    const int M = spec.M;
    std::vector<double> y(n);
    for (int i = 0; i < n; ++i) y[i] = z[i] / (2.0 * (i + 1));

    std::vector<double> t;
    switch (spec.id) {
        case ProblemId::wfg1: {
            for (int i = k; i < n; ++i) y[i] = s_linear(y[i], 0.35);
            for (int i = k; i < n; ++i) y[i] = b_flat(y[i], 0.8, 0.75, 0.85);
            for (int i = 0; i < n; ++i) y[i] = b_poly(y[i], 0.02);
            t = reduce_sum(y, k, M, true);
            break;
        }
        case ProblemId::wfg2:
        case ProblemId::wfg3: {
            for (int i = k; i < n; ++i) y[i] = s_linear(y[i], 0.35);
            std::vector<double> y2(k + spec.l / 2);
            for (int i = 0; i < k; ++i) y2[i] = y[i];
            for (int i = 0; i < spec.l / 2; ++i) {
                const double pair[2] = {y[k + 2 * i], y[k + 2 * i + 1]};
                y2[k + i] = r_nonsep(std::span<const double>(pair, 2), 2);
            }
            t = reduce_sum(y2, k, M, false);
            break;
        }
        case ProblemId::wfg4: {
            for (int i = 0; i < n; ++i) y[i] = s_multi(y[i], 30.0, 10.0, 0.35);
            t = reduce_sum(y, k, M, false);
            break;
        }
        case ProblemId::wfg5: {
            for (int i = 0; i < n; ++i) y[i] = s_decept(y[i], 0.35, 0.001, 0.05);
            t = reduce_sum(y, k, M, false);
            break;
        }
        case ProblemId::wfg6: {
            for (int i = k; i < n; ++i) y[i] = s_linear(y[i], 0.35);
            t = reduce_nonsep(y, k, M, spec.l);
            break;
        }
        case ProblemId::wfg7: {
            std::vector<double> y1 = y;
            for (int i = 0; i < k; ++i) {
                const double u = r_sum_unit(std::span<const double>(y.data() + i + 1, n - i - 1));
                y1[i] = b_param(y[i], u, 0.98 / 49.98, 0.02, 50.0);
            }
            for (int i = k; i < n; ++i) y1[i] = s_linear(y1[i], 0.35);
            t = reduce_sum(y1, k, M, false);
            break;
        }
        case ProblemId::wfg8: {
            std::vector<double> y1 = y;
            for (int i = k; i < n; ++i) {
                const double u = r_sum_unit(std::span<const double>(y.data(), i));
                y1[i] = b_param(y[i], u, 0.98 / 49.98, 0.02, 50.0);
            }
            for (int i = k; i < n; ++i) y1[i] = s_linear(y1[i], 0.35);
            t = reduce_sum(y1, k, M, false);
            break;
        }
        case ProblemId::wfg9: {
            std::vector<double> y1 = y;
            for (int i = 0; i < n - 1; ++i) {
                const double u = r_sum_unit(std::span<const double>(y.data() + i + 1, n - i - 1));
                y1[i] = b_param(y[i], u, 0.98 / 49.98, 0.02, 50.0);
            }
            for (int i = 0; i < k; ++i) y1[i] = s_decept(y1[i], 0.35, 0.001, 0.05);
            for (int i = k; i < n; ++i) y1[i] = s_multi(y1[i], 30.0, 95.0, 0.35);
            t = reduce_nonsep(y1, k, M, spec.l);
            break;
        }
        default: throw std::logic_error("not a WFG problem");
    }
    return wfg_assemble(t, spec);
}

const std::vector<std::string> kNames = {"dtlz1", "dtlz2", "dtlz3", "dtlz4", "wfg1", "wfg2",
                                         "wfg3",  "wfg4",  "wfg5",  "wfg6",  "wfg7", "wfg8",
                                         "wfg9"};

}  // namespace

const std::vector<std::string>& problem_names() { return kNames; }

ProblemSpec make_problem(const std::string& name, int M) {
    if (M < 2 || M > 5) throw std::invalid_argument("objective count must be in [2, 5]");
    std::string id_name = name;
    std::transform(id_name.begin(), id_name.end(), id_name.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    const auto it = std::find(kNames.begin(), kNames.end(), id_name);
    if (it == kNames.end()) throw std::invalid_argument("unknown problem '" + name + "'");
    ProblemSpec spec;
    spec.id = static_cast<ProblemId>(it - kNames.begin());
    spec.name = id_name;
    spec.M = M;
    const bool dtlz = spec.id <= ProblemId::dtlz4;
    if (dtlz) {
        spec.k = spec.id == ProblemId::dtlz1 ? 5 : 10;
        spec.l = 0;
        spec.D = M + spec.k - 1;
        spec.lower.assign(spec.D, 0.0);
        spec.upper.assign(spec.D, 1.0);
        const double nad = spec.id == ProblemId::dtlz1 ? 0.5 : 1.0;
        spec.ideal.assign(M, 0.0);
        spec.nadir.assign(M, nad);
    } else {
        spec.k = 2 * (M - 1);
        spec.l = 20;
        spec.D = spec.k + spec.l;
        spec.lower.assign(spec.D, 0.0);
        spec.upper.resize(spec.D);
        for (int i = 0; i < spec.D; ++i) spec.upper[i] = 2.0 * (i + 1);
        spec.ideal.assign(M, 0.0);
        spec.nadir.resize(M);
        for (int m = 0; m < M; ++m) spec.nadir[m] = 2.0 * (m + 1);
    }
    return spec;
}

bool has_analytic_front(const ProblemSpec& spec) {
    return spec.id != ProblemId::wfg1 && spec.id != ProblemId::wfg2 && spec.id != ProblemId::wfg3;
}

ObjectiveVector evaluate(const ProblemSpec& spec, const DecisionVector& x) {
    if (static_cast<int>(x.size()) != spec.D)
        throw std::invalid_argument("decision vector has wrong dimension");
    for (int i = 0; i < spec.D; ++i)
        if (x[i] < spec.lower[i] || x[i] > spec.upper[i])
            throw std::invalid_argument("decision vector out of bounds at index " +
                                        std::to_string(i));
    return spec.id <= ProblemId::dtlz4 ? eval_dtlz(spec, x) : eval_wfg(spec, x);
}

ReferenceSet reference_front(const ProblemSpec& spec, std::size_t n_points) {
    if (!has_analytic_front(spec))
        throw std::invalid_argument(spec.name + " has no analytic front");
    if (n_points < 1) throw std::invalid_argument("front size must be positive");
    int H = 1;
    while (simplex_lattice_size(spec.M, H) < n_points) ++H;
    const WeightSet ws = das_dennis(spec.M, H);
    ReferenceSet ref;
    ref.points.reserve(ws.vectors.size());
    for (const auto& w : ws.vectors) {
        ObjectiveVector f(spec.M);
        if (spec.id == ProblemId::dtlz1) {
            for (int m = 0; m < spec.M; ++m) f[m] = 0.5 * w[m];
        } else {
            double norm = 0.0;
            for (const double v : w) norm += v * v;
            norm = std::sqrt(norm);
            const bool wfg = spec.id >= ProblemId::wfg4;
            for (int m = 0; m < spec.M; ++m)
                f[m] = (wfg ? 2.0 * (m + 1) : 1.0) * w[m] / norm;
        }
        ref.points.push_back(std::move(f));
    }
    return ref;
}

}  // namespace moead
