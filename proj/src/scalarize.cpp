#include "moead/scalarize.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace moead {

namespace {

void check_dims(const ObjectiveVector& f, const std::vector<double>& w, const ObjectiveVector& z) {
    if (f.size() != w.size() || f.size() != z.size() || f.empty())
        throw std::invalid_argument("scalarizer arguments must share a nonzero dimension");
}

}  // namespace

std::string to_string(ScalarizerKind kind) {
    switch (kind) {
        case ScalarizerKind::chm: return "chm";
        case ScalarizerKind::chd: return "chd";
        case ScalarizerKind::pbi: return "pbi";
    }
    throw std::logic_error("unknown scalarizer kind");
}

ScalarizerKind parse_scalarizer(const std::string& name) {
    if (name == "chm") return ScalarizerKind::chm;
    if (name == "chd") return ScalarizerKind::chd;
    if (name == "pbi") return ScalarizerKind::pbi;
    throw std::invalid_argument("unknown scalarizer '" + name + "' (expected chm, chd or pbi)");
}

double g_chm(const ObjectiveVector& f, const std::vector<double>& w, const ObjectiveVector& z) {
    check_dims(f, w, z);
    double g = -1.0;
    for (std::size_t i = 0; i < f.size(); ++i) g = std::max(g, w[i] * std::fabs(f[i] - z[i]));
    return g;
}

double g_chd(const ObjectiveVector& f, const std::vector<double>& w, const ObjectiveVector& z) {
    check_dims(f, w, z);
    double g = -1.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
        const double wi = std::max(w[i], 1e-6);
        g = std::max(g, std::fabs(f[i] - z[i]) / wi);
    }
    return g;
}

double g_pbi(const ObjectiveVector& f, const std::vector<double>& w, const ObjectiveVector& z,
             double theta) {
    check_dims(f, w, z);
    double norm2 = 0.0;
    for (const double wi : w) norm2 += wi * wi;
    if (norm2 <= 0.0) throw std::invalid_argument("pbi requires a nonzero weight vector");
    const double norm = std::sqrt(norm2);
    double dot = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) dot += (f[i] - z[i]) * w[i];
    const double d1 = std::fabs(dot) / norm;
    double d2sq = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
        const double r = f[i] - z[i] - d1 * w[i] / norm;
        d2sq += r * r;
    }
    return d1 + theta * std::sqrt(d2sq);
}

double Scalarizer::value(const ObjectiveVector& f, const std::vector<double>& w,
                         const ObjectiveVector& z) const {
    switch (kind) {
        case ScalarizerKind::chm: return g_chm(f, w, z);
        case ScalarizerKind::chd: return g_chd(f, w, z);
        case ScalarizerKind::pbi: return g_pbi(f, w, z, theta);
    }
    throw std::logic_error("unknown scalarizer kind");
}

void update_ideal(ObjectiveVector& z, const ObjectiveVector& f) {
    if (z.size() != f.size())
        throw std::invalid_argument("ideal point and objectives must share a dimension");
    for (std::size_t i = 0; i < z.size(); ++i) z[i] = std::min(z[i], f[i]);
}

void normalize_objectives_into(const ObjectiveVector& f, const ObjectiveVector& ideal,
                               const ObjectiveVector& nadir, ObjectiveVector& out) {
    if (f.size() != ideal.size() || f.size() != nadir.size())
        throw std::invalid_argument("normalization arguments must share a dimension");
    out.resize(f.size());
    for (std::size_t i = 0; i < f.size(); ++i)
        out[i] = (f[i] - ideal[i]) / std::max(nadir[i] - ideal[i], 1e-12);
}

ObjectiveVector normalize_objectives(const ObjectiveVector& f, const ObjectiveVector& ideal,
                                     const ObjectiveVector& nadir) {
    ObjectiveVector out;
    normalize_objectives_into(f, ideal, nadir, out);
    return out;
}

}  // namespace moead
