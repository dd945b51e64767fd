#pragma once

// Brute-force reference implementations. Deliberately naive: plain recursion,
// one full RDP run per grid level, no shared code with the library beyond the
// polyline type.

#include "capcheck/chart_model.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using capcheck::NormalizedPolyline;
using capcheck::Vertex;

// Offsets this small are rounding noise on collinear input, never a feature.
inline constexpr double kCollinear = 1e-12;
inline constexpr int kLevels = 26;

inline double level_eps(int k) { return k / 100.0; }

inline double dist_to_line(const Vertex& a, const Vertex& b, const Vertex& p) {
    const double dx = b.x - a.x, dy = b.y - a.y;
    const double len = std::sqrt(dx * dx + dy * dy);
    if (len == 0) return std::sqrt((p.x - a.x) * (p.x - a.x) + (p.y - a.y) * (p.y - a.y));
    return std::fabs(dx * (p.y - a.y) - dy * (p.x - a.x)) / len;
}

inline void rdp(const std::vector<Vertex>& v, std::size_t a, std::size_t b, double eps, std::vector<bool>& keep) {
    if (b <= a + 1) return;
    std::size_t best = a + 1;
    double dmax = -1;
    for (std::size_t i = a + 1; i < b; ++i) {
        const double d = dist_to_line(v[a], v[b], v[i]);
        if (d > dmax) {
            dmax = d;
            best = i;
        }
    }
    if (dmax > std::max(eps, kCollinear)) {
        keep[best] = true;
        rdp(v, a, best, eps, keep);
        rdp(v, best, b, eps, keep);
    }
}

inline std::vector<std::size_t> retained(const NormalizedPolyline& p, double eps) {
    const auto n = p.vertices.size();
    std::vector<bool> keep(n, false);
    keep[0] = keep[n - 1] = true;
    rdp(p.vertices, 0, n - 1, eps, keep);
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < n; ++i)
        if (keep[i]) out.push_back(i);
    return out;
}

/// retainedAt[k][i]: vertex i survives RDP at eps = k/100.
inline std::vector<std::vector<bool>> sweep(const NormalizedPolyline& p) {
    std::vector<std::vector<bool>> out(kLevels, std::vector<bool>(p.size(), false));
    for (int k = 0; k < kLevels; ++k)
        for (auto i : retained(p, level_eps(k))) out[k][i] = true;
    return out;
}

/// Largest grid level at which each vertex survives; 0 if it never does.
inline std::vector<int> persistence_levels(const NormalizedPolyline& p) {
    const auto s = sweep(p);
    std::vector<int> out(p.size(), 0);
    for (std::size_t i = 0; i < p.size(); ++i)
        for (int k = 0; k < kLevels; ++k)
            if (s[k][i]) out[i] = k;
    return out;
}

/// Every (i, j) that is a pair of consecutive survivors at some level.
inline std::set<std::pair<std::size_t, std::size_t>> consecutive_pairs(const NormalizedPolyline& p) {
    std::set<std::pair<std::size_t, std::size_t>> out;
    for (int k = 0; k < kLevels; ++k) {
        const auto r = retained(p, level_eps(k));
        for (std::size_t c = 0; c + 1 < r.size(); ++c) out.insert({r[c], r[c + 1]});
    }
    return out;
}

/// Number of grid levels at which i and j are consecutive survivors.
inline int consecutive_levels(const NormalizedPolyline& p, std::size_t i, std::size_t j) {
    int count = 0;
    for (int k = 0; k < kLevels; ++k) {
        const auto r = retained(p, level_eps(k));
        for (std::size_t c = 0; c + 1 < r.size(); ++c)
            if (r[c] == i && r[c + 1] == j) ++count;
    }
    return count;
}

/// True if any vertex strictly between i and j survives at some level.
inline bool interior_ever_retained(const NormalizedPolyline& p, std::size_t i, std::size_t j) {
    for (auto k : retained(p, 0.0))
        if (k > i && k < j) return true;
    return false;
}

} // namespace oracle
