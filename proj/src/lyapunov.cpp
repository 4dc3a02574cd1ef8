#include "ieae/lyapunov.hpp"

#include <cmath>
#include <limits>

namespace ieae {

namespace {

double dist(const PhasePoint& a, const PhasePoint& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return std::sqrt(s);
}

PhasePoint direction(const PhasePoint& from, const PhasePoint& to) {
    PhasePoint d(from.size());
    for (std::size_t i = 0; i < from.size(); ++i) d[i] = to[i] - from[i];
    return d;
}

bool within_angle(const PhasePoint& u, const PhasePoint& v, double cos_bound) {
    double dot = 0.0, nu = 0.0, nv = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        dot += u[i] * v[i];
        nu += u[i] * u[i];
        nv += v[i] * v[i];
    }
    if (nu == 0.0 || nv == 0.0) return false;
    return dot > cos_bound * std::sqrt(nu) * std::sqrt(nv);
}

}  // namespace

std::vector<PhasePoint> embed(const std::vector<double>& series, int m) {
    if (m < 1) throw std::invalid_argument("embedding dimension must be >= 1");
    if (series.size() < static_cast<std::size_t>(m))
        throw InsufficientDataError("series shorter than one embedding window");
    const std::size_t count = series.size() / m;
    std::vector<PhasePoint> points(count);
    for (std::size_t i = 0; i < count; ++i)
        points[i].assign(series.begin() + i * m, series.begin() + (i + 1) * m);
    return points;
}

std::size_t nearest_neighbor(const std::vector<PhasePoint>& points, std::size_t t,
                             const std::optional<PhasePoint>& prev_dir,
                             double theta_max_deg) {
    if (points.size() < 2) throw InsufficientDataError("need at least two phase points");
    const double cos_bound = std::cos(theta_max_deg * std::acos(-1.0) / 180.0);
    double best = std::numeric_limits<double>::infinity();
    std::size_t best_idx = points.size();
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (i == t) continue;
        if (prev_dir) {
            const PhasePoint cand = direction(points[t], points[i]);
            if (!within_angle(*prev_dir, cand, cos_bound)) continue;
        }
        const double d = dist(points[t], points[i]);
        if (d < best) {
            best = d;
            best_idx = i;
        }
    }
    if (best_idx == points.size())
        throw ReplacementFailureError("no candidate satisfies the angle bound");
    if (best == 0.0) throw DegenerateDistanceError("zero separation between phase points");
    return best_idx;
}

WolfResult wolf_lle(const std::vector<double>& series, const EmbeddingConfig& cfg) {
    if (cfg.epsilon <= 0.0) throw std::invalid_argument("epsilon must be positive");
    const auto points = embed(series, cfg.m);
    const std::size_t n = points.size();
    if (n < 3) throw InsufficientDataError("too few phase points for evolution");

    ReplacementLog log;
    double sum = 0.0;
    std::size_t t = 0;
    std::size_t tp = nearest_neighbor(points, t, std::nullopt, cfg.theta_max_deg);
    double sep = dist(points[t], points[tp]);
    std::size_t pair_start = t + 1;

    bool exhausted = false;
    while (!exhausted) {
        // Evolve both trajectories until the separation exceeds epsilon.
        double current = sep;
        bool grew = false;
        while (true) {
            if (t + 1 >= n || tp + 1 >= n) {
                exhausted = true;
                break;
            }
            ++t;
            ++tp;
            current = dist(points[t], points[tp]);
            if (current > cfg.epsilon) {
                grew = true;
                break;
            }
        }
        if (grew || (exhausted && current > 0.0 && t + 1 > pair_start)) {
            log.pairs.push_back({sep, current, pair_start});
            sum += std::log2(current / sep);
        }
        if (exhausted || t + 1 >= n) break;

        // Replace the neighbor, preferring the direction of the evolved pair.
        const PhasePoint prev_dir = direction(points[t], points[tp]);
        std::size_t next;
        try {
            next = nearest_neighbor(points, t, prev_dir, cfg.theta_max_deg);
        } catch (const ReplacementFailureError&) {
            next = nearest_neighbor(points, t, std::nullopt, cfg.theta_max_deg);
            ++log.fallbacks;
        }
        tp = next;
        sep = dist(points[t], points[tp]);
        pair_start = t + 1;
    }

    log.q = log.pairs.size();
    log.t_final = t + 1;
    if (log.q < 1) throw InsufficientDataError("no replacement step completed");
    if (log.t_final < 2) throw InsufficientDataError("trajectory never evolved");
    return {sum / static_cast<double>(log.t_final - 1), std::move(log)};
}

}  // namespace ieae
