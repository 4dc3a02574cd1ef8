#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "ieae/keystream.hpp"

namespace ieae {

struct InsufficientDataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DegenerateDistanceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ReplacementFailureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EmbeddingConfig {
    int m = 2;                    // embedding dimension
    double epsilon = 0.0;         // evolution threshold, signal units
    double theta_max_deg = 30.0;  // replacement angle bound
};

using PhasePoint = std::vector<double>;

// Non-overlapping windows: Y_i = [z_{(i-1)m+1}, ..., z_{(i-1)m+m}].
std::vector<PhasePoint> embed(const std::vector<double>& series, int m);

// Index of the nearest point to points[t] (excluding t itself), ties to the
// smallest index. With prev_dir set, only candidates within theta_max_deg of
// that direction qualify; throws ReplacementFailureError when none do.
// A zero best distance is a DegenerateDistanceError.
std::size_t nearest_neighbor(const std::vector<PhasePoint>& points, std::size_t t,
                             const std::optional<PhasePoint>& prev_dir,
                             double theta_max_deg);

struct Replacement {
    double initial_sep;  // L_k
    double final_sep;    // L'_k
    std::size_t start_index;  // trajectory index (1-based) where the pair was formed
};

struct ReplacementLog {
    std::vector<Replacement> pairs;
    std::size_t q = 0;        // replacement count
    std::size_t t_final = 0;  // 1-based trajectory index at termination
    std::size_t fallbacks = 0;  // angle-constraint failures resolved unconstrained
};

struct WolfResult {
    double lambda;
    ReplacementLog log;
};

// Evolution/replacement estimator of the largest Lyapunov exponent:
// lambda = (1 / (t_final - 1)) * sum log2(L'_k / L_k).
WolfResult wolf_lle(const std::vector<double>& series, const EmbeddingConfig& cfg);

}  // namespace ieae
