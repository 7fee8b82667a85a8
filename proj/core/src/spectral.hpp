#ifndef MINCUT_SRC_SPECTRAL_HPP_
#define MINCUT_SRC_SPECTRAL_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "mincut/looped_graph.hpp"

namespace mincut::spectral {

// Second-smallest eigenvalue of the normalized Laplacian of a looped
// view, with the residual of the computed eigenpair and the vertex
// embedding y_i = v2_i / sqrt(degree_i) used for sweep ordering.
struct Lambda2Estimate {
    double lambda2 = 0.0;
    double residual = 0.0;
    std::vector<double> embedding;
};

// Deterministic power iteration on 2I - L, deflated against the exact
// stationary vector. Start vector is a fixed hash of global vertex ids.
// Returns nullopt when the residual target is not reached within the
// iteration cap.
std::optional<Lambda2Estimate> power_iteration_lambda2(const LoopedGraph& h);

// Dense symmetric eigensolve of L; exact up to floating point, residual
// computed explicitly. Intended for views up to a few hundred vertices.
Lambda2Estimate dense_lambda2(const LoopedGraph& h);

// 64-bit mixing function used for deterministic start vectors and
// counter-based pseudo-randomness.
constexpr std::uint64_t mix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

// mix64 output mapped to [0, 1).
constexpr double unit_double(std::uint64_t h) {
    return static_cast<double>(h >> 11) * 0x1.0p-53;
}

}  // namespace mincut::spectral

#endif  // MINCUT_SRC_SPECTRAL_HPP_
