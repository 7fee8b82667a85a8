#ifndef MINCUT_DECOMPOSE_HPP_
#define MINCUT_DECOMPOSE_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "mincut/graph.hpp"
#include "mincut/looped_graph.hpp"

namespace mincut {

/// Records how a part's expander guarantee was established.
struct CertStatus {
    enum class Kind { Exhaustive, Spectral, Singleton, Uncertified };

    Kind kind = Kind::Uncertified;
    double lambda2_estimate = 0.0;
    double residual = 0.0;

    static CertStatus exhaustive() { return {Kind::Exhaustive, 0.0, 0.0}; }
    static CertStatus spectral(double lambda2, double residual) {
        return {Kind::Spectral, lambda2, residual};
    }
    static CertStatus singleton() { return {Kind::Singleton, 0.0, 0.0}; }
    static CertStatus uncertified() { return {Kind::Uncertified, 0.0, 0.0}; }
};

const char* to_string(CertStatus::Kind kind);

/// Disjoint vertex sets covering V, in canonical order (ascending minimum
/// vertex id), with one certification status per part.
struct Partition {
    std::vector<VertexSet> parts;
    std::vector<std::uint32_t> part_of;
    std::vector<CertStatus> cert;

    /// Throws InvariantViolation unless the partition is disjoint,
    /// covering, canonically ordered, and consistent with part_of, and
    /// every certification status respects its structural constraints.
    void validate(const SimpleGraph& g, std::size_t exhaustive_limit) const;
};

struct DecompositionReport {
    double phi = 0.0;
    /// Sum over parts of |E(X, V \ X)|; each crossing edge counts twice.
    std::uint64_t crossing_edges = 0;
    std::map<std::size_t, std::size_t> part_sizes;
    /// Parts that failed certification and were split into singletons.
    std::size_t fallback_count = 0;
    std::size_t recursion_depth = 0;
};

struct DecomposeOptions {
    /// Largest part certified by subset enumeration.
    std::size_t exhaustive_limit = 18;
    /// Largest view for which the spectral certificate uses a dense
    /// eigensolver; beyond this a power-iteration estimate is used.
    std::size_t spectral_dense_limit = 1024;
};

struct SweepCut {
    VertexSet side;  // global ids
    double conductance;
};

/// Partitions V so that every part X satisfies the strong expander
/// guarantee: |E(S, X\S)| >= phi * min(vol_G(S), vol_G(X\S)) for every
/// proper nonempty S. Certification is exhaustive for small parts,
/// spectral otherwise; parts failing both are split into singletons so
/// the guarantee never ships unverified. phi >= 1 yields the trivial
/// all-singleton partition; phi = 0 yields one part per connected
/// component. Deterministic: identical inputs give identical partitions.
std::pair<Partition, DecompositionReport> expander_decompose(
    const SimpleGraph& g, double phi, const DecomposeOptions& options = {});

/// Best prefix cut of the vertices ordered by a deterministic power
/// iteration approximation of the normalized Laplacian's second
/// eigenvector (degrees include loop weights). Returns the minimum
/// conductance prefix when that conductance is strictly below phi.
std::optional<SweepCut> fiedler_sweep(const LoopedGraph& h, double phi);

/// Checks the strong guarantee for every proper nonempty subset of x by
/// enumeration. Throws TooLarge beyond the limit.
bool certify_exhaustive(const SimpleGraph& g, const VertexSet& x, double phi,
                        std::size_t exhaustive_limit = 18);

/// Cheeger certificate: conductance >= lambda2 / 2. Returns Spectral when
/// (lambda2_estimate - residual) / 2 >= phi, else Uncertified. Sound up
/// to floating-point residual accounting; the residual is recorded.
CertStatus certify_spectral(const LoopedGraph& h, double phi,
                            std::size_t dense_limit = 1024);

}  // namespace mincut

#endif  // MINCUT_DECOMPOSE_HPP_
