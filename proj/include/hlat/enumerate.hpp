#pragma once

#include "hlat/config.hpp"
#include "hlat/lattice.hpp"

#include <atomic>
#include <cstdint>
#include <memory>
#include <vector>

namespace hlat {

// Node budget for coset enumeration.  A node is one candidate coordinate
// whose partial norm gets evaluated; the budget aborts runaway searches
// (error, never a silent truncation).  Result content never depends on the
// budget; only whether the computation completes.
struct EnumBudget {
    std::uint64_t max_nodes = kDefaultMaxNodes;
};

// Shared node counter so that a sweep of many enumerations can enforce one
// global budget.  Enforcement is cooperative (checked in batches); the final
// count is exact.
class NodeCounter {
public:
    explicit NodeCounter(std::uint64_t max_nodes) : max_nodes_(max_nodes) {}

    void charge(std::uint64_t n);
    std::uint64_t used() const { return used_.load(std::memory_order_relaxed); }
    std::uint64_t max_nodes() const { return max_nodes_; }

private:
    std::uint64_t max_nodes_;
    std::atomic<std::uint64_t> used_{0};
};

struct CosetMinResult {
    Int min_norm;
    std::vector<Vec> minimizers;  // complete, sorted lexicographically
    std::uint64_t nodes_visited = 0;
};

// Reusable exact enumeration engine bound to one lattice: the integer-scaled
// form derived from the LDL^T factorization is built once and shared across
// calls (const methods are safe to call concurrently).
class CosetEnumerator {
public:
    explicit CosetEnumerator(const Lattice& lattice);
    ~CosetEnumerator();
    CosetEnumerator(CosetEnumerator&&) noexcept;
    CosetEnumerator& operator=(CosetEnumerator&&) noexcept;

    // Minimum of |z^2| over the coset z in w + 2L with the complete set of
    // minimizers.  Exact branch-and-bound; completeness is unconditional.
    CosetMinResult coset_min(const Vec& w, NodeCounter& counter) const;

    // All z in w + 2L with |z^2| <= bound, sorted lexicographically.
    std::vector<Vec> enumerate_below(const Vec& w, const Int& bound, NodeCounter& counter) const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

CosetMinResult coset_min(const Lattice& lattice, const Vec& w, const EnumBudget& budget = {});
CosetMinResult coset_min(const Lattice& lattice, const Vec& w, const EnumBudget& budget,
                         NodeCounter& counter);

// All z in w + 2L with |z^2| <= bound, sorted lexicographically.
std::vector<Vec> enumerate_coset_below(const Lattice& lattice, const Vec& w, const Int& bound,
                                       const EnumBudget& budget = {});

// Independent reference: exhaustive box search over u in [-box_radius,
// box_radius]^rank, z = w + 2u.  Rank <= 6 only; used to cross-check the
// branch-and-bound engine.  box_radius = 0 picks a radius guaranteed to
// contain every coset minimizer.
CosetMinResult naive_coset_min(const Lattice& lattice, const Vec& w, const Int& box_radius = 0);

// Smallest box radius (in u-space) guaranteed to contain all coset
// minimizers, from the Cauchy-Schwarz coordinate bound |z_i|^2 <= B *
// (G^{-1})_{ii} at B = norm of the parity-reduced representative.
Int guaranteed_box_radius(const Lattice& lattice, const Vec& w);

}  // namespace hlat
