#pragma once

#include "hlat/enumerate.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace hlat {

// Exponent vector over the rank coordinates of the dual variable a.
using MultiIndex = std::vector<int>;

// Homogeneous degree-m expansion of sum_z sign(z) * (a.z)^m over the coset
// minimizers z: the coefficient of a^alpha is multinomial(m; alpha) *
// sum_z sign(z) * z^alpha.  Only nonzero coefficients are stored.
struct EtaPolynomial {
    int m = 0;
    std::size_t rank = 0;
    std::map<MultiIndex, Int> coeffs;

    bool is_zero() const { return coeffs.empty(); }
    Int evaluate(const Vec& a) const;
};

// True iff |w^2| attains the minimum norm of the coset w + 2L.
bool is_extremal(const Lattice& lattice, const Vec& w, const EnumBudget& budget = {});

// eta(L, w, a, m) = sum over minimizers z of w + 2L at level |w^2| of
// (-1)^{|((z+w)/2)^2|} * (a.z)^m, with (a.z)^0 = 1.  The dual vector a is
// given by its pairings with the basis, so a.z = sum_i a_i z_i.  Requires
// m >= 0 and m == |w^2| (mod 2); when w is not extremal the sum at level
// |w^2| is taken to be empty and eta = 0.
Int eta(const Lattice& lattice, const Vec& w, const Vec& a, int m, const EnumBudget& budget = {});

EtaPolynomial eta_polynomial(const Lattice& lattice, const Vec& w, int m,
                             const EnumBudget& budget = {}, int m_max = kDefaultMMax);

// Least m with m == |w^2| (mod 2) and eta_polynomial nonzero, scanning up to
// min(coset minimum, m_max); nullopt when there is no such m up to the coset
// minimum (beyond it every contribution to e is <= 0), and an error when
// m_max truncates the scan inconclusively.  Non-extremal w gives nullopt
// (every eta vanishes).
std::optional<int> minimal_m(const Lattice& lattice, const Vec& w, const EnumBudget& budget = {},
                             int m_max = kDefaultMMax);

// The 2^rank coset representatives of L/2L as {0,1} vectors, in mask order
// (coordinate i = bit rank-1-i, so coordinate 0 is the most significant),
// which is lexicographic in the coordinates.  Materializes the whole list;
// use class_rep for single lookups.
std::vector<Vec> coset_classes(std::size_t rank, std::size_t guard = kDefaultRankGuard);
Vec class_rep(std::size_t rank, std::uint64_t mask);

struct ClassRow {
    std::uint64_t rep_mask = 0;
    Int min_norm;
    std::optional<int> min_m;        // least eta-degree, when found within cap
    std::optional<Int> contribution;  // ceil((min_norm - min_m)/4)
    std::uint64_t minimizer_count = 0;
    std::uint64_t nodes = 0;
};

struct EInvariantOptions {
    int m_max = kDefaultMMax;
    std::size_t rank_guard = kDefaultRankGuard;
    unsigned threads = 0;  // 0: use all hardware threads
    bool keep_table = true;
};

// Certificate for e(L) = max(0, max over classes of ceil((N_c - m_c)/4)):
// the winning class with its extremal vector, degree, and nonzero eta
// polynomial, plus the full per-class table.
struct EInvariantCertificate {
    Int value;
    std::uint64_t witness_mask = 0;
    Vec witness_class;  // {0,1} representative
    Vec witness_w;      // lex-least minimizer of the witness class
    int witness_m = 0;
    Int witness_min_norm;
    EtaPolynomial witness_eta;
    std::vector<ClassRow> table;  // in mask order (when kept)
    std::uint64_t nodes_visited = 0;
    std::uint64_t num_classes = 0;
};

EInvariantCertificate e_invariant(const Lattice& lattice, const EnumBudget& budget = {},
                                  const EInvariantOptions& options = {});

}  // namespace hlat
