#pragma once

#include "hlat/invariants.hpp"

#include <utility>

namespace hlat {

// Inputs for the certified lower bound
//   h >= ceil( (|w^2| - m)/4 - ceil(g/2) - (b_plus - 1) ).
// The bound applies to the situation the inequality models (a negative
// definite form containing w, a genus-g surface, b2+ = b_plus); this toolkit
// only certifies the lattice side: w extremal, parity, eta nonzero.
struct HBoundInput {
    Lattice lattice;
    Vec w;
    Vec a;  // empty: require the full eta polynomial nonzero instead
    int m = 0;
    Int g = 0;
    Int b_plus = 1;
};

struct HCertificate {
    Int w_norm;
    int m = 0;
    Int eta_value;  // eta at the supplied a, or the constant eta when m = 0
    std::uint64_t minimizer_count = 0;
    std::uint64_t nodes = 0;
};

Int h_lower_from_certificate(const HBoundInput& input, const EnumBudget& budget = {},
                             HCertificate* certificate = nullptr);

// h >= e(L) - ceil(g/2); the b_plus = 1 form.
Int h_lower_from_e(const Lattice& lattice, const Int& g, const Int& b_plus = 1,
                   const EnumBudget& budget = {}, const EInvariantOptions& options = {});

// Bounds on the h-difference across a -1-surgery on a slice-genus-g knot:
// (0, ceil(g/2)).
std::pair<Int, Int> surgery_upper(const Int& g_slice);

// Certified value for the rank-4k family: w = e_1 + ... + e_{4l} with
// l = floor(k/2) gives the lower bound l, and the genus-(k-1) upper bound
// gives ceil((k-1)/2); the two agree at floor(k/2).
struct BrieskornResult {
    int k = 0;
    Int ell;
    Int lower;
    Int upper;
    Int value;
    Vec w_basis;
    Vec w_ambient_doubled;
    Int w_norm;
    Int eta0;  // eta(gamma(4k), w) at m = 0
    std::uint64_t minimizer_count = 0;
    std::uint64_t nodes = 0;
};

BrieskornResult brieskorn_h(int k, const EnumBudget& budget = {});

// Verifies eta(base + k*E8, w + q + ... + q, a + 0, m) =
// eta(base, w, a, m) * eta(E8, q)^k exactly, q = e1+e2+e3+e4.
bool redhn_factor_check(int k, const Lattice& base, const Vec& w, const Vec& a, int m,
                        const EnumBudget& budget = {});

}  // namespace hlat
