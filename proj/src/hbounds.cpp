#include "hlat/hbounds.hpp"

#include "hlat/errors.hpp"

#include <string>
#include <utility>

namespace hlat {

namespace {

Int ceil_half(const Int& g) { return ceil_div(g, 2); }

// Constant-term eta over an already-computed minimizer set: sum of the signs
// (-1)^{|((z+w)/2)^2|} relative to w.
Int eta_constant(const Lattice& lattice, const Vec& w, const std::vector<Vec>& minimizers) {
    Int total = 0;
    Vec v(w.size());
    for (const Vec& z : minimizers) {
        for (std::size_t i = 0; i < w.size(); ++i) v[i] = (z[i] + w[i]) / 2;
        total += is_odd(lattice.norm(v)) ? -1 : +1;
    }
    return total;
}

}  // namespace

Int h_lower_from_certificate(const HBoundInput& input, const EnumBudget& budget,
                             HCertificate* certificate) {
    const Lattice& lattice = input.lattice;
    if (input.w.size() != lattice.rank())
        throw invalid_input("h bound: w has wrong length for the lattice");
    if (!input.a.empty() && input.a.size() != lattice.rank())
        throw invalid_input("h bound: a has wrong length for the lattice");
    if (input.m < 0) throw invalid_input("h bound: m must be nonnegative");
    if (input.g < 0) throw invalid_input("h bound: genus must be nonnegative");
    if (input.b_plus < 1) throw invalid_input("h bound: b_plus must be at least 1");
    if (!lattice.is_unimodular())
        throw invalid_input("h bound: the inequality applies to unimodular lattices (det = " +
                            lattice.det().str() + ")");

    const Int w_norm = lattice.norm(input.w);
    if (is_odd(w_norm - input.m))
        throw invalid_input("h bound: parity mismatch, need m == |w^2| (mod 2) but |w^2| = " +
                            w_norm.str() + " and m = " + std::to_string(input.m));

    CosetMinResult r = coset_min(lattice, input.w, budget);
    if (r.min_norm < w_norm)
        throw certificate_failure("h bound: w is not extremal (coset minimum " + r.min_norm.str() +
                                  " < |w^2| = " + w_norm.str() + ")");

    Int eta_value = 0;
    bool eta_nonzero = false;
    if (!input.a.empty()) {
        eta_value = eta(lattice, input.w, input.a, input.m, budget);
        eta_nonzero = eta_value != 0;
    } else {
        const int cap = input.m > kDefaultMMax ? input.m : kDefaultMMax;
        const EtaPolynomial poly = eta_polynomial(lattice, input.w, input.m, budget, cap);
        eta_nonzero = !poly.is_zero();
        if (input.m == 0 && eta_nonzero) eta_value = poly.coeffs.begin()->second;
    }
    if (!eta_nonzero)
        throw certificate_failure("h bound: eta vanishes for the supplied certificate (w, m = " +
                                  std::to_string(input.m) + ")");

    if (certificate) {
        certificate->w_norm = w_norm;
        certificate->m = input.m;
        certificate->eta_value = eta_value;
        certificate->minimizer_count = r.minimizers.size();
        certificate->nodes = r.nodes_visited;
    }

    // h(Y) >= (|w^2| - m)/4 - ceil(g/2) - (b_plus - 1), rounded up exactly.
    const Rat bound = Rat(w_norm - input.m) / 4 - Rat(ceil_half(input.g)) - Rat(input.b_plus - 1);
    return ceil_rat(bound);
}

Int h_lower_from_e(const Lattice& lattice, const Int& g, const Int& b_plus,
                   const EnumBudget& budget, const EInvariantOptions& options) {
    if (g < 0) throw invalid_input("h bound: genus must be nonnegative");
    if (b_plus != 1)
        throw invalid_input("h bound from e(L): only the b_plus = 1 form is available");
    if (!lattice.is_unimodular())
        throw invalid_input("h bound: the inequality applies to unimodular lattices (det = " +
                            lattice.det().str() + ")");
    const EInvariantCertificate cert = e_invariant(lattice, budget, options);
    return cert.value - ceil_half(g);
}

std::pair<Int, Int> surgery_upper(const Int& g_slice) {
    if (g_slice < 0) throw invalid_input("surgery bound: slice genus must be nonnegative");
    return {Int(0), ceil_half(g_slice)};
}

BrieskornResult brieskorn_h(int k, const EnumBudget& budget) {
    if (k < 2) throw invalid_input("brieskorn family: k must be at least 2");
    if (static_cast<std::size_t>(4 * k) > kDefaultRankGuard)
        throw invalid_input("brieskorn family: rank 4k = " + std::to_string(4 * k) +
                            " exceeds the practical guard " + std::to_string(kDefaultRankGuard));

    BrieskornResult res;
    res.k = k;
    res.ell = k / 2;
    const std::size_t n = static_cast<std::size_t>(4 * k);
    const std::size_t support = static_cast<std::size_t>(4 * (k / 2));

    const Lattice lattice = Lattice::gamma(n);

    // w = e_1 + ... + e_{4l} in ambient coordinates (doubled entries 2).
    res.w_ambient_doubled.assign(n, Int(0));
    for (std::size_t i = 0; i < support; ++i) res.w_ambient_doubled[i] = 2;
    const auto w_basis = lattice.ambient_to_basis(res.w_ambient_doubled);
    if (!w_basis)
        throw internal_error("brieskorn family: the standard witness is not a lattice vector");
    res.w_basis = *w_basis;
    res.w_norm = lattice.norm(res.w_basis);
    if (res.w_norm != Int(4) * res.ell)
        throw internal_error("brieskorn family: witness norm " + res.w_norm.str() +
                             " differs from 4*floor(k/2)");

    HBoundInput input;
    input.lattice = lattice;
    input.w = res.w_basis;
    input.m = 0;
    input.g = 0;
    input.b_plus = 1;
    HCertificate cert;
    res.lower = h_lower_from_certificate(input, budget, &cert);
    res.eta0 = cert.eta_value;
    res.minimizer_count = cert.minimizer_count;
    res.nodes = cert.nodes;

    res.upper = surgery_upper(Int(k - 1)).second;  // genus of the (2, 2k-1) torus knot
    if (res.lower != res.ell || res.upper != res.ell)
        throw certificate_failure("brieskorn family: bounds " + res.lower.str() + " and " +
                                  res.upper.str() + " do not pin floor(k/2) = " + res.ell.str());
    res.value = res.ell;
    return res;
}

bool redhn_factor_check(int k, const Lattice& base, const Vec& w, const Vec& a, int m,
                        const EnumBudget& budget) {
    if (k < 0) throw invalid_input("factor check: k must be nonnegative");
    if (w.size() != base.rank() || a.size() != base.rank())
        throw invalid_input("factor check: w and a must match the base lattice rank");

    const Lattice e8 = Lattice::e8(base.sign());
    Vec q_doubled(8, Int(0));
    for (std::size_t i = 0; i < 4; ++i) q_doubled[i] = 2;
    const auto q = e8.ambient_to_basis(q_doubled);
    if (!q) throw internal_error("factor check: e1+e2+e3+e4 is not an E8 vector");

    Lattice sum = base;
    Vec w_ext = w;
    Vec a_ext = a;
    for (int i = 0; i < k; ++i) {
        sum = Lattice::direct_sum(sum, e8);
        w_ext.insert(w_ext.end(), q->begin(), q->end());
        a_ext.insert(a_ext.end(), 8, Int(0));
    }

    const Int lhs = eta(sum, w_ext, a_ext, m, budget);
    const Int base_eta = eta(base, w, a, m, budget);

    CosetMinResult rq = coset_min(e8, *q, budget);
    const Int factor = eta_constant(e8, *q, rq.minimizers);

    return lhs == base_eta * pow_int(factor, static_cast<unsigned>(k));
}

}  // namespace hlat
