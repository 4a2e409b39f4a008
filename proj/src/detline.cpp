#include "hlat/detline.hpp"

#include "hlat/errors.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <utility>

namespace hlat::detline {

namespace {

bool is_zero(const QMat& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m(i, j) != 0) return false;
    return true;
}

// Canonical basis of the column space: the nonzero rows of rref(m^T),
// transposed back to columns (ordered by leading entry).
QMat col_space_basis(const QMat& m) {
    QMat t = m.transposed();
    const auto pivots = rref(t);
    QMat basis(m.rows(), pivots.size());
    for (std::size_t j = 0; j < pivots.size(); ++j)
        for (std::size_t i = 0; i < m.rows(); ++i) basis(i, j) = t(j, i);
    return basis;
}

std::vector<std::size_t> complement_rows(std::size_t dim, const std::vector<std::size_t>& taken) {
    std::vector<std::size_t> out;
    out.reserve(dim - taken.size());
    std::size_t k = 0;
    for (std::size_t i = 0; i < dim; ++i) {
        if (k < taken.size() && taken[k] == i) {
            ++k;
        } else {
            out.push_back(i);
        }
    }
    return out;
}

// Standard-basis representatives of the canonical cokernel basis of m:
// one 0/1 column e_i per non-pivot row i of the column space.
QMat coker_reps(const QMat& m) {
    const auto rows = complement_rows(m.rows(), column_pivot_rows(m));
    QMat reps(m.rows(), rows.size());
    for (std::size_t j = 0; j < rows.size(); ++j) reps(rows[j], j) = 1;
    return reps;
}

// Permutation matrix reordering a block vector: block r of the output is
// block new_order[r] of the input.
QMat block_perm(const std::vector<std::size_t>& sizes, const std::vector<std::size_t>& new_order) {
    std::size_t total = 0;
    for (std::size_t s : sizes) total += s;
    std::vector<std::size_t> offset(sizes.size(), 0);
    for (std::size_t b = 1; b < sizes.size(); ++b) offset[b] = offset[b - 1] + sizes[b - 1];

    QMat p(total, total);
    std::size_t row = 0;
    for (std::size_t b : new_order)
        for (std::size_t i = 0; i < sizes[b]; ++i, ++row) p(row, offset[b] + i) = 1;
    return p;
}

void check_exact3_shapes(const QMat& a0, const QMat& a1) {
    if (a1.cols() != a0.rows())
        throw invalid_input("exact3: middle space dimensions disagree");
    if (a0.rows() != a0.cols() + a1.rows())
        throw invalid_input("exact3: dimensions cannot form a short exact sequence");
    if (!is_zero(a1 * a0)) throw invalid_input("exact3: composite is not zero");
    if (rank(a0) != a0.cols()) throw invalid_input("exact3: first map is not injective");
    if (rank(a1) != a1.rows()) throw invalid_input("exact3: second map is not surjective");
}

}  // namespace

Rat exact3_iso_with_section(const QMat& a0, const QMat& a1, const QMat& section,
                            WedgeOrder order) {
    check_exact3_shapes(a0, a1);
    if (section.rows() != a1.cols() || section.cols() != a1.rows())
        throw invalid_input("exact3: section has the wrong shape");
    if (!(a1 * section == QMat::identity(a1.rows())))
        throw invalid_input("exact3: supplied section is not a right inverse");
    const QMat m =
        order == WedgeOrder::kernel_first ? a0.hcat(section) : section.hcat(a0);
    return det(m);
}

Rat exact3_iso(const QMat& a0, const QMat& a1, WedgeOrder order) {
    check_exact3_shapes(a0, a1);
    const QMat section = solve_matrix(a1, QMat::identity(a1.rows()));
    const QMat m =
        order == WedgeOrder::kernel_first ? a0.hcat(section) : section.hcat(a0);
    return det(m);
}

bool is_exact(const ExactComplex& cx) {
    const auto& maps = cx.maps;
    if (maps.empty()) throw invalid_input("exact complex: needs at least one map");
    for (std::size_t i = 0; i + 1 < maps.size(); ++i)
        if (maps[i + 1].cols() != maps[i].rows())
            throw invalid_input("exact complex: consecutive shapes disagree");

    std::vector<std::size_t> r(maps.size());
    for (std::size_t i = 0; i < maps.size(); ++i) r[i] = rank(maps[i]);
    for (std::size_t i = 0; i + 1 < maps.size(); ++i)
        if (!is_zero(maps[i + 1] * maps[i])) return false;

    if (r[0] != maps[0].cols()) return false;  // exact at the first space
    for (std::size_t i = 0; i + 1 < maps.size(); ++i)
        if (r[i] + r[i + 1] != maps[i].rows()) return false;
    return r.back() == maps.back().rows();  // exact at the last space
}

Rat acyclic_iso(const ExactComplex& cx, WedgeOrder order) {
    if (!is_exact(cx)) throw invalid_input("acyclic_iso: the complex is not exact");
    const std::size_t nmaps = cx.maps.size();

    // Telescope through Z_i = im(maps[i-1]): each space sits in
    // 0 -> Z_i -> A_i -> Z_{i+1} -> 0, and every det(Z_i) cancels between one
    // even and one odd slot.
    std::vector<QMat> z(nmaps + 1);
    z[0] = QMat(cx.maps[0].cols(), 0);
    for (std::size_t i = 1; i <= nmaps; ++i) z[i] = col_space_basis(cx.maps[i - 1]);

    Rat numerator = 1, denominator = 1;
    for (std::size_t i = 0; i <= nmaps; ++i) {
        const std::size_t dim_i = i < nmaps ? cx.maps[i].cols() : cx.maps.back().rows();
        const QMat proj =
            i < nmaps ? solve_matrix(z[i + 1], cx.maps[i]) : QMat(0, dim_i);
        const Rat c = exact3_iso(z[i], proj, order);
        if (i % 2 == 1) {
            numerator *= c;
        } else {
            denominator *= c;
        }
    }
    return numerator / denominator;
}

QMat stabilized(const QMat& s, const QMat& f) {
    if (f.rows() != s.rows())
        throw invalid_input("stabilized: f must map into the codomain of S");
    return s.hcat(f).vcat(QMat(f.cols(), s.cols() + f.cols()));
}

Rat stabilize(const QMat& s, const QMat& f, WedgeOrder order) {
    if (f.rows() != s.rows())
        throw invalid_input("stabilize: f must map into the codomain of S");
    const std::size_t q = s.rows(), p = s.cols(), n = f.cols();
    const QMat sf = stabilized(s, f);

    const QMat ker_s = kernel_basis(s);
    const QMat ker_sf = kernel_basis(sf);
    const QMat reps_s = coker_reps(s);
    const QMat reps_sf = coker_reps(sf);

    // 0 -> ker S -> ker S_f -> F^n -> coker S -> coker S_f -> F^n -> 0
    const QMat m0 = solve_matrix(ker_sf, ker_s.vcat(QMat(n, ker_s.cols())));
    const QMat m1 = ker_sf.block(p, 0, n, ker_sf.cols());
    const QMat m2 = coker_coords(s, f);
    const QMat m3 = coker_coords(sf, reps_s.vcat(QMat(n, reps_s.cols())));
    const QMat m4 = reps_sf.block(q, 0, n, reps_sf.cols());

    const ExactComplex six{{m0, m1, m2, m3, m4}};
    if (!is_exact(six)) throw internal_error("stabilize: six-term sequence is not exact");
    return acyclic_iso(six, order);
}

Rat conjugation_iso(const QMat& s, const QMat& p, const QMat& q) {
    if (p.rows() != p.cols() || p.rows() != s.cols())
        throw invalid_input("conjugation: domain map must be square of matching size");
    if (q.rows() != q.cols() || q.rows() != s.rows())
        throw invalid_input("conjugation: codomain map must be square of matching size");
    if (det(p) == 0 || det(q) == 0)
        throw invalid_input("conjugation: the change-of-basis maps must be invertible");

    const QMat p_inv = solve_matrix(p, QMat::identity(p.rows()));
    const QMat s2 = q * s * p_inv;

    const QMat x = solve_matrix(kernel_basis(s2), p * kernel_basis(s));
    const QMat n = coker_coords(s2, q * coker_reps(s));
    const Rat dx = det(x), dn = det(n);
    if (dx == 0 || dn == 0) throw internal_error("conjugation: transported bases degenerate");
    return dx / dn;
}

bool verify_square_sign(const QMat& s, const QMat& f1, const QMat& f2, WedgeOrder order) {
    if (f1.rows() != s.rows() || f2.rows() != s.rows())
        throw invalid_input("square: f1 and f2 must map into the codomain of S");
    const std::size_t n1 = f1.cols(), n2 = f2.cols();

    const QMat sf1 = stabilized(s, f1);
    const QMat f2_lift = f2.vcat(QMat(n1, n2));

    if (!(stabilized(sf1, f2_lift) == stabilized(s, f1.hcat(f2))))
        throw internal_error("square: the two stabilization towers differ");

    const Rat l1 = stabilize(s, f1, order);
    const Rat l2 = stabilize(sf1, f2_lift, order);
    const Rat l3 = stabilize(s, f1.hcat(f2), order);

    const std::size_t dim_l1 = rank(coker_coords(s, f1));
    const std::size_t dim_k2 = n2 - rank(coker_coords(s.hcat(f1), f2));
    const Rat sign = (dim_l1 * dim_k2) % 2 == 0 ? 1 : -1;
    return l3 == sign * l2 * l1;
}

Rat gamma_patched(const QMat& s, const QMat& g, const QMat& f1, const QMat& f2,
                  WedgeOrder order) {
    if (g.rows() != s.rows() || f1.rows() != s.rows() || f2.rows() != s.rows())
        throw invalid_input("gamma: g, f1, f2 must map into the codomain of S");
    const std::size_t q = s.rows(), p = s.cols();
    const std::size_t pg = g.cols(), n1 = f1.cols(), n2 = f2.cols();
    if (rank(s.hcat(f1)) != q) throw invalid_input("gamma: S + f1 must be surjective");
    if (rank(s.hcat(g).hcat(f2)) != q) throw invalid_input("gamma: S + g + f2 must be surjective");

    const QMat target = stabilized(s, g.hcat(f1).hcat(f2));

    // Path one: det(S) -> det(S_{f1}) -> det(S_{f1 + g + f2}) -> reorder.
    const QMat sf1 = stabilized(s, f1);
    const QMat gf2_lift = g.hcat(f2).vcat(QMat(n1, pg + n2));
    const Rat a1 = stabilize(s, f1, order);
    const Rat a2 = stabilize(sf1, gf2_lift, order);
    const QMat tower1 = stabilized(sf1, gf2_lift);
    const QMat pd1 = block_perm({p, n1, pg, n2}, {0, 2, 1, 3});
    const QMat pc1 = block_perm({q, n1, pg, n2}, {0, 2, 1, 3});
    if (!(pc1 * tower1 * pd1.transposed() == target))
        throw internal_error("gamma: first tower does not reorder onto the common stabilization");
    const Rat a3 = conjugation_iso(tower1, pd1, pc1);

    // Path two: det(S_g) -> det(S_{g + f2}) -> det(S_{g + f2 + f1}) -> reorder.
    const QMat tg = stabilized(s, g);
    const QMat f2_lift = f2.vcat(QMat(pg, n2));
    const Rat b1 = stabilize(tg, f2_lift, order);
    const QMat tgf2 = stabilized(tg, f2_lift);
    const QMat f1_lift = f1.vcat(QMat(pg + n2, n1));
    const Rat b2 = stabilize(tgf2, f1_lift, order);
    const QMat tower2 = stabilized(tgf2, f1_lift);
    const QMat pd2 = block_perm({p, pg, n2, n1}, {0, 1, 3, 2});
    const QMat pc2 = block_perm({q, pg, n2, n1}, {0, 1, 3, 2});
    if (!(pc2 * tower2 * pd2.transposed() == target))
        throw internal_error("gamma: second tower does not reorder onto the common stabilization");
    const Rat b3 = conjugation_iso(tower2, pd2, pc2);

    return (a3 * a2 * a1) / (b3 * b2 * b1);
}

namespace {

// Cokernel representatives padded with zero columns to the requested parity;
// appending zero columns changes neither surjectivity nor the line maps.
QMat padded_reps(const QMat& m, int parity) {
    QMat reps = coker_reps(m);
    if (static_cast<int>(reps.cols() % 2) != parity) reps = reps.hcat(QMat(m.rows(), 1));
    return reps;
}

}  // namespace

bool verify_gamma_sign(const QMat& s, const QMat& g, int eps1, int eps2, WedgeOrder order) {
    if (g.rows() != s.rows()) throw invalid_input("gamma: g must map into the codomain of S");
    if ((eps1 & ~1) || (eps2 & ~1)) throw invalid_input("gamma: eps flags must be 0 or 1");
    const std::size_t q = s.rows();
    const QMat sg = s.hcat(g);

    const QMat f1 = padded_reps(s, eps1);
    const QMat f2 = padded_reps(sg, eps2);

    const Rat gamma = gamma_patched(s, g, f1, f2, order);
    const Rat gamma_prime = stabilize(s, g, order);

    const std::size_t d1 = q - rank(s);
    const std::size_t d2 = q - rank(sg);
    const std::size_t exponent =
        d1 * eps1 + d2 * eps2 + d1 * g.cols() + d1 * d2 + d2;
    const Rat sign = exponent % 2 == 0 ? 1 : -1;
    if (gamma != sign * gamma_prime) return false;

    // Independence of the auxiliary choices: enlarge both auxiliaries by two
    // columns (parities preserved) with nontrivial content.
    QMat extra1(q, 2), extra2(q, 2);
    for (std::size_t i = 0; i < q; ++i) {
        extra1(i, 0) = 1;
        extra1(i, 1) = (i % 2 == 0) ? 1 : -1;
        extra2(i, 0) = Rat(static_cast<int>(i) + 1);
        extra2(i, 1) = (i % 3 == 0) ? 1 : 0;
    }
    const Rat gamma_alt = gamma_patched(s, g, f1.hcat(extra1), f2.hcat(extra2), order);
    return gamma_alt == gamma;
}

DetlineReport detline_check(std::uint64_t trials, std::size_t max_dim, std::uint64_t seed) {
    if (max_dim == 0) throw invalid_input("detline check: max_dim must be positive");
    std::mt19937_64 rng(seed);
    // Raw modulo on the engine output: identical sequences on every platform.
    auto pick = [&rng](std::size_t lo, std::size_t hi) {
        return lo + static_cast<std::size_t>(rng() % (hi - lo + 1));
    };
    auto small_entry = [&rng]() { return Rat(static_cast<int>(rng() % 5) - 2); };
    auto random_mat = [&](std::size_t rows, std::size_t cols) {
        QMat m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = small_entry();
        return m;
    };
    // Rank-bounded operator: a product of thin factors hits interesting
    // kernel/cokernel dimensions far more often than a dense square draw.
    auto random_op = [&](std::size_t rows, std::size_t cols) {
        const std::size_t cap = std::min(rows, cols);
        const std::size_t r = cap == 0 ? 0 : pick(0, cap);
        return random_mat(rows, r) * random_mat(r, cols);
    };

    DetlineReport report;

    for (std::uint64_t t = 0; t < trials; ++t) {
        const WedgeOrder order = t % 2 == 0 ? WedgeOrder::kernel_first : WedgeOrder::section_first;
        QMat s, f1, f2;
        if (t % 8 == 7) {
            // Guaranteed odd dim(L1)*dim(K2): zero operator, f2 falling into
            // the image of f1.
            const std::size_t q = pick(1, max_dim), p = pick(0, max_dim);
            s = QMat(q, p);
            f1 = QMat(q, 1);
            f1(0, 0) = 1;
            f2 = f1;
        } else {
            const std::size_t q = pick(0, max_dim), p = pick(0, max_dim);
            s = random_op(q, p);
            f1 = random_mat(q, pick(0, 3));
            f2 = t % 5 == 3 && f1.cols() > 0 ? f1 : random_mat(q, pick(0, 3));
        }
        const std::size_t dim_l1 = rank(coker_coords(s, f1));
        const std::size_t dim_k2 = f2.cols() - rank(coker_coords(s.hcat(f1), f2));
        report.square_total += 1;
        report.square_odd_cases += (dim_l1 * dim_k2) % 2;
        report.square_pass += verify_square_sign(s, f1, f2, order) ? 1 : 0;
    }

    for (std::uint64_t t = 0; t < trials; ++t) {
        const WedgeOrder order = t % 2 == 0 ? WedgeOrder::kernel_first : WedgeOrder::section_first;
        const int eps1 = static_cast<int>((t >> 1) & 1);
        const int eps2 = static_cast<int>(t & 1);
        const std::size_t q = pick(0, max_dim), p = pick(0, max_dim);
        const QMat s = random_op(q, p);
        const QMat g = random_mat(q, pick(0, 3));
        report.gamma_total += 1;
        report.gamma_pass += verify_gamma_sign(s, g, eps1, eps2, order) ? 1 : 0;
    }

    for (std::uint64_t t = 0; t < trials / 2; ++t) {
        const WedgeOrder order = t % 2 == 0 ? WedgeOrder::kernel_first : WedgeOrder::section_first;
        const std::size_t a = pick(0, max_dim), b = pick(0, max_dim);
        const std::size_t n = a + b;
        // Invertible middle matrix from unit-triangular factors.
        QMat lower = QMat::identity(n), upper = QMat::identity(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < i; ++j) {
                lower(i, j) = small_entry();
                upper(j, i) = small_entry();
            }
        const QMat basis = lower * upper;
        const QMat basis_inv = solve_matrix(basis, QMat::identity(n));
        const QMat a0 = basis.block(0, 0, n, a);
        const QMat a1 = basis_inv.block(a, 0, b, n);

        const Rat canonical = exact3_iso(a0, a1, order);
        QMat section = solve_matrix(a1, QMat::identity(b));
        const QMat shift = a0 * random_mat(a, b);  // any kernel-valued shift
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < b; ++j) section(i, j) += shift(i, j);
        const Rat shifted = exact3_iso_with_section(a0, a1, section, order);
        report.exact3_total += 1;
        report.exact3_pass += shifted == canonical ? 1 : 0;
    }

    return report;
}

}  // namespace hlat::detline
