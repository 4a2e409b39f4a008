#include "hlat/matrix.hpp"

namespace hlat {

std::vector<std::size_t> rref(QMat& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        // First nonzero entry at or below `row` keeps the form canonical.
        std::size_t sel = row;
        while (sel < m.rows() && m(sel, col) == 0) ++sel;
        if (sel == m.rows()) continue;
        if (sel != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(sel, j), m(row, j));
        const Rat inv_p = Rat(1) / m(row, col);
        for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv_p;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col) == 0) continue;
            const Rat f = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::size_t rank(QMat m) { return rref(m).size(); }

Rat det(const QMat& m) {
    if (m.rows() != m.cols()) throw invalid_input("det: matrix is not square");
    const std::size_t n = m.rows();
    QMat a = m;
    Rat result(1);  // empty product: det of the 0x0 matrix is 1
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t sel = col;
        while (sel < n && a(sel, col) == 0) ++sel;
        if (sel == n) return Rat(0);
        if (sel != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(sel, j), a(col, j));
            result = -result;
        }
        result *= a(col, col);
        const Rat inv_p = Rat(1) / a(col, col);
        for (std::size_t i = col + 1; i < n; ++i) {
            if (a(i, col) == 0) continue;
            const Rat f = a(i, col) * inv_p;
            for (std::size_t j = col; j < n; ++j) a(i, j) -= f * a(col, j);
        }
    }
    return result;
}

QMat kernel_basis(const QMat& m) {
    QMat r = m;
    const std::vector<std::size_t> pivots = rref(r);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t p : pivots) is_pivot[p] = true;

    std::vector<std::size_t> free_cols;
    for (std::size_t j = 0; j < m.cols(); ++j)
        if (!is_pivot[j]) free_cols.push_back(j);

    QMat k(m.cols(), free_cols.size());
    for (std::size_t idx = 0; idx < free_cols.size(); ++idx) {
        const std::size_t f = free_cols[idx];
        k(f, idx) = Rat(1);
        for (std::size_t t = 0; t < pivots.size(); ++t) k(pivots[t], idx) = -r(t, f);
    }
    return k;
}

bool solve(const QMat& m, const std::vector<Rat>& b, std::vector<Rat>& x) {
    if (b.size() != m.rows()) throw invalid_input("solve: right-hand side size mismatch");
    QMat aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = b[i];
    }
    const std::vector<std::size_t> pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == m.cols()) return false;
    x.assign(m.cols(), Rat(0));
    for (std::size_t t = 0; t < pivots.size(); ++t) x[pivots[t]] = aug(t, m.cols());
    return true;
}

QMat solve_matrix(const QMat& m, const QMat& b) {
    if (b.rows() != m.rows()) throw invalid_input("solve_matrix: row counts differ");
    QMat aug = m.hcat(b);
    const std::vector<std::size_t> pivots = rref(aug);
    for (std::size_t p : pivots)
        if (p >= m.cols()) throw invalid_input("solve_matrix: inconsistent system");
    QMat x(m.cols(), b.cols());
    for (std::size_t t = 0; t < pivots.size(); ++t)
        for (std::size_t j = 0; j < b.cols(); ++j) x(pivots[t], j) = aug(t, m.cols() + j);
    return x;
}

std::vector<std::size_t> column_pivot_rows(const QMat& m) {
    QMat t = m.transposed();
    return rref(t);
}

QMat coker_coords(const QMat& m, const QMat& b) {
    if (b.rows() != m.rows()) throw invalid_input("coker_coords: row counts differ");
    const std::vector<std::size_t> pivot_rows = column_pivot_rows(m);
    std::vector<bool> is_pivot(m.rows(), false);
    for (std::size_t p : pivot_rows) is_pivot[p] = true;

    std::vector<std::size_t> rep_rows;
    for (std::size_t i = 0; i < m.rows(); ++i)
        if (!is_pivot[i]) rep_rows.push_back(i);

    // b_j = m v + sum_i c_i e_{rep_i} has a solution with unique c; the c_i
    // are the coordinates of [b_j] in the canonical coker basis.
    QMat reps(m.rows(), rep_rows.size());
    for (std::size_t idx = 0; idx < rep_rows.size(); ++idx) reps(rep_rows[idx], idx) = Rat(1);
    const QMat sol = solve_matrix(m.hcat(reps), b);
    return sol.block(m.cols(), 0, rep_rows.size(), b.cols());
}

}  // namespace hlat
