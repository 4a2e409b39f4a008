#include "hlat/lattice.hpp"

#include "hlat/errors.hpp"

#include <utility>

namespace hlat {

Ldlt ldlt_decompose(const IMat& gram) {
    const std::size_t n = gram.rows();
    if (gram.cols() != n) throw invalid_input("Gram matrix is not square");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (gram(i, j) != gram(j, i)) throw invalid_input("Gram matrix is not symmetric");

    Ldlt f;
    f.d.assign(n, Rat(0));
    f.l = QMat::identity(n);
    for (std::size_t j = 0; j < n; ++j) {
        Rat dj(gram(j, j));
        for (std::size_t k = 0; k < j; ++k) dj -= f.l(j, k) * f.l(j, k) * f.d[k];
        if (dj <= 0)
            throw invalid_input("Gram matrix is not positive definite (leading minor " +
                                std::to_string(j + 1) + " fails)");
        f.d[j] = dj;
        for (std::size_t i = j + 1; i < n; ++i) {
            Rat lij(gram(i, j));
            for (std::size_t k = 0; k < j; ++k) lij -= f.l(i, k) * f.l(j, k) * f.d[k];
            f.l(i, j) = lij / dj;
        }
    }
    return f;
}

Lattice::Lattice(IMat gram, Sign sign, std::string name, IMat ambient_basis_doubled)
    : gram_(std::move(gram)),
      sign_(sign),
      name_(std::move(name)),
      ambient_basis_doubled_(std::move(ambient_basis_doubled)) {
    ldlt_ = ldlt_decompose(gram_);
    Rat d(1);
    for (const Rat& x : ldlt_.d) d *= x;
    // det G = product of the LDL^T pivots; integral since G is integral.
    if (boost::multiprecision::denominator(d) != 1)
        throw internal_error("non-integral determinant from LDL^T pivots");
    det_ = boost::multiprecision::numerator(d);
}

Lattice Lattice::from_gram(IMat gram, Sign sign, std::string name) {
    return Lattice(std::move(gram), sign, std::move(name), IMat());
}

Lattice Lattice::diagonal(std::size_t rank, Sign sign) {
    return Lattice(IMat::identity(rank), sign, "diag:" + std::to_string(rank), IMat());
}

Lattice Lattice::gamma(std::size_t n, Sign sign) {
    if (n == 0 || n % 4 != 0) throw invalid_input("gamma lattice needs rank divisible by 4");
    // Basis in doubled ambient coordinates (columns).
    IMat b(n, n);
    for (std::size_t i = 0; i < n; ++i) b(i, 0) = 1;  // (1/2, ..., 1/2)
    b(0, 1) = 2;
    b(1, 1) = 2;  // e1 + e2
    for (std::size_t j = 2; j < n; ++j) {
        // e_j - e_{j-1} in 1-based ambient indexing.
        b(j - 2, j) = -2;
        b(j - 1, j) = 2;
    }
    IMat gram(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            Int dot = 0;
            for (std::size_t t = 0; t < n; ++t) dot += b(t, i) * b(t, j);
            if (dot % 4 != 0) throw internal_error("gamma basis with non-integral Gram entry");
            gram(i, j) = gram(j, i) = dot / 4;
        }
    return Lattice(std::move(gram), sign, "gamma:" + std::to_string(n), std::move(b));
}

Lattice Lattice::e8(Sign sign) {
    Lattice l = gamma(8, sign);
    return Lattice(l.gram_, sign, "e8", l.ambient_basis_doubled_);
}

Lattice Lattice::direct_sum(const Lattice& a, const Lattice& b) {
    if (a.sign_ != b.sign_)
        throw invalid_input("direct sum of lattices with different sign conventions");
    const std::size_t n = a.rank() + b.rank();
    IMat gram(n, n);
    for (std::size_t i = 0; i < a.rank(); ++i)
        for (std::size_t j = 0; j < a.rank(); ++j) gram(i, j) = a.gram_(i, j);
    for (std::size_t i = 0; i < b.rank(); ++i)
        for (std::size_t j = 0; j < b.rank(); ++j) gram(a.rank() + i, a.rank() + j) = b.gram_(i, j);

    IMat ambient;
    if (a.has_ambient() && b.has_ambient()) {
        const std::size_t na = a.ambient_dim(), nb = b.ambient_dim();
        ambient = IMat(na + nb, n);
        for (std::size_t i = 0; i < na; ++i)
            for (std::size_t j = 0; j < a.rank(); ++j) ambient(i, j) = a.ambient_basis_doubled_(i, j);
        for (std::size_t i = 0; i < nb; ++i)
            for (std::size_t j = 0; j < b.rank(); ++j)
                ambient(na + i, a.rank() + j) = b.ambient_basis_doubled_(i, j);
    }
    std::string name;
    if (!a.name_.empty() && !b.name_.empty()) name = a.name_ + "+" + b.name_;
    return Lattice(std::move(gram), a.sign_, std::move(name), std::move(ambient));
}

bool Lattice::is_even() const {
    // An integral form takes even values everywhere iff its diagonal is even.
    for (std::size_t i = 0; i < rank(); ++i)
        if (is_odd(gram_(i, i))) return false;
    return true;
}

Int Lattice::norm(const Vec& x) const {
    if (x.size() != rank()) throw invalid_input("norm: coordinate count differs from rank");
    Int s = 0;
    for (std::size_t i = 0; i < rank(); ++i) {
        if (x[i] == 0) continue;
        Int row = 0;
        for (std::size_t j = 0; j < rank(); ++j) row += gram_(i, j) * x[j];
        s += x[i] * row;
    }
    return s;
}

Int Lattice::inner(const Vec& x, const Vec& y) const {
    if (x.size() != rank() || y.size() != rank())
        throw invalid_input("inner: coordinate count differs from rank");
    Int s = 0;
    for (std::size_t i = 0; i < rank(); ++i) {
        if (x[i] == 0) continue;
        Int row = 0;
        for (std::size_t j = 0; j < rank(); ++j) row += gram_(i, j) * y[j];
        s += x[i] * row;
    }
    return s;
}

Vec Lattice::to_ambient_doubled(const Vec& x) const {
    if (!has_ambient()) throw invalid_input("lattice has no ambient coordinates");
    if (x.size() != rank()) throw invalid_input("to_ambient: coordinate count differs from rank");
    Vec out(ambient_dim(), Int(0));
    for (std::size_t i = 0; i < ambient_dim(); ++i)
        for (std::size_t j = 0; j < rank(); ++j) out[i] += ambient_basis_doubled_(i, j) * x[j];
    return out;
}

std::optional<Vec> Lattice::ambient_to_basis(const Vec& doubled) const {
    if (!has_ambient()) throw invalid_input("lattice has no ambient coordinates");
    if (doubled.size() != ambient_dim())
        throw invalid_input("ambient vector has wrong dimension");
    QMat m = to_rational(ambient_basis_doubled_);
    std::vector<Rat> rhs(doubled.size());
    for (std::size_t i = 0; i < doubled.size(); ++i) rhs[i] = Rat(doubled[i]);
    std::vector<Rat> x;
    if (!solve(m, rhs, x)) return std::nullopt;
    // Solution of a full-column-rank system is unique; membership needs it
    // integral, and the solve result must reproduce the input exactly.
    Vec out(rank());
    for (std::size_t j = 0; j < rank(); ++j) {
        if (boost::multiprecision::denominator(x[j]) != 1) return std::nullopt;
        out[j] = boost::multiprecision::numerator(x[j]);
    }
    for (std::size_t i = 0; i < ambient_dim(); ++i) {
        Int acc = 0;
        for (std::size_t j = 0; j < rank(); ++j) acc += ambient_basis_doubled_(i, j) * out[j];
        if (acc != doubled[i]) return std::nullopt;
    }
    return out;
}

}  // namespace hlat
