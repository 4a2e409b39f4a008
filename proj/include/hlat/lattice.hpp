#pragma once

#include "hlat/matrix.hpp"
#include "hlat/numeric.hpp"

#include <optional>
#include <string>

namespace hlat {

// Definiteness convention of the bilinear form.  The toolkit stores the
// positive-definite Gram matrix internally in both cases and works with
// absolute norms throughout, so `negative` is metadata recording that the
// form the user cares about is the negated one.
enum class Sign { positive, negative };

inline const char* to_string(Sign s) { return s == Sign::negative ? "negative" : "positive"; }

// G = L D L^T with L unit lower-triangular and d_i > 0; exists exactly when
// the symmetric matrix is positive definite.
struct Ldlt {
    std::vector<Rat> d;
    QMat l;
};

Ldlt ldlt_decompose(const IMat& gram);

// A definite integral lattice with a distinguished basis, described by its
// Gram matrix.  Lattices defined inside a rational ambient space (the gamma
// family) additionally carry their basis in doubled ambient coordinates, so
// every ambient quantity stays integral.
class Lattice {
public:
    // The rank-0 lattice.
    Lattice() : Lattice(IMat(), Sign::negative, "", IMat()) {}

    static Lattice from_gram(IMat gram, Sign sign = Sign::negative, std::string name = "");

    // Standard diagonal lattice of the given rank (Gram = identity).
    static Lattice diagonal(std::size_t rank, Sign sign = Sign::negative);

    // The index-2 extension of the even-coordinate lattice in dimension
    // n = 4k: vectors with integer or all-half-integer coordinates, even
    // coordinate sum.  Unimodular; even exactly when k is even.  The basis is
    // (1/2,...,1/2), e1+e2, e2-e1, e3-e2, ..., e_{n-1}-e_{n-2}.
    static Lattice gamma(std::size_t n, Sign sign = Sign::negative);

    // gamma(8), the unique positive even unimodular lattice of rank 8 (up to
    // sign convention).
    static Lattice e8(Sign sign = Sign::negative);

    static Lattice direct_sum(const Lattice& a, const Lattice& b);

    std::size_t rank() const { return gram_.rows(); }
    const IMat& gram() const { return gram_; }
    Sign sign() const { return sign_; }
    const std::string& name() const { return name_; }
    const Ldlt& ldlt() const { return ldlt_; }

    // Determinant of the positive Gram matrix.
    const Int& det() const { return det_; }
    bool is_unimodular() const { return det_ == 1; }
    bool is_even() const;

    // Absolute norm |x^2| = x^T G x in basis coordinates.
    Int norm(const Vec& x) const;
    Int inner(const Vec& x, const Vec& y) const;

    bool has_ambient() const { return ambient_basis_doubled_.rows() > 0 || rank() == 0; }
    std::size_t ambient_dim() const { return ambient_basis_doubled_.rows(); }
    // Column j holds 2 * (ambient coordinates of basis vector j).
    const IMat& ambient_basis_doubled() const { return ambient_basis_doubled_; }

    // Doubled ambient coordinates of a lattice vector given in basis
    // coordinates.
    Vec to_ambient_doubled(const Vec& x) const;

    // Basis coordinates of an ambient vector (doubled coordinates); empty if
    // the vector is not in the lattice.
    std::optional<Vec> ambient_to_basis(const Vec& doubled) const;

private:
    Lattice(IMat gram, Sign sign, std::string name, IMat ambient_basis_doubled);

    IMat gram_;
    Sign sign_;
    std::string name_;
    IMat ambient_basis_doubled_;  // ambient_dim x rank; 0x0 when absent
    Ldlt ldlt_;
    Int det_;
};

}  // namespace hlat
