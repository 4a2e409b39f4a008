#pragma once

#include "hlat/matrix.hpp"

#include <cstdint>
#include <vector>

namespace hlat::detline {

// A linear map is just its rational matrix in the standard bases; every
// determinant line det(S) = det(ker S) (x) det(coker S)* is trivialized by
// canonical generators: the reduced-echelon kernel basis, and the classes of
// the standard basis vectors on the non-pivot rows of the column space.  An
// isomorphism between two determinant lines is then one nonzero rational.

// Order of the two factors in the top wedge alpha0(x0) ^ s(x2).  The sign
// lemmas are claimed (and tested) to hold under either convention.
enum class WedgeOrder { kernel_first, section_first };

// Scalar of det(A0) (x) det(A2) -> det(A1) for an exact sequence
// 0 -> A0 -> A1 -> A2 -> 0: x0 (x) x2 |-> alpha0(x0) ^ s(x2) with s any right
// inverse of alpha1 (the scalar does not depend on the choice).
Rat exact3_iso(const QMat& alpha0, const QMat& alpha1, WedgeOrder order = WedgeOrder::kernel_first);
Rat exact3_iso_with_section(const QMat& alpha0, const QMat& alpha1, const QMat& section,
                            WedgeOrder order = WedgeOrder::kernel_first);

// maps[i] : A_i -> A_{i+1}; spaces are read off the shapes.
struct ExactComplex {
    std::vector<QMat> maps;
};

bool is_exact(const ExactComplex& complex);

// Scalar of the natural isomorphism (x)_{i even} det(A_i) -> (x)_{i odd}
// det(A_i), via the telescoping splittings through Z_i = im(alpha_{i-1}).
Rat acyclic_iso(const ExactComplex& complex, WedgeOrder order = WedgeOrder::kernel_first);

// S_f : V + F^n -> W + F^n, (v,z) |-> (Sv + fz, 0), as a matrix.
QMat stabilized(const QMat& s, const QMat& f);

// Scalar of det(S) -> det(S_f) from the six-term sequence
// 0 -> ker S -> ker S_f -> F^n -> coker S -> coker S_f -> F^n -> 0.
Rat stabilize(const QMat& s, const QMat& f, WedgeOrder order = WedgeOrder::kernel_first);

// Scalar of det(S) -> det(Q S P^{-1}) induced by the isomorphisms P, Q of
// domain and codomain.
Rat conjugation_iso(const QMat& s, const QMat& p, const QMat& q);

// Lemma check: lambda3 = (-1)^{dim(L1) dim(K2)} lambda2 lambda1 for the
// stabilization square of f1, f2, where L1 = im(F^{n1} -> coker S) and
// K2 = ker(F^{n2} -> coker(S + f1)).
bool verify_square_sign(const QMat& s, const QMat& f1, const QMat& f2,
                        WedgeOrder order = WedgeOrder::kernel_first);

// The patched isomorphism det(T) -> det(T_g) through the common stabilization
// det(T_{g+f1+f2}), for auxiliary f1, f2 with T+f1 and T+g+f2 surjective.
Rat gamma_patched(const QMat& s, const QMat& g, const QMat& f1, const QMat& f2,
                  WedgeOrder order = WedgeOrder::kernel_first);

// Proposition check: gamma = (-1)^{d1 e1 + d2 e2 + d1 p + d1 d2 + d2} gamma'
// with d1 = dim coker(S), d2 = dim coker(S + g), p = source dimension of g,
// and auxiliary block sizes n_j == e_j (mod 2); also checks independence of
// the auxiliary choices.
bool verify_gamma_sign(const QMat& s, const QMat& g, int eps1, int eps2,
                       WedgeOrder order = WedgeOrder::kernel_first);

struct DetlineReport {
    std::uint64_t square_total = 0;
    std::uint64_t square_pass = 0;
    std::uint64_t square_odd_cases = 0;  // instances with dim(L1)*dim(K2) odd
    std::uint64_t gamma_total = 0;
    std::uint64_t gamma_pass = 0;
    std::uint64_t exact3_total = 0;
    std::uint64_t exact3_pass = 0;

    bool all_passed() const {
        return square_pass == square_total && gamma_pass == gamma_total &&
               exact3_pass == exact3_total;
    }
};

// Randomized verification run: `trials` square-sign instances (both wedge
// orders), `trials` gamma-sign instances cycling the four (eps1, eps2) pairs,
// and trials/2 right-inverse-independence instances.
DetlineReport detline_check(std::uint64_t trials, std::size_t max_dim, std::uint64_t seed);

}  // namespace hlat::detline
