#include "hlat/enumerate.hpp"
#include "hlat/errors.hpp"
#include "hlat/invariants.hpp"
#include "test_util.hpp"

#include "doctest.h"

#include <random>

using namespace hlat;

namespace {

Vec zeros(std::size_t n) { return Vec(n, Int(0)); }

// Independent reference: literal signed minimizer sum straight from the
// definition, sharing nothing with the library's expansion machinery.
Int eta_reference(const Lattice& l, const Vec& w, const Vec& a, int m) {
    auto res = coset_min(l, w);
    if (res.min_norm != l.norm(w)) return 0;
    Int total = 0;
    for (const auto& z : res.minimizers) {
        Vec v(z.size());
        for (std::size_t i = 0; i < z.size(); ++i) v[i] = (z[i] + w[i]) / 2;
        Int dot = 0;
        for (std::size_t i = 0; i < z.size(); ++i) dot += a[i] * z[i];
        Int term = m == 0 ? Int(1) : pow_int(dot, m);
        total += is_odd(l.norm(v)) ? -term : term;
    }
    return total;
}

}  // namespace

TEST_SUITE("invariants") {

TEST_CASE("eta oracle values") {
    Lattice e8 = Lattice::e8();
    Vec q = *e8.ambient_to_basis(Vec{Int(2), Int(2), Int(2), Int(2), Int(0), Int(0), Int(0), Int(0)});
    CHECK(eta(e8, q, zeros(8), 0) == 16);  // all sixteen minimizers count +1

    Lattice d4 = Lattice::diagonal(4);
    Vec ones(4, Int(1));
    CHECK(eta(d4, ones, zeros(4), 0) == 0);
    CHECK(eta(d4, ones, Vec{Int(1), Int(1), Int(1), Int(1)}, 2) == 0);
    CHECK(eta(d4, ones, Vec{Int(1), Int(1), Int(1), Int(1)}, 4) == 384);
    CHECK(eta(d4, ones, Vec{Int(1), Int(2), Int(3), Int(4)}, 4) == 384 * 24);

    // w = 0: single minimizer z = 0 with positive sign.
    CHECK(eta(Lattice::diagonal(3), zeros(3), zeros(3), 0) == 1);
    // Rank 0: the empty vector is its own coset.
    CHECK(eta(Lattice(), Vec{}, Vec{}, 0) == 1);
}

TEST_CASE("eta input validation") {
    Lattice e8 = Lattice::e8();
    Vec e1(8, Int(0));
    e1[0] = 1;
    CHECK_THROWS_AS(eta(e8, e1, zeros(8), 1), Error);   // parity: |w^2| = 2, m odd
    CHECK_THROWS_AS(eta(e8, e1, zeros(8), -2), Error);  // negative degree
    CHECK_THROWS_AS(eta(e8, e1, zeros(7), 0), Error);   // size mismatch
    CHECK_THROWS_AS(eta(e8, zeros(7), zeros(8), 0), Error);
}

TEST_CASE("non-extremal representatives give eta = 0") {
    Lattice d1 = Lattice::diagonal(1);
    CHECK_FALSE(is_extremal(d1, Vec{Int(3)}));
    CHECK(eta(d1, Vec{Int(3)}, Vec{Int(1)}, 1) == 0);
    CHECK(eta_polynomial(d1, Vec{Int(3)}, 1).is_zero());
    CHECK_FALSE(minimal_m(d1, Vec{Int(3)}).has_value());
    CHECK(is_extremal(d1, Vec{Int(1)}));
}

TEST_CASE("eta polynomial structure") {
    Lattice d4 = Lattice::diagonal(4);
    Vec ones(4, Int(1));

    auto p4 = eta_polynomial(d4, ones, 4);
    REQUIRE(p4.coeffs.size() == 1);
    CHECK(p4.coeffs.at(MultiIndex{1, 1, 1, 1}) == 384);
    CHECK(p4.m == 4);
    CHECK(p4.rank == 4);

    CHECK(eta_polynomial(d4, ones, 0).is_zero());
    CHECK(eta_polynomial(d4, ones, 2).is_zero());

    Lattice e8 = Lattice::e8();
    Vec q = *e8.ambient_to_basis(Vec{Int(2), Int(2), Int(2), Int(2), Int(0), Int(0), Int(0), Int(0)});
    auto p0 = eta_polynomial(e8, q, 0);
    REQUIRE(p0.coeffs.size() == 1);
    CHECK(p0.coeffs.at(MultiIndex(8, 0)) == 16);
    CHECK(p0.evaluate(zeros(8)) == 16);

    // Degree above the configured cap is a usage error, not a silent zero.
    CHECK_THROWS_AS(eta_polynomial(d4, ones, 10, {}, 8), Error);
}

TEST_CASE("minimal_m scan") {
    Lattice d4 = Lattice::diagonal(4);
    Vec ones(4, Int(1));
    auto m4 = minimal_m(d4, ones);
    REQUIRE(m4.has_value());
    CHECK(*m4 == 4);  // degrees 0 and 2 vanish, 4 does not

    Lattice e8 = Lattice::e8();
    Vec q = *e8.ambient_to_basis(Vec{Int(2), Int(2), Int(2), Int(2), Int(0), Int(0), Int(0), Int(0)});
    CHECK(minimal_m(e8, q) == 0);

    CHECK(minimal_m(Lattice::diagonal(1), Vec{Int(1)}) == 1);

    // A cap below the answer is inconclusive and must say so.
    CHECK_THROWS_AS(minimal_m(d4, ones, {}, 2), Error);
    CHECK_THROWS_AS(minimal_m(d4, ones, {}, 3), Error);
    CHECK(minimal_m(d4, ones, {}, 4) == 4);
}

TEST_CASE("coset class enumeration") {
    CHECK(coset_classes(3).size() == 8);
    CHECK(class_rep(3, 0) == zeros(3));
    CHECK(class_rep(3, 5) == Vec{Int(1), Int(0), Int(1)});  // coordinate 0 is the top bit
    CHECK(class_rep(3, 7) == Vec{Int(1), Int(1), Int(1)});
    CHECK_THROWS_AS(coset_classes(21, 20), Error);
}

TEST_CASE("e invariant certificates") {
    for (std::size_t n = 1; n <= 5; ++n) {
        auto cert = e_invariant(Lattice::diagonal(n));
        CAPTURE(n);
        CHECK(cert.value == 0);
        CHECK(cert.num_classes == (std::uint64_t(1) << n));
    }

    auto e8cert = e_invariant(Lattice::e8());
    CHECK(e8cert.value == 1);
    CHECK(e8cert.witness_min_norm == 2);
    CHECK(e8cert.witness_m == 0);
    CHECK(e8cert.witness_eta.evaluate(zeros(8)) == 2);
    CHECK(e8cert.num_classes == 256);
    // The witness really is extremal with a nonzero eta of the stated degree.
    CHECK(is_extremal(Lattice::e8(), e8cert.witness_w));
    CHECK_FALSE(eta_polynomial(Lattice::e8(), e8cert.witness_w, e8cert.witness_m).is_zero());

    // Table kept only on request.
    EInvariantOptions no_table;
    no_table.keep_table = false;
    CHECK(e_invariant(Lattice::e8(), {}, no_table).table.empty());

    // Thread count never changes the certificate.
    EInvariantOptions two;
    two.threads = 2;
    auto par = e_invariant(Lattice::e8(), {}, two);
    CHECK(par.value == e8cert.value);
    CHECK(par.witness_mask == e8cert.witness_mask);
    CHECK(par.witness_w == e8cert.witness_w);

    CHECK_THROWS_AS(e_invariant(Lattice::e8(), {50}), Error);
}

TEST_CASE("property: extremal representative change flips by the square of the shift") {
    // eta follows its representative's level, so the identity
    // eta(w + 2l) = (-1)^{|l^2|} eta(w) relates two *extremal* representatives;
    // the coset minimizers are exactly those, so draw the pair from them.
    std::mt19937_64 rng(160301);
    int done = 0;
    while (done < 1000) {
        Lattice l = testutil::draw_lattice(rng, 1 + rng() % 4);
        Vec w = testutil::draw_vec(rng, l.rank(), 2);
        auto res = coset_min(l, w);
        if (res.minimizers.size() < 2) continue;
        const Vec& z1 = res.minimizers[rng() % res.minimizers.size()];
        const Vec& z2 = res.minimizers[rng() % res.minimizers.size()];
        if (z1 == z2) continue;
        Vec ell(z1.size());
        for (std::size_t i = 0; i < z1.size(); ++i) ell[i] = (z2[i] - z1[i]) / 2;
        const int m = static_cast<int>(l.norm(z1) % 2) + 2 * static_cast<int>(rng() % 2);
        Vec a = testutil::draw_vec(rng, l.rank(), 2);
        Int lhs = eta(l, z2, a, m);
        Int rhs = eta(l, z1, a, m);
        if (is_odd(l.norm(ell))) rhs = -rhs;
        CHECK(lhs == rhs);
        ++done;
    }
}

TEST_CASE("property: eta at m = 0 is even off the doubled sublattice") {
    std::mt19937_64 rng(160302);
    int done = 0;
    while (done < 1000) {
        Lattice l = testutil::draw_lattice(rng, 1 + rng() % 4);
        Vec w = testutil::draw_vec(rng, l.rank(), 2);
        bool in_2l = true;
        for (const auto& x : w) in_2l = in_2l && is_even(x);
        if (in_2l) continue;  // w in 2L pairs z with itself at z = 0
        if (is_odd(l.norm(w))) continue;  // m = 0 needs even |w^2|
        Int value = eta(l, w, zeros(l.rank()), 0);
        CHECK(is_even(value));
        ++done;
    }
}

TEST_CASE("property: eta is multiplicative over direct sums") {
    std::mt19937_64 rng(160303);
    int done = 0;
    while (done < 1000) {
        Lattice l1 = testutil::draw_lattice(rng, 1 + rng() % 3);
        Lattice l2 = testutil::draw_lattice(rng, 1 + rng() % 3);
        Vec w1 = testutil::draw_vec(rng, l1.rank(), 2);
        Vec w2 = testutil::draw_vec(rng, l2.rank(), 2);
        if (is_odd(l2.norm(w2))) continue;  // align parities: m ≡ |w1^2| works for both
        const int m = static_cast<int>(l1.norm(w1) % 2);
        Vec a1 = testutil::draw_vec(rng, l1.rank(), 2);

        Lattice sum = Lattice::direct_sum(l1, l2);
        Vec w(w1);
        w.insert(w.end(), w2.begin(), w2.end());
        Vec a(a1);
        const Vec tail = zeros(l2.rank());
        a.insert(a.end(), tail.begin(), tail.end());

        CHECK(eta(sum, w, a, m) == eta(l1, w1, a1, m) * eta(l2, w2, zeros(l2.rank()), 0));
        ++done;
    }
}

TEST_CASE("property: polynomial expansion evaluates to eta") {
    std::mt19937_64 rng(160304);
    int done = 0;
    while (done < 1000) {
        Lattice l = testutil::draw_lattice(rng, 1 + rng() % 4);
        Vec w = testutil::draw_vec(rng, l.rank(), 2);
        const int m = static_cast<int>(l.norm(w) % 2) + 2 * static_cast<int>(rng() % 2);
        Vec a = testutil::draw_vec(rng, l.rank(), 3);
        auto poly = eta_polynomial(l, w, m);
        CHECK(poly.evaluate(a) == eta(l, w, a, m));
        CHECK(eta(l, w, a, m) == eta_reference(l, w, a, m));
        ++done;
    }
}

}
