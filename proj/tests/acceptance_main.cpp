// Acceptance gate: one check per certified claim, each printing [PASS] or
// [FAIL] with its runtime.  Run all, or a single one with --only N.

#include "hlat/detline.hpp"
#include "hlat/enumerate.hpp"
#include "hlat/errors.hpp"
#include "hlat/hbounds.hpp"
#include "hlat/invariants.hpp"
#include "hlat/lattice.hpp"

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

using namespace hlat;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool ok = true;
    std::string detail;
};

void fail(Outcome& out, const std::string& why) {
    out.ok = false;
    out.detail += (out.detail.empty() ? "" : "; ") + why;
}

Vec zeros(std::size_t n) { return Vec(n, Int(0)); }

Vec q_in_e8(const Lattice& e8) {
    return *e8.ambient_to_basis(
        Vec{Int(2), Int(2), Int(2), Int(2), Int(0), Int(0), Int(0), Int(0)});
}

std::uint64_t draw(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

Int draw_entry(std::mt19937_64& rng, int bound) {
    return Int(static_cast<std::int64_t>(draw(rng, 2 * bound + 1)) - bound);
}

Vec draw_vec(std::mt19937_64& rng, std::size_t n, int bound) {
    Vec v(n);
    for (auto& x : v) x = draw_entry(rng, bound);
    return v;
}

Lattice draw_lattice(std::mt19937_64& rng, std::size_t rank, int entry_bound = 2) {
    IMat a(rank, rank);
    for (std::size_t i = 0; i < rank; ++i)
        for (std::size_t j = 0; j < rank; ++j) a(i, j) = draw_entry(rng, entry_bound);
    IMat gram(rank, rank);
    for (std::size_t i = 0; i < rank; ++i) {
        for (std::size_t j = 0; j < rank; ++j) {
            Int s = 0;
            for (std::size_t k = 0; k < rank; ++k) s += a(k, i) * a(k, j);
            gram(i, j) = s;
        }
        gram(i, i) += 1;
    }
    return Lattice::from_gram(std::move(gram));
}

// 1. The rank-8 witness: eta at degree 0 has absolute value 16 and every one
//    of the 16 minimizers carries the same sign.  Under one second.
Outcome criterion1() {
    Outcome out;
    Lattice e8 = Lattice::e8();
    Vec q = q_in_e8(e8);
    Int value = eta(e8, q, zeros(8), 0);
    if (abs(value) != 16) fail(out, "|eta| = " + Int(abs(value)).str() + ", want 16");
    auto res = coset_min(e8, q);
    if (res.minimizers.size() != 16)
        fail(out, std::to_string(res.minimizers.size()) + " minimizers, want 16");
    // Same sign for all 16 <=> |sum of signs| = count, and the degree-0 eta
    // is exactly that sum.
    if (abs(value) != Int(res.minimizers.size())) fail(out, "minimizer signs are not uniform");
    out.detail = "eta = " + value.str() + " over 16 uniform-sign minimizers";
    return out;
}

// 2. Diagonal lattices have e = 0 through rank 8.
Outcome criterion2() {
    Outcome out;
    for (std::size_t n = 1; n <= 8; ++n) {
        auto cert = e_invariant(Lattice::diagonal(n));
        if (cert.value != 0)
            fail(out, "e(diagonal(" + std::to_string(n) + ")) = " + cert.value.str());
    }
    if (out.ok) out.detail = "e(diagonal(n)) = 0 for n = 1..8";
    return out;
}

// 3. One e8 summand forces e = 1, alone or with a diagonal part.
Outcome criterion3() {
    Outcome out;
    auto alone = e_invariant(Lattice::e8());
    if (alone.value != 1) fail(out, "e(e8) = " + alone.value.str() + ", want 1");
    for (std::size_t d = 1; d <= 3; ++d) {
        Lattice sum = Lattice::direct_sum(Lattice::e8(), Lattice::diagonal(d));
        auto cert = e_invariant(sum);
        if (cert.value != 1)
            fail(out, "e(e8+diag:" + std::to_string(d) + ") = " + cert.value.str() + ", want 1");
    }
    if (out.ok) out.detail = "e = 1 for e8 and e8+diag:{1,2,3}";
    return out;
}

// 4. Two e8 summands force e = 2; the full 65536-class sweep must finish.
Outcome criterion4() {
    Outcome out;
    Lattice ee = Lattice::direct_sum(Lattice::e8(), Lattice::e8());
    EInvariantOptions options;
    options.keep_table = false;
    auto cert = e_invariant(ee, {10'000'000'000ULL}, options);
    if (cert.value != 2) fail(out, "e(e8+e8) = " + cert.value.str() + ", want 2");
    if (cert.num_classes != 65536)
        fail(out, std::to_string(cert.num_classes) + " classes, want 65536");
    out.detail = "e(e8+e8) = " + cert.value.str() + " over " +
                 std::to_string(cert.num_classes) + " classes, " +
                 std::to_string(cert.nodes_visited) + " nodes";
    return out;
}

// 5. The rank-4k family: certified value floor(k/2) for k = 2, 3, 4, with the
//    lower and upper bounds meeting.
Outcome criterion5() {
    Outcome out;
    for (int k = 2; k <= 4; ++k) {
        auto res = brieskorn_h(k, {1'000'000'000ULL});
        const Int want = k / 2;
        if (res.value != want)
            fail(out, "k=" + std::to_string(k) + ": value " + res.value.str());
        if (res.lower != res.upper || res.lower != res.value)
            fail(out, "k=" + std::to_string(k) + ": bounds do not meet");
        if (res.eta0 == 0) fail(out, "k=" + std::to_string(k) + ": eta vanishes");
    }
    if (out.ok) out.detail = "h = 1, 1, 2 for k = 2, 3, 4, certificates verified";
    return out;
}

// 6. The branch-and-bound engine agrees with the exhaustive box search on 500
//    random definite lattices of rank <= 5.
Outcome criterion6() {
    Outcome out;
    std::mt19937_64 rng(6);
    int done = 0, mismatches = 0;
    while (done < 500) {
        Lattice l = draw_lattice(rng, 1 + draw(rng, 5));
        Vec w = draw_vec(rng, l.rank(), 3);
        // Keep the reference search affordable: skip draws whose guaranteed
        // box is enormous (the engine itself has no such limit).
        Int radius = guaranteed_box_radius(l, w);
        Int volume = 1;
        bool huge = false;
        for (std::size_t i = 0; i < l.rank() && !huge; ++i) {
            volume *= 2 * radius + 1;
            huge = volume > 2'000'000;
        }
        if (huge) continue;
        auto fast = coset_min(l, w);
        auto naive = naive_coset_min(l, w);
        if (fast.min_norm != naive.min_norm || fast.minimizers != naive.minimizers) ++mismatches;
        ++done;
    }
    if (mismatches != 0) fail(out, std::to_string(mismatches) + " mismatches");
    out.detail = "500 random lattices, " + std::to_string(mismatches) + " mismatches";
    return out;
}

// 7. Randomized eta identities, 1000 instances each: representative shifts
//    scale by the sign of the shift's square; degree-0 values are even off
//    the doubled sublattice; direct sums multiply; expansions evaluate to the
//    direct sum.
Outcome criterion7() {
    Outcome out;

    {
        // The identity eta(w + 2l) = (-1)^{|l^2|} eta(w) relates two extremal
        // representatives of one coset; the minimizers are exactly those.
        std::mt19937_64 rng(71);
        int done = 0, bad = 0;
        while (done < 1000) {
            Lattice l = draw_lattice(rng, 1 + draw(rng, 4));
            Vec w = draw_vec(rng, l.rank(), 2);
            auto res = coset_min(l, w);
            if (res.minimizers.size() < 2) continue;
            const Vec& z1 = res.minimizers[draw(rng, res.minimizers.size())];
            const Vec& z2 = res.minimizers[draw(rng, res.minimizers.size())];
            if (z1 == z2) continue;
            Vec ell(z1.size());
            for (std::size_t i = 0; i < z1.size(); ++i) ell[i] = (z2[i] - z1[i]) / 2;
            const int m = static_cast<int>(l.norm(z1) % 2) + 2 * static_cast<int>(draw(rng, 2));
            Vec a = draw_vec(rng, l.rank(), 2);
            Int lhs = eta(l, z2, a, m);
            Int rhs = eta(l, z1, a, m);
            if (is_odd(l.norm(ell))) rhs = -rhs;
            if (lhs != rhs) ++bad;
            ++done;
        }
        if (bad) fail(out, "representative invariance: " + std::to_string(bad) + " failures");
    }

    {
        std::mt19937_64 rng(72);
        int done = 0, bad = 0;
        while (done < 1000) {
            Lattice l = draw_lattice(rng, 1 + draw(rng, 4));
            Vec w = draw_vec(rng, l.rank(), 2);
            bool in_2l = true;
            for (const auto& x : w) in_2l = in_2l && is_even(x);
            if (in_2l || is_odd(l.norm(w))) continue;
            if (is_odd(eta(l, w, zeros(l.rank()), 0))) ++bad;
            ++done;
        }
        if (bad) fail(out, "degree-0 evenness: " + std::to_string(bad) + " failures");
    }

    {
        std::mt19937_64 rng(73);
        int done = 0, bad = 0;
        while (done < 1000) {
            Lattice l1 = draw_lattice(rng, 1 + draw(rng, 3));
            Lattice l2 = draw_lattice(rng, 1 + draw(rng, 3));
            Vec w1 = draw_vec(rng, l1.rank(), 2);
            Vec w2 = draw_vec(rng, l2.rank(), 2);
            if (is_odd(l2.norm(w2))) continue;
            const int m = static_cast<int>(l1.norm(w1) % 2);
            Vec a1 = draw_vec(rng, l1.rank(), 2);
            Lattice sum = Lattice::direct_sum(l1, l2);
            Vec w(w1);
            w.insert(w.end(), w2.begin(), w2.end());
            Vec a(a1);
            Vec tail = zeros(l2.rank());
            a.insert(a.end(), tail.begin(), tail.end());
            if (eta(sum, w, a, m) != eta(l1, w1, a1, m) * eta(l2, w2, zeros(l2.rank()), 0)) ++bad;
            ++done;
        }
        if (bad) fail(out, "direct-sum multiplicativity: " + std::to_string(bad) + " failures");
    }

    {
        std::mt19937_64 rng(74);
        int done = 0, bad = 0;
        while (done < 1000) {
            Lattice l = draw_lattice(rng, 1 + draw(rng, 4));
            Vec w = draw_vec(rng, l.rank(), 2);
            const int m = static_cast<int>(l.norm(w) % 2) + 2 * static_cast<int>(draw(rng, 2));
            Vec a = draw_vec(rng, l.rank(), 3);
            if (eta_polynomial(l, w, m).evaluate(a) != eta(l, w, a, m)) ++bad;
            ++done;
        }
        if (bad) fail(out, "expansion evaluation: " + std::to_string(bad) + " failures");
    }

    if (out.ok) out.detail = "4 identities x 1000 instances, zero failures";
    return out;
}

// 8. Determinant-line sign identities: 1000 square-sign instances (with at
//    least 50 odd-product cases), 1000 padded-stabilization instances across
//    all four parity pairs, 500 right-inverse independence instances.
Outcome criterion8() {
    Outcome out;
    auto rep = detline::detline_check(1000, 5, 1);
    if (rep.square_pass != 1000 || rep.square_total != 1000)
        fail(out, "square-sign " + std::to_string(rep.square_pass) + "/" +
                      std::to_string(rep.square_total));
    if (rep.square_odd_cases < 50)
        fail(out, "only " + std::to_string(rep.square_odd_cases) + " odd-product cases");
    if (rep.gamma_pass != 1000 || rep.gamma_total != 1000)
        fail(out, "pad-sign " + std::to_string(rep.gamma_pass) + "/" +
                      std::to_string(rep.gamma_total));
    if (rep.exact3_pass != 500 || rep.exact3_total != 500)
        fail(out, "right-inverse independence " + std::to_string(rep.exact3_pass) + "/" +
                      std::to_string(rep.exact3_total));
    out.detail = "square 1000/1000 (" + std::to_string(rep.square_odd_cases) +
                 " odd), pad 1000/1000, sections 500/500";
    return out;
}

// 9. Scope statement: what this artifact deliberately does not compute.
Outcome criterion9() {
    Outcome out;
    out.detail =
        "excluded by design: moduli-space dimensions, cohomology-ring relations, "
        "boundary/end counts, and representation counts are consumed as stated "
        "arithmetic facts only; no gauge-theoretic quantity is computed here";
    return out;
}

struct Criterion {
    int number;
    const char* label;
    double budget_seconds;  // 0: no stated budget
    Outcome (*run)();
};

const Criterion kCriteria[] = {
    {1, "rank-8 witness eta value and sign pattern", 1.0, criterion1},
    {2, "diagonal lattices have e = 0 (ranks 1-8)", 30.0, criterion2},
    {3, "one e8 summand forces e = 1", 300.0, criterion3},
    {4, "two e8 summands force e = 2 (65536 classes)", 1800.0, criterion4},
    {5, "rank-4k family certificates (k = 2, 3, 4)", 0.0, criterion5},
    {6, "engine vs box-search oracle on 500 random lattices", 0.0, criterion6},
    {7, "eta identity properties, 1000 instances each", 0.0, criterion7},
    {8, "determinant-line sign identities", 120.0, criterion8},
    {9, "gauge-theoretic scope exclusions", 0.0, criterion9},
};

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        std::string arg = argv[i];
        if (arg == "--only" && i + 1 < argc) {
            only = std::atoi(argv[++i]);
        } else {
            std::fprintf(stderr, "usage: %s [--only N]\n", argv[0]);
            return 2;
        }
    }

    int failures = 0;
    for (const auto& c : kCriteria) {
        if (only != 0 && c.number != only) continue;
        auto start = Clock::now();
        Outcome out;
        try {
            out = c.run();
        } catch (const std::exception& e) {
            out.ok = false;
            out.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(Clock::now() - start).count();
        if (c.budget_seconds > 0 && secs >= c.budget_seconds) {
            out.ok = false;
            out.detail += (out.detail.empty() ? "" : "; ") + std::string("over the ") +
                          std::to_string(c.budget_seconds) + "s budget";
        }
        std::printf("[%s] %d. %s (%.2fs)%s%s\n", out.ok ? "PASS" : "FAIL", c.number, c.label,
                    secs, out.detail.empty() ? "" : " -- ", out.detail.c_str());
        std::fflush(stdout);
        if (!out.ok) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
