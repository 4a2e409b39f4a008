#include "hlat/invariants.hpp"

#include "hlat/errors.hpp"

#include <algorithm>
#include <future>
#include <string>
#include <utility>

namespace hlat {

namespace {

// Complete minimizer set of one coset, with the sign (-1)^{|((z+ref)/2)^2|}
// of every minimizer relative to a fixed reference vector ref in the coset.
struct Shell {
    Int min_norm;
    std::vector<Vec> zs;
    std::vector<int> signs;
    std::uint64_t nodes = 0;
};

int sign_relative(const Lattice& lattice, const Vec& z, const Vec& ref) {
    Vec v(z.size());
    for (std::size_t i = 0; i < z.size(); ++i) v[i] = (z[i] + ref[i]) / 2;  // exact: z == ref mod 2
    return is_odd(lattice.norm(v)) ? -1 : +1;
}

Shell make_shell(const Lattice& lattice, const Vec& ref, CosetMinResult r) {
    Shell sh;
    sh.min_norm = std::move(r.min_norm);
    sh.nodes = r.nodes_visited;
    sh.zs = std::move(r.minimizers);
    sh.signs.reserve(sh.zs.size());
    for (const Vec& z : sh.zs) sh.signs.push_back(sign_relative(lattice, z, ref));
    return sh;
}

// Successor in the lexicographic-from-the-left enumeration of exponent
// vectors with a fixed total: move one unit left-to-right, carrying the tail.
bool next_composition(std::vector<int>& a) {
    const std::size_t n = a.size();
    if (n <= 1) return false;
    const int tail = a[n - 1];
    std::size_t i = n - 1;
    do {
        if (i == 0) return false;
        --i;
    } while (a[i] == 0);
    a[i] -= 1;
    a[n - 1] = 0;
    a[i + 1] = tail + 1;
    return true;
}

// Calls fn on every exponent vector of length n with total m, starting at
// (m, 0, ..., 0); stops early when fn returns true and reports whether it did.
template <class Fn>
bool for_each_composition(std::size_t n, int m, Fn&& fn) {
    if (n == 0) {
        if (m != 0) return false;
        std::vector<int> empty;
        return fn(static_cast<const std::vector<int>&>(empty));
    }
    std::vector<int> a(n, 0);
    a[0] = m;
    for (;;) {
        if (fn(static_cast<const std::vector<int>&>(a))) return true;
        if (!next_composition(a)) return false;
    }
}

// pw[k] holds z_k[i]^e at slot i*(m+1)+e, for exponents e = 0..m.
std::vector<std::vector<Int>> power_tables(const Shell& sh, std::size_t n, int m) {
    std::vector<std::vector<Int>> pw(sh.zs.size());
    for (std::size_t k = 0; k < sh.zs.size(); ++k) {
        pw[k].assign(n * (m + 1), Int(1));
        for (std::size_t i = 0; i < n; ++i)
            for (int e = 1; e <= m; ++e)
                pw[k][i * (m + 1) + e] = pw[k][i * (m + 1) + e - 1] * sh.zs[k][i];
    }
    return pw;
}

// sum_z sign(z) * z^alpha over the shell.
Int composition_sum(const Shell& sh, const std::vector<std::vector<Int>>& pw, int m,
                    const std::vector<int>& alpha) {
    Int total = 0;
    for (std::size_t k = 0; k < sh.zs.size(); ++k) {
        Int term(sh.signs[k]);
        for (std::size_t i = 0; i < alpha.size(); ++i) {
            if (alpha[i] == 0) continue;
            term *= pw[k][i * (m + 1) + alpha[i]];
            if (term == 0) break;
        }
        total += term;
    }
    return total;
}

std::vector<Int> factorials(int m) {
    std::vector<Int> f(m + 1, Int(1));
    for (int i = 1; i <= m; ++i) f[i] = f[i - 1] * i;
    return f;
}

EtaPolynomial shell_polynomial(std::size_t n, const Shell& sh, int m) {
    EtaPolynomial poly;
    poly.m = m;
    poly.rank = n;
    const auto pw = power_tables(sh, n, m);
    const auto fact = factorials(m);
    for_each_composition(n, m, [&](const std::vector<int>& alpha) {
        Int s = composition_sum(sh, pw, m, alpha);
        if (s != 0) {
            Int mult = fact[m];
            for (int e : alpha)
                if (e > 1) mult /= fact[e];
            poly.coeffs.emplace(alpha, mult * s);
        }
        return false;
    });
    return poly;
}

// Least m of the right parity, scanning up to min(min_norm, m_max), whose
// degree-m expansion has some nonzero coefficient.  Throws when m_max cuts
// the scan short of min_norm without a verdict.
std::optional<int> shell_minimal_m(std::size_t n, const Shell& sh, int m_max) {
    const bool truncated = Int(m_max) < sh.min_norm;
    const int cap = truncated ? m_max : static_cast<int>(sh.min_norm);
    const int start = is_odd(sh.min_norm) ? 1 : 0;
    for (int m = start; m <= cap; m += 2) {
        const auto pw = power_tables(sh, n, m);
        const bool found = for_each_composition(n, m, [&](const std::vector<int>& alpha) {
            return composition_sum(sh, pw, m, alpha) != 0;
        });
        if (found) return m;
    }
    if (truncated)
        throw invalid_input("minimal_m: scan inconclusive at degree cap " +
                            std::to_string(m_max) + " < coset minimum " +
                            sh.min_norm.str() + "; raise m_max");
    return std::nullopt;
}

void check_w(const Lattice& lattice, const Vec& w, const char* who) {
    if (w.size() != lattice.rank())
        throw invalid_input(std::string(who) + ": w has length " + std::to_string(w.size()) +
                            ", lattice rank is " + std::to_string(lattice.rank()));
}

void check_parity(const Int& w_norm, int m, const char* who) {
    if (is_odd(w_norm - m))
        throw invalid_input(std::string(who) + ": parity mismatch, need m == |w^2| (mod 2) but |w^2| = " +
                            w_norm.str() + " and m = " + std::to_string(m));
}

}  // namespace

Int EtaPolynomial::evaluate(const Vec& a) const {
    if (a.size() != rank) throw invalid_input("eta polynomial: a has wrong length");
    Int total = 0;
    for (const auto& [alpha, c] : coeffs) {
        Int term = c;
        for (std::size_t i = 0; i < alpha.size(); ++i) {
            if (alpha[i] == 0) continue;
            term *= pow_int(a[i], static_cast<unsigned>(alpha[i]));
            if (term == 0) break;
        }
        total += term;
    }
    return total;
}

bool is_extremal(const Lattice& lattice, const Vec& w, const EnumBudget& budget) {
    check_w(lattice, w, "is_extremal");
    return coset_min(lattice, w, budget).min_norm == lattice.norm(w);
}

Int eta(const Lattice& lattice, const Vec& w, const Vec& a, int m, const EnumBudget& budget) {
    check_w(lattice, w, "eta");
    if (a.size() != lattice.rank()) throw invalid_input("eta: a has wrong length");
    if (m < 0) throw invalid_input("eta: m must be nonnegative");
    const Int w_norm = lattice.norm(w);
    check_parity(w_norm, m, "eta");

    CosetMinResult r = coset_min(lattice, w, budget);
    if (r.min_norm < w_norm) return 0;  // no z at level |w^2|: empty sum

    Int total = 0;
    for (const Vec& z : r.minimizers) {
        Int dot = 0;
        for (std::size_t i = 0; i < z.size(); ++i) dot += a[i] * z[i];
        const Int p = pow_int(dot, static_cast<unsigned>(m));
        total += sign_relative(lattice, z, w) > 0 ? p : -p;
    }
    return total;
}

EtaPolynomial eta_polynomial(const Lattice& lattice, const Vec& w, int m, const EnumBudget& budget,
                             int m_max) {
    check_w(lattice, w, "eta_polynomial");
    if (m < 0) throw invalid_input("eta_polynomial: m must be nonnegative");
    if (m > m_max)
        throw invalid_input("eta_polynomial: degree " + std::to_string(m) +
                            " exceeds the configured cap " + std::to_string(m_max));
    const Int w_norm = lattice.norm(w);
    check_parity(w_norm, m, "eta_polynomial");

    CosetMinResult r = coset_min(lattice, w, budget);
    EtaPolynomial poly;
    poly.m = m;
    poly.rank = lattice.rank();
    if (r.min_norm < w_norm) return poly;  // non-extremal: zero polynomial

    const Shell sh = make_shell(lattice, w, std::move(r));
    return shell_polynomial(lattice.rank(), sh, m);
}

std::optional<int> minimal_m(const Lattice& lattice, const Vec& w, const EnumBudget& budget,
                             int m_max) {
    check_w(lattice, w, "minimal_m");
    if (m_max < 0) throw invalid_input("minimal_m: m_max must be nonnegative");
    const Int w_norm = lattice.norm(w);

    CosetMinResult r = coset_min(lattice, w, budget);
    if (r.min_norm < w_norm) return std::nullopt;  // every eta over w vanishes

    const Shell sh = make_shell(lattice, w, std::move(r));
    return shell_minimal_m(lattice.rank(), sh, m_max);
}

Vec class_rep(std::size_t rank, std::uint64_t index) {
    Vec rep(rank);
    for (std::size_t i = 0; i < rank; ++i) rep[i] = (index >> (rank - 1 - i)) & 1;
    return rep;
}

std::vector<Vec> coset_classes(std::size_t rank, std::size_t guard) {
    if (rank > guard)
        throw invalid_input("coset_classes: rank " + std::to_string(rank) +
                            " exceeds the class-sweep guard " + std::to_string(guard));
    if (rank >= 63) throw invalid_input("coset_classes: rank too large for a class index");
    const std::uint64_t count = std::uint64_t(1) << rank;
    std::vector<Vec> out;
    out.reserve(count);
    for (std::uint64_t k = 0; k < count; ++k) out.push_back(class_rep(rank, k));
    return out;
}

namespace {

struct BestClass {
    bool has = false;
    Int contribution;
    std::uint64_t index = 0;
    int m = 0;
    Shell shell;
};

struct SweepResult {
    std::vector<ClassRow> rows;
    BestClass best;
};

SweepResult sweep_classes(const Lattice& lattice, const CosetEnumerator& enumerator,
                          NodeCounter& counter, std::uint64_t lo, std::uint64_t hi, int m_max,
                          bool keep_rows) {
    const std::size_t n = lattice.rank();
    SweepResult out;
    if (keep_rows) out.rows.reserve(static_cast<std::size_t>(hi - lo));
    for (std::uint64_t index = lo; index < hi; ++index) {
        CosetMinResult r = enumerator.coset_min(class_rep(n, index), counter);
        const Vec& ref = r.minimizers.front();  // lex-least minimizer
        Shell sh = make_shell(lattice, ref, std::move(r));

        ClassRow row;
        row.rep_mask = index;
        row.min_norm = sh.min_norm;
        row.minimizer_count = sh.zs.size();
        row.nodes = sh.nodes;
        row.min_m = shell_minimal_m(n, sh, m_max);
        if (row.min_m) {
            row.contribution = ceil_div(sh.min_norm - *row.min_m, 4);
            if (!out.best.has || *row.contribution > out.best.contribution) {
                out.best.has = true;
                out.best.contribution = *row.contribution;
                out.best.index = index;
                out.best.m = *row.min_m;
                out.best.shell = std::move(sh);
            }
        }
        if (keep_rows) out.rows.push_back(std::move(row));
    }
    return out;
}

void merge_best(BestClass& into, BestClass&& from) {
    if (!from.has) return;
    // Deterministic reduction: larger contribution wins, ties to the
    // lexicographically earlier class.
    if (!into.has || from.contribution > into.contribution ||
        (from.contribution == into.contribution && from.index < into.index)) {
        into = std::move(from);
    }
}

}  // namespace

EInvariantCertificate e_invariant(const Lattice& lattice, const EnumBudget& budget,
                                  const EInvariantOptions& options) {
    const std::size_t n = lattice.rank();
    if (n > options.rank_guard)
        throw invalid_input("e_invariant: rank " + std::to_string(n) +
                            " exceeds the class-sweep guard " + std::to_string(options.rank_guard));
    if (n >= 63) throw invalid_input("e_invariant: rank too large for a class index");

    const std::uint64_t num_classes = std::uint64_t(1) << n;
    NodeCounter counter(budget.max_nodes);
    const CosetEnumerator enumerator(lattice);

    unsigned threads = options.threads == 0 ? default_threads() : options.threads;
    if (threads > num_classes) threads = static_cast<unsigned>(num_classes);
    if (threads == 0) threads = 1;

    SweepResult merged;
    if (threads == 1) {
        merged = sweep_classes(lattice, enumerator, counter, 0, num_classes, options.m_max,
                               options.keep_table);
    } else {
        std::vector<std::future<SweepResult>> futures;
        futures.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) {
            const std::uint64_t lo = num_classes / threads * t;
            const std::uint64_t hi = t + 1 == threads ? num_classes : num_classes / threads * (t + 1);
            futures.push_back(std::async(std::launch::async, [&, lo, hi] {
                return sweep_classes(lattice, enumerator, counter, lo, hi, options.m_max,
                                     options.keep_table);
            }));
        }
        for (auto& fut : futures) {
            SweepResult part = fut.get();
            for (auto& row : part.rows) merged.rows.push_back(std::move(row));
            merge_best(merged.best, std::move(part.best));
        }
    }

    if (!merged.best.has)
        throw internal_error("e_invariant: no class produced a finite degree (zero class must)");

    EInvariantCertificate cert;
    cert.value = merged.best.contribution < 0 ? Int(0) : merged.best.contribution;
    cert.witness_mask = merged.best.index;
    cert.witness_class = class_rep(n, merged.best.index);
    cert.witness_w = merged.best.shell.zs.front();
    cert.witness_m = merged.best.m;
    cert.witness_min_norm = merged.best.shell.min_norm;
    cert.witness_eta = shell_polynomial(n, merged.best.shell, merged.best.m);
    cert.table = std::move(merged.rows);
    cert.nodes_visited = counter.used();
    cert.num_classes = num_classes;
    return cert;
}

}  // namespace hlat
