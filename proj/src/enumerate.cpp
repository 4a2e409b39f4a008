#include "hlat/enumerate.hpp"

#include "hlat/errors.hpp"

#include <algorithm>
#include <utility>

namespace hlat {

namespace {

// Batch size for charging nodes to the shared counter: keeps the atomic off
// the hot path while keeping budget enforcement timely.
constexpr std::uint64_t kChargeBatch = 4096;

Int lcm_int(const Int& a, const Int& b) { return a / boost::multiprecision::gcd(a, b) * b; }

// The quadratic form rescaled so that the branch-and-bound inner loop runs on
// integers only.  With G = L D L^T and c_i = y_i + sum_{j>i} L_{ji} y_j,
//
//   y^T G y = sum_i d_i c_i^2,
//
// we scale column i by den[i] (clearing the denominators of column i of L)
// and the whole sum by dstar, making every partial sum an integer:
//
//   dstar * y^T G y = sum_i mult[i] * (den[i]*y_i + snum_i)^2,
//   snum_i = sum_{j>i} lnum[j][i] * y_j.
struct ScaledForm {
    std::size_t n = 0;
    std::vector<std::vector<Int>> lnum;  // lnum[j][i] = L(j,i) * den[i], j > i
    std::vector<Int> den;                // per-column denominator, > 0
    std::vector<Int> mult;               // dstar * d_i / den[i]^2
    Int dstar = 1;
};

ScaledForm build_scaled_form(const Ldlt& f) {
    ScaledForm s;
    s.n = f.l.rows();
    s.den.assign(s.n, Int(1));
    s.lnum.assign(s.n, std::vector<Int>());
    for (std::size_t j = 0; j < s.n; ++j) s.lnum[j].assign(j, Int(0));

    for (std::size_t i = 0; i < s.n; ++i) {
        for (std::size_t j = i + 1; j < s.n; ++j)
            s.den[i] = lcm_int(s.den[i], boost::multiprecision::denominator(f.l(j, i)));
        for (std::size_t j = i + 1; j < s.n; ++j) {
            const Rat& q = f.l(j, i);
            s.lnum[j][i] = boost::multiprecision::numerator(q) *
                           (s.den[i] / boost::multiprecision::denominator(q));
        }
    }

    // dstar = lcm_i of (dd_i * den_i^2) where d_i = dn_i / dd_i.
    s.dstar = 1;
    for (std::size_t i = 0; i < s.n; ++i) {
        const Int m = boost::multiprecision::denominator(f.d[i]) * s.den[i] * s.den[i];
        s.dstar = lcm_int(s.dstar, m);
    }
    s.mult.assign(s.n, Int(0));
    for (std::size_t i = 0; i < s.n; ++i) {
        const Int m = boost::multiprecision::denominator(f.d[i]) * s.den[i] * s.den[i];
        s.mult[i] = s.dstar / m * boost::multiprecision::numerator(f.d[i]);
    }
    return s;
}

class BudgetedCount {
public:
    BudgetedCount(NodeCounter& counter) : counter_(counter) {}

    // The destructor records any remainder but never throws; callers flush
    // explicitly on the success path so that a final over-budget charge still
    // surfaces as an error.
    ~BudgetedCount() {
        try {
            flush();
        } catch (...) {
        }
    }

    void tick() {
        if (++local_ == kChargeBatch) flush();
    }

    void flush() {
        if (local_ == 0) return;
        const std::uint64_t n = local_;
        local_ = 0;
        counter_.charge(n);
    }

private:
    NodeCounter& counter_;
    std::uint64_t local_ = 0;
};

// Depth-first coset search over y = wpar + 2Z^n with dstar * y^T G y <=
// bound_scaled.  Levels are processed from n-1 down to 0; at each level the
// candidates are scanned outward from the real minimum of the partial form,
// in both directions, each direction stopping at its first rejection (the
// per-level term is unimodal, so nothing beyond it can fit).  `leaf` may
// shrink bound_scaled (branch-and-bound); shrinking keeps completeness since
// every surviving prefix is re-checked against the current bound.
struct CosetSearch {
    const ScaledForm& form;
    const Vec& wpar;
    Int& bound_scaled;
    BudgetedCount& nodes;
    Vec y;

    template <class Leaf>
    void run(Leaf&& leaf) {
        y.assign(form.n, Int(0));
        if (form.n == 0) {
            if (bound_scaled >= 0) leaf(y, Int(0));
            return;
        }
        descend(form.n - 1, Int(0), std::forward<Leaf>(leaf));
    }

    template <class Leaf>
    void descend(std::size_t level, const Int& partial, Leaf&& leaf) {
        // Center of the per-level parabola in k, where y_level = wpar + 2k:
        // cnum = den*y + snum vanishes at k* = (-snum - wpar*den) / (2 den).
        Int snum_l(0);
        for (std::size_t j = level + 1; j < form.n; ++j)
            if (y[j] != 0) snum_l += form.lnum[j][level] * y[j];

        const Int& den = form.den[level];
        const Int& mult = form.mult[level];
        const Int base = wpar[level] * den + snum_l;  // cnum at k = 0
        const Int step = den << 1;                    // cnum increment per k
        const Int kf = floor_div(-base, step);

        Int k_lo = kf, k_hi = kf + 1;
        Int t_lo, t_hi;
        bool lo_alive = true, hi_alive = true;
        auto term_at = [&](const Int& k) {
            const Int c = base + step * k;
            return Int(mult * c * c);
        };
        t_lo = term_at(k_lo);
        t_hi = term_at(k_hi);

        while (lo_alive || hi_alive) {
            const bool take_lo = lo_alive && (!hi_alive || t_lo <= t_hi);
            Int& k = take_lo ? k_lo : k_hi;
            Int& t = take_lo ? t_lo : t_hi;
            bool& alive = take_lo ? lo_alive : hi_alive;

            nodes.tick();
            const Int total = partial + t;
            if (total > bound_scaled) {
                alive = false;
                continue;
            }
            y[level] = wpar[level] + 2 * k;
            if (level == 0) {
                if (form.dstar == 1) {
                    leaf(y, total);
                } else {
                    leaf(y, Int(total / form.dstar));
                }
            } else {
                descend(level - 1, total, leaf);
            }
            if (take_lo) {
                --k;
            } else {
                ++k;
            }
            t = term_at(k);
        }
        y[level] = 0;
    }
};

Vec parity_reduce(const Vec& w) {
    Vec wpar(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) wpar[i] = ((w[i] % 2) + 2) % 2;
    return wpar;
}

// Greedy +-2e_i descent from the parity-reduced representative; returns an
// achieved coset norm, used as the initial branch-and-bound radius.
Int greedy_start_norm(const Lattice& lattice, const Vec& wpar) {
    const std::size_t n = lattice.rank();
    const IMat& g = lattice.gram();
    Vec z = wpar;
    std::vector<Int> gz(n, Int(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (z[j] != 0) gz[i] += g(i, j) * z[j];
    Int norm = 0;
    for (std::size_t i = 0; i < n; ++i) norm += z[i] * gz[i];

    for (;;) {
        Int best_delta = 0;
        std::size_t best_i = 0;
        int best_t = 0;
        for (std::size_t i = 0; i < n; ++i) {
            const Int gii4 = 4 * g(i, i);
            for (int t : {2, -2}) {
                const Int delta = gii4 + 2 * t * gz[i];
                if (delta < best_delta) {
                    best_delta = delta;
                    best_i = i;
                    best_t = t;
                }
            }
        }
        if (best_t == 0) return norm;
        z[best_i] += best_t;
        for (std::size_t j = 0; j < n; ++j) gz[j] += best_t * g(j, best_i);
        norm += best_delta;
    }
}

}  // namespace

void NodeCounter::charge(std::uint64_t n) {
    const std::uint64_t total = used_.fetch_add(n, std::memory_order_relaxed) + n;
    if (total > max_nodes_)
        throw budget_exceeded("enumeration budget exceeded (" + std::to_string(total) + " > " +
                              std::to_string(max_nodes_) + " nodes)");
}

struct CosetEnumerator::Impl {
    const Lattice* lattice;
    ScaledForm form;
};

CosetEnumerator::CosetEnumerator(const Lattice& lattice)
    : impl_(new Impl{&lattice, build_scaled_form(lattice.ldlt())}) {}

CosetEnumerator::~CosetEnumerator() = default;
CosetEnumerator::CosetEnumerator(CosetEnumerator&&) noexcept = default;
CosetEnumerator& CosetEnumerator::operator=(CosetEnumerator&&) noexcept = default;

CosetMinResult CosetEnumerator::coset_min(const Vec& w, NodeCounter& counter) const {
    const Lattice& lattice = *impl_->lattice;
    if (w.size() != lattice.rank()) throw invalid_input("coset_min: w has wrong length");
    const Vec wpar = parity_reduce(w);

    CosetMinResult result;
    if (lattice.rank() == 0) {
        result.min_norm = 0;
        result.minimizers.push_back(Vec());
        return result;
    }

    const ScaledForm& form = impl_->form;
    Int best = greedy_start_norm(lattice, wpar);
    Int bound_scaled = best * form.dstar;

    const std::uint64_t start_nodes = counter.used();
    {
        BudgetedCount nodes(counter);
        CosetSearch search{form, wpar, bound_scaled, nodes, {}};
        search.run([&](const Vec& y, const Int& norm) {
            if (norm < best) {
                best = norm;
                result.minimizers.clear();
                bound_scaled = best * form.dstar;
            }
            result.minimizers.push_back(y);
        });
        nodes.flush();
    }
    result.min_norm = best;
    result.nodes_visited = counter.used() - start_nodes;
    std::sort(result.minimizers.begin(), result.minimizers.end(), lex_less);
    return result;
}

std::vector<Vec> CosetEnumerator::enumerate_below(const Vec& w, const Int& bound,
                                                  NodeCounter& counter) const {
    const Lattice& lattice = *impl_->lattice;
    if (w.size() != lattice.rank()) throw invalid_input("enumerate_coset_below: w has wrong length");
    if (bound < 0) return {};
    const Vec wpar = parity_reduce(w);

    std::vector<Vec> out;
    if (lattice.rank() == 0) {
        out.push_back(Vec());
        return out;
    }

    const ScaledForm& form = impl_->form;
    Int bound_scaled = bound * form.dstar;
    {
        BudgetedCount nodes(counter);
        CosetSearch search{form, wpar, bound_scaled, nodes, {}};
        search.run([&](const Vec& y, const Int&) { out.push_back(y); });
        nodes.flush();
    }
    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

CosetMinResult coset_min(const Lattice& lattice, const Vec& w, const EnumBudget& budget) {
    NodeCounter counter(budget.max_nodes);
    return coset_min(lattice, w, budget, counter);
}

CosetMinResult coset_min(const Lattice& lattice, const Vec& w, const EnumBudget& /*budget*/,
                         NodeCounter& counter) {
    return CosetEnumerator(lattice).coset_min(w, counter);
}

std::vector<Vec> enumerate_coset_below(const Lattice& lattice, const Vec& w, const Int& bound,
                                       const EnumBudget& budget) {
    NodeCounter counter(budget.max_nodes);
    return CosetEnumerator(lattice).enumerate_below(w, bound, counter);
}

Int guaranteed_box_radius(const Lattice& lattice, const Vec& w) {
    const std::size_t n = lattice.rank();
    if (n == 0) return 0;
    const Vec wpar = parity_reduce(w);
    Int b0 = lattice.norm(wpar);

    // |z_i|^2 <= B * (G^{-1})_{ii} for any z with z^T G z <= B.
    const QMat ginv = solve_matrix(to_rational(lattice.gram()), QMat::identity(n));
    Int radius = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const Int zi = isqrt_ceil(ceil_rat(Rat(b0) * ginv(i, i)));
        const Int ui = ceil_div(zi + wpar[i], 2);
        radius = std::max(radius, ui);
    }
    return radius;
}

CosetMinResult naive_coset_min(const Lattice& lattice, const Vec& w, const Int& box_radius) {
    const std::size_t n = lattice.rank();
    if (w.size() != n) throw invalid_input("naive_coset_min: w has wrong length");
    if (n > 6) throw invalid_input("naive_coset_min: rank above the cost guard (6)");

    CosetMinResult result;
    if (n == 0) {
        result.min_norm = 0;
        result.minimizers.push_back(Vec());
        return result;
    }

    const Vec wpar = parity_reduce(w);
    const Int radius = box_radius > 0 ? box_radius : guaranteed_box_radius(lattice, w);

    Vec u(n, -radius);
    bool done = false;
    bool have_min = false;
    std::uint64_t visited = 0;
    while (!done) {
        ++visited;
        Vec z(n);
        for (std::size_t i = 0; i < n; ++i) z[i] = wpar[i] + 2 * u[i];
        const Int norm = lattice.norm(z);
        if (!have_min || norm < result.min_norm) {
            result.min_norm = norm;
            result.minimizers.clear();
            result.minimizers.push_back(z);
            have_min = true;
        } else if (norm == result.min_norm) {
            result.minimizers.push_back(z);
        }
        // odometer over the box
        std::size_t i = 0;
        for (;; ++i) {
            if (i == n) {
                done = true;
                break;
            }
            if (u[i] < radius) {
                ++u[i];
                break;
            }
            u[i] = -radius;
        }
    }
    result.nodes_visited = visited;
    std::sort(result.minimizers.begin(), result.minimizers.end(), lex_less);
    return result;
}

}  // namespace hlat
