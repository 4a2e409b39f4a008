#pragma once

#include "hlat/lattice.hpp"

#include <cstdint>
#include <random>

namespace testutil {

// All randomized suites draw through these helpers with raw modulo on
// mt19937_64 so every platform sees the same sequence.
inline std::uint64_t draw(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

inline hlat::Int draw_entry(std::mt19937_64& rng, int bound) {
    return hlat::Int(static_cast<std::int64_t>(draw(rng, 2 * bound + 1)) - bound);
}

inline hlat::Vec draw_vec(std::mt19937_64& rng, std::size_t n, int bound) {
    hlat::Vec v(n);
    for (auto& x : v) x = draw_entry(rng, bound);
    return v;
}

// Random positive definite integer Gram: A^T A + shift * I with A square over
// small entries; the shift guarantees definiteness even when A is singular.
inline hlat::Lattice draw_lattice(std::mt19937_64& rng, std::size_t rank, int entry_bound = 2,
                                  int shift = 1) {
    hlat::IMat a(rank, rank);
    for (std::size_t i = 0; i < rank; ++i)
        for (std::size_t j = 0; j < rank; ++j) a(i, j) = draw_entry(rng, entry_bound);
    hlat::IMat gram(rank, rank);
    for (std::size_t i = 0; i < rank; ++i) {
        for (std::size_t j = 0; j < rank; ++j) {
            hlat::Int s = 0;
            for (std::size_t k = 0; k < rank; ++k) s += a(k, i) * a(k, j);
            gram(i, j) = s;
        }
        gram(i, i) += shift;
    }
    return hlat::Lattice::from_gram(std::move(gram));
}

}  // namespace testutil
