#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "cliff/multivector.hpp"
#include "cliff/rational.hpp"
#include "cliff/subspace.hpp"

namespace cliff {

/// Deterministic sample source pinned to mt19937-64. Bounded draws use
/// modulo reduction of the raw 64-bit output so that identical seeds
/// reproduce identical streams on every platform (std distributions are
/// not bit-portable).
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

    static constexpr const char* algorithm() { return "mt19937-64"; }

    std::uint64_t next() { return engine_(); }
    std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }
    long int_in(long lo, long hi) { return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1))); }
    bool coin() { return (next() & 1) != 0; }

    /// Numerator in [-bound, bound], denominator in [1, bound].
    Rational rational(int bound);
    GaussianRational gaussian(int bound);
    GaussianRational nonzero_gaussian(int bound);

    CoordRow coord_row(int n, int bound, bool real = false);
    CoordRow nonzero_coord_row(int n, int bound, bool real = false);

    /// Sparse multivector with at most max_terms random blades.
    Multivector multivector(int dim, int max_terms, int bound, bool real = false);

private:
    std::mt19937_64 engine_;
};

/// Mixes a base seed with a check id and dimension into an independent
/// substream seed (splitmix64 finalizer).
std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t check_id, std::uint64_t dim);

/// Span of d random small-coordinate vectors, redrawn until the rank is
/// exactly d. Deterministic for a fixed rng state.
Subspace random_subspace(int n, int d, SeededRng& rng, int bound, bool real = false);

/// Random invertible recombination of the subspace's basis, returned as
/// generator rows (spanning the same subspace). Used for
/// basis-independence checks.
std::vector<CoordRow> recombined_basis(const Subspace& s, SeededRng& rng, int bound, bool real = false);

}  // namespace cliff
