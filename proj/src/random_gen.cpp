#include "cliff/random_gen.hpp"

#include <stdexcept>

namespace cliff {

Rational SeededRng::rational(int bound) {
    const long num = int_in(-bound, bound);
    const long den = int_in(1, bound);
    return Rational(num, den);
}

GaussianRational SeededRng::gaussian(int bound) { return {rational(bound), rational(bound)}; }

GaussianRational SeededRng::nonzero_gaussian(int bound) {
    for (;;) {
        GaussianRational z = gaussian(bound);
        if (!z.is_zero()) return z;
    }
}

CoordRow SeededRng::coord_row(int n, int bound, bool real) {
    CoordRow row;
    row.reserve(n);
    for (int i = 0; i < n; ++i)
        row.push_back(real ? GaussianRational(rational(bound)) : gaussian(bound));
    return row;
}

CoordRow SeededRng::nonzero_coord_row(int n, int bound, bool real) {
    if (n <= 0) throw std::invalid_argument("nonzero_coord_row: no nonzero vectors in dimension 0");
    for (;;) {
        CoordRow row = coord_row(n, bound, real);
        for (const auto& v : row)
            if (!v.is_zero()) return row;
    }
}

Multivector SeededRng::multivector(int dim, int max_terms, int bound, bool real) {
    Multivector out = Multivector::zero(dim);
    const int terms = static_cast<int>(below(static_cast<std::uint64_t>(max_terms) + 1));
    for (int t = 0; t < terms; ++t) {
        const BladeMask mask = static_cast<BladeMask>(below(std::uint64_t(1) << dim));
        const GaussianRational c = real ? GaussianRational(rational(bound)) : gaussian(bound);
        out = out + Multivector::blade(dim, mask, c);
    }
    return out;
}

std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t check_id, std::uint64_t dim) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (check_id * 64 + dim + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

Subspace random_subspace(int n, int d, SeededRng& rng, int bound, bool real) {
    if (d < 0 || d > n) throw std::invalid_argument("random_subspace: invalid dimension");
    std::vector<CoordRow> rows;
    int attempts = 0;
    while (static_cast<int>(rows.size()) < d) {
        if (++attempts > 1000 * (d + 1))
            throw std::runtime_error("random_subspace: rank target not reached");
        rows.push_back(rng.coord_row(n, bound, real));
        if (Subspace::span(n, rows).dim() != static_cast<int>(rows.size())) rows.pop_back();
    }
    return Subspace::span(n, rows);
}

std::vector<CoordRow> recombined_basis(const Subspace& s, SeededRng& rng, int bound, bool real) {
    const int d = s.dim();
    const int n = s.ambient_dim();
    const auto draw = [&]() { return real ? GaussianRational(rng.rational(bound)) : rng.gaussian(bound); };
    // T = L * U with unit diagonals: always invertible, fixed draw count.
    std::vector<std::vector<GaussianRational>> t(d, std::vector<GaussianRational>(d));
    for (int i = 0; i < d; ++i) t[i][i] = GaussianRational(1);
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) t[i][j] = draw();
    std::vector<std::vector<GaussianRational>> l(d, std::vector<GaussianRational>(d));
    for (int i = 0; i < d; ++i) l[i][i] = GaussianRational(1);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < i; ++j) l[i][j] = draw();

    std::vector<CoordRow> out(d, CoordRow(n));
    const auto& basis = s.basis();
    for (int i = 0; i < d; ++i)
        for (int k = 0; k < d; ++k) {
            GaussianRational lu;
            for (int j = 0; j < d; ++j) lu += l[i][j] * t[j][k];
            for (int c = 0; c < n; ++c) out[i][c] += lu * basis[k][c];
        }
    return out;
}

}  // namespace cliff
