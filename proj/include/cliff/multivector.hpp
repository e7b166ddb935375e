#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cliff/rational.hpp"

namespace cliff {

/// A basis blade of C(V_C): bit i set means e_{i+1} is a factor, in
/// increasing index order. Mask 0 is the unit.
using BladeMask = std::uint32_t;

inline int blade_degree(BladeMask m) { return __builtin_popcount(m); }

struct BladeProduct {
    int sign;  // +1 or -1
    BladeMask mask;
};

/// Product of two blades in the orthonormal model: e_i^2 = 1 and
/// e_i e_j = -e_j e_i. Result mask is x XOR y; the sign counts the
/// transpositions moving each generator of y left past the
/// larger-indexed generators accumulated so far.
BladeProduct blade_product(BladeMask x, BladeMask y);

/// "e1e3" style name; mask 0 prints as "1".
std::string blade_name(BladeMask m);

/// An element of C(V_C) for a fixed ambient dimension: a sparse
/// mask-ordered map from blades to exact coefficients. Immutable value
/// type; all operations are pure.
class Multivector {
public:
    using TermMap = std::map<BladeMask, GaussianRational>;

    explicit Multivector(int dim);

    static Multivector zero(int dim) { return Multivector(dim); }
    static Multivector unit(int dim) { return blade(dim, 0); }
    static Multivector blade(int dim, BladeMask mask, GaussianRational coeff = GaussianRational(1));
    static Multivector scalar(int dim, GaussianRational value) { return blade(dim, 0, std::move(value)); }
    /// Degree-1 element with the given coordinates; length must equal dim.
    static Multivector vector(std::span<const GaussianRational> coords);
    static Multivector vector(const std::vector<GaussianRational>& coords);

    int dim() const { return dim_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    GaussianRational coeff(BladeMask m) const;

    Multivector operator-() const;
    Multivector operator+(const Multivector& o) const;
    Multivector operator-(const Multivector& o) const;
    Multivector operator*(const Multivector& o) const;
    Multivector operator*(const GaussianRational& s) const;
    friend Multivector operator*(const GaussianRational& s, const Multivector& a) { return a * s; }

    bool operator==(const Multivector& o) const { return dim_ == o.dim_ && terms_ == o.terms_; }
    bool operator!=(const Multivector& o) const { return !(*this == o); }

    /// Grading automorphism: negates odd-degree blades.
    Multivector gamma() const;
    /// The unique involution restricting to V_C as complex conjugation:
    /// index reversal sign (-1)^(k(k-1)/2) plus coefficient conjugation.
    Multivector star() const;
    /// Complex conjugation pointwise fixing V: conjugates coefficients.
    Multivector bar() const;

    Multivector even_part() const;
    Multivector odd_part() const;

    /// Coefficient of the unit blade.
    GaussianRational trace() const { return coeff(0); }

    /// True when every blade has degree 1 (the zero element counts).
    bool is_vector() const;
    /// Coordinates of a degree <= 1 element; throws on non-vectors.
    std::vector<GaussianRational> vector_coords() const;

    bool has_real_coefficients() const;

    /// Canonical text form, terms sorted by mask:
    /// "(1/2)*1 + (0+1i)*e1e3". Zero prints as "0".
    std::string str() const;
    static Multivector parse(std::string_view text, int dim);

private:
    void add_term(BladeMask mask, const GaussianRational& coeff);

    int dim_;
    TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const Multivector& a);

/// tau(star(a) * b); blades are orthonormal for this form.
GaussianRational trace_inner(const Multivector& a, const Multivector& b);

/// The symmetric complex-bilinear form on vectors: sum of coordinate
/// products, no conjugation. Throws on non-vector input.
GaussianRational bilinear_form(const Multivector& x, const Multivector& y);
GaussianRational bilinear_form(std::span<const GaussianRational> x, std::span<const GaussianRational> y);

/// <x|y> = (bar(x)|y); positive definite.
GaussianRational hermitian_form(const Multivector& x, const Multivector& y);
GaussianRational hermitian_form(std::span<const GaussianRational> x, std::span<const GaussianRational> y);

}  // namespace cliff
