#include "cliff/multivector.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace cliff {

BladeProduct blade_product(BladeMask x, BladeMask y) {
    int transpositions = 0;
    BladeMask acc = x;
    BladeMask rest = y;
    while (rest != 0) {
        const int j = __builtin_ctz(rest);
        transpositions += __builtin_popcount(acc >> (j + 1));
        acc ^= BladeMask(1) << j;  // e_j e_j contracts to +1
        rest &= rest - 1;
    }
    return {(transpositions & 1) ? -1 : +1, acc};
}

std::string blade_name(BladeMask m) {
    if (m == 0) return "1";
    std::string out;
    for (int i = 0; m >> i; ++i)
        if (m & (BladeMask(1) << i)) out += "e" + std::to_string(i + 1);
    return out;
}

Multivector::Multivector(int dim) : dim_(dim) {
    if (dim < 0 || dim > 31) throw std::invalid_argument("Multivector: dimension out of range");
}

Multivector Multivector::blade(int dim, BladeMask mask, GaussianRational coeff) {
    Multivector a(dim);
    if (mask >> dim) throw std::invalid_argument("Multivector: blade mask exceeds dimension");
    if (!coeff.is_zero()) a.terms_.emplace(mask, std::move(coeff));
    return a;
}

Multivector Multivector::vector(std::span<const GaussianRational> coords) {
    Multivector a(static_cast<int>(coords.size()));
    for (size_t i = 0; i < coords.size(); ++i)
        if (!coords[i].is_zero()) a.terms_.emplace(BladeMask(1) << i, coords[i]);
    return a;
}

Multivector Multivector::vector(const std::vector<GaussianRational>& coords) {
    return vector(std::span<const GaussianRational>(coords));
}

GaussianRational Multivector::coeff(BladeMask m) const {
    const auto it = terms_.find(m);
    return it == terms_.end() ? GaussianRational() : it->second;
}

void Multivector::add_term(BladeMask mask, const GaussianRational& coeff) {
    if (coeff.is_zero()) return;
    const auto [it, inserted] = terms_.emplace(mask, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Multivector Multivector::operator-() const {
    Multivector out(dim_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

namespace {
void check_same_dim(const Multivector& a, const Multivector& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("Multivector: dimension mismatch");
}
}  // namespace

Multivector Multivector::operator+(const Multivector& o) const {
    check_same_dim(*this, o);
    Multivector out = *this;
    for (const auto& [m, c] : o.terms_) out.add_term(m, c);
    return out;
}

Multivector Multivector::operator-(const Multivector& o) const {
    check_same_dim(*this, o);
    Multivector out = *this;
    for (const auto& [m, c] : o.terms_) out.add_term(m, -c);
    return out;
}

Multivector Multivector::operator*(const Multivector& o) const {
    check_same_dim(*this, o);
    Multivector out(dim_);
    for (const auto& [mx, cx] : terms_) {
        for (const auto& [my, cy] : o.terms_) {
            const auto [sign, mask] = blade_product(mx, my);
            GaussianRational c = cx * cy;
            if (sign < 0) c = -c;
            out.add_term(mask, c);
        }
    }
    return out;
}

Multivector Multivector::operator*(const GaussianRational& s) const {
    Multivector out(dim_);
    if (s.is_zero()) return out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, c * s);
    return out;
}

Multivector Multivector::gamma() const {
    Multivector out(dim_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, (blade_degree(m) & 1) ? -c : c);
    return out;
}

Multivector Multivector::star() const {
    Multivector out(dim_);
    for (const auto& [m, c] : terms_) {
        const int k = blade_degree(m);
        const bool flip = ((k * (k - 1) / 2) & 1) != 0;
        GaussianRational cc = c.conj();
        out.terms_.emplace(m, flip ? -cc : cc);
    }
    return out;
}

Multivector Multivector::bar() const {
    Multivector out(dim_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, c.conj());
    return out;
}

Multivector Multivector::even_part() const {
    Multivector out(dim_);
    for (const auto& [m, c] : terms_)
        if ((blade_degree(m) & 1) == 0) out.terms_.emplace(m, c);
    return out;
}

Multivector Multivector::odd_part() const {
    Multivector out(dim_);
    for (const auto& [m, c] : terms_)
        if ((blade_degree(m) & 1) != 0) out.terms_.emplace(m, c);
    return out;
}

bool Multivector::is_vector() const {
    for (const auto& [m, c] : terms_)
        if (blade_degree(m) != 1) return false;
    return true;
}

std::vector<GaussianRational> Multivector::vector_coords() const {
    if (!is_vector()) throw std::invalid_argument("Multivector: not a vector");
    std::vector<GaussianRational> coords(dim_);
    for (const auto& [m, c] : terms_) coords[__builtin_ctz(m)] = c;
    return coords;
}

bool Multivector::has_real_coefficients() const {
    for (const auto& [m, c] : terms_)
        if (!c.is_real()) return false;
    return true;
}

std::string Multivector::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
        if (!out.empty()) out += " + ";
        out += "(" + c.str() + ")*" + blade_name(m);
    }
    return out;
}

Multivector Multivector::parse(std::string_view text, int dim) {
    std::string s;
    s.reserve(text.size());
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    Multivector out(dim);
    if (s.empty() || s == "0") return out;

    size_t pos = 0;
    while (pos < s.size()) {
        if (s[pos] != '(') throw std::invalid_argument("Multivector: expected '(' in '" + s + "'");
        const size_t close = s.find(')', pos);
        if (close == std::string::npos || close + 1 >= s.size() || s[close + 1] != '*')
            throw std::invalid_argument("Multivector: malformed term in '" + s + "'");
        const GaussianRational coeff = GaussianRational::parse(s.substr(pos + 1, close - pos - 1));
        size_t p = close + 2;
        BladeMask mask = 0;
        if (p < s.size() && s[p] == '1') {
            ++p;
        } else {
            while (p < s.size() && s[p] == 'e') {
                size_t q = p + 1;
                while (q < s.size() && std::isdigit(static_cast<unsigned char>(s[q]))) ++q;
                if (q == p + 1) throw std::invalid_argument("Multivector: malformed blade in '" + s + "'");
                const int idx = std::stoi(s.substr(p + 1, q - p - 1));
                if (idx < 1 || idx > dim)
                    throw std::invalid_argument("Multivector: blade index out of range in '" + s + "'");
                mask |= BladeMask(1) << (idx - 1);
                p = q;
            }
        }
        out.add_term(mask, coeff);
        if (p == s.size()) break;
        if (s[p] != '+') throw std::invalid_argument("Multivector: expected '+' in '" + s + "'");
        pos = p + 1;
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Multivector& a) { return os << a.str(); }

GaussianRational trace_inner(const Multivector& a, const Multivector& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("trace_inner: dimension mismatch");
    // tau(a* b) = sum over common blades of conj(a_K) b_K; the reversal
    // signs from a* and from e_K e_K cancel.
    GaussianRational out;
    const auto& ta = a.terms();
    const auto& tb = b.terms();
    auto ia = ta.begin();
    auto ib = tb.begin();
    while (ia != ta.end() && ib != tb.end()) {
        if (ia->first < ib->first) ++ia;
        else if (ib->first < ia->first) ++ib;
        else {
            out += ia->second.conj() * ib->second;
            ++ia;
            ++ib;
        }
    }
    return out;
}

GaussianRational bilinear_form(std::span<const GaussianRational> x, std::span<const GaussianRational> y) {
    if (x.size() != y.size()) throw std::invalid_argument("bilinear_form: dimension mismatch");
    GaussianRational out;
    for (size_t i = 0; i < x.size(); ++i) out += x[i] * y[i];
    return out;
}

GaussianRational bilinear_form(const Multivector& x, const Multivector& y) {
    if (x.dim() != y.dim()) throw std::invalid_argument("bilinear_form: dimension mismatch");
    const auto cx = x.vector_coords();
    const auto cy = y.vector_coords();
    return bilinear_form(std::span<const GaussianRational>(cx), std::span<const GaussianRational>(cy));
}

GaussianRational hermitian_form(std::span<const GaussianRational> x, std::span<const GaussianRational> y) {
    if (x.size() != y.size()) throw std::invalid_argument("hermitian_form: dimension mismatch");
    GaussianRational out;
    for (size_t i = 0; i < x.size(); ++i) out += x[i].conj() * y[i];
    return out;
}

GaussianRational hermitian_form(const Multivector& x, const Multivector& y) {
    if (x.dim() != y.dim()) throw std::invalid_argument("hermitian_form: dimension mismatch");
    const auto cx = x.vector_coords();
    const auto cy = y.vector_coords();
    return hermitian_form(std::span<const GaussianRational>(cx), std::span<const GaussianRational>(cy));
}

}  // namespace cliff
