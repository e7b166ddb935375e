#include "cliff/rational.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <stdexcept>

namespace cliff {

Rational::Rational(long num, long den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational::Rational(mpq_class v) : v_(std::move(v)) {
    if (v_.get_den() == 0) throw std::domain_error("Rational: zero denominator");
    v_.canonicalize();
}

Rational Rational::operator/(const Rational& o) const {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    return Rational(mpq_class(v_ / o.v_));
}

Rational Rational::inv() const {
    if (is_zero()) throw std::domain_error("Rational: division by zero");
    return Rational(mpq_class(1 / v_));
}

Rational Rational::parse(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("Rational: empty literal");
    std::string s(text);
    const auto ok_digits = [](std::string_view d, size_t from) {
        if (from >= d.size()) return false;
        for (size_t i = from; i < d.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(d[i]))) return false;
        return true;
    };
    const auto slash = s.find('/');
    std::string num = slash == std::string::npos ? s : s.substr(0, slash);
    if (!num.empty() && num[0] == '+') num.erase(0, 1);  // mpz rejects a leading '+'
    const size_t num_from = (!num.empty() && num[0] == '-') ? 1 : 0;
    if (!ok_digits(num, num_from))
        throw std::invalid_argument("Rational: malformed literal '" + s + "'");
    mpq_class v;
    if (slash == std::string::npos) {
        v = mpq_class(mpz_class(num), 1);
    } else {
        std::string den = s.substr(slash + 1);
        if (!ok_digits(den, 0))
            throw std::invalid_argument("Rational: malformed literal '" + s + "'");
        mpz_class d(den);
        if (d == 0) throw std::domain_error("Rational: zero denominator");
        v = mpq_class(mpz_class(num), d);
    }
    return Rational(std::move(v));
}

std::string Rational::str() const {
    return is_integer() ? v_.get_num().get_str() : v_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

GaussianRational GaussianRational::operator*(const GaussianRational& o) const {
    return {re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussianRational GaussianRational::inv() const {
    if (is_zero()) throw std::domain_error("GaussianRational: division by zero");
    const Rational n = norm();
    return {re_ / n, -im_ / n};
}

GaussianRational GaussianRational::parse(std::string_view text) {
    std::string s;
    s.reserve(text.size());
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw std::invalid_argument("GaussianRational: empty literal");

    // Split at the last top-level '+'/'-' (not the leading sign and not
    // following '/'), e.g. "1/2-3/4i" -> "1/2", "-3/4i".
    size_t split = std::string::npos;
    for (size_t i = 1; i < s.size(); ++i)
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] != '/') split = i;

    const auto parse_imag = [](std::string part) {
        // part ends with 'i'; bare "i"/"-i"/"+i" mean coefficient 1.
        part.pop_back();
        if (part.empty() || part == "+") return Rational(1);
        if (part == "-") return Rational(-1);
        return Rational::parse(part);
    };

    if (split == std::string::npos) {
        if (s.back() == 'i') return {Rational(0), parse_imag(s)};
        return {Rational::parse(s), Rational(0)};
    }
    std::string re_part = s.substr(0, split);
    std::string im_part = s.substr(split);
    if (im_part.back() != 'i')
        throw std::invalid_argument("GaussianRational: malformed literal '" + s + "'");
    return {Rational::parse(re_part), parse_imag(im_part)};
}

std::string GaussianRational::str() const {
    if (im_.is_zero()) return re_.str();
    std::string out = re_.str();
    out += im_.sign() < 0 ? '-' : '+';
    out += im_.abs().str();
    out += 'i';
    return out;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << z.str(); }

}  // namespace cliff
