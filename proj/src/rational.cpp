#include "rbcoalg/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace rbcoalg {

Rational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) {
        throw std::invalid_argument("rational: zero denominator");
    }
    // the backend reduces the gcd but insists on a positive denominator
    if (den < 0) return Rational(-num, -den);
    return Rational(num, den);
}

namespace {

bool all_digits(const std::string& s, std::size_t from, std::size_t to) {
    if (from >= to) return false;
    for (std::size_t i = from; i < to; ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    const std::string num_part = slash == std::string::npos ? text : text.substr(0, slash);
    const std::string den_part = slash == std::string::npos ? std::string("1") : text.substr(slash + 1);

    std::size_t num_start = 0;
    if (!num_part.empty() && num_part[0] == '-') num_start = 1;
    if (!all_digits(num_part, num_start, num_part.size()) || !all_digits(den_part, 0, den_part.size())) {
        throw std::invalid_argument("rational: cannot parse '" + text + "'");
    }
    const BigInt num(num_part);
    const BigInt den(den_part);
    if (den == 0) {
        throw std::invalid_argument("rational: zero denominator in '" + text + "'");
    }
    return Rational(num, den);
}

std::string format_rational(const Rational& r) {
    const BigInt num = numerator(r);
    const BigInt den = denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

Rational rational_pow(const Rational& base, int exp) {
    if (exp < 0) {
        if (base == 0) throw std::invalid_argument("rational: negative power of zero");
        return rational_pow(Rational(1) / base, -exp);
    }
    Rational acc(1);
    Rational b = base;
    int e = exp;
    while (e > 0) {
        if (e & 1) acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

}  // namespace rbcoalg
