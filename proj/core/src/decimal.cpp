#include "quiverreach/decimal.hpp"

#include <cctype>
#include <stdexcept>

namespace quiverreach {

namespace {

BigInt pow10(long long e) {
    BigInt r = 1;
    for (long long i = 0; i < e; ++i) r *= 10;
    return r;
}

}  // namespace

void Decimal::normalize() {
    if (mantissa_ == 0) {
        exponent_ = 0;
        return;
    }
    while (mantissa_ % 10 == 0) {
        mantissa_ /= 10;
        ++exponent_;
    }
}

Decimal Decimal::parse(std::string_view text) {
    auto fail = [&] { return std::invalid_argument("not a decimal number: '" + std::string(text) + "'"); };
    std::size_t i = 0;
    bool negative = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) negative = text[i++] == '-';
    std::string digits;
    long long exponent = 0;
    bool any_digit = false;
    for (; i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])); ++i) digits += text[i], any_digit = true;
    if (i < text.size() && text[i] == '.') {
        for (++i; i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])); ++i) {
            digits += text[i];
            --exponent;
            any_digit = true;
        }
    }
    if (!any_digit) throw fail();
    if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
        ++i;
        bool exp_negative = false;
        if (i < text.size() && (text[i] == '+' || text[i] == '-')) exp_negative = text[i++] == '-';
        if (i == text.size()) throw fail();
        long long e = 0;
        for (; i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])); ++i) {
            e = e * 10 + (text[i] - '0');
            if (e > 1'000'000) throw fail();
        }
        exponent += exp_negative ? -e : e;
    }
    if (i != text.size()) throw fail();
    // cpp_int reads a leading 0 as an octal prefix.
    const auto first = digits.find_first_not_of('0');
    const BigInt m(first == std::string::npos ? std::string("0") : digits.substr(first));
    return Decimal(negative ? BigInt(-m) : m, exponent);
}

std::string Decimal::str() const {
    const bool negative = mantissa_ < 0;
    std::string digits = (negative ? BigInt(-mantissa_) : mantissa_).str();
    if (exponent_ >= 0) {
        if (mantissa_ != 0) digits.append(static_cast<std::size_t>(exponent_), '0');
    } else {
        const auto frac = static_cast<std::size_t>(-exponent_);
        if (digits.size() <= frac) digits.insert(0, frac - digits.size() + 1, '0');
        digits.insert(digits.size() - frac, ".");
    }
    return negative ? "-" + digits : digits;
}

std::pair<BigInt, BigInt> Decimal::aligned(const Decimal& a, const Decimal& b, long long& exponent) {
    exponent = std::min(a.exponent_, b.exponent_);
    return {a.mantissa_ * pow10(a.exponent_ - exponent), b.mantissa_ * pow10(b.exponent_ - exponent)};
}

Decimal operator+(const Decimal& a, const Decimal& b) {
    long long e;
    auto [x, y] = Decimal::aligned(a, b, e);
    return Decimal(x + y, e);
}

Decimal operator-(const Decimal& a, const Decimal& b) {
    long long e;
    auto [x, y] = Decimal::aligned(a, b, e);
    return Decimal(x - y, e);
}

Decimal Decimal::midpoint(const Decimal& a, const Decimal& b) {
    const Decimal sum = a + b;
    return Decimal(sum.mantissa_ * 5, sum.exponent_ - 1);
}

std::strong_ordering operator<=>(const Decimal& a, const Decimal& b) {
    long long e;
    auto [x, y] = Decimal::aligned(a, b, e);
    if (x < y) return std::strong_ordering::less;
    if (y < x) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

}  // namespace quiverreach
