#pragma once

#include <compare>
#include <string>
#include <string_view>

#include "quiverreach/graph.hpp"

namespace quiverreach {

/// Exact finite decimal mantissa * 10^exponent, kept normalized (mantissa
/// has no trailing zero digit; zero has exponent 0).
class Decimal {
public:
    Decimal() = default;
    Decimal(long long value) : mantissa_(value) { normalize(); }  // NOLINT(google-explicit-constructor)

    /// Accepts [+-]digits[.digits][(e|E)[+-]digits]. Throws
    /// std::invalid_argument on malformed input.
    static Decimal parse(std::string_view text);

    /// Shortest positional form: "-0.25", "3", "1200".
    std::string str() const;

    /// Exact (a + b) / 2.
    static Decimal midpoint(const Decimal& a, const Decimal& b);

    friend Decimal operator+(const Decimal& a, const Decimal& b);
    friend Decimal operator-(const Decimal& a, const Decimal& b);
    friend std::strong_ordering operator<=>(const Decimal& a, const Decimal& b);
    friend bool operator==(const Decimal& a, const Decimal& b) = default;

private:
    Decimal(BigInt mantissa, long long exponent) : mantissa_(std::move(mantissa)), exponent_(exponent) { normalize(); }
    void normalize();
    /// Both mantissas rescaled to the smaller exponent.
    static std::pair<BigInt, BigInt> aligned(const Decimal& a, const Decimal& b, long long& exponent);

    BigInt mantissa_ = 0;
    long long exponent_ = 0;
};

}  // namespace quiverreach
