#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <memory>
#include <string>
#include <string_view>

namespace priorforge {

/// Exact rational number in lowest terms with a positive denominator.
///
/// Values whose numerator and denominator both fit in a signed 64-bit word
/// are kept inline and use 128-bit intermediates; everything else is held in
/// an immutable, shared GMP rational. A value is inline if and only if it
/// fits, so every number has exactly one representation and equality is a
/// field-wise comparison.
class Rational {
public:
    Rational() noexcept = default;

    template <std::signed_integral T>
    Rational(T value)  // NOLINT(google-explicit-constructor)
    {
        if (static_cast<std::int64_t>(value) == std::numeric_limits<std::int64_t>::min()) {
            *this = Rational(mpq_class(mpz_class(static_cast<long>(value))));
        } else {
            num_ = static_cast<std::int64_t>(value);
        }
    }

    /// Throws std::domain_error when `den` is zero.
    Rational(std::int64_t num, std::int64_t den);

    explicit Rational(const mpq_class& value);

    /// Parses "a" or "a/b" with an optional leading sign. Decimal points and
    /// exponents are rejected. Throws std::invalid_argument.
    static Rational parse(std::string_view text);

    [[nodiscard]] mpq_class to_mpq() const;
    [[nodiscard]] std::string str() const;
    [[nodiscard]] double to_double() const;

    [[nodiscard]] int sign() const noexcept;
    [[nodiscard]] bool is_zero() const noexcept { return !big_ && num_ == 0; }
    [[nodiscard]] bool is_integer() const;
    [[nodiscard]] Rational abs() const;
    [[nodiscard]] Rational numerator() const;
    [[nodiscard]] Rational denominator() const;

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a);

    Rational& operator+=(const Rational& other) { return *this = *this + other; }
    Rational& operator-=(const Rational& other) { return *this = *this - other; }
    Rational& operator*=(const Rational& other) { return *this = *this * other; }
    Rational& operator/=(const Rational& other) { return *this = *this / other; }

    friend bool operator==(const Rational& a, const Rational& b);
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

private:
    __extension__ typedef __int128 wide_int;
    static Rational from_wide(wide_int num, wide_int den);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
    std::shared_ptr<const mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Rational& value);

}  // namespace priorforge
