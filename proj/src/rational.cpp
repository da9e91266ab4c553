#include "priorforge/rational.hpp"

#include <cctype>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace priorforge {

namespace {

__extension__ typedef __int128 i128;
__extension__ typedef unsigned __int128 u128;

constexpr std::int64_t kInlineMax = std::numeric_limits<std::int64_t>::max();

bool fits_inline(i128 v) { return v >= -static_cast<i128>(kInlineMax) && v <= kInlineMax; }

std::uint64_t magnitude(std::int64_t v)
{
    return v < 0 ? static_cast<std::uint64_t>(-(v + 1)) + 1 : static_cast<std::uint64_t>(v);
}

mpz_class mpz_from_wide(i128 v)
{
    const bool negative = v < 0;
    u128 mag = negative ? static_cast<u128>(-(v + 1)) + 1 : static_cast<u128>(v);
    mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(mag >> 64)));
    mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(mag)));
    mpz_class out = (hi << 64) + lo;
    return negative ? mpz_class(-out) : out;
}

bool mpz_fits_inline(const mpz_class& z)
{
    return z.fits_slong_p() && z.get_si() != std::numeric_limits<long>::min();
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den)
{
    if (den == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    const std::uint64_t g = std::gcd(magnitude(num), magnitude(den));
    i128 n = static_cast<i128>(num) / static_cast<i128>(g);
    i128 d = static_cast<i128>(den) / static_cast<i128>(g);
    if (d < 0) {
        n = -n;
        d = -d;
    }
    *this = from_wide(n, d);
}

Rational::Rational(const mpq_class& value)
{
    mpq_class q(value);
    q.canonicalize();
    if (mpz_fits_inline(q.get_num()) && mpz_fits_inline(q.get_den())) {
        num_ = q.get_num().get_si();
        den_ = q.get_den().get_si();
    } else {
        big_ = std::make_shared<const mpq_class>(std::move(q));
    }
}

Rational Rational::from_wide(i128 num, i128 den)
{
    Rational r;
    if (fits_inline(num) && fits_inline(den)) {
        r.num_ = static_cast<std::int64_t>(num);
        r.den_ = static_cast<std::int64_t>(den);
        return r;
    }
    mpq_class q(mpz_from_wide(num), mpz_from_wide(den));
    q.canonicalize();
    return Rational(q);
}

Rational Rational::parse(std::string_view text)
{
    if (text.empty()) {
        throw std::invalid_argument("empty rational literal");
    }
    std::size_t slash = std::string_view::npos;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (c == '/') {
            if (slash != std::string_view::npos) {
                throw std::invalid_argument("malformed rational literal '" + std::string(text) + "'");
            }
            slash = i;
            continue;
        }
        const bool sign_ok = (c == '-' || c == '+') && (i == 0);
        if (!sign_ok && !std::isdigit(static_cast<unsigned char>(c))) {
            throw std::invalid_argument("malformed rational literal '" + std::string(text) +
                                        "' (only integers and a/b are accepted)");
        }
    }
    std::string num(text.substr(0, slash));
    std::string den = slash == std::string_view::npos ? std::string("1") : std::string(text.substr(slash + 1));
    if (!num.empty() && num.front() == '+') {
        num.erase(0, 1);
    }
    const bool num_ok = !num.empty() && num != "-";
    if (!num_ok || den.empty()) {
        throw std::invalid_argument("malformed rational literal '" + std::string(text) + "'");
    }
    mpz_class n(num, 10);
    mpz_class d(den, 10);
    if (d == 0) {
        throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    }
    return Rational(mpq_class(n, d));
}

mpq_class Rational::to_mpq() const
{
    if (big_) {
        return *big_;
    }
    return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

std::string Rational::str() const
{
    if (big_) {
        return big_->get_str();
    }
    if (den_ == 1) {
        return std::to_string(num_);
    }
    return std::to_string(num_) + "/" + std::to_string(den_);
}

double Rational::to_double() const
{
    return big_ ? big_->get_d() : static_cast<double>(num_) / static_cast<double>(den_);
}

int Rational::sign() const noexcept
{
    if (big_) {
        return sgn(*big_);
    }
    return (num_ > 0) - (num_ < 0);
}

bool Rational::is_integer() const
{
    return big_ ? big_->get_den() == 1 : den_ == 1;
}

Rational Rational::abs() const
{
    return sign() < 0 ? -*this : *this;
}

Rational Rational::numerator() const
{
    return big_ ? Rational(mpq_class(big_->get_num())) : Rational(num_);
}

Rational Rational::denominator() const
{
    return big_ ? Rational(mpq_class(big_->get_den())) : Rational(den_);
}

Rational operator+(const Rational& a, const Rational& b)
{
    if (!a.big_ && !b.big_) {
        if (a.den_ == b.den_) {
            const i128 n = static_cast<i128>(a.num_) + b.num_;
            if (a.den_ == 1) {
                return Rational::from_wide(n, 1);
            }
            const std::uint64_t g = std::gcd(static_cast<std::uint64_t>(n < 0 ? -n : n) % static_cast<std::uint64_t>(a.den_),
                                             static_cast<std::uint64_t>(a.den_));
            const i128 gg = g == 0 ? a.den_ : static_cast<i128>(g);
            return Rational::from_wide(n / gg, a.den_ / gg);
        }
        const auto bd = static_cast<std::uint64_t>(b.den_);
        const auto ad = static_cast<std::uint64_t>(a.den_);
        const std::uint64_t g = std::gcd(ad, bd);
        const i128 n = static_cast<i128>(a.num_) * static_cast<i128>(bd / g) + static_cast<i128>(b.num_) * static_cast<i128>(ad / g);
        const u128 nm = n < 0 ? static_cast<u128>(-n) : static_cast<u128>(n);
        std::uint64_t g2 = std::gcd(static_cast<std::uint64_t>(nm % g), g);
        if (g2 == 0) {
            g2 = g;
        }
        const i128 den = static_cast<i128>(ad / g) * static_cast<i128>(bd / g2);
        return Rational::from_wide(n / static_cast<i128>(g2), den);
    }
    return Rational(mpq_class(a.to_mpq() + b.to_mpq()));
}

Rational operator-(const Rational& a)
{
    if (!a.big_) {
        Rational r;
        r.num_ = -a.num_;
        r.den_ = a.den_;
        return r;
    }
    return Rational(mpq_class(-*a.big_));
}

Rational operator-(const Rational& a, const Rational& b)
{
    return a + (-b);
}

Rational operator*(const Rational& a, const Rational& b)
{
    if (!a.big_ && !b.big_) {
        if (a.num_ == 0 || b.num_ == 0) {
            return Rational();
        }
        const std::uint64_t g1 = std::gcd(magnitude(a.num_), static_cast<std::uint64_t>(b.den_));
        const std::uint64_t g2 = std::gcd(magnitude(b.num_), static_cast<std::uint64_t>(a.den_));
        const i128 n = static_cast<i128>(a.num_ / static_cast<std::int64_t>(g1)) * static_cast<i128>(b.num_ / static_cast<std::int64_t>(g2));
        const i128 d = static_cast<i128>(a.den_ / static_cast<std::int64_t>(g2)) * static_cast<i128>(b.den_ / static_cast<std::int64_t>(g1));
        return Rational::from_wide(n, d);
    }
    return Rational(mpq_class(a.to_mpq() * b.to_mpq()));
}

Rational operator/(const Rational& a, const Rational& b)
{
    if (b.is_zero()) {
        throw std::domain_error("rational division by zero");
    }
    if (!b.big_) {
        Rational inv;
        inv.num_ = b.num_ < 0 ? -b.den_ : b.den_;
        inv.den_ = b.num_ < 0 ? -b.num_ : b.num_;
        return a * inv;
    }
    return Rational(mpq_class(a.to_mpq() / b.to_mpq()));
}

bool operator==(const Rational& a, const Rational& b)
{
    if (!a.big_ && !b.big_) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    if (a.big_ && b.big_) {
        return *a.big_ == *b.big_;
    }
    return false;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b)
{
    if (!a.big_ && !b.big_) {
        const i128 lhs = static_cast<i128>(a.num_) * b.den_;
        const i128 rhs = static_cast<i128>(b.num_) * a.den_;
        return lhs <=> rhs;
    }
    const int c = cmp(a.to_mpq(), b.to_mpq());
    return c <=> 0;
}

std::ostream& operator<<(std::ostream& os, const Rational& value)
{
    return os << value.str();
}

}  // namespace priorforge
