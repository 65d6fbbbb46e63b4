#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <numeric>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

namespace multinet {

namespace detail {
struct BigRational;
__extension__ typedef __int128 wide_int;
}

/// Exact rational number in lowest terms with a positive denominator.
///
/// Values whose numerator and denominator stay below 2^62 in magnitude are
/// kept inline and handled with 128-bit intermediates; anything larger is
/// promoted to a GMP rational and demoted again as soon as it fits. The
/// representation is therefore canonical: a value has exactly one encoding,
/// so equality and hashing never need to look past the active member.
class Rational {
public:
    Rational() noexcept = default;
    Rational(long long value);  // NOLINT(google-explicit-constructor)
    Rational(long long num, long long den);

    Rational(const Rational& other);
    Rational(Rational&& other) noexcept
        : num_(other.num_), den_(other.den_), big_(std::exchange(other.big_, nullptr)) {}
    Rational& operator=(const Rational& other);
    Rational& operator=(Rational&& other) noexcept {
        num_ = other.num_;
        den_ = other.den_;
        std::swap(big_, other.big_);
        return *this;
    }
    ~Rational() {
        if (big_) release();
    }

    /// Parses `[-]digits[/digits]` of any length.
    static Rational parse(std::string_view text);

    bool is_zero() const noexcept { return !big_ && num_ == 0; }
    bool is_one() const noexcept { return !big_ && num_ == 1 && den_ == 1; }
    bool is_integer() const noexcept;
    int sign() const noexcept;
    bool is_inline() const noexcept { return !big_; }

    Rational operator-() const;
    Rational abs() const { return sign() < 0 ? -*this : *this; }
    Rational reciprocal() const;

    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);

    friend bool operator==(const Rational& a, const Rational& b) noexcept;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    std::string to_string() const;
    std::size_t hash() const noexcept;

    /// Image in F_p (p prime below 2^62), or nullopt if p divides the denominator.
    std::optional<std::uint64_t> mod(std::uint64_t p) const;

    /// Approximate value; diagnostics and numerical oracles only.
    double to_double() const;

private:
    static constexpr std::int64_t kInlineLimit = std::int64_t{1} << 62;

    static bool fits(detail::wide_int v) noexcept { return v < kInlineLimit && v > -kInlineLimit; }
    static Rational make_inline(std::int64_t num, std::int64_t den) noexcept {
        Rational r;
        r.num_ = num;
        r.den_ = den;
        return r;
    }

    void release() noexcept;
    static Rational add_slow(const Rational& a, const Rational& b, bool subtract);
    static Rational mul_slow(const Rational& a, const Rational& b);
    static Rational from_wide(detail::wide_int num, detail::wide_int den);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
    detail::BigRational* big_ = nullptr;  // owned; null while inline

    friend struct detail::BigRational;
};

inline Rational operator+(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
        if (a.den_ == 1 && b.den_ == 1) {
            const detail::wide_int s = static_cast<detail::wide_int>(a.num_) + b.num_;
            if (Rational::fits(s)) return Rational::make_inline(static_cast<std::int64_t>(s), 1);
        } else {
            const std::int64_t g = std::gcd(a.den_, b.den_);
            if (g == 1) {
                const detail::wide_int num = static_cast<detail::wide_int>(a.num_) * b.den_ +
                                     static_cast<detail::wide_int>(b.num_) * a.den_;
                const detail::wide_int den = static_cast<detail::wide_int>(a.den_) * b.den_;
                if (Rational::fits(num) && Rational::fits(den))
                    return Rational::make_inline(static_cast<std::int64_t>(num),
                                                 static_cast<std::int64_t>(den));
            } else {
                const detail::wide_int t = static_cast<detail::wide_int>(a.num_) * (b.den_ / g) +
                                   static_cast<detail::wide_int>(b.num_) * (a.den_ / g);
                const auto tg = static_cast<std::int64_t>(t % g);
                const std::int64_t g2 = std::gcd(tg, g);
                const detail::wide_int num = t / g2;
                const detail::wide_int den = static_cast<detail::wide_int>(a.den_ / g) * (b.den_ / g2);
                if (num == 0) return Rational{};
                if (Rational::fits(num) && Rational::fits(den))
                    return Rational::make_inline(static_cast<std::int64_t>(num),
                                                 static_cast<std::int64_t>(den));
            }
        }
    }
    return Rational::add_slow(a, b, false);
}

inline Rational operator-(const Rational& a, const Rational& b) {
    if (!b.big_) return a + Rational::make_inline(-b.num_, b.den_);
    return Rational::add_slow(a, b, true);
}

inline Rational operator*(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
        if (a.num_ == 0 || b.num_ == 0) return Rational{};
        if (a.den_ == 1 && b.den_ == 1) {
            const detail::wide_int p = static_cast<detail::wide_int>(a.num_) * b.num_;
            if (Rational::fits(p)) return Rational::make_inline(static_cast<std::int64_t>(p), 1);
        } else {
            const std::int64_t g1 = std::gcd(a.num_, b.den_);
            const std::int64_t g2 = std::gcd(b.num_, a.den_);
            const detail::wide_int num = static_cast<detail::wide_int>(a.num_ / g1) * (b.num_ / g2);
            const detail::wide_int den = static_cast<detail::wide_int>(a.den_ / g2) * (b.den_ / g1);
            if (Rational::fits(num) && Rational::fits(den))
                return Rational::make_inline(static_cast<std::int64_t>(num),
                                             static_cast<std::int64_t>(den));
        }
    }
    return Rational::mul_slow(a, b);
}

inline Rational operator/(const Rational& a, const Rational& b) { return a * b.reciprocal(); }

inline Rational& Rational::operator+=(const Rational& rhs) { return *this = *this + rhs; }
inline Rational& Rational::operator-=(const Rational& rhs) { return *this = *this - rhs; }
inline Rational& Rational::operator*=(const Rational& rhs) { return *this = *this * rhs; }
inline Rational& Rational::operator/=(const Rational& rhs) { return *this = *this / rhs; }

inline std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.to_string(); }

}  // namespace multinet

template <>
struct std::hash<multinet::Rational> {
    std::size_t operator()(const multinet::Rational& q) const noexcept { return q.hash(); }
};
