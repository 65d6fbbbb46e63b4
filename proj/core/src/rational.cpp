#include "multinet/rational.hpp"

#include <gmpxx.h>

#include <cctype>

#include "multinet/errors.hpp"

namespace multinet {

namespace detail {

struct BigRational {
    mpq_class value;

    static mpq_class to_mpq(const Rational& q) {
        if (q.big_) return q.big_->value;
        mpq_class r;
        mpz_set_si(r.get_num_mpz_t(), q.num_);
        mpz_set_si(r.get_den_mpz_t(), q.den_);
        return r;
    }

    static Rational from_mpq(const mpq_class& v) {
        // mpq values produced by gmpxx arithmetic are already canonical.
        const mpz_class& num = v.get_num();
        const mpz_class& den = v.get_den();
        if (num.fits_slong_p() && den.fits_slong_p()) {
            const long n = num.get_si();
            const long d = den.get_si();
            if (n < Rational::kInlineLimit && n > -Rational::kInlineLimit &&
                d < Rational::kInlineLimit)
                return Rational::make_inline(n, d);
        }
        Rational r;
        r.big_ = new BigRational{v};
        return r;
    }
};

namespace {

mpz_class wide_to_mpz(wide_int v) {
    const bool negative = v < 0;
    __extension__ typedef unsigned __int128 wide_uint;
    wide_uint mag = negative ? -static_cast<wide_uint>(v) : static_cast<wide_uint>(v);
    mpz_class hi(static_cast<unsigned long>(mag >> 64));
    mpz_class lo(static_cast<unsigned long>(mag & ~std::uint64_t{0}));
    mpz_class r = (hi << 64) + lo;
    return negative ? mpz_class(-r) : r;
}

}  // namespace
}  // namespace detail

Rational::Rational(long long value) {
    if (value < kInlineLimit && value > -kInlineLimit) {
        num_ = value;
    } else {
        mpq_class v;
        mpz_set_si(v.get_num_mpz_t(), value);
        *this = detail::BigRational::from_mpq(v);
    }
}

Rational::Rational(long long num, long long den) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    *this = from_wide(num, den);
}

Rational::Rational(const Rational& other)
    : num_(other.num_),
      den_(other.den_),
      big_(other.big_ ? new detail::BigRational(*other.big_) : nullptr) {}

Rational& Rational::operator=(const Rational& other) {
    if (this != &other) {
        num_ = other.num_;
        den_ = other.den_;
        detail::BigRational* copy = other.big_ ? new detail::BigRational(*other.big_) : nullptr;
        if (big_) release();
        big_ = copy;
    }
    return *this;
}

void Rational::release() noexcept {
    delete big_;
    big_ = nullptr;
}

Rational Rational::from_wide(detail::wide_int num, detail::wide_int den) {
    if (den < 0) {
        num = -num;
        den = -den;
    }
    if (num == 0) return Rational{};
    auto a = num < 0 ? -num : num;
    auto b = den;
    while (b != 0) {
        auto t = a % b;
        a = b;
        b = t;
    }
    num /= a;
    den /= a;
    if (fits(num) && fits(den))
        return make_inline(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den));
    mpq_class v(detail::wide_to_mpz(num), detail::wide_to_mpz(den));
    v.canonicalize();
    return detail::BigRational::from_mpq(v);
}

Rational Rational::parse(std::string_view text) {
    std::size_t pos = 0;
    auto digits = [&](bool allow_sign) {
        const std::size_t start = pos;
        if (allow_sign && pos < text.size() && text[pos] == '-') ++pos;
        const std::size_t first_digit = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == first_digit) throw ParseError("expected digits", pos);
        return std::string(text.substr(start, pos - start));
    };
    std::string num = digits(true);
    std::string den = "1";
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        den = digits(false);
    }
    if (pos != text.size()) throw ParseError("unexpected character in rational", pos);
    mpz_class n(num, 10);
    mpz_class d(den, 10);
    if (d == 0) throw DivisionByZero("rational with zero denominator");
    mpq_class v(n, d);
    v.canonicalize();
    return detail::BigRational::from_mpq(v);
}

bool Rational::is_integer() const noexcept {
    if (big_) return big_->value.get_den() == 1;
    return den_ == 1;
}

int Rational::sign() const noexcept {
    if (big_) return sgn(big_->value);
    return (num_ > 0) - (num_ < 0);
}

Rational Rational::operator-() const {
    if (!big_) return make_inline(-num_, den_);
    return detail::BigRational::from_mpq(-big_->value);
}

Rational Rational::reciprocal() const {
    if (is_zero()) throw DivisionByZero("reciprocal of zero");
    if (!big_) return num_ < 0 ? make_inline(-den_, -num_) : make_inline(den_, num_);
    mpq_class inv = 1 / big_->value;
    return detail::BigRational::from_mpq(inv);
}

Rational Rational::add_slow(const Rational& a, const Rational& b, bool subtract) {
    mpq_class x = detail::BigRational::to_mpq(a);
    mpq_class y = detail::BigRational::to_mpq(b);
    mpq_class r = subtract ? mpq_class(x - y) : mpq_class(x + y);
    return detail::BigRational::from_mpq(r);
}

Rational Rational::mul_slow(const Rational& a, const Rational& b) {
    mpq_class r = detail::BigRational::to_mpq(a) * detail::BigRational::to_mpq(b);
    return detail::BigRational::from_mpq(r);
}

bool operator==(const Rational& a, const Rational& b) noexcept {
    if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
    if (a.big_ && b.big_) return a.big_->value == b.big_->value;
    return false;  // canonical: an inline value never equals a promoted one
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
        const detail::wide_int lhs = static_cast<detail::wide_int>(a.num_) * b.den_;
        const detail::wide_int rhs = static_cast<detail::wide_int>(b.num_) * a.den_;
        return lhs <=> rhs;
    }
    const int c = cmp(detail::BigRational::to_mpq(a), detail::BigRational::to_mpq(b));
    return c <=> 0;
}

std::string Rational::to_string() const {
    if (big_) return big_->value.get_str(10);
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

std::size_t Rational::hash() const noexcept {
    if (big_) return std::hash<std::string>{}(big_->value.get_str(16));
    const auto h1 = std::hash<std::int64_t>{}(num_);
    const auto h2 = std::hash<std::int64_t>{}(den_);
    return h1 ^ (h2 + 0x9e3779b97f4a7c15ULL + (h1 << 6) + (h1 >> 2));
}

std::optional<std::uint64_t> Rational::mod(std::uint64_t p) const {
    mpz_class num;
    mpz_class den;
    if (big_) {
        num = big_->value.get_num();
        den = big_->value.get_den();
    } else {
        mpz_set_si(num.get_mpz_t(), num_);
        mpz_set_si(den.get_mpz_t(), den_);
    }
    const mpz_class modulus(static_cast<unsigned long>(p));
    mpz_class n = num % modulus;
    if (n < 0) n += modulus;
    mpz_class d = den % modulus;
    if (d == 0) return std::nullopt;
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), d.get_mpz_t(), modulus.get_mpz_t());
    mpz_class r = (n * inv) % modulus;
    return static_cast<std::uint64_t>(r.get_ui());
}

double Rational::to_double() const {
    if (big_) return big_->value.get_d();
    return static_cast<double>(num_) / static_cast<double>(den_);
}

}  // namespace multinet
