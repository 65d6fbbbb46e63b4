#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "multinet/rational.hpp"

namespace multinet {

namespace detail {
struct FieldData;
}

/// Handle to the cyclotomic field Q(ζ_N), ζ a fixed primitive N-th root of unity.
///
/// Fields are interned: `Field::cyclotomic(N)` always returns a handle to the
/// same immutable table, so handles compare by identity and are trivially
/// copyable. A default-constructed handle is "no field" and every arithmetic
/// operation on it throws `FieldMismatch`.
class Field {
public:
    Field() = default;

    /// Throws `PreconditionFailed` for N = 0 or N above `kMaxConductor`.
    static Field cyclotomic(int conductor);

    static constexpr int kMaxConductor = 4096;

    bool valid() const noexcept { return data_ != nullptr; }
    int conductor() const;
    /// Euler totient of the conductor; the dimension over Q.
    int degree() const;
    /// Coefficients of Φ_N, constant term first; size degree()+1, monic.
    std::span<const long long> modulus() const;
    /// z^k reduced modulo Φ_N, for k in [0, N).
    std::span<const long long> power_row(int k) const;

    friend bool operator==(Field a, Field b) noexcept { return a.data_ == b.data_; }

    const detail::FieldData& data() const;

private:
    explicit Field(const detail::FieldData* data) : data_(data) {}
    const detail::FieldData* data_ = nullptr;
};

inline Field make_field(int conductor) { return Field::cyclotomic(conductor); }

/// Cyclotomic polynomial Φ_N with integer coefficients, constant term first.
std::vector<long long> cyclotomic_polynomial(int conductor);

/// Exact element of Q(ζ_N) in the power basis 1, ζ, ..., ζ^(φ(N)-1).
///
/// Coefficients are always fully reduced modulo Φ_N, which makes the
/// representation canonical: two elements are equal iff their coefficient
/// vectors are identical.
class FieldElem {
public:
    using Coeffs = boost::container::small_vector<Rational, 8>;

    FieldElem() = default;
    explicit FieldElem(Field field);
    FieldElem(Field field, Rational value);

    static FieldElem zero(Field field) { return FieldElem(field); }
    static FieldElem one(Field field) { return FieldElem(field, Rational(1)); }
    /// ζ^k for any integer k (negative exponents allowed).
    static FieldElem zeta_power(Field field, long long k);
    /// Builds an element from a polynomial in ζ of any length, reducing it.
    static FieldElem from_polynomial(Field field, std::span<const Rational> poly);

    Field field() const noexcept { return field_; }
    std::span<const Rational> coeffs() const noexcept { return {coeffs_.data(), coeffs_.size()}; }

    bool is_zero() const noexcept;
    bool is_one() const noexcept;
    bool is_rational() const noexcept;

    FieldElem operator-() const;
    FieldElem& operator+=(const FieldElem& rhs);
    FieldElem& operator-=(const FieldElem& rhs);
    FieldElem& operator*=(const FieldElem& rhs);
    FieldElem& operator/=(const FieldElem& rhs);

    friend FieldElem operator+(FieldElem a, const FieldElem& b) { return a += b; }
    friend FieldElem operator-(FieldElem a, const FieldElem& b) { return a -= b; }
    friend FieldElem operator*(const FieldElem& a, const FieldElem& b);
    friend FieldElem operator/(const FieldElem& a, const FieldElem& b) { return a * b.inverse(); }

    FieldElem scaled(const Rational& q) const;

    /// Multiplicative inverse via the extended Euclidean algorithm over Q[z].
    /// Throws `DivisionByZero` on zero.
    FieldElem inverse() const;
    FieldElem pow(unsigned long long exponent) const;
    /// this * ζ^k.
    FieldElem times_zeta(long long k) const;

    /// Canonical text: monomials q*z^k with k ascending, "0" for zero.
    std::string to_string() const;
    std::size_t hash() const noexcept;

    friend bool operator==(const FieldElem& a, const FieldElem& b) noexcept;
    friend std::strong_ordering operator<=>(const FieldElem& a, const FieldElem& b);

private:
    void require_same_field(const FieldElem& other) const;

    Field field_;
    Coeffs coeffs_;
};

inline std::ostream& operator<<(std::ostream& os, const FieldElem& a) { return os << a.to_string(); }

/// Parses an expression in z (= ζ) with + - * / ^, integer literals and parentheses.
/// Throws `ParseError` (with position) or `DivisionByZero`.
FieldElem parse_elem(std::string_view text, Field field);

/// Returns e in [0, m) with a = ζ_m^e where ζ_m = ζ^(N/m), or nullopt.
/// Throws `PreconditionFailed` if m = 0 or m does not divide N.
std::optional<int> root_of_unity_exponent(const FieldElem& a, int m);

}  // namespace multinet

template <>
struct std::hash<multinet::FieldElem> {
    std::size_t operator()(const multinet::FieldElem& a) const noexcept { return a.hash(); }
};
