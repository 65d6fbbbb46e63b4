#include "multinet/modular.hpp"

#include "multinet/errors.hpp"

namespace multinet {

namespace {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
    std::uint64_t result = 1 % p;
    base %= p;
    while (exp != 0) {
        if (exp & 1U) result = result * base % p;
        base = base * base % p;
        exp >>= 1U;
    }
    return result;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d != 0) continue;
        out.push_back(d);
        while (n % d == 0) n /= d;
    }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace

ModularImage::ModularImage(Field field) : field_(field) {
    const auto n = static_cast<std::uint64_t>(field.conductor());
    constexpr std::uint64_t kLimit = std::uint64_t{1} << 31;
    for (std::uint64_t t = (kLimit - 2) / n; t > 0; --t) {
        const std::uint64_t candidate = 1 + n * t;
        if (is_prime(candidate)) {
            p_ = candidate;
            break;
        }
    }
    if (p_ == 0) throw InternalInconsistency("no prime congruent to 1 modulo the conductor");

    const auto factors = prime_factors(n);
    std::uint64_t zeta = 0;
    for (std::uint64_t x = 2; x < p_ && zeta == 0; ++x) {
        const std::uint64_t g = pow_mod(x, (p_ - 1) / n, p_);
        bool primitive = (n == 1) ? g == 1 : g != 1;
        for (std::uint64_t q : factors)
            if (primitive && pow_mod(g, n / q, p_) == 1) primitive = false;
        if (primitive) zeta = g;
    }
    if (n == 1) zeta = 1;
    powers_.resize(n);
    std::uint64_t cur = 1;
    for (std::uint64_t k = 0; k < n; ++k) {
        powers_[k] = cur;
        cur = cur * zeta % p_;
    }
}

std::uint64_t ModularImage::zeta_power(long long k) const noexcept {
    const auto n = static_cast<long long>(powers_.size());
    return powers_[static_cast<std::size_t>(((k % n) + n) % n)];
}

std::optional<std::uint64_t> ModularImage::image(const FieldElem& a) const {
    if (!(a.field() == field_)) throw FieldMismatch("modular image of an element of another field");
    std::uint64_t acc = 0;
    const auto coeffs = a.coeffs();
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i].is_zero()) continue;
        const auto c = coeffs[i].mod(p_);
        if (!c) return std::nullopt;
        acc = add(acc, mul(*c, powers_[i]));
    }
    return acc;
}

}  // namespace multinet
