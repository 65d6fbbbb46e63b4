#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "multinet/cyclo.hpp"

namespace multinet {

/// Ring homomorphism from Q(ζ_N) (restricted to elements whose denominators
/// are units mod p) onto F_p, for a prime p ≡ 1 (mod N) below 2^31. ζ maps to
/// an element of exact multiplicative order N.
///
/// Exact zero maps to zero, so a nonzero image certifies a nonzero element.
/// A zero image proves nothing and must be confirmed exactly. The search uses
/// this as a cheap upper bound on incidence counts.
class ModularImage {
public:
    explicit ModularImage(Field field);

    std::uint64_t prime() const noexcept { return p_; }
    /// Image of ζ^k.
    std::uint64_t zeta_power(long long k) const noexcept;
    /// Image of an exact element; nullopt when a denominator vanishes mod p.
    std::optional<std::uint64_t> image(const FieldElem& a) const;

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const noexcept {
        const std::uint64_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const noexcept { return a >= b ? a - b : a + p_ - b; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const noexcept { return (a * b) % p_; }
    std::uint64_t neg(std::uint64_t a) const noexcept { return a == 0 ? 0 : p_ - a; }

private:
    Field field_;
    std::uint64_t p_ = 0;
    std::vector<std::uint64_t> powers_;  // images of ζ^k, k in [0, N)
};

}  // namespace multinet
