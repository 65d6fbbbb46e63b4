#pragma once

// Floating-point and brute-force reference computations used only by tests.
// They deliberately avoid the library's exact algorithms.

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "multinet/cyclo.hpp"
#include "multinet/projgeo.hpp"
#include "multinet/qn.hpp"

namespace oracle {

using cplx = std::complex<long double>;

inline cplx root(int conductor, long long k) {
    const long double t = 2.0L * std::numbers::pi_v<long double> * static_cast<long double>(k) / conductor;
    return {std::cos(t), std::sin(t)};
}

/// Value of an element under the embedding z -> exp(2 pi i / N).
inline cplx eval(const multinet::FieldElem& a) {
    const int N = a.field().conductor();
    cplx s = 0;
    const auto c = a.coeffs();
    for (std::size_t k = 0; k < c.size(); ++k) s += static_cast<long double>(c[k].to_double()) * root(N, static_cast<long long>(k));
    return s;
}

inline bool near_zero(cplx v, long double tol = 1e-9L) { return std::abs(v) < tol; }

template <std::size_t Dim, class Tag>
std::vector<cplx> eval(const multinet::Projective<Dim, Tag>& p) {
    std::vector<cplx> out;
    for (std::size_t i = 0; i < Dim; ++i) out.push_back(eval(p[i]));
    return out;
}

inline cplx dot(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    cplx s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

/// Complex coordinates of the unit point [ζ^a : ζ^b : ζ^c : 1] with ζ a primitive n-th root.
inline std::vector<cplx> unit_point(int n, int a, int b, int c) { return {root(n, a), root(n, b), root(n, c), 1}; }

/// Random plane with small integer coefficients; zeros allowed but not everywhere.
inline multinet::PlaneP3 random_rational_plane(std::mt19937_64& rng, multinet::Field field, int bound = 6) {
    std::uniform_int_distribution<long long> dist(-bound, bound);
    for (;;) {
        std::array<long long, 4> c{};
        for (auto& x : c) x = dist(rng);
        if (c != std::array<long long, 4>{}) return multinet::PlaneP3::from_integers(field, c);
    }
}

/// Plane through three unit points, or nothing when they are collinear.
inline std::optional<multinet::PlaneP3> plane_through_units(const multinet::QnArrangement& qn, const multinet::UnitPoint& a,
                                                           const multinet::UnitPoint& b, const multinet::UnitPoint& c) {
    try {
        return multinet::plane_through(qn.unit_point(a), qn.unit_point(b), qn.unit_point(c));
    } catch (const multinet::DegenerateInput&) {
        return std::nullopt;
    }
}

inline multinet::UnitPoint unit_from_index(int n, int idx) { return {idx / (n * n), (idx / n) % n, idx % n}; }

}  // namespace oracle
