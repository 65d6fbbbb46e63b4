#include "multinet/cyclo.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

#include "multinet/errors.hpp"

namespace multinet {

namespace detail {

struct FieldData {
    int conductor = 0;
    int degree = 0;
    std::vector<long long> modulus;
    // powers[k] = z^k mod Φ_N for k in [0, N); each row has `degree` entries.
    std::vector<std::vector<long long>> powers;
};

}  // namespace detail

namespace {

long long checked_mul(long long a, long long b) {
    long long r = 0;
    if (__builtin_mul_overflow(a, b, &r)) throw PreconditionFailed("cyclotomic table overflow");
    return r;
}

long long checked_sub(long long a, long long b) {
    long long r = 0;
    if (__builtin_sub_overflow(a, b, &r)) throw PreconditionFailed("cyclotomic table overflow");
    return r;
}

long long checked_add(long long a, long long b) {
    long long r = 0;
    if (__builtin_add_overflow(a, b, &r)) throw PreconditionFailed("cyclotomic table overflow");
    return r;
}

int mobius(int n) {
    int result = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        n /= p;
        if (n % p == 0) return 0;
        result = -result;
    }
    if (n > 1) result = -result;
    return result;
}

int totient(int n) {
    int result = n;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

std::unique_ptr<detail::FieldData> build_field(int conductor) {
    auto data = std::make_unique<detail::FieldData>();
    data->conductor = conductor;
    data->modulus = cyclotomic_polynomial(conductor);
    data->degree = static_cast<int>(data->modulus.size()) - 1;
    const int phi = data->degree;

    data->powers.assign(conductor, std::vector<long long>(phi, 0));
    std::vector<long long> current(phi, 0);
    current[0] = 1;
    for (int k = 0; k < conductor; ++k) {
        data->powers[k] = current;
        // current *= z, then eliminate z^phi using the monic modulus.
        const long long top = current[phi - 1];
        for (int i = phi - 1; i > 0; --i) current[i] = current[i - 1];
        current[0] = 0;
        if (top != 0) {
            for (int i = 0; i < phi; ++i)
                current[i] = checked_sub(current[i], checked_mul(top, data->modulus[i]));
        }
    }
    return data;
}

}  // namespace

std::vector<long long> cyclotomic_polynomial(int conductor) {
    if (conductor <= 0) throw PreconditionFailed("conductor must be positive");
    // Φ_N = Π_{d | N} (z^d - 1)^μ(N/d): multiply the μ = +1 factors first,
    // then divide out the μ = -1 factors exactly.
    std::vector<long long> poly{1};
    std::vector<int> divide_by;
    for (int d = 1; d <= conductor; ++d) {
        if (conductor % d != 0) continue;
        const int mu = mobius(conductor / d);
        if (mu == 1) {
            std::vector<long long> next(poly.size() + d, 0);
            for (std::size_t i = 0; i < poly.size(); ++i) {
                next[i + d] = checked_add(next[i + d], poly[i]);
                next[i] = checked_sub(next[i], poly[i]);
            }
            poly = std::move(next);
        } else if (mu == -1) {
            divide_by.push_back(d);
        }
    }
    for (int d : divide_by) {
        const std::size_t deg = poly.size() - 1;
        std::vector<long long> quotient(deg - d + 1, 0);
        // p = q (z^d - 1)  =>  q[i] = p[i+d] + q[i+d]
        for (std::size_t i = quotient.size(); i-- > 0;) {
            long long v = poly[i + d];
            if (i + d < quotient.size()) v = checked_add(v, quotient[i + d]);
            quotient[i] = v;
        }
        poly = std::move(quotient);
    }
    if (static_cast<int>(poly.size()) - 1 != totient(conductor) || poly.back() != 1)
        throw InternalInconsistency("cyclotomic polynomial has wrong shape");
    return poly;
}

Field Field::cyclotomic(int conductor) {
    if (conductor <= 0) throw PreconditionFailed("conductor must be positive, got " + std::to_string(conductor));
    if (conductor > kMaxConductor)
        throw PreconditionFailed("conductor exceeds " + std::to_string(kMaxConductor));
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<detail::FieldData>> registry;
    std::lock_guard lock(mutex);
    auto& slot = registry[conductor];
    if (!slot) slot = build_field(conductor);
    return Field(slot.get());
}

const detail::FieldData& Field::data() const {
    if (!data_) throw FieldMismatch("operation on an element without a field");
    return *data_;
}

int Field::conductor() const { return data().conductor; }
int Field::degree() const { return data().degree; }
std::span<const long long> Field::modulus() const { return data().modulus; }

std::span<const long long> Field::power_row(int k) const {
    const auto& d = data();
    return d.powers[static_cast<std::size_t>(k)];
}

// ---------------------------------------------------------------------------

FieldElem::FieldElem(Field field) : field_(field) {
    coeffs_.resize(static_cast<std::size_t>(field.degree()));
}

FieldElem::FieldElem(Field field, Rational value) : FieldElem(field) {
    coeffs_[0] = std::move(value);
}

FieldElem FieldElem::zeta_power(Field field, long long k) {
    const int n = field.conductor();
    const auto row = field.power_row(static_cast<int>(((k % n) + n) % n));
    FieldElem r(field);
    for (std::size_t i = 0; i < row.size(); ++i)
        if (row[i] != 0) r.coeffs_[i] = Rational(row[i]);
    return r;
}

FieldElem FieldElem::from_polynomial(Field field, std::span<const Rational> poly) {
    FieldElem r(field);
    const auto phi = static_cast<std::size_t>(field.degree());
    const int n = field.conductor();
    for (std::size_t i = 0; i < poly.size(); ++i) {
        if (poly[i].is_zero()) continue;
        if (i < phi) {
            r.coeffs_[i] += poly[i];
            continue;
        }
        const auto row = field.power_row(static_cast<int>(i % static_cast<std::size_t>(n)));
        for (std::size_t t = 0; t < phi; ++t)
            if (row[t] != 0) r.coeffs_[t] += poly[i] * Rational(row[t]);
    }
    return r;
}

void FieldElem::require_same_field(const FieldElem& other) const {
    if (!field_.valid() || !(field_ == other.field_))
        throw FieldMismatch("field mismatch between cyclotomic elements");
}

bool FieldElem::is_zero() const noexcept {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& q) { return q.is_zero(); });
}

bool FieldElem::is_rational() const noexcept {
    return coeffs_.empty() ||
           std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const Rational& q) { return q.is_zero(); });
}

bool FieldElem::is_one() const noexcept { return !coeffs_.empty() && coeffs_[0].is_one() && is_rational(); }

FieldElem FieldElem::operator-() const {
    FieldElem r = *this;
    for (auto& q : r.coeffs_) q = -q;
    return r;
}

FieldElem& FieldElem::operator+=(const FieldElem& rhs) {
    require_same_field(rhs);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (!rhs.coeffs_[i].is_zero()) coeffs_[i] += rhs.coeffs_[i];
    return *this;
}

FieldElem& FieldElem::operator-=(const FieldElem& rhs) {
    require_same_field(rhs);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (!rhs.coeffs_[i].is_zero()) coeffs_[i] -= rhs.coeffs_[i];
    return *this;
}

FieldElem FieldElem::scaled(const Rational& q) const {
    FieldElem r = *this;
    for (auto& c : r.coeffs_)
        if (!c.is_zero()) c *= q;
    return r;
}

FieldElem operator*(const FieldElem& a, const FieldElem& b) {
    a.require_same_field(b);
    if (b.is_rational()) return a.scaled(b.coeffs_[0]);
    if (a.is_rational()) return b.scaled(a.coeffs_[0]);

    const std::size_t phi = a.coeffs_.size();
    boost::container::small_vector<Rational, 16> prod(2 * phi - 1);
    for (std::size_t i = 0; i < phi; ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < phi; ++j) {
            if (b.coeffs_[j].is_zero()) continue;
            prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    FieldElem r(a.field_);
    for (std::size_t i = 0; i < phi; ++i) r.coeffs_[i] = std::move(prod[i]);
    for (std::size_t k = phi; k < prod.size(); ++k) {
        if (prod[k].is_zero()) continue;
        const auto row = a.field_.power_row(static_cast<int>(k % static_cast<std::size_t>(a.field_.conductor())));
        for (std::size_t t = 0; t < phi; ++t) {
            if (row[t] == 0) continue;
            if (row[t] == 1) {
                r.coeffs_[t] += prod[k];
            } else if (row[t] == -1) {
                r.coeffs_[t] -= prod[k];
            } else {
                r.coeffs_[t] += prod[k] * Rational(row[t]);
            }
        }
    }
    return r;
}

FieldElem& FieldElem::operator*=(const FieldElem& rhs) { return *this = *this * rhs; }
FieldElem& FieldElem::operator/=(const FieldElem& rhs) { return *this = *this / rhs; }

namespace {

using Poly = std::vector<Rational>;

void trim(Poly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

Poly poly_sub(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

// a = q*b + r with deg r < deg b; b must be nonzero and trimmed.
std::pair<Poly, Poly> poly_divmod(Poly a, const Poly& b) {
    trim(a);
    if (a.size() < b.size()) return {Poly{}, a};
    Poly q(a.size() - b.size() + 1);
    const Rational lead_inv = b.back().reciprocal();
    for (std::size_t i = q.size(); i-- > 0;) {
        const Rational c = a[i + b.size() - 1] * lead_inv;
        q[i] = c;
        if (c.is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) a[i + j] -= c * b[j];
    }
    a.resize(b.size() - 1);
    trim(a);
    trim(q);
    return {q, a};
}

}  // namespace

FieldElem FieldElem::inverse() const {
    if (!field_.valid()) throw FieldMismatch("inverse of an element without a field");
    if (is_zero()) throw DivisionByZero("inverse of zero in Q(zeta_" + std::to_string(field_.conductor()) + ")");
    if (is_rational()) return FieldElem(field_, coeffs_[0].reciprocal());

    const auto modulus = field_.modulus();
    Poly r0(modulus.begin(), modulus.end());
    Poly r1(coeffs_.begin(), coeffs_.end());
    trim(r1);
    Poly s0{};
    Poly s1{Rational(1)};
    // Invariant: s_i * a ≡ r_i (mod Φ_N).
    while (!r1.empty()) {
        auto [q, r] = poly_divmod(r0, r1);
        Poly s2 = poly_sub(s0, poly_mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r0.size() != 1) throw InternalInconsistency("element shares a factor with the cyclotomic modulus");
    const Rational scale = r0[0].reciprocal();
    for (auto& c : s0) c *= scale;
    return from_polynomial(field_, s0);
}

FieldElem FieldElem::pow(unsigned long long exponent) const {
    FieldElem result = one(field_);
    FieldElem base = *this;
    while (exponent != 0) {
        if (exponent & 1ULL) result *= base;
        exponent >>= 1;
        if (exponent != 0) base *= base;
    }
    return result;
}

FieldElem FieldElem::times_zeta(long long k) const {
    const int n = field_.conductor();
    const long long shift = ((k % n) + n) % n;
    if (shift == 0) return *this;
    FieldElem r(field_);
    const std::size_t phi = coeffs_.size();
    for (std::size_t i = 0; i < phi; ++i) {
        if (coeffs_[i].is_zero()) continue;
        const auto row = field_.power_row(static_cast<int>((static_cast<long long>(i) + shift) % n));
        for (std::size_t t = 0; t < phi; ++t) {
            if (row[t] == 0) continue;
            if (row[t] == 1) {
                r.coeffs_[t] += coeffs_[i];
            } else if (row[t] == -1) {
                r.coeffs_[t] -= coeffs_[i];
            } else {
                r.coeffs_[t] += coeffs_[i] * Rational(row[t]);
            }
        }
    }
    return r;
}

std::string FieldElem::to_string() const {
    std::string out;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        const Rational& c = coeffs_[k];
        if (c.is_zero()) continue;
        const bool negative = c.sign() < 0;
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        const Rational mag = c.abs();
        if (k == 0) {
            out += mag.to_string();
            continue;
        }
        if (!mag.is_one()) out += mag.to_string() + "*";
        out += "z";
        if (k > 1) out += "^" + std::to_string(k);
    }
    return out.empty() ? "0" : out;
}

std::size_t FieldElem::hash() const noexcept {
    std::size_t h = field_.valid() ? static_cast<std::size_t>(field_.conductor()) : 0;
    for (const auto& c : coeffs_) h ^= c.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

bool operator==(const FieldElem& a, const FieldElem& b) noexcept {
    return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
}

std::strong_ordering operator<=>(const FieldElem& a, const FieldElem& b) {
    const int na = a.field_.valid() ? a.field_.conductor() : 0;
    const int nb = b.field_.valid() ? b.field_.conductor() : 0;
    if (auto c = na <=> nb; c != 0) return c;
    return std::lexicographical_compare_three_way(a.coeffs_.begin(), a.coeffs_.end(), b.coeffs_.begin(),
                                                  b.coeffs_.end());
}

std::optional<int> root_of_unity_exponent(const FieldElem& a, int m) {
    if (m <= 0) throw PreconditionFailed("root order must be positive");
    const int n = a.field().conductor();
    if (n % m != 0)
        throw PreconditionFailed("order " + std::to_string(m) + " does not divide conductor " + std::to_string(n));
    if (!a.pow(static_cast<unsigned long long>(m)).is_one()) return std::nullopt;
    const int step = n / m;
    for (int e = 0; e < m; ++e)
        if (a == FieldElem::zeta_power(a.field(), static_cast<long long>(e) * step)) return e;
    return std::nullopt;
}

}  // namespace multinet
