#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <type_traits>
#include <vector>

#include "multinet/cyclo.hpp"
#include "multinet/errors.hpp"

namespace multinet {

struct PointTag {};
struct FormTag {};

/// A point of P^(Dim-1), or a linear form defining a hyperplane there,
/// over the working cyclotomic field.
///
/// Coordinates are normalized on construction so that the first nonzero entry
/// is 1; two objects are projectively equal iff they compare equal.
template <std::size_t Dim, class Tag>
class Projective {
public:
    using Coords = std::array<FieldElem, Dim>;
    static constexpr std::size_t dimension = Dim;

    /// Throws `DegenerateInput` if every coordinate is zero.
    explicit Projective(Coords raw) : v_(std::move(raw)) { normalize(); }

    /// Convenience for integer coordinates.
    static Projective from_integers(Field field, const std::array<long long, Dim>& values) {
        Coords c;
        for (std::size_t i = 0; i < Dim; ++i) c[i] = FieldElem(field, Rational(values[i]));
        return Projective(std::move(c));
    }

    const FieldElem& operator[](std::size_t i) const { return v_[i]; }
    const Coords& coords() const noexcept { return v_; }
    Field field() const { return v_[0].field(); }

    std::vector<std::string> to_strings() const {
        std::vector<std::string> out;
        out.reserve(Dim);
        for (const auto& c : v_) out.push_back(c.to_string());
        return out;
    }

    /// "[a:b:c]" for points, "[a,b,c]" for forms.
    std::string to_string() const {
        constexpr char sep = std::is_same_v<Tag, PointTag> ? ':' : ',';
        std::string out = "[";
        for (std::size_t i = 0; i < Dim; ++i) {
            if (i) out += sep;
            out += v_[i].to_string();
        }
        return out + "]";
    }

    std::size_t hash() const noexcept {
        std::size_t h = Dim;
        for (const auto& c : v_) h ^= c.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }

    friend bool operator==(const Projective&, const Projective&) = default;
    friend std::strong_ordering operator<=>(const Projective& a, const Projective& b) {
        for (std::size_t i = 0; i < Dim; ++i)
            if (auto c = a.v_[i] <=> b.v_[i]; c != 0) return c;
        return std::strong_ordering::equal;
    }

private:
    void normalize() {
        std::size_t pivot = 0;
        while (pivot < Dim && v_[pivot].is_zero()) ++pivot;
        if (pivot == Dim) throw DegenerateInput("zero vector is not a projective object");
        if (v_[pivot].is_one()) return;
        const FieldElem inv = v_[pivot].inverse();
        v_[pivot] = FieldElem::one(v_[pivot].field());
        for (std::size_t i = pivot + 1; i < Dim; ++i)
            if (!v_[i].is_zero()) v_[i] *= inv;
    }

    Coords v_;
};

using PointP2 = Projective<3, PointTag>;
using PointP3 = Projective<4, PointTag>;
using LineP2 = Projective<3, FormTag>;
using PlaneP3 = Projective<4, FormTag>;

template <std::size_t Dim>
FieldElem dot(const Projective<Dim, FormTag>& form, const Projective<Dim, PointTag>& point) {
    FieldElem acc = FieldElem::zero(form.field());
    for (std::size_t i = 0; i < Dim; ++i) {
        if (form[i].is_zero() || point[i].is_zero()) continue;
        acc += form[i] * point[i];
    }
    return acc;
}

template <std::size_t Dim>
bool incident(const Projective<Dim, FormTag>& form, const Projective<Dim, PointTag>& point) {
    return dot(form, point).is_zero();
}

/// Raw cross product of two 3-vectors.
std::array<FieldElem, 3> cross(const std::array<FieldElem, 3>& a, const std::array<FieldElem, 3>& b);

/// Intersection point of two distinct lines. Throws `DegenerateInput` if equal.
PointP2 meet(const LineP2& a, const LineP2& b);
/// Line through two distinct points. Throws `DegenerateInput` if equal.
LineP2 join(const PointP2& a, const PointP2& b);

/// The unique plane through three independent points. Throws `DegenerateInput`
/// when the points span less than a plane.
PlaneP3 plane_through(const PointP3& a, const PointP3& b, const PointP3& c);

/// A line of P^3 stored as the reduced row-echelon basis of its 2-dim span.
/// The echelon form is unique, so equality and hashing are structural.
class LineP3 {
public:
    using Row = std::array<FieldElem, 4>;

    static LineP3 through(const PointP3& a, const PointP3& b);
    /// Intersection of two distinct planes.
    static LineP3 meet(const PlaneP3& a, const PlaneP3& b);

    PointP3 basis(std::size_t i) const { return PointP3(rows_[i]); }
    const std::array<Row, 2>& rows() const noexcept { return rows_; }
    bool contains(const PointP3& p) const;
    std::string to_string() const;
    std::size_t hash() const noexcept;

    friend bool operator==(const LineP3&, const LineP3&) = default;
    friend std::strong_ordering operator<=>(const LineP3& a, const LineP3& b);

private:
    explicit LineP3(std::array<Row, 2> rows) : rows_(std::move(rows)) {}
    static LineP3 from_span(std::vector<std::vector<FieldElem>> rows);

    std::array<Row, 2> rows_;
};

bool line_in_plane(const LineP3& line, const PlaneP3& plane);
/// Point where a line meets a plane; nullopt if the line lies in the plane.
std::optional<PointP3> intersect(const LineP3& line, const PlaneP3& plane);

// Exact linear algebra over the working field.
using Matrix = std::vector<std::vector<FieldElem>>;

/// Brings `m` to reduced row-echelon form in place and returns the rank.
std::size_t row_reduce(Matrix& m);
std::size_t rank(Matrix m);
/// Basis of the right nullspace, each vector with a 1 at its free column.
Matrix nullspace(Matrix m);

}  // namespace multinet

template <std::size_t Dim, class Tag>
struct std::hash<multinet::Projective<Dim, Tag>> {
    std::size_t operator()(const multinet::Projective<Dim, Tag>& p) const noexcept { return p.hash(); }
};

template <>
struct std::hash<multinet::LineP3> {
    std::size_t operator()(const multinet::LineP3& l) const noexcept { return l.hash(); }
};
