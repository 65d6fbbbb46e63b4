#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "multinet/cyclo.hpp"
#include "multinet/projgeo.hpp"

namespace multinet {

struct BlockLine {
    LineP2 line;
    int mult = 1;

    friend bool operator==(const BlockLine&, const BlockLine&) = default;
};

using Block = std::vector<BlockLine>;

enum class Verdict { Net, LightProper, Heavy };

/// "net", "light", "heavy".
std::string to_string(Verdict v);

/// A multi-arrangement of lines in P^2 partitioned into blocks.
///
/// Nothing here asserts that the axioms hold; `verify` decides that.
struct Multinet {
    Field field;
    int d = 0;
    std::vector<Block> blocks;
    std::string provenance;

    int k() const noexcept { return static_cast<int>(blocks.size()); }
    /// Sorts every block by line so that equal multinets compare equal.
    void canonicalize();

    friend bool operator==(const Multinet& a, const Multinet& b) {
        return a.field == b.field && a.d == b.d && a.blocks == b.blocks;
    }
};

/// One point where lines of at least two different blocks meet, with the
/// per-block multiplicity sums and the incident lines of each block.
struct IncidencePoint {
    PointP2 point;
    std::vector<int> block_sums;
    std::vector<std::vector<std::size_t>> lines;  // [block] -> indices into that block
};

/// All meets of lines from different blocks, deduplicated and sorted by point.
/// Identical lines in different blocks are skipped rather than met, which lets
/// this also describe raw sections that still carry fixed components.
std::vector<IncidencePoint> incidence_table(const std::vector<Block>& blocks);

struct BasePoint {
    PointP2 point;
    int mult = 1;
};

struct BaseLocus {
    std::vector<BasePoint> points;  // sorted by point

    /// Map multiplicity -> number of points.
    std::vector<std::pair<int, int>> histogram() const;
};

/// Base locus X with multiplicities. Throws `ConditionViolation` naming the
/// offending point when the per-block sums at a point disagree, and when a
/// line is shared by two blocks.
BaseLocus base_locus(const Multinet& m);

struct IdentityCheck {
    std::string name;
    bool ok = false;
    std::string detail;
};

struct VerificationReport {
    bool condition_i_ok = false;
    bool condition_ii_ok = false;
    std::vector<IdentityCheck> identities;  // the four numerical identities, in order
    bool k_bound_ok = false;                // no more than four blocks unless d = 1
    bool four_blocks_net_ok = false;        // four blocks force a net
    std::optional<Verdict> classification;  // set iff both conditions hold
    std::vector<std::string> failures;

    bool ok() const noexcept { return failures.empty(); }
    /// e.g. "net, k=4, d=3, all identities pass".
    std::string summary(int k, int d) const;
};

VerificationReport verify(const Multinet& m);

/// Dense homogeneous polynomial in x, y, z of fixed degree.
class HomogeneousPoly {
public:
    HomogeneousPoly(Field field, int degree);
    static HomogeneousPoly one(Field field);

    int degree() const noexcept { return degree_; }
    /// Coefficient of x^i y^j z^(degree-i-j).
    const FieldElem& coeff(int i, int j) const { return c_[index(i, j)]; }
    FieldElem& coeff(int i, int j) { return c_[index(i, j)]; }
    const std::vector<FieldElem>& coeffs() const noexcept { return c_; }

    HomogeneousPoly times_linear(const LineP2& l) const;

private:
    std::size_t index(int i, int j) const;

    Field field_;
    int degree_;
    std::vector<FieldElem> c_;
};

/// Product of the block's lines raised to their multiplicities.
HomogeneousPoly block_polynomial(const Field& field, const Block& block);

/// Rank of the span of the block polynomials (requires equal degrees).
std::size_t pencil_rank(const Multinet& m);
/// True iff the block polynomials span exactly a pencil.
bool verify_pencil(const Multinet& m);

struct LatinSquare {
    int order = 0;
    std::vector<std::vector<int>> entries;

    bool is_latin() const;
    friend bool operator==(const LatinSquare&, const LatinSquare&) = default;
};

/// All ordered pairs of entries occur exactly once.
bool orthogonal(const LatinSquare& a, const LatinSquare& b);

/// Latin squares of a 3- or 4-net, lines of each block indexed in order of
/// their coefficient strings. Throws `PreconditionFailed` for anything else.
std::vector<LatinSquare> to_latin(const Multinet& m);

namespace catalog {

/// k concurrent lines, one per block.
Multinet local(Field field, int k);
/// Blocks x^n(y^n - z^n), y^n(x^n - z^n), z^n(x^n - y^n). Requires n | N.
Multinet monomial(Field field, int n);
/// The (4,3)-net of the pencil spanned by xyz and x^3 + y^3 + z^3. Requires 3 | N.
Multinet hasse(Field field);

}  // namespace catalog

}  // namespace multinet
