#include "multinet/multinet.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "multinet/errors.hpp"

namespace multinet {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Net: return "net";
        case Verdict::LightProper: return "light";
        case Verdict::Heavy: return "heavy";
    }
    return "unknown";
}

void Multinet::canonicalize() {
    for (auto& block : blocks)
        std::sort(block.begin(), block.end(), [](const BlockLine& a, const BlockLine& b) { return a.line < b.line; });
}

std::vector<IncidencePoint> incidence_table(const std::vector<Block>& blocks) {
    const std::size_t k = blocks.size();
    std::unordered_map<PointP2, std::size_t> index;
    std::vector<IncidencePoint> table;
    auto mark = [&](IncidencePoint& ip, std::size_t block, std::size_t line) {
        auto& v = ip.lines[block];
        if (std::find(v.begin(), v.end(), line) == v.end()) {
            v.push_back(line);
            ip.block_sums[block] += blocks[block][line].mult;
        }
    };
    for (std::size_t bi = 0; bi < k; ++bi) {
        for (std::size_t bj = bi + 1; bj < k; ++bj) {
            for (std::size_t li = 0; li < blocks[bi].size(); ++li) {
                for (std::size_t lj = 0; lj < blocks[bj].size(); ++lj) {
                    const LineP2& a = blocks[bi][li].line;
                    const LineP2& b = blocks[bj][lj].line;
                    if (a == b) continue;
                    PointP2 p = meet(a, b);
                    auto [it, inserted] = index.try_emplace(p, table.size());
                    if (inserted)
                        table.push_back(IncidencePoint{std::move(p), std::vector<int>(k, 0),
                                                       std::vector<std::vector<std::size_t>>(k)});
                    IncidencePoint& ip = table[it->second];
                    mark(ip, bi, li);
                    mark(ip, bj, lj);
                }
            }
        }
    }
    for (auto& ip : table)
        for (auto& v : ip.lines) std::sort(v.begin(), v.end());
    std::sort(table.begin(), table.end(),
              [](const IncidencePoint& a, const IncidencePoint& b) { return a.point < b.point; });
    return table;
}

namespace {

std::optional<std::string> shared_line(const std::vector<Block>& blocks) {
    for (std::size_t i = 0; i < blocks.size(); ++i)
        for (std::size_t j = i + 1; j < blocks.size(); ++j)
            for (const auto& a : blocks[i])
                for (const auto& b : blocks[j])
                    if (a.line == b.line)
                        return "line " + a.line.to_string() + " lies in blocks " + std::to_string(i) + " and " +
                               std::to_string(j);
    return std::nullopt;
}

std::optional<std::string> unequal_sums(const IncidencePoint& ip) {
    for (std::size_t b = 1; b < ip.block_sums.size(); ++b) {
        if (ip.block_sums[b] != ip.block_sums[0]) {
            std::string sums;
            for (std::size_t i = 0; i < ip.block_sums.size(); ++i)
                sums += (i ? "," : "") + std::to_string(ip.block_sums[i]);
            return "point " + ip.point.to_string() + " has block sums (" + sums + ")";
        }
    }
    return std::nullopt;
}

}  // namespace

std::vector<std::pair<int, int>> BaseLocus::histogram() const {
    std::map<int, int> h;
    for (const auto& p : points) ++h[p.mult];
    return {h.begin(), h.end()};
}

BaseLocus base_locus(const Multinet& m) {
    if (auto s = shared_line(m.blocks)) throw ConditionViolation(*s);
    BaseLocus out;
    for (auto& ip : incidence_table(m.blocks)) {
        if (auto s = unequal_sums(ip)) throw ConditionViolation("condition (i) fails: " + *s);
        out.points.push_back(BasePoint{std::move(ip.point), ip.block_sums[0]});
    }
    return out;
}

std::string VerificationReport::summary(int k, int d) const {
    std::string head = classification ? to_string(*classification) : std::string("not a multinet");
    head += ", k=" + std::to_string(k) + ", d=" + std::to_string(d);
    if (failures.empty()) return head + ", all identities pass";
    return head + ", " + std::to_string(failures.size()) + " failure(s): " + failures.front();
}

VerificationReport verify(const Multinet& m) {
    VerificationReport r;
    const std::size_t k = m.blocks.size();
    auto check = [&](std::string name, bool ok, std::string detail) {
        if (!ok) r.failures.push_back(name + ": " + detail);
        r.identities.push_back(IdentityCheck{std::move(name), ok, std::move(detail)});
    };

    // Every block has total multiplicity d.
    std::string bad_block;
    long total = 0;
    for (std::size_t i = 0; i < k; ++i) {
        int s = 0;
        for (const auto& bl : m.blocks[i]) s += bl.mult;
        total += s;
        if (s != m.d && bad_block.empty())
            bad_block = "block " + std::to_string(i) + " sums to " + std::to_string(s) + ", expected " + std::to_string(m.d);
    }
    check("block degree", bad_block.empty(), bad_block.empty() ? "block sums equal d" : bad_block);
    // Total multiplicity dk.
    const long expected_total = static_cast<long>(m.d) * static_cast<long>(k);
    check("line count", total == expected_total,
          "total " + std::to_string(total) + ", expected " + std::to_string(expected_total));

    // Condition (i).
    std::vector<IncidencePoint> table;
    std::string cond_i;
    if (k < 3) cond_i = "fewer than three blocks";
    if (auto s = shared_line(m.blocks); s && cond_i.empty()) cond_i = *s;
    if (cond_i.empty()) {
        table = incidence_table(m.blocks);
        for (const auto& ip : table)
            if (auto s = unequal_sums(ip)) {
                cond_i = *s;
                break;
            }
    }
    r.condition_i_ok = cond_i.empty();
    if (!r.condition_i_ok) r.failures.push_back("condition (i): " + cond_i);

    // Point mass and line incidence need point multiplicities, hence condition (i).
    if (r.condition_i_ok) {
        long sq = 0;
        for (const auto& ip : table) sq += static_cast<long>(ip.block_sums[0]) * ip.block_sums[0];
        const long d2 = static_cast<long>(m.d) * m.d;
        check("point mass", sq == d2, "sum of squared point multiplicities " + std::to_string(sq) + ", expected " + std::to_string(d2));

        std::vector<std::vector<long>> on_line(k);
        for (std::size_t b = 0; b < k; ++b) on_line[b].assign(m.blocks[b].size(), 0);
        for (const auto& ip : table)
            for (std::size_t b = 0; b < k; ++b)
                for (std::size_t li : ip.lines[b]) on_line[b][li] += ip.block_sums[0];
        std::string bad_line;
        for (std::size_t b = 0; b < k && bad_line.empty(); ++b)
            for (std::size_t li = 0; li < on_line[b].size(); ++li)
                if (on_line[b][li] != m.d) {
                    bad_line = "line " + m.blocks[b][li].line.to_string() + " carries " + std::to_string(on_line[b][li]);
                    break;
                }
        check("line incidence", bad_line.empty(), bad_line.empty() ? "every line carries d" : bad_line);
    } else {
        check("point mass", false, "undefined without condition (i)");
        check("line incidence", false, "undefined without condition (i)");
    }

    // Condition (ii): lines of a block are connected through meets outside X.
    std::string cond_ii;
    if (r.condition_i_ok) {
        std::unordered_set<PointP2> xs;
        for (const auto& ip : table) xs.insert(ip.point);
        for (std::size_t b = 0; b < k && cond_ii.empty(); ++b) {
            const auto& block = m.blocks[b];
            const std::size_t sz = block.size();
            std::vector<std::size_t> parent(sz);
            std::iota(parent.begin(), parent.end(), 0);
            auto find = [&](std::size_t x) {
                while (parent[x] != x) x = parent[x] = parent[parent[x]];
                return x;
            };
            for (std::size_t i = 0; i < sz; ++i)
                for (std::size_t j = i + 1; j < sz; ++j) {
                    if (block[i].line == block[j].line) {
                        cond_ii = "block " + std::to_string(b) + " repeats line " + block[i].line.to_string();
                        continue;
                    }
                    if (!xs.contains(meet(block[i].line, block[j].line))) parent[find(i)] = find(j);
                }
            for (std::size_t i = 1; i < sz && cond_ii.empty(); ++i)
                if (find(i) != find(0)) cond_ii = "block " + std::to_string(b) + " is disconnected";
        }
    } else {
        cond_ii = "undefined without condition (i)";
    }
    r.condition_ii_ok = cond_ii.empty();
    if (!r.condition_ii_ok) r.failures.push_back("condition (ii): " + cond_ii);

    if (r.condition_i_ok && r.condition_ii_ok) {
        const bool all_points_simple =
            std::all_of(table.begin(), table.end(), [](const IncidencePoint& ip) { return ip.block_sums[0] == 1; });
        bool all_lines_simple = true;
        for (const auto& block : m.blocks)
            for (const auto& bl : block) all_lines_simple = all_lines_simple && bl.mult == 1;
        if (all_points_simple)
            r.classification = Verdict::Net;
        else
            r.classification = all_lines_simple ? Verdict::LightProper : Verdict::Heavy;
    }

    r.k_bound_ok = k <= 4 || m.d == 1;
    if (!r.k_bound_ok) r.failures.push_back("more than four blocks with d > 1");
    r.four_blocks_net_ok = k != 4 || r.classification == Verdict::Net;
    if (!r.four_blocks_net_ok) r.failures.push_back("four blocks but not a net");
    return r;
}

HomogeneousPoly::HomogeneousPoly(Field field, int degree)
    : field_(field), degree_(degree), c_(static_cast<std::size_t>((degree + 1) * (degree + 2) / 2), FieldElem::zero(field)) {}

HomogeneousPoly HomogeneousPoly::one(Field field) {
    HomogeneousPoly p(field, 0);
    p.c_[0] = FieldElem::one(field);
    return p;
}

std::size_t HomogeneousPoly::index(int i, int j) const {
    // Rows by x-degree i, each row holding j = 0..degree-i.
    const int before = i * (degree_ + 1) - i * (i - 1) / 2;
    return static_cast<std::size_t>(before + j);
}

HomogeneousPoly HomogeneousPoly::times_linear(const LineP2& l) const {
    HomogeneousPoly out(field_, degree_ + 1);
    for (int i = 0; i <= degree_; ++i)
        for (int j = 0; i + j <= degree_; ++j) {
            const FieldElem& c = coeff(i, j);
            if (c.is_zero()) continue;
            if (!l[0].is_zero()) out.coeff(i + 1, j) += c * l[0];
            if (!l[1].is_zero()) out.coeff(i, j + 1) += c * l[1];
            if (!l[2].is_zero()) out.coeff(i, j) += c * l[2];
        }
    return out;
}

HomogeneousPoly block_polynomial(const Field& field, const Block& block) {
    HomogeneousPoly p = HomogeneousPoly::one(field);
    for (const auto& bl : block)
        for (int e = 0; e < bl.mult; ++e) p = p.times_linear(bl.line);
    return p;
}

std::size_t pencil_rank(const Multinet& m) {
    Matrix rows;
    int degree = -1;
    for (const auto& block : m.blocks) {
        HomogeneousPoly p = block_polynomial(m.field, block);
        if (degree >= 0 && p.degree() != degree)
            throw PreconditionFailed("block polynomials of different degrees");
        degree = p.degree();
        rows.push_back(p.coeffs());
    }
    return rank(std::move(rows));
}

bool verify_pencil(const Multinet& m) {
    if (m.k() < 3) return false;
    try {
        return pencil_rank(m) == 2;
    } catch (const PreconditionFailed&) {
        return false;
    }
}

bool LatinSquare::is_latin() const {
    if (static_cast<int>(entries.size()) != order) return false;
    for (int i = 0; i < order; ++i) {
        std::vector<bool> row(order, false);
        std::vector<bool> col(order, false);
        if (static_cast<int>(entries[i].size()) != order) return false;
        for (int j = 0; j < order; ++j) {
            const int a = entries[i][j];
            const int b = entries[j][i];
            if (a < 0 || a >= order || b < 0 || b >= order || row[a] || col[b]) return false;
            row[a] = col[b] = true;
        }
    }
    return true;
}

bool orthogonal(const LatinSquare& a, const LatinSquare& b) {
    if (a.order != b.order) return false;
    std::vector<bool> seen(static_cast<std::size_t>(a.order * a.order), false);
    for (int i = 0; i < a.order; ++i)
        for (int j = 0; j < a.order; ++j) {
            const auto key = static_cast<std::size_t>(a.entries[i][j] * a.order + b.entries[i][j]);
            if (seen[key]) return false;
            seen[key] = true;
        }
    return true;
}

std::vector<LatinSquare> to_latin(const Multinet& m) {
    if (m.k() != 3 && m.k() != 4) throw PreconditionFailed("Latin squares need 3 or 4 blocks");
    const auto report = verify(m);
    if (report.classification != Verdict::Net) throw PreconditionFailed("Latin squares need a net");

    // rank[b][line index] = position of the line in coefficient-string order
    std::vector<std::vector<int>> rank_of(m.blocks.size());
    for (std::size_t b = 0; b < m.blocks.size(); ++b) {
        const auto& block = m.blocks[b];
        std::vector<std::size_t> order(block.size());
        std::iota(order.begin(), order.end(), 0);
        std::vector<std::string> names;
        for (const auto& bl : block) names.push_back(bl.line.to_string());
        std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return names[x] < names[y]; });
        rank_of[b].resize(block.size());
        for (std::size_t r = 0; r < order.size(); ++r) rank_of[b][order[r]] = static_cast<int>(r);
    }

    const int d = m.d;
    std::vector<LatinSquare> squares(static_cast<std::size_t>(m.k() - 2),
                                     LatinSquare{d, std::vector<std::vector<int>>(d, std::vector<int>(d, -1))});
    for (const auto& ip : incidence_table(m.blocks)) {
        const int i = rank_of[0][ip.lines[0].front()];
        const int j = rank_of[1][ip.lines[1].front()];
        for (std::size_t s = 0; s < squares.size(); ++s) squares[s].entries[i][j] = rank_of[s + 2][ip.lines[s + 2].front()];
    }
    return squares;
}

namespace catalog {

namespace {

LineP2 form(FieldElem a, FieldElem b, FieldElem c) {
    return LineP2({std::move(a), std::move(b), std::move(c)});
}

}  // namespace

Multinet local(Field field, int k) {
    if (k < 3) throw PreconditionFailed("a local multinet needs at least three lines");
    Multinet m{field, 1, {}, "catalog:local"};
    const FieldElem zero = FieldElem::zero(field);
    const FieldElem one = FieldElem::one(field);
    m.blocks.push_back({BlockLine{form(zero, one, zero), 1}});
    for (int t = 0; t < k - 1; ++t)
        m.blocks.push_back({BlockLine{form(one, FieldElem(field, Rational(-t)), zero), 1}});
    m.canonicalize();
    return m;
}

Multinet monomial(Field field, int n) {
    if (n < 1 || field.conductor() % n != 0) throw PreconditionFailed("monomial arrangement needs n dividing N");
    const int step = field.conductor() / n;
    Multinet m{field, 2 * n, {}, "catalog:monomial"};
    const FieldElem zero = FieldElem::zero(field);
    const FieldElem one = FieldElem::one(field);
    // Block for variable v: v^n times the n lines u - ζ_n^a w over the other two.
    for (int v = 0; v < 3; ++v) {
        Block block;
        std::array<FieldElem, 3> axis{zero, zero, zero};
        axis[v] = one;
        block.push_back(BlockLine{LineP2(axis), n});
        const int u = v == 0 ? 1 : 0;
        const int w = v == 2 ? 1 : 2;
        for (int a = 0; a < n; ++a) {
            std::array<FieldElem, 3> c{zero, zero, zero};
            c[u] = one;
            c[w] = -FieldElem::zeta_power(field, static_cast<long long>(a) * step);
            block.push_back(BlockLine{LineP2(c), 1});
        }
        m.blocks.push_back(std::move(block));
    }
    m.canonicalize();
    return m;
}

Multinet hasse(Field field) {
    if (field.conductor() % 3 != 0) throw PreconditionFailed("Hasse configuration needs 3 dividing N");
    const int step = field.conductor() / 3;
    const FieldElem zero = FieldElem::zero(field);
    const FieldElem one = FieldElem::one(field);

    std::vector<LineP2> lines;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            lines.push_back(form(one, FieldElem::zeta_power(field, a * step), FieldElem::zeta_power(field, b * step)));

    HomogeneousPoly xyz(field, 3);
    xyz.coeff(1, 1) = one;
    HomogeneousPoly fermat(field, 3);
    fermat.coeff(3, 0) = one;
    fermat.coeff(0, 3) = one;
    fermat.coeff(0, 0) = one;

    // Triples of lines whose product lies in the pencil; they partition the nine lines.
    std::vector<Block> fibers;
    std::vector<bool> used(lines.size(), false);
    for (std::size_t i = 0; i < lines.size(); ++i)
        for (std::size_t j = i + 1; j < lines.size(); ++j)
            for (std::size_t l = j + 1; l < lines.size(); ++l) {
                if (used[i] || used[j] || used[l]) continue;
                HomogeneousPoly p = HomogeneousPoly::one(field).times_linear(lines[i]).times_linear(lines[j]).times_linear(lines[l]);
                if (rank(Matrix{xyz.coeffs(), fermat.coeffs(), p.coeffs()}) != 2) continue;
                used[i] = used[j] = used[l] = true;
                fibers.push_back({BlockLine{lines[i], 1}, BlockLine{lines[j], 1}, BlockLine{lines[l], 1}});
            }
    if (fibers.size() != 3) throw InternalInconsistency("Hasse pencil did not split into three triangles");

    Multinet m{field, 3, {}, "catalog:hasse"};
    m.blocks.push_back({BlockLine{form(one, zero, zero), 1}, BlockLine{form(zero, one, zero), 1},
                        BlockLine{form(zero, zero, one), 1}});
    for (auto& f : fibers) m.blocks.push_back(std::move(f));
    m.canonicalize();
    return m;
}

}  // namespace catalog

}  // namespace multinet
