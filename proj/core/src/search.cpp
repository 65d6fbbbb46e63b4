#include "multinet/search.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <thread>

#include "multinet/errors.hpp"
#include "multinet/modular.hpp"

namespace multinet {

Strategy parse_strategy(const std::string& name) {
    if (name == "unit-triples") return Strategy::UnitTriples;
    if (name == "random-rational") return Strategy::RandomRational;
    if (name == "file-list") return Strategy::FileList;
    throw PreconditionFailed("unknown strategy '" + name + "'");
}

std::string to_string(Strategy s) {
    switch (s) {
        case Strategy::UnitTriples: return "unit-triples";
        case Strategy::RandomRational: return "random-rational";
        case Strategy::FileList: return "file-list";
    }
    return "unknown";
}

namespace {

struct Candidate {
    int count;
    PlaneP3 plane;
};

// Best first: more double points, then canonical plane order.
bool better(const Candidate& a, const Candidate& b) {
    if (a.count != b.count) return a.count > b.count;
    return a.plane < b.plane;
}

class TopList {
public:
    explicit TopList(std::size_t capacity) : cap_(capacity) {}

    void offer(Candidate c) {
        if (cap_ == 0) return;
        items_.push_back(std::move(c));
        std::sort(items_.begin(), items_.end(), better);
        items_.erase(std::unique(items_.begin(), items_.end(),
                                 [](const Candidate& a, const Candidate& b) { return a.plane == b.plane; }),
                     items_.end());
        if (items_.size() > cap_) items_.pop_back();
    }
    /// Smallest count that can still enter the list.
    int threshold(int floor) const {
        if (items_.size() < cap_) return floor;
        return std::max(floor, items_.back().count);
    }
    std::vector<Candidate>& items() { return items_; }

private:
    std::size_t cap_;
    std::vector<Candidate> items_;
};

struct Screen {
    bool admissible = false;
    int double_points = 0;
    std::vector<UnitPoint> unit_points;
};

Screen screen(const PlaneP3& h, const QnArrangement& qn, const SearchConfig& cfg) {
    Screen s;
    const auto report = position_report(h, qn);
    s.unit_points = report.unit_points;
    if (report.in_qn()) return s;
    const bool heavy = !report.base_lines.empty() || !report.sameblock_lines.empty();
    if (cfg.require_light && heavy) return s;
    if (cfg.forbid_fixed && !report.crossblock_lines.empty()) return s;
    if (cfg.forbid_mult_n_points && !report.coordinate_points.empty()) return s;
    int on_fixed = 0;
    for (const auto& u : report.unit_points) {
        const PointP3 p = qn.unit_point(u);
        for (const auto& c : report.crossblock_lines)
            if (c.line.contains(p)) {
                ++on_fixed;
                break;
            }
    }
    s.double_points = static_cast<int>(report.unit_points.size()) - on_fixed;
    s.admissible = true;
    return s;
}

struct WorkerResult {
    std::vector<Candidate> top;
    std::size_t candidates = 0;
    std::size_t sectioned = 0;
};

// Scans pairs (i, j), 0 < i < j < n^3, with flat index in [begin, end).
WorkerResult scan_unit_pairs(const QnArrangement& qn, const SearchConfig& cfg, std::size_t begin, std::size_t end,
                             const std::vector<std::pair<int, int>>& pairs) {
    const int n = qn.n();
    const int total = n * n * n;
    const ModularImage mod(qn.field());
    const std::uint64_t p = mod.prime();
    std::vector<std::uint64_t> zeta(static_cast<std::size_t>(n));
    for (int e = 0; e < n; ++e) zeta[static_cast<std::size_t>(e)] = mod.zeta_power(static_cast<long long>(e) * (qn.field().conductor() / n));
    auto coords = [&](int idx) {
        return std::array<std::uint64_t, 4>{zeta[static_cast<std::size_t>(idx / (n * n))],
                                            zeta[static_cast<std::size_t>((idx / n) % n)],
                                            zeta[static_cast<std::size_t>(idx % n)], 1};
    };
    auto det3 = [&](const std::array<std::uint64_t, 3>& a, const std::array<std::uint64_t, 3>& b,
                    const std::array<std::uint64_t, 3>& c) {
        auto term = [&](std::uint64_t x, std::uint64_t y1, std::uint64_t y2, std::uint64_t z1, std::uint64_t z2) {
            return mod.mul(x, mod.sub(mod.mul(y1, z2), mod.mul(y2, z1)));
        };
        return mod.add(mod.sub(term(a[0], b[1], b[2], c[1], c[2]), term(a[1], b[0], b[2], c[0], c[2])),
                       term(a[2], b[0], b[1], c[0], c[1]));
    };
    auto modular_count = [&](const std::array<std::uint64_t, 4>& h) {
        std::vector<std::uint64_t> rhs;
        for (int c = 0; c < n; ++c) rhs.push_back(mod.neg(mod.add(mod.mul(h[2], zeta[static_cast<std::size_t>(c)]), h[3])));
        std::sort(rhs.begin(), rhs.end());
        int count = 0;
        for (int a = 0; a < n; ++a) {
            const std::uint64_t x = mod.mul(h[0], zeta[static_cast<std::size_t>(a)]);
            for (int b = 0; b < n; ++b) {
                const std::uint64_t s = mod.add(x, mod.mul(h[1], zeta[static_cast<std::size_t>(b)]));
                auto [lo, hi] = std::equal_range(rhs.begin(), rhs.end(), s);
                count += static_cast<int>(hi - lo);
            }
        }
        return count;
    };

    WorkerResult out;
    TopList top(cfg.top);
    std::vector<bool> done(static_cast<std::size_t>(total) * static_cast<std::size_t>(total), false);
    const std::array<std::uint64_t, 4> p0{1, 1, 1, 1};
    (void)p;

    for (std::size_t idx = begin; idx < end; ++idx) {
        const auto [i, j] = pairs[idx];
        ++out.candidates;
        if (done[static_cast<std::size_t>(i) * total + j]) continue;
        const auto pi = coords(i);
        const auto pj = coords(j);
        std::array<std::uint64_t, 4> h{};
        for (int col = 0; col < 4; ++col) {
            std::array<std::uint64_t, 3> r0{}, r1{}, r2{};
            for (int c = 0, m = 0; c < 4; ++c) {
                if (c == col) continue;
                r0[m] = p0[c];
                r1[m] = pi[c];
                r2[m] = pj[c];
                ++m;
            }
            const std::uint64_t d = det3(r0, r1, r2);
            h[col] = col % 2 == 0 ? d : mod.neg(d);
        }
        const bool vanishes = h[0] == 0 && h[1] == 0 && h[2] == 0 && h[3] == 0;
        if (!vanishes && modular_count(h) < top.threshold(cfg.min_count)) continue;

        std::optional<PlaneP3> plane;
        try {
            plane = plane_through(qn.unit_point({0, 0, 0}), qn.unit_point({i / (n * n), (i / n) % n, i % n}),
                                  qn.unit_point({j / (n * n), (j / n) % n, j % n}));
        } catch (const DegenerateInput&) {
            continue;  // collinear with [1:1:1:1]
        }
        ++out.sectioned;
        const Screen s = screen(*plane, qn, cfg);
        std::vector<int> members;
        for (const auto& u : s.unit_points) members.push_back(u[0] * n * n + u[1] * n + u[2]);
        for (int a : members)
            for (int b : members) done[static_cast<std::size_t>(a) * total + b] = true;
        if (s.admissible && s.double_points >= cfg.min_count) top.offer(Candidate{s.double_points, std::move(*plane)});
    }
    out.top = std::move(top.items());
    return out;
}

std::vector<PlaneP3> random_planes(const QnArrangement& qn, const SearchConfig& cfg) {
    std::mt19937_64 rng(cfg.seed);
    std::uniform_int_distribution<long long> coef(-16, 16);
    std::vector<PlaneP3> out;
    for (std::size_t t = 0; t < cfg.budget; ++t) {
        std::array<long long, 4> v{coef(rng), coef(rng), coef(rng), coef(rng)};
        if (v == std::array<long long, 4>{0, 0, 0, 0}) v[0] = 1;
        out.push_back(PlaneP3::from_integers(qn.field(), v));
    }
    return out;
}

WorkerResult scan_planes(const QnArrangement& qn, const SearchConfig& cfg, const std::vector<PlaneP3>& planes,
                         std::size_t begin, std::size_t end) {
    WorkerResult out;
    TopList top(cfg.top);
    for (std::size_t i = begin; i < end; ++i) {
        ++out.candidates;
        ++out.sectioned;
        const Screen s = screen(planes[i], qn, cfg);
        if (s.admissible && s.double_points >= cfg.min_count) top.offer(Candidate{s.double_points, planes[i]});
    }
    out.top = std::move(top.items());
    return out;
}

template <class Scan>
std::vector<WorkerResult> run_parallel(std::size_t total, int threads, Scan scan) {
    const auto workers = static_cast<std::size_t>(std::max(1, threads));
    std::vector<WorkerResult> results(workers);
    std::vector<std::thread> pool;
    const std::size_t chunk = (total + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t begin = std::min(total, w * chunk);
        const std::size_t end = std::min(total, begin + chunk);
        if (workers == 1) {
            results[w] = scan(begin, end);
        } else {
            pool.emplace_back([&, w, begin, end] { results[w] = scan(begin, end); });
        }
    }
    for (auto& t : pool) t.join();
    return results;
}

}  // namespace

SearchOutcome run_search(const SearchConfig& cfg, const QnArrangement& qn) {
    if (cfg.budget == 0) throw PreconditionFailed("budget must be at least 1");
    SearchOutcome out;
    const int n = qn.n();
    if (n <= 3) out.notes.push_back("n <= 3: profile validator disabled, multiplicity classes collide");

    std::vector<WorkerResult> parts;
    if (cfg.strategy == Strategy::UnitTriples) {
        const int total = n * n * n;
        std::vector<std::pair<int, int>> pairs;
        for (int i = 1; i < total; ++i)
            for (int j = i + 1; j < total; ++j) pairs.emplace_back(i, j);
        const std::size_t limit = std::min(cfg.budget, pairs.size());
        out.exhausted = limit == pairs.size();
        parts = run_parallel(limit, cfg.threads,
                             [&](std::size_t b, std::size_t e) { return scan_unit_pairs(qn, cfg, b, e, pairs); });
    } else {
        std::vector<PlaneP3> planes = cfg.strategy == Strategy::RandomRational ? random_planes(qn, cfg) : cfg.planes;
        if (cfg.strategy == Strategy::FileList && planes.size() > cfg.budget) planes.erase(planes.begin() + static_cast<std::ptrdiff_t>(cfg.budget), planes.end());
        out.exhausted = cfg.strategy == Strategy::FileList && planes.size() == cfg.planes.size();
        parts = run_parallel(planes.size(), cfg.threads,
                             [&](std::size_t b, std::size_t e) { return scan_planes(qn, cfg, planes, b, e); });
    }

    TopList merged(cfg.top);
    for (auto& part : parts) {
        out.candidates += part.candidates;
        out.sectioned += part.sectioned;
        for (auto& c : part.top) merged.offer(std::move(c));
    }

    for (auto& c : merged.items()) {
        auto im = restrict_to_plane(qn, c.plane);
        SearchResult r{c.plane, c.count, classify_induced(im)};
        if (!r.report.verification.ok())
            throw InternalInconsistency("search result fails verification: " + c.plane.to_string());
        if (cfg.require_light && r.report.verdict != Verdict::LightProper) {
            out.notes.push_back("dropped " + c.plane.to_string() + ": not light after sectioning");
            continue;
        }
        out.results.push_back(std::move(r));
    }
    return out;
}

PlaneP3 example46_plane(Field field) { return PlaneP3({parse_elem("1", field), parse_elem("-(z+1)", field), parse_elem("-z^3", field), parse_elem("z^3+z", field)}); }

std::vector<UnitPoint> example46_points() {
    return {{0, 0, 0}, {2, 1, 0}, {2, 2, 6}, {4, 3, 6}, {5, 2, 3}, {5, 3, 5}, {7, 0, 1}, {7, 1, 3}};
}

SearchResult reproduce_example_46(const QnArrangement& qn) {
    if (qn.n() != 8 || qn.field().conductor() != 8) throw PreconditionFailed("the example lives in Q_8 over Q(ζ_8)");
    auto require = [](bool ok, const std::string& what) {
        if (!ok) throw ConditionViolation("example 8-point plane: " + what);
    };
    const PlaneP3 h = example46_plane(qn.field());
    const auto im = restrict_to_plane(qn, h);
    const auto report = classify_induced(im);
    require(report.verification.ok(), "verification fails");
    require(report.verdict == Verdict::LightProper, "not light");
    require(im.fixed_components.empty(), "has fixed components");

    std::vector<PointP3> expected;
    for (const auto& u : example46_points()) expected.push_back(qn.unit_point(u));
    std::sort(expected.begin(), expected.end());
    const Census census = double_point_census(h, qn);
    require(census.agrees, "census disagrees with the base locus");
    require(census.points == expected, "double points differ from the table");
    require(report.point_histogram == std::map<int, int>{{1, 224}, {2, 8}}, "other points are not all simple");

    // [ζ^2:ζ:1:1] lies on x0 - ζx1, x0 - ζ^2x2, x0 - ζ^2x3, x2 - x3, x1 - ζx3, x1 - ζx2 and no other plane.
    const PointP3 p = qn.unit_point({2, 1, 0});
    std::set<std::size_t> through;
    for (std::size_t i = 0; i < qn.planes().size(); ++i)
        if (incident(qn.planes()[i].plane, p)) through.insert(i);
    const std::set<std::size_t> printed{qn.plane_index(0, 0, 1), qn.plane_index(1, 0, 2), qn.plane_index(2, 0, 2),
                                        qn.plane_index(0, 1, 0), qn.plane_index(1, 1, 1), qn.plane_index(2, 1, 1)};
    require(through == printed, "[z^2:z:1:1] is not on exactly the six listed planes");
    return SearchResult{h, static_cast<int>(census.points.size()), report};
}

}  // namespace multinet
