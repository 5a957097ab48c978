#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <string>

#include "fluxnet/errors.hpp"
#include "fluxnet/io.hpp"

namespace fluxnet {

namespace {

// splitmix64; used instead of <random> distributions so that identical
// seeds give identical files on any standard library.
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        state += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    int pick(int count) { return static_cast<int>(next() % static_cast<std::uint64_t>(count)); }
};

double distance(const NodePosition& a, const NodePosition& b) {
    return std::hypot(a.x - b.x, a.y - b.y);
}

std::vector<std::string> numeric_ids(std::size_t n) {
    std::vector<std::string> ids(n);
    for (std::size_t i = 0; i < n; ++i) ids[i] = std::to_string(i);
    return ids;
}

ParsedNetwork generate_grid(const SyntheticParams& p, Rng& rng) {
    if (p.rows < 2 || p.cols < 2) throw ValidationError("grid: rows and cols must be >= 2");
    const int rows = p.rows;
    const int cols = p.cols;

    std::vector<std::optional<NodePosition>> pos;
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            pos.push_back(NodePosition{static_cast<double>(c), static_cast<double>(r)});

    auto at = [cols](int r, int c) { return static_cast<NodeIndex>(r * cols + c); };

    std::vector<Edge> edges;
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            if (c + 1 < cols)
                edges.push_back({at(r, c), at(r, c + 1), 1.0, rng.uniform(p.k_min, p.k_max)});
            if (r + 1 < rows)
                edges.push_back({at(r, c), at(r + 1, c), 1.0, rng.uniform(p.k_min, p.k_max)});
        }
    }
    for (Edge& e : edges) e.area = e.conductivity;

    ParsedNetwork out;
    out.net = Network(static_cast<std::size_t>(rows) * cols, std::move(edges), std::move(pos));
    out.node_ids = numeric_ids(out.net.node_count());
    for (int r = 0; r < rows; ++r) {
        out.boundary.inflow.push_back(at(r, 0));
        out.boundary.outflow.push_back(at(r, cols - 1));
    }
    return out;
}

ParsedNetwork generate_radial(const SyntheticParams& p, Rng& rng) {
    if (p.rings < 2 || p.spokes < 2)
        throw ValidationError("radial: rings and spokes must be >= 2");
    const int rings = p.rings;
    const int spokes = p.spokes;

    std::vector<std::optional<NodePosition>> pos;
    for (int r = 0; r < rings; ++r) {
        const double radius = 1.0 + r;
        for (int s = 0; s < spokes; ++s) {
            const double angle = 2.0 * std::numbers::pi * s / spokes;
            pos.push_back(NodePosition{radius * std::cos(angle), radius * std::sin(angle)});
        }
    }

    auto at = [spokes](int r, int s) { return static_cast<NodeIndex>(r * spokes + s); };
    auto pos_of = [&](NodeIndex v) { return *pos[static_cast<std::size_t>(v)]; };

    std::vector<Edge> edges;
    for (int r = 0; r < rings; ++r) {
        for (int s = 0; s < spokes; ++s) {
            // ring edge
            const NodeIndex a = at(r, s);
            const NodeIndex b = at(r, (s + 1) % spokes);
            edges.push_back({a, b, distance(pos_of(a), pos_of(b)),
                             rng.uniform(p.k_min, p.k_max)});
            // spoke edge outward
            if (r + 1 < rings) {
                const NodeIndex c = at(r + 1, s);
                edges.push_back({a, c, distance(pos_of(a), pos_of(c)),
                                 rng.uniform(p.k_min, p.k_max)});
            }
        }
    }
    for (Edge& e : edges) e.area = e.conductivity;

    ParsedNetwork out;
    out.net = Network(static_cast<std::size_t>(rings) * spokes, std::move(edges), std::move(pos));
    out.node_ids = numeric_ids(out.net.node_count());
    for (int s = 0; s < spokes; ++s) {
        out.boundary.inflow.push_back(at(0, s));
        out.boundary.outflow.push_back(at(rings - 1, s));
    }
    return out;
}

ParsedNetwork generate_multi_component(const SyntheticParams& p, Rng& rng) {
    if (p.components < 1) throw ValidationError("multi_component: component count must be >= 1");
    if (p.target_nodes < 6 * p.components)
        throw ValidationError("multi_component: need at least 6 nodes per component");

    // Component sizes of varying scale.
    std::vector<double> weight(static_cast<std::size_t>(p.components));
    double total_weight = 0.0;
    for (double& w : weight) {
        w = 0.4 + 1.6 * rng.uniform();
        total_weight += w;
    }
    std::vector<int> size(weight.size());
    for (std::size_t i = 0; i < weight.size(); ++i)
        size[i] = std::max(6, static_cast<int>(std::lround(p.target_nodes * weight[i] / total_weight)));

    std::vector<std::optional<NodePosition>> pos;
    std::vector<Edge> edges;
    ParsedNetwork out;

    for (std::size_t comp = 0; comp < size.size(); ++comp) {
        const int n = size[comp];
        const int base = static_cast<int>(pos.size());
        const double offset_x = 100.0 * static_cast<double>(comp);
        const double extent = 10.0 * std::sqrt(static_cast<double>(n) / 6.0);
        const double k_scale = 0.5 + 1.5 * rng.uniform();  // widths vary across components

        std::vector<NodePosition> pts;
        while (static_cast<int>(pts.size()) < n) {
            NodePosition cand{offset_x + extent * rng.uniform(), extent * rng.uniform()};
            bool ok = true;
            for (const NodePosition& q : pts)
                if (distance(cand, q) < 1e-3) {
                    ok = false;
                    break;
                }
            if (ok) pts.push_back(cand);
        }
        for (const NodePosition& q : pts) pos.push_back(q);

        std::set<std::pair<int, int>> used;
        auto add_edge = [&](int a, int b) {
            const auto key = std::minmax(a, b);
            if (!used.insert(key).second) return;
            edges.push_back({static_cast<NodeIndex>(base + a), static_cast<NodeIndex>(base + b),
                             distance(pts[static_cast<std::size_t>(a)],
                                      pts[static_cast<std::size_t>(b)]),
                             k_scale * rng.uniform(p.k_min, p.k_max)});
        };

        // Spanning tree: each node joins its nearest earlier node.
        for (int i = 1; i < n; ++i) {
            int best = 0;
            double best_d = distance(pts[static_cast<std::size_t>(i)], pts[0]);
            for (int j = 1; j < i; ++j) {
                const double d = distance(pts[static_cast<std::size_t>(i)],
                                          pts[static_cast<std::size_t>(j)]);
                if (d < best_d) {
                    best_d = d;
                    best = j;
                }
            }
            add_edge(best, i);
        }
        // Extra local links for planar-ish cycles.
        for (int i = 0; i < n; ++i) {
            if (rng.uniform() > 0.45) continue;
            int best = -1;
            double best_d = 0.0;
            for (int j = 0; j < n; ++j) {
                if (j == i || used.count(std::minmax(i, j))) continue;
                const double d = distance(pts[static_cast<std::size_t>(i)],
                                          pts[static_cast<std::size_t>(j)]);
                if (best < 0 || d < best_d) {
                    best_d = d;
                    best = j;
                }
            }
            if (best >= 0) add_edge(i, best);
        }

        // Boundary picks: westmost nodes feed in, eastmost drain out.
        std::vector<int> order(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            const auto& pa = pts[static_cast<std::size_t>(a)];
            const auto& pb = pts[static_cast<std::size_t>(b)];
            return pa.x != pb.x ? pa.x < pb.x : a < b;
        });
        const int picks = std::max(1, n / 8);
        for (int i = 0; i < picks; ++i)
            out.boundary.inflow.push_back(static_cast<NodeIndex>(base + order[static_cast<std::size_t>(i)]));
        for (int i = 0; i < picks; ++i)
            out.boundary.outflow.push_back(
                static_cast<NodeIndex>(base + order[static_cast<std::size_t>(n - 1 - i)]));
    }

    for (Edge& e : edges) e.area = e.conductivity;
    std::sort(out.boundary.inflow.begin(), out.boundary.inflow.end());
    std::sort(out.boundary.outflow.begin(), out.boundary.outflow.end());

    out.net = Network(pos.size(), std::move(edges), std::move(pos));
    out.node_ids = numeric_ids(out.net.node_count());
    return out;
}

}  // namespace

ParsedNetwork generate_synthetic(SyntheticKind kind, const SyntheticParams& params,
                                 std::uint64_t seed) {
    Rng rng(seed);
    switch (kind) {
        case SyntheticKind::Grid: return generate_grid(params, rng);
        case SyntheticKind::Radial: return generate_radial(params, rng);
        case SyntheticKind::MultiComponent: return generate_multi_component(params, rng);
    }
    throw ValidationError("unknown synthetic network kind");
}

}  // namespace fluxnet
