#include "simplicial/walks.hpp"

#include "simplicial/adjacency.hpp"
#include "simplicial/errors.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>

namespace simplicial::walks {

namespace {

constexpr std::size_t kUnreached = std::numeric_limits<std::size_t>::max();

void check_level(int p)
{
    if (p < 0) {
        throw ArgumentError("walk level p must be >= 0");
    }
}

/**
 * Breadth-first search over (simplex, flag) states. The flag records whether a level-p step
 * has been taken; it only matters under exact semantics and stays 0 otherwise.
 */
class StateSearch
{
public:
    StateSearch(const NearnessGraph& g, const WalkFilter& filter, SimplexIndex source, bool with_counts,
                std::optional<SimplexIndex> removed = std::nullopt)
        : m_exact(filter.semantics == WalkSemantics::exact)
        , m_source(source)
        , m_dist(2 * g.size(), kUnreached)
        , m_parent(2 * g.size(), kUnreached)
    {
        const Complex& c = g.complex();
        if (with_counts) {
            m_counts.assign(2 * g.size(), 0);
        }
        std::deque<std::size_t> queue;
        const std::size_t start = 2 * source;
        m_dist[start] = 0;
        if (with_counts) {
            m_counts[start] = 1;
        }
        queue.push_back(start);
        while (!queue.empty()) {
            const std::size_t state = queue.front();
            queue.pop_front();
            const SimplexIndex node = state / 2;
            const bool flag = state % 2 != 0;
            for (const Arc& arc : g.arcs(node)) {
                if (arc.level < filter.p || !filter.admits(c, arc.to) || arc.to == removed) {
                    continue;
                }
                const bool next_flag = m_exact && (flag || arc.level == filter.p);
                const std::size_t next = 2 * arc.to + (next_flag ? 1 : 0);
                if (m_dist[next] == kUnreached) {
                    m_dist[next] = m_dist[state] + 1;
                    m_parent[next] = state;
                    queue.push_back(next);
                }
                if (with_counts && m_dist[next] == m_dist[state] + 1) {
                    m_counts[next] += m_counts[state];
                }
            }
        }
    }

    std::size_t target_state(SimplexIndex t) const { return 2 * t + (m_exact ? 1 : 0); }

    WalkLength distance(SimplexIndex t) const
    {
        if (t == m_source) {
            return WalkLength(0);
        }
        const std::size_t d = m_dist[target_state(t)];
        return d == kUnreached ? WalkLength::infinite() : WalkLength(d);
    }

    BigInt count(SimplexIndex t) const
    {
        if (t == m_source) {
            return 1;
        }
        return m_counts[target_state(t)];
    }

    std::vector<SimplexIndex> walk_to(SimplexIndex t) const
    {
        std::vector<SimplexIndex> nodes;
        if (t == m_source) {
            return {t};
        }
        for (std::size_t s = target_state(t); s != kUnreached; s = m_parent[s]) {
            nodes.push_back(s / 2);
        }
        std::reverse(nodes.begin(), nodes.end());
        return nodes;
    }

private:
    bool m_exact;
    SimplexIndex m_source;
    std::vector<std::size_t> m_dist;
    std::vector<std::size_t> m_parent;
    std::vector<BigInt> m_counts;
};

SimplexIndex require_admitted(const NearnessGraph& g, const Simplex& s, const WalkFilter& filter)
{
    const SimplexIndex i = g.complex().index_of(s);
    if (!filter.admits(g.complex(), i)) {
        throw ArgumentError("simplex " + g.complex().name(i) + " is not a node of the level-" +
                            std::to_string(filter.p) + " walk graph");
    }
    return i;
}

/// Union-find classes of admitted nodes joined by steps of level >= p.
std::vector<std::vector<SimplexIndex>> at_least_classes(const NearnessGraph& g, const WalkFilter& filter)
{
    const Complex& c = g.complex();
    std::vector<SimplexIndex> parent(g.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto root = [&](SimplexIndex x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (const Edge& e : g.edges()) {
        if (e.level >= filter.p && filter.admits(c, e.a) && filter.admits(c, e.b)) {
            const SimplexIndex ra = root(e.a);
            const SimplexIndex rb = root(e.b);
            if (ra != rb) {
                parent[std::max(ra, rb)] = std::min(ra, rb);
            }
        }
    }
    std::vector<std::vector<SimplexIndex>> classes;
    std::vector<std::size_t> slot(g.size(), kUnreached);
    for (SimplexIndex i = 0; i < g.size(); ++i) {
        if (!filter.admits(c, i)) {
            continue;
        }
        const SimplexIndex r = root(i);
        if (slot[r] == kUnreached) {
            slot[r] = classes.size();
            classes.emplace_back();
        }
        classes[slot[r]].push_back(i);
    }
    return classes;
}

/// Brandes accumulation for at-least semantics, halved to count unordered pairs.
std::vector<Rational> brandes(const NearnessGraph& g, const WalkFilter& filter)
{
    const Complex& c = g.complex();
    std::vector<Rational> total(g.size(), 0);
    for (SimplexIndex s = 0; s < g.size(); ++s) {
        if (!filter.admits(c, s)) {
            continue;
        }
        const StateSearch search(g, filter, s, true);
        std::vector<SimplexIndex> order;
        for (SimplexIndex v = 0; v < g.size(); ++v) {
            if (filter.admits(c, v) && search.distance(v).is_finite()) {
                order.push_back(v);
            }
        }
        std::stable_sort(order.begin(), order.end(), [&](SimplexIndex x, SimplexIndex y) {
            return search.distance(x) < search.distance(y);
        });
        std::vector<Rational> delta(g.size(), 0);
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            const SimplexIndex w = *it;
            const std::size_t dw = search.distance(w).steps();
            for (const Arc& arc : g.arcs(w)) {
                const SimplexIndex v = arc.to;
                if (arc.level < filter.p || !filter.admits(c, v)) {
                    continue;
                }
                const WalkLength dv = search.distance(v);
                if (dv.is_finite() && dv.steps() + 1 == dw) {
                    delta[v] += Rational(search.count(v), search.count(w)) * (1 + delta[w]);
                }
            }
            if (w != s) {
                total[w] += delta[w];
            }
        }
    }
    for (Rational& r : total) {
        r /= 2;
    }
    return total;
}

/// Exact semantics: walks may revisit simplices, so count pass-through by deleting each candidate.
std::vector<Rational> removal_counts(const NearnessGraph& g, const WalkFilter& filter)
{
    const std::vector<SimplexIndex> nodes = admitted_nodes(g, filter);
    std::vector<Rational> total(g.size(), 0);
    for (std::size_t a = 0; a < nodes.size(); ++a) {
        const SimplexIndex s = nodes[a];
        const StateSearch full(g, filter, s, true);
        for (SimplexIndex k : nodes) {
            if (k == s) {
                continue;
            }
            const StateSearch without(g, filter, s, true, k);
            for (std::size_t b = a + 1; b < nodes.size(); ++b) {
                const SimplexIndex t = nodes[b];
                const WalkLength d = full.distance(t);
                if (t == k || d.is_infinite()) {
                    continue;
                }
                const BigInt avoiding = without.distance(t) == d ? without.count(t) : BigInt(0);
                const BigInt through = full.count(t) - avoiding;
                if (through != 0) {
                    total[k] += Rational(through, full.count(t));
                }
            }
        }
    }
    return total;
}

} // namespace

NearnessGraph::NearnessGraph(const Complex& c)
    : m_complex(&c)
    , m_arcs(c.size())
{
    std::vector<std::vector<SimplexIndex>> star(c.vertices().size());
    for (SimplexIndex i = 0; i < c.size(); ++i) {
        for (VertexId v : c.simplex(i).vertices()) {
            star[v].push_back(i);
        }
    }
    std::vector<SimplexIndex> seen(c.size(), kUnreached);
    for (SimplexIndex i = 0; i < c.size(); ++i) {
        const Simplex& s = c.simplex(i);
        for (VertexId v : s.vertices()) {
            for (SimplexIndex j : star[v]) {
                if (j <= i || seen[j] == i) {
                    continue;
                }
                seen[j] = i;
                const Simplex& t = c.simplex(j);
                if (c.contains(union_of(s, t))) {
                    continue;
                }
                const int p = static_cast<int>(intersection_size(s, t)) - 1;
                if (adjacency::maximal_p_adjacent(c, t, s, p) || adjacency::maximal_p_adjacent(c, s, t, p)) {
                    m_edges.push_back({i, j, p});
                }
            }
        }
    }
    // Vertex pairs follow the graph convention: joined when they span an edge.
    if (c.dim() >= 1) {
        for (const Simplex& e : c.simplices(1)) {
            m_edges.push_back({c.index_of(Simplex::from_sorted({e[0]})), c.index_of(Simplex::from_sorted({e[1]})), 0});
        }
    }
    std::sort(m_edges.begin(), m_edges.end(),
              [](const Edge& x, const Edge& y) { return std::tie(x.a, x.b) < std::tie(y.a, y.b); });
    for (const Edge& e : m_edges) {
        m_arcs[e.a].push_back({e.b, e.level});
        m_arcs[e.b].push_back({e.a, e.level});
    }
    for (auto& arcs : m_arcs) {
        std::sort(arcs.begin(), arcs.end(), [](const Arc& x, const Arc& y) { return x.to < y.to; });
    }
}

std::optional<int> NearnessGraph::level(SimplexIndex a, SimplexIndex b) const
{
    for (const Arc& arc : m_arcs.at(a)) {
        if (arc.to == b) {
            return arc.level;
        }
    }
    return std::nullopt;
}

bool WalkFilter::admits(const Complex& c, SimplexIndex i) const
{
    const int d = c.dim_of(i);
    return d >= p && (!only_dim || d == *only_dim);
}

std::vector<SimplexIndex> admitted_nodes(const NearnessGraph& g, const WalkFilter& filter)
{
    check_level(filter.p);
    std::vector<SimplexIndex> out;
    for (SimplexIndex i = 0; i < g.size(); ++i) {
        if (filter.admits(g.complex(), i)) {
            out.push_back(i);
        }
    }
    return out;
}

WalkLength p_distance(const NearnessGraph& g, const Simplex& a, const Simplex& b, const WalkFilter& filter)
{
    check_level(filter.p);
    const SimplexIndex ia = require_admitted(g, a, filter);
    const SimplexIndex ib = require_admitted(g, b, filter);
    return StateSearch(g, filter, ia, false).distance(ib);
}

std::optional<std::vector<SimplexIndex>> witness_walk(const NearnessGraph& g, SimplexIndex a, SimplexIndex b,
                                                      const WalkFilter& filter)
{
    check_level(filter.p);
    const StateSearch search(g, filter, a, false);
    if (search.distance(b).is_infinite()) {
        return std::nullopt;
    }
    return search.walk_to(b);
}

DistanceRow geodesic_counts(const NearnessGraph& g, SimplexIndex source, const WalkFilter& filter)
{
    check_level(filter.p);
    require_admitted(g, g.complex().simplex(source), filter);
    const StateSearch search(g, filter, source, true);
    DistanceRow row;
    row.source = source;
    row.dist.reserve(g.size());
    row.counts.reserve(g.size());
    for (SimplexIndex t = 0; t < g.size(); ++t) {
        if (filter.admits(g.complex(), t)) {
            row.dist.push_back(search.distance(t));
            row.counts.push_back(row.dist.back().is_finite() ? search.count(t) : BigInt(0));
        } else {
            row.dist.push_back(WalkLength::infinite());
            row.counts.push_back(0);
        }
    }
    return row;
}

std::vector<std::size_t> ComponentPartition::class_sizes() const
{
    std::vector<std::size_t> sizes;
    for (const auto& cls : classes) {
        sizes.push_back(cls.size());
    }
    return sizes;
}

std::optional<std::size_t> ComponentPartition::class_of(SimplexIndex i) const
{
    for (std::size_t k = 0; k < classes.size(); ++k) {
        if (std::binary_search(classes[k].begin(), classes[k].end(), i)) {
            return k;
        }
    }
    return std::nullopt;
}

ComponentPartition components(const NearnessGraph& g, const WalkFilter& filter)
{
    check_level(filter.p);
    ComponentPartition out;
    out.p = filter.p;
    out.semantics = filter.semantics;
    auto classes = at_least_classes(g, filter);
    if (filter.semantics == WalkSemantics::at_least) {
        out.classes = std::move(classes);
        return out;
    }
    const Complex& c = g.complex();
    std::vector<std::size_t> class_of(g.size(), kUnreached);
    for (std::size_t k = 0; k < classes.size(); ++k) {
        for (SimplexIndex i : classes[k]) {
            class_of[i] = k;
        }
    }
    std::vector<bool> has_exact_step(classes.size(), false);
    for (const Edge& e : g.edges()) {
        if (e.level == filter.p && filter.admits(c, e.a) && filter.admits(c, e.b)) {
            has_exact_step[class_of[e.a]] = true;
        }
    }
    for (std::size_t k = 0; k < classes.size(); ++k) {
        if (has_exact_step[k]) {
            out.classes.push_back(classes[k]);
        } else {
            for (SimplexIndex i : classes[k]) {
                out.classes.push_back({i});
            }
        }
    }
    std::sort(out.classes.begin(), out.classes.end(),
              [](const auto& x, const auto& y) { return x.front() < y.front(); });
    return out;
}

std::vector<std::size_t> q_star_vector(const NearnessGraph& g, WalkSemantics semantics)
{
    std::vector<std::size_t> out;
    for (int p = 0; p <= g.complex().dim(); ++p) {
        out.push_back(components(g, WalkFilter{p, semantics, std::nullopt}).q_star());
    }
    return out;
}

Eccentricities eccentricity_diameter(const NearnessGraph& g, const WalkFilter& filter, bool within_component)
{
    Eccentricities out;
    out.nodes = admitted_nodes(g, filter);
    out.diameter = WalkLength(0);
    std::optional<ComponentPartition> partition;
    if (within_component) {
        partition = components(g, filter);
    }
    for (SimplexIndex s : out.nodes) {
        const StateSearch search(g, filter, s, false);
        WalkLength worst(0);
        auto consider = [&](SimplexIndex t) { worst = std::max(worst, search.distance(t)); };
        if (partition) {
            for (SimplexIndex t : partition->classes[*partition->class_of(s)]) {
                consider(t);
            }
        } else {
            for (SimplexIndex t : out.nodes) {
                consider(t);
            }
        }
        out.values.push_back(worst);
        out.diameter = std::max(out.diameter, worst);
    }
    return out;
}

Rational average_walk_length(const NearnessGraph& g, const WalkFilter& filter, std::span<const SimplexIndex> component)
{
    check_level(filter.p);
    const std::size_t n = component.size();
    if (n < 2) {
        throw UndefinedResultError("average walk length needs a class with at least two simplices");
    }
    BigInt sum = 0;
    for (std::size_t a = 0; a < n; ++a) {
        const StateSearch search(g, filter, component[a], false);
        for (std::size_t b = a + 1; b < n; ++b) {
            const WalkLength d = search.distance(component[b]);
            if (d.is_infinite()) {
                throw UndefinedResultError("average walk length over simplices that are not joined by a walk");
            }
            sum += d.steps();
        }
    }
    return Rational(2 * sum, BigInt(n) * (n - 1));
}

std::vector<Rational> pass_through(const NearnessGraph& g, const WalkFilter& filter)
{
    check_level(filter.p);
    if (filter.semantics == WalkSemantics::at_least) {
        return brandes(g, filter);
    }
    return removal_counts(g, filter);
}

} // namespace simplicial::walks
