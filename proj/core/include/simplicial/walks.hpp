#pragma once

#include "simplicial/complex.hpp"
#include "simplicial/rational.hpp"
#include "simplicial/walk_types.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

/// Maximal p-nearness graph and the walk, distance and connectivity notions built on it.
namespace simplicial::walks {

struct Arc
{
    SimplexIndex to;
    int level;
};

struct Edge
{
    SimplexIndex a;  ///< a < b
    SimplexIndex b;
    int level;
};

/**
 * Undirected graph on all simplices of a complex.
 *
 * Two simplices are joined at level p when one is maximal p-adjacent to the other (either
 * direction). Two vertices spanning an edge of the complex are joined at level 0.
 */
class NearnessGraph
{
public:
    explicit NearnessGraph(const Complex& c);

    const Complex& complex() const noexcept { return *m_complex; }
    std::size_t size() const noexcept { return m_arcs.size(); }
    std::span<const Arc> arcs(SimplexIndex i) const { return m_arcs.at(i); }
    /// Sorted by (a, b).
    const std::vector<Edge>& edges() const noexcept { return m_edges; }
    std::optional<int> level(SimplexIndex a, SimplexIndex b) const;

private:
    const Complex* m_complex;
    std::vector<std::vector<Arc>> m_arcs;
    std::vector<Edge> m_edges;
};

/**
 * Which nodes and steps a p-walk may use.
 *
 * Nodes are the simplices of dimension >= p, optionally narrowed to one dimension; steps are
 * edges of level >= p between admitted nodes. Under exact semantics a walk must also take at
 * least one step of level exactly p.
 */
struct WalkFilter
{
    int p = 0;
    WalkSemantics semantics = WalkSemantics::at_least;
    std::optional<int> only_dim;

    bool admits(const Complex& c, SimplexIndex i) const;
};

/// Admitted simplices in global order. Throws ArgumentError when p < 0.
std::vector<SimplexIndex> admitted_nodes(const NearnessGraph& g, const WalkFilter& filter);

/// Throws ArgumentError when either endpoint is not admitted by the filter.
WalkLength p_distance(const NearnessGraph& g, const Simplex& a, const Simplex& b, const WalkFilter& filter);

/// Shortest walk from `a` to `b` as a node sequence (both ends included), if one exists.
std::optional<std::vector<SimplexIndex>> witness_walk(const NearnessGraph& g, SimplexIndex a, SimplexIndex b,
                                                      const WalkFilter& filter);

struct DistanceRow
{
    SimplexIndex source = 0;
    /// Indexed by global simplex index; infinite for unreachable or non-admitted simplices.
    std::vector<WalkLength> dist;
    /// Number of shortest walks to each simplex; 0 where unreachable, 1 at the source.
    std::vector<BigInt> counts;
};

DistanceRow geodesic_counts(const NearnessGraph& g, SimplexIndex source, const WalkFilter& filter);

struct ComponentPartition
{
    int p = 0;
    WalkSemantics semantics = WalkSemantics::at_least;
    /// Each class sorted; classes ordered by their smallest member.
    std::vector<std::vector<SimplexIndex>> classes;

    std::size_t q_star() const noexcept { return classes.size(); }
    std::vector<std::size_t> class_sizes() const;
    /// Class number of simplex i, or nullopt when it is not admitted.
    std::optional<std::size_t> class_of(SimplexIndex i) const;
};

/**
 * Classes of the relation "joined by a p-walk".
 *
 * Under exact semantics a class of the at-least relation survives only if it contains a
 * level-p step; otherwise each of its members is its own class.
 */
ComponentPartition components(const NearnessGraph& g, const WalkFilter& filter);

/// Q*_p for p = 0 .. dim K (index p).
std::vector<std::size_t> q_star_vector(const NearnessGraph& g, WalkSemantics semantics = WalkSemantics::at_least);

struct Eccentricities
{
    std::vector<SimplexIndex> nodes;
    std::vector<WalkLength> values;  ///< parallel to nodes
    WalkLength diameter;
};

/**
 * p-eccentricity of every admitted simplex and the p-diameter.
 *
 * Targets range over all admitted simplices, or over the source's own class when
 * `within_component` is set.
 */
Eccentricities eccentricity_diameter(const NearnessGraph& g, const WalkFilter& filter, bool within_component = false);

/// 2 * sum of pairwise distances / (n (n-1)) over one class. Throws UndefinedResultError for n < 2.
Rational average_walk_length(const NearnessGraph& g, const WalkFilter& filter, std::span<const SimplexIndex> component);

/**
 * Unnormalised betweenness of every admitted simplex: sum over unordered pairs {i, j} not
 * containing it of (shortest walks through it) / (shortest walks). Indexed by global index.
 */
std::vector<Rational> pass_through(const NearnessGraph& g, const WalkFilter& filter);

} // namespace simplicial::walks
