#pragma once

#include "simplicial/complex.hpp"
#include "simplicial/report.hpp"
#include "simplicial/walks.hpp"

#include <optional>
#include <utility>
#include <vector>

/**
 * Degree, spectral, walk-based and clustering centralities of simplices.
 *
 * Normalised ratios follow one zero-denominator rule: a zero numerator over a non-positive
 * denominator reports 0 with the "zero_denominator" flag; a positive numerator over a
 * non-positive denominator throws UndefinedResultError.
 */
namespace simplicial::centrality {

/// deg^{h,h}_U(v) / C(f_0 - 1, h); strict uses the strict step degree. Requires 1 <= h <= dim K.
Value vertex_upper_degree_centrality(const Complex& c, const Simplex& v, int h, bool strict);

/// deg^{h,q+h}_U / C(f_0 - (q+1), q+h). Values above 1 carry the "out_of_range" flag. Requires h >= 1.
Value upper_degree_centrality(const Complex& c, const Simplex& s, int h, bool strict);

/// deg^p_A (or deg^{p*}_A) / (C(q+1, p+1) (sum_{q'=p+1}^{dim K} C(f_0-(p+1), q') - 1)). Requires 0 <= p < q.
Value adjacency_degree_centrality(const Complex& c, const Simplex& s, int p, bool maximal);

/// deg^*(s) / (sum_i f_i - 1).
Value maximal_simplicial_degree_centrality(const Complex& c, const Simplex& s);

enum class AverageKind {
    strict_upper,       ///< sum deg^*_U / M_q
    maximal_adjacency,  ///< sum deg^*_A / N_q
    maximal,            ///< sum deg^* / (M_q + N_q); for q = 0 this is the strict-upper average
};

/// Normalised average degree over the q-simplices, or over the whole complex when q is empty.
Value average_degree(const Complex& c, std::optional<int> q, AverageKind kind);

/// Eigenvector centrality of the q-simplices under p-adjacency. Metadata holds lambda and diagnostics.
Report eigenvector_centrality(const Complex& c, int q, int p);

enum class ClosenessVariant {
    harmonic,        ///< sum over other admitted simplices of 1/d, with 1/inf = 0
    reciprocal_sum,  ///< 1 / sum of distances within the simplex's own class
};

Value closeness(const walks::NearnessGraph& g, const Simplex& s, const walks::WalkFilter& filter,
                ClosenessVariant variant = ClosenessVariant::harmonic);

/// Closeness of every admitted simplex, in global order, paired with its index.
std::vector<std::pair<SimplexIndex, Value>> closeness_all(const walks::NearnessGraph& g,
                                                          const walks::WalkFilter& filter,
                                                          ClosenessVariant variant = ClosenessVariant::harmonic);

/// Pass-through fraction normalised by 2/((n-1)(n-2)) for the simplex's class of size n.
Value betweenness(const walks::NearnessGraph& g, const Simplex& s, const walks::WalkFilter& filter);

std::vector<std::pair<SimplexIndex, Value>> betweenness_all(const walks::NearnessGraph& g,
                                                            const walks::WalkFilter& filter);

struct NeighbourSet
{
    SimplexIndex center = 0;
    std::vector<SimplexIndex> members;                            ///< global order
    std::vector<std::pair<SimplexIndex, SimplexIndex>> links;  ///< first < second
};

/**
 * Maximal neighbours: for a vertex, the facets of dimension >= 1 containing it; otherwise the
 * simplices maximal p-adjacent to s for some p < q together with the facets properly containing s.
 */
NeighbourSet maximal_neighbours(const Complex& c, const Simplex& s);

/**
 * Whether two maximal neighbours of `center` are linked: they share a vertex outside the
 * center, or (center of dimension > 0) they are at 0-distance 2 through a simplex that is not
 * a face of the center.
 */
bool linked(const walks::NearnessGraph& g, const Simplex& a, const Simplex& b, const Simplex& center);

/// maximal_neighbours with the link pairs filled in.
NeighbourSet neighbourhood(const walks::NearnessGraph& g, const Simplex& s);

/// links / C(deg, 2) with deg = number of maximal neighbours; 0 when deg <= 1.
Value clustering(const walks::NearnessGraph& g, const Simplex& s);

} // namespace simplicial::centrality
