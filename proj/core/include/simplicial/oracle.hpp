#pragma once

#include "simplicial/complex.hpp"
#include "simplicial/degree_query.hpp"
#include "simplicial/rational.hpp"
#include "simplicial/walk_types.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

/**
 * Brute-force reference implementations for differential testing.
 *
 * Everything here is recomputed from vertex bitmasks and literal loops over the complex; no
 * code is shared with the adjacency, spectral, walks or centrality modules. Costs are cubic
 * in the number of simplices or worse, so inputs should stay small.
 */
namespace simplicial::oracle {

inline constexpr std::size_t kMaxVertices = 14;
inline constexpr std::size_t kMaxSimplices = 400;

class Reference
{
public:
    /// Throws ArgumentError when the complex has more than 64 vertices (bitmask width).
    explicit Reference(const Complex& c);

    const Complex& complex() const noexcept { return *m_complex; }

    bool lower(SimplexIndex a, SimplexIndex b, int p) const;
    bool upper(SimplexIndex a, SimplexIndex b, int p) const;
    bool p_adjacent(SimplexIndex a, SimplexIndex b, int p) const;
    bool maximal(SimplexIndex candidate, SimplexIndex center, int p) const;

    /// Counts by direct comprehension; parameters are not range-checked.
    std::size_t degree(SimplexIndex i, const DegreeQuery& query) const;

    /// Half of the literal sum over both orientations of every p-simplex; signs from inversion counts.
    long long oriented_degree(SimplexIndex a, SimplexIndex b, int p, bool upper_side) const;

    /// Expected entry (i, j) of the (q,h,h')-Laplacian, i and j positions in the q-basis.
    /// part: 0 upper block, 1 lower block, 2 total.
    long long laplacian_entry(int q, int h, int h_prime, std::size_t i, std::size_t j, int part) const;

    /// Nearness level of a pair, if joined.
    std::optional<int> near_level(SimplexIndex a, SimplexIndex b) const;

    WalkLength distance(SimplexIndex a, SimplexIndex b, int p, WalkSemantics semantics) const;
    std::vector<std::vector<SimplexIndex>> components(int p, WalkSemantics semantics) const;
    Rational harmonic_closeness(SimplexIndex i, int p) const;
    /// At-least semantics, normalised within the class; 0 for classes smaller than 3.
    Rational betweenness(SimplexIndex i, int p) const;

    std::vector<SimplexIndex> maximal_neighbours(SimplexIndex i) const;
    bool linked(SimplexIndex a, SimplexIndex b, SimplexIndex center) const;
    /// Standard clustering of the center in the auxiliary neighbour graph.
    Rational clustering(SimplexIndex i) const;

    /// Largest eigenvalue and, when it is simple, its sum-normalised eigenvector (p-adjacency of q-simplices).
    std::pair<double, std::optional<std::vector<double>>> principal_eigen(int q, int p) const;

private:
    bool inside(std::uint64_t small, std::uint64_t big) const { return (small & ~big) == 0; }
    int size_of(SimplexIndex i) const;
    const std::vector<std::vector<WalkLength>>& distances(int p) const;
    /// Number of shortest at-least p-walks between every pair, by layered walk counting.
    const std::vector<std::vector<BigInt>>& shortest_walks(int p) const;
    bool admitted(SimplexIndex i, int p) const;

    const Complex* m_complex;
    std::vector<std::uint64_t> m_mask;
    /// Bit d set: some d-simplex of the complex is a common face (resp. common coface) of the pair.
    std::vector<std::uint32_t> m_face_dims;
    std::vector<std::uint32_t> m_coface_dims;
    std::vector<std::vector<std::pair<SimplexIndex, int>>> m_near;
    mutable std::map<int, std::vector<std::vector<WalkLength>>> m_distance_cache;
    mutable std::map<int, std::vector<std::vector<BigInt>>> m_walk_cache;
};

std::size_t naive_degree(const Complex& c, const Simplex& s, const DegreeQuery& query);
WalkLength naive_distance(const Complex& c, const Simplex& a, const Simplex& b, int p,
                          WalkSemantics semantics = WalkSemantics::at_least);

struct Mismatch
{
    std::string where;
    std::string expected;
    std::string actual;
};

struct OracleDiff
{
    std::string quantity;
    std::size_t checks = 0;
    std::vector<Mismatch> mismatches;

    bool agrees() const noexcept { return mismatches.empty(); }
};

struct DiffReport
{
    std::vector<OracleDiff> diffs;
    /// Known formula discrepancies, reported but not counted as disagreement.
    std::vector<OracleDiff> diagnostics;

    bool clean() const noexcept;
};

/**
 * Compares every computed quantity against the reference. `seed` drives the vertex relabelling
 * used for the orientation-invariance check and the sampled Laplacian quadratic forms.
 * Throws GuardRefusal above kMaxVertices vertices or kMaxSimplices simplices.
 */
DiffReport diff_all(const Complex& c, std::uint64_t seed = 0);

} // namespace simplicial::oracle
