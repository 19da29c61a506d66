#pragma once

#include "simplicial/complex.hpp"
#include "simplicial/degree_query.hpp"

#include <cstddef>
#include <vector>

/// Pairwise adjacency predicates and degree families, by direct set enumeration.
namespace simplicial::adjacency {

/// Common p-face exists (strict: and no common (p+1)-face). Requires a != b and p >= 0.
bool lower_adjacent(const Complex& c, const Simplex& a, const Simplex& b, int p, bool strict = false);

/// Some p-simplex of `c` contains both (strict: and no (p+1)-simplex does).
bool upper_adjacent(const Complex& c, const Simplex& a, const Simplex& b, int p, bool strict = false);

/**
 * Strictly p-lower adjacent and not (q+q'-p)-upper adjacent.
 *
 * Two vertices follow the graph convention instead: adjacent at p = 0 iff they span an edge.
 */
bool p_adjacent(const Complex& c, const Simplex& a, const Simplex& b, int p);

/// `candidate` is p-adjacent to `center` and no proper coface of `candidate` is. Directional.
bool maximal_p_adjacent(const Complex& c, const Simplex& candidate, const Simplex& center, int p);

/// Checks the parameter ranges of `query` for a q-simplex; throws ArgumentError naming the constraint.
void validate(const Complex& c, int q, const DegreeQuery& query);

std::size_t degree(const Complex& c, const Simplex& s, const DegreeQuery& query);

struct DegreeReport
{
    DegreeQuery query;
    int q = 0;
    /// One entry per q-simplex, in chain-basis order.
    std::vector<std::size_t> values;
};

DegreeReport degrees(const Complex& c, int q, const DegreeQuery& query);

/**
 * Alternating-sum expression for the strict upper degree:
 * sum_{i=0}^{s} (-1)^i deg^{h+i,q+h+i}_U(s) C(h+i, h), s = dim K - (q+h).
 *
 * It only agrees with the enumerated strict degree when distinct cofaces of `s`
 * meet inside a common larger coface, so callers compare it against
 * degree(strict_upper_step) rather than trusting it. Requires 1 <= h <= dim K - q.
 */
long long strict_upper_closed_form(const Complex& c, const Simplex& s, int h);

} // namespace simplicial::adjacency
