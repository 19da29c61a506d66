#pragma once

#include "simplicial/complex.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace simplicial::generator {

enum class Model {
    pure,  ///< each (dim+1)-subset of the vertices is a facet independently with probability prob
    flag,  ///< clique complex of a G(n, prob) random graph
};

struct Config
{
    Model model = Model::pure;
    int dim = 2;  ///< pure model only
    std::size_t n = 0;
    double prob = 0.0;
    std::uint64_t seed = 0;
};

/**
 * Seeded random complex with vertex labels "0" .. "n-1".
 *
 * Uses mt19937_64 and draws u = (rng() >> 11) * 2^-53 per candidate in lexicographic order,
 * accepting when u < prob. Throws ArgumentError for n < 1, prob outside [0, 1] or a negative
 * dimension, and EmptyComplexError when no simplex is drawn.
 */
Complex generate(const Config& config);

/// Comment lines recording algorithm name, version and parameters.
std::vector<std::string> describe(const Config& config);

} // namespace simplicial::generator
