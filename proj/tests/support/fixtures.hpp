#pragma once

#include "simplicial/complex.hpp"

#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace fixtures {

using simplicial::Complex;
using simplicial::Simplex;

Complex k_tri();     // {012}
Complex k_two();     // {012, 123}
Complex k_bow();     // {012, 234}
Complex k_tet();     // {0123}
Complex k_wind();    // {012, 034, 056}
Complex k_clust4();  // {012, 123, 013}
Complex t_chain();   // {012, 123, 234}

std::vector<std::pair<std::string, Complex>> all();

/// Simplex of `c` spanned by the given labels.
Simplex at(const Complex& c, std::initializer_list<std::string> labels);
simplicial::SimplexIndex index(const Complex& c, std::initializer_list<std::string> labels);

/**
 * Seeded random complexes with 4..12 vertices and dimension <= 3: mostly pure models with a
 * handful of expected facets, plus some flag complexes on at most 8 vertices. Complexes with
 * more than `max_simplices` simplices are skipped.
 */
std::vector<Complex> random_corpus(std::size_t count, std::uint64_t seed, std::size_t max_simplices = 120);

} // namespace fixtures
