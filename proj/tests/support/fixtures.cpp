#include "fixtures.hpp"

#include "simplicial/errors.hpp"
#include "simplicial/generator.hpp"
#include "simplicial/rational.hpp"

#include <random>

namespace fixtures {

Complex k_tri() { return Complex::from_facets({{"0", "1", "2"}}); }
Complex k_two() { return Complex::from_facets({{"0", "1", "2"}, {"1", "2", "3"}}); }
Complex k_bow() { return Complex::from_facets({{"0", "1", "2"}, {"2", "3", "4"}}); }
Complex k_tet() { return Complex::from_facets({{"0", "1", "2", "3"}}); }
Complex k_wind() { return Complex::from_facets({{"0", "1", "2"}, {"0", "3", "4"}, {"0", "5", "6"}}); }
Complex k_clust4() { return Complex::from_facets({{"0", "1", "2"}, {"1", "2", "3"}, {"0", "1", "3"}}); }
Complex t_chain() { return Complex::from_facets({{"0", "1", "2"}, {"1", "2", "3"}, {"2", "3", "4"}}); }

std::vector<std::pair<std::string, Complex>> all()
{
    return {{"K_tri", k_tri()},   {"K_two", k_two()},       {"K_bow", k_bow()},     {"K_tet", k_tet()},
            {"K_wind", k_wind()}, {"K_clust4", k_clust4()}, {"T_chain", t_chain()}};
}

Simplex at(const Complex& c, std::initializer_list<std::string> labels)
{
    std::vector<simplicial::VertexId> ids;
    for (const auto& label : labels) {
        ids.push_back(c.vertices().id(label));
    }
    return Simplex(ids);
}

simplicial::SimplexIndex index(const Complex& c, std::initializer_list<std::string> labels)
{
    return c.index_of(at(c, labels));
}

std::vector<Complex> random_corpus(std::size_t count, std::uint64_t seed, std::size_t max_simplices)
{
    namespace gen = simplicial::generator;
    std::mt19937_64 rng(seed);
    std::vector<Complex> out;
    while (out.size() < count) {
        gen::Config config;
        config.seed = rng();
        if (rng() % 5 == 0) {
            config.model = gen::Model::flag;
            config.n = 4 + rng() % 5;
            config.prob = 0.3 + 0.1 * static_cast<double>(rng() % 4);
        } else {
            config.model = gen::Model::pure;
            config.n = 4 + rng() % 9;
            config.dim = 1 + static_cast<int>(rng() % 3);
            const double candidates =
                simplicial::to_double(simplicial::Rational(simplicial::binomial(static_cast<long long>(config.n),
                                                                                config.dim + 1)));
            const double expected = 2.0 + static_cast<double>(rng() % 7);
            config.prob = std::min(1.0, expected / candidates);
        }
        try {
            Complex c = gen::generate(config);
            if (c.dim() <= 3 && c.size() <= max_simplices) {
                out.push_back(std::move(c));
            }
        } catch (const simplicial::EmptyComplexError&) {
        }
    }
    return out;
}

} // namespace fixtures
