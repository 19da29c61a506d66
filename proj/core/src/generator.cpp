#include "simplicial/generator.hpp"

#include "simplicial/errors.hpp"
#include "simplicial/io.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace simplicial::generator {

namespace {

class Coin
{
public:
    explicit Coin(std::uint64_t seed)
        : m_rng(seed)
    {}

    bool flip(double prob)
    {
        const double u = static_cast<double>(m_rng() >> 11) * 0x1.0p-53;
        return u < prob;
    }

private:
    std::mt19937_64 m_rng;
};

using Bitset = std::vector<bool>;

/// Bron–Kerbosch with pivoting over an adjacency matrix.
void maximal_cliques(const std::vector<Bitset>& adj, std::vector<VertexId>& r, std::vector<VertexId> p,
                     std::vector<VertexId> x, std::vector<std::vector<VertexId>>& out)
{
    if (p.empty() && x.empty()) {
        out.push_back(r);
        return;
    }
    VertexId pivot = p.empty() ? x.front() : p.front();
    std::size_t best = 0;
    for (const auto* set : {&p, &x}) {
        for (VertexId u : *set) {
            const auto n = static_cast<std::size_t>(std::count_if(p.begin(), p.end(), [&](VertexId w) { return adj[u][w]; }));
            if (n > best) {
                best = n;
                pivot = u;
            }
        }
    }
    std::vector<VertexId> candidates;
    for (VertexId v : p) {
        if (!adj[pivot][v]) {
            candidates.push_back(v);
        }
    }
    for (VertexId v : candidates) {
        std::vector<VertexId> np;
        std::vector<VertexId> nx;
        for (VertexId w : p) {
            if (adj[v][w]) {
                np.push_back(w);
            }
        }
        for (VertexId w : x) {
            if (adj[v][w]) {
                nx.push_back(w);
            }
        }
        r.push_back(v);
        maximal_cliques(adj, r, std::move(np), std::move(nx), out);
        r.pop_back();
        p.erase(std::find(p.begin(), p.end(), v));
        x.push_back(v);
    }
}

/// Advances `comb` to the next k-subset of {0..n-1} in lexicographic order.
bool next_combination(std::vector<VertexId>& comb, std::size_t n)
{
    const std::size_t k = comb.size();
    for (std::size_t i = k; i-- > 0;) {
        if (comb[i] < n - k + i) {
            ++comb[i];
            for (std::size_t j = i + 1; j < k; ++j) {
                comb[j] = comb[j - 1] + 1;
            }
            return true;
        }
    }
    return false;
}

} // namespace

Complex generate(const Config& config)
{
    if (config.n < 1) {
        throw ArgumentError("generator needs n >= 1");
    }
    if (!(config.prob >= 0.0 && config.prob <= 1.0)) {
        throw ArgumentError("generator probability must lie in [0, 1]");
    }
    if (config.model == Model::pure && config.dim < 0) {
        throw ArgumentError("pure model needs dim >= 0");
    }
    Coin coin(config.seed);
    std::vector<std::vector<VertexId>> facets;
    if (config.model == Model::pure) {
        const auto k = static_cast<std::size_t>(config.dim) + 1;
        if (k <= config.n) {
            std::vector<VertexId> comb(k);
            for (std::size_t i = 0; i < k; ++i) {
                comb[i] = static_cast<VertexId>(i);
            }
            do {
                if (coin.flip(config.prob)) {
                    facets.push_back(comb);
                }
            } while (next_combination(comb, config.n));
        }
    } else {
        std::vector<Bitset> adj(config.n, Bitset(config.n, false));
        for (std::size_t a = 0; a < config.n; ++a) {
            for (std::size_t b = a + 1; b < config.n; ++b) {
                if (coin.flip(config.prob)) {
                    adj[a][b] = adj[b][a] = true;
                }
            }
        }
        std::vector<VertexId> all(config.n);
        for (std::size_t v = 0; v < config.n; ++v) {
            all[v] = static_cast<VertexId>(v);
        }
        std::vector<VertexId> r;
        maximal_cliques(adj, r, all, {}, facets);
    }
    if (facets.empty()) {
        throw EmptyComplexError();
    }
    std::vector<std::vector<std::string>> labelled;
    for (const auto& f : facets) {
        std::vector<std::string> labels;
        for (VertexId v : f) {
            labels.push_back(std::to_string(v));
        }
        labelled.push_back(std::move(labels));
    }
    return Complex::from_facets(labelled);
}

std::vector<std::string> describe(const Config& config)
{
    std::ostringstream line;
    if (config.model == Model::pure) {
        line << "generator: pure-bernoulli v1 dim=" << config.dim;
    } else {
        line << "generator: flag-gnp v1";
    }
    line << " n=" << config.n << " prob=" << io::format_real(config.prob) << " seed=" << config.seed;
    return {line.str()};
}

} // namespace simplicial::generator
