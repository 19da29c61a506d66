#include "simplicial/oracle.hpp"

#include "simplicial/adjacency.hpp"
#include "simplicial/centrality.hpp"
#include "simplicial/errors.hpp"
#include "simplicial/spectral.hpp"
#include "simplicial/walks.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

namespace simplicial::oracle {

namespace {

int top_bit(std::uint32_t bits)
{
    return bits == 0 ? -1 : 31 - std::countl_zero(bits);
}

bool has_bit(std::uint32_t bits, int d)
{
    return d >= 0 && d < 32 && ((bits >> d) & 1U) != 0;
}

std::vector<VertexId> vertex_list(std::uint64_t mask)
{
    std::vector<VertexId> out;
    for (VertexId v = 0; v < 64; ++v) {
        if ((mask >> v) & 1U) {
            out.push_back(v);
        }
    }
    return out;
}

/// Sign of `face` in the boundary of `whole`: (-1)^(inversions of removed-then-kept order).
int inversion_sign(std::uint64_t whole, std::uint64_t face)
{
    std::vector<VertexId> order;
    for (VertexId v : vertex_list(whole & ~face)) {
        order.push_back(v);
    }
    for (VertexId v : vertex_list(face)) {
        order.push_back(v);
    }
    int inversions = 0;
    for (std::size_t x = 0; x < order.size(); ++x) {
        for (std::size_t y = x + 1; y < order.size(); ++y) {
            if (order[x] > order[y]) {
                ++inversions;
            }
        }
    }
    return inversions % 2 == 0 ? 1 : -1;
}

std::string text(double x)
{
    std::ostringstream out;
    out.precision(12);
    out << x;
    return out.str();
}

std::string text(const Value& v)
{
    if (v.infinite) {
        return "inf";
    }
    return v.exact ? to_string(*v.exact) : text(v.real);
}

std::string classes_text(const Complex& c, const std::vector<std::vector<SimplexIndex>>& classes)
{
    std::string out;
    for (const auto& cls : classes) {
        out += "{";
        for (std::size_t k = 0; k < cls.size(); ++k) {
            out += (k ? " " : "") + c.name(cls[k]);
        }
        out += "}";
    }
    return out;
}

/// Diff bookkeeping keyed by quantity name, in first-use order.
class Ledger
{
public:
    OracleDiff& at(const std::string& quantity)
    {
        for (auto& d : m_diffs) {
            if (d.quantity == quantity) {
                return d;
            }
        }
        m_diffs.push_back({quantity, 0, {}});
        return m_diffs.back();
    }

    template <class T>
    void check(const std::string& quantity, const std::string& where, const T& expected, const T& actual)
    {
        OracleDiff& d = at(quantity);
        ++d.checks;
        if (!(expected == actual)) {
            d.mismatches.push_back({where, as_text(expected), as_text(actual)});
        }
    }

    void check_near(const std::string& quantity, const std::string& where, double expected, double actual,
                    double tolerance)
    {
        OracleDiff& d = at(quantity);
        ++d.checks;
        if (!(std::abs(expected - actual) <= tolerance)) {
            d.mismatches.push_back({where, text(expected), text(actual)});
        }
    }

    std::vector<OracleDiff> take() { return std::move(m_diffs); }

private:
    template <class T>
    static std::string as_text(const T& x)
    {
        if constexpr (std::is_same_v<T, std::string>) {
            return x;
        } else if constexpr (std::is_same_v<T, Rational>) {
            return to_string(x);
        } else if constexpr (std::is_same_v<T, WalkLength>) {
            return x.to_string();
        } else if constexpr (std::is_same_v<T, bool>) {
            return x ? "true" : "false";
        } else {
            return std::to_string(x);
        }
    }

    std::vector<OracleDiff> m_diffs;
};

std::string family_tag(DegreeFamily f)
{
    switch (f) {
    case DegreeFamily::lower: return "lower";
    case DegreeFamily::strict_lower: return "strict_lower";
    case DegreeFamily::lower_step: return "lower_step";
    case DegreeFamily::strict_lower_step: return "strict_lower_step";
    case DegreeFamily::upper: return "upper";
    case DegreeFamily::strict_upper: return "strict_upper";
    case DegreeFamily::upper_step: return "upper_step";
    case DegreeFamily::strict_upper_step: return "strict_upper_step";
    case DegreeFamily::adjacency: return "adjacency";
    case DegreeFamily::maximal_adjacency: return "maximal_adjacency";
    case DegreeFamily::two_param: return "two_param";
    case DegreeFamily::two_param_strict: return "two_param_strict";
    case DegreeFamily::maximal_simplicial: return "maximal_simplicial";
    case DegreeFamily::maximal_adjacency_sum: return "maximal_adjacency_sum";
    case DegreeFamily::strict_upper_sum: return "strict_upper_sum";
    }
    return "unknown";
}

/// Every degree query with legal parameters for q-simplices of a complex of dimension top.
std::vector<DegreeQuery> legal_queries(int q, int top)
{
    std::vector<DegreeQuery> out;
    for (int p = 0; p <= q; ++p) {
        out.push_back(DegreeQuery::lower(p));
        out.push_back(DegreeQuery::strict_lower(p));
        for (int h = q - top; h <= q - p; ++h) {
            out.push_back(DegreeQuery::lower_step(h, p));
            out.push_back(DegreeQuery::strict_lower_step(h, p));
        }
    }
    for (int p = q; p <= top + 1; ++p) {
        out.push_back(DegreeQuery::upper(p));
        out.push_back(DegreeQuery::strict_upper(p));
    }
    for (int h = 1; h <= top - q + 1; ++h) {
        out.push_back(DegreeQuery::upper_step(h));
        out.push_back(DegreeQuery::strict_upper_step(h));
    }
    for (int p = 0; p < std::max(q, 1); ++p) {
        out.push_back(DegreeQuery::adjacency(p));
        out.push_back(DegreeQuery::maximal_adjacency(p));
    }
    for (int p1 = q + 1; p1 <= top + 1; ++p1) {
        for (int p2 = 0; p2 < q; ++p2) {
            out.push_back(DegreeQuery::two_param(p1, p2));
            out.push_back(DegreeQuery::two_param_strict(p1, p2));
        }
    }
    out.push_back(DegreeQuery::maximal_simplicial());
    out.push_back(DegreeQuery::maximal_adjacency_sum());
    out.push_back(DegreeQuery::strict_upper_sum());
    return out;
}

/// (q, p) pairs accepted by the adjacency-matrix and adjacency-degree routines.
std::vector<std::pair<int, int>> adjacency_params(int top)
{
    std::vector<std::pair<int, int>> out;
    for (int q = 0; q <= top; ++q) {
        for (int p = 0; p < std::max(q, 1); ++p) {
            out.emplace_back(q, p);
        }
    }
    return out;
}

} // namespace

Reference::Reference(const Complex& c)
    : m_complex(&c)
{
    if (c.vertices().size() > 64) {
        throw ArgumentError("reference computations support at most 64 vertices");
    }
    const std::size_t n = c.size();
    m_mask.resize(n);
    for (SimplexIndex i = 0; i < n; ++i) {
        for (VertexId v : c.simplex(i).vertices()) {
            m_mask[i] |= std::uint64_t{1} << v;
        }
    }
    m_face_dims.assign(n * n, 0);
    m_coface_dims.assign(n * n, 0);
    for (SimplexIndex a = 0; a < n; ++a) {
        for (SimplexIndex b = 0; b < n; ++b) {
            const std::uint64_t both = m_mask[a] & m_mask[b];
            const std::uint64_t either = m_mask[a] | m_mask[b];
            for (SimplexIndex t = 0; t < n; ++t) {
                const std::uint32_t bit = std::uint32_t{1} << (size_of(t) - 1);
                if (inside(m_mask[t], both)) {
                    m_face_dims[a * n + b] |= bit;
                }
                if (inside(either, m_mask[t])) {
                    m_coface_dims[a * n + b] |= bit;
                }
            }
        }
    }
    m_near.resize(n);
    for (SimplexIndex a = 0; a < n; ++a) {
        for (SimplexIndex b = a + 1; b < n; ++b) {
            int level = -1;
            if (size_of(a) == 1 && size_of(b) == 1) {
                if (upper(a, b, 1)) {
                    level = 0;
                }
            } else {
                const int p = top_bit(m_face_dims[a * n + b]);
                if (p >= 0 && (maximal(a, b, p) || maximal(b, a, p))) {
                    level = p;
                }
            }
            if (level >= 0) {
                m_near[a].emplace_back(b, level);
                m_near[b].emplace_back(a, level);
            }
        }
    }
}

int Reference::size_of(SimplexIndex i) const
{
    return std::popcount(m_mask[i]);
}

bool Reference::lower(SimplexIndex a, SimplexIndex b, int p) const
{
    return has_bit(m_face_dims[a * m_complex->size() + b], p);
}

bool Reference::upper(SimplexIndex a, SimplexIndex b, int p) const
{
    return has_bit(m_coface_dims[a * m_complex->size() + b], p);
}

bool Reference::p_adjacent(SimplexIndex a, SimplexIndex b, int p) const
{
    if (a == b || p < 0) {
        return false;
    }
    if (size_of(a) == 1 && size_of(b) == 1) {
        return p == 0 && upper(a, b, 1);
    }
    const int q = size_of(a) - 1;
    const int qp = size_of(b) - 1;
    return lower(a, b, p) && !lower(a, b, p + 1) && !upper(a, b, q + qp - p);
}

bool Reference::maximal(SimplexIndex candidate, SimplexIndex center, int p) const
{
    if (!p_adjacent(candidate, center, p)) {
        return false;
    }
    for (SimplexIndex s = 0; s < m_complex->size(); ++s) {
        if (s != candidate && inside(m_mask[candidate], m_mask[s]) && p_adjacent(s, center, p)) {
            return false;
        }
    }
    return true;
}

std::size_t Reference::degree(SimplexIndex i, const DegreeQuery& query) const
{
    const int q = size_of(i) - 1;
    const int top = m_complex->dim();
    const auto strict_lower_at = [&](SimplexIndex j, int p) { return lower(i, j, p) && !lower(i, j, p + 1); };
    const auto strict_upper_at = [&](SimplexIndex j, int p) { return upper(i, j, p) && !upper(i, j, p + 1); };
    const auto dim_of = [&](SimplexIndex j) { return size_of(j) - 1; };
    std::size_t n = 0;
    for (SimplexIndex j = 0; j < m_complex->size(); ++j) {
        if (j == i) {
            continue;
        }
        switch (query.family) {
        case DegreeFamily::lower: n += lower(i, j, query.p); break;
        case DegreeFamily::strict_lower: n += strict_lower_at(j, query.p); break;
        case DegreeFamily::lower_step: n += dim_of(j) == q - query.h && lower(i, j, query.p); break;
        case DegreeFamily::strict_lower_step: n += dim_of(j) == q - query.h && strict_lower_at(j, query.p); break;
        case DegreeFamily::upper: n += upper(i, j, query.p); break;
        case DegreeFamily::strict_upper: n += strict_upper_at(j, query.p); break;
        case DegreeFamily::upper_step: n += dim_of(j) == q + query.h && upper(i, j, q + query.h); break;
        case DegreeFamily::strict_upper_step:
            n += dim_of(j) == q + query.h && strict_upper_at(j, q + query.h);
            break;
        case DegreeFamily::adjacency: n += p_adjacent(j, i, query.p); break;
        case DegreeFamily::maximal_adjacency: n += maximal(j, i, query.p); break;
        case DegreeFamily::two_param: n += upper(i, j, query.p1) + maximal(j, i, query.p2); break;
        case DegreeFamily::two_param_strict: n += strict_upper_at(j, query.p1) + maximal(j, i, query.p2); break;
        case DegreeFamily::maximal_simplicial:
        case DegreeFamily::maximal_adjacency_sum:
        case DegreeFamily::strict_upper_sum:
            if (query.family != DegreeFamily::strict_upper_sum) {
                for (int p = 0; p < q; ++p) {
                    n += maximal(j, i, p);
                }
            }
            if (query.family != DegreeFamily::maximal_adjacency_sum) {
                for (int h = 1; h <= top - q; ++h) {
                    n += dim_of(j) == q + h && strict_upper_at(j, q + h);
                }
            }
            break;
        }
    }
    return n;
}

long long Reference::oriented_degree(SimplexIndex a, SimplexIndex b, int p, bool upper_side) const
{
    long long total = 0;
    for (SimplexIndex t = 0; t < m_complex->size(); ++t) {
        if (size_of(t) != p + 1) {
            continue;
        }
        int sa = 0;
        int sb = 0;
        if (upper_side) {
            if (!inside(m_mask[a] | m_mask[b], m_mask[t])) {
                continue;
            }
            sa = inversion_sign(m_mask[t], m_mask[a]);
            sb = inversion_sign(m_mask[t], m_mask[b]);
        } else {
            if (!inside(m_mask[t], m_mask[a] & m_mask[b])) {
                continue;
            }
            sa = inversion_sign(m_mask[a], m_mask[t]);
            sb = inversion_sign(m_mask[b], m_mask[t]);
        }
        for (int orientation : {1, -1}) {
            total += (orientation * sa == orientation * sb) ? 1 : -1;
        }
    }
    return total / 2;
}

long long Reference::laplacian_entry(int q, int h, int h_prime, std::size_t i, std::size_t j, int part) const
{
    const SimplexIndex a = m_complex->offset(q) + i;
    const SimplexIndex b = m_complex->offset(q) + j;
    const auto count_dim = [&](int d, bool cofaces) {
        long long n = 0;
        for (SimplexIndex t = 0; t < m_complex->size(); ++t) {
            if (size_of(t) == d + 1 &&
                (cofaces ? inside(m_mask[a], m_mask[t]) : inside(m_mask[t], m_mask[a]))) {
                ++n;
            }
        }
        return n;
    };
    long long up = 0;
    long long down = 0;
    if (q + h <= m_complex->dim()) {
        up = a == b ? count_dim(q + h, true) : oriented_degree(a, b, q + h, true);
    }
    if (q - h_prime >= 0) {
        down = a == b ? count_dim(q - h_prime, false) : oriented_degree(a, b, q - h_prime, false);
    }
    return part == 0 ? up : part == 1 ? down : up + down;
}

std::optional<int> Reference::near_level(SimplexIndex a, SimplexIndex b) const
{
    for (const auto& [to, level] : m_near[a]) {
        if (to == b) {
            return level;
        }
    }
    return std::nullopt;
}

bool Reference::admitted(SimplexIndex i, int p) const
{
    return size_of(i) - 1 >= p;
}

const std::vector<std::vector<WalkLength>>& Reference::distances(int p) const
{
    auto found = m_distance_cache.find(p);
    if (found != m_distance_cache.end()) {
        return found->second;
    }
    const std::size_t n = m_complex->size();
    std::vector<std::vector<WalkLength>> table(n, std::vector<WalkLength>(n));
    for (SimplexIndex s = 0; s < n; ++s) {
        if (!admitted(s, p)) {
            continue;
        }
        // Reachable sets by walk length, stopping once a layer adds nothing new.
        std::vector<bool> seen(n, false);
        seen[s] = true;
        table[s][s] = WalkLength(0);
        for (std::size_t length = 1;; ++length) {
            std::vector<bool> next = seen;
            for (SimplexIndex u = 0; u < n; ++u) {
                if (!seen[u]) {
                    continue;
                }
                for (const auto& [v, level] : m_near[u]) {
                    if (level >= p && admitted(v, p)) {
                        next[v] = true;
                    }
                }
            }
            if (next == seen) {
                break;
            }
            for (SimplexIndex v = 0; v < n; ++v) {
                if (next[v] && !seen[v]) {
                    table[s][v] = WalkLength(length);
                }
            }
            seen = std::move(next);
        }
    }
    return m_distance_cache.emplace(p, std::move(table)).first->second;
}

WalkLength Reference::distance(SimplexIndex a, SimplexIndex b, int p, WalkSemantics semantics) const
{
    if (!admitted(a, p) || !admitted(b, p)) {
        return WalkLength::infinite();
    }
    const auto& d = distances(p);
    if (semantics == WalkSemantics::at_least) {
        return d[a][b];
    }
    if (a == b) {
        return WalkLength(0);
    }
    WalkLength best = WalkLength::infinite();
    for (SimplexIndex u = 0; u < m_complex->size(); ++u) {
        for (const auto& [v, level] : m_near[u]) {
            if (level == p && admitted(u, p) && admitted(v, p)) {
                best = std::min(best, d[a][u] + WalkLength(1) + d[v][b]);
            }
        }
    }
    return best;
}

std::vector<std::vector<SimplexIndex>> Reference::components(int p, WalkSemantics semantics) const
{
    std::vector<std::vector<SimplexIndex>> out;
    std::vector<bool> placed(m_complex->size(), false);
    for (SimplexIndex a = 0; a < m_complex->size(); ++a) {
        if (!admitted(a, p) || placed[a]) {
            continue;
        }
        std::vector<SimplexIndex> cls{a};
        placed[a] = true;
        for (SimplexIndex b = a + 1; b < m_complex->size(); ++b) {
            if (!placed[b] && distance(a, b, p, semantics).is_finite()) {
                cls.push_back(b);
                placed[b] = true;
            }
        }
        out.push_back(std::move(cls));
    }
    return out;
}

Rational Reference::harmonic_closeness(SimplexIndex i, int p) const
{
    Rational total = 0;
    for (SimplexIndex j = 0; j < m_complex->size(); ++j) {
        const WalkLength d = distance(i, j, p, WalkSemantics::at_least);
        if (j != i && d.is_finite()) {
            total += Rational(1, d.steps());
        }
    }
    return total;
}

const std::vector<std::vector<BigInt>>& Reference::shortest_walks(int p) const
{
    auto found = m_walk_cache.find(p);
    if (found != m_walk_cache.end()) {
        return found->second;
    }
    const std::size_t n = m_complex->size();
    const auto& d = distances(p);
    std::vector<std::vector<BigInt>> table(n, std::vector<BigInt>(n, 0));
    for (SimplexIndex s = 0; s < n; ++s) {
        if (!admitted(s, p)) {
            continue;
        }
        std::size_t longest = 0;
        for (SimplexIndex t = 0; t < n; ++t) {
            if (d[s][t].is_finite()) {
                longest = std::max(longest, d[s][t].steps());
            }
        }
        // current[u]: walks of the current length from s to u, all steps at level >= p.
        std::vector<BigInt> current(n, 0);
        current[s] = 1;
        table[s][s] = 1;
        for (std::size_t length = 1; length <= longest; ++length) {
            std::vector<BigInt> next(n, 0);
            for (SimplexIndex u = 0; u < n; ++u) {
                if (current[u] == 0) {
                    continue;
                }
                for (const auto& [v, level] : m_near[u]) {
                    if (level >= p && admitted(v, p)) {
                        next[v] += current[u];
                    }
                }
            }
            for (SimplexIndex t = 0; t < n; ++t) {
                if (d[s][t].is_finite() && d[s][t].steps() == length) {
                    table[s][t] = next[t];
                }
            }
            current = std::move(next);
        }
    }
    return m_walk_cache.emplace(p, std::move(table)).first->second;
}

Rational Reference::betweenness(SimplexIndex i, int p) const
{
    std::vector<SimplexIndex> cls;
    for (const auto& candidate : components(p, WalkSemantics::at_least)) {
        if (std::find(candidate.begin(), candidate.end(), i) != candidate.end()) {
            cls = candidate;
        }
    }
    const std::size_t n = cls.size();
    if (n < 3) {
        return 0;
    }
    const auto& d = distances(p);
    const auto& walks = shortest_walks(p);
    Rational total = 0;
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = x + 1; y < n; ++y) {
            const SimplexIndex s = cls[x];
            const SimplexIndex t = cls[y];
            if (s == i || t == i) {
                continue;
            }
            if (d[s][i] + d[i][t] == d[s][t]) {
                total += Rational(walks[s][i] * walks[i][t], walks[s][t]);
            }
        }
    }
    return total * 2 / (BigInt(n - 1) * (n - 2));
}

std::vector<SimplexIndex> Reference::maximal_neighbours(SimplexIndex i) const
{
    const int q = size_of(i) - 1;
    std::vector<SimplexIndex> out;
    for (SimplexIndex j = 0; j < m_complex->size(); ++j) {
        if (j == i) {
            continue;
        }
        const int qj = size_of(j) - 1;
        const bool facet_above = qj > q && upper(i, j, qj) && !upper(i, j, qj + 1);
        bool near = false;
        for (int p = 0; p < q && !near; ++p) {
            near = maximal(j, i, p);
        }
        if (facet_above || near) {
            out.push_back(j);
        }
    }
    return out;
}

bool Reference::linked(SimplexIndex a, SimplexIndex b, SimplexIndex center) const
{
    if (a == b) {
        return false;
    }
    if ((m_mask[a] & m_mask[b] & ~m_mask[center]) != 0) {
        return true;
    }
    if (size_of(center) == 1) {
        return false;
    }
    const WalkLength d = distances(0)[a][b];
    if (!d.is_finite() || d.steps() != 2) {
        return false;
    }
    for (SimplexIndex m = 0; m < m_complex->size(); ++m) {
        if (near_level(a, m) && near_level(m, b) && !inside(m_mask[m], m_mask[center])) {
            return true;
        }
    }
    return false;
}

Rational Reference::clustering(SimplexIndex i) const
{
    const std::vector<SimplexIndex> members = maximal_neighbours(i);
    const std::size_t k = members.size();
    if (k <= 1) {
        return 0;
    }
    // Auxiliary graph: node 0 is the center, node x+1 is members[x].
    std::vector<std::vector<bool>> joined(k + 1, std::vector<bool>(k + 1, false));
    for (std::size_t x = 0; x < k; ++x) {
        joined[0][x + 1] = joined[x + 1][0] = true;
        for (std::size_t y = 0; y < k; ++y) {
            joined[x + 1][y + 1] = linked(members[x], members[y], i);
        }
    }
    std::size_t triangles = 0;
    for (std::size_t x = 1; x <= k; ++x) {
        for (std::size_t y = x + 1; y <= k; ++y) {
            triangles += joined[0][x] && joined[0][y] && joined[x][y];
        }
    }
    return Rational(BigInt(triangles), BigInt(k) * (k - 1) / 2);
}

std::pair<double, std::optional<std::vector<double>>> Reference::principal_eigen(int q, int p) const
{
    const std::size_t n = m_complex->count(q);
    if (n == 0) {
        return {0.0, std::nullopt};
    }
    const SimplexIndex first = m_complex->offset(q);
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
            if (p_adjacent(first + x, first + y, p)) {
                a(static_cast<Eigen::Index>(x), static_cast<Eigen::Index>(y)) = 1.0;
            }
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a);
    const auto& values = solver.eigenvalues();
    const Eigen::Index last = values.size() - 1;
    const double lambda = values(last);
    if (lambda < 1e-9 || (last > 0 && lambda - values(last - 1) < 1e-6)) {
        return {lambda, std::nullopt};
    }
    std::vector<double> v(n);
    double sum = 0.0;
    for (std::size_t x = 0; x < n; ++x) {
        v[x] = std::abs(solver.eigenvectors()(static_cast<Eigen::Index>(x), last));
        sum += v[x];
    }
    for (double& x : v) {
        x /= sum;
    }
    return {lambda, v};
}

std::size_t naive_degree(const Complex& c, const Simplex& s, const DegreeQuery& query)
{
    return Reference(c).degree(c.index_of(s), query);
}

WalkLength naive_distance(const Complex& c, const Simplex& a, const Simplex& b, int p, WalkSemantics semantics)
{
    return Reference(c).distance(c.index_of(a), c.index_of(b), p, semantics);
}

bool DiffReport::clean() const noexcept
{
    return std::all_of(diffs.begin(), diffs.end(), [](const OracleDiff& d) { return d.agrees(); });
}

namespace {

void diff_degrees(const Complex& c, const Reference& ref, Ledger& ledger, Ledger& diagnostics)
{
    for (int q = 0; q <= c.dim(); ++q) {
        for (const DegreeQuery& query : legal_queries(q, c.dim())) {
            const auto report = adjacency::degrees(c, q, query);
            for (std::size_t k = 0; k < c.count(q); ++k) {
                const SimplexIndex i = c.offset(q) + k;
                ledger.check("degree/" + family_tag(query.family), describe(query) + " " + c.name(i),
                             ref.degree(i, query), report.values[k]);
            }
        }
        for (std::size_t k = 0; k < c.count(q); ++k) {
            const SimplexIndex i = c.offset(q) + k;
            for (int h = 1; h <= c.dim() - q; ++h) {
                const auto expected = static_cast<long long>(ref.degree(i, DegreeQuery::strict_upper_step(h)));
                diagnostics.check("strict_upper_closed_form", "h=" + std::to_string(h) + " " + c.name(i), expected,
                                  adjacency::strict_upper_closed_form(c, c.simplex(i), h));
            }
        }
    }
}

void diff_theorems(const Complex& c, const Reference& ref, Ledger& ledger)
{
    struct Case
    {
        spectral::TheoremFamily family;
        const char* tag;
        DegreeQuery (*query)(int);
    };
    const Case cases[] = {
        {spectral::TheoremFamily::lower, "theorem/lower", &DegreeQuery::lower},
        {spectral::TheoremFamily::upper, "theorem/upper", &DegreeQuery::upper},
        {spectral::TheoremFamily::adjacency, "theorem/adjacency", &DegreeQuery::adjacency},
        {spectral::TheoremFamily::maximal_adjacency, "theorem/maximal_adjacency", &DegreeQuery::maximal_adjacency},
    };
    for (int q = 0; q <= c.dim(); ++q) {
        for (const Case& k : cases) {
            std::vector<int> ps;
            if (k.family == spectral::TheoremFamily::lower) {
                for (int p = 0; p <= q; ++p) {
                    ps.push_back(p);
                }
            } else if (k.family == spectral::TheoremFamily::upper) {
                for (int p = q; p <= c.dim(); ++p) {
                    ps.push_back(p);
                }
            } else {
                for (int p = 0; p < std::max(q, 1); ++p) {
                    ps.push_back(p);
                }
            }
            for (int p : ps) {
                const auto report = spectral::theorem_degrees(c, q, p, k.family);
                for (std::size_t x = 0; x < c.count(q); ++x) {
                    const SimplexIndex i = c.offset(q) + x;
                    ledger.check(k.tag, "q=" + std::to_string(q) + " p=" + std::to_string(p) + " " + c.name(i),
                                 ref.degree(i, k.query(p)), report.values[x]);
                }
            }
        }
    }
}

void diff_laplacians(const Complex& c, const Reference& ref, Ledger& ledger, std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> entry(-5, 5);
    for (int q = 0; q <= c.dim(); ++q) {
        const std::size_t n = c.count(q);
        for (int h = 1; h <= std::max(1, c.dim() - q); ++h) {
            for (int hp = 1; hp <= std::max(1, q); ++hp) {
                const auto bundle = spectral::laplacian(c, q, h, hp);
                const std::string params =
                    "q=" + std::to_string(q) + " h=" + std::to_string(h) + " h'=" + std::to_string(hp);
                const spectral::DenseIntMatrix parts[] = {spectral::to_dense(bundle.up),
                                                          spectral::to_dense(bundle.down),
                                                          spectral::to_dense(bundle.total)};
                const char* tags[] = {"laplacian/up", "laplacian/down", "laplacian/total"};
                for (int part = 0; part < 3; ++part) {
                    for (std::size_t x = 0; x < n; ++x) {
                        for (std::size_t y = 0; y < n; ++y) {
                            ledger.check(tags[part],
                                         params + " (" + c.name(c.offset(q) + x) + ", " + c.name(c.offset(q) + y) + ")",
                                         ref.laplacian_entry(q, h, hp, x, y, part),
                                         static_cast<long long>(parts[part](static_cast<Eigen::Index>(x),
                                                                            static_cast<Eigen::Index>(y))));
                    }
                    }
                }
                for (int sample = 0; sample < 20; ++sample) {
                    Eigen::Matrix<long long, Eigen::Dynamic, 1> v(static_cast<Eigen::Index>(n));
                    for (Eigen::Index x = 0; x < v.size(); ++x) {
                        v(x) = entry(rng);
                    }
                    const Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic> total =
                        parts[2].cast<long long>();
                    const long long form = v.dot(total * v);
                    ledger.check("laplacian/quadratic_form", params + " sample " + std::to_string(sample), true,
                                 form >= 0);
                }
            }
        }
    }
}

void diff_adjacency_matrices(const Complex& c, const Reference& ref, Ledger& ledger)
{
    for (const auto& [q, p] : adjacency_params(c.dim())) {
        const auto m = spectral::to_dense(spectral::adjacency_matrix(c, q, p));
        const SimplexIndex first = c.offset(q);
        for (std::size_t x = 0; x < c.count(q); ++x) {
            for (std::size_t y = 0; y < c.count(q); ++y) {
                ledger.check("adjacency_matrix",
                             "q=" + std::to_string(q) + " p=" + std::to_string(p) + " (" + c.name(first + x) + ", " +
                                 c.name(first + y) + ")",
                             ref.p_adjacent(first + x, first + y, p) ? 1LL : 0LL,
                             static_cast<long long>(m(static_cast<Eigen::Index>(x), static_cast<Eigen::Index>(y))));
            }
        }
    }
}

void diff_walks(const Complex& c, const Reference& ref, Ledger& ledger)
{
    const walks::NearnessGraph g(c);
    for (SimplexIndex a = 0; a < c.size(); ++a) {
        for (SimplexIndex b = 0; b < c.size(); ++b) {
            if (a == b) {
                continue;
            }
            const auto expected = ref.near_level(a, b);
            const auto actual = g.level(a, b);
            ledger.check("nearness_graph", c.name(a) + " ~ " + c.name(b),
                         expected ? std::to_string(*expected) : std::string("none"),
                         actual ? std::to_string(*actual) : std::string("none"));
        }
    }
    for (int p = 0; p <= c.dim(); ++p) {
        for (WalkSemantics semantics : {WalkSemantics::at_least, WalkSemantics::exact}) {
            const std::string sem = semantics == WalkSemantics::at_least ? "at_least" : "exact";
            const walks::WalkFilter filter{p, semantics, std::nullopt};
            const auto nodes = walks::admitted_nodes(g, filter);
            for (SimplexIndex s : nodes) {
                const auto row = walks::geodesic_counts(g, s, filter);
                for (SimplexIndex t : nodes) {
                    ledger.check("distance/" + sem,
                                 "p=" + std::to_string(p) + " " + c.name(s) + " -> " + c.name(t),
                                 ref.distance(s, t, p, semantics), row.dist[t]);
                }
            }
            ledger.check("components/" + sem, "p=" + std::to_string(p),
                         classes_text(c, ref.components(p, semantics)),
                         classes_text(c, walks::components(g, filter).classes));
        }
        const walks::WalkFilter filter{p, WalkSemantics::at_least, std::nullopt};
        for (const auto& [i, value] : centrality::closeness_all(g, filter)) {
            ledger.check("closeness", "p=" + std::to_string(p) + " " + c.name(i),
                         to_string(ref.harmonic_closeness(i, p)), text(value));
        }
        for (const auto& [i, value] : centrality::betweenness_all(g, filter)) {
            ledger.check("betweenness", "p=" + std::to_string(p) + " " + c.name(i),
                         to_string(ref.betweenness(i, p)), text(value));
        }
    }
    for (SimplexIndex i = 0; i < c.size(); ++i) {
        ledger.check("clustering", c.name(i), to_string(ref.clustering(i)),
                     text(centrality::clustering(g, c.simplex(i))));
    }
}

void diff_eigen(const Complex& c, const Reference& ref, Ledger& ledger)
{
    for (const auto& [q, p] : adjacency_params(c.dim())) {
        const auto result = spectral::principal_eigenvector(spectral::adjacency_matrix(c, q, p));
        const auto [lambda, vector] = ref.principal_eigen(q, p);
        const std::string params = "q=" + std::to_string(q) + " p=" + std::to_string(p);
        ledger.check_near("eigenvector/eigenvalue", params, lambda, result.eigenvalue, 1e-8);
        if (vector) {
            for (std::size_t x = 0; x < vector->size(); ++x) {
                ledger.check_near("eigenvector/vector", params + " " + c.name(c.offset(q) + x), (*vector)[x],
                                  result.vector[x], 1e-6);
            }
        }
    }
}

void diff_normalised(const Complex& c, const Reference& ref, Ledger& ledger)
{
    if (c.size() >= 2) {
        for (SimplexIndex i = 0; i < c.size(); ++i) {
            const Rational expected(BigInt(ref.degree(i, DegreeQuery::maximal_simplicial())), BigInt(c.size() - 1));
            ledger.check("maximal_simplicial_centrality", c.name(i), to_string(expected),
                         text(centrality::maximal_simplicial_degree_centrality(c, c.simplex(i))));
        }
    }
    // Denominators recounted from the number of vertex sets of each size that could occur.
    const long long f0 = static_cast<long long>(c.count(0));
    const auto choose = [](long long n, long long k) -> BigInt {
        if (k < 0 || n < 0 || k > n) {
            return 0;
        }
        BigInt r = 1;
        for (long long x = 1; x <= k; ++x) {
            r = r * (n - k + x) / x;
        }
        return r;
    };
    const auto m_q = [&](int q) {
        BigInt t = 0;
        for (int h = 1; h <= c.dim() - q; ++h) {
            t += BigInt(c.count(q)) * choose(f0 - (q + 1), q + h);
        }
        return t;
    };
    const auto n_q = [&](int q) {
        BigInt t = 0;
        for (int p = 0; p < q; ++p) {
            BigInt slots = -1;
            for (int qp = p + 1; qp <= c.dim(); ++qp) {
                slots += choose(f0 - (p + 1), qp);
            }
            t += BigInt(c.count(q)) * choose(q + 1, p + 1) * slots;
        }
        return t;
    };
    struct Kind
    {
        centrality::AverageKind kind;
        const char* tag;
        DegreeQuery query;
    };
    const Kind kinds[] = {
        {centrality::AverageKind::strict_upper, "strict_upper", DegreeQuery::strict_upper_sum()},
        {centrality::AverageKind::maximal_adjacency, "maximal_adjacency", DegreeQuery::maximal_adjacency_sum()},
        {centrality::AverageKind::maximal, "maximal", DegreeQuery::maximal_simplicial()},
    };
    for (const Kind& k : kinds) {
        const auto expected_for = [&](int first, int last) -> std::string {
            BigInt num = 0;
            BigInt den = 0;
            for (int q = first; q <= last; ++q) {
                for (std::size_t x = 0; x < c.count(q); ++x) {
                    num += ref.degree(c.offset(q) + x, k.query);
                }
                den += k.kind == centrality::AverageKind::strict_upper        ? m_q(q)
                       : k.kind == centrality::AverageKind::maximal_adjacency ? n_q(q)
                                                                              : m_q(q) + n_q(q);
            }
            if (den <= 0) {
                return num == 0 ? "0" : "undefined";
            }
            return to_string(Rational(num, den));
        };
        const auto actual_for = [&](std::optional<int> q) -> std::string {
            try {
                return text(centrality::average_degree(c, q, k.kind));
            } catch (const UndefinedResultError&) {
                return "undefined";
            }
        };
        for (int q = 0; q <= c.dim(); ++q) {
            ledger.check(std::string("average_degree/") + k.tag, "q=" + std::to_string(q), expected_for(q, q),
                         actual_for(q));
        }
        ledger.check(std::string("average_degree/") + k.tag, "all", expected_for(0, c.dim()),
                     actual_for(std::nullopt));
    }
}

/// Renames vertices so their lexicographic order is a random permutation, then compares
/// quantities that must not depend on orientation.
void diff_relabelled(const Complex& c, Ledger& ledger, std::mt19937_64& rng)
{
    const std::size_t nv = c.vertices().size();
    std::vector<VertexId> perm(nv);
    std::iota(perm.begin(), perm.end(), VertexId{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    const auto label = [&](VertexId v) {
        std::string digits = std::to_string(perm[v]);
        return "r" + std::string(4 - std::min<std::size_t>(4, digits.size()), '0') + digits;
    };
    std::vector<std::vector<std::string>> facets;
    for (SimplexIndex f : c.facets()) {
        std::vector<std::string> labels;
        for (VertexId v : c.simplex(f).vertices()) {
            labels.push_back(label(v));
        }
        facets.push_back(std::move(labels));
    }
    const Complex r = Complex::from_facets(facets);
    std::vector<SimplexIndex> image(c.size());
    for (SimplexIndex i = 0; i < c.size(); ++i) {
        std::vector<VertexId> ids;
        for (VertexId v : c.simplex(i).vertices()) {
            ids.push_back(r.vertices().id(label(v)));
        }
        image[i] = r.index_of(Simplex(ids));
    }
    for (int q = 0; q <= c.dim(); ++q) {
        std::vector<DegreeQuery> queries{DegreeQuery::maximal_simplicial(), DegreeQuery::maximal_adjacency_sum(),
                                         DegreeQuery::strict_upper_sum()};
        for (int p = 0; p <= q; ++p) {
            queries.push_back(DegreeQuery::lower(p));
        }
        for (const DegreeQuery& query : queries) {
            const auto before = adjacency::degrees(c, q, query);
            for (std::size_t x = 0; x < c.count(q); ++x) {
                const SimplexIndex i = c.offset(q) + x;
                ledger.check("orientation_invariance/degree", describe(query) + " " + c.name(i), before.values[x],
                             adjacency::degree(r, r.simplex(image[i]), query));
            }
        }
        const auto before = spectral::to_dense(spectral::laplacian(c, q, 1, 1).total);
        const auto after = spectral::to_dense(spectral::laplacian(r, q, 1, 1).total);
        for (std::size_t x = 0; x < c.count(q); ++x) {
            for (std::size_t y = 0; y < c.count(q); ++y) {
                const auto rx = static_cast<Eigen::Index>(image[c.offset(q) + x] - r.offset(q));
                const auto ry = static_cast<Eigen::Index>(image[c.offset(q) + y] - r.offset(q));
                const auto old_entry = before(static_cast<Eigen::Index>(x), static_cast<Eigen::Index>(y));
                const auto new_entry = after(rx, ry);
                ledger.check("orientation_invariance/laplacian",
                             "q=" + std::to_string(q) + " (" + c.name(c.offset(q) + x) + ", " +
                                 c.name(c.offset(q) + y) + ")",
                             static_cast<long long>(x == y ? old_entry : std::abs(old_entry)),
                             static_cast<long long>(x == y ? new_entry : std::abs(new_entry)));
            }
        }
    }
}

} // namespace

DiffReport diff_all(const Complex& c, std::uint64_t seed)
{
    if (c.vertices().size() > kMaxVertices || c.size() > kMaxSimplices) {
        throw GuardRefusal("brute-force comparison is limited to " + std::to_string(kMaxVertices) + " vertices and " +
                           std::to_string(kMaxSimplices) + " simplices; got " +
                           std::to_string(c.vertices().size()) + " vertices and " + std::to_string(c.size()) +
                           " simplices");
    }
    const Reference ref(c);
    std::mt19937_64 rng(seed);
    Ledger ledger;
    Ledger diagnostics;
    diff_degrees(c, ref, ledger, diagnostics);
    diff_theorems(c, ref, ledger);
    diff_laplacians(c, ref, ledger, rng);
    diff_adjacency_matrices(c, ref, ledger);
    diff_walks(c, ref, ledger);
    diff_eigen(c, ref, ledger);
    diff_normalised(c, ref, ledger);
    diff_relabelled(c, ledger, rng);
    return {ledger.take(), diagnostics.take()};
}

} // namespace simplicial::oracle
