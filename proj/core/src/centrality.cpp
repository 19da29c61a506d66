#include "simplicial/centrality.hpp"

#include "simplicial/adjacency.hpp"
#include "simplicial/errors.hpp"
#include "simplicial/spectral.hpp"

#include <algorithm>
#include <sstream>

namespace simplicial::centrality {

namespace {

Value ratio(const BigInt& numerator, const BigInt& denominator)
{
    if (denominator <= 0) {
        if (numerator == 0) {
            return Value::of(Rational(0)).flag("zero_denominator");
        }
        throw UndefinedResultError("normalising denominator is " + denominator.str() + " for a numerator of " +
                                   numerator.str());
    }
    return Value::of(Rational(numerator, denominator));
}

std::size_t deg(const Complex& c, SimplexIndex i, const DegreeQuery& query)
{
    return adjacency::degree(c, c.simplex(i), query);
}

/// M_q = sum_{h=1}^{dim K - q} f_q C(f_0 - (q+1), q+h)
BigInt m_constant(const Complex& c, int q)
{
    const auto f0 = static_cast<long long>(c.count(0));
    BigInt total = 0;
    for (int h = 1; h <= c.dim() - q; ++h) {
        total += BigInt(c.count(q)) * binomial(f0 - (q + 1), q + h);
    }
    return total;
}

/// sum_{q'=p+1}^{dim K} C(f_0 - (p+1), q') - 1
BigInt adjacency_slots(const Complex& c, int p)
{
    const auto f0 = static_cast<long long>(c.count(0));
    BigInt total = -1;
    for (int qp = p + 1; qp <= c.dim(); ++qp) {
        total += binomial(f0 - (p + 1), qp);
    }
    return total;
}

/// N_q = sum_{p=0}^{q-1} f_q C(q+1, p+1) (adjacency_slots(p))
BigInt n_constant(const Complex& c, int q)
{
    BigInt total = 0;
    for (int p = 0; p < q; ++p) {
        total += BigInt(c.count(q)) * binomial(q + 1, p + 1) * adjacency_slots(c, p);
    }
    return total;
}

std::string to_text(double x)
{
    std::ostringstream out;
    out.precision(17);
    out << x;
    return out.str();
}

} // namespace

Value vertex_upper_degree_centrality(const Complex& c, const Simplex& v, int h, bool strict)
{
    const SimplexIndex i = c.index_of(v);
    if (v.dim() != 0) {
        throw ArgumentError("vertex centrality needs a 0-simplex");
    }
    if (h < 1 || h > c.dim()) {
        throw ArgumentError("vertex upper centrality needs 1 <= h <= dim K");
    }
    const auto query = strict ? DegreeQuery::strict_upper_step(h) : DegreeQuery::upper_step(h);
    return ratio(deg(c, i, query), binomial(static_cast<long long>(c.count(0)) - 1, h));
}

Value upper_degree_centrality(const Complex& c, const Simplex& s, int h, bool strict)
{
    const SimplexIndex i = c.index_of(s);
    if (h < 1) {
        throw ArgumentError("upper degree centrality needs h >= 1");
    }
    const int q = s.dim();
    const auto query = strict ? DegreeQuery::strict_upper_step(h) : DegreeQuery::upper_step(h);
    Value v = ratio(deg(c, i, query), binomial(static_cast<long long>(c.count(0)) - (q + 1), q + h));
    if (v.exact && *v.exact > 1) {
        v.flag("out_of_range");
    }
    return v;
}

Value adjacency_degree_centrality(const Complex& c, const Simplex& s, int p, bool maximal)
{
    const SimplexIndex i = c.index_of(s);
    const int q = s.dim();
    if (p < 0 || p >= q) {
        throw ArgumentError("adjacency degree centrality needs 0 <= p < q");
    }
    const auto query = maximal ? DegreeQuery::maximal_adjacency(p) : DegreeQuery::adjacency(p);
    return ratio(deg(c, i, query), binomial(q + 1, p + 1) * adjacency_slots(c, p));
}

Value maximal_simplicial_degree_centrality(const Complex& c, const Simplex& s)
{
    const SimplexIndex i = c.index_of(s);
    if (c.size() < 2) {
        throw UndefinedResultError("maximal simplicial centrality needs at least two simplices");
    }
    return ratio(deg(c, i, DegreeQuery::maximal_simplicial()), BigInt(c.size()) - 1);
}

Value average_degree(const Complex& c, std::optional<int> q, AverageKind kind)
{
    int first = 0;
    int last = c.dim();
    if (q) {
        if (*q < 0 || *q > c.dim()) {
            throw ArgumentError("average degree needs 0 <= q <= dim K");
        }
        first = last = *q;
    }
    BigInt numerator = 0;
    BigInt denominator = 0;
    for (int d = first; d <= last; ++d) {
        DegreeQuery query;
        BigInt constant;
        switch (kind) {
        case AverageKind::strict_upper:
            query = DegreeQuery::strict_upper_sum();
            constant = m_constant(c, d);
            break;
        case AverageKind::maximal_adjacency:
            query = DegreeQuery::maximal_adjacency_sum();
            constant = n_constant(c, d);
            break;
        case AverageKind::maximal:
            query = DegreeQuery::maximal_simplicial();
            constant = m_constant(c, d) + n_constant(c, d);
            break;
        }
        for (std::size_t k = 0; k < c.count(d); ++k) {
            numerator += deg(c, c.offset(d) + k, query);
        }
        denominator += constant;
    }
    return ratio(numerator, denominator);
}

Report eigenvector_centrality(const Complex& c, int q, int p)
{
    const spectral::EigenResult result = spectral::principal_eigenvector(spectral::adjacency_matrix(c, q, p));
    Report report;
    report.measure = "eigenvector";
    report.params = {{"q", std::to_string(q)}, {"p", std::to_string(p)}};
    for (std::size_t k = 0; k < c.count(q); ++k) {
        Value v = Value::approx(result.vector[k]);
        if (result.degenerate) {
            v.flag("degenerate");
        }
        report.rows.push_back({c.name(c.offset(q) + k), v});
    }
    std::string component;
    for (std::size_t k : result.component) {
        component += (component.empty() ? "" : " ") + c.name(c.offset(q) + k);
    }
    report.metadata = {
        {"eigenvalue", to_text(result.eigenvalue)},
        {"residual", to_text(result.residual)},
        {"iterations", std::to_string(result.iterations)},
        {"degenerate", result.degenerate ? "true" : "false"},
        {"converged", result.converged ? "true" : "false"},
        {"component", component},
    };
    return report;
}

std::vector<std::pair<SimplexIndex, Value>> closeness_all(const walks::NearnessGraph& g,
                                                          const walks::WalkFilter& filter, ClosenessVariant variant)
{
    const auto nodes = walks::admitted_nodes(g, filter);
    std::optional<walks::ComponentPartition> partition;
    if (variant == ClosenessVariant::reciprocal_sum) {
        partition = walks::components(g, filter);
    }
    std::vector<std::pair<SimplexIndex, Value>> out;
    for (SimplexIndex s : nodes) {
        const walks::DistanceRow row = walks::geodesic_counts(g, s, filter);
        if (variant == ClosenessVariant::harmonic) {
            Rational total = 0;
            for (SimplexIndex t : nodes) {
                if (t != s && row.dist[t].is_finite()) {
                    total += Rational(1, row.dist[t].steps());
                }
            }
            out.emplace_back(s, Value::of(total));
            continue;
        }
        const auto& members = partition->classes[*partition->class_of(s)];
        if (members.size() < 2) {
            out.emplace_back(s, Value::of(Rational(0)).flag("degenerate"));
            continue;
        }
        BigInt total = 0;
        for (SimplexIndex t : members) {
            total += row.dist[t].steps();
        }
        out.emplace_back(s, Value::of(Rational(1, total)));
    }
    return out;
}

Value closeness(const walks::NearnessGraph& g, const Simplex& s, const walks::WalkFilter& filter,
                ClosenessVariant variant)
{
    const SimplexIndex i = g.complex().index_of(s);
    walks::p_distance(g, s, s, filter);  // validates admission
    for (auto& [idx, value] : closeness_all(g, filter, variant)) {
        if (idx == i) {
            return value;
        }
    }
    return Value::of(Rational(0));
}

std::vector<std::pair<SimplexIndex, Value>> betweenness_all(const walks::NearnessGraph& g,
                                                            const walks::WalkFilter& filter)
{
    const walks::ComponentPartition partition = walks::components(g, filter);
    const std::vector<Rational> raw = walks::pass_through(g, filter);
    std::vector<std::pair<SimplexIndex, Value>> out;
    for (SimplexIndex s : walks::admitted_nodes(g, filter)) {
        const std::size_t n = partition.classes[*partition.class_of(s)].size();
        if (n < 3) {
            out.emplace_back(s, Value::of(Rational(0)).flag("degenerate"));
            continue;
        }
        out.emplace_back(s, Value::of(raw[s] * 2 / (BigInt(n - 1) * (n - 2))));
    }
    return out;
}

Value betweenness(const walks::NearnessGraph& g, const Simplex& s, const walks::WalkFilter& filter)
{
    const SimplexIndex i = g.complex().index_of(s);
    walks::p_distance(g, s, s, filter);
    for (auto& [idx, value] : betweenness_all(g, filter)) {
        if (idx == i) {
            return value;
        }
    }
    return Value::of(Rational(0));
}

NeighbourSet maximal_neighbours(const Complex& c, const Simplex& s)
{
    NeighbourSet out;
    out.center = c.index_of(s);
    const int q = s.dim();
    for (SimplexIndex j = 0; j < c.size(); ++j) {
        if (j == out.center) {
            continue;
        }
        const Simplex& t = c.simplex(j);
        if (c.is_facet(j) && t.dim() > q && s.is_face_of(t)) {
            out.members.push_back(j);
            continue;
        }
        if (q == 0) {
            continue;
        }
        const std::size_t shared = intersection_size(s, t);
        if (shared >= 1 && shared <= static_cast<std::size_t>(q) &&
            adjacency::maximal_p_adjacent(c, t, s, static_cast<int>(shared) - 1)) {
            out.members.push_back(j);
        }
    }
    return out;
}

bool linked(const walks::NearnessGraph& g, const Simplex& a, const Simplex& b, const Simplex& center)
{
    const Complex& c = g.complex();
    const SimplexIndex ia = c.index_of(a);
    const SimplexIndex ib = c.index_of(b);
    c.index_of(center);
    if (ia == ib) {
        return false;
    }
    const Simplex shared = intersection_of(a, b);
    for (VertexId v : shared.vertices()) {
        if (!center.contains(v)) {
            return true;
        }
    }
    if (center.dim() == 0) {
        return false;
    }
    if (g.level(ia, ib)) {
        return false;  // 0-distance 1
    }
    for (const walks::Arc& first : g.arcs(ia)) {
        const SimplexIndex m = first.to;
        if (g.level(m, ib) && !c.simplex(m).is_face_of(center)) {
            return true;
        }
    }
    return false;
}

NeighbourSet neighbourhood(const walks::NearnessGraph& g, const Simplex& s)
{
    NeighbourSet out = maximal_neighbours(g.complex(), s);
    const Complex& c = g.complex();
    for (std::size_t x = 0; x < out.members.size(); ++x) {
        for (std::size_t y = x + 1; y < out.members.size(); ++y) {
            if (linked(g, c.simplex(out.members[x]), c.simplex(out.members[y]), s)) {
                out.links.emplace_back(out.members[x], out.members[y]);
            }
        }
    }
    return out;
}

Value clustering(const walks::NearnessGraph& g, const Simplex& s)
{
    const NeighbourSet hood = neighbourhood(g, s);
    const std::size_t d = hood.members.size();
    if (d <= 1) {
        return Value::of(Rational(0));
    }
    return Value::of(Rational(BigInt(hood.links.size()), BigInt(d) * (d - 1) / 2));
}

} // namespace simplicial::centrality
