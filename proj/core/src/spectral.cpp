#include "simplicial/spectral.hpp"

#include "simplicial/errors.hpp"
#include "simplicial/rational.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <optional>
#include <string>

namespace simplicial::spectral {

namespace {

using Triplet = Eigen::Triplet<std::int64_t>;
using RealMatrix = Eigen::SparseMatrix<double>;

void drop_zeros(IntMatrix& m)
{
    m.prune([](Eigen::Index, Eigen::Index, const std::int64_t& v) { return v != 0; });
    m.makeCompressed();
}

IntMatrix zero(std::size_t rows, std::size_t cols)
{
    IntMatrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    m.makeCompressed();
    return m;
}

/// min(1, m) entrywise for a non-negative matrix.
IntMatrix indicator(IntMatrix m)
{
    drop_zeros(m);
    for (Eigen::Index k = 0; k < m.nonZeros(); ++k) {
        m.valuePtr()[k] = 1;
    }
    return m;
}

IntMatrix transposed(const IntMatrix& m)
{
    return IntMatrix(m.transpose());
}

std::vector<std::size_t> row_counts(const IntMatrix& m)
{
    std::vector<std::size_t> counts(static_cast<std::size_t>(m.rows()), 0);
    for (Eigen::Index col = 0; col < m.outerSize(); ++col) {
        for (IntMatrix::InnerIterator it(m, col); it; ++it) {
            if (it.value() != 0) {
                ++counts[static_cast<std::size_t>(it.row())];
            }
        }
    }
    return counts;
}

/// |B_{q,h}| with memoisation; out-of-range requests give nullptr.
class AbsBoundaries
{
public:
    explicit AbsBoundaries(const Complex& c)
        : m_complex(c)
    {}

    const IntMatrix* get(int q, int h)
    {
        if (h < 0 || q < h || q > m_complex.dim()) {
            return nullptr;
        }
        auto [it, inserted] = m_cache.try_emplace({q, h});
        if (inserted) {
            it->second = abs(boundary_matrix(m_complex, q, h));
        }
        return &it->second;
    }

private:
    const Complex& m_complex;
    std::map<std::pair<int, int>, IntMatrix> m_cache;
};

/// m_L(q,q';k): the q-simplex and the q'-simplex share a k-face. f_q x f_q'.
IntMatrix shares_face(AbsBoundaries& b, const Complex& c, int q, int qp, int k)
{
    const IntMatrix* left = b.get(q, q - k);
    const IntMatrix* right = b.get(qp, qp - k);
    if (k < 0 || !left || !right) {
        return zero(c.count(q), c.count(qp));
    }
    return indicator(transposed(*left) * *right);
}

/// m_U(q,q';k): some k-simplex contains both. f_q x f_q'.
IntMatrix shares_coface(AbsBoundaries& b, const Complex& c, int q, int qp, int k)
{
    const IntMatrix* left = b.get(k, k - q);
    const IntMatrix* right = b.get(k, k - qp);
    if (!left || !right) {
        return zero(c.count(q), c.count(qp));
    }
    return indicator(*left * transposed(*right));
}

/// adj^p between q-simplices and q'-simplices: m_L(p) (1 - m_L(p+1)) (1 - m_U(q+q'-p)).
IntMatrix adjacency_block(AbsBoundaries& b, const Complex& c, int q, int qp, int p)
{
    const IntMatrix lower = shares_face(b, c, q, qp, p);
    const IntMatrix lower_next = shares_face(b, c, q, qp, p + 1);
    const IntMatrix upper = shares_coface(b, c, q, qp, q + qp - p);
    const IntMatrix a = lower.cwiseProduct(lower_next);
    const IntMatrix d = lower.cwiseProduct(upper);
    IntMatrix out = lower - a - d + a.cwiseProduct(upper);
    drop_zeros(out);
    return out;
}

IntMatrix vertex_adjacency(AbsBoundaries& b, const Complex& c)
{
    const IntMatrix* e = b.get(1, 1);
    if (!e) {
        return zero(c.count(0), c.count(0));
    }
    IntMatrix g = indicator(*e * transposed(*e));
    g.prune([](Eigen::Index row, Eigen::Index col, const std::int64_t&) { return row != col; });
    g.makeCompressed();
    return g;
}

std::vector<std::size_t> exclude_self(std::vector<std::size_t> counts, const IntMatrix& same_dim)
{
    for (std::size_t j = 0; j < counts.size(); ++j) {
        const auto idx = static_cast<Eigen::Index>(j);
        if (same_dim.coeff(idx, idx) != 0) {
            --counts[j];
        }
    }
    return counts;
}

void add_into(std::vector<std::size_t>& total, const std::vector<std::size_t>& part)
{
    for (std::size_t j = 0; j < total.size(); ++j) {
        total[j] += part[j];
    }
}

std::vector<std::vector<std::size_t>> components_of(const IntMatrix& a)
{
    const auto n = static_cast<std::size_t>(a.rows());
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto root = [&](std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (Eigen::Index col = 0; col < a.outerSize(); ++col) {
        for (IntMatrix::InnerIterator it(a, col); it; ++it) {
            const std::size_t r1 = root(static_cast<std::size_t>(it.row()));
            const std::size_t r2 = root(static_cast<std::size_t>(col));
            if (r1 != r2) {
                parent[std::max(r1, r2)] = std::min(r1, r2);
            }
        }
    }
    std::map<std::size_t, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < n; ++i) {
        groups[root(i)].push_back(i);
    }
    std::vector<std::vector<std::size_t>> out;
    for (auto& [r, members] : groups) {
        out.push_back(std::move(members));
    }
    return out;
}

struct ComponentRun
{
    Eigen::VectorXd x;
    double lambda = 0.0;
    std::size_t iterations = 0;
    bool converged = false;
};

ComponentRun iterate(const RealMatrix& a, const std::vector<std::size_t>& members, const EigenOptions& options)
{
    ComponentRun run;
    run.x = Eigen::VectorXd::Zero(a.rows());
    for (std::size_t i : members) {
        run.x[static_cast<Eigen::Index>(i)] = 1.0 / static_cast<double>(members.size());
    }
    while (run.iterations < options.max_iterations) {
        Eigen::VectorXd next = a * run.x + run.x;
        next /= next.sum();
        ++run.iterations;
        const double change = (next - run.x).cwiseAbs().maxCoeff();
        run.x = std::move(next);
        if (change < options.tolerance) {
            run.converged = true;
            break;
        }
    }
    run.lambda = (a * run.x).sum() / run.x.sum();
    return run;
}

} // namespace

int incidence_sign(const Simplex& tau, const Simplex& sigma)
{
    if (sigma.empty() || !sigma.is_face_of(tau)) {
        return 0;
    }
    long long removed_positions = 0;
    long long h = 0;
    std::size_t k = 0;
    for (std::size_t pos = 0; pos < tau.size(); ++pos) {
        if (k < sigma.size() && sigma[k] == tau[pos]) {
            ++k;
        } else {
            removed_positions += static_cast<long long>(pos);
            ++h;
        }
    }
    const long long parity = removed_positions - h * (h - 1) / 2;
    return parity % 2 == 0 ? 1 : -1;
}

IntMatrix boundary_matrix(const Complex& c, int q, int h)
{
    if (h < 0 || q < h || q > c.dim()) {
        throw ArgumentError("boundary matrix needs 0 <= h <= q <= dim K (got q=" + std::to_string(q) +
                            ", h=" + std::to_string(h) + ")");
    }
    const int target = q - h;
    const auto rows = c.count(target);
    const auto cols = c.count(q);
    const SimplexIndex row_offset = c.offset(target);
    std::vector<Triplet> entries;
    entries.reserve(cols * static_cast<std::size_t>(binomial(q + 1, target + 1)));
    const auto columns = c.simplices(q);
    for (std::size_t j = 0; j < cols; ++j) {
        for (const Simplex& face : faces(columns[j], target)) {
            const SimplexIndex row = c.index_of(face) - row_offset;
            entries.emplace_back(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(j),
                                 incidence_sign(columns[j], face));
        }
    }
    IntMatrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    m.setFromTriplets(entries.begin(), entries.end());
    m.makeCompressed();
    return m;
}

long long oriented_degree(const Complex& c, const Simplex& a, const Simplex& b, int p, Side side)
{
    if (!c.contains(a) || !c.contains(b)) {
        throw MembershipError("simplex is not a member of the complex");
    }
    long long total = 0;
    if (side == Side::upper) {
        const Simplex u = union_of(a, b);
        const auto ui = c.find(u);
        if (!ui || u.dim() > p) {
            return 0;
        }
        auto visit = [&](const Simplex& tau) {
            if (tau.dim() == p) {
                total += incidence_sign(tau, a) * incidence_sign(tau, b);
            }
        };
        visit(u);
        for (SimplexIndex t : c.cofaces(*ui)) {
            visit(c.simplex(t));
        }
        return total;
    }
    const Simplex common = intersection_of(a, b);
    if (p < 0 || common.empty() || common.dim() < p) {
        return 0;
    }
    for (const Simplex& tau : faces(common, p)) {
        total += incidence_sign(a, tau) * incidence_sign(b, tau);
    }
    return total;
}

LaplacianBundle laplacian(const Complex& c, int q, int h, int h_prime)
{
    if (q < 0 || q > c.dim()) {
        throw ArgumentError("laplacian needs 0 <= q <= dim K");
    }
    if (h < 1 || h_prime < 1) {
        throw ArgumentError("laplacian needs h >= 1 and h' >= 1");
    }
    const std::size_t n = c.count(q);
    LaplacianBundle bundle{q, h, h_prime, zero(n, n), zero(n, n), zero(n, n)};
    if (q + h <= c.dim()) {
        const IntMatrix b = boundary_matrix(c, q + h, h);
        bundle.up = b * transposed(b);
        drop_zeros(bundle.up);
    }
    if (q - h_prime >= 0) {
        const IntMatrix b = boundary_matrix(c, q, h_prime);
        bundle.down = transposed(b) * b;
        drop_zeros(bundle.down);
    }
    bundle.total = bundle.up + bundle.down;
    drop_zeros(bundle.total);
    return bundle;
}

IntMatrix adjacency_matrix(const Complex& c, int q, int p)
{
    adjacency::validate(c, q, DegreeQuery::adjacency(p));
    AbsBoundaries b(c);
    if (q == 0) {
        return vertex_adjacency(b, c);
    }
    return adjacency_block(b, c, q, q, p);
}

adjacency::DegreeReport theorem_degrees(const Complex& c, int q, int p, TheoremFamily family)
{
    DegreeQuery query;
    switch (family) {
    case TheoremFamily::lower: query = DegreeQuery::lower(p); break;
    case TheoremFamily::upper: query = DegreeQuery::upper(p); break;
    case TheoremFamily::adjacency: query = DegreeQuery::adjacency(p); break;
    case TheoremFamily::maximal_adjacency: query = DegreeQuery::maximal_adjacency(p); break;
    }
    adjacency::validate(c, q, query);

    AbsBoundaries b(c);
    const std::size_t n = c.count(q);
    adjacency::DegreeReport report{query, q, std::vector<std::size_t>(n, 0)};

    switch (family) {
    case TheoremFamily::lower:
        for (int qp = p; qp <= c.dim(); ++qp) {
            const IntMatrix m = shares_face(b, c, q, qp, p);
            add_into(report.values, qp == q ? exclude_self(row_counts(m), m) : row_counts(m));
        }
        break;
    case TheoremFamily::upper:
        for (int qp = 0; qp <= std::min(p, c.dim()); ++qp) {
            const IntMatrix m = shares_coface(b, c, q, qp, p);
            add_into(report.values, qp == q ? exclude_self(row_counts(m), m) : row_counts(m));
        }
        break;
    case TheoremFamily::adjacency:
    case TheoremFamily::maximal_adjacency: {
        if (q == 0) {
            report.values = row_counts(vertex_adjacency(b, c));
            break;
        }
        std::vector<IntMatrix> blocks(static_cast<std::size_t>(c.dim()) + 1);
        for (int qp = p; qp <= c.dim(); ++qp) {
            blocks[static_cast<std::size_t>(qp)] = adjacency_block(b, c, q, qp, p);
            add_into(report.values, row_counts(blocks[static_cast<std::size_t>(qp)]));
        }
        if (family == TheoremFamily::adjacency) {
            break;
        }
        // Delta_{q',k}: the q'-simplex k is adjacent and one of its proper cofaces is as well.
        for (int qp = p; qp <= c.dim(); ++qp) {
            const IntMatrix& direct = blocks[static_cast<std::size_t>(qp)];
            IntMatrix via_coface = zero(n, c.count(qp));
            for (int qpp = qp + 1; qpp <= c.dim(); ++qpp) {
                const IntMatrix* inc = b.get(qpp, qpp - qp);
                via_coface += blocks[static_cast<std::size_t>(qpp)] * transposed(*inc);
            }
            const IntMatrix delta = indicator(via_coface).cwiseProduct(direct);
            const auto minus = row_counts(delta);
            for (std::size_t j = 0; j < n; ++j) {
                report.values[j] -= minus[j];
            }
        }
        break;
    }
    }
    return report;
}

EigenResult principal_eigenvector(const IntMatrix& a, const EigenOptions& options)
{
    if (a.rows() != a.cols()) {
        throw ArgumentError("eigenvector centrality needs a square matrix");
    }
    IntMatrix asym = a - transposed(a);
    drop_zeros(asym);
    if (asym.nonZeros() != 0) {
        throw ArgumentError("eigenvector centrality needs a symmetric matrix");
    }
    IntMatrix pattern = a;
    drop_zeros(pattern);
    for (Eigen::Index k = 0; k < pattern.nonZeros(); ++k) {
        if (pattern.valuePtr()[k] < 0) {
            throw ArgumentError("eigenvector centrality needs non-negative entries");
        }
    }

    const auto n = static_cast<std::size_t>(a.rows());
    EigenResult result;
    if (n == 0) {
        result.degenerate = true;
        return result;
    }
    if (pattern.nonZeros() == 0) {
        result.vector.assign(n, 1.0 / static_cast<double>(n));
        result.degenerate = true;
        result.component.resize(n);
        std::iota(result.component.begin(), result.component.end(), 0);
        return result;
    }

    const RealMatrix real = pattern.cast<double>();
    std::optional<ComponentRun> best;
    std::vector<std::size_t> best_members;
    std::size_t total_iterations = 0;
    for (const auto& members : components_of(pattern)) {
        ComponentRun run = iterate(real, members, options);
        total_iterations += run.iterations;
        if (!best || run.lambda > best->lambda + 1e-9) {
            best = std::move(run);
            best_members = members;
        }
    }

    result.eigenvalue = best->lambda;
    result.iterations = total_iterations;
    result.converged = best->converged;
    result.component = best_members;
    result.vector.assign(best->x.data(), best->x.data() + best->x.size());
    for (double& v : result.vector) {
        v = std::max(v, 0.0);
    }
    const Eigen::VectorXd r = real * best->x - best->lambda * best->x;
    result.residual = r.cwiseAbs().maxCoeff();
    return result;
}

DenseIntMatrix to_dense(const IntMatrix& m)
{
    return DenseIntMatrix(m);
}

IntMatrix abs(const IntMatrix& m)
{
    IntMatrix out = m;
    out.makeCompressed();
    for (Eigen::Index k = 0; k < out.nonZeros(); ++k) {
        out.valuePtr()[k] = std::abs(out.valuePtr()[k]);
    }
    return out;
}

} // namespace simplicial::spectral
