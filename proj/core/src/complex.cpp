#include "simplicial/complex.hpp"

#include "simplicial/errors.hpp"

#include <algorithm>
#include <iterator>
#include <set>
#include <unordered_set>

namespace simplicial {

namespace {

// Closure and coface lists are enumerated by bitmask over each simplex.
constexpr std::size_t kMaxFacetVertices = 16;

} // namespace

Simplex::Simplex(std::vector<VertexId> vertices)
    : m_vertices(std::move(vertices))
{
    if (m_vertices.empty()) {
        throw ArgumentError("a simplex needs at least one vertex");
    }
    std::sort(m_vertices.begin(), m_vertices.end());
    if (std::adjacent_find(m_vertices.begin(), m_vertices.end()) != m_vertices.end()) {
        throw ArgumentError("repeated vertex in simplex");
    }
}

Simplex::Simplex(std::initializer_list<VertexId> vertices)
    : Simplex(std::vector<VertexId>(vertices))
{}

Simplex Simplex::from_sorted(std::vector<VertexId> vertices)
{
    Simplex s;
    s.m_vertices = std::move(vertices);
    return s;
}

bool Simplex::contains(VertexId v) const
{
    return std::binary_search(m_vertices.begin(), m_vertices.end(), v);
}

bool Simplex::is_face_of(const Simplex& other) const
{
    return std::includes(other.m_vertices.begin(), other.m_vertices.end(), m_vertices.begin(), m_vertices.end());
}

std::size_t SimplexHash::operator()(const Simplex& s) const noexcept
{
    // FNV-1a over the ids
    std::uint64_t h = 1469598103934665603ULL;
    for (VertexId v : s.vertices()) {
        h ^= v;
        h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
}

std::size_t intersection_size(const Simplex& a, const Simplex& b)
{
    auto x = a.vertices();
    auto y = b.vertices();
    std::size_t i = 0, j = 0, n = 0;
    while (i < x.size() && j < y.size()) {
        if (x[i] < y[j]) {
            ++i;
        } else if (y[j] < x[i]) {
            ++j;
        } else {
            ++n;
            ++i;
            ++j;
        }
    }
    return n;
}

Simplex intersection_of(const Simplex& a, const Simplex& b)
{
    std::vector<VertexId> out;
    std::set_intersection(a.vertices().begin(), a.vertices().end(), b.vertices().begin(), b.vertices().end(),
                          std::back_inserter(out));
    return Simplex::from_sorted(std::move(out));
}

Simplex union_of(const Simplex& a, const Simplex& b)
{
    std::vector<VertexId> out;
    out.reserve(a.size() + b.size());
    std::set_union(a.vertices().begin(), a.vertices().end(), b.vertices().begin(), b.vertices().end(),
                   std::back_inserter(out));
    return Simplex::from_sorted(std::move(out));
}

std::vector<Simplex> faces(const Simplex& s, int p)
{
    if (p < 0 || p > s.dim()) {
        throw ArgumentError("face dimension " + std::to_string(p) + " outside [0, " + std::to_string(s.dim()) + "]");
    }
    const std::size_t n = s.size();
    const std::size_t k = static_cast<std::size_t>(p) + 1;
    std::vector<Simplex> out;
    // positions chosen in lexicographic order
    std::vector<std::size_t> pick(k);
    for (std::size_t i = 0; i < k; ++i) {
        pick[i] = i;
    }
    while (true) {
        std::vector<VertexId> v(k);
        for (std::size_t i = 0; i < k; ++i) {
            v[i] = s[pick[i]];
        }
        out.push_back(Simplex::from_sorted(std::move(v)));
        std::size_t i = k;
        while (i > 0 && pick[i - 1] == n - k + (i - 1)) {
            --i;
        }
        if (i == 0) {
            break;
        }
        ++pick[i - 1];
        for (std::size_t j = i; j < k; ++j) {
            pick[j] = pick[j - 1] + 1;
        }
    }
    return out;
}

VertexTable::VertexTable(std::vector<std::string> labels)
    : m_labels(std::move(labels))
{
    std::sort(m_labels.begin(), m_labels.end());
    m_labels.erase(std::unique(m_labels.begin(), m_labels.end()), m_labels.end());
    for (std::size_t i = 0; i < m_labels.size(); ++i) {
        m_ids.emplace(m_labels[i], static_cast<VertexId>(i));
    }
}

std::optional<VertexId> VertexTable::find(std::string_view label) const
{
    auto it = m_ids.find(std::string(label));
    if (it == m_ids.end()) {
        return std::nullopt;
    }
    return it->second;
}

VertexId VertexTable::id(std::string_view label) const
{
    if (auto id = find(label)) {
        return *id;
    }
    throw MembershipError("unknown vertex label '" + std::string(label) + "'");
}

ChainBasis::ChainBasis(const Complex& complex, int q)
    : m_complex(&complex)
    , m_q(q)
    , m_offset(q >= 0 && q <= complex.dim() ? complex.offset(q) : 0)
    , m_simplices(complex.simplices(q))
{}

std::optional<std::size_t> ChainBasis::find(const Simplex& s) const
{
    if (s.dim() != m_q) {
        return std::nullopt;
    }
    auto global = m_complex->find(s);
    if (!global) {
        return std::nullopt;
    }
    return *global - m_offset;
}

std::size_t ChainBasis::position(const Simplex& s) const
{
    if (auto pos = find(s)) {
        return *pos;
    }
    throw MembershipError("simplex is not in the " + std::to_string(m_q) + "-chain basis");
}

Complex Complex::from_facets(std::span<const std::vector<std::string>> facets)
{
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < facets.size(); ++i) {
        const auto& set = facets[i];
        if (set.empty()) {
            throw ParseError(i + 1, "empty vertex set");
        }
        std::set<std::string_view> seen;
        for (const auto& label : set) {
            if (!seen.insert(label).second) {
                throw ParseError(i + 1, "duplicate vertex label '" + label + "'");
            }
            labels.push_back(label);
        }
    }
    if (labels.empty()) {
        throw EmptyComplexError();
    }
    VertexTable table(std::move(labels));
    std::vector<Simplex> generators;
    generators.reserve(facets.size());
    for (const auto& set : facets) {
        std::vector<VertexId> ids;
        ids.reserve(set.size());
        for (const auto& label : set) {
            ids.push_back(table.id(label));
        }
        generators.emplace_back(std::move(ids));
    }
    return from_simplices(std::move(table), generators);
}

Complex Complex::from_facets(std::initializer_list<std::vector<std::string>> facets)
{
    return from_facets(std::span<const std::vector<std::string>>(facets.begin(), facets.size()));
}

Complex Complex::from_simplices(VertexTable vertices, std::span<const Simplex> generators)
{
    if (generators.empty()) {
        throw EmptyComplexError();
    }
    std::unordered_set<Simplex, SimplexHash> closure;
    for (const auto& g : generators) {
        if (g.empty()) {
            throw ArgumentError("empty simplex in generator list");
        }
        for (VertexId v : g.vertices()) {
            if (v >= vertices.size()) {
                throw ArgumentError("vertex id " + std::to_string(v) + " outside the vertex table");
            }
        }
        if (g.size() > kMaxFacetVertices) {
            throw ArgumentError("simplex with " + std::to_string(g.size()) + " vertices exceeds the limit of " +
                                std::to_string(kMaxFacetVertices));
        }
        if (closure.contains(g)) {
            continue;
        }
        const std::size_t n = g.size();
        for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
            std::vector<VertexId> v;
            for (std::size_t i = 0; i < n; ++i) {
                if (mask & (1u << i)) {
                    v.push_back(g[i]);
                }
            }
            closure.insert(Simplex::from_sorted(std::move(v)));
        }
    }

    // Drop labels that no simplex uses (possible when called with a wider table).
    std::vector<char> used(vertices.size(), 0);
    for (const auto& s : closure) {
        if (s.size() == 1) {
            used[s[0]] = 1;
        }
    }
    Complex c;
    if (std::find(used.begin(), used.end(), 0) != used.end()) {
        std::vector<std::string> kept;
        std::vector<VertexId> remap(vertices.size(), 0);
        for (VertexId v = 0; v < vertices.size(); ++v) {
            if (used[v]) {
                remap[v] = static_cast<VertexId>(kept.size());
                kept.push_back(vertices.label(v));
            }
        }
        std::unordered_set<Simplex, SimplexHash> renamed;
        for (const auto& s : closure) {
            std::vector<VertexId> v;
            for (VertexId x : s.vertices()) {
                v.push_back(remap[x]);
            }
            renamed.insert(Simplex::from_sorted(std::move(v)));
        }
        closure = std::move(renamed);
        c.m_vertices = VertexTable(std::move(kept));
    } else {
        c.m_vertices = std::move(vertices);
    }
    c.finalize(std::vector<Simplex>(closure.begin(), closure.end()));
    return c;
}

void Complex::finalize(std::vector<Simplex> all)
{
    std::sort(all.begin(), all.end(), [](const Simplex& a, const Simplex& b) {
        if (a.dim() != b.dim()) {
            return a.dim() < b.dim();
        }
        return a < b;
    });
    m_simplices = std::move(all);
    const int top = m_simplices.back().dim();
    m_dim_offset.assign(static_cast<std::size_t>(top) + 2, 0);
    for (const auto& s : m_simplices) {
        ++m_dim_offset[static_cast<std::size_t>(s.dim()) + 1];
    }
    for (std::size_t q = 1; q < m_dim_offset.size(); ++q) {
        m_dim_offset[q] += m_dim_offset[q - 1];
    }
    m_index.reserve(m_simplices.size());
    for (SimplexIndex i = 0; i < m_simplices.size(); ++i) {
        m_index.emplace(m_simplices[i], i);
    }

    m_cofaces.assign(m_simplices.size(), {});
    for (SimplexIndex t = 0; t < m_simplices.size(); ++t) {
        const Simplex& tau = m_simplices[t];
        const std::size_t n = tau.size();
        for (std::uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
            std::vector<VertexId> v;
            for (std::size_t i = 0; i < n; ++i) {
                if (mask & (1u << i)) {
                    v.push_back(tau[i]);
                }
            }
            m_cofaces[m_index.at(Simplex::from_sorted(std::move(v)))].push_back(t);
        }
    }
    m_facet.assign(m_simplices.size(), 0);
    m_max_coface_dim.assign(m_simplices.size(), 0);
    for (SimplexIndex i = 0; i < m_simplices.size(); ++i) {
        auto& cof = m_cofaces[i];
        std::sort(cof.begin(), cof.end());
        m_facet[i] = cof.empty() ? 1 : 0;
        m_max_coface_dim[i] = cof.empty() ? m_simplices[i].dim() : m_simplices[cof.back()].dim();
    }
}

std::vector<std::size_t> Complex::f_vector() const
{
    std::vector<std::size_t> f;
    for (int q = 0; q <= dim(); ++q) {
        f.push_back(count(q));
    }
    return f;
}

std::size_t Complex::count(int q) const
{
    if (q < 0 || q > dim()) {
        return 0;
    }
    return m_dim_offset[static_cast<std::size_t>(q) + 1] - m_dim_offset[static_cast<std::size_t>(q)];
}

std::span<const Simplex> Complex::simplices(int q) const
{
    if (q < 0 || q > dim()) {
        return {};
    }
    return std::span<const Simplex>(m_simplices).subspan(m_dim_offset[static_cast<std::size_t>(q)], count(q));
}

SimplexIndex Complex::offset(int q) const
{
    if (q < 0 || q > dim()) {
        throw ArgumentError("dimension " + std::to_string(q) + " outside [0, " + std::to_string(dim()) + "]");
    }
    return m_dim_offset[static_cast<std::size_t>(q)];
}

std::optional<SimplexIndex> Complex::find(const Simplex& s) const
{
    auto it = m_index.find(s);
    if (it == m_index.end()) {
        return std::nullopt;
    }
    return it->second;
}

SimplexIndex Complex::index_of(const Simplex& s) const
{
    if (auto i = find(s)) {
        return *i;
    }
    throw MembershipError("simplex is not a member of the complex");
}

std::vector<SimplexIndex> Complex::facets() const
{
    std::vector<SimplexIndex> out;
    for (SimplexIndex i = 0; i < m_simplices.size(); ++i) {
        if (m_facet[i]) {
            out.push_back(i);
        }
    }
    return out;
}

std::string Complex::name(const Simplex& s, std::string_view separator) const
{
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i > 0) {
            out += separator;
        }
        out += m_vertices.label(s[i]);
    }
    return out;
}

std::vector<SimplexIndex> facets_containing(const Complex& c, const Simplex& s)
{
    const SimplexIndex i = c.index_of(s);
    std::vector<SimplexIndex> out;
    if (c.is_facet(i)) {
        out.push_back(i);
    }
    for (SimplexIndex t : c.cofaces(i)) {
        if (c.is_facet(t)) {
            out.push_back(t);
        }
    }
    return out;
}

} // namespace simplicial
