#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace simplicial {

using VertexId = std::uint32_t;

/// Index of a simplex in the global order of its complex (dimension, then lexicographic).
using SimplexIndex = std::size_t;

/**
 * A finite simplex stored as its strictly increasing vertex ids.
 *
 * The ascending order is also the canonical orientation [v_0, ..., v_q].
 */
class Simplex
{
public:
    Simplex() = default;
    /// Sorts the ids; throws ArgumentError on an empty list or a repeated id.
    explicit Simplex(std::vector<VertexId> vertices);
    Simplex(std::initializer_list<VertexId> vertices);

    /// Caller guarantees `vertices` is strictly increasing and non-empty.
    static Simplex from_sorted(std::vector<VertexId> vertices);

    int dim() const noexcept { return static_cast<int>(m_vertices.size()) - 1; }
    std::size_t size() const noexcept { return m_vertices.size(); }
    bool empty() const noexcept { return m_vertices.empty(); }
    std::span<const VertexId> vertices() const noexcept { return m_vertices; }
    VertexId operator[](std::size_t i) const { return m_vertices[i]; }

    bool contains(VertexId v) const;
    /// True when every vertex of `*this` is a vertex of `other` (including equality).
    bool is_face_of(const Simplex& other) const;

    friend bool operator==(const Simplex&, const Simplex&) = default;
    friend auto operator<=>(const Simplex& a, const Simplex& b) { return a.m_vertices <=> b.m_vertices; }

private:
    std::vector<VertexId> m_vertices;
};

struct SimplexHash
{
    std::size_t operator()(const Simplex& s) const noexcept;
};

std::size_t intersection_size(const Simplex& a, const Simplex& b);
/// Empty simplex when the vertex sets are disjoint.
Simplex intersection_of(const Simplex& a, const Simplex& b);
Simplex union_of(const Simplex& a, const Simplex& b);

/// All p-faces of `s`, lexicographically ordered. Throws ArgumentError unless 0 <= p <= dim s.
std::vector<Simplex> faces(const Simplex& s, int p);

/// Text labels of the vertices; ids follow the lexicographic order of the labels.
class VertexTable
{
public:
    VertexTable() = default;
    /// Duplicates are removed; ids are assigned by sorted position.
    explicit VertexTable(std::vector<std::string> labels);

    std::size_t size() const noexcept { return m_labels.size(); }
    const std::string& label(VertexId id) const { return m_labels.at(id); }
    std::span<const std::string> labels() const noexcept { return m_labels; }
    std::optional<VertexId> find(std::string_view label) const;
    VertexId id(std::string_view label) const;

private:
    std::vector<std::string> m_labels;
    std::unordered_map<std::string, VertexId> m_ids;
};

class Complex;

/// Ordered basis of the q-chains: the q-simplices in lexicographic order.
class ChainBasis
{
public:
    ChainBasis(const Complex& complex, int q);

    int dim() const noexcept { return m_q; }
    std::size_t size() const noexcept { return m_simplices.size(); }
    const Simplex& operator[](std::size_t i) const { return m_simplices[i]; }
    auto begin() const noexcept { return m_simplices.begin(); }
    auto end() const noexcept { return m_simplices.end(); }
    /// Position of `s` in this basis; throws MembershipError.
    std::size_t position(const Simplex& s) const;
    std::optional<std::size_t> find(const Simplex& s) const;
    SimplexIndex global_index(std::size_t position) const { return m_offset + position; }

private:
    const Complex* m_complex;
    int m_q;
    std::size_t m_offset;
    std::span<const Simplex> m_simplices;
};

/**
 * An immutable, downward-closed finite simplicial complex.
 *
 * Simplices are kept in one global order: by dimension, then lexicographically on
 * vertex ids. Every matrix row/column and every report follows that order.
 */
class Complex
{
public:
    /// Downward closure of the given label sets. Set i is reported as line i+1 on error.
    static Complex from_facets(std::span<const std::vector<std::string>> facets);
    static Complex from_facets(std::initializer_list<std::vector<std::string>> facets);
    /// Downward closure of simplices over an existing vertex table.
    static Complex from_simplices(VertexTable vertices, std::span<const Simplex> generators);

    int dim() const noexcept { return static_cast<int>(m_dim_offset.size()) - 2; }
    std::size_t size() const noexcept { return m_simplices.size(); }
    const VertexTable& vertices() const noexcept { return m_vertices; }

    std::vector<std::size_t> f_vector() const;
    /// Number of q-simplices; 0 outside 0..dim.
    std::size_t count(int q) const;

    std::span<const Simplex> simplices() const noexcept { return m_simplices; }
    std::span<const Simplex> simplices(int q) const;
    ChainBasis basis(int q) const { return ChainBasis(*this, q); }
    SimplexIndex offset(int q) const;

    const Simplex& simplex(SimplexIndex i) const { return m_simplices.at(i); }
    int dim_of(SimplexIndex i) const { return m_simplices.at(i).dim(); }

    bool contains(const Simplex& s) const { return m_index.contains(s); }
    std::optional<SimplexIndex> find(const Simplex& s) const;
    /// Throws MembershipError when `s` is not in the complex.
    SimplexIndex index_of(const Simplex& s) const;

    bool is_facet(SimplexIndex i) const { return m_facet.at(i) != 0; }
    std::vector<SimplexIndex> facets() const;
    /// Every simplex properly containing simplex `i`, in global order.
    std::span<const SimplexIndex> cofaces(SimplexIndex i) const { return m_cofaces.at(i); }
    /// Largest dimension of a simplex containing simplex `i` (its own dimension for a facet).
    int max_coface_dim(SimplexIndex i) const { return m_max_coface_dim.at(i); }

    /// Labels joined by `separator`, e.g. "a-b-c".
    std::string name(const Simplex& s, std::string_view separator = "-") const;
    std::string name(SimplexIndex i, std::string_view separator = "-") const { return name(simplex(i), separator); }

private:
    Complex() = default;
    void finalize(std::vector<Simplex> all);

    VertexTable m_vertices;
    std::vector<Simplex> m_simplices;
    std::vector<std::size_t> m_dim_offset;
    std::unordered_map<Simplex, SimplexIndex, SimplexHash> m_index;
    std::vector<std::uint8_t> m_facet;
    std::vector<std::vector<SimplexIndex>> m_cofaces;
    std::vector<int> m_max_coface_dim;
};

/// Facets τ of `c` with σ ⊆ τ, σ itself included when it is a facet. Throws MembershipError.
std::vector<SimplexIndex> facets_containing(const Complex& c, const Simplex& s);

} // namespace simplicial
