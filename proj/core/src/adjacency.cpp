#include "simplicial/adjacency.hpp"

#include "simplicial/errors.hpp"
#include "simplicial/rational.hpp"

#include <string>

namespace simplicial::adjacency {

namespace {

void require_member(const Complex& c, const Simplex& s)
{
    if (!c.contains(s)) {
        throw MembershipError("simplex is not a member of the complex");
    }
}

void require_param(bool ok, const std::string& constraint)
{
    if (!ok) {
        throw ArgumentError("degree parameters violate " + constraint);
    }
}

bool upper_at(const Complex& c, const Simplex& a, const Simplex& b, int p, bool strict)
{
    const Simplex u = union_of(a, b);
    const auto ui = c.find(u);
    if (!ui || u.dim() > p) {
        return false;
    }
    const int top = c.max_coface_dim(*ui);
    return strict ? p == top : p <= top;
}

bool adjacent_at(const Complex& c, const Simplex& a, const Simplex& b, int p)
{
    if (a.dim() == 0 && b.dim() == 0) {
        return p == 0 && a != b && c.contains(union_of(a, b));
    }
    if (intersection_size(a, b) != static_cast<std::size_t>(p) + 1) {
        return false;
    }
    // With exactly p+1 shared vertices the union has dimension q+q'-p, so a
    // (q+q'-p)-simplex containing both exists iff the union itself is a member.
    return !c.contains(union_of(a, b));
}

bool maximal_at(const Complex& c, SimplexIndex candidate, const Simplex& center, int p)
{
    if (!adjacent_at(c, c.simplex(candidate), center, p)) {
        return false;
    }
    for (SimplexIndex bigger : c.cofaces(candidate)) {
        if (adjacent_at(c, c.simplex(bigger), center, p)) {
            return false;
        }
    }
    return true;
}

std::size_t count_lower(const Complex& c, SimplexIndex i, int p, bool strict, std::optional<int> only_dim)
{
    const Simplex& s = c.simplex(i);
    const std::size_t need = static_cast<std::size_t>(p) + 1;
    std::size_t n = 0;
    for (SimplexIndex j = 0; j < c.size(); ++j) {
        if (j == i || (only_dim && c.dim_of(j) != *only_dim)) {
            continue;
        }
        const std::size_t shared = intersection_size(s, c.simplex(j));
        if (strict ? shared == need : shared >= need) {
            ++n;
        }
    }
    return n;
}

std::size_t count_upper(const Complex& c, SimplexIndex i, int p, bool strict)
{
    const Simplex& s = c.simplex(i);
    std::size_t n = 0;
    for (SimplexIndex j = 0; j < c.size(); ++j) {
        if (j != i && upper_at(c, s, c.simplex(j), p, strict)) {
            ++n;
        }
    }
    return n;
}

std::size_t count_upper_step(const Complex& c, SimplexIndex i, int h, bool strict)
{
    const Simplex& s = c.simplex(i);
    const int target = s.dim() + h;
    std::size_t n = 0;
    // A (q+h)-simplex upper adjacent at level q+h must contain s, so only cofaces can count.
    for (SimplexIndex j : c.cofaces(i)) {
        if (c.dim_of(j) == target && upper_at(c, s, c.simplex(j), target, strict)) {
            ++n;
        }
    }
    return n;
}

std::size_t count_adjacent(const Complex& c, SimplexIndex i, int p, bool maximal)
{
    const Simplex& s = c.simplex(i);
    std::size_t n = 0;
    for (SimplexIndex j = 0; j < c.size(); ++j) {
        if (j == i) {
            continue;
        }
        if (maximal ? maximal_at(c, j, s, p) : adjacent_at(c, c.simplex(j), s, p)) {
            ++n;
        }
    }
    return n;
}

std::size_t count_maximal_adjacency_sum(const Complex& c, SimplexIndex i)
{
    const Simplex& s = c.simplex(i);
    std::size_t n = 0;
    for (SimplexIndex j = 0; j < c.size(); ++j) {
        if (j == i) {
            continue;
        }
        // p is forced by the number of shared vertices; only p < q contributes.
        const std::size_t shared = intersection_size(s, c.simplex(j));
        if (shared == 0 || shared > static_cast<std::size_t>(s.dim())) {
            continue;
        }
        if (maximal_at(c, j, s, static_cast<int>(shared) - 1)) {
            ++n;
        }
    }
    return n;
}

std::size_t count_strict_upper_sum(const Complex& c, SimplexIndex i)
{
    std::size_t n = 0;
    for (int h = 1; h <= c.dim() - c.dim_of(i); ++h) {
        n += count_upper_step(c, i, h, true);
    }
    return n;
}

std::size_t degree_at(const Complex& c, SimplexIndex i, const DegreeQuery& query)
{
    const int q = c.dim_of(i);
    switch (query.family) {
    case DegreeFamily::lower: return count_lower(c, i, query.p, false, std::nullopt);
    case DegreeFamily::strict_lower: return count_lower(c, i, query.p, true, std::nullopt);
    case DegreeFamily::lower_step: return count_lower(c, i, query.p, false, q - query.h);
    case DegreeFamily::strict_lower_step: return count_lower(c, i, query.p, true, q - query.h);
    case DegreeFamily::upper: return count_upper(c, i, query.p, false);
    case DegreeFamily::strict_upper: return count_upper(c, i, query.p, true);
    case DegreeFamily::upper_step: return count_upper_step(c, i, query.h, false);
    case DegreeFamily::strict_upper_step: return count_upper_step(c, i, query.h, true);
    case DegreeFamily::adjacency: return count_adjacent(c, i, query.p, false);
    case DegreeFamily::maximal_adjacency: return count_adjacent(c, i, query.p, true);
    case DegreeFamily::two_param: return count_upper(c, i, query.p1, false) + count_adjacent(c, i, query.p2, true);
    case DegreeFamily::two_param_strict:
        return count_upper(c, i, query.p1, true) + count_adjacent(c, i, query.p2, true);
    case DegreeFamily::maximal_simplicial: return count_maximal_adjacency_sum(c, i) + count_strict_upper_sum(c, i);
    case DegreeFamily::maximal_adjacency_sum: return count_maximal_adjacency_sum(c, i);
    case DegreeFamily::strict_upper_sum: return count_strict_upper_sum(c, i);
    }
    return 0;
}

} // namespace

bool lower_adjacent(const Complex& c, const Simplex& a, const Simplex& b, int p, bool strict)
{
    require_member(c, a);
    require_member(c, b);
    if (p < 0) {
        throw ArgumentError("lower adjacency needs p >= 0");
    }
    if (a == b) {
        throw ArgumentError("lower adjacency compares two distinct simplices");
    }
    const std::size_t shared = intersection_size(a, b);
    const std::size_t need = static_cast<std::size_t>(p) + 1;
    return strict ? shared == need : shared >= need;
}

bool upper_adjacent(const Complex& c, const Simplex& a, const Simplex& b, int p, bool strict)
{
    require_member(c, a);
    require_member(c, b);
    return upper_at(c, a, b, p, strict);
}

bool p_adjacent(const Complex& c, const Simplex& a, const Simplex& b, int p)
{
    require_member(c, a);
    require_member(c, b);
    if (p < 0) {
        return false;
    }
    return adjacent_at(c, a, b, p);
}

bool maximal_p_adjacent(const Complex& c, const Simplex& candidate, const Simplex& center, int p)
{
    require_member(c, center);
    if (p < 0) {
        return false;
    }
    return maximal_at(c, c.index_of(candidate), center, p);
}

void validate(const Complex& c, int q, const DegreeQuery& query)
{
    require_param(q >= 0 && q <= c.dim(), "0 <= q <= dim K");
    switch (query.family) {
    case DegreeFamily::lower:
    case DegreeFamily::strict_lower:
        require_param(query.p >= 0 && query.p <= q, "0 <= p <= q");
        break;
    case DegreeFamily::lower_step:
    case DegreeFamily::strict_lower_step:
        require_param(query.p >= 0, "p >= 0");
        require_param(query.h <= q - query.p, "h <= q - p");
        require_param(query.h >= q - c.dim(), "h >= q - dim K");
        break;
    case DegreeFamily::upper:
    case DegreeFamily::strict_upper:
        require_param(query.p >= q, "p >= q");
        break;
    case DegreeFamily::upper_step:
    case DegreeFamily::strict_upper_step:
        require_param(query.h >= 1, "h >= 1");
        break;
    case DegreeFamily::adjacency:
    case DegreeFamily::maximal_adjacency:
        require_param(query.p >= 0, "p >= 0");
        require_param(query.p < q || (q == 0 && query.p == 0), "p < q (p = 0 for vertices)");
        break;
    case DegreeFamily::two_param:
    case DegreeFamily::two_param_strict:
        require_param(query.p1 > q, "p1 > q");
        require_param(query.p2 >= 0 && query.p2 < q, "0 <= p2 < q");
        break;
    case DegreeFamily::maximal_simplicial:
    case DegreeFamily::maximal_adjacency_sum:
    case DegreeFamily::strict_upper_sum:
        break;
    }
}

std::size_t degree(const Complex& c, const Simplex& s, const DegreeQuery& query)
{
    const SimplexIndex i = c.index_of(s);
    validate(c, s.dim(), query);
    return degree_at(c, i, query);
}

DegreeReport degrees(const Complex& c, int q, const DegreeQuery& query)
{
    validate(c, q, query);
    DegreeReport report{query, q, {}};
    const SimplexIndex first = c.offset(q);
    report.values.reserve(c.count(q));
    for (std::size_t k = 0; k < c.count(q); ++k) {
        report.values.push_back(degree_at(c, first + k, query));
    }
    return report;
}

long long strict_upper_closed_form(const Complex& c, const Simplex& s, int h)
{
    const SimplexIndex i = c.index_of(s);
    const int q = s.dim();
    if (h < 1 || h > c.dim() - q) {
        throw ArgumentError("closed form needs 1 <= h <= dim K - q");
    }
    const int terms = c.dim() - (q + h);
    long long total = 0;
    for (int k = 0; k <= terms; ++k) {
        const auto d = static_cast<long long>(count_upper_step(c, i, h + k, false));
        const long long choose = static_cast<long long>(binomial(h + k, h));
        total += (k % 2 == 0 ? 1 : -1) * d * choose;
    }
    return total;
}

} // namespace simplicial::adjacency
