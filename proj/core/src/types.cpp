#include "simplicial/degree_query.hpp"
#include "simplicial/rational.hpp"
#include "simplicial/report.hpp"

#include <algorithm>

namespace simplicial {

BigInt binomial(long long n, long long k)
{
    if (n < 0 || k < 0 || k > n) {
        return 0;
    }
    if (k > n - k) {
        k = n - k;
    }
    BigInt r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

std::string to_string(const Rational& r)
{
    const auto num = boost::multiprecision::numerator(r);
    const auto den = boost::multiprecision::denominator(r);
    if (den == 1) {
        return num.str();
    }
    return num.str() + "/" + den.str();
}

double to_double(const Rational& r)
{
    return r.convert_to<double>();
}

std::string describe(const DegreeQuery& query)
{
    const std::string p = std::to_string(query.p);
    const std::string h = std::to_string(query.h);
    switch (query.family) {
    case DegreeFamily::lower: return "L(p=" + p + ")";
    case DegreeFamily::strict_lower: return "L(p*=" + p + ")";
    case DegreeFamily::lower_step: return "L(h=" + h + ",p=" + p + ")";
    case DegreeFamily::strict_lower_step: return "L(h=" + h + ",p*=" + p + ")";
    case DegreeFamily::upper: return "U(p=" + p + ")";
    case DegreeFamily::strict_upper: return "U(p*=" + p + ")";
    case DegreeFamily::upper_step: return "U(h=" + h + ",q+h)";
    case DegreeFamily::strict_upper_step: return "U(h=" + h + ",(q+h)*)";
    case DegreeFamily::adjacency: return "A(p=" + p + ")";
    case DegreeFamily::maximal_adjacency: return "A(p*=" + p + ")";
    case DegreeFamily::two_param:
        return "(p1=" + std::to_string(query.p1) + ",p2*=" + std::to_string(query.p2) + ")";
    case DegreeFamily::two_param_strict:
        return "(p1*=" + std::to_string(query.p1) + ",p2*=" + std::to_string(query.p2) + ")";
    case DegreeFamily::maximal_simplicial: return "deg*";
    case DegreeFamily::maximal_adjacency_sum: return "deg*_A";
    case DegreeFamily::strict_upper_sum: return "deg*_U";
    }
    return "?";
}

Value Value::of(const Rational& r)
{
    Value v;
    v.exact = r;
    v.real = to_double(r);
    return v;
}

Value Value::of(const WalkLength& d)
{
    if (d.is_infinite()) {
        Value v;
        v.infinite = true;
        v.real = d.as_double();
        return v;
    }
    return of(Rational(d.steps()));
}

Value Value::approx(double x)
{
    Value v;
    v.real = x;
    return v;
}

Value& Value::flag(std::string name)
{
    if (!has_flag(name)) {
        flags.push_back(std::move(name));
    }
    return *this;
}

bool Value::has_flag(const std::string& name) const
{
    return std::find(flags.begin(), flags.end(), name) != flags.end();
}

} // namespace simplicial
