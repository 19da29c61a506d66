#pragma once

#include "simplicial/rational.hpp"
#include "simplicial/walk_types.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace simplicial {

/// A reported number: exact when rational, real otherwise, possibly infinite, with warning flags.
struct Value
{
    std::optional<Rational> exact;
    double real = 0.0;
    bool infinite = false;
    std::vector<std::string> flags;

    static Value of(const Rational& r);
    static Value of(const WalkLength& d);
    static Value approx(double x);

    Value& flag(std::string name);
    bool has_flag(const std::string& name) const;
};

struct ReportRow
{
    std::string label;  ///< simplex name such as "a-b-c", or an aggregate name
    Value value;
};

using KeyValues = std::vector<std::pair<std::string, std::string>>;

/// Output of one measure over a set of simplices, in global simplex order.
struct Report
{
    std::string measure;
    KeyValues params;
    std::vector<ReportRow> rows;
    KeyValues metadata;
};

} // namespace simplicial
