#pragma once

#include <compare>
#include <cstddef>
#include <limits>
#include <optional>
#include <string>

namespace simplicial {

/// How the level of a p-walk is read off its steps.
enum class WalkSemantics {
    at_least,  ///< every step has level >= p
    exact,     ///< every step has level >= p and at least one step has level exactly p
};

/// Length of a shortest walk, or infinity when no walk exists.
class WalkLength
{
public:
    WalkLength() = default;  // infinite
    explicit WalkLength(std::size_t steps)
        : m_steps(steps)
    {}
    static WalkLength infinite() { return WalkLength(); }

    bool is_finite() const noexcept { return m_steps.has_value(); }
    bool is_infinite() const noexcept { return !m_steps.has_value(); }
    /// Throws std::bad_optional_access when infinite.
    std::size_t steps() const { return m_steps.value(); }
    double as_double() const
    {
        return m_steps ? static_cast<double>(*m_steps) : std::numeric_limits<double>::infinity();
    }
    /// "inf" or the decimal step count.
    std::string to_string() const { return m_steps ? std::to_string(*m_steps) : std::string("inf"); }

    friend bool operator==(const WalkLength&, const WalkLength&) = default;
    friend std::strong_ordering operator<=>(const WalkLength& a, const WalkLength& b)
    {
        if (a.is_finite() && b.is_finite()) {
            return *a.m_steps <=> *b.m_steps;
        }
        if (a.is_finite()) {
            return std::strong_ordering::less;
        }
        if (b.is_finite()) {
            return std::strong_ordering::greater;
        }
        return std::strong_ordering::equal;
    }
    friend WalkLength operator+(const WalkLength& a, const WalkLength& b)
    {
        if (a.is_infinite() || b.is_infinite()) {
            return infinite();
        }
        return WalkLength(*a.m_steps + *b.m_steps);
    }

private:
    std::optional<std::size_t> m_steps;
};

} // namespace simplicial
