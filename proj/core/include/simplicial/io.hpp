#pragma once

#include "simplicial/complex.hpp"
#include "simplicial/report.hpp"

#include <Eigen/Core>

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

/**
 * Text formats.
 *
 * Complex files hold one simplex per line, vertex labels separated by whitespace or commas;
 * `#` starts a comment and blank lines are skipped. Non-facet lines are legal and absorbed
 * by the downward closure.
 */
namespace simplicial::io {

enum class Format { json, csv };

/// Throws ParseError (with line) for a repeated vertex and EmptyComplexError when no simplex is listed.
Complex parse_complex(std::string_view text);
Complex read_complex(const std::filesystem::path& path);

/// Facets only, one per line, sorted lexicographically; optional leading comment lines.
std::string emit_complex(const Complex& c, const std::vector<std::string>& comments = {});

/// FNV-1a 64 of emit_complex(c), as 16 hex digits.
std::string complex_digest(const Complex& c);

/**
 * JSON: {measure, params, complex_digest, values: [{simplex, value, exact, flags}], metadata}.
 * CSV: header simplex,value,exact,flags, one row per value, then metadata as `# key=value` lines.
 * Infinity is written as "inf".
 */
std::string emit_report(const Report& report, const Complex& c, Format format);

/// Square matrix over a named basis: JSON {basis, matrix} or CSV with the basis as header row.
std::string emit_matrix(const std::vector<std::string>& basis,
                        const Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>& m, Format format);

/// Shortest decimal form that reads back to the same double.
std::string format_real(double x);

} // namespace simplicial::io
