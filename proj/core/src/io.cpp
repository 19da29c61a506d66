#include "simplicial/io.hpp"

#include "simplicial/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace simplicial::io {

namespace {

using Json = nlohmann::ordered_json;

std::vector<std::string> tokens(std::string_view line)
{
    std::vector<std::string> out;
    std::string current;
    for (char ch : line) {
        if (ch == ',' || std::isspace(static_cast<unsigned char>(ch))) {
            if (!current.empty()) {
                out.push_back(std::move(current));
                current.clear();
            }
        } else {
            current += ch;
        }
    }
    if (!current.empty()) {
        out.push_back(std::move(current));
    }
    return out;
}

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char ch : s) {
        out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    }
    return out + "\"";
}

} // namespace

Complex parse_complex(std::string_view text)
{
    std::vector<std::vector<std::string>> facets;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        ++line_no;
        std::string_view line = text.substr(start, end - start);
        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        std::vector<std::string> labels = tokens(line);
        if (!labels.empty()) {
            std::set<std::string> seen;
            for (const auto& label : labels) {
                if (!seen.insert(label).second) {
                    throw ParseError(line_no, "vertex '" + label + "' repeated in one simplex");
                }
            }
            facets.push_back(std::move(labels));
        }
        if (end == text.size()) {
            break;
        }
        start = end + 1;
    }
    if (facets.empty()) {
        throw EmptyComplexError();
    }
    return Complex::from_facets(facets);
}

Complex read_complex(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ArgumentError("cannot open " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_complex(buffer.str());
}

std::string emit_complex(const Complex& c, const std::vector<std::string>& comments)
{
    std::string out;
    for (const auto& line : comments) {
        out += "# " + line + "\n";
    }
    std::vector<Simplex> facets;
    for (SimplexIndex f : c.facets()) {
        facets.push_back(c.simplex(f));
    }
    std::sort(facets.begin(), facets.end());
    for (const Simplex& s : facets) {
        out += c.name(s, " ") + "\n";
    }
    return out;
}

std::string complex_digest(const Complex& c)
{
    std::uint64_t hash = 14695981039346656037ULL;
    for (unsigned char ch : emit_complex(c)) {
        hash ^= ch;
        hash *= 1099511628211ULL;
    }
    std::array<char, 17> buf{};
    std::snprintf(buf.data(), buf.size(), "%016llx", static_cast<unsigned long long>(hash));
    return buf.data();
}

std::string format_real(double x)
{
    if (std::isinf(x)) {
        return "inf";
    }
    std::array<char, 64> buf{};
    const auto result = std::to_chars(buf.data(), buf.data() + buf.size(), x);
    return std::string(buf.data(), result.ptr);
}

std::string emit_report(const Report& report, const Complex& c, Format format)
{
    if (format == Format::csv) {
        std::string out = "simplex,value,exact,flags\n";
        for (const auto& row : report.rows) {
            const Value& v = row.value;
            std::string flags;
            for (const auto& f : v.flags) {
                flags += (flags.empty() ? "" : ";") + f;
            }
            out += csv_field(row.label) + "," + (v.infinite ? "inf" : format_real(v.real)) + "," +
                   (v.exact ? to_string(*v.exact) : "") + "," + csv_field(flags) + "\n";
        }
        for (const auto& [key, value] : report.metadata) {
            out += "# " + key + "=" + value + "\n";
        }
        return out;
    }
    Json doc;
    doc["measure"] = report.measure;
    Json params = Json::object();
    for (const auto& [key, value] : report.params) {
        params[key] = value;
    }
    doc["params"] = params;
    doc["complex_digest"] = complex_digest(c);
    Json values = Json::array();
    for (const auto& row : report.rows) {
        const Value& v = row.value;
        Json entry;
        entry["simplex"] = row.label;
        if (v.infinite) {
            entry["value"] = "inf";
        } else {
            entry["value"] = v.real;
        }
        entry["exact"] = v.exact ? Json(to_string(*v.exact)) : Json(nullptr);
        entry["flags"] = v.flags;
        values.push_back(std::move(entry));
    }
    doc["values"] = values;
    Json metadata = Json::object();
    for (const auto& [key, value] : report.metadata) {
        metadata[key] = value;
    }
    doc["metadata"] = metadata;
    return doc.dump(2) + "\n";
}

std::string emit_matrix(const std::vector<std::string>& basis,
                        const Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>& m, Format format)
{
    if (format == Format::csv) {
        std::string out = "simplex";
        for (const auto& name : basis) {
            out += "," + csv_field(name);
        }
        out += "\n";
        for (Eigen::Index r = 0; r < m.rows(); ++r) {
            out += csv_field(basis[static_cast<std::size_t>(r)]);
            for (Eigen::Index col = 0; col < m.cols(); ++col) {
                out += "," + std::to_string(m(r, col));
            }
            out += "\n";
        }
        return out;
    }
    Json doc;
    doc["basis"] = basis;
    Json rows = Json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (Eigen::Index col = 0; col < m.cols(); ++col) {
            row.push_back(m(r, col));
        }
        rows.push_back(std::move(row));
    }
    doc["matrix"] = rows;
    return doc.dump(2) + "\n";
}

} // namespace simplicial::io
