#include "ghsimplex/metric_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "ghsimplex/error.hpp"
#include "ghsimplex/format.hpp"

namespace ghs {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

std::optional<double> parse_number(std::string_view token) {
    token = trim(token);
    if (token.empty()) return std::nullopt;
    if (token.front() == '+') token.remove_prefix(1);
    double value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) return std::nullopt;
    return value;
}

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        out.push_back(trim(line.substr(start, comma == std::string_view::npos ? comma : comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

std::string unquote(std::string_view s) {
    if (s.size() >= 2 && s.front() == '"' && s.back() == '"') s = s.substr(1, s.size() - 2);
    return std::string(s);
}

}  // namespace

RawMatrix parse_csv_matrix(std::string_view text) {
    std::vector<std::vector<std::string_view>> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto nl = text.find('\n', start);
        if (nl == std::string_view::npos) nl = text.size();
        const auto line = trim(text.substr(start, nl - start));
        if (!line.empty() && line.front() != '#') lines.push_back(split_fields(line));
        start = nl + 1;
    }
    if (lines.empty()) throw Error(ErrorCode::ParseError, "no rows in CSV input");

    RawMatrix raw;
    std::size_t first_data = 0;
    bool header = false;
    for (auto field : lines.front()) {
        if (!parse_number(field)) header = true;
    }
    // An all-numeric first row is still a header when it is the extra row.
    if (!header && lines.size() == lines.front().size() + 1) header = true;
    if (header) {
        for (auto field : lines.front()) raw.labels.push_back(unquote(field));
        first_data = 1;
    }

    for (std::size_t r = first_data; r < lines.size(); ++r) {
        std::vector<double> row;
        row.reserve(lines[r].size());
        for (std::size_t c = 0; c < lines[r].size(); ++c) {
            const auto value = parse_number(lines[r][c]);
            if (!value) {
                throw Error(ErrorCode::ParseError, "row " + std::to_string(r + 1) + ", column " +
                                                       std::to_string(c + 1) + ": '" +
                                                       std::string(lines[r][c]) + "' is not a number");
            }
            if (!std::isfinite(*value)) {
                throw Error(ErrorCode::ParseError, "row " + std::to_string(r + 1) + ", column " +
                                                       std::to_string(c + 1) + ": non-finite value");
            }
            row.push_back(*value);
        }
        raw.rows.push_back(std::move(row));
    }
    return raw;
}

RawMatrix parse_json_matrix(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
    if (!doc.is_object() || !doc.contains("dist") || !doc["dist"].is_array())
        throw Error(ErrorCode::ParseError, "expected an object with a \"dist\" array");

    RawMatrix raw;
    if (doc.contains("labels")) {
        if (!doc["labels"].is_array()) throw Error(ErrorCode::ParseError, "\"labels\" must be an array");
        for (const auto& l : doc["labels"]) {
            if (l.is_string()) raw.labels.push_back(l.get<std::string>());
            else if (l.is_number_integer()) raw.labels.push_back(std::to_string(l.get<long long>()));
            else throw Error(ErrorCode::ParseError, "labels must be strings or integers");
        }
    }
    for (const auto& row : doc["dist"]) {
        if (!row.is_array()) throw Error(ErrorCode::ParseError, "\"dist\" rows must be arrays");
        std::vector<double> r;
        for (const auto& v : row) {
            // nlohmann rejects NaN/Infinity literals at parse time; numbers
            // too large for a double still arrive as inf.
            if (!v.is_number()) throw Error(ErrorCode::ParseError, "non-numeric distance entry");
            const double d = v.get<double>();
            if (!std::isfinite(d)) throw Error(ErrorCode::ParseError, "non-finite distance entry");
            r.push_back(d);
        }
        raw.rows.push_back(std::move(r));
    }
    return raw;
}

RawMatrix read_matrix_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw Error(ErrorCode::IoError, "failed reading " + path.string());
    const std::string text = buf.str();
    if (path.extension() == ".json") return parse_json_matrix(text);
    return parse_csv_matrix(text);
}

std::string to_csv(const FiniteMetricSpace& x) {
    std::string out;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (i) out += ',';
        out += x.label(i);
    }
    out += '\n';
    for (std::size_t i = 0; i < x.size(); ++i) {
        for (std::size_t j = 0; j < x.size(); ++j) {
            if (j) out += ',';
            out += format_exact(x(i, j));
        }
        out += '\n';
    }
    return out;
}

std::string to_json(const FiniteMetricSpace& x) {
    nlohmann::ordered_json doc;
    doc["labels"] = x.labels();
    doc["dist"] = x.matrix();
    return doc.dump() + "\n";
}

void write_text_file(const std::filesystem::path& path, std::string_view contents) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::IoError, "cannot open " + path.string() + " for writing");
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out) throw Error(ErrorCode::IoError, "failed writing " + path.string());
}

}  // namespace ghs
