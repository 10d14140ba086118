#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "ghsimplex/metric_space.hpp"

namespace ghs {

enum class MatrixFormat { Csv, Json };

/// CSV: n rows of n comma-separated decimals, optionally preceded by a header
/// row of labels. Blank lines and lines starting with '#' are skipped.
RawMatrix parse_csv_matrix(std::string_view text);

/// JSON: {"labels": [...], "dist": [[...], ...]}; "labels" is optional.
RawMatrix parse_json_matrix(std::string_view text);

/// Picks the parser by extension (".json" is JSON, everything else CSV).
RawMatrix read_matrix_file(const std::filesystem::path& path);

std::string to_csv(const FiniteMetricSpace& x);
std::string to_json(const FiniteMetricSpace& x);

void write_text_file(const std::filesystem::path& path, std::string_view contents);

}  // namespace ghs
