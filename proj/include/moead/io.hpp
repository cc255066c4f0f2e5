#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "moead/types.hpp"

namespace moead {

// Shortest decimal form that round-trips the exact double.
std::string format_double(double v);

// CSV of numeric rows with a header line. Comma separated, '.' decimal point.
void write_points_csv(const std::filesystem::path& path,
                      const std::vector<std::string>& header,
                      const std::vector<ObjectiveVector>& rows);

// Reads a numeric CSV; a non-numeric first line is treated as a header and
// skipped. Throws std::runtime_error on ragged or malformed rows.
std::vector<ObjectiveVector> read_points_csv(const std::filesystem::path& path);

void write_csv(const std::filesystem::path& path, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows);

std::string read_text_file(const std::filesystem::path& path);

// Write-then-rename so readers never observe a partial file.
void write_text_file_atomic(const std::filesystem::path& path, const std::string& content);

// MOEAD_OUT_DIR if set, else "out".
std::filesystem::path default_out_dir();

}  // namespace moead
