#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

// Small text helpers shared by the file formats and the CLI.

namespace efa {

/// Shortest decimal that round-trips the double (at most 17 significant digits).
std::string format_real(double v);
/// Fixed-point with `decimals` digits; used where byte-stable output matters
/// more than round-tripping (SVG coordinates).
std::string format_fixed(double v, int decimals);

std::vector<std::string_view> split_lines(std::string_view text);
std::string_view trim(std::string_view s);
/// Splits on commas and/or whitespace, dropping empty fields.
std::vector<std::string_view> split_fields(std::string_view line);
std::vector<std::string_view> split_csv(std::string_view line);
double parse_real(std::string_view field, std::size_t line_no);
int parse_int(std::string_view field, std::size_t line_no);

std::string read_file(const std::filesystem::path& path);
/// Writes through a temporary sibling and renames it into place.
void write_file_atomic(const std::filesystem::path& path, std::string_view data);

}  // namespace efa
