#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

#include "wignerab/analytic.hpp"
#include "wignerab/model.hpp"

// Fixed CSV schemas:
//   Wigner field:  header "x,p,w", rows ordered by x then p
//   marginal:      header "coord,value"
//   pulse:         header "t,value"
// Numbers are written as the shortest decimal that round-trips to the same double.
namespace wignerab::io {

std::string format_double(double value);

std::string wigner_csv(const WignerField& field);
std::string marginal_csv(const MarginalCurve& curve);

/// Parses a marginal CSV. The coordinates must form a uniform grid.
/// Throws InvalidInput on any schema or number error.
MarginalCurve parse_marginal_csv(std::string_view text, Axis axis);
analytic::PulseSeries parse_pulse_csv(std::string_view text);

std::string read_file(const std::filesystem::path& path);

/// Writes to a sibling temporary file and renames it over `path`.
void write_file_atomic(const std::filesystem::path& path, std::string_view contents);

/// 64-bit FNV-1a, printed as 16 hex digits.
std::string fnv1a_hex(std::string_view data);

} // namespace wignerab::io
