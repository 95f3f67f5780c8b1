#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "glfem/study.hpp"

namespace glfem {

/// Column names, in ErrorRow order.
inline constexpr std::string_view kCsvHeader =
    "t,M,tau,h1_error,h1_order,superclose,superclose_order,postprocessed,post_order";

/// Header plus one line per row; numbers in %.16e so values round-trip
/// exactly, missing orders as empty cells, '\n' line endings.
std::string format_csv(const ErrorReport& report);

/// Inverse of format_csv. Throws InvalidArgument on malformed input.
ErrorReport parse_csv(std::string_view text);

/// Writes format_csv(report). Throws IoError carrying the path.
void emit_csv(const ErrorReport& report, const std::filesystem::path& path);

}  // namespace glfem
