#include "glfem/csv.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <vector>

#include "glfem/exceptions.hpp"

namespace glfem {

namespace {

void put_number(std::string& out, double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16e", v);
  out += buf;
}

void put_optional(std::string& out, const std::optional<double>& v) {
  if (v) put_number(out, *v);
}

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> cells;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    cells.push_back(line.substr(start, comma == std::string_view::npos ? line.npos : comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return cells;
}

double to_double(std::string_view cell) {
  const std::string s(cell);
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size()) {
    throw InvalidArgument("parse_csv: bad number '" + s + "'");
  }
  return v;
}

std::optional<double> to_optional(std::string_view cell) {
  if (cell.empty()) return std::nullopt;
  return to_double(cell);
}

}  // namespace

std::string format_csv(const ErrorReport& report) {
  std::string out(kCsvHeader);
  out += '\n';
  for (const ErrorRow& r : report.rows) {
    put_number(out, r.time);
    out += ',';
    out += std::to_string(r.m);
    out += ',';
    put_number(out, r.tau);
    out += ',';
    put_number(out, r.h1_error);
    out += ',';
    put_optional(out, r.h1_order);
    out += ',';
    put_number(out, r.superclose);
    out += ',';
    put_optional(out, r.superclose_order);
    out += ',';
    put_optional(out, r.postprocessed);
    out += ',';
    put_optional(out, r.post_order);
    out += '\n';
  }
  return out;
}

ErrorReport parse_csv(std::string_view text) {
  ErrorReport report;
  std::size_t pos = 0;
  bool header = true;
  while (pos < text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() : nl + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (header) {
      if (line != kCsvHeader) {
        throw InvalidArgument("parse_csv: unexpected header");
      }
      header = false;
      continue;
    }
    if (line.empty()) continue;
    const auto cells = split(line);
    if (cells.size() != 9) {
      throw InvalidArgument("parse_csv: expected 9 cells, got " + std::to_string(cells.size()));
    }
    ErrorRow r;
    r.time = to_double(cells[0]);
    r.m = static_cast<int>(to_double(cells[1]));
    r.tau = to_double(cells[2]);
    r.h1_error = to_double(cells[3]);
    r.h1_order = to_optional(cells[4]);
    r.superclose = to_double(cells[5]);
    r.superclose_order = to_optional(cells[6]);
    r.postprocessed = to_optional(cells[7]);
    r.post_order = to_optional(cells[8]);
    report.rows.push_back(r);
  }
  if (header) {
    throw InvalidArgument("parse_csv: missing header");
  }
  return report;
}

void emit_csv(const ErrorReport& report, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw IoError("cannot open output file", path.string());
  }
  const std::string text = format_csv(report);
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  out.flush();
  if (!out) {
    throw IoError("write failed", path.string());
  }
}

}  // namespace glfem
