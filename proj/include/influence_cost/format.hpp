#pragma once

// Deterministic text output: shortest round-trip number formatting, CSV
// tables and all-or-nothing file writes.

#include <charconv>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <system_error>
#include <vector>

namespace influence_cost {

/// Shortest decimal string that parses back to exactly `value`.
inline std::string format_number(double value) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  if (ec != std::errc{}) throw std::runtime_error("number formatting failed");
  return std::string(buf, end);
}

inline std::string format_number(std::uint64_t value) { return std::to_string(value); }

inline std::string format_number(const std::optional<double>& value) {
  return value ? format_number(*value) : std::string{};
}

/// Header row plus rows of preformatted cells. Rendered with `\n` line ends
/// and exactly one terminating newline.
class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}

  void add_row(std::vector<std::string> cells) {
    if (cells.size() != header_.size())
      throw std::logic_error("csv row width does not match header");
    rows_.push_back(std::move(cells));
  }

  const std::vector<std::string>& header() const { return header_; }
  const std::vector<std::vector<std::string>>& rows() const { return rows_; }

  void write(std::ostream& out) const {
    write_line(out, header_);
    for (const auto& row : rows_) write_line(out, row);
  }

  std::string str() const {
    std::ostringstream out;
    write(out);
    return out.str();
  }

 private:
  static void write_line(std::ostream& out, const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out << ',';
      out << escape(cells[i]);
    }
    out << '\n';
  }

  static std::string escape(const std::string& cell) {
    if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
    std::string quoted = "\"";
    for (char c : cell) {
      if (c == '"') quoted += '"';
      quoted += c;
    }
    return quoted + '"';
  }

  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

/// Writes `contents` to `path` through a sibling temporary file that is
/// renamed into place. On any failure the temporary is removed and the
/// destination is left untouched.
inline void write_file_atomically(const std::filesystem::path& path, const std::string& contents) {
  namespace fs = std::filesystem;
  fs::path tmp = path;
  tmp += ".partial";
  try {
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    {
      std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
      if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
      out << contents;
      out.flush();
      if (!out) throw std::runtime_error("write failed for " + tmp.string());
    }
    fs::rename(tmp, path);
  } catch (...) {
    std::error_code ignored;
    fs::remove(tmp, ignored);
    throw;
  }
}

}  // namespace influence_cost
