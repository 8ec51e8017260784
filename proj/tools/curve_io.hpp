#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>

#include "minkhelix/curve_sample.hpp"
#include "minkhelix/errors.hpp"

namespace minkhelix::io {

class IOError : public Error {
 public:
  using Error::Error;
};

class FormatError : public Error {
 public:
  FormatError(std::size_t line, const std::string& message)
      : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

enum class CurveFormat { CSV, JSON };

/// CSV: `#`-prefixed `key: value` metadata lines, the column header
///   s,x1,x2,x3,T1,T2,T3,N1,N2,N3,B1,B2,B3,kappa,tau
/// and one row per sample.
/// JSON: {"metadata": {...}, "rows": [[s, [x1,x2,x3], [T], [N], [B], kappa, tau], ...]}.
/// Numbers use the shortest decimal text that round-trips.
std::string serialize_curve(const CurveSample& sample, CurveFormat format);

/// Format is detected from the content (a leading '{' means JSON).
CurveSample deserialize_curve(const std::string& text);

void write_curve(const CurveSample& sample, CurveFormat format, std::ostream& out);

/// Writes through a temporary file in the target directory and renames it into
/// place, so a failed write leaves no partial file.
void write_curve(const CurveSample& sample, CurveFormat format, const std::filesystem::path& path);

CurveSample read_curve(const std::filesystem::path& path);

/// Atomic text write used by the CLI for reports.
void write_text_atomic(const std::filesystem::path& path, const std::string& text);

CurveFormat parse_format(const std::string& name);

}  // namespace minkhelix::io
