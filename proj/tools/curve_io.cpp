#include "curve_io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string_view>
#include <system_error>
#include <unistd.h>
#include <vector>

#include <json.hpp>

#include "minkhelix/number_format.hpp"

namespace minkhelix::io {

namespace {

using Json = nlohmann::ordered_json;

constexpr std::string_view kMagic = "# minkhelix curve";
constexpr std::string_view kColumns = "s,x1,x2,x3,T1,T2,T3,N1,N2,N3,B1,B2,B3,kappa,tau";
constexpr std::size_t kColumnCount = 15;

std::string source_name(SampleSource s) { return s == SampleSource::ClosedForm ? "closed-form" : "integrated"; }

std::string vec_text(const LorentzVec3& v) {
  return format_shortest(v.x1) + "," + format_shortest(v.x2) + "," + format_shortest(v.x3);
}

bool parse_double(std::string_view text, double& out) {
  if (text.empty()) return false;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  return ec == std::errc() && ptr == text.data() + text.size();
}

bool parse_int(std::string_view text, int& out) {
  if (text.empty()) return false;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  return ec == std::errc() && ptr == text.data() + text.size();
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(text.substr(start));
      return out;
    }
    out.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

// ---------------------------------------------------------------------------
// CSV

std::string to_csv(const CurveSample& sample) {
  const SampleMetadata& m = sample.meta;
  std::ostringstream os;
  os << kMagic << '\n';
  os << "# tool_version: " << m.tool_version << '\n';
  os << "# source: " << source_name(m.source) << '\n';
  os << "# kappa: " << m.kappa << '\n';
  os << "# tau: " << m.tau << '\n';
  os << "# s_min: " << format_shortest(m.s_min) << '\n';
  os << "# s_max: " << format_shortest(m.s_max) << '\n';
  os << "# s_ref: " << format_shortest(m.s_ref) << '\n';
  if (m.helix) {
    os << "# alpha: " << format_shortest(m.helix->alpha) << '\n';
    os << "# axis: " << vec_text(m.helix->axis) << '\n';
    os << "# C: " << vec_text(m.helix->C) << '\n';
    os << "# orientation: " << m.helix->orientation_sign << '\n';
  }
  if (m.tolerance) os << "# tolerance: " << format_shortest(*m.tolerance) << '\n';
  if (m.step) os << "# step: " << format_shortest(*m.step) << '\n';
  if (m.reorthonormalize_every) os << "# reorthonormalize_every: " << *m.reorthonormalize_every << '\n';
  if (m.example_id) os << "# example_id: " << *m.example_id << '\n';
  os << kColumns << '\n';
  for (const CurveRow& r : sample.rows) {
    os << format_shortest(r.s) << ',' << vec_text(r.psi) << ',' << vec_text(r.frame.T) << ',' << vec_text(r.frame.N)
       << ',' << vec_text(r.frame.B) << ',' << format_shortest(r.kappa) << ',' << format_shortest(r.tau) << '\n';
  }
  return os.str();
}

class CsvReader {
 public:
  explicit CsvReader(const std::string& text) : text_(text) {}

  CurveSample read() {
    std::vector<std::string_view> lines = split(text_, '\n');
    if (!lines.empty() && lines.back().empty()) lines.pop_back();

    std::map<std::string, std::pair<std::string, std::size_t>> header;
    bool columns_seen = false;
    CurveSample sample;
    for (std::size_t i = 0; i < lines.size(); ++i) {
      const std::size_t line_no = i + 1;
      std::string_view line = lines[i];
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      if (!columns_seen) {
        if (line.empty()) continue;
        if (line.front() == '#') {
          if (line == kMagic) continue;
          read_header_line(line, line_no, header);
          continue;
        }
        if (line != kColumns) throw FormatError(line_no, "expected column header '" + std::string(kColumns) + "'");
        columns_seen = true;
        sample.meta = metadata(header, line_no);
        continue;
      }
      sample.rows.push_back(read_row(line, line_no));
      if (sample.rows.size() > 1 && !(sample.rows.back().s > sample.rows[sample.rows.size() - 2].s))
        throw FormatError(line_no, "arc length s is not strictly increasing");
    }
    if (!columns_seen) throw FormatError(lines.size() + 1, "missing column header");
    return sample;
  }

 private:
  using Header = std::map<std::string, std::pair<std::string, std::size_t>>;

  static void read_header_line(std::string_view line, std::size_t line_no, Header& header) {
    line.remove_prefix(1);
    if (!line.empty() && line.front() == ' ') line.remove_prefix(1);
    const std::size_t colon = line.find(": ");
    if (colon == std::string_view::npos) throw FormatError(line_no, "metadata line must be '# key: value'");
    std::string key(line.substr(0, colon));
    if (header.count(key)) throw FormatError(line_no, "duplicate metadata key '" + key + "'");
    header[key] = {std::string(line.substr(colon + 2)), line_no};
  }

  static SampleMetadata metadata(Header& header, std::size_t columns_line) {
    SampleMetadata m;
    const auto take = [&](const char* key, bool required) -> std::optional<std::pair<std::string, std::size_t>> {
      const auto it = header.find(key);
      if (it == header.end()) {
        if (required) throw FormatError(columns_line, std::string("missing metadata key '") + key + "'");
        return std::nullopt;
      }
      auto v = it->second;
      header.erase(it);
      return v;
    };
    const auto number = [](const std::pair<std::string, std::size_t>& v) {
      double d = 0.0;
      if (!parse_double(v.first, d)) throw FormatError(v.second, "malformed number '" + v.first + "'");
      return d;
    };
    const auto integer = [](const std::pair<std::string, std::size_t>& v) {
      int d = 0;
      if (!parse_int(v.first, d)) throw FormatError(v.second, "malformed integer '" + v.first + "'");
      return d;
    };
    const auto vec = [](const std::pair<std::string, std::size_t>& v) {
      const auto parts = split(v.first, ',');
      LorentzVec3 out;
      if (parts.size() != 3 || !parse_double(parts[0], out.x1) || !parse_double(parts[1], out.x2) ||
          !parse_double(parts[2], out.x3))
        throw FormatError(v.second, "malformed vector '" + v.first + "'");
      return out;
    };

    m.tool_version = take("tool_version", true)->first;
    const auto source = *take("source", true);
    if (source.first == "closed-form")
      m.source = SampleSource::ClosedForm;
    else if (source.first == "integrated")
      m.source = SampleSource::Integrated;
    else
      throw FormatError(source.second, "unknown source '" + source.first + "'");
    m.kappa = take("kappa", true)->first;
    m.tau = take("tau", true)->first;
    m.s_min = number(*take("s_min", true));
    m.s_max = number(*take("s_max", true));
    m.s_ref = number(*take("s_ref", true));
    if (const auto alpha = take("alpha", false)) {
      HelixParams p;
      p.alpha = number(*alpha);
      p.axis = vec(*take("axis", true));
      p.C = vec(*take("C", true));
      const auto o = *take("orientation", true);
      p.orientation_sign = integer(o);
      if (p.orientation_sign != 1 && p.orientation_sign != -1) throw FormatError(o.second, "orientation must be 1 or -1");
      m.helix = p;
    }
    if (const auto v = take("tolerance", false)) m.tolerance = number(*v);
    if (const auto v = take("step", false)) m.step = number(*v);
    if (const auto v = take("reorthonormalize_every", false)) m.reorthonormalize_every = integer(*v);
    if (const auto v = take("example_id", false)) m.example_id = integer(*v);
    if (!header.empty()) {
      const auto& [key, v] = *header.begin();
      throw FormatError(v.second, "unknown metadata key '" + key + "'");
    }
    return m;
  }

  static CurveRow read_row(std::string_view line, std::size_t line_no) {
    const auto fields = split(line, ',');
    if (fields.size() != kColumnCount) {
      throw FormatError(line_no, "expected " + std::to_string(kColumnCount) + " columns, found " +
                                     std::to_string(fields.size()));
    }
    double v[kColumnCount];
    for (std::size_t k = 0; k < kColumnCount; ++k) {
      if (!parse_double(fields[k], v[k]))
        throw FormatError(line_no, "malformed number '" + std::string(fields[k]) + "' in column " + std::to_string(k + 1));
    }
    return {v[0], {v[1], v[2], v[3]}, {{v[4], v[5], v[6]}, {v[7], v[8], v[9]}, {v[10], v[11], v[12]}}, v[13], v[14]};
  }

  const std::string& text_;
};

// ---------------------------------------------------------------------------
// JSON

Json vec_json(const LorentzVec3& v) { return Json::array({v.x1, v.x2, v.x3}); }

std::string to_json(const CurveSample& sample) {
  const SampleMetadata& m = sample.meta;
  Json meta = Json::object();
  meta["tool_version"] = m.tool_version;
  meta["source"] = source_name(m.source);
  meta["kappa"] = m.kappa;
  meta["tau"] = m.tau;
  meta["s_min"] = m.s_min;
  meta["s_max"] = m.s_max;
  meta["s_ref"] = m.s_ref;
  if (m.helix) {
    meta["alpha"] = m.helix->alpha;
    meta["axis"] = vec_json(m.helix->axis);
    meta["C"] = vec_json(m.helix->C);
    meta["orientation"] = m.helix->orientation_sign;
  }
  if (m.tolerance) meta["tolerance"] = *m.tolerance;
  if (m.step) meta["step"] = *m.step;
  if (m.reorthonormalize_every) meta["reorthonormalize_every"] = *m.reorthonormalize_every;
  if (m.example_id) meta["example_id"] = *m.example_id;

  Json rows = Json::array();
  for (const CurveRow& r : sample.rows) {
    rows.push_back(Json::array(
        {r.s, vec_json(r.psi), vec_json(r.frame.T), vec_json(r.frame.N), vec_json(r.frame.B), r.kappa, r.tau}));
  }
  Json doc = Json::object();
  doc["metadata"] = std::move(meta);
  doc["rows"] = std::move(rows);
  return doc.dump() + "\n";
}

std::size_t line_of(const std::string& text, std::size_t byte) {
  byte = std::min(byte, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(byte), '\n'));
}

CurveSample from_json(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw FormatError(line_of(text, e.byte == 0 ? 0 : e.byte - 1), e.what());
  }
  // The document is a single line in practice; structural errors are reported at line 1.
  const auto fail = [](const std::string& what) -> FormatError { return FormatError(1, what); };
  if (!doc.is_object() || !doc.contains("metadata") || !doc.contains("rows"))
    throw fail("expected an object with 'metadata' and 'rows'");
  const Json& meta = doc["metadata"];
  const Json& rows = doc["rows"];
  if (!meta.is_object()) throw fail("'metadata' must be an object");
  if (!rows.is_array()) throw fail("'rows' must be an array");

  const auto number = [&](const Json& j, const std::string& where) {
    if (!j.is_number()) throw fail(where + " must be a number");
    return j.get<double>();
  };
  const auto vec = [&](const Json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 3) throw fail(where + " must be an array of 3 numbers");
    return LorentzVec3{number(j[0], where), number(j[1], where), number(j[2], where)};
  };
  const auto string = [&](const char* key) {
    if (!meta.contains(key) || !meta[key].is_string()) throw fail(std::string("metadata.") + key + " must be a string");
    return meta[key].get<std::string>();
  };
  const auto field = [&](const char* key) -> const Json& {
    if (!meta.contains(key)) throw fail(std::string("missing metadata.") + key);
    return meta[key];
  };
  const auto integer = [&](const Json& j, const std::string& where) {
    if (!j.is_number_integer()) throw fail(where + " must be an integer");
    return j.get<int>();
  };

  static const char* kKnown[] = {"tool_version", "source", "kappa", "tau",       "s_min",
                                 "s_max",        "s_ref",  "alpha", "axis",      "C",
                                 "orientation",  "tolerance", "step", "reorthonormalize_every", "example_id"};
  for (const auto& [key, value] : meta.items()) {
    if (std::find(std::begin(kKnown), std::end(kKnown), key) == std::end(kKnown))
      throw fail("unknown metadata key '" + key + "'");
  }

  CurveSample sample;
  SampleMetadata& m = sample.meta;
  m.tool_version = string("tool_version");
  const std::string source = string("source");
  if (source == "closed-form")
    m.source = SampleSource::ClosedForm;
  else if (source == "integrated")
    m.source = SampleSource::Integrated;
  else
    throw fail("unknown source '" + source + "'");
  m.kappa = string("kappa");
  m.tau = string("tau");
  m.s_min = number(field("s_min"), "metadata.s_min");
  m.s_max = number(field("s_max"), "metadata.s_max");
  m.s_ref = number(field("s_ref"), "metadata.s_ref");
  if (meta.contains("alpha")) {
    HelixParams p;
    p.alpha = number(meta["alpha"], "metadata.alpha");
    p.axis = vec(field("axis"), "metadata.axis");
    p.C = vec(field("C"), "metadata.C");
    p.orientation_sign = integer(field("orientation"), "metadata.orientation");
    if (p.orientation_sign != 1 && p.orientation_sign != -1) throw fail("metadata.orientation must be 1 or -1");
    m.helix = p;
  }
  if (meta.contains("tolerance")) m.tolerance = number(meta["tolerance"], "metadata.tolerance");
  if (meta.contains("step")) m.step = number(meta["step"], "metadata.step");
  if (meta.contains("reorthonormalize_every"))
    m.reorthonormalize_every = integer(meta["reorthonormalize_every"], "metadata.reorthonormalize_every");
  if (meta.contains("example_id")) m.example_id = integer(meta["example_id"], "metadata.example_id");

  sample.rows.reserve(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const std::string where = "rows[" + std::to_string(i) + "]";
    const Json& r = rows[i];
    if (!r.is_array() || r.size() != 7) throw fail(where + " must be [s, psi, T, N, B, kappa, tau]");
    CurveRow row{number(r[0], where),
                 vec(r[1], where),
                 {vec(r[2], where), vec(r[3], where), vec(r[4], where)},
                 number(r[5], where),
                 number(r[6], where)};
    if (!sample.rows.empty() && !(row.s > sample.rows.back().s)) throw fail(where + ": s is not strictly increasing");
    sample.rows.push_back(row);
  }
  return sample;
}

}  // namespace

CurveFormat parse_format(const std::string& name) {
  if (name == "csv" || name == "CSV") return CurveFormat::CSV;
  if (name == "json" || name == "JSON") return CurveFormat::JSON;
  throw InvalidConfig("unknown format '" + name + "' (expected csv or json)");
}

std::string serialize_curve(const CurveSample& sample, CurveFormat format) {
  return format == CurveFormat::CSV ? to_csv(sample) : to_json(sample);
}

CurveSample deserialize_curve(const std::string& text) {
  const std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return from_json(text);
  return CsvReader(text).read();
}

void write_curve(const CurveSample& sample, CurveFormat format, std::ostream& out) {
  out << serialize_curve(sample, format);
  out.flush();
  if (!out) throw IOError("failed to write curve to output stream");
}

void write_text_atomic(const std::filesystem::path& path, const std::string& text) {
  namespace fs = std::filesystem;
  const fs::path tmp = path.string() + ".tmp." + std::to_string(::getpid());
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw IOError("cannot open '" + tmp.string() + "' for writing");
    f << text;
    f.flush();
    if (!f) {
      f.close();
      std::error_code ec;
      fs::remove(tmp, ec);
      throw IOError("failed writing '" + tmp.string() + "'");
    }
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    std::error_code ignored;
    fs::remove(tmp, ignored);
    throw IOError("cannot move output into place at '" + path.string() + "': " + ec.message());
  }
}

void write_curve(const CurveSample& sample, CurveFormat format, const std::filesystem::path& path) {
  write_text_atomic(path, serialize_curve(sample, format));
}

CurveSample read_curve(const std::filesystem::path& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw IOError("cannot open '" + path.string() + "' for reading");
  std::ostringstream buf;
  buf << f.rdbuf();
  if (f.bad()) throw IOError("failed reading '" + path.string() + "'");
  return deserialize_curve(buf.str());
}

}  // namespace minkhelix::io
