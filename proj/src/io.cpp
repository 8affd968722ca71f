// Copyright (c) 2026 The radixnet Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "radixnet/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <system_error>
#include <utility>

#include "json.hpp"
#include "radixnet/error.hpp"

namespace radixnet {

namespace {

using nlohmann::json;

void append_uint(std::string& out, std::uint64_t v) {
  char buf[24];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  out.append(buf, res.ptr);
}

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  std::string out(buf, res.ptr);
  if (out.find_first_of(".eE") == std::string::npos) out += ".0";
  return out;
}

std::string format_rational(const Rational& r) {
  return boost::multiprecision::numerator(r).str() + "/" +
         boost::multiprecision::denominator(r).str();
}

// 1-based line and column of a 0-based byte offset.
std::pair<std::size_t, std::size_t> locate(std::string_view text,
                                           std::size_t offset) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

std::vector<std::uint64_t> read_uint_array(const json& value,
                                           const std::string& name,
                                           std::vector<std::string>& errors) {
  std::vector<std::uint64_t> out;
  if (!value.is_array()) {
    errors.push_back(name + " must be an array");
    return out;
  }
  for (std::size_t i = 0; i < value.size(); ++i) {
    if (!value[i].is_number_unsigned()) {
      errors.push_back(name + "[" + std::to_string(i) +
                       "] must be a non-negative integer");
      continue;
    }
    out.push_back(value[i].get<std::uint64_t>());
  }
  return out;
}

// Splits text into lines; a trailing newline does not start a new line.
std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  return lines;
}

// Parses whitespace-separated unsigned integers; nullopt on anything else.
std::optional<std::vector<std::uint64_t>> parse_fields(std::string_view line,
                                                       char separator) {
  std::vector<std::uint64_t> out;
  std::size_t i = 0;
  while (i <= line.size()) {
    if (separator == ' ') {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
      if (i == line.size()) break;
    }
    std::uint64_t v = 0;
    const auto res = std::from_chars(line.data() + i, line.data() + line.size(), v);
    if (res.ec != std::errc()) return std::nullopt;
    out.push_back(v);
    i = static_cast<std::size_t>(res.ptr - line.data());
    if (i == line.size()) break;
    if (separator != ' ') {
      if (line[i] != separator) return std::nullopt;
      ++i;
      if (i == line.size()) return std::nullopt;
    } else if (line[i] != ' ' && line[i] != '\t') {
      return std::nullopt;
    }
  }
  return out;
}

constexpr std::string_view kMatrixMarketHeader =
    "%%MatrixMarket matrix coordinate pattern general";
constexpr std::string_view kTsvHeader = "layer\tsource\ttarget";

}  // namespace

std::optional<ExportFormat> parse_format(std::string_view name) {
  if (name == "mm" || name == "matrix-market") return ExportFormat::MatrixMarket;
  if (name == "tsv") return ExportFormat::Tsv;
  return std::nullopt;
}

RadixNetSpec parse_spec(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const std::size_t offset = e.byte > 0 ? e.byte - 1 : 0;
    const auto [line, column] = locate(text, offset);
    std::string message = e.what();
    // Drop nlohmann's "[json.exception.parse_error.101] " prefix.
    if (const auto pos = message.find("] "); pos != std::string::npos) {
      message.erase(0, pos + 2);
    }
    throw ParseError(message, line, column);
  }

  std::vector<std::string> errors;
  if (!doc.is_object()) throw SpecError({"spec document must be a JSON object"});
  for (const auto& [key, value] : doc.items()) {
    if (key != "radix_systems" && key != "dense_widths") {
      errors.push_back("unknown key \"" + key + "\"");
    }
  }

  std::vector<std::vector<std::uint64_t>> systems;
  if (!doc.contains("radix_systems")) {
    errors.emplace_back("missing key \"radix_systems\"");
  } else if (!doc["radix_systems"].is_array()) {
    errors.emplace_back("radix_systems must be an array of arrays");
  } else {
    const json& list = doc["radix_systems"];
    for (std::size_t i = 0; i < list.size(); ++i) {
      systems.push_back(read_uint_array(
          list[i], "radix_systems[" + std::to_string(i) + "]", errors));
    }
  }

  std::vector<Index> widths;
  if (!doc.contains("dense_widths")) {
    errors.emplace_back("missing key \"dense_widths\"");
  } else {
    widths = read_uint_array(doc["dense_widths"], "dense_widths", errors);
  }

  if (!errors.empty()) throw SpecError(std::move(errors));
  return RadixNetSpec::from_lists(systems, std::move(widths));
}

std::string format_spec(const RadixNetSpec& spec) {
  std::string out = "{\"radix_systems\": [";
  for (std::size_t i = 0; i < spec.systems().size(); ++i) {
    if (i) out += ", ";
    out += '[';
    const auto radices = spec.systems()[i].radices();
    for (std::size_t j = 0; j < radices.size(); ++j) {
      if (j) out += ", ";
      append_uint(out, radices[j]);
    }
    out += ']';
  }
  out += "], \"dense_widths\": [";
  for (std::size_t i = 0; i < spec.dense_widths().size(); ++i) {
    if (i) out += ", ";
    append_uint(out, spec.dense_widths()[i]);
  }
  out += "]}\n";
  return out;
}

std::string write_matrix_market(const SparseBinaryMatrix& m) {
  std::string out(kMatrixMarketHeader);
  out += '\n';
  append_uint(out, m.rows());
  out += ' ';
  append_uint(out, m.cols());
  out += ' ';
  append_uint(out, m.nnz());
  out += '\n';
  for (const Coord& e : m.entries()) {
    append_uint(out, e.row + 1);
    out += ' ';
    append_uint(out, e.col + 1);
    out += '\n';
  }
  return out;
}

SparseBinaryMatrix read_matrix_market(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.empty() || lines[0] != kMatrixMarketHeader) {
    throw ParseError("expected header \"" + std::string(kMatrixMarketHeader) +
                         "\"",
                     1, 1);
  }
  std::size_t i = 1;
  while (i < lines.size() && (lines[i].empty() || lines[i][0] == '%')) ++i;
  if (i == lines.size()) throw ParseError("missing size line", i + 1, 1);
  const auto size = parse_fields(lines[i], ' ');
  if (!size || size->size() != 3 || (*size)[0] == 0 || (*size)[1] == 0) {
    throw ParseError("size line must be \"rows cols entries\"", i + 1, 1);
  }
  const Index rows = (*size)[0];
  const Index cols = (*size)[1];
  const std::uint64_t declared = (*size)[2];

  std::vector<Coord> entries;
  entries.reserve(declared);
  for (++i; i < lines.size(); ++i) {
    if (lines[i].empty() || lines[i][0] == '%') continue;
    const auto f = parse_fields(lines[i], ' ');
    if (!f || f->size() != 2) throw ParseError("entry must be \"row col\"", i + 1, 1);
    const auto [r, c] = std::pair{(*f)[0], (*f)[1]};
    if (r < 1 || r > rows || c < 1 || c > cols) {
      throw ParseError("entry outside " + std::to_string(rows) + "x" +
                           std::to_string(cols),
                       i + 1, 1);
    }
    entries.push_back({r - 1, c - 1});
  }
  if (entries.size() != declared) {
    throw ParseError("declared " + std::to_string(declared) + " entries, found " +
                         std::to_string(entries.size()),
                     lines.size(), 1);
  }
  SparseBinaryMatrix m(rows, cols, std::move(entries));
  if (m.nnz() != declared) {
    throw ParseError("duplicate entries", lines.size(), 1);
  }
  return m;
}

std::string write_edges_tsv(const LayeredTopology& t) {
  std::string out(kTsvHeader);
  out += '\n';
  for (std::size_t k = 0; k < t.submatrices.size(); ++k) {
    for (const Coord& e : t.submatrices[k].entries()) {
      append_uint(out, k);
      out += '\t';
      append_uint(out, e.row);
      out += '\t';
      append_uint(out, e.col);
      out += '\n';
    }
  }
  return out;
}

std::vector<SparseBinaryMatrix> read_edges_tsv(
    std::string_view text, std::span<const Index> layer_sizes) {
  if (layer_sizes.size() < 2) {
    throw ParseError("need at least two node layers", 0, 0);
  }
  const auto lines = split_lines(text);
  if (lines.empty() || lines[0] != kTsvHeader) {
    throw ParseError("expected header \"layer\\tsource\\ttarget\"", 1, 1);
  }
  const std::size_t depth = layer_sizes.size() - 1;
  std::vector<std::vector<Coord>> entries(depth);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto f = parse_fields(lines[i], '\t');
    if (!f || f->size() != 3) {
      throw ParseError("row must be \"layer\\tsource\\ttarget\"", i + 1, 1);
    }
    const auto layer = (*f)[0];
    if (layer >= depth || (*f)[1] >= layer_sizes[layer] ||
        (*f)[2] >= layer_sizes[layer + 1]) {
      throw ParseError("edge outside the declared layer sizes", i + 1, 1);
    }
    entries[layer].push_back({(*f)[1], (*f)[2]});
  }
  std::vector<SparseBinaryMatrix> out;
  out.reserve(depth);
  for (std::size_t k = 0; k < depth; ++k) {
    out.emplace_back(layer_sizes[k], layer_sizes[k + 1], std::move(entries[k]));
  }
  return out;
}

std::string layer_file_name(std::size_t i) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "layer_%04zu.mtx", i);
  return buf;
}

std::vector<OutputFile> render_layers(const LayeredTopology& t,
                                      ExportFormat format) {
  std::vector<OutputFile> files;
  if (format == ExportFormat::Tsv) {
    files.push_back({"edges.tsv", write_edges_tsv(t)});
    return files;
  }
  files.reserve(t.submatrices.size());
  for (std::size_t k = 0; k < t.submatrices.size(); ++k) {
    files.push_back({layer_file_name(k + 1), write_matrix_market(t.submatrices[k])});
  }
  return files;
}

std::vector<std::filesystem::path> write_files(
    const std::filesystem::path& dir, std::span<const OutputFile> files) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create directory (" + ec.message() + ")", dir);

  std::vector<std::filesystem::path> written;
  const auto rollback = [&written] {
    for (const auto& p : written) {
      std::error_code ignored;
      std::filesystem::remove(p, ignored);
    }
  };
  for (const OutputFile& f : files) {
    const std::filesystem::path path = dir / f.name;
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (os) written.push_back(path);
    os.write(f.contents.data(), static_cast<std::streamsize>(f.contents.size()));
    os.close();
    if (!os) {
      rollback();
      throw IoError("cannot write file", path);
    }
  }
  return written;
}

std::vector<std::filesystem::path> export_layers(
    const LayeredTopology& t, ExportFormat format,
    const std::filesystem::path& dir) {
  const auto files = render_layers(t, format);
  return write_files(dir, files);
}

std::string export_report(const VerificationReport& r,
                          const RadixNetSpec& spec) {
  std::string out = "{\n  \"layer_sizes\": [";
  for (std::size_t i = 0; i < r.layer_sizes.size(); ++i) {
    if (i) out += ", ";
    append_uint(out, r.layer_sizes[i]);
  }
  out += "],\n  \"edge_count\": ";
  append_uint(out, r.edge_count);
  out += ",\n  \"density_exact\": \"" + format_rational(r.measured_density) + "\"";
  out += ",\n  \"density_float\": " +
         format_double(r.measured_density.convert_to<double>());
  out += ",\n  \"density_approx_mu_over_Nprime\": " +
         format_double(approximate_density(spec));
  out += ",\n  \"path_count\": " + r.path_count_min.str();
  out += ",\n  \"printed_eq5_value\": " + r.printed_eq5_value.str();
  const auto flag = [](bool b) { return b ? "true" : "false"; };
  out += std::string(",\n  \"symmetric\": ") + flag(r.is_symmetric);
  out += std::string(",\n  \"path_connected\": ") + flag(r.is_path_connected);
  out += std::string(",\n  \"fnnt_valid\": ") + flag(r.fnnt_valid);
  out += "\n}\n";
  return out;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw IoError("cannot open file", path);
  std::ostringstream ss;
  ss << is.rdbuf();
  if (is.bad()) throw IoError("cannot read file", path);
  return ss.str();
}

}  // namespace radixnet
