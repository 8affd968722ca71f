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

// Spec ingestion and deterministic export.
//
// Formats (see docs/FORMATS.md):
//   spec      {"radix_systems": [[...], ...], "dense_widths": [...]}
//   mm        one "coordinate pattern general" Matrix Market file per edge
//             layer, layer_0001.mtx upward, 1-based indices
//   tsv       edges.tsv, header "layer\tsource\ttarget", 0-based indices
//   report    report JSON with a fixed key order

#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "radixnet/matrix.hpp"
#include "radixnet/topology.hpp"
#include "radixnet/verify.hpp"

namespace radixnet {

enum class ExportFormat { MatrixMarket, Tsv };

/// "mm" / "matrix-market" / "tsv".
std::optional<ExportFormat> parse_format(std::string_view name);

/// Throws ParseError (with line and column) for malformed JSON and
/// SpecError listing every violated constraint otherwise.
RadixNetSpec parse_spec(std::string_view text);

/// Canonical spec document for a spec; parse_spec inverts it.
std::string format_spec(const RadixNetSpec& spec);

std::string write_matrix_market(const SparseBinaryMatrix& m);

/// Throws ParseError on a bad header, size line or entry.
SparseBinaryMatrix read_matrix_market(std::string_view text);

std::string write_edges_tsv(const LayeredTopology& t);

/// Splits an edge list back into submatrices; layer_sizes gives the node
/// count of every node layer. Throws ParseError.
std::vector<SparseBinaryMatrix> read_edges_tsv(std::string_view text,
                                               std::span<const Index> layer_sizes);

/// layer_0001.mtx for i = 1.
std::string layer_file_name(std::size_t i);

struct OutputFile {
  std::string name;
  std::string contents;
};

std::vector<OutputFile> render_layers(const LayeredTopology& t,
                                      ExportFormat format);

/// Writes every file under dir (created if missing). All or nothing: on the
/// first failure, files already written by this call are removed and
/// IoError is thrown. Returns the written paths in order.
std::vector<std::filesystem::path> write_files(
    const std::filesystem::path& dir, std::span<const OutputFile> files);

std::vector<std::filesystem::path> export_layers(
    const LayeredTopology& t, ExportFormat format,
    const std::filesystem::path& dir);

/// Report JSON. Integers are written in full (no 64-bit limit) and exact
/// rationals as "num/den" strings.
std::string export_report(const VerificationReport& r, const RadixNetSpec& spec);

/// Throws IoError.
std::string read_text_file(const std::filesystem::path& path);

}  // namespace radixnet
