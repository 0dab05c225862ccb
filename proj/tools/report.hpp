// Copyright 2026 The qload Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <chrono>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace qload::cli {

inline constexpr int kCsvSchemaVersion = 1;

/// Shortest round-trip decimal form of `x`.
std::string format_number(double x);

/// 16 hex digits of the FNV-1a hash of `bytes`.
std::string hash_hex(std::string_view bytes);

/// Hash of a file's contents.
std::string file_hash(const std::filesystem::path &path);

/**
 * Provenance record of one command. The hash covers the command, resolved
 * configuration, seed, software version and input hashes, so identical
 * invocations share it.
 */
class RunManifest {
  public:
    RunManifest(std::string command, std::vector<std::string> argv, nlohmann::json config,
                std::uint64_t seed);

    void add_input(const std::filesystem::path &path);
    void add_output(const std::filesystem::path &path);
    /// Extra result fields recorded alongside the provenance.
    nlohmann::json &extra() { return extra_; }

    std::string hash() const;

    /// Final record; the wall-clock duration is null when `omit_timing`.
    nlohmann::json to_json(bool omit_timing) const;

    /// Writes the record to `path` (two-space indented JSON).
    void write(const std::filesystem::path &path, bool omit_timing) const;

  private:
    std::string command_;
    std::vector<std::string> argv_;
    nlohmann::json config_;
    std::uint64_t seed_;
    nlohmann::json inputs_ = nlohmann::json::array();
    std::vector<std::string> outputs_;
    nlohmann::json extra_ = nlohmann::json::object();
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

/// RFC 4180 table with a leading "# qload-csv v<schema> manifest=<hash>" line.
class CsvTable {
  public:
    explicit CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}

    void add_row(std::vector<std::string> row);
    /// Stable sort on the given column indices, numeric where both cells parse.
    void sort_by(const std::vector<std::size_t> &columns);
    std::string render(const std::string &manifest_hash) const;

  private:
    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
};

/// Writes `text` to `path`, or to stdout for "-".
void write_text(const std::string &path, const std::string &text);

/// Path of the manifest written next to an output file.
std::filesystem::path manifest_path(const std::filesystem::path &output);

} // namespace qload::cli
