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

#include "report.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>

#include "qload/random.hpp"
#include "qload/types.hpp"

namespace qload::cli {

namespace {

std::string csv_escape(const std::string &s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::optional<double> as_number(const std::string &s) {
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
    return v;
}

} // namespace

std::string format_number(double x) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return ec == std::errc() ? std::string(buf, ptr) : std::string("nan");
}

std::string hash_hex(std::string_view bytes) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(bytes)));
    return buf;
}

std::string file_hash(const std::filesystem::path &path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw Error("cannot open " + path.string());
    std::ostringstream buf;
    buf << f.rdbuf();
    return hash_hex(buf.str());
}

RunManifest::RunManifest(std::string command, std::vector<std::string> argv,
                         nlohmann::json config, std::uint64_t seed)
    : command_(std::move(command)), argv_(std::move(argv)), config_(std::move(config)),
      seed_(seed) {}

void RunManifest::add_input(const std::filesystem::path &path) {
    inputs_.push_back({{"path", path.string()}, {"fnv1a64", file_hash(path)}});
}

void RunManifest::add_output(const std::filesystem::path &path) {
    outputs_.push_back(path.string());
}

std::string RunManifest::hash() const {
    nlohmann::json config = config_;
    config.erase("out");
    config.erase("out-dir");
    config.erase("jobs");
    const nlohmann::json key{{"command", command_},
                             {"config", config},
                             {"seed", seed_},
                             {"version", QLOAD_VERSION},
                             {"inputs", inputs_}};
    return hash_hex(key.dump());
}

nlohmann::json RunManifest::to_json(bool omit_timing) const {
    nlohmann::json j{{"manifest_hash", hash()},
                     {"command", command_},
                     {"command_line", argv_},
                     {"config", config_},
                     {"seed", seed_},
                     {"version", QLOAD_VERSION},
                     {"csv_schema", kCsvSchemaVersion},
                     {"inputs", inputs_},
                     {"outputs", outputs_}};
    if (omit_timing) {
        j["wall_ms"] = nullptr;
    } else {
        j["wall_ms"] = std::chrono::duration<double, std::milli>(
                           std::chrono::steady_clock::now() - start_)
                           .count();
    }
    if (!extra_.empty()) j["result"] = extra_;
    return j;
}

void RunManifest::write(const std::filesystem::path &path, bool omit_timing) const {
    write_text(path.string(), to_json(omit_timing).dump(2) + "\n");
}

void CsvTable::add_row(std::vector<std::string> row) {
    if (row.size() != header_.size()) throw InvalidArgument("CSV row width mismatch");
    rows_.push_back(std::move(row));
}

void CsvTable::sort_by(const std::vector<std::size_t> &columns) {
    std::stable_sort(rows_.begin(), rows_.end(), [&](const auto &a, const auto &b) {
        for (std::size_t c : columns) {
            const auto x = as_number(a[c]);
            const auto y = as_number(b[c]);
            if (x && y) {
                if (*x != *y) return *x < *y;
            } else if (a[c] != b[c]) {
                return a[c] < b[c];
            }
        }
        return false;
    });
}

std::string CsvTable::render(const std::string &manifest_hash) const {
    std::string out = "# qload-csv v" + std::to_string(kCsvSchemaVersion) +
                      " manifest=" + manifest_hash + "\r\n";
    auto line = [&](const std::vector<std::string> &cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) out += ',';
            out += csv_escape(cells[i]);
        }
        out += "\r\n";
    };
    line(header_);
    for (const auto &r : rows_) line(r);
    return out;
}

void write_text(const std::string &path, const std::string &text) {
    if (path == "-") {
        std::cout << text << std::flush;
        return;
    }
    const std::filesystem::path p(path);
    if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
    std::ofstream f(p, std::ios::binary);
    if (!f) throw Error("cannot open " + path + " for writing");
    f << text;
    if (!f) throw Error("write to " + path + " failed");
}

std::filesystem::path manifest_path(const std::filesystem::path &output) {
    std::filesystem::path p = output;
    p.replace_extension(".manifest.json");
    return p;
}

} // namespace qload::cli
