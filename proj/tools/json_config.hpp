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

#include <fstream>
#include <istream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

namespace qload::cli {

/**
 * CLI11 config formatter for flat JSON objects keyed by long option names.
 * Arrays map to multi-value options; nested objects address subcommands.
 * Values given on the command line take precedence over the file.
 * Nested objects are rejected by apply(), which serves subcommand-level files.
 */
class JsonConfig : public CLI::Config {
  public:
    std::string to_config(const CLI::App *app, bool default_also, bool, std::string) const override {
        return options_json(*app, default_also).dump(2);
    }

    std::vector<CLI::ConfigItem> from_config(std::istream &input) const override {
        nlohmann::json j;
        try {
            input >> j;
        } catch (const nlohmann::json::exception &e) {
            throw CLI::ConversionError("config", std::string("invalid JSON: ") + e.what());
        }
        if (!j.is_object()) throw CLI::ConversionError("config", "top level must be an object");
        std::vector<CLI::ConfigItem> items;
        collect(j, {}, items);
        return items;
    }

    /// Fills options of `app` not given on the command line from the JSON file at `path`.
    static void apply(CLI::App &app, const std::string &path) {
        std::ifstream in(path);
        if (!in) throw CLI::FileError::Missing(path);
        for (const CLI::ConfigItem &item : JsonConfig().from_config(in)) {
            if (!item.parents.empty()) {
                throw CLI::ConfigError::Extras(CLI::detail::join(item.parents, ".") + "." + item.name);
            }
            CLI::Option *opt = app.get_option_no_throw("--" + item.name);
            if (opt == nullptr || item.name == "config") throw CLI::ConfigError::Extras(item.name);
            if (opt->count() > 0) continue;
            for (const std::string &v : item.inputs) opt->add_result(v);
            opt->run_callback();
        }
    }

    /// Resolved option values of `app` as a JSON object.
    static nlohmann::json options_json(const CLI::App &app, bool default_also = true) {
        nlohmann::json out = nlohmann::json::object();
        for (const CLI::Option *opt : app.get_options()) {
            if (opt->get_lnames().empty() || !opt->get_configurable()) continue;
            const std::string &name = opt->get_lnames().front();
            if (name == "help" || name == "config") continue;
            std::vector<std::string> vals = opt->results();
            if (vals.empty()) {
                if (!default_also) continue;
                const std::string d = opt->get_default_str();
                if (opt->get_type_size() == 0) {
                    out[name] = false;
                    continue;
                }
                if (d.empty()) continue;
                vals = split_default(d);
            }
            if (opt->get_type_size() == 0) {
                out[name] = vals.back() != "false" && vals.back() != "0";
            } else if (opt->get_items_expected_max() > 1) {
                nlohmann::json arr = nlohmann::json::array();
                for (const std::string &v : vals) arr.push_back(scalar(v));
                out[name] = arr;
            } else {
                out[name] = scalar(vals.back());
            }
        }
        return out;
    }

  private:
    static void collect(const nlohmann::json &j, const std::vector<std::string> &parents,
                        std::vector<CLI::ConfigItem> &items) {
        for (const auto &[key, value] : j.items()) {
            if (value.is_object()) {
                std::vector<std::string> p = parents;
                p.push_back(key);
                collect(value, p, items);
                continue;
            }
            CLI::ConfigItem item;
            item.parents = parents;
            item.name = key;
            if (value.is_array()) {
                for (const auto &v : value) item.inputs.push_back(text(v));
            } else {
                item.inputs.push_back(text(value));
            }
            items.push_back(std::move(item));
        }
    }

    static std::string text(const nlohmann::json &v) {
        if (v.is_string()) return v.get<std::string>();
        if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
        return v.dump();
    }

    static std::vector<std::string> split_default(const std::string &d) {
        std::string s = d;
        if (s.size() >= 2 && s.front() == '[' && s.back() == ']') s = s.substr(1, s.size() - 2);
        std::vector<std::string> out;
        std::string cur;
        for (char c : s) {
            if (c == ',') {
                out.push_back(CLI::detail::trim_copy(cur));
                cur.clear();
            } else {
                cur += c;
            }
        }
        out.push_back(CLI::detail::trim_copy(cur));
        return out;
    }

    static nlohmann::json scalar(const std::string &v) {
        nlohmann::json parsed = nlohmann::json::parse(v, nullptr, false);
        if (!parsed.is_discarded() && (parsed.is_number() || parsed.is_boolean())) return parsed;
        return v;
    }
};

} // namespace qload::cli
