// Copyright 2026 The recip-sums Authors
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

#include "recip/config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "recip/error.hpp"

namespace recip {

namespace {

std::string trim(std::string s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string> split_list(const std::string& value) {
    std::vector<std::string> out;
    if (trim(value).empty()) return out;
    std::string item;
    std::istringstream ss(value);
    while (std::getline(ss, item, ',')) out.push_back(trim(item));
    return out;
}

std::int64_t to_int(const std::string& s) {
    std::int64_t v = 0;
    const auto* begin = s.data() + (s.starts_with('+') ? 1 : 0);
    auto [ptr, ec] = std::from_chars(begin, s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || begin == s.data() + s.size())
        throw std::invalid_argument("not an integer: '" + s + "'");
    return v;
}

std::uint64_t to_uint(const std::string& s) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
        throw std::invalid_argument("not a nonnegative integer: '" + s + "'");
    return v;
}

std::vector<std::int64_t> int_list(const std::string& v) {
    std::vector<std::int64_t> out;
    for (const auto& s : split_list(v)) out.push_back(to_int(s));
    return out;
}

std::vector<Rational> rational_list(const std::string& v) {
    std::vector<Rational> out;
    for (const auto& s : split_list(v)) {
        try {
            out.push_back(Rational::parse(s));
        } catch (const Error&) {
            throw std::invalid_argument("not a rational: '" + s + "'");
        }
    }
    return out;
}

template <class T>
std::string join(const std::vector<T>& xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ", ";
        if constexpr (std::is_same_v<T, Rational>)
            out += xs[i].str();
        else if constexpr (std::is_same_v<T, std::string>)
            out += xs[i];
        else
            out += std::to_string(xs[i]);
    }
    return out;
}

using Setter = std::function<void(ExperimentConfig&, const std::string&)>;
using Getter = std::function<std::string(const ExperimentConfig&)>;

struct KeySpec {
    const char* name;
    Setter set;
    Getter get;
};

#define RECIP_INT_LIST(field)                                                  \
    KeySpec {                                                                  \
        #field, [](ExperimentConfig& c, const std::string& v) { c.field = int_list(v); }, \
            [](const ExperimentConfig& c) { return join(c.field); }            \
    }

const std::vector<KeySpec>& key_specs() {
    static const std::vector<KeySpec> specs = {
        RECIP_INT_LIST(p),
        RECIP_INT_LIST(f),
        RECIP_INT_LIST(d),
        RECIP_INT_LIST(k),
        RECIP_INT_LIST(a),
        RECIP_INT_LIST(b),
        RECIP_INT_LIST(T),
        RECIP_INT_LIST(U),
        RECIP_INT_LIST(V),
        RECIP_INT_LIST(Z),
        RECIP_INT_LIST(L),
        RECIP_INT_LIST(K),
        RECIP_INT_LIST(nu),
        {"alpha", [](ExperimentConfig& c, const std::string& v) { c.alpha = rational_list(v); },
         [](const ExperimentConfig& c) { return join(c.alpha); }},
        {"beta", [](ExperimentConfig& c, const std::string& v) { c.beta = rational_list(v); },
         [](const ExperimentConfig& c) { return join(c.beta); }},
        {"sums", [](ExperimentConfig& c, const std::string& v) { c.sums = split_list(v); },
         [](const ExperimentConfig& c) { return join(c.sums); }},
        {"quantities", [](ExperimentConfig& c, const std::string& v) { c.quantities = split_list(v); },
         [](const ExperimentConfig& c) { return join(c.quantities); }},
        {"chi_order", [](ExperimentConfig& c, const std::string& v) { c.chi_order = to_int(v); },
         [](const ExperimentConfig& c) { return std::to_string(c.chi_order); }},
        {"chi_index", [](ExperimentConfig& c, const std::string& v) { c.chi_index = to_int(v); },
         [](const ExperimentConfig& c) { return std::to_string(c.chi_index); }},
        {"weights",
         [](ExperimentConfig& c, const std::string& v) {
             if (v != "unit" && v != "random") throw std::invalid_argument("weights must be unit or random");
             c.weights = v;
         },
         [](const ExperimentConfig& c) { return c.weights; }},
        {"seed", [](ExperimentConfig& c, const std::string& v) { c.seed = to_uint(v); },
         [](const ExperimentConfig& c) { return c.seed ? std::to_string(*c.seed) : std::string(); }},
        {"polygon", [](ExperimentConfig& c, const std::string& v) { c.polygon = v; },
         [](const ExperimentConfig& c) { return c.polygon; }},
        {"out", [](ExperimentConfig& c, const std::string& v) { c.out = v; },
         [](const ExperimentConfig& c) { return c.out; }},
        {"workcap", [](ExperimentConfig& c, const std::string& v) { c.workcap = to_uint(v); },
         [](const ExperimentConfig& c) { return c.workcap ? std::to_string(*c.workcap) : std::string(); }},
        {"parallel", [](ExperimentConfig& c, const std::string& v) { c.parallel = to_int(v); },
         [](const ExperimentConfig& c) { return std::to_string(c.parallel); }},
        {"kmax", [](ExperimentConfig& c, const std::string& v) { c.kmax = to_int(v); },
         [](const ExperimentConfig& c) { return std::to_string(c.kmax); }},
    };
    return specs;
}

#undef RECIP_INT_LIST

const KeySpec* find_key(const std::string& name) {
    for (const auto& s : key_specs())
        if (name == s.name) return &s;
    return nullptr;
}

}  // namespace

bool ExperimentConfig::has(const std::string& key) const {
    return std::find(present.begin(), present.end(), key) != present.end();
}

ExperimentConfig parse_config(std::istream& in, const std::string& source) {
    ExperimentConfig cfg;
    std::string line;
    int lineno = 0;
    auto fail = [&](const std::string& msg) {
        throw Error(ErrorKind::ConfigError, source + ":" + std::to_string(lineno) + ": " + msg);
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        if (trim(line).empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) fail("expected 'key = value'");
        const auto key = trim(line.substr(0, eq));
        const auto value = trim(line.substr(eq + 1));
        const auto* spec = find_key(key);
        if (!spec) fail("unknown key '" + key + "'");
        if (cfg.has(key)) fail("duplicate key '" + key + "'");
        try {
            spec->set(cfg, value);
        } catch (const std::exception& e) {
            fail("key '" + key + "': " + e.what());
        }
        cfg.present.push_back(key);
    }
    return cfg;
}

ExperimentConfig parse_config_text(const std::string& text) {
    std::istringstream in(text);
    return parse_config(in);
}

ExperimentConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::ConfigError, "cannot open config " + path);
    return parse_config(in, path);
}

std::string emit_config(const ExperimentConfig& cfg) {
    std::string out;
    for (const auto& key : cfg.present) {
        const auto* spec = find_key(key);
        if (!spec) continue;
        out += key + " = " + spec->get(cfg) + "\n";
    }
    return out;
}

std::int64_t require_single(const std::vector<std::int64_t>& values, const std::string& key) {
    if (values.empty()) throw Error(ErrorKind::ConfigError, "missing required key '" + key + "'");
    if (values.size() != 1) throw Error(ErrorKind::ConfigError, "key '" + key + "' must hold a single value");
    return values.front();
}

}  // namespace recip
