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

#include "recip/csv.hpp"

#include <cmath>
#include <cstdio>

#include "recip/error.hpp"

namespace recip {

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string fmt_double(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    if (x == 0) return "0";  // folds -0
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", x);
    return buf;
}

void CsvTable::add_row(std::vector<std::string> row) {
    if (row.size() != header_.size())
        throw Error(ErrorKind::PreconditionFailed, "CSV row has " + std::to_string(row.size()) + " fields, header has " +
                                                       std::to_string(header_.size()));
    rows_.push_back(std::move(row));
}

std::string CsvTable::str() const {
    std::string out;
    auto emit = [&](const std::vector<std::string>& r) {
        for (std::size_t i = 0; i < r.size(); ++i) {
            if (i) out += ',';
            out += csv_escape(r[i]);
        }
        out += '\n';
    };
    emit(header_);
    for (const auto& r : rows_) emit(r);
    return out;
}

}  // namespace recip
