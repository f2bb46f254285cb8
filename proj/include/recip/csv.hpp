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

#pragma once

#include <string>
#include <vector>

namespace recip {

/// RFC 4180 style CSV: header row first, CRLF-free (LF line ends), fields
/// quoted only when they contain a comma, quote or newline.
class CsvTable {
  public:
    explicit CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}

    const std::vector<std::string>& header() const noexcept { return header_; }
    std::size_t rows() const noexcept { return rows_.size(); }

    /// Throws PreconditionFailed if the row width differs from the header.
    void add_row(std::vector<std::string> row);

    std::string str() const;

  private:
    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
};

std::string csv_escape(const std::string& field);
/// Shortest "%.15g" rendering; non-finite values become "inf"/"-inf"/"nan".
std::string fmt_double(double x);

}  // namespace recip
