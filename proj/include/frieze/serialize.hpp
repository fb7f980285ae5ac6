// Copyright 2026 The Frieze Authors
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

#ifndef FRIEZE_SERIALIZE_HPP
#define FRIEZE_SERIALIZE_HPP

#include <string>
#include <string_view>

#include "frieze/fareygraph.hpp"
#include "frieze/pathcount.hpp"
#include "frieze/window.hpp"

namespace frieze {

// Graph export. Vertices appear in canonical order and edges sorted by
// (from, to), so output is byte-stable.
std::string graph_to_dot(const FareyGraph& G);
std::string graph_to_json(const FareyGraph& G);

/// Counts are written as decimal strings. Elapsed time is only included on
/// request since it breaks byte-stability.
std::string count_report_to_json(const CountReport& report,
                                 bool include_elapsed = false);

// Frieze text format:
//   frieze n=<n> m=<m> period=<P>
//   <P residues of row 0>
//   ...
//   <P residues of row m>
std::string window_to_text(const FriezeWindow& w);
/// Throws Error(kParse) on malformed input.
FriezeWindow window_from_text(std::string_view text);

/// {"n":..,"m":..,"period":..,"rows":[[..],..]}
std::string window_to_json(const FriezeWindow& w);
FriezeWindow window_from_json(std::string_view text);

}  // namespace frieze

#endif  // FRIEZE_SERIALIZE_HPP
