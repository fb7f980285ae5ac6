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

#include "frieze/serialize.hpp"

#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

#include "frieze/error.hpp"

namespace frieze {

using nlohmann::json;

std::string graph_to_dot(const FareyGraph& G) {
  std::ostringstream out;
  out << "digraph E_" << G.modulus() << " {\n";
  for (const Vertex& v : G.vertices()) out << "  \"" << v.label() << "\";\n";
  for (const DirectedEdge& e : G.edges()) {
    out << "  \"" << e.from.label() << "\" -> \"" << e.to.label() << "\";\n";
  }
  out << "}\n";
  return out.str();
}

std::string graph_to_json(const FareyGraph& G) {
  json vertices = json::array();
  for (const Vertex& v : G.vertices()) vertices.push_back(v.label());
  json edges = json::array();
  for (const DirectedEdge& e : G.edges()) {
    edges.push_back({{"from", e.from.label()}, {"to", e.to.label()}});
  }
  json doc = {{"n", G.modulus()},
              {"vertex_count", G.vertex_count()},
              {"edge_count", G.edge_count()},
              {"vertices", std::move(vertices)},
              {"edges", std::move(edges)}};
  return doc.dump(2) + "\n";
}

std::string count_report_to_json(const CountReport& report, bool include_elapsed) {
  const PathFamilyQuery& q = report.query;
  json doc;
  doc["family"] = family_name(q.family);
  if (q.family == Family::kX || q.family == Family::kY) {
    doc["n"] = q.n;
  } else {
    doc["p"] = q.p;
    if (q.family != Family::kOmega) doc["r"] = q.r;
    if (q.family == Family::kZt) doc["t"] = q.t;
  }
  doc["m"] = q.m;
  doc["method"] = method_name(report.method);
  doc["count"] = to_decimal(report.count);
  if (include_elapsed) doc["elapsed_ns"] = report.elapsed.count();
  return doc.dump();
}

std::string window_to_text(const FriezeWindow& w) {
  std::ostringstream out;
  out << "frieze n=" << w.modulus() << " m=" << w.width()
      << " period=" << w.period() << "\n";
  for (const auto& row : w.rows()) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0) out << ' ';
      out << row[i];
    }
    out << '\n';
  }
  return out.str();
}

namespace {

[[noreturn]] void parse_error(const std::string& what) {
  throw Error(ErrorCode::kParse, "frieze text: " + what);
}

long long parse_field(const std::string& token, const std::string& key) {
  const std::string prefix = key + "=";
  if (token.rfind(prefix, 0) != 0) parse_error("expected " + prefix);
  const std::string digits = token.substr(prefix.size());
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
    parse_error("bad value for " + key);
  }
  try {
    return std::stoll(digits);
  } catch (const std::exception&) {
    parse_error("value out of range for " + key);
  }
}

}  // namespace

FriezeWindow window_from_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line)) parse_error("empty input");
  std::istringstream header(line);
  std::string word, tn, tm, tp, extra;
  header >> word >> tn >> tm >> tp;
  if (word != "frieze" || (header >> extra)) parse_error("bad header '" + line + "'");
  const long long n = parse_field(tn, "n");
  const long long m = parse_field(tm, "m");
  const long long period = parse_field(tp, "period");
  if (n < 2 || m < 1 || period < 1) parse_error("n >= 2, m >= 1, period >= 1 required");
  if (m > 100000 || period > 10000000) parse_error("dimensions too large");

  std::vector<std::vector<Int>> rows;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() && rows.size() == static_cast<std::size_t>(m + 1)) continue;
    std::istringstream row_in(line);
    std::vector<Int> row;
    std::string tok;
    while (row_in >> tok) {
      if (tok.size() > 18 || tok.find_first_not_of("0123456789") != std::string::npos) {
        parse_error("bad residue '" + tok + "'");
      }
      const long long x = std::stoll(tok);
      if (x >= n) parse_error("residue " + tok + " is not below n");
      row.push_back(x);
    }
    if (row.size() != static_cast<std::size_t>(period)) {
      parse_error("row " + std::to_string(rows.size()) + " has " +
                  std::to_string(row.size()) + " entries");
    }
    rows.push_back(std::move(row));
  }
  if (rows.size() != static_cast<std::size_t>(m + 1)) {
    parse_error("expected " + std::to_string(m + 1) + " rows");
  }
  return FriezeWindow(n, static_cast<unsigned>(m), static_cast<std::size_t>(period),
                      std::move(rows));
}

std::string window_to_json(const FriezeWindow& w) {
  json doc = {{"n", w.modulus()},
              {"m", w.width()},
              {"period", w.period()},
              {"rows", w.rows()}};
  return doc.dump();
}

FriezeWindow window_from_json(std::string_view text) {
  try {
    const json doc = json::parse(text);
    return FriezeWindow(doc.at("n").get<Int>(), doc.at("m").get<unsigned>(),
                        doc.at("period").get<std::size_t>(),
                        doc.at("rows").get<std::vector<std::vector<Int>>>());
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("frieze json: ") + e.what());
  }
}

}  // namespace frieze
