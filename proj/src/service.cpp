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

#include "frieze/service.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include "frieze/error.hpp"
#include "frieze/fareygraph.hpp"
#include "frieze/modring.hpp"
#include "rng.hpp"

namespace frieze {

using nlohmann::json;

namespace {

void check_count_bounds(const FriezeCountQuery& q, bool unsafe_large) {
  if (q.n < 2) throw Error(ErrorCode::kInvalidParams, "n must be >= 2");
  if (q.m < 2) throw Error(ErrorCode::kInvalidParams, "m must be >= 2");
  if (unsafe_large) return;
  if (q.n > kMaxCountModulus) {
    throw Error(ErrorCode::kInvalidParams,
                "n > " + std::to_string(kMaxCountModulus) +
                    " needs --unsafe-large");
  }
  if (q.m > kMaxWidth) {
    throw Error(ErrorCode::kInvalidParams,
                "m > " + std::to_string(kMaxWidth) + " needs --unsafe-large");
  }
}

const char* source_name(CountSource s) {
  switch (s) {
    case CountSource::kFormula: return "formula";
    case CountSource::kEnumerate: return "enumerate";
    case CountSource::kBoth: return "both";
  }
  return "?";
}

void enumerate_into(FriezeCount& out, const FareyGraph& G) {
  const FriezeCountQuery& q = out.query;
  if (q.kind == FriezeKind::kTame) {
    out.path_count = count_X(G, q.m);
    out.enumerated = *out.path_count * totient(q.n);
  } else {
    out.path_count = count_Y(G, q.m);
    if (!mpz_divisible_ui_p(out.path_count->get_mpz_t(),
                            static_cast<unsigned long>(q.n))) {
      throw Error(ErrorCode::kNonIntegerResult, "|Y_m(n)| is not divisible by n");
    }
    out.enumerated = *out.path_count / static_cast<unsigned long>(q.n);
  }
}

json count_report_json(const FriezeCount& c, bool formula_side) {
  json doc;
  doc["kind"] = kind_name(c.query.kind);
  doc["n"] = c.query.n;
  doc["m"] = c.query.m;
  if (formula_side) {
    doc["method"] = "formula";
    doc["count"] = to_decimal(*c.formula);
  } else {
    doc["method"] = "transfer_matrix";
    doc["count"] = to_decimal(*c.enumerated);
    doc["path_family"] = c.query.kind == FriezeKind::kTame ? "X" : "Y";
    doc["path_count"] = to_decimal(*c.path_count);
  }
  return doc;
}

}  // namespace

CountCache::CountCache(std::string directory) : directory_(std::move(directory)) {
  std::ifstream in(path());
  if (!in) return;
  try {
    const json doc = json::parse(in);
    for (const auto& [key, value] : doc.items()) {
      entries_[key] = value.get<std::string>();
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kIo, "unreadable cache " + path() + ": " + e.what());
  }
}

std::string CountCache::path() const {
  return (std::filesystem::path(directory_) / "counts.json").string();
}

std::optional<BigNat> CountCache::lookup(const std::string& key) const {
  const auto it = entries_.find(key);
  if (it == entries_.end()) return std::nullopt;
  BigNat out;
  if (out.set_str(it->second, 10) != 0) return std::nullopt;
  return out;
}

void CountCache::store(const std::string& key, const BigNat& value) {
  entries_[key] = to_decimal(value);
}

void CountCache::save() const {
  std::error_code ec;
  std::filesystem::create_directories(directory_, ec);
  std::ofstream out(path());
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path());
  json doc = json::object();
  for (const auto& [key, value] : entries_) doc[key] = value;
  out << doc.dump(2) << '\n';
}

std::string cache_key(const FriezeCountQuery& query, CountSource source) {
  return std::string(kind_name(query.kind)) + ":n=" + std::to_string(query.n) +
         ":m=" + std::to_string(query.m) + ":" + source_name(source);
}

FriezeCount count_friezes(const FriezeCountQuery& query, CountSource source,
                          const CountOptions& options) {
  check_count_bounds(query, options.unsafe_large);
  FriezeCount out;
  out.query = query;
  const bool want_formula = source != CountSource::kEnumerate;
  const bool want_paths = source != CountSource::kFormula;

  if (want_formula) {
    const std::string key = cache_key(query, CountSource::kFormula);
    if (options.cache) out.formula = options.cache->lookup(key);
    if (!out.formula) {
      out.formula = frieze_count_formula(query);
      if (options.cache) options.cache->store(key, *out.formula);
    }
  }
  if (want_paths) {
    const std::string key = cache_key(query, CountSource::kEnumerate);
    const std::string path_key = key + ":paths";
    if (options.cache) {
      out.enumerated = options.cache->lookup(key);
      out.path_count = options.cache->lookup(path_key);
    }
    if (!out.enumerated || !out.path_count) {
      enumerate_into(out, FareyGraph(query.n));
      if (options.cache) {
        options.cache->store(key, *out.enumerated);
        options.cache->store(path_key, *out.path_count);
      }
    }
  }
  return out;
}

std::string frieze_count_to_json(const FriezeCount& count) {
  json doc;
  doc["kind"] = kind_name(count.query.kind);
  doc["n"] = count.query.n;
  doc["m"] = count.query.m;
  json reports = json::array();
  if (count.formula) reports.push_back(count_report_json(count, true));
  if (count.enumerated) reports.push_back(count_report_json(count, false));
  doc["reports"] = std::move(reports);
  doc["match"] = count.match();
  return doc.dump(2) + "\n";
}

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn) {
  const std::size_t workers =
      std::min<std::size_t>(count, std::max(1U, std::thread::hardware_concurrency()));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(count);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          fn(i);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

std::vector<FriezeCount> count_table(FriezeKind kind, Int n_max, unsigned m_max,
                                     bool unsafe_large) {
  if (n_max < 2 || m_max < 2) {
    throw Error(ErrorCode::kInvalidParams, "table needs n-max >= 2 and m-max >= 2");
  }
  if (!unsafe_large && (n_max > kMaxTableModulus || m_max > kMaxWidth)) {
    throw Error(ErrorCode::kInvalidParams,
                "table n-max > " + std::to_string(kMaxTableModulus) +
                    " needs --unsafe-large");
  }
  std::vector<FriezeCountQuery> cells;
  for (Int n = 2; n <= n_max; ++n) {
    for (unsigned m = 2; m <= m_max; ++m) cells.push_back({n, m, kind});
  }
  std::vector<FriezeCount> rows(cells.size());
  parallel_for(cells.size(), [&](std::size_t i) {
    rows[i] = count_friezes(cells[i], CountSource::kBoth, {true, nullptr});
  });
  return rows;
}

std::string table_to_csv(const std::vector<FriezeCount>& rows) {
  std::ostringstream out;
  out << "kind,n,m,formula,enumerated,match\n";
  for (const FriezeCount& r : rows) {
    out << kind_name(r.query.kind) << ',' << r.query.n << ',' << r.query.m << ','
        << to_decimal(*r.formula) << ',' << to_decimal(*r.enumerated) << ','
        << (r.match() ? "true" : "false") << '\n';
  }
  return out.str();
}

std::string table_to_json(const std::vector<FriezeCount>& rows) {
  json doc = json::array();
  for (const FriezeCount& r : rows) {
    doc.push_back(json::array({count_report_json(r, true), count_report_json(r, false)}));
  }
  return doc.dump(2) + "\n";
}

namespace {

void check_render_bounds(Int n, unsigned m, bool unsafe_large) {
  if (n < 2) throw Error(ErrorCode::kInvalidParams, "n must be >= 2");
  if (m < 2) throw Error(ErrorCode::kInvalidParams, "m must be >= 2");
  if (!unsafe_large && (n > kMaxCountModulus || m > kMaxWidth)) {
    throw Error(ErrorCode::kInvalidParams, "render bounds exceeded; use --unsafe-large");
  }
}

}  // namespace

RenderResult render_indexed(Int n, unsigned m, const BigNat& index,
                            unsigned periods, bool unsafe_large) {
  check_render_bounds(n, m, unsafe_large);
  const FareyGraph G(n);
  const Vertex start(1, 0, n);
  const BigNat total = count_Y(G, m);
  Path path = unrank_path(G, start, negate(start), m, index);
  FriezeWindow window = render_from_path(path, periods);
  return {std::move(path), index, total, std::move(window)};
}

RenderResult render_seeded(Int n, unsigned m, std::uint64_t seed,
                           unsigned periods, bool unsafe_large) {
  check_render_bounds(n, m, unsafe_large);
  const BigNat total = count_Y(n, m);
  if (total == 0) {
    throw Error(ErrorCode::kOutOfRange, "no semiclosed paths of this length");
  }
  Rng rng(seed);
  return render_indexed(n, m, rng.below(total), periods, unsafe_large);
}

}  // namespace frieze
