//
// Copyright 2026 The sentanalogy Authors
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
//

#include "sentanalogy/solver.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <exception>
#include <functional>
#include <istream>
#include <ostream>
#include <thread>
#include <unordered_map>
#include <utility>

#include "jsonl.h"
#include "sentanalogy/error.h"
#include "sentanalogy/text.h"

namespace sentanalogy {

using internal::Json;

namespace {

// Largest category pool scored through a full similarity matrix
// (8192^2 doubles = 512 MiB). Larger pools compute rows per question.
constexpr std::size_t kMaxGramPool = 8192;

// Norms and mutual dot products of the query items A, B, C.
struct Query {
  std::size_t a, b, c;
  double na, nb, nc;
  double ab, ac, bc;  // only used by the offset form
};

class ZeroNormCounter {
 public:
  void Add() { ++count_; }
  void FlushTo(SolverStats* stats) {
    if (stats != nullptr && count_ > 0) {
      stats->zero_norm_similarities.fetch_add(count_,
                                              std::memory_order_relaxed);
    }
    count_ = 0;
  }

 private:
  std::uint64_t count_ = 0;
};

inline double CosFromDot(double dot, double n1, double n2,
                         ZeroNormCounter& zeros) {
  if (n1 == 0.0 || n2 == 0.0) {
    zeros.Add();
    return 0.0;
  }
  return dot / (n1 * n2);
}

inline double Shift(double cos) { return (cos + 1.0) / 2.0; }

// Score of a candidate with norm `nd` and dot products `da`, `db`, `dc`
// against the query items. Every scoring path funnels through here.
inline double ScoreFromDots(const SolverConfig& config, const Query& q,
                            double nd, double da, double db, double dc,
                            ZeroNormCounter& zeros) {
  if (config.metric == Metric::kCosMul) {
    const double sc = Shift(CosFromDot(dc, nd, q.nc, zeros));
    const double sb = Shift(CosFromDot(db, nd, q.nb, zeros));
    const double sa = Shift(CosFromDot(da, nd, q.na, zeros));
    return sc * sb / (sa + config.epsilon);
  }
  if (config.add_form == AddForm::kOffset) {
    // t = b - a + c
    const double tt = q.na * q.na + q.nb * q.nb + q.nc * q.nc - 2.0 * q.ab -
                      2.0 * q.ac + 2.0 * q.bc;
    const double nt = std::sqrt(std::max(tt, 0.0));
    return CosFromDot(db - da + dc, nd, nt, zeros);
  }
  return CosFromDot(dc, nd, q.nc, zeros) + CosFromDot(db, nd, q.nb, zeros) -
         CosFromDot(da, nd, q.na, zeros);
}

struct Resolved {
  std::size_t a, b, c, gold;
};

Resolved ResolveQuestion(const AnalogyQuestion& q, const EmbeddingTable& t) {
  return {t.IndexOf(q.a), t.IndexOf(q.b), t.IndexOf(q.c), t.IndexOf(q.gold_d)};
}

Query MakeQuery(const EmbeddingTable& t, const Resolved& r) {
  return {r.a,         r.b,         r.c,         t.norm(r.a), t.norm(r.b),
          t.norm(r.c), t.Dot(r.a, r.b), t.Dot(r.a, r.c), t.Dot(r.b, r.c)};
}

// Runs the argmax over `candidates`. `dots(p)` returns {da, db, dc} for the
// candidate at position p.
template <typename DotsFn>
Prediction ScoreCandidates(const AnalogyQuestion& question,
                           const EmbeddingTable& table, const Resolved& r,
                           const Query& query,
                           std::span<const std::size_t> candidates,
                           const SolverConfig& config, DotsFn&& dots,
                           ZeroNormCounter& zeros) {
  const bool want_top = config.top_k > 1;
  std::vector<std::pair<double, std::size_t>> scored;
  if (want_top) scored.reserve(candidates.size());

  std::size_t best_pos = candidates.size();
  double best_score = 0.0;
  std::size_t gold_pos = candidates.size();
  double gold_score = 0.0;
  // Scores are kept so the gold rank can be computed after the scan.
  std::vector<double> scores(candidates.size());
  std::vector<char> live(candidates.size(), 0);

  for (std::size_t p = 0; p < candidates.size(); ++p) {
    const std::size_t x = candidates[p];
    if (config.constrained && (x == r.a || x == r.b || x == r.c)) continue;
    const auto [da, db, dc] = dots(p);
    const double s =
        ScoreFromDots(config, query, table.norm(x), da, db, dc, zeros);
    scores[p] = s;
    live[p] = 1;
    if (best_pos == candidates.size() || s > best_score) {
      best_pos = p;
      best_score = s;
    }
    if (x == r.gold && gold_pos == candidates.size()) {
      gold_pos = p;
      gold_score = s;
    }
    if (want_top) scored.emplace_back(s, p);
  }
  if (best_pos == candidates.size()) {
    throw InvalidArgument("question " + question.qid +
                          ": no candidate left after exclusion");
  }

  Prediction out;
  out.qid = question.qid;
  out.predicted = table.id(candidates[best_pos]);
  out.score = best_score;
  out.correct = candidates[best_pos] == r.gold;
  out.metric = config.metric;
  out.constrained = config.constrained;
  if (gold_pos != candidates.size()) {
    std::size_t rank = 1;
    for (std::size_t p = 0; p < candidates.size(); ++p) {
      if (!live[p]) continue;
      if (scores[p] > gold_score || (scores[p] == gold_score && p < gold_pos)) {
        ++rank;
      }
    }
    out.rank_of_gold = rank;
  }
  if (want_top) {
    const std::size_t k =
        std::min<std::size_t>(static_cast<std::size_t>(config.top_k),
                              scored.size());
    std::partial_sort(scored.begin(), scored.begin() + static_cast<long>(k),
                      scored.end(), [](const auto& l, const auto& r) {
                        return l.first > r.first ||
                               (l.first == r.first && l.second < r.second);
                      });
    for (std::size_t i = 0; i < k; ++i) {
      out.top.push_back(table.id(candidates[scored[i].second]));
    }
  }
  return out;
}

Prediction SolveDirect(const AnalogyQuestion& question,
                       const EmbeddingTable& table, const Resolved& r,
                       std::span<const std::size_t> candidates,
                       const SolverConfig& config, ZeroNormCounter& zeros) {
  const Query query = MakeQuery(table, r);
  auto va = table.vector(r.a), vb = table.vector(r.b), vc = table.vector(r.c);
  auto dots = [&](std::size_t p) {
    auto vd = table.vector(candidates[p]);
    return std::array<double, 3>{DotProduct(vd, va), DotProduct(vd, vb),
                                 DotProduct(vd, vc)};
  };
  return ScoreCandidates(question, table, r, query, candidates, config, dots,
                         zeros);
}

void ParallelFor(std::size_t n, unsigned threads,
                 const std::function<void(std::size_t, std::size_t)>& body) {
  if (n == 0) return;
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, n));
  if (threads <= 1) {
    body(0, n);
    return;
  }
  const std::size_t chunk = std::max<std::size_t>(1, n / (threads * 8));
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(threads);
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      try {
        while (true) {
          const std::size_t begin = next.fetch_add(chunk);
          if (begin >= n) break;
          body(begin, std::min(n, begin + chunk));
        }
      } catch (...) {
        errors[t] = std::current_exception();
        next.store(n);
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

// Symmetric pool-by-pool dot-product matrix.
std::vector<double> PoolGram(const EmbeddingTable& table,
                             const std::vector<std::size_t>& pool,
                             unsigned threads) {
  const std::size_t m = pool.size();
  std::vector<double> gram(m * m);
  ParallelFor(m, threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      auto vi = table.vector(pool[i]);
      for (std::size_t j = 0; j < m; ++j) {
        gram[i * m + j] = DotProduct(vi, table.vector(pool[j]));
      }
    }
  });
  return gram;
}

}  // namespace

void ValidateSolverConfig(const SolverConfig& config) {
  if (!(config.epsilon > 0.0)) {
    throw InvalidArgument("epsilon must be positive");
  }
  if (config.top_k < 1) throw InvalidArgument("top_k must be >= 1");
}

Metric ParseMetric(std::string_view raw) {
  const std::string name = ToLower(raw);
  if (name == "add" || name == "3cosadd" || name == "cos_add") {
    return Metric::kCosAdd;
  }
  if (name == "mul" || name == "3cosmul" || name == "cos_mul") {
    return Metric::kCosMul;
  }
  throw InvalidArgument("unknown metric '" + std::string(raw) + "'");
}

std::string_view MetricName(Metric metric) {
  return metric == Metric::kCosMul ? "3CosMul" : "3CosAdd";
}

std::string_view MetricShortName(Metric metric) {
  return metric == Metric::kCosMul ? "mul" : "add";
}

std::string_view ProtocolName(bool constrained) {
  return constrained ? "constrained" : "unconstrained";
}

double SafeCosine(const EmbeddingTable& table, std::size_t i, std::size_t j,
                  SolverStats* stats) {
  ZeroNormCounter zeros;
  const double c = CosFromDot(table.Dot(i, j), table.norm(i), table.norm(j),
                              zeros);
  zeros.FlushTo(stats);
  return c;
}

double ScoreCosAdd(const EmbeddingTable& table, std::size_t a, std::size_t b,
                   std::size_t c, std::size_t d, SolverStats* stats) {
  return SafeCosine(table, d, c, stats) + SafeCosine(table, d, b, stats) -
         SafeCosine(table, d, a, stats);
}

double ScoreCosMul(const EmbeddingTable& table, std::size_t a, std::size_t b,
                   std::size_t c, std::size_t d, double epsilon,
                   SolverStats* stats) {
  const double sc = Shift(SafeCosine(table, d, c, stats));
  const double sb = Shift(SafeCosine(table, d, b, stats));
  const double sa = Shift(SafeCosine(table, d, a, stats));
  return sc * sb / (sa + epsilon);
}

double ScoreCosAddOffset(const EmbeddingTable& table, std::size_t a,
                         std::size_t b, std::size_t c, std::size_t d,
                         SolverStats* stats) {
  SolverConfig config;
  config.add_form = AddForm::kOffset;
  const Query q = MakeQuery(table, {a, b, c, d});
  ZeroNormCounter zeros;
  const double s = ScoreFromDots(config, q, table.norm(d), table.Dot(d, a),
                                 table.Dot(d, b), table.Dot(d, c), zeros);
  zeros.FlushTo(stats);
  return s;
}

Prediction Solve(const AnalogyQuestion& question, const EmbeddingTable& table,
                 std::span<const std::size_t> candidates,
                 const SolverConfig& config, SolverStats* stats) {
  ValidateSolverConfig(config);
  ZeroNormCounter zeros;
  Prediction p = SolveDirect(question, table, ResolveQuestion(question, table),
                             candidates, config, zeros);
  zeros.FlushTo(stats);
  return p;
}

const std::vector<std::size_t>* CategoryPools::Find(
    std::string_view category) const {
  for (std::size_t i = 0; i < categories.size(); ++i) {
    if (categories[i] == category) return &pools[i];
  }
  return nullptr;
}

CategoryPools BuildCategoryPools(const std::vector<AnalogyQuestion>& questions,
                                 const EmbeddingTable& table) {
  CategoryPools out;
  std::unordered_map<std::string, std::size_t> slot;
  std::vector<std::vector<char>> seen;
  for (const auto& q : questions) {
    if (q.scope != CandidateScope::kCategoryPool) continue;
    auto [it, inserted] = slot.try_emplace(q.category, out.categories.size());
    if (inserted) {
      out.categories.push_back(q.category);
      out.pools.emplace_back();
      seen.emplace_back(table.size(), 0);
    }
    auto& pool = out.pools[it->second];
    auto& mark = seen[it->second];
    for (const std::string* item : {&q.a, &q.b, &q.c, &q.gold_d}) {
      const std::size_t index = table.IndexOf(*item);
      if (!mark[index]) {
        mark[index] = 1;
        pool.push_back(index);
      }
    }
  }
  return out;
}

std::vector<std::size_t> ResolveCandidates(const AnalogyQuestion& question,
                                           const EmbeddingTable& table,
                                           const CategoryPools& pools) {
  if (question.scope == CandidateScope::kExplicit) {
    std::vector<std::size_t> out;
    out.reserve(question.candidates.size());
    for (const auto& id : question.candidates) out.push_back(table.IndexOf(id));
    return out;
  }
  const auto* pool = pools.Find(question.category);
  if (pool == nullptr) {
    throw UnknownItemError("no candidate pool for category '" +
                           question.category + "'");
  }
  return *pool;
}

std::vector<Prediction> SolveBatch(const std::vector<AnalogyQuestion>& questions,
                                   const EmbeddingTable& table,
                                   const SolverConfig& config, unsigned threads,
                                   SolverStats* stats) {
  ValidateSolverConfig(config);
  std::vector<Prediction> out(questions.size());
  if (questions.empty()) return out;

  const CategoryPools pools = BuildCategoryPools(questions, table);

  // Explicit-scope questions and questions of oversized pools.
  std::vector<std::size_t> direct;
  // Category-pool questions grouped by pool.
  std::vector<std::vector<std::size_t>> grouped(pools.categories.size());
  std::unordered_map<std::string_view, std::size_t> pool_slot;
  for (std::size_t i = 0; i < pools.categories.size(); ++i) {
    pool_slot.emplace(pools.categories[i], i);
  }
  for (std::size_t i = 0; i < questions.size(); ++i) {
    const auto& q = questions[i];
    if (q.scope == CandidateScope::kExplicit) {
      direct.push_back(i);
      continue;
    }
    const std::size_t slot = pool_slot.at(q.category);
    if (pools.pools[slot].size() > kMaxGramPool) {
      direct.push_back(i);
    } else {
      grouped[slot].push_back(i);
    }
  }

  ParallelFor(direct.size(), threads, [&](std::size_t begin, std::size_t end) {
    ZeroNormCounter zeros;
    for (std::size_t k = begin; k < end; ++k) {
      const auto& q = questions[direct[k]];
      const auto candidates = ResolveCandidates(q, table, pools);
      out[direct[k]] = SolveDirect(q, table, ResolveQuestion(q, table),
                                   candidates, config, zeros);
    }
    zeros.FlushTo(stats);
  });

  for (std::size_t slot = 0; slot < grouped.size(); ++slot) {
    const auto& members = grouped[slot];
    if (members.empty()) continue;
    const auto& pool = pools.pools[slot];
    const std::size_t m = pool.size();
    const std::vector<double> gram = PoolGram(table, pool, threads);
    std::unordered_map<std::size_t, std::size_t> position;
    position.reserve(m);
    for (std::size_t p = 0; p < m; ++p) position.emplace(pool[p], p);

    ParallelFor(members.size(), threads,
                [&](std::size_t begin, std::size_t end) {
      ZeroNormCounter zeros;
      for (std::size_t k = begin; k < end; ++k) {
        const auto& q = questions[members[k]];
        const Resolved r = ResolveQuestion(q, table);
        const std::size_t pa = position.at(r.a);
        const std::size_t pb = position.at(r.b);
        const std::size_t pc = position.at(r.c);
        const double* ra = gram.data() + pa * m;
        const double* rb = gram.data() + pb * m;
        const double* rc = gram.data() + pc * m;
        const Query query{r.a,         r.b,         r.c,
                          table.norm(r.a), table.norm(r.b), table.norm(r.c),
                          ra[pb],      ra[pc],      rb[pc]};
        auto dots = [&](std::size_t p) {
          return std::array<double, 3>{ra[p], rb[p], rc[p]};
        };
        out[members[k]] =
            ScoreCandidates(q, table, r, query, pool, config, dots, zeros);
      }
      zeros.FlushTo(stats);
    });
  }
  return out;
}

std::string ToJsonLine(const Prediction& p) {
  Json j = {{"qid", p.qid},
            {"predicted", p.predicted},
            {"score", p.score},
            {"rank_of_gold", p.rank_of_gold ? Json(*p.rank_of_gold) : Json()},
            {"correct", p.correct},
            {"metric", std::string(MetricShortName(p.metric))},
            {"protocol", std::string(ProtocolName(p.constrained))}};
  if (!p.top.empty()) j["top"] = p.top;
  return internal::Dump(j);
}

std::vector<Prediction> ReadPredictions(std::istream& in,
                                        std::string_view source) {
  std::vector<Prediction> out;
  internal::ForEachJsonLine(in, source, [&](const Json& j, std::size_t line) {
    Prediction p;
    p.qid = internal::GetString(j, "qid", source, line);
    p.predicted = internal::GetString(j, "predicted", source, line);
    p.score = internal::GetField(j, "score", source, line).get<double>();
    const Json& rank = internal::GetField(j, "rank_of_gold", source, line);
    if (!rank.is_null()) p.rank_of_gold = rank.get<std::size_t>();
    p.correct = internal::GetField(j, "correct", source, line).get<bool>();
    p.metric = ParseMetric(internal::GetString(j, "metric", source, line));
    const std::string protocol =
        internal::GetString(j, "protocol", source, line);
    if (protocol != "constrained" && protocol != "unconstrained") {
      throw ParseError(std::string(source), line,
                       "unknown protocol '" + protocol + "'");
    }
    p.constrained = protocol == "constrained";
    if (j.contains("top")) p.top = j.at("top").get<std::vector<std::string>>();
    out.push_back(std::move(p));
  });
  return out;
}

std::vector<Prediction> LoadPredictions(const std::filesystem::path& path) {
  auto in = internal::OpenInput(path);
  return ReadPredictions(in, path.string());
}

void WritePredictions(const std::vector<Prediction>& predictions,
                      std::ostream& out) {
  std::string buf;
  for (const auto& p : predictions) {
    buf += ToJsonLine(p);
    buf += '\n';
    if (buf.size() > (1u << 20)) {
      out << buf;
      buf.clear();
    }
  }
  out << buf;
}

}  // namespace sentanalogy
