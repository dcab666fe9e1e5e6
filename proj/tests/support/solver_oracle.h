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

#ifndef SENTANALOGY_TESTS_SUPPORT_SOLVER_ORACLE_H_
#define SENTANALOGY_TESTS_SUPPORT_SOLVER_ORACLE_H_

#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "sentanalogy/embedding_store.h"
#include "sentanalogy/solver.h"

namespace sentanalogy::testing {

struct OracleResult {
  std::size_t predicted = 0;  // table index
  double score = 0.0;
  std::optional<std::size_t> rank_of_gold;
};

inline std::vector<double> Row(const EmbeddingTable& t, std::size_t i) {
  auto v = t.vector(i);
  return {v.begin(), v.end()};
}

inline double NaiveCos(const std::vector<double>& x,
                       const std::vector<double>& y) {
  double xy = 0, xx = 0, yy = 0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    xy += x[k] * y[k];
    xx += x[k] * x[k];
    yy += y[k] * y[k];
  }
  if (xx == 0 || yy == 0) return 0.0;
  return xy / std::sqrt(xx * yy);
}

// Straightforward per-candidate scoring with a linear argmax; ties go to the
// earliest candidate.
inline OracleResult OracleSolve(const EmbeddingTable& t, std::size_t a,
                                std::size_t b, std::size_t c, std::size_t gold,
                                std::span<const std::size_t> candidates,
                                const SolverConfig& config) {
  const auto va = Row(t, a), vb = Row(t, b), vc = Row(t, c);
  std::vector<double> offset(va.size());
  for (std::size_t k = 0; k < va.size(); ++k) offset[k] = vb[k] - va[k] + vc[k];

  std::vector<double> scores;
  std::vector<std::size_t> kept;
  for (std::size_t x : candidates) {
    if (config.constrained && (x == a || x == b || x == c)) continue;
    const auto vd = Row(t, x);
    double s;
    if (config.metric == Metric::kCosMul) {
      auto shift = [](double v) { return (v + 1.0) / 2.0; };
      s = shift(NaiveCos(vd, vc)) * shift(NaiveCos(vd, vb)) /
          (shift(NaiveCos(vd, va)) + config.epsilon);
    } else if (config.add_form == AddForm::kOffset) {
      s = NaiveCos(vd, offset);
    } else {
      s = NaiveCos(vd, vc) + NaiveCos(vd, vb) - NaiveCos(vd, va);
    }
    scores.push_back(s);
    kept.push_back(x);
  }
  OracleResult out;
  std::size_t best = 0;
  for (std::size_t i = 1; i < scores.size(); ++i) {
    if (scores[i] > scores[best]) best = i;
  }
  out.predicted = kept.at(best);
  out.score = scores[best];
  for (std::size_t i = 0; i < kept.size(); ++i) {
    if (kept[i] != gold) continue;
    std::size_t rank = 1;
    for (std::size_t j = 0; j < kept.size(); ++j) {
      if (scores[j] > scores[i] || (scores[j] == scores[i] && j < i)) ++rank;
    }
    out.rank_of_gold = rank;
    break;
  }
  return out;
}

}  // namespace sentanalogy::testing

#endif  // SENTANALOGY_TESTS_SUPPORT_SOLVER_ORACLE_H_
