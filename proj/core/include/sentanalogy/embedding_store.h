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

#ifndef SENTANALOGY_EMBEDDING_STORE_H_
#define SENTANALOGY_EMBEDDING_STORE_H_

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace sentanalogy {

// Immutable id -> vector store shared by word and sentence embeddings.
//
// Components are stored as float, which is also the precision of the text
// formats (9 significant digits round-trip a float exactly). Norms are
// accumulated in double and cached at construction; every similarity in the
// library is computed from the cached norms.
class EmbeddingTable {
 public:
  // Empty table of the given dimensionality.
  explicit EmbeddingTable(std::size_t dim);

  // Takes ownership of row-major `values` (ids.size() * dim entries).
  // Throws InvalidArgument on a zero dimension, a size mismatch, a duplicate
  // id or a non-finite component.
  EmbeddingTable(std::size_t dim, std::vector<std::string> ids,
                 std::vector<float> values);

  // Builds a table from double-precision rows, rounding each component to
  // float. Every row must have `dim` components.
  static EmbeddingTable FromRows(std::size_t dim, std::vector<std::string> ids,
                                 const std::vector<std::vector<double>>& rows);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }

  const std::string& id(std::size_t i) const { return ids_.at(i); }
  const std::vector<std::string>& ids() const { return ids_; }
  std::span<const float> vector(std::size_t i) const;
  double norm(std::size_t i) const { return norms_.at(i); }
  const std::vector<double>& norms() const { return norms_; }

  std::optional<std::size_t> Find(std::string_view id) const;
  // Throws UnknownItemError when `id` is not stored.
  std::size_t IndexOf(std::string_view id) const;

  // Raw dot product accumulated in double, components in index order.
  double Dot(std::size_t i, std::size_t j) const;

  // dot(v_i, v_j) / (norm_i * norm_j). Throws ZeroNormError if either vector
  // has zero norm.
  double Cosine(std::size_t i, std::size_t j) const;

  friend bool operator==(const EmbeddingTable& a, const EmbeddingTable& b);

 private:
  struct StringHash {
    using is_transparent = void;
    std::size_t operator()(std::string_view s) const {
      return std::hash<std::string_view>{}(s);
    }
  };

  void BuildIndex();

  std::size_t dim_;
  std::vector<std::string> ids_;
  std::vector<float> values_;
  std::vector<double> norms_;
  std::unordered_map<std::string, std::size_t, StringHash, std::equal_to<>>
      index_;
};

// L2 norm of a float vector, accumulated in double.
double L2Norm(std::span<const float> v);

// Dot product of two equally sized float vectors, accumulated in double in
// index order. All similarity code paths go through this function so that
// sequential and batched scoring agree bit for bit.
double DotProduct(std::span<const float> a, std::span<const float> b);

enum class OovMode { kError, kSkipToken, kZeroVector };

struct OovPolicy {
  OovMode mode = OovMode::kError;
  // Log every out-of-vocabulary token as a warning.
  bool report = false;
};

// Parses "error", "skip" / "skip-token", "zero" / "zero-vector".
OovMode ParseOovMode(std::string_view name);

// Word-vector text format: `token v1 ... vd` per line, separated by single
// spaces, with an optional `count dim` header line. The dimensionality is
// `expected_dim` when given, else inferred from the first data line.
EmbeddingTable LoadWordVectors(const std::filesystem::path& path,
                               std::optional<std::size_t> expected_dim = {});
EmbeddingTable ReadWordVectors(std::istream& in, std::string_view source,
                               std::optional<std::size_t> expected_dim = {});
void WriteWordVectors(const EmbeddingTable& table, std::ostream& out);

// Sentence-embedding text format: mandatory `count dim` header, then
// `id<TAB>v1 v2 ... vd` per item.
EmbeddingTable LoadSentenceEmbeddings(const std::filesystem::path& path);
EmbeddingTable ReadSentenceEmbeddings(std::istream& in,
                                      std::string_view source);
void WriteSentenceEmbeddings(const EmbeddingTable& table, std::ostream& out);
void SaveSentenceEmbeddings(const EmbeddingTable& table,
                            const std::filesystem::path& path);

}  // namespace sentanalogy

#endif  // SENTANALOGY_EMBEDDING_STORE_H_
