// Copyright 2026 The biodenoise Authors
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


#ifndef BIODENOISE_ENTITY_CATALOG_H_
#define BIODENOISE_ENTITY_CATALOG_H_

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "absl/status/statusor.h"
#include "biodenoise/corpus.h"
#include "biodenoise/rng.h"
#include "json.hpp"

namespace biodenoise {

struct EntitySurface {
  std::string surface;
  std::string norm_id;
  size_t freq = 0;

  bool operator==(const EntitySurface&) const = default;
};

// Immutable per-type pools of distinct surfaces. Surfaces are deduplicated
// case-insensitively; the kept casing is the most frequent one. Pools are
// ordered by descending frequency, then surface.
class EntityCatalog {
 public:
  // Counts every mention, overlapped or not. Fails with InvalidArgument
  // ("EmptyCorpus") when no document carries a mention.
  static absl::StatusOr<EntityCatalog> Build(
      std::span<const AnnotatedDocument> docs);

  // Inverse of ToJson. Re-validates pool invariants.
  static absl::StatusOr<EntityCatalog> FromJson(const nlohmann::json& json);

  // {type: [{"freq", "norm_id", "surface"}...]} in canonical order.
  nlohmann::json ToJson() const;

  // nullptr for an unknown type.
  const std::vector<EntitySurface>* Pool(std::string_view entity_type) const;

  std::vector<std::string> Types() const;
  size_t total_surfaces() const { return total_surfaces_; }

  // True when the pool has an entry that differs from `exclude_surface`
  // under case folding.
  bool HasCandidate(std::string_view entity_type,
                    std::string_view exclude_surface) const;

  bool operator==(const EntityCatalog& other) const {
    return pools_ == other.pools_;
  }

 private:
  friend absl::StatusOr<EntitySurface> SampleReplacement(
      const EntityCatalog&, std::string_view, std::string_view, RngStream&);

  struct TypePool {
    std::vector<EntitySurface> entries;
    std::unordered_map<std::string, size_t> folded_index;

    bool operator==(const TypePool& other) const {
      return entries == other.entries;
    }
  };

  static absl::StatusOr<EntityCatalog> FromPools(
      std::map<std::string, std::vector<EntitySurface>> pools);

  std::map<std::string, TypePool, std::less<>> pools_;
  size_t total_surfaces_ = 0;
};

// Draws uniformly over the distinct surfaces of `entity_type` that differ
// case-insensitively from `exclude_surface`. Errors: NotFound ("UnknownType")
// and FailedPrecondition ("NoCandidate").
absl::StatusOr<EntitySurface> SampleReplacement(const EntityCatalog& catalog,
                                                std::string_view entity_type,
                                                std::string_view exclude_surface,
                                                RngStream& rng);

}  // namespace biodenoise

#endif  // BIODENOISE_ENTITY_CATALOG_H_
