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


#include "biodenoise/entity_catalog.h"

#include <algorithm>
#include <tuple>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "biodenoise/text_util.h"

namespace biodenoise {
namespace {

// Most frequent key; ties go to the lexicographically smallest.
std::string MostFrequent(const std::map<std::string, size_t>& counts) {
  std::string best;
  size_t best_count = 0;
  for (const auto& [key, count] : counts) {
    if (count > best_count) {
      best = key;
      best_count = count;
    }
  }
  return best;
}

bool PoolOrder(const EntitySurface& a, const EntitySurface& b) {
  if (a.freq != b.freq) return a.freq > b.freq;
  return std::tie(a.surface, a.norm_id) < std::tie(b.surface, b.norm_id);
}

}  // namespace

absl::StatusOr<EntityCatalog> EntityCatalog::Build(
    std::span<const AnnotatedDocument> docs) {
  struct Group {
    std::map<std::string, size_t> casings;
    std::map<std::string, size_t> norm_ids;
    size_t freq = 0;
  };
  std::map<std::string, std::map<std::string, Group>> groups;
  for (const AnnotatedDocument& doc : docs) {
    for (const EntityMention& m : doc.mentions) {
      Group& g = groups[m.entity_type][FoldCase(m.surface)];
      ++g.casings[m.surface];
      if (!m.norm_id.empty()) ++g.norm_ids[m.norm_id];
      ++g.freq;
    }
  }
  if (groups.empty()) {
    return absl::InvalidArgumentError("EmptyCorpus: no entity mentions");
  }
  std::map<std::string, std::vector<EntitySurface>> pools;
  for (const auto& [type, by_folded] : groups) {
    std::vector<EntitySurface>& pool = pools[type];
    for (const auto& [folded, g] : by_folded) {
      pool.push_back({MostFrequent(g.casings), MostFrequent(g.norm_ids), g.freq});
    }
  }
  return FromPools(std::move(pools));
}

absl::StatusOr<EntityCatalog> EntityCatalog::FromPools(
    std::map<std::string, std::vector<EntitySurface>> pools) {
  EntityCatalog catalog;
  for (auto& [type, entries] : pools) {
    if (type.empty()) {
      return absl::InvalidArgumentError("catalog: empty entity type");
    }
    if (entries.empty()) {
      return absl::InvalidArgumentError(
          absl::StrCat("catalog: pool '", type, "' is empty"));
    }
    std::sort(entries.begin(), entries.end(), PoolOrder);
    TypePool pool;
    for (size_t i = 0; i < entries.size(); ++i) {
      if (entries[i].surface.empty() || entries[i].freq < 1) {
        return absl::InvalidArgumentError(absl::StrCat(
            "catalog: pool '", type, "' has an empty surface or zero freq"));
      }
      if (!pool.folded_index.emplace(FoldCase(entries[i].surface), i).second) {
        return absl::InvalidArgumentError(
            absl::StrCat("catalog: pool '", type, "' repeats surface '",
                         entries[i].surface, "' up to case"));
      }
    }
    catalog.total_surfaces_ += entries.size();
    pool.entries = std::move(entries);
    catalog.pools_.emplace(type, std::move(pool));
  }
  return catalog;
}

absl::StatusOr<EntityCatalog> EntityCatalog::FromJson(
    const nlohmann::json& json) {
  if (!json.is_object()) {
    return absl::InvalidArgumentError("catalog: expected a JSON object");
  }
  std::map<std::string, std::vector<EntitySurface>> pools;
  for (const auto& [type, entries] : json.items()) {
    if (!entries.is_array()) {
      return absl::InvalidArgumentError(
          absl::StrCat("catalog: pool '", type, "' is not an array"));
    }
    std::vector<EntitySurface>& pool = pools[type];
    for (const nlohmann::json& entry : entries) {
      if (!entry.is_object() || !entry.contains("surface") ||
          !entry["surface"].is_string() || !entry.contains("freq") ||
          !entry["freq"].is_number_unsigned()) {
        return absl::InvalidArgumentError(
            absl::StrCat("catalog: malformed entry in pool '", type, "'"));
      }
      EntitySurface surface;
      surface.surface = entry["surface"].get<std::string>();
      surface.norm_id = entry.value("norm_id", "");
      surface.freq = entry["freq"].get<size_t>();
      pool.push_back(std::move(surface));
    }
  }
  return FromPools(std::move(pools));
}

nlohmann::json EntityCatalog::ToJson() const {
  nlohmann::json json = nlohmann::json::object();
  for (const auto& [type, pool] : pools_) {
    nlohmann::json entries = nlohmann::json::array();
    for (const EntitySurface& e : pool.entries) {
      entries.push_back(
          {{"surface", e.surface}, {"norm_id", e.norm_id}, {"freq", e.freq}});
    }
    json[type] = std::move(entries);
  }
  return json;
}

const std::vector<EntitySurface>* EntityCatalog::Pool(
    std::string_view entity_type) const {
  auto it = pools_.find(entity_type);
  return it == pools_.end() ? nullptr : &it->second.entries;
}

std::vector<std::string> EntityCatalog::Types() const {
  std::vector<std::string> types;
  for (const auto& [type, pool] : pools_) types.push_back(type);
  return types;
}

bool EntityCatalog::HasCandidate(std::string_view entity_type,
                                 std::string_view exclude_surface) const {
  auto it = pools_.find(entity_type);
  if (it == pools_.end()) return false;
  const TypePool& pool = it->second;
  const bool excluded = pool.folded_index.contains(FoldCase(exclude_surface));
  return pool.entries.size() > (excluded ? 1u : 0u);
}

absl::StatusOr<EntitySurface> SampleReplacement(const EntityCatalog& catalog,
                                                std::string_view entity_type,
                                                std::string_view exclude_surface,
                                                RngStream& rng) {
  auto it = catalog.pools_.find(entity_type);
  if (it == catalog.pools_.end()) {
    return absl::NotFoundError(
        absl::StrCat("UnknownType: no pool for entity type '",
                     std::string(entity_type), "'"));
  }
  const EntityCatalog::TypePool& pool = it->second;
  auto excluded = pool.folded_index.find(FoldCase(exclude_surface));
  const size_t skip = excluded == pool.folded_index.end()
                          ? pool.entries.size()
                          : excluded->second;
  const size_t eligible = pool.entries.size() - (skip < pool.entries.size());
  if (eligible == 0) {
    return absl::FailedPreconditionError(
        absl::StrCat("NoCandidate: pool '", std::string(entity_type),
                     "' holds only the excluded surface"));
  }
  size_t pick = rng.Uniform(eligible);
  if (pick >= skip) ++pick;
  return pool.entries[pick];
}

}  // namespace biodenoise
