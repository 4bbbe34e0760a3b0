#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "k3le/witness_io.hpp"

namespace k3le::report {

using nef::WitnessStore;

enum class Status { general_type, kodaira_nonneg, unirational, open };
std::string to_string(Status s);

enum class WeightFlag { low_weight, boundary, none };
std::string to_string(WeightFlag f);

struct Weight {
  Int value = 0;
  WeightFlag flag = WeightFlag::none;
};

// 12 + root_count / 2; below 17 is low weight, exactly 17 is the boundary.
Weight weight_of(Int root_count);

// Evidence tags.
inline constexpr const char* kLargeKTag = "large-k";
inline constexpr const char* kUnirationalTag = "unirational-list";
inline constexpr const char* kExternalTag = "external-BH17";

// k with a known unirational moduli space.
struct UnirationalData {
  static const std::set<Int>& values();
  static bool contains(Int k) { return values().count(k) > 0; }
  // kUnirationalTag, or kExternalTag for the value taken from outside the list
  static std::string provenance(Int k);
};

struct KStatusRecord {
  Int k = 0;
  Status status = Status::open;
  std::vector<std::string> evidence;
  std::optional<Int> root_count;  // best (fewest roots) stored witness
  std::optional<Weight> weight;
  bool partial = false;  // the stores did not cover this k
};

// Stores grouped by root window. Only complete stores with window [2,8]
// (tight) or [2,10] (wide) count as coverage.
struct StoreSet {
  std::vector<std::pair<std::string, WitnessStore>> stores;  // (name, store)

  void add(std::string name, WitnessStore store) { stores.emplace_back(std::move(name), std::move(store)); }
  Int tight_coverage() const;
  Int wide_coverage() const;
};

struct Classification {
  Int max_k = 0;
  std::vector<KStatusRecord> records;
  bool partial = false;
};

Classification classify(Int max_k, const StoreSet& stores);

nlohmann::json to_json(const Classification& c);
std::string to_csv(const Classification& c);
std::string to_markdown(const Classification& c);

}  // namespace k3le::report
