#pragma once

#include <optional>
#include <set>
#include <string>

#include <json.hpp>

#include "k3le/nef_search.hpp"

namespace k3le::nef {

nlohmann::json to_json(const SearchConfig& cfg);
SearchConfig config_from_json(const nlohmann::json& j);

nlohmann::json to_json(const NefWitness& w);
NefWitness witness_from_json(const nlohmann::json& j);

// A witness file loaded back from disk.
struct WitnessStore {
  SearchConfig config;
  std::string dual_gram_checksum;
  bool complete = false;
  WitnessMap witnesses;

  std::set<Int> realizable() const { return realizable_set(witnesses); }
};

// JSON lines: a header object, then one witness per line sorted by k and
// traversal order.
void write_witness_file(const std::string& path, const SearchResult& result);
WitnessStore to_store(const SearchResult& result);
WitnessStore read_witness_file(const std::string& path);

std::string realizable_json(const std::set<Int>& ks);
void write_realizable_file(const std::string& path, const std::set<Int>& ks);
std::set<Int> read_realizable_file(const std::string& path);

struct Checkpoint {
  SearchConfig config;
  std::string dual_gram_checksum;
  std::size_t next_partition = 0;
  std::size_t partitions_total = 0;
  std::optional<std::pair<e10::NodeMask, Int>> last_completed;  // (J, d_1)
  std::uint64_t tuples_visited = 0;
  WitnessMap witnesses;
};

void write_checkpoint(const std::string& path, const Checkpoint& cp);
Checkpoint read_checkpoint(const std::string& path);

}  // namespace k3le::nef
