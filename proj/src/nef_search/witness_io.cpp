#include "k3le/witness_io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace k3le::nef {

using nlohmann::json;

json to_json(const SearchConfig& cfg) {
  return {{"max_k", cfg.max_k},         {"min_roots", cfg.min_roots},
          {"max_roots", cfg.max_roots}, {"thread_count", cfg.thread_count},
          {"witness_cap", cfg.witness_cap}, {"experimental", cfg.experimental()}};
}

SearchConfig config_from_json(const json& j) {
  SearchConfig cfg;
  cfg.max_k = j.at("max_k").get<Int>();
  cfg.min_roots = j.at("min_roots").get<int>();
  cfg.max_roots = j.at("max_roots").get<int>();
  cfg.thread_count = j.value("thread_count", 1);
  cfg.witness_cap = j.value("witness_cap", std::size_t{4});
  cfg.validate();
  return cfg;
}

json to_json(const NefWitness& w) {
  return {{"k", w.k},
          {"d_coeffs", w.d_coeffs},
          {"c_coords", w.c_coords},
          {"root_type", w.root_type.to_string()},
          {"root_count", w.root_count},
          {"primitive", w.primitive}};
}

NefWitness witness_from_json(const json& j) {
  NefWitness w;
  w.k = j.at("k").get<Int>();
  w.d_coeffs = j.at("d_coeffs").get<Vector>();
  w.c_coords = j.at("c_coords").get<Vector>();
  w.root_type = RootSystemLabel::parse(j.at("root_type").get<std::string>());
  w.root_count = j.at("root_count").get<Int>();
  w.primitive = j.at("primitive").get<bool>();
  return w;
}

namespace {

void write_atomically(const std::string& path, const std::string& text) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) throw InvalidArgument("cannot write " + tmp);
    out << text;
    if (!out) throw InvalidArgument("write failed for " + tmp);
  }
  std::filesystem::rename(tmp, path);
}

json witnesses_json(const WitnessMap& m) {
  json arr = json::array();
  for (const auto& [k, ws] : m)
    for (const auto& w : ws) arr.push_back(to_json(w));
  return arr;
}

void add_witness(WitnessMap& m, NefWitness w) {
  const Int k = w.k;
  m[k].push_back(std::move(w));
}

}  // namespace

void write_witness_file(const std::string& path, const SearchResult& result) {
  std::ostringstream os;
  const json header = {{"type", "header"},
                       {"config", to_json(result.config)},
                       {"dual_gram_checksum", checksum_hex(dual_gram_checksum(standard_dual_basis().dual_gram))},
                       {"complete", result.complete}};
  os << header.dump() << '\n';
  for (const auto& [k, ws] : result.witnesses)
    for (const auto& w : ws) os << to_json(w).dump() << '\n';
  write_atomically(path, os.str());
}

WitnessStore to_store(const SearchResult& result) {
  return {result.config, checksum_hex(dual_gram_checksum(standard_dual_basis().dual_gram)), result.complete,
          result.witnesses};
}

WitnessStore read_witness_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open " + path);
  WitnessStore store;
  std::string line;
  bool have_header = false;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::exception& e) {
      throw InvalidArgument(path + ":" + std::to_string(lineno) + ": " + e.what());
    }
    if (!have_header) {
      if (j.value("type", "") != "header") throw InvalidArgument(path + ": missing header line");
      store.config = config_from_json(j.at("config"));
      store.dual_gram_checksum = j.at("dual_gram_checksum").get<std::string>();
      store.complete = j.value("complete", false);
      have_header = true;
      continue;
    }
    try {
      add_witness(store.witnesses, witness_from_json(j));
    } catch (const json::exception& e) {
      throw InvalidArgument(path + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (!have_header) throw InvalidArgument(path + ": empty witness file");
  return store;
}

std::string realizable_json(const std::set<Int>& ks) { return json(std::vector<Int>(ks.begin(), ks.end())).dump() + "\n"; }

void write_realizable_file(const std::string& path, const std::set<Int>& ks) { write_atomically(path, realizable_json(ks)); }

std::set<Int> read_realizable_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open " + path);
  json j;
  in >> j;
  const auto v = j.get<std::vector<Int>>();
  return {v.begin(), v.end()};
}

void write_checkpoint(const std::string& path, const Checkpoint& cp) {
  json j = {{"config", to_json(cp.config)},
            {"dual_gram_checksum", cp.dual_gram_checksum},
            {"next_partition", cp.next_partition},
            {"partitions_total", cp.partitions_total},
            {"tuples_visited", cp.tuples_visited},
            {"witnesses", witnesses_json(cp.witnesses)}};
  if (cp.last_completed) {
    j["last_completed"] = {{"J", e10::nodes_of(cp.last_completed->first)}, {"d1", cp.last_completed->second}};
  } else {
    j["last_completed"] = nullptr;
  }
  write_atomically(path, j.dump() + "\n");
}

Checkpoint read_checkpoint(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open checkpoint " + path);
  json j;
  in >> j;
  Checkpoint cp;
  cp.config = config_from_json(j.at("config"));
  cp.dual_gram_checksum = j.at("dual_gram_checksum").get<std::string>();
  cp.next_partition = j.at("next_partition").get<std::size_t>();
  cp.partitions_total = j.at("partitions_total").get<std::size_t>();
  cp.tuples_visited = j.at("tuples_visited").get<std::uint64_t>();
  if (!j.at("last_completed").is_null()) {
    const auto nodes = j.at("last_completed").at("J").get<std::vector<int>>();
    cp.last_completed = std::make_pair(e10::mask_of(nodes), j.at("last_completed").at("d1").get<Int>());
  }
  for (const auto& w : j.at("witnesses")) add_witness(cp.witnesses, witness_from_json(w));
  return cp;
}

}  // namespace k3le::nef
