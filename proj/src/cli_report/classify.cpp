#include "k3le/classify.hpp"

#include <algorithm>
#include <map>

namespace k3le::report {

std::string to_string(Status s) {
  switch (s) {
    case Status::general_type:
      return "general_type";
    case Status::kodaira_nonneg:
      return "kodaira_nonneg";
    case Status::unirational:
      return "unirational";
    case Status::open:
      return "open";
  }
  return "open";
}

std::string to_string(WeightFlag f) {
  switch (f) {
    case WeightFlag::low_weight:
      return "low-weight";
    case WeightFlag::boundary:
      return "boundary";
    case WeightFlag::none:
      return "";
  }
  return "";
}

Weight weight_of(Int root_count) {
  if (root_count < 0 || root_count % 2 != 0) throw InvalidArgument("root count must be even and non-negative");
  Weight w{12 + root_count / 2, WeightFlag::none};
  if (root_count <= 8) w.flag = WeightFlag::low_weight;
  if (root_count == 10) w.flag = WeightFlag::boundary;
  return w;
}

const std::set<Int>& UnirationalData::values() {
  static const std::set<Int> v = {1,  2,  3,  4,  5,  6,  7,  8,  9,  10, 13, 16, 17, 19, 21,
                                  25, 26, 28, 29, 31, 34, 36, 37, 39, 41, 43, 49, 59, 61, 64};
  return v;
}

std::string UnirationalData::provenance(Int k) {
  if (!contains(k)) throw InvalidArgument("k = " + std::to_string(k) + " is not in the unirational list");
  return k == 28 ? kExternalTag : kUnirationalTag;
}

namespace {

bool is_tight(const WitnessStore& s) { return s.complete && s.config.min_roots == 2 && s.config.max_roots == 8; }
bool is_wide(const WitnessStore& s) { return s.complete && s.config.min_roots == 2 && s.config.max_roots == 10; }

// Best witness per k: fewest roots, earliest line on ties.
struct Best {
  Int root_count = 0;
  std::string evidence;
};

void collect(const std::string& name, const WitnessStore& store, std::map<Int, Best>& into) {
  std::size_t line = 1;  // header
  for (const auto& [k, ws] : store.witnesses) {
    for (const auto& w : ws) {
      ++line;
      auto it = into.find(k);
      if (it == into.end() || w.root_count < it->second.root_count) {
        into[k] = {w.root_count, "witness:" + name + ":" + std::to_string(line)};
      }
    }
  }
}

}  // namespace

Int StoreSet::tight_coverage() const {
  Int cover = 0;
  for (const auto& [name, s] : stores)
    if (is_tight(s)) cover = std::max(cover, s.config.max_k);
  return cover;
}

Int StoreSet::wide_coverage() const {
  Int cover = 0;
  for (const auto& [name, s] : stores)
    if (is_wide(s)) cover = std::max(cover, s.config.max_k);
  return cover;
}

Classification classify(Int max_k, const StoreSet& stores) {
  if (max_k < 1) throw InvalidArgument("max_k must be positive");
  const std::string checksum = nef::checksum_hex(nef::dual_gram_checksum(nef::standard_dual_basis().dual_gram));
  std::map<Int, Best> tight, wide;
  for (const auto& [name, s] : stores.stores) {
    if (s.dual_gram_checksum != checksum) throw DataIntegrityError(name + ": dual Gram checksum does not match");
    if (is_tight(s)) collect(name, s, tight);
    if (is_wide(s)) collect(name, s, wide);
  }
  const Int tight_cover = stores.tight_coverage();
  const Int wide_cover = stores.wide_coverage();

  Classification out;
  out.max_k = max_k;
  for (Int k = 1; k <= max_k; ++k) {
    KStatusRecord r;
    r.k = k;
    const auto t = tight.find(k);
    const auto w = wide.find(k);
    if (k >= 4900) {
      r.status = Status::general_type;
      r.evidence.push_back(kLargeKTag);
    } else if (t != tight.end()) {
      r.status = Status::general_type;
      r.evidence.push_back(t->second.evidence);
      r.root_count = t->second.root_count;
    } else if (w != wide.end()) {
      r.status = Status::kodaira_nonneg;
      r.evidence.push_back(w->second.evidence);
      r.root_count = w->second.root_count;
    } else if (UnirationalData::contains(k)) {
      r.status = Status::unirational;
    } else {
      r.status = Status::open;
    }
    if (UnirationalData::contains(k)) {
      if (r.status == Status::general_type) {
        throw DataIntegrityError("k = " + std::to_string(k) + " has both general-type and unirational evidence");
      }
      r.evidence.push_back(UnirationalData::provenance(k));
    }
    if (r.root_count) r.weight = weight_of(*r.root_count);
    // a missing witness only means something when the search covered k
    if (k < 4900 && r.status != Status::general_type) {
      r.partial = k > tight_cover || (r.status != Status::kodaira_nonneg && k > wide_cover);
    }
    out.partial = out.partial || r.partial;
    out.records.push_back(std::move(r));
  }
  return out;
}

}  // namespace k3le::report
