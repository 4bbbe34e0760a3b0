#include <omp.h>

#include <array>
#include <chrono>
#include <exception>
#include <numeric>

#include "k3le/nef_search.hpp"
#include "k3le/witness_io.hpp"

namespace k3le::nef {

namespace {

constexpr std::size_t kN = e10::kNodes;

struct Partition {
  std::size_t j_index = 0;
  Int d1 = 0;  // 0 when C_1 lies in J
};

struct PartialResult {
  WitnessMap witnesses;
  std::uint64_t tuples = 0;
};

class Plan {
 public:
  explicit Plan(const SearchConfig& cfg)
      : cfg_(cfg), dual_(standard_dual_basis()), subs_(admissible_subdiagrams(cfg.min_roots, cfg.max_roots)) {
    cfg.validate();
    max_norm_ = checked_mul(2, cfg.max_k);
    for (std::size_t j = 0; j < subs_.size(); ++j) {
      bounds_.push_back(coefficient_bounds(subs_[j].mask, max_norm_, dual_));
      if (subs_[j].mask & 1u) {
        parts_.push_back({j, 0});
      } else {
        for (Int d1 = 1; d1 <= bounds_[j][0]; ++d1) parts_.push_back({j, d1});
      }
    }
    for (std::size_t i = 0; i < kN; ++i)
      for (std::size_t l = 0; l < kN; ++l) h_[i][l] = dual_.dual_gram(i, l);
  }

  const std::vector<Partition>& partitions() const { return parts_; }
  const Subdiagram& subdiagram(const Partition& p) const { return subs_[p.j_index]; }

  // Visits the partition in odometer order (free indices ascending, the
  // last one fastest) and records witnesses for k with full[k] == 0.
  PartialResult run(const Partition& p, const std::vector<char>& full) const {
    PartialResult out;
    const Subdiagram& sub = subs_[p.j_index];
    const std::vector<Int>& b = bounds_[p.j_index];

    std::array<std::size_t, kN> free{};
    std::size_t m = 0;
    for (std::size_t i = 1; i < kN; ++i)
      if (!((sub.mask >> i) & 1u)) free[m++] = i;

    std::array<Int, kN> x{};
    x[0] = p.d1;
    for (std::size_t q = 0; q < m; ++q) x[free[q]] = 1;
    std::array<Int, kN> c{};
    Int norm = 0;
    for (std::size_t i = 0; i < kN; ++i) {
      for (std::size_t l = 0; l < kN; ++l) c[i] += h_[i][l] * x[l];
      norm += x[i] * c[i];
    }

    auto bump = [&](std::size_t i, Int delta) {
      norm += 2 * delta * c[i] + delta * delta * h_[i][i];
      for (std::size_t l = 0; l < kN; ++l) c[l] += delta * h_[l][i];
      x[i] += delta;
    };
    auto leaf = [&]() {
      ++out.tuples;
      if (norm <= 0 || norm > max_norm_) return;
      const Int k = norm / 2;
      if (full[static_cast<std::size_t>(k)]) return;
      Int g = 0;
      for (std::size_t i = 0; i < kN; ++i) g = std::gcd(g, c[i]);
      if (g != 1) return;
      auto& slot = out.witnesses[k];
      if (slot.size() >= cfg_.witness_cap) return;
      slot.push_back({k, Vector(x.begin(), x.end()), Vector(c.begin(), c.end()), sub.type, sub.root_count, true});
    };

    if (m == 0) {
      leaf();
      return out;
    }
    // explicit odometer; every free coordinate starts at 1
    std::size_t q = 0;
    while (true) {
      const std::size_t i = free[q];
      if (norm > max_norm_ || x[i] > b[i]) {
        bump(i, 1 - x[i]);
        if (q == 0) break;
        --q;
        bump(free[q], 1);
        continue;
      }
      if (q + 1 == m) {
        leaf();
        bump(i, 1);
      } else {
        ++q;
      }
    }
    return out;
  }

  const SearchConfig& config() const { return cfg_; }
  const DualBasis& dual() const { return dual_; }

 private:
  SearchConfig cfg_;
  const DualBasis& dual_;
  std::vector<Subdiagram> subs_;
  std::vector<std::vector<Int>> bounds_;
  std::vector<Partition> parts_;
  Int max_norm_ = 0;
  std::array<std::array<Int, kN>, kN> h_{};
};

// Appends in partition order, so each k keeps its earliest witnesses.
void merge_into(WitnessMap& into, std::vector<char>& full, PartialResult&& part, std::size_t cap) {
  for (auto& [k, ws] : part.witnesses) {
    auto& slot = into[k];
    for (auto& w : ws) {
      if (slot.size() >= cap) break;
      slot.push_back(std::move(w));
    }
    if (slot.size() >= cap) full[static_cast<std::size_t>(k)] = 1;
  }
}

}  // namespace

SearchResult search_serial(const SearchConfig& cfg) {
  const Plan plan(cfg);
  SearchResult result;
  result.config = cfg;
  result.partitions_total = plan.partitions().size();
  std::vector<char> full(static_cast<std::size_t>(cfg.max_k) + 1, 0);
  for (const Partition& p : plan.partitions()) {
    PartialResult part = plan.run(p, full);
    result.tuples_visited += part.tuples;
    merge_into(result.witnesses, full, std::move(part), cfg.witness_cap);
    ++result.partitions_done;
  }
  result.complete = true;
  return result;
}

SearchResult search(const SearchConfig& cfg, const SearchControl& control, bool resume) {
  const Plan plan(cfg);
  const auto& parts = plan.partitions();
  const std::string checksum = checksum_hex(dual_gram_checksum(plan.dual().dual_gram));
  SearchResult result;
  result.config = cfg;
  result.partitions_total = parts.size();
  std::vector<char> full(static_cast<std::size_t>(cfg.max_k) + 1, 0);

  if (resume) {
    if (control.checkpoint_path.empty()) throw InvalidArgument("resume needs a checkpoint path");
    Checkpoint cp = read_checkpoint(control.checkpoint_path);
    SearchConfig a = cp.config, b = cfg;
    a.thread_count = b.thread_count = 1;
    if (!(a == b)) throw InvalidArgument("checkpoint was written for a different search configuration");
    if (cp.dual_gram_checksum != checksum || cp.partitions_total != parts.size()) {
      throw DataIntegrityError("checkpoint does not match this search plan");
    }
    result.witnesses = std::move(cp.witnesses);
    result.tuples_visited = cp.tuples_visited;
    result.partitions_done = cp.next_partition;
    for (const auto& [k, ws] : result.witnesses)
      if (ws.size() >= cfg.witness_cap) full[static_cast<std::size_t>(k)] = 1;
  }

  auto save = [&]() {
    if (control.checkpoint_path.empty()) return;
    Checkpoint cp;
    cp.config = cfg;
    cp.dual_gram_checksum = checksum;
    cp.next_partition = result.partitions_done;
    cp.partitions_total = parts.size();
    if (result.partitions_done > 0) {
      const Partition& p = parts[result.partitions_done - 1];
      cp.last_completed = std::make_pair(plan.subdiagram(p).mask, p.d1);
    }
    cp.tuples_visited = result.tuples_visited;
    cp.witnesses = result.witnesses;
    write_checkpoint(control.checkpoint_path, cp);
  };

  const int threads = cfg.thread_count;
  const std::size_t chunk = threads == 1 ? 1 : static_cast<std::size_t>(4 * threads);
  auto last_save = std::chrono::steady_clock::now();
  std::size_t start = result.partitions_done;
  while (start < parts.size()) {
    if (control.stop && control.stop->load()) break;
    const std::size_t end = std::min(parts.size(), start + chunk);
    std::vector<PartialResult> partials(end - start);
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
    for (std::size_t idx = start; idx < end; ++idx) {
      try {
        partials[idx - start] = plan.run(parts[idx], full);
      } catch (...) {
#pragma omp critical(k3le_search_failure)
        if (!failure) failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);
    for (auto& part : partials) {
      result.tuples_visited += part.tuples;
      merge_into(result.witnesses, full, std::move(part), cfg.witness_cap);
    }
    result.partitions_done = end;
    start = end;
    const auto now = std::chrono::steady_clock::now();
    if (std::chrono::duration<double>(now - last_save).count() >= control.checkpoint_interval_s) {
      save();
      last_save = now;
    }
  }
  result.complete = result.partitions_done == parts.size();
  save();
  return result;
}

}  // namespace k3le::nef
