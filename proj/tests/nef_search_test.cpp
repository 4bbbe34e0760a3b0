#include <gtest/gtest.h>

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <thread>

#include <json.hpp>

#include "k3le/nef_search.hpp"
#include "k3le/witness_io.hpp"

using namespace k3le;
using namespace k3le::nef;

namespace {

std::set<Int> tight_set_up_to(Int max_k) {
  std::set<Int> out = {170, 185, 186, 188, 190, 194, 200, 202, 204, 206};
  for (Int k = 208; k <= max_k; ++k)
    if (k != 211 && k != 219) out.insert(k);
  std::erase_if(out, [&](Int k) { return k > max_k; });
  return out;
}

std::set<Int> wide_set_up_to(Int max_k) {
  std::set<Int> out = {140, 146, 150, 152, 154, 155, 158, 160, 162};
  for (Int k = 164; k <= max_k; ++k)
    if (k != 169 && k != 171 && k != 175) out.insert(k);
  std::erase_if(out, [&](Int k) { return k > max_k; });
  return out;
}

SearchConfig config(Int max_k, int max_roots, int threads = 1) {
  SearchConfig c;
  c.max_k = max_k;
  c.max_roots = max_roots;
  c.thread_count = threads;
  return c;
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("k3le_nef_" + name);
}

const SearchResult& tight300() {
  static const SearchResult r = search(config(300, 8));
  return r;
}

}  // namespace

TEST(DualBasis, MatchesGolden) {
  std::ifstream in(std::string(K3LE_GOLDEN_DIR) + "/e10_dual_gram.json");
  ASSERT_TRUE(in);
  const nlohmann::json j = nlohmann::json::parse(in);
  const DualBasis& d = standard_dual_basis();
  ASSERT_EQ(j["rank"].get<int>(), 10);
  for (std::size_t i = 0; i < 10; ++i)
    for (std::size_t k = 0; k < 10; ++k) EXPECT_EQ(d.dual_gram(i, k), j["gram"][i][k].get<Int>());
}

TEST(DualBasis, SignPatternAndDuality) {
  const DualBasis& d = standard_dual_basis();
  const Int squares[] = {0, 2, 6, 12, 20, 30, 42, 10, 18, 4};
  for (std::size_t i = 0; i < 10; ++i) {
    EXPECT_EQ(d.dual_gram(i, i), squares[i]);
    for (std::size_t k = 0; k < 10; ++k) {
      EXPECT_GE(d.dual_gram(i, k), 0);
      Vector c(10, 0);
      c[k] = 1;
      EXPECT_EQ(d.e10.inner(d.vectors[i], c), i == k ? 1 : 0);
    }
  }
  EXPECT_EQ(d.e10.gram() * d.dual_gram, IntMatrix::identity(10));
}

TEST(DualBasis, RejectsNonUnimodular) {
  EXPECT_THROW(dual_basis(builtin_gram("U+<-2>")), DimensionMismatch);
  EXPECT_THROW(dual_basis(builtin_gram("U(2)+E8(-1)")), InvalidArgument);
  EXPECT_THROW(dual_basis(builtin_gram("II_1_9")), DataIntegrityError);
}

TEST(DualBasis, ChecksumIsStable) {
  const std::uint64_t a = dual_gram_checksum(standard_dual_basis().dual_gram);
  EXPECT_EQ(checksum_hex(a).size(), 16u);
  IntMatrix changed = standard_dual_basis().dual_gram;
  changed(0, 1) += 1;
  EXPECT_NE(dual_gram_checksum(changed), a);
}

TEST(Config, Validation) {
  EXPECT_NO_THROW(SearchConfig{}.validate());
  EXPECT_FALSE(SearchConfig{}.experimental());
  SearchConfig c;
  c.max_roots = 10;
  EXPECT_FALSE(c.experimental());
  c.max_roots = 12;
  EXPECT_TRUE(c.experimental());
  c.min_roots = 5;
  c.max_roots = 4;
  EXPECT_THROW(c.validate(), InvalidArgument);
  SearchConfig t;
  t.thread_count = 0;
  EXPECT_THROW(t.validate(), InvalidArgument);
}

TEST(Subdiagrams, AdmissibleExamples) {
  const auto has = [](const std::vector<Subdiagram>& v, std::initializer_list<int> nodes) {
    const std::vector<int> n(nodes);
    const auto m = e10::mask_of(n);
    return std::any_of(v.begin(), v.end(), [&](const Subdiagram& s) { return s.mask == m; });
  };
  const auto tight = admissible_subdiagrams(2, 8);
  const auto wide = admissible_subdiagrams(2, 10);
  EXPECT_TRUE(has(tight, {7, 8}));
  EXPECT_TRUE(has(tight, {1}));
  EXPECT_TRUE(has(tight, {2, 5, 8, 10}));
  EXPECT_FALSE(has(tight, {1, 2, 3}));
  EXPECT_FALSE(has(tight, {1, 3, 5, 8, 10}));
  EXPECT_TRUE(has(wide, {1, 3, 5, 8, 10}));
  EXPECT_TRUE(has(wide, {1, 2, 4, 6}));
  for (const auto& s : tight) {
    EXPECT_GE(s.root_count, 2);
    EXPECT_LE(s.root_count, 8);
    EXPECT_EQ(s.root_count, root_count_formula(s.type));
  }
  for (std::size_t i = 1; i < tight.size(); ++i)
    EXPECT_LE(std::popcount(tight[i - 1].mask), std::popcount(tight[i].mask));
}

TEST(Bounds, ZeroOnJAndMonotone) {
  const auto j = e10::mask_of(std::vector<int>{3, 8});
  const auto b1 = coefficient_bounds(j, 600);
  const auto b2 = coefficient_bounds(j, 9800);
  EXPECT_EQ(b1[2], 0);
  EXPECT_EQ(b1[7], 0);
  for (std::size_t i = 0; i < 10; ++i) EXPECT_LE(b1[i], b2[i]);
  // d_i^2 D_i^2 <= max_norm
  const DualBasis& d = standard_dual_basis();
  for (std::size_t i = 1; i < 10; ++i)
    if (b2[i] > 0) {
      EXPECT_LE(b2[i] * b2[i] * d.dual_gram(i, i), 9800);
      EXPECT_GT((b2[i] + 1) * (b2[i] + 1) * d.dual_gram(i, i), 9800);
    }
}

TEST(Search, SmallWindowMatchesKnownSet) {
  EXPECT_EQ(tight300().realizable(), tight_set_up_to(300));
  EXPECT_TRUE(tight300().complete);
  EXPECT_EQ(tight300().partitions_done, tight300().partitions_total);
}

TEST(Search, WideWindowSporadicValues) {
  const SearchResult r = search(config(180, 10));
  EXPECT_EQ(r.realizable(), wide_set_up_to(180));
}

TEST(Search, TightIsContainedInWide) {
  const SearchResult wide = search(config(300, 10));
  for (Int k : tight300().realizable()) EXPECT_TRUE(wide.realizable().count(k)) << k;
}

TEST(Search, IndependentOfThreadCount) {
  const SearchResult four = search(config(300, 8, 4));
  EXPECT_EQ(four.witnesses, tight300().witnesses);
  EXPECT_EQ(realizable_json(four.realizable()), realizable_json(tight300().realizable()));
}

TEST(Search, SerialReferenceAgrees) {
  const SearchResult s = search_serial(config(300, 8));
  EXPECT_EQ(s.witnesses, tight300().witnesses);
  EXPECT_EQ(s.tuples_visited, tight300().tuples_visited);
}

TEST(Search, WitnessCapAndOrdering) {
  for (const auto& [k, ws] : tight300().witnesses) {
    EXPECT_FALSE(ws.empty());
    EXPECT_LE(ws.size(), 4u);
    for (const auto& w : ws) EXPECT_EQ(w.k, k);
  }
}

TEST(Witness, AllVerify) {
  for (const auto& [k, ws] : tight300().witnesses)
    for (const auto& w : ws) EXPECT_EQ(witness_defect(w), std::nullopt) << k;
}

TEST(Witness, TamperedWitnessesFail) {
  NefWitness w = tight300().witnesses.begin()->second.front();
  NefWitness neg = w;
  for (auto& x : neg.d_coeffs) x = -x;
  EXPECT_FALSE(verify_witness(neg));
  NefWitness wrong_k = w;
  wrong_k.k += 1;
  EXPECT_FALSE(verify_witness(wrong_k));
  NefWitness wrong_count = w;
  wrong_count.root_count += 2;
  EXPECT_FALSE(verify_witness(wrong_count));
  NefWitness wrong_c = w;
  wrong_c.c_coords[0] += 1;
  EXPECT_FALSE(verify_witness(wrong_c));
}

TEST(Witness, JsonRoundTrip) {
  for (const auto& [k, ws] : tight300().witnesses)
    for (const auto& w : ws) EXPECT_EQ(witness_from_json(to_json(w)), w);
  const auto path = temp_path("roundtrip.jsonl").string();
  write_witness_file(path, tight300());
  const WitnessStore s = read_witness_file(path);
  EXPECT_EQ(s.witnesses, tight300().witnesses);
  EXPECT_EQ(s.config, tight300().config);
  EXPECT_TRUE(s.complete);
  EXPECT_EQ(s.dual_gram_checksum, checksum_hex(dual_gram_checksum(standard_dual_basis().dual_gram)));
  const auto rpath = temp_path("roundtrip.realizable.json").string();
  write_realizable_file(rpath, s.realizable());
  EXPECT_EQ(read_realizable_file(rpath), tight_set_up_to(300));
  std::filesystem::remove(path);
  std::filesystem::remove(rpath);
}

TEST(Checkpoint, StopBeforeStartThenResume) {
  const auto path = temp_path("stop.checkpoint.json").string();
  std::atomic<bool> stop{true};
  SearchControl control;
  control.checkpoint_path = path;
  control.stop = &stop;
  const SearchResult partial = search(config(300, 8), control);
  EXPECT_FALSE(partial.complete);
  EXPECT_EQ(partial.partitions_done, 0u);
  stop = false;
  const SearchResult resumed = search(config(300, 8), control, true);
  EXPECT_TRUE(resumed.complete);
  EXPECT_EQ(resumed.witnesses, tight300().witnesses);
  std::filesystem::remove(path);
}

TEST(Checkpoint, InterruptedRunResumesToSameResult) {
  const auto path = temp_path("interrupt.checkpoint.json").string();
  const SearchConfig cfg = config(1000, 8, 2);
  const SearchResult full = search(cfg);
  std::atomic<bool> stop{false};
  SearchControl control;
  control.checkpoint_path = path;
  control.checkpoint_interval_s = 0.01;
  control.stop = &stop;
  std::thread killer([&] {
    std::this_thread::sleep_for(std::chrono::milliseconds(30));
    stop = true;
  });
  const SearchResult first = search(cfg, control);
  killer.join();
  const Checkpoint cp = read_checkpoint(path);
  EXPECT_EQ(cp.next_partition, first.partitions_done);
  if (first.partitions_done > 0) {
    EXPECT_TRUE(cp.last_completed.has_value());
  }
  stop = false;
  const SearchResult resumed = search(cfg, control, true);
  EXPECT_TRUE(resumed.complete);
  EXPECT_EQ(resumed.witnesses, full.witnesses);
  EXPECT_EQ(resumed.tuples_visited, full.tuples_visited);
  std::filesystem::remove(path);
}

TEST(Checkpoint, ResumeRejectsOtherConfig) {
  const auto path = temp_path("mismatch.checkpoint.json").string();
  SearchControl control;
  control.checkpoint_path = path;
  search(config(100, 8), control);
  EXPECT_THROW(search(config(120, 8), control, true), InvalidArgument);
  EXPECT_NO_THROW(search(config(100, 8, 3), control, true));
  std::filesystem::remove(path);
  EXPECT_THROW(search(config(100, 8), SearchControl{}, true), InvalidArgument);
}

TEST(BruteForce, NefVectorsInABoxAreFound) {
  // Every primitive nef l = sum d_i D_i with small d, l^2 <= 2 max_k and
  // 2..10 orthogonal roots (counted on the complement) must be realized.
  const Int max_k = 170;
  const SearchResult r = search(config(max_k, 10));
  const std::set<Int> found = r.realizable();
  const DualBasis& d = standard_dual_basis();
  std::vector<Int> x(10, 0);
  std::size_t checked = 0;
  const Int box = 3;
  std::function<void(std::size_t, Int)> rec = [&](std::size_t i, Int partial) {
    if (partial > 2 * max_k) return;
    if (i == 10) {
      if (std::all_of(x.begin() + 1, x.end(), [](Int v) { return v == 0; })) return;
      const Vector c = d.dual_gram * std::span<const Int>(x);
      const Int norm = d.e10.norm(c);
      if (norm <= 0 || norm > 2 * max_k || !is_primitive(c)) return;
      const Int roots = orthogonal_root_count(d.e10, c);
      ++checked;
      if (roots >= 2 && roots <= 10) {
        EXPECT_TRUE(found.count(norm / 2)) << "k = " << norm / 2;
      }
      return;
    }
    // every term of the norm is nonnegative, so the diagonal part is a lower bound
    for (Int v = 0; v <= box; ++v) {
      x[i] = v;
      rec(i + 1, partial + v * v * d.dual_gram(i, i));
    }
    x[i] = 0;
  };
  rec(0, 0);
  EXPECT_GT(checked, 50u);
}

TEST(LargeK, SplitCheckExamples) {
  EXPECT_TRUE(split_check(4900, 76, 77));
  EXPECT_FALSE(split_check(4900, 76, 76));
  EXPECT_FALSE(split_check(100, 11, 12));
  EXPECT_THROW(split_check(0, 1, 2), InvalidArgument);
}

TEST(LargeK, FirstValue) {
  const LargeKWitness w = large_k_witness(4900);
  EXPECT_EQ(w.alpha, 76);
  EXPECT_EQ(w.beta, 77);
  EXPECT_EQ(w.n, 952);
  ASSERT_TRUE(w.v.has_value());
  ASSERT_TRUE(w.root_count.has_value());
  EXPECT_GE(*w.root_count, 2);
  EXPECT_LE(*w.root_count, 8);
  EXPECT_EQ(builtin_gram("E8").norm(*w.v), 2 * 952);
  EXPECT_EQ(builtin_gram("II_1_9").norm(*w.l), 2 * 4900);
  const LargeKWitness next = large_k_witness(4901, false);
  EXPECT_EQ(next.alpha, 77);
  EXPECT_EQ(next.beta, 78);
  EXPECT_EQ(next.n, 1105);
  EXPECT_FALSE(next.v.has_value());
}

TEST(LargeK, RandomValues) {
  std::mt19937 rng(4900);
  std::uniform_int_distribution<Int> dist(4900, 20000);
  const GramLattice ambient = builtin_gram("II_1_9");
  for (int t = 0; t < 50; ++t) {
    const Int k = dist(rng);
    const LargeKWitness w = large_k_witness(k);
    ASSERT_TRUE(w.l.has_value()) << k;
    EXPECT_TRUE(split_check(k, w.alpha, w.beta));
    EXPECT_GE(w.n, 952);
    EXPECT_EQ(ambient.norm(*w.l), 2 * k);
    EXPECT_TRUE(is_primitive(*w.l));
    EXPECT_EQ(orthogonal_root_count(ambient, *w.l), *w.root_count);
    EXPECT_GE(*w.root_count, 2);
    EXPECT_LE(*w.root_count, 8);
  }
  EXPECT_THROW(large_k_witness(4899), InvalidArgument);
}

TEST(LargeK, RootsAreRejected) {
  const E8Search s = find_e8_vector(1);
  EXPECT_FALSE(s.v.has_value());
  const E8Search any = find_e8_vector(1, 0, 240);
  ASSERT_TRUE(any.v.has_value());
  EXPECT_EQ(any.orthogonal_roots, 126);
}
