#include <atomic>
#include <csignal>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "k3le/classify.hpp"
#include "k3le/discriminant.hpp"
#include "k3le/isometry.hpp"
#include "k3le/lattice_io.hpp"
#include "k3le/theta.hpp"

namespace {

using namespace k3le;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

std::atomic<bool> g_stop{false};

extern "C" void on_sigint(int) { g_stop.store(true); }

int default_threads() {
  const char* env = std::getenv("K3LE_THREADS");
  if (!env || !*env) return 1;
  try {
    const int t = std::stoi(env);
    if (t >= 1) return t;
  } catch (const std::exception&) {
  }
  throw InvalidArgument("K3LE_THREADS must be a positive integer");
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw InvalidArgument("cannot write " + path);
  out << text;
}

GramLattice lattice_argument(const std::string& arg) {
  if (std::filesystem::is_regular_file(arg)) return read_lattice_file(arg);
  if (!arg.empty() && (arg.front() == '[' || arg.front() == '{')) {
    const auto j = nlohmann::json::parse(arg);
    if (j.is_array()) return GramLattice(IntMatrix::from_rows(j.get<std::vector<std::vector<Int>>>()));
    return lattice_from_json(j);
  }
  return builtin_gram(arg);
}

struct SearchOpts {
  nef::SearchConfig cfg;
  std::string out;
  bool resume = false;
  double checkpoint_interval = 30.0;
};

int run_search(const SearchOpts& o) {
  if (o.cfg.experimental()) std::cerr << "note: root window [" << o.cfg.min_roots << "," << o.cfg.max_roots << "] is experimental\n";
  nef::SearchControl control;
  control.stop = &g_stop;
  control.checkpoint_interval_s = o.checkpoint_interval;
  if (!o.out.empty()) control.checkpoint_path = o.out + ".checkpoint.json";
  if (o.resume && o.out.empty()) throw InvalidArgument("--resume needs --out");
  std::signal(SIGINT, on_sigint);
  const nef::SearchResult r = nef::search(o.cfg, control, o.resume);
  std::signal(SIGINT, SIG_DFL);
  if (!r.complete) {
    std::cerr << "interrupted after " << r.partitions_done << " of " << r.partitions_total
              << " partitions; checkpoint at " << control.checkpoint_path << ", rerun with --resume\n";
    return kFailed;
  }
  const auto ks = r.realizable();
  if (o.out.empty()) {
    std::cout << nef::realizable_json(ks);
  } else {
    nef::write_witness_file(o.out, r);
    nef::write_realizable_file(o.out + ".realizable.json", ks);
    std::filesystem::remove(control.checkpoint_path);
    std::cout << ks.size() << " realizable k, " << r.tuples_visited << " tuples, witnesses in " << o.out << "\n";
  }
  return kOk;
}

int run_verify(const std::string& path) {
  const nef::WitnessStore store = nef::read_witness_file(path);
  const std::string expected = nef::checksum_hex(nef::dual_gram_checksum(nef::standard_dual_basis().dual_gram));
  int bad = 0;
  if (store.dual_gram_checksum != expected) {
    std::cout << "FAIL dual Gram checksum " << store.dual_gram_checksum << " != " << expected << "\n";
    ++bad;
  }
  std::size_t total = 0;
  for (const auto& [k, ws] : store.witnesses) {
    for (const auto& w : ws) {
      ++total;
      if (const auto defect = nef::witness_defect(w)) {
        std::cout << "FAIL k=" << k << " d=" << to_string(w.d_coeffs) << ": " << *defect << "\n";
        ++bad;
      }
    }
  }
  std::cout << (bad ? "FAIL " : "ok ") << total << " witnesses, " << bad << " failures\n";
  return bad ? kFailed : kOk;
}

int run_inequality(Int max_n, Int from, int threads, double budget) {
  std::optional<Int> first;
  for (Int n = from; n <= max_n; ++n) {
    const auto r = theta::inequality_check(n, threads, budget);
    std::cout << n << "," << r.e7 << "," << r.e6 << "," << r.d6 << "," << r.lhs << "," << r.rhs << ","
              << (r.holds ? "true" : "false") << "\n";
    if (r.holds && !first) first = n;
  }
  if (first) {
    std::cerr << "first n with 2 N_E7 > 28 N_E6 + 63 N_D6: " << *first << "\n";
  } else {
    std::cerr << "inequality does not hold for n in [" << from << "," << max_n << "]\n";
  }
  return kOk;
}

int run_isometry(const std::string& left, const std::string& right, Int bound) {
  const GramLattice a = lattice_argument(left);
  const GramLattice b = lattice_argument(right);
  const IsometryResult r = isometry_search(a, b, bound);
  std::cout << to_string(r.status);
  if (!r.reason.empty()) std::cout << ": " << r.reason;
  std::cout << "\n";
  if (r.transform) std::cout << matrix_to_json(*r.transform).dump() << "\n";
  return r.status == IsometryStatus::found ? kOk : kFailed;
}

int run_witness_large(Int k, bool complete, double budget) {
  const nef::LargeKWitness w = nef::large_k_witness(k, complete, static_cast<std::uint64_t>(budget));
  std::cout << "k=" << w.k << " alpha=" << w.alpha << " beta=" << w.beta << " n=" << w.n << "\n";
  if (!complete) return kOk;
  if (!w.v) {
    std::cout << (w.e8.budget_exhausted ? "no E8 vector within the node budget" : "no E8 vector found") << "\n";
    return kFailed;
  }
  std::cout << "v=" << to_string(*w.v) << " orthogonal_roots_in_E8=" << w.e8.orthogonal_roots << "\n";
  std::cout << "l=" << to_string(*w.l) << " R(l)=" << *w.root_count << "\n";
  return (*w.root_count >= 2 && *w.root_count <= 8) ? kOk : kFailed;
}

int run_classify(Int max_k, const std::vector<std::string>& witnesses, const std::string& out,
                 const std::string& format, int threads) {
  report::StoreSet stores;
  for (const auto& path : witnesses) stores.add(path, nef::read_witness_file(path));
  const Int need = std::min<Int>(max_k, 4899);
  if (witnesses.empty()) {
    // no stores given: run both windows in memory
    for (int max_roots : {8, 10}) {
      nef::SearchConfig cfg;
      cfg.max_k = need;
      cfg.max_roots = max_roots;
      cfg.thread_count = threads;
      stores.add("search[2," + std::to_string(max_roots) + "]", nef::to_store(nef::search(cfg)));
    }
  }
  const report::Classification c = report::classify(max_k, stores);
  if (format == "json") {
    write_text(out, report::to_json(c).dump(1) + "\n");
  } else if (format == "csv") {
    write_text(out, report::to_csv(c));
  } else {
    write_text(out, report::to_markdown(c));
  }
  if (c.partial) std::cerr << "warning: classification is partial, witness stores do not cover every k\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lattice computations for nef divisors of U+E8(-1) and the resulting k classification"};
  app.require_subcommand(1);

  int threads = 1;
  try {
    threads = default_threads();
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  }

  SearchOpts so;
  so.cfg.thread_count = threads;
  auto* search = app.add_subcommand("search", "exhaustive nef divisor search");
  search->add_option("--max-k", so.cfg.max_k, "largest k")->capture_default_str();
  search->add_option("--min-roots", so.cfg.min_roots, "fewest orthogonal roots")->capture_default_str();
  search->add_option("--max-roots", so.cfg.max_roots, "most orthogonal roots")->capture_default_str();
  search->add_option("--threads", so.cfg.thread_count, "worker threads (default K3LE_THREADS or 1)");
  search->add_option("--witness-cap", so.cfg.witness_cap, "witnesses kept per k")->capture_default_str();
  search->add_option("--out", so.out, "witness file; the realizable set goes to OUT.realizable.json");
  search->add_flag("--resume", so.resume, "continue from OUT.checkpoint.json");
  search->add_option("--checkpoint-interval", so.checkpoint_interval, "seconds between checkpoints")->capture_default_str();

  std::string verify_path;
  auto* verify = app.add_subcommand("verify", "recheck every witness in a witness file");
  verify->add_option("--witnesses", verify_path, "witness file")->required();

  std::string theta_label, theta_out;
  Int theta_max_n = 10;
  double budget = theta::kDefaultBudget;
  auto* th = app.add_subcommand("theta", "representation numbers N(2n) as CSV");
  th->add_option("--lattice", theta_label, "E6, E7, E8, D6, A<n>, ...")->required();
  th->add_option("--max-n", theta_max_n, "largest n")->capture_default_str();
  th->add_option("--out", theta_out, "CSV path (stdout when omitted)");
  th->add_option("--threads", threads, "worker threads");
  th->add_option("--budget", budget, "node budget guard")->capture_default_str();

  Int ineq_max_n = 10, ineq_from = 1;
  auto* ineq = app.add_subcommand("inequality", "scan 2 N_E7 > 28 N_E6 + 63 N_D6");
  ineq->add_option("--max-n", ineq_max_n, "largest n")->capture_default_str();
  ineq->add_option("--from", ineq_from, "first n")->capture_default_str();
  ineq->add_option("--threads", threads, "worker threads");
  ineq->add_option("--budget", budget, "node budget guard")->capture_default_str();

  auto* threshold = app.add_subcommand("threshold", "least n for the analytic bound");
  auto* mass = app.add_subcommand("mass-check", "check the genus mass identity");

  std::string left, right;
  Int iso_bound = kDefaultIsometryBound;
  auto* iso = app.add_subcommand("isometry", "search for an isometry between two lattices");
  iso->add_option("--left", left, "lattice name, JSON file or inline Gram")->required();
  iso->add_option("--right", right, "lattice name, JSON file or inline Gram")->required();
  iso->add_option("--bound", iso_bound, "coefficient bound")->capture_default_str();

  Int over_k = 1;
  Int over_bound = 1024;
  auto* over = app.add_subcommand("overlattice", "does U+<-2k> have a non-trivial even overlattice");
  over->add_option("--k", over_k, "k")->required();
  over->add_option("--bound", over_bound, "discriminant group order bound")->capture_default_str();

  Int large_k = 4900;
  bool no_e8 = false;
  double e8_budget = static_cast<double>(nef::kDefaultE8Budget);
  auto* large = app.add_subcommand("witness-large", "explicit witness for k >= 4900");
  large->add_option("--k", large_k, "k")->required();
  large->add_flag("--no-e8", no_e8, "skip the E8 vector search");
  large->add_option("--budget", e8_budget, "node budget for the E8 search")->capture_default_str();

  Int cls_max_k = 300;
  std::vector<std::string> cls_witnesses;
  std::string cls_out, cls_format = "json";
  auto* cls = app.add_subcommand("classify", "per-k classification table");
  cls->add_option("--max-k", cls_max_k, "largest k")->capture_default_str();
  cls->add_option("--witnesses", cls_witnesses, "witness files (repeatable); searched in memory when omitted");
  cls->add_option("--out", cls_out, "output path (stdout when omitted)");
  cls->add_option("--format", cls_format, "json, csv or md")->check(CLI::IsMember({"json", "csv", "md"}))->capture_default_str();
  cls->add_option("--threads", threads, "worker threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    if (code == 0) return kOk;
    std::cerr << app.help();
    return kUsage;
  }

  try {
    if (*search) return run_search(so);
    if (*verify) return run_verify(verify_path);
    if (*th) {
      const auto table = theta::representation_table(theta_label, theta_max_n, threads, budget);
      write_text(theta_out, table.to_csv());
      return kOk;
    }
    if (*ineq) return run_inequality(ineq_max_n, ineq_from, threads, budget);
    if (*threshold) {
      const auto r = theta::analytic_threshold();
      std::cout << r.n << "\n";
      std::cout << "constants " << r.e7_constant << " " << r.e6_constant << " " << r.d6_constant << "\n";
      return kOk;
    }
    if (*mass) {
      const theta::MassIdentity m;
      const bool ok = theta::mass_identity_check();
      std::cout << "1/" << m.d10_term << " + 1/" << m.e8_term << " = 1/" << m.total << " = 5/(2^8*4!*1814400): "
                << (ok ? "true" : "false") << "\n";
      return ok ? kOk : kFailed;
    }
    if (*iso) return run_isometry(left, right, iso_bound);
    if (*over) {
      if (over_k < 1) throw InvalidArgument("--k must be positive");
      const GramLattice l = builtin_gram("U+<" + std::to_string(-2 * over_k) + ">");
      std::cout << (has_nontrivial_overlattice(l, over_bound) ? "true" : "false") << "\n";
      return kOk;
    }
    if (*large) return run_witness_large(large_k, !no_e8, e8_budget);
    if (*cls) return run_classify(cls_max_k, cls_witnesses, cls_out, cls_format, threads);
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  }
  return kUsage;
}
