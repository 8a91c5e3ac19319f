// Command-line front end: build and inspect Steinhaus matrices, run the
// structural checks, enumerate multi-symmetric matrices, and drive the
// regular-mod-4 search and the odd-degree-regularity verification.
//
// Exit codes: 0 ok / paper-consistent results, 2 usage error, 3 a size was
// capped or left incomplete, 4 a counterexample or mismatch was found.

#include <atomic>
#include <condition_variable>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "steinhaus/matrix.hpp"
#include "steinhaus/regularity.hpp"
#include "steinhaus/report.hpp"
#include "steinhaus/sequence.hpp"
#include "steinhaus/symmetry.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitCapped = 3;
constexpr int kExitCounterexample = 4;

using steinhaus::BinarySequence;
using steinhaus::SteinhausMatrix;

int usage_error(const std::string& msg) {
  std::cerr << "error: " << msg << "\n";
  return kExitUsage;
}

std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const int n = std::stoi(text);
    return {n, n};
  }
  return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
}

std::size_t default_cap() {
  if (const char* env = std::getenv("STEINHAUS_CAP")) {
    try {
      return static_cast<std::size_t>(std::stoul(env));
    } catch (...) {
    }
  }
  return steinhaus::kDefaultEnumerationCap;
}

unsigned default_jobs() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

// Runs compute(item) on a small pool and delivers results to emit in item
// order, so output streams are deterministic regardless of --jobs.
template <typename R, typename Compute, typename Emit>
void ordered_parallel(const std::vector<int>& items, unsigned jobs, Compute compute,
                      Emit emit) {
  if (jobs <= 1 || items.size() <= 1) {
    for (int item : items) emit(item, compute(item));
    return;
  }
  std::atomic<std::size_t> next{0};
  std::map<std::size_t, R> ready;
  std::mutex mu;
  std::condition_variable cv;
  std::vector<std::thread> pool;
  const unsigned count = std::min<std::size_t>(jobs, items.size());
  for (unsigned t = 0; t < count; ++t) {
    pool.emplace_back([&] {
      for (;;) {
        const std::size_t k = next.fetch_add(1);
        if (k >= items.size()) break;
        R r = compute(items[k]);
        {
          std::lock_guard<std::mutex> lock(mu);
          ready.emplace(k, std::move(r));
        }
        cv.notify_one();
      }
    });
  }
  {
    std::unique_lock<std::mutex> lock(mu);
    for (std::size_t k = 0; k < items.size(); ++k) {
      cv.wait(lock, [&] { return ready.count(k) > 0; });
      R r = std::move(ready.at(k));
      ready.erase(k);
      lock.unlock();
      emit(items[k], r);
      lock.lock();
    }
  }
  for (auto& th : pool) th.join();
}

std::string render_grid(const SteinhausMatrix& m) {
  const int n = m.size();
  std::string out;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) out += static_cast<char>('0' + m.entry(i, j));
    out += '\n';
  }
  return out;
}

std::string render_triangle(const SteinhausMatrix& m) {
  const int n = m.size();
  std::string out;
  for (int i = 1; i <= n - 1; ++i) {
    for (int j = i + 1; j <= n; ++j) out += static_cast<char>('0' + m.entry(i, j));
    out += '\n';
  }
  return out;
}

int cmd_matrix(const std::string& seq_text, const std::string& format) {
  BinarySequence seq;
  try {
    seq = BinarySequence::parse(seq_text);
  } catch (const std::invalid_argument& e) {
    return usage_error(e.what());
  }
  const SteinhausMatrix m = SteinhausMatrix::from_sequence(seq);
  if (format == "grid") {
    std::cout << render_grid(m);
  } else if (format == "triangle") {
    std::cout << render_triangle(m);
  } else {
    nlohmann::ordered_json j;
    j["n"] = m.size();
    j["sequence"] = seq.to_string();
    std::vector<std::string> grid;
    for (int i = 1; i <= m.size(); ++i) {
      std::string row;
      for (int k = 1; k <= m.size(); ++k) row += static_cast<char>('0' + m.entry(i, k));
      grid.push_back(std::move(row));
    }
    j["matrix"] = grid;
    j["degrees"] = steinhaus::degrees(m).values();
    j["doubly_symmetric"] = steinhaus::is_doubly_symmetric(m);
    j["multi_symmetric"] = steinhaus::is_multi_symmetric(m);
    std::cout << j.dump(2) << "\n";
  }
  return kExitOk;
}

int cmd_check(const std::string& seq_text) {
  BinarySequence seq;
  try {
    seq = BinarySequence::parse(seq_text);
  } catch (const std::invalid_argument& e) {
    return usage_error(e.what());
  }
  const SteinhausMatrix m = SteinhausMatrix::from_sequence(seq);
  const int n = m.size();
  const steinhaus::DegreeVector d = steinhaus::degrees(m);

  std::cout << "n: " << n << "\n";
  std::cout << "sequence: " << seq.to_string() << "\n";
  std::cout << "degrees:";
  for (int v : d.values()) std::cout << ' ' << v;
  std::cout << "\n";
  if (const auto r = steinhaus::regular_degree(d))
    std::cout << "regular: yes (degree " << *r << ")\n";
  else
    std::cout << "regular: no\n";
  const bool multi = steinhaus::is_multi_symmetric(m);
  std::cout << "doubly_symmetric: " << (steinhaus::is_doubly_symmetric(m) ? "true" : "false")
            << "\n";
  std::cout << "multi_symmetric: " << (multi ? "true" : "false") << "\n";
  std::cout << "degree_consistency: "
            << (steinhaus::degree_consistency(d) ? "true" : "false") << "\n";
  if (n >= 3) {
    const auto ds = steinhaus::doubly_symmetric_characterizations(m);
    const auto ms = steinhaus::multi_symmetric_characterizations(m);
    std::cout << "doubly_symmetric_characterizations: " << ds[0] << ds[1] << ds[2]
              << (ds[0] == ds[1] && ds[1] == ds[2] ? " (agree)" : " (DISAGREE)") << "\n";
    std::cout << "multi_symmetric_characterizations: " << ms[0] << ms[1] << ms[2]
              << (ms[0] == ms[1] && ms[1] == ms[2] ? " (agree)" : " (DISAGREE)") << "\n";
  }
  if (multi)
    std::cout << "column_symmetry: "
              << (steinhaus::column_symmetry_holds(m) ? "true" : "false") << "\n";
  for (int i = 1; i <= n / 2; ++i) {
    const auto t = steinhaus::antidiagonal_degree_identity(m, i);
    std::cout << "antidiagonal_identity i=" << i << ": (" << t[0] << "," << t[1] << ","
              << t[2] << ")" << (t[0] == t[1] && t[1] == t[2] ? " ok" : " MISMATCH")
              << "\n";
  }
  return kExitOk;
}

struct SearchOptions {
  std::string range = "5..300";
  std::size_t cap = 0;
  unsigned jobs = 0;
  std::string out;
  bool resume = false;
  bool full = false;
  bool timings = false;
};

int cmd_search(const SearchOptions& opt) {
  int n_min = 0, n_max = 0;
  try {
    std::tie(n_min, n_max) = parse_range(opt.range);
  } catch (...) {
    return usage_error("bad range: " + opt.range);
  }
  if (n_min < 5 || n_min > n_max) return usage_error("need a range with 5 <= min <= max");
  if (n_max > 300 && !opt.full)
    return usage_error("sizes beyond 300 are a long run; pass --full to confirm");
  if (opt.resume && opt.out.empty()) return usage_error("--resume needs --out");

  const std::string ckpt_path = opt.out.empty() ? "" : opt.out + ".ckpt";
  steinhaus::Checkpoint ckpt;
  ckpt.completed_through = n_min - 1;
  if (opt.resume) {
    if (auto loaded = steinhaus::Checkpoint::load(ckpt_path)) ckpt = *loaded;
  }

  std::vector<int> items;
  for (int n = n_min; n <= n_max; ++n)
    if (!opt.resume || !ckpt.covers(n)) items.push_back(n);

  std::ofstream file;
  if (!opt.out.empty()) {
    file.open(opt.out, opt.resume ? std::ios::app : std::ios::trunc);
    if (!file) return usage_error("cannot open output file: " + opt.out);
  }
  std::ostream& sink = opt.out.empty() ? std::cout : file;

  bool any_capped = false;
  bool any_nonzero = false;
  std::size_t searched = 0;
  ordered_parallel<steinhaus::SearchReport>(
      items, opt.jobs,
      [&](int n) { return steinhaus::search_regular_mod4(n, opt.cap); },
      [&](int n, const steinhaus::SearchReport& rep) {
        sink << rep.to_jsonl(opt.timings) << "\n";
        sink.flush();
        ++searched;
        if (rep.capped) {
          any_capped = true;
          ckpt.pending.push_back(n);
        }
        if (rep.has_nonzero_survivor()) any_nonzero = true;
        if (n > ckpt.completed_through) ckpt.completed_through = n;
        if (!ckpt_path.empty()) ckpt.save(ckpt_path);
      });

  std::cerr << "searched " << searched << " sizes in [" << n_min << ".." << n_max
            << "], skipped " << (static_cast<std::size_t>(n_max - n_min + 1) - items.size())
            << "; nonzero survivors: " << (any_nonzero ? "FOUND" : "none")
            << (any_capped ? "; some sizes capped" : "") << "\n";
  if (any_nonzero) return kExitCounterexample;
  if (any_capped) return kExitCapped;
  return kExitOk;
}

int cmd_verify(const std::string& range, std::size_t cap, unsigned jobs) {
  int lo = 0, hi = 0;
  try {
    std::tie(lo, hi) = parse_range(range);
  } catch (...) {
    return usage_error("bad range: " + range);
  }
  if (lo < 4 || lo > hi || lo % 2 != 0 || hi % 2 != 0)
    return usage_error("need an even range with 4 <= min <= max (order 2 is the known K_2)");

  struct Result {
    bool capped = false;
    steinhaus::ConjectureVerdict verdict;
  };
  std::vector<int> items;
  for (int n = lo; n <= hi; n += 2) items.push_back(n);

  bool any_capped = false;
  bool any_counterexample = false;
  ordered_parallel<Result>(
      items, jobs,
      [&](int n) -> Result {
        try {
          return {false, steinhaus::verify_conjecture2_at(n, cap)};
        } catch (const steinhaus::gf2::CapExceeded&) {
          return {true, {}};
        }
      },
      [&](int n, const Result& r) {
        if (r.capped) {
          std::cout << "order " << n << ": capped\n";
          any_capped = true;
        } else if (r.verdict.verified) {
          std::cout << "order " << n << ": verified\n";
        } else {
          std::cout << "order " << n << ": COUNTEREXAMPLE sequence "
                    << r.verdict.counterexample->to_string() << "\n";
          any_counterexample = true;
        }
      });

  std::cerr << "verified orders " << lo << ".." << hi
            << (any_counterexample ? ": counterexample found"
                                   : (any_capped ? ": incomplete (capped)" : ": all verified"))
            << "\n";
  if (any_counterexample) return kExitCounterexample;
  if (any_capped) return kExitCapped;
  return kExitOk;
}

int cmd_bruteforce(int n, const std::string& parity, unsigned jobs, int hard_cap) {
  steinhaus::DegreeParity p = steinhaus::DegreeParity::Any;
  if (parity == "odd")
    p = steinhaus::DegreeParity::Odd;
  else if (parity == "even")
    p = steinhaus::DegreeParity::Even;
  else if (parity != "any")
    return usage_error("parity must be any, odd or even");
  try {
    const auto hits = steinhaus::brute_force_regular(n, p, jobs, hard_cap);
    for (const auto& s : hits) {
      const SteinhausMatrix m = SteinhausMatrix::from_sequence(s);
      const auto deg = steinhaus::regular_degree(steinhaus::degrees(m));
      std::cout << (s.size() ? s.to_string() : "(empty)") << "  degree " << *deg << "\n";
    }
    std::cerr << "n=" << n << ": " << hits.size() << " regular graph(s) with parity "
              << parity << "\n";
  } catch (const steinhaus::gf2::CapExceeded&) {
    std::cerr << "n=" << n << " exceeds the exhaustive-search cap (" << hard_cap << ")\n";
    return kExitCapped;
  }
  return kExitOk;
}

int cmd_count_ms(const std::string& range, std::size_t cap) {
  int lo = 0, hi = 0;
  try {
    std::tie(lo, hi) = parse_range(range);
  } catch (...) {
    return usage_error("bad range: " + range);
  }
  if (lo < 1 || lo > hi) return usage_error("need 1 <= min <= max");

  bool mismatch = false;
  std::cout << "n\tdim\tformula\tenumerated\tok\n";
  for (int n = lo; n <= hi; ++n) {
    const int dim = steinhaus::ms_dimension(n);
    std::cout << n << "\t" << dim << "\t";
    if (dim > 63)
      std::cout << "2^" << dim;
    else
      std::cout << steinhaus::ms_count(n);
    if (static_cast<std::size_t>(dim) > cap || dim > 63) {
      std::cout << "\t-\t-\n";
      continue;
    }
    std::uint64_t seen = 0;
    bool all_ms = true;
    steinhaus::enumerate_ms(n, cap, [&](const SteinhausMatrix& m) {
      ++seen;
      if (!steinhaus::is_multi_symmetric(m)) all_ms = false;
    });
    const bool ok = all_ms && seen == steinhaus::ms_count(n);
    if (!ok) mismatch = true;
    std::cout << "\t" << seen << "\t" << (ok ? "yes" : "NO") << "\n";
  }
  return mismatch ? kExitCounterexample : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Steinhaus matrices and graphs: construction, symmetry structure, "
               "and the regular-mod-4 search"};
  app.require_subcommand(1);

  std::string seq_text;
  std::string format = "grid";
  auto* matrix = app.add_subcommand("matrix", "print the matrix of a sequence");
  matrix->add_option("seq", seq_text, "binary sequence, e.g. 1100 or 0xC:4");
  matrix->add_option("--format", format, "grid, triangle or json")
      ->check(CLI::IsMember({"grid", "triangle", "json"}));

  std::string check_seq;
  auto* check = app.add_subcommand("check", "run the structural checks on a sequence");
  check->add_option("seq", check_seq, "binary sequence");

  SearchOptions sopt;
  sopt.cap = default_cap();
  sopt.jobs = default_jobs();
  auto* search = app.add_subcommand(
      "search", "regular-mod-4 search over multi-symmetric matrices, JSONL per size");
  search->add_option("range", sopt.range, "sizes to scan, e.g. 5..300");
  search->add_option("--cap", sopt.cap, "max solution-space dimension to enumerate");
  search->add_option("--jobs", sopt.jobs, "worker threads");
  search->add_option("--out", sopt.out, "write JSONL here instead of stdout");
  search->add_flag("--resume", sopt.resume, "continue from the checkpoint next to --out");
  search->add_flag("--full", sopt.full, "allow scans beyond size 300");
  search->add_flag("--timings", sopt.timings, "emit real elapsed_ms (non-reproducible)");

  std::string vrange = "4..302";
  std::size_t vcap = default_cap();
  unsigned vjobs = default_jobs();
  auto* verify = app.add_subcommand(
      "verify-conjecture2", "verify there is no regular Steinhaus graph of odd degree");
  verify->add_option("range", vrange, "even orders to verify, e.g. 4..302");
  verify->add_option("--cap", vcap, "max solution-space dimension to enumerate");
  verify->add_option("--jobs", vjobs, "worker threads");

  int bf_n = 0;
  std::string bf_parity = "any";
  unsigned bf_jobs = default_jobs();
  int bf_cap = 30;
  auto* brute = app.add_subcommand("bruteforce",
                                   "exhaustively list regular Steinhaus graphs of size n");
  brute->add_option("n", bf_n, "number of vertices")->required();
  brute->add_option("--parity", bf_parity, "any, odd or even");
  brute->add_option("--jobs", bf_jobs, "worker threads");
  brute->add_option("--max-n", bf_cap, "hard cap on n (2^(n-1) sequences)");

  std::string crange = "1..40";
  std::size_t ccap = default_cap();
  auto* count = app.add_subcommand("count-ms",
                                   "multi-symmetric counts: formula vs enumeration");
  count->add_option("range", crange, "sizes, e.g. 1..40");
  count->add_option("--cap", ccap, "max dimension to enumerate");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (matrix->parsed()) return cmd_matrix(seq_text, format);
    if (check->parsed()) return cmd_check(check_seq);
    if (search->parsed()) return cmd_search(sopt);
    if (verify->parsed()) return cmd_verify(vrange, vcap, vjobs);
    if (brute->parsed()) return cmd_bruteforce(bf_n, bf_parity, bf_jobs, bf_cap);
    if (count->parsed()) return cmd_count_ms(crange, ccap);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}
