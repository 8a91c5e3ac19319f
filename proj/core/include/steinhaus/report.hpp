#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace steinhaus {

// Outcome of the regular-mod-4 search at one size n. survivors holds the
// generating sequences (as 0/1 strings) of every verified survivor; the
// zero-edge sequence is expected to be the only one.
struct SearchReport {
  int n = 0;
  std::size_t ms_dim = 0;
  std::size_t constrained_dim = 0;
  int bound = 0;       // ceil(n/24) for even n, ceil(n/30) for odd n
  bool bound_ok = false;
  std::uint64_t candidates = 0;
  std::vector<std::string> survivors;
  std::int64_t elapsed_ms = 0;
  bool capped = false;  // dimension exceeded the cap; nothing enumerated

  bool has_nonzero_survivor() const;

  // One JSON object, fixed key order, no whitespace. elapsed_ms is emitted
  // as 0 unless with_timing is set, so that identical runs produce
  // byte-identical streams.
  std::string to_jsonl(bool with_timing = false) const;
};

// Scan progress for resumable range searches: every n <= completed_through
// is done, plus the listed stragglers below it that are not.
struct Checkpoint {
  int completed_through = 0;
  std::vector<int> pending;

  bool covers(int n) const;

  std::string to_json() const;
  static std::optional<Checkpoint> parse(const std::string& text);

  static std::optional<Checkpoint> load(const std::string& path);
  void save(const std::string& path) const;
};

}  // namespace steinhaus
