#include "steinhaus/report.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace steinhaus {

bool SearchReport::has_nonzero_survivor() const {
  return std::any_of(survivors.begin(), survivors.end(), [](const std::string& s) {
    return s.find('1') != std::string::npos;
  });
}

std::string SearchReport::to_jsonl(bool with_timing) const {
  nlohmann::ordered_json j;
  j["n"] = n;
  j["ms_dim"] = ms_dim;
  j["constrained_dim"] = constrained_dim;
  j["bound"] = bound;
  j["bound_ok"] = bound_ok;
  j["candidates"] = candidates;
  j["survivors"] = survivors;
  j["elapsed_ms"] = with_timing ? elapsed_ms : 0;
  if (capped) j["capped"] = true;
  return j.dump();
}

bool Checkpoint::covers(int n) const {
  if (n > completed_through) return false;
  return std::find(pending.begin(), pending.end(), n) == pending.end();
}

std::string Checkpoint::to_json() const {
  nlohmann::ordered_json j;
  j["completed_through"] = completed_through;
  j["pending"] = pending;
  return j.dump();
}

std::optional<Checkpoint> Checkpoint::parse(const std::string& text) {
  const auto j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded() || !j.is_object() || !j.contains("completed_through"))
    return std::nullopt;
  Checkpoint ck;
  ck.completed_through = j["completed_through"].get<int>();
  if (j.contains("pending")) ck.pending = j["pending"].get<std::vector<int>>();
  return ck;
}

std::optional<Checkpoint> Checkpoint::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

void Checkpoint::save(const std::string& path) const {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    out << to_json() << '\n';
  }
  std::rename(tmp.c_str(), path.c_str());
}

}  // namespace steinhaus
