#include "steinhaus/regularity.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <stdexcept>
#include <thread>

namespace steinhaus {

bool Mod4Profile::consistent() const {
  for (std::size_t k = 0; k < residues.size(); ++k) {
    if (!predicted[k]) continue;
    if (residues[k] % predicted[k]->modulus !=
        predicted[k]->residue % predicted[k]->modulus)
      return false;
  }
  return true;
}

Mod4Profile mod4_profile(const SteinhausMatrix& m) {
  const int n = m.size();
  const DegreeVector d = degrees(m);
  Mod4Profile profile;
  profile.residues.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) profile.residues.push_back(d.deg(i) & 3);
  profile.predicted.assign(static_cast<std::size_t>(n), std::nullopt);
  if (!is_multi_symmetric(m)) return profile;

  auto set = [&](int i, int modulus, int residue) {
    profile.predicted[static_cast<std::size_t>(i - 1)] =
        Mod4Prediction{modulus, residue % modulus};
  };

  if (n % 2 == 0) {
    const int half = n / 2 + 1;
    if (n >= 2) set(1, 2, m.entry(1, half));
    if (n >= 4) {
      set(2, 4, 2 * m.entry(1, half));
      set(3, 4, 2 * m.entry(2, half));
    }
    for (int i = 2; i <= n / 2 - 2; ++i)
      set(2 * i, 4, 2 * (m.entry(2, 2 * i + 1) ^ m.entry(i, 2 * i + 1)));
  } else {
    set(1, 2, 0);
    if (n >= 3) set(2, 4, 2 * m.entry(1, (n + 1) / 2));
    for (int i = 2; i <= (n - 3) / 2; ++i)
      set(2 * i, 4,
          2 * (m.entry(i + 1, 2 * i + 1) ^ m.entry(2 * i - 1, 2 * i + 1) ^
               m.entry(2 * i - 1, (n - 1) / 2 + i)));
    for (int i = 1; i <= (n - 3) / 2; ++i) set(2 * i + 1, 4, 2 * m.entry(2, 2 * i + 2));
  }

  // doubly-symmetric degrees are mirror-equal, so predictions propagate
  for (int i = 1; i <= n; ++i) {
    auto& mine = profile.predicted[static_cast<std::size_t>(i - 1)];
    auto& mirror = profile.predicted[static_cast<std::size_t>(n - i)];
    if (mine && !mirror) mirror = mine;
  }
  return profile;
}

bool divisibility_remarks_check(const SteinhausMatrix& m) {
  if (!is_multi_symmetric(m))
    throw std::invalid_argument("divisibility check needs a multi-symmetric matrix");
  const int n = m.size();
  const DegreeVector d = degrees(m);
  if (n % 2 == 0) return n < 6 || d.deg(4) % 4 == 0;
  return n < 3 || d.deg(3) % 4 == 0;
}

gf2::LinearSystem regular_mod4_system(const gf2::SymbolicMatrix& ms) {
  const int n = ms.size();
  if (n < 5) throw std::invalid_argument("regular_mod4_system needs n >= 5");
  gf2::LinearSystem sys(ms.vars());
  if (n % 2 == 0) {
    sys.add(ms.entry_form(1, n / 2 + 1));
    sys.add(ms.entry_form(2, n / 2 + 1));
    for (int i = 2; i <= n / 2 - 2; ++i)
      sys.add(ms.entry_form(2, 2 * i + 1) ^ ms.entry_form(i, 2 * i + 1));
  } else {
    sys.add(ms.entry_form(1, (n + 1) / 2));
    for (int i = 1; i <= (n - 3) / 2; ++i) sys.add(ms.entry_form(2, 2 * i + 2));
    for (int i = 2; i <= (n - 3) / 2; ++i)
      sys.add(ms.entry_form(i + 1, 2 * i + 1) ^ ms.entry_form(2 * i - 1, 2 * i + 1) ^
              ms.entry_form(2 * i - 1, (n - 1) / 2 + i));
  }
  return sys;
}

gf2::LinearSystem regular_mod4_system(int n) {
  return regular_mod4_system(ms_symbolic_matrix(n));
}

std::optional<int> regular_degree(const DegreeVector& degs) {
  const auto& v = degs.values();
  for (int d : v)
    if (d != v.front()) return std::nullopt;
  return v.front();
}

bool is_regular_mod4(const DegreeVector& degs) {
  const auto& v = degs.values();
  for (int d : v)
    if ((d & 3) != (v.front() & 3)) return false;
  return true;
}

SearchReport search_regular_mod4(int n, std::size_t cap) {
  const auto t0 = std::chrono::steady_clock::now();
  const gf2::SymbolicMatrix ms = ms_symbolic_matrix(n);
  const gf2::AffineSpace space = gf2::eliminate(regular_mod4_system(ms));

  SearchReport rep;
  rep.n = n;
  rep.ms_dim = ms.vars();
  rep.bound = n % 2 == 0 ? (n + 23) / 24 : (n + 29) / 30;
  if (space.inconsistent) {
    // cannot happen: the system is homogeneous, zero always solves it
    rep.bound_ok = true;
    return rep;
  }
  rep.constrained_dim = space.dim();
  rep.bound_ok = rep.constrained_dim <= static_cast<std::size_t>(rep.bound);
  if (rep.constrained_dim > cap) {
    rep.capped = true;
    return rep;
  }

  rep.candidates = std::uint64_t{1} << rep.constrained_dim;
  gf2::enumerate_affine(space, cap, [&](const BitVec& bits) {
    const SteinhausMatrix m = ms.evaluate(bits);
    if (is_regular_mod4(degrees(m))) rep.survivors.push_back(m.sequence().to_string());
  });
  std::sort(rep.survivors.begin(), rep.survivors.end());

  rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
  return rep;
}

bool odd_regular_theorem_check(int n, std::size_t cap) {
  if (n % 2 == 0) throw std::invalid_argument("needs odd n");
  if (n < 5) {
    bool only_zero = true;
    enumerate_ms(n, cap, [&](const SteinhausMatrix& m) {
      if (regular_degree(degrees(m)) && !m.is_zero()) only_zero = false;
    });
    return only_zero;
  }
  const SearchReport rep = search_regular_mod4(n, cap);
  if (rep.capped) throw gf2::CapExceeded(rep.constrained_dim, cap);
  for (const std::string& s : rep.survivors) {
    const SteinhausMatrix m =
        SteinhausMatrix::from_sequence(BinarySequence::parse(s));
    if (regular_degree(degrees(m)) && !m.is_zero()) return false;
  }
  return true;
}

namespace {

// All size-n matrices whose interior (first and last vertex deleted) is the
// given size-(n-2) matrix: the two bits a(1,2) and a(1,n) are free, the rest
// of the first row telescopes from the interior's first row.
std::vector<SteinhausMatrix> interior_extensions(const SteinhausMatrix& inner) {
  const int n = inner.size() + 2;
  const BinarySequence b = inner.sequence();
  std::vector<SteinhausMatrix> out;
  out.reserve(4);
  for (int x = 0; x <= 1; ++x) {
    for (int y = 0; y <= 1; ++y) {
      BinarySequence seq(static_cast<std::size_t>(n - 1));
      seq.set_bit(0, x);
      int acc = x;
      for (int u = 1; u <= n - 3; ++u) {
        acc ^= b.bit(static_cast<std::size_t>(u - 1));
        seq.set_bit(static_cast<std::size_t>(u), acc);
      }
      seq.set_bit(static_cast<std::size_t>(n - 2), y);
      out.push_back(SteinhausMatrix::from_sequence(seq));
    }
  }
  return out;
}

std::optional<BinarySequence> regular_odd_extension(const SteinhausMatrix& inner) {
  for (const SteinhausMatrix& m : interior_extensions(inner)) {
    const auto deg = regular_degree(degrees(m));
    if (deg && *deg % 2 == 1) return m.sequence();
  }
  return std::nullopt;
}

}  // namespace

ConjectureVerdict verify_conjecture2_at(int n_vertices, std::size_t cap) {
  if (n_vertices < 4 || n_vertices % 2 != 0)
    throw std::invalid_argument("needs an even order >= 4");

  if (n_vertices <= 6) {
    for (const BinarySequence& s :
         brute_force_regular(n_vertices, DegreeParity::Odd))
      return {false, s};
    return {true, std::nullopt};
  }

  const SearchReport rep = search_regular_mod4(n_vertices - 2, cap);
  if (rep.capped) throw gf2::CapExceeded(rep.constrained_dim, cap);
  for (const std::string& s : rep.survivors) {
    const SteinhausMatrix inner =
        SteinhausMatrix::from_sequence(BinarySequence::parse(s));
    if (auto bad = regular_odd_extension(inner)) return {false, *bad};
  }
  return {true, std::nullopt};
}

namespace {

// One shard of the exhaustive scan. Sequences are encoded as integers with
// bit t = a_{t+1}; rows of the triangle fit in one word for n <= 30.
void brute_force_shard(int n, DegreeParity parity, std::uint64_t lo, std::uint64_t hi,
                       std::vector<std::uint64_t>& hits) {
  for (std::uint64_t v = lo; v < hi; ++v) {
    std::uint64_t row = v;
    int deg[32] = {0};
    int common = -1;
    bool ok = true;
    for (int i = 1; i <= n; ++i) {
      deg[i] += std::popcount(row);
      std::uint64_t bits = row;
      while (bits) {
        deg[i + 1 + std::countr_zero(bits)] += 1;
        bits &= bits - 1;
      }
      if (i == 1)
        common = deg[1];
      else if (deg[i] != common) {
        ok = false;
        break;
      }
      const int next_len = n - i - 1;
      row = next_len > 0 ? (row ^ (row >> 1)) & ((std::uint64_t{1} << next_len) - 1) : 0;
    }
    if (!ok) continue;
    if (parity == DegreeParity::Odd && common % 2 == 0) continue;
    if (parity == DegreeParity::Even && common % 2 == 1) continue;
    hits.push_back(v);
  }
}

}  // namespace

std::vector<BinarySequence> brute_force_regular(int n, DegreeParity parity,
                                                unsigned jobs, int hard_cap) {
  if (n < 1) throw std::invalid_argument("need n >= 1");
  if (n > hard_cap)
    throw gf2::CapExceeded(static_cast<std::size_t>(n - 1),
                           static_cast<std::size_t>(hard_cap - 1));
  const std::uint64_t total = std::uint64_t{1} << (n - 1);
  jobs = std::max(1u, jobs);
  if (jobs > 1 && total < 1024) jobs = 1;

  std::vector<std::vector<std::uint64_t>> hits(jobs);
  if (jobs == 1) {
    brute_force_shard(n, parity, 0, total, hits[0]);
  } else {
    std::vector<std::thread> pool;
    const std::uint64_t step = total / jobs + 1;
    for (unsigned t = 0; t < jobs; ++t) {
      const std::uint64_t lo = std::min(total, t * step);
      const std::uint64_t hi = std::min(total, (t + 1) * step);
      pool.emplace_back(brute_force_shard, n, parity, lo, hi, std::ref(hits[t]));
    }
    for (auto& th : pool) th.join();
  }

  std::vector<std::uint64_t> all;
  for (auto& h : hits) all.insert(all.end(), h.begin(), h.end());
  std::sort(all.begin(), all.end());

  std::vector<BinarySequence> out;
  out.reserve(all.size());
  for (std::uint64_t v : all) {
    BinarySequence s(static_cast<std::size_t>(n - 1));
    for (int t = 0; t < n - 1; ++t) s.set_bit(static_cast<std::size_t>(t), (v >> t) & 1);
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace steinhaus
