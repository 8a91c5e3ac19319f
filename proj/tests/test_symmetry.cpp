#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <stdexcept>

#include "naive.hpp"
#include "steinhaus/symmetry.hpp"

using steinhaus::BinarySequence;
using steinhaus::BitVec;
using steinhaus::SteinhausMatrix;

namespace {

SteinhausMatrix from_text(const std::string& s) {
  return SteinhausMatrix::from_sequence(BinarySequence::parse(s));
}

SteinhausMatrix from_code(std::uint64_t v, int len) {
  BinarySequence s(len);
  for (int t = 0; t < len; ++t) s.set_bit(t, (v >> t) & 1);
  return SteinhausMatrix::from_sequence(s);
}

}  // namespace

TEST_CASE("doubly-symmetric predicate") {
  CHECK(steinhaus::is_doubly_symmetric(from_text("00000")));
  CHECK_FALSE(steinhaus::is_doubly_symmetric(from_text("1100")));
  CHECK(steinhaus::is_doubly_symmetric(from_text("01110")));
  CHECK(steinhaus::is_doubly_symmetric(from_text("")));
}

TEST_CASE("doubly-symmetric three-way characterization") {
  CHECK(steinhaus::doubly_symmetric_characterizations(from_text("0000")) ==
        std::array<bool, 3>{true, true, true});
  CHECK(steinhaus::doubly_symmetric_characterizations(from_text("1100")) ==
        std::array<bool, 3>{false, false, false});
  CHECK_THROWS_AS(steinhaus::doubly_symmetric_characterizations(from_text("1")),
                  std::domain_error);
}

TEST_CASE("multi-symmetric predicate") {
  CHECK(steinhaus::is_multi_symmetric(from_text("0000")));
  CHECK(steinhaus::is_multi_symmetric(from_text("01110")));
  CHECK_FALSE(steinhaus::is_multi_symmetric(from_text("1100")));
}

TEST_CASE("multi-symmetric three-way characterization") {
  CHECK(steinhaus::multi_symmetric_characterizations(from_text("000")) ==
        std::array<bool, 3>{true, true, true});
  CHECK(steinhaus::multi_symmetric_characterizations(from_text("01110")) ==
        std::array<bool, 3>{true, true, true});
  CHECK_THROWS_AS(steinhaus::multi_symmetric_characterizations(from_text("1")),
                  std::domain_error);
}

TEST_CASE("both characterizations agree componentwise, exhaustive n <= 14") {
  for (int n = 3; n <= 14; ++n) {
    const int len = n - 1;
    bool ok = true;
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << len) && ok; ++v) {
      const SteinhausMatrix m = from_code(v, len);
      const auto ds = steinhaus::doubly_symmetric_characterizations(m);
      const auto ms = steinhaus::multi_symmetric_characterizations(m);
      ok = ds[0] == ds[1] && ds[1] == ds[2] && ms[0] == ms[1] && ms[1] == ms[2] &&
           ds[0] == steinhaus::is_doubly_symmetric(m) &&
           ms[0] == steinhaus::is_multi_symmetric(m);
    }
    REQUIRE(ok);
  }
}

TEST_CASE("predicates agree with the naive oracle, exhaustive n <= 12") {
  for (int n = 1; n <= 12; ++n) {
    const int len = n - 1;
    bool ok = true;
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << len) && ok; ++v) {
      const SteinhausMatrix m = from_code(v, len);
      const naive::Mat ref = naive::build(v, len);
      ok = steinhaus::is_doubly_symmetric(m) == naive::doubly_symmetric(ref) &&
           steinhaus::is_multi_symmetric(m) == naive::multi_symmetric(ref);
    }
    REQUIRE(ok);
  }
}

TEST_CASE("all-even-degree graphs have doubly-symmetric matrices, exhaustive n <= 14") {
  for (int n = 1; n <= 14; ++n) {
    const int len = n - 1;
    bool ok = true;
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << len) && ok; ++v) {
      const naive::Mat ref = naive::build(v, len);
      if (naive::all_degrees_even(ref))
        ok = steinhaus::is_doubly_symmetric(from_code(v, len));
    }
    REQUIRE(ok);
  }
}

TEST_CASE("column palindromes on multi-symmetric matrices") {
  CHECK(steinhaus::column_symmetry_holds(from_text("00000")));
  CHECK(steinhaus::column_symmetry_holds(from_text("01110")));
  CHECK_THROWS_AS(steinhaus::column_symmetry_holds(from_text("1100")),
                  std::invalid_argument);
  for (int n = 1; n <= 40; ++n) {
    bool ok = true;
    steinhaus::enumerate_ms(n, [&](const SteinhausMatrix& m) {
      ok = ok && steinhaus::column_symmetry_holds(m);
    });
    REQUIRE(ok);
  }
}

TEST_CASE("canonical parameter positions") {
  using P = std::vector<std::pair<int, int>>;
  CHECK(steinhaus::ms_parameter_positions(6) == P{{1, 4}});
  CHECK(steinhaus::ms_parameter_positions(3) == P{});
  CHECK(steinhaus::ms_parameter_positions(1) == P{});
  CHECK(steinhaus::ms_parameter_positions(13) == P{{1, 7}, {3, 8}});
  CHECK(steinhaus::ms_parameter_positions(2) == P{{1, 2}});

  // positions stay inside the admissible window {2i+1..n-i} for n >= 4
  for (int n = 4; n <= 400; ++n) {
    for (const auto& [i, j] : steinhaus::ms_parameter_positions(n)) {
      REQUIRE(j >= 2 * i + 1);
      REQUIRE(j <= n - i);
    }
  }
}

TEST_CASE("counting formula") {
  CHECK(steinhaus::ms_count(6) == 2);
  CHECK(steinhaus::ms_count(3) == 1);
  CHECK(steinhaus::ms_count(1) == 1);
  CHECK(steinhaus::ms_dimension(24) == 4);
  CHECK(steinhaus::ms_dimension(25) == 4);
  CHECK_THROWS_AS(steinhaus::ms_count(1500), std::overflow_error);
}

TEST_CASE("counting formula equals the brute-force count, n <= 20") {
  for (int n = 1; n <= 20; ++n) {
    const int len = n - 1;
    std::uint64_t count = 0;
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << len); ++v)
      if (steinhaus::is_multi_symmetric(from_code(v, len))) ++count;
    REQUIRE(count == steinhaus::ms_count(n));
  }
}

TEST_CASE("parametrized construction hits the hand-checked size-6 matrices") {
  BitVec zero(1), one(1);
  one.set(0, 1);
  CHECK(steinhaus::ms_from_parameters(6, zero).is_zero());
  CHECK(steinhaus::ms_from_parameters(6, one) == from_text("01110"));
}

TEST_CASE("solution space of the multi-symmetry system, size 6") {
  const auto space = steinhaus::ms_solution_space(6);
  REQUIRE(space.contains_solutions());
  CHECK(space.dim() == 1);
  std::set<std::string> pts;
  steinhaus::gf2::enumerate_affine(space, 4,
                                   [&](const BitVec& p) { pts.insert(p.to_string()); });
  CHECK(pts == std::set<std::string>{"00000", "01110"});
}

TEST_CASE("enumeration yields each multi-symmetric matrix exactly once, n <= 40") {
  for (int n = 1; n <= 40; ++n) {
    std::set<SteinhausMatrix> seen;
    bool all_ms = true;
    steinhaus::enumerate_ms(n, [&](const SteinhausMatrix& m) {
      all_ms = all_ms && steinhaus::is_multi_symmetric(m);
      seen.insert(m);
    });
    REQUIRE(all_ms);
    REQUIRE(seen.size() == steinhaus::ms_count(n));
  }
}

TEST_CASE("enumeration equals the brute-force multi-symmetric set, n <= 20") {
  for (int n = 1; n <= 20; ++n) {
    std::set<SteinhausMatrix> brute;
    const int len = n - 1;
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << len); ++v) {
      SteinhausMatrix m = from_code(v, len);
      if (steinhaus::is_multi_symmetric(m)) brute.insert(std::move(m));
    }
    std::set<SteinhausMatrix> enumerated;
    steinhaus::enumerate_ms(n, [&](const SteinhausMatrix& m) { enumerated.insert(m); });
    REQUIRE(brute == enumerated);
  }
}

TEST_CASE("parameters read back from canonical positions invert the construction, n <= 40") {
  for (int n = 1; n <= 40; ++n) {
    const auto positions = steinhaus::ms_parameter_positions(n);
    bool ok = true;
    steinhaus::enumerate_ms(n, [&](const SteinhausMatrix& m) {
      BitVec bits(positions.size());
      for (std::size_t t = 0; t < positions.size(); ++t)
        bits.set(t, m.entry(positions[t].first, positions[t].second));
      ok = ok && steinhaus::ms_from_parameters(n, bits) == m;
    });
    REQUIRE(ok);
  }
}

TEST_CASE("enumeration cap") {
  CHECK_THROWS_AS(steinhaus::enumerate_ms(40, 2, [](const SteinhausMatrix&) {}),
                  steinhaus::gf2::CapExceeded);
}
