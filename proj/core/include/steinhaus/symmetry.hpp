#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "steinhaus/gf2.hpp"
#include "steinhaus/matrix.hpp"

namespace steinhaus {

inline constexpr std::size_t kDefaultEnumerationCap = 24;

// Symmetric about the anti-diagonal as well: a(i,j) = a(n-j+1, n-i+1).
bool is_doubly_symmetric(const SteinhausMatrix& m);

// Three independent tests that agree on every Steinhaus matrix of size >= 3:
// anti-diagonal symmetry; palindromic over-diagonal; vanishing of the
// anti-diagonal entries a(i, n-i+1) for i <= (n-1)/2. Throws for n < 3.
std::array<bool, 3> doubly_symmetric_characterizations(const SteinhausMatrix& m);

// Doubly-symmetric and every row of the upper triangle is a palindrome:
// a(i,j) = a(i, n-j+i+1).
bool is_multi_symmetric(const SteinhausMatrix& m);

// Three independent tests that agree on every Steinhaus matrix of size >= 3:
// the definition; palindromic first row, last column and over-diagonal;
// vanishing of a(i,n-i+1), a(n-2i+1,n-i+1) and a(i,2i) for i <= (n-1)/2.
std::array<bool, 3> multi_symmetric_characterizations(const SteinhausMatrix& m);

// Columns of the upper triangle of a multi-symmetric matrix are palindromes:
// a(i,j) = a(j-i,j). Requires is_multi_symmetric(m).
bool column_symmetry_holds(const SteinhausMatrix& m);

// Canonical free-entry positions of the multi-symmetric matrices of size n:
// even n: (1, n/2+1) then (2i, 4i+1); odd n: (2i+1, (n+1)/2 + i).
std::vector<std::pair<int, int>> ms_parameter_positions(int n);

// Dimension of the multi-symmetric solution space: ceil(n/6) for even n,
// ceil((n-3)/6) for odd n.
int ms_dimension(int n);

// 2^ms_dimension(n); throws std::overflow_error when the dimension
// exceeds 63.
std::uint64_t ms_count(int n);

// Solutions of the multi-symmetry constraints over the n-1 first-row bits.
gf2::AffineSpace ms_solution_space(int n);

// Multi-symmetric matrices as a symbolic matrix over the canonical
// parameters: evaluating at bits b yields the unique multi-symmetric matrix
// whose entries at ms_parameter_positions(n) equal b. Throws std::logic_error
// if the solution-space dimension or the coordinate map ever disagrees with
// the parametrization (never observed; a loud failure is wanted if it is).
gf2::SymbolicMatrix ms_symbolic_matrix(int n);

SteinhausMatrix ms_from_parameters(int n, const BitVec& bits);

// Visits every multi-symmetric matrix of size n exactly once, in Gray-code
// order of the canonical parameters. Throws gf2::CapExceeded if the
// dimension exceeds cap.
template <typename Fn>
void enumerate_ms(int n, std::size_t cap, Fn&& fn) {
  const gf2::SymbolicMatrix sym = ms_symbolic_matrix(n);
  gf2::AffineSpace free_space;
  free_space.particular = BitVec(sym.vars());
  for (std::size_t t = 0; t < sym.vars(); ++t)
    free_space.basis.push_back(BitVec::unit(sym.vars(), t));
  gf2::enumerate_affine(free_space, cap,
                        [&](const BitVec& bits) { fn(sym.evaluate(bits)); });
}

template <typename Fn>
void enumerate_ms(int n, Fn&& fn) {
  enumerate_ms(n, kDefaultEnumerationCap, std::forward<Fn>(fn));
}

}  // namespace steinhaus
