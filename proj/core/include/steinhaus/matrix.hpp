#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "steinhaus/bitvec.hpp"
#include "steinhaus/sequence.hpp"

namespace steinhaus {

// C(top, k) mod 2 by bit containment: odd iff every bit of k is set in top.
inline bool binomial_odd(unsigned top, unsigned k) { return (k & ~top) == 0; }

// Symmetric n x n matrix over GF(2) with zero diagonal whose upper triangle
// obeys a(i,j) = a(i-1,j-1) + a(i-1,j). Determined by its first row; only the
// upper triangle is stored, one bit-packed vector per row.
//
// The public API is 1-based to match the usual notation; storage is 0-based.
class SteinhausMatrix {
 public:
  static SteinhausMatrix from_sequence(const BinarySequence& seq);

  int size() const { return n_; }

  // a(i,j) with a(i,i) = 0 and a(i,j) = a(j,i). Throws std::out_of_range.
  int entry(int i, int j) const;

  // Upper part of row i: bit t is a(i, i+1+t). 1 <= i <= n.
  const BitVec& row_bits(int i) const { return rows_[static_cast<std::size_t>(i - 1)]; }

  BinarySequence sequence() const {
    return n_ > 1 ? BinarySequence(rows_[0]) : BinarySequence();
  }

  bool is_zero() const;

  friend bool operator==(const SteinhausMatrix&, const SteinhausMatrix&) = default;
  friend bool operator<(const SteinhausMatrix& a, const SteinhausMatrix& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    return a.rows_ < b.rows_;
  }

 private:
  SteinhausMatrix(int n, std::vector<BitVec> rows) : n_(n), rows_(std::move(rows)) {}

  int n_ = 1;
  std::vector<BitVec> rows_;  // rows_[i] has n-1-i bits
};

// Integer vertex degrees; deg(i) is the degree of the i-th vertex (1-based).
class DegreeVector {
 public:
  explicit DegreeVector(std::vector<int> degs) : d_(std::move(degs)) {}

  int size() const { return static_cast<int>(d_.size()); }
  int deg(int i) const { return d_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& values() const { return d_; }

 private:
  std::vector<int> d_;
};

enum class ClosedForm { FirstRow, LastColumn, OverDiagonal };

// a(i,j) for 1 <= i < j <= n without walking the triangle: a binomial-weighted
// sum (mod 2, coefficients by bit containment) over the first row, the last
// column, or the over-diagonal.
int entry_closed_form(const SteinhausMatrix& m, int i, int j, ClosedForm form);

DegreeVector degrees(const SteinhausMatrix& m);

// For 1 <= i <= n/2 returns three bits that coincide on every Steinhaus
// matrix: the anti-diagonal entry a(i, n-i+1) and the two binomial-weighted
// degree sums that express it.
std::array<int, 3> antidiagonal_degree_identity(const SteinhausMatrix& m, int i);

// Necessary condition for a labelled degree vector to belong to a Steinhaus
// graph: both degree sums above agree for every admissible i.
bool degree_consistency(const DegreeVector& degs);

// The size-(n-3) Steinhaus matrix embedded in the triangle of m:
// result(i,j) = m(i+1, j+2). Requires n >= 4.
SteinhausMatrix truncate_T(const SteinhausMatrix& m);

// The unique size-n matrix m with truncate_T(m) = inner and the prescribed
// entries a(1,2) = a12, a(1,j0) = a1j0, a(1,n) = a1n, where n = inner.size()+3
// and 3 <= j0 <= n-1.
SteinhausMatrix extend_T(const SteinhausMatrix& inner, int a12, int j0, int a1j0,
                         int a1n);

enum class VertexEnd { First, Last };

// Removes the first (or last) vertex; the result is again a Steinhaus matrix.
// Requires n >= 2.
SteinhausMatrix delete_vertex(const SteinhausMatrix& m, VertexEnd which);

}  // namespace steinhaus
