#include "steinhaus/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace steinhaus {

SteinhausMatrix SteinhausMatrix::from_sequence(const BinarySequence& seq) {
  const int n = static_cast<int>(seq.size()) + 1;
  std::vector<BitVec> rows;
  rows.reserve(static_cast<std::size_t>(n));
  BitVec row = seq.bits();
  for (int i = 1; i < n; ++i) {
    BitVec next = row.adjacent_xor();
    rows.push_back(std::move(row));
    row = std::move(next);
  }
  rows.emplace_back();  // row n has no upper entries
  return SteinhausMatrix(n, std::move(rows));
}

int SteinhausMatrix::entry(int i, int j) const {
  if (i < 1 || j < 1 || i > n_ || j > n_)
    throw std::out_of_range("matrix index out of range");
  if (i == j) return 0;
  if (i > j) std::swap(i, j);
  return rows_[static_cast<std::size_t>(i - 1)].get(static_cast<std::size_t>(j - i - 1));
}

bool SteinhausMatrix::is_zero() const {
  return n_ == 1 || !rows_[0].any();
}

int entry_closed_form(const SteinhausMatrix& m, int i, int j, ClosedForm form) {
  const int n = m.size();
  if (i < 1 || j > n || i >= j) throw std::out_of_range("need 1 <= i < j <= n");
  int acc = 0;
  switch (form) {
    case ClosedForm::FirstRow: {
      // sum of C(i-1,k) a(1,j-k) for 0 <= k <= i-1
      const unsigned top = static_cast<unsigned>(i - 1);
      for (unsigned k = top;; k = (k - 1) & top) {
        acc ^= m.entry(1, j - static_cast<int>(k));
        if (k == 0) break;
      }
      break;
    }
    case ClosedForm::LastColumn: {
      // sum of C(n-j,k) a(i+k,n)
      const unsigned top = static_cast<unsigned>(n - j);
      for (unsigned k = top;; k = (k - 1) & top) {
        acc ^= m.entry(i + static_cast<int>(k), n);
        if (k == 0) break;
      }
      break;
    }
    case ClosedForm::OverDiagonal: {
      // sum of C(j-i-1,k) a(i+k,i+k+1)
      const unsigned top = static_cast<unsigned>(j - i - 1);
      for (unsigned k = top;; k = (k - 1) & top) {
        acc ^= m.entry(i + static_cast<int>(k), i + static_cast<int>(k) + 1);
        if (k == 0) break;
      }
      break;
    }
  }
  return acc;
}

DegreeVector degrees(const SteinhausMatrix& m) {
  const int n = m.size();
  std::vector<int> d(static_cast<std::size_t>(n), 0);
  for (int i = 1; i <= n; ++i) {
    const BitVec& row = m.row_bits(i);
    d[static_cast<std::size_t>(i - 1)] += static_cast<int>(row.popcount());
    row.for_each_set([&](std::size_t t) { ++d[static_cast<std::size_t>(i) + t]; });
  }
  return DegreeVector(std::move(d));
}

std::array<int, 3> antidiagonal_degree_identity(const SteinhausMatrix& m, int i) {
  const int n = m.size();
  if (n < 2 || i < 1 || i > n / 2) throw std::out_of_range("need 1 <= i <= n/2");
  const DegreeVector d = degrees(m);
  const unsigned top = static_cast<unsigned>(i - 1);
  int lhs = 0, rhs = 0;
  for (unsigned k = top;; k = (k - 1) & top) {
    lhs ^= d.deg(i + static_cast<int>(k) + 1) & 1;
    rhs ^= d.deg(n - i - static_cast<int>(k)) & 1;
    if (k == 0) break;
  }
  return {m.entry(i, n - i + 1), lhs, rhs};
}

bool degree_consistency(const DegreeVector& degs) {
  const int n = degs.size();
  for (int i = 1; i <= n / 2; ++i) {
    const unsigned top = static_cast<unsigned>(i - 1);
    int lhs = 0, rhs = 0;
    for (unsigned k = top;; k = (k - 1) & top) {
      lhs ^= degs.deg(i + static_cast<int>(k) + 1) & 1;
      rhs ^= degs.deg(n - i - static_cast<int>(k)) & 1;
      if (k == 0) break;
    }
    if (lhs != rhs) return false;
  }
  return true;
}

SteinhausMatrix truncate_T(const SteinhausMatrix& m) {
  const int n = m.size();
  if (n < 4) throw std::invalid_argument("truncate_T needs size >= 4");
  BinarySequence inner(static_cast<std::size_t>(n - 4));
  for (int k = 0; k < n - 4; ++k) inner.set_bit(static_cast<std::size_t>(k), m.entry(2, 4 + k));
  return SteinhausMatrix::from_sequence(inner);
}

SteinhausMatrix extend_T(const SteinhausMatrix& inner, int a12, int j0, int a1j0,
                         int a1n) {
  const int n = inner.size() + 3;
  if (j0 < 3 || j0 > n - 1) throw std::invalid_argument("need 3 <= j0 <= n-1");
  // First row recovered by telescoping a(1,j) + a(1,j+1) = inner(1,j-1):
  // walking away from j0 accumulates inner's first row.
  BinarySequence seq(static_cast<std::size_t>(n - 1));
  seq.set_bit(0, a12 & 1);
  seq.set_bit(static_cast<std::size_t>(n - 2), a1n & 1);
  int acc = a1j0 & 1;
  seq.set_bit(static_cast<std::size_t>(j0 - 2), acc);
  for (int j = j0 - 1; j >= 3; --j) {
    acc ^= inner.entry(1, j - 1);
    seq.set_bit(static_cast<std::size_t>(j - 2), acc);
  }
  acc = a1j0 & 1;
  for (int j = j0 + 1; j <= n - 1; ++j) {
    acc ^= inner.entry(1, j - 2);
    seq.set_bit(static_cast<std::size_t>(j - 2), acc);
  }
  return SteinhausMatrix::from_sequence(seq);
}

SteinhausMatrix delete_vertex(const SteinhausMatrix& m, VertexEnd which) {
  const int n = m.size();
  if (n < 2) throw std::invalid_argument("cannot delete from a 1x1 matrix");
  if (which == VertexEnd::Last) {
    BinarySequence seq(static_cast<std::size_t>(n - 2));
    for (int k = 0; k < n - 2; ++k) seq.set_bit(static_cast<std::size_t>(k), m.entry(1, k + 2));
    return SteinhausMatrix::from_sequence(seq);
  }
  BinarySequence seq(static_cast<std::size_t>(n - 2));
  for (int k = 0; k < n - 2; ++k) seq.set_bit(static_cast<std::size_t>(k), m.entry(2, k + 3));
  return SteinhausMatrix::from_sequence(seq);
}

}  // namespace steinhaus
