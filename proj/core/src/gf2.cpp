#include "steinhaus/gf2.hpp"

#include <utility>

namespace steinhaus::gf2 {

AffineSpace eliminate(const LinearSystem& sys) {
  const std::size_t m = sys.vars;
  std::vector<LinearForm> rows;
  rows.reserve(sys.forms.size());
  for (const LinearForm& f : sys.forms)
    if (!f.is_zero()) rows.push_back(f);

  std::vector<std::size_t> pivot_col;
  std::vector<std::size_t> pivot_row;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m && rank < rows.size(); ++col) {
    std::size_t r = rank;
    while (r < rows.size() && !rows[r].coeffs.get(col)) ++r;
    if (r == rows.size()) continue;
    std::swap(rows[rank], rows[r]);
    for (std::size_t r2 = 0; r2 < rows.size(); ++r2) {
      if (r2 != rank && rows[r2].coeffs.get(col)) rows[r2] ^= rows[rank];
    }
    pivot_col.push_back(col);
    pivot_row.push_back(rank);
    ++rank;
  }

  AffineSpace space;
  space.particular = BitVec(m);
  for (std::size_t r = rank; r < rows.size(); ++r) {
    if (rows[r].constant) {
      space.inconsistent = true;
      return space;
    }
  }

  for (std::size_t p = 0; p < rank; ++p)
    space.particular.set(pivot_col[p], rows[pivot_row[p]].constant ? 1 : 0);

  std::vector<bool> is_pivot(m, false);
  for (std::size_t c : pivot_col) is_pivot[c] = true;
  for (std::size_t f = 0; f < m; ++f) {
    if (is_pivot[f]) continue;
    BitVec v(m);
    v.set(f, 1);
    for (std::size_t p = 0; p < rank; ++p)
      v.set(pivot_col[p], rows[pivot_row[p]].coeffs.get(f));
    space.basis.push_back(std::move(v));
  }
  return space;
}

std::optional<std::vector<BitVec>> invert_square(const std::vector<BitVec>& rows) {
  const std::size_t p = rows.size();
  std::vector<BitVec> a = rows;
  std::vector<BitVec> inv;
  inv.reserve(p);
  for (std::size_t r = 0; r < p; ++r) inv.push_back(BitVec::unit(p, r));

  for (std::size_t col = 0; col < p; ++col) {
    std::size_t r = col;
    while (r < p && !a[r].get(col)) ++r;
    if (r == p) return std::nullopt;
    std::swap(a[col], a[r]);
    std::swap(inv[col], inv[r]);
    for (std::size_t r2 = 0; r2 < p; ++r2) {
      if (r2 != col && a[r2].get(col)) {
        a[r2] ^= a[col];
        inv[r2] ^= inv[col];
      }
    }
  }
  return inv;
}

SymbolicMatrix::SymbolicMatrix(int n, std::vector<LinearForm> first_row_forms)
    : n_(n),
      vars_(first_row_forms.empty() ? 0 : first_row_forms.front().coeffs.size()),
      first_row_(std::move(first_row_forms)) {
  if (static_cast<int>(first_row_.size()) != n_ - 1)
    throw std::invalid_argument("need one form per first-row bit");
}

SymbolicMatrix SymbolicMatrix::over_first_row(int n) {
  const std::size_t m = static_cast<std::size_t>(n - 1);
  std::vector<LinearForm> forms;
  forms.reserve(m);
  for (std::size_t t = 0; t < m; ++t) forms.push_back(LinearForm::variable(m, t));
  return SymbolicMatrix(n, std::move(forms));
}

LinearForm SymbolicMatrix::entry_form(int i, int j) const {
  if (i < 1 || j < 1 || i > n_ || j > n_)
    throw std::out_of_range("matrix index out of range");
  if (i == j) return LinearForm(vars_);
  if (i > j) std::swap(i, j);
  // a(i,j) = sum of C(i-1,k) a(1,j-k) over k contained in i-1
  LinearForm acc(vars_);
  const unsigned top = static_cast<unsigned>(i - 1);
  for (unsigned k = top;; k = (k - 1) & top) {
    acc ^= first_row_form(j - static_cast<int>(k));
    if (k == 0) break;
  }
  return acc;
}

SteinhausMatrix SymbolicMatrix::evaluate(const BitVec& assignment) const {
  BinarySequence seq(static_cast<std::size_t>(n_ - 1));
  for (int j = 2; j <= n_; ++j)
    seq.set_bit(static_cast<std::size_t>(j - 2), first_row_form(j).evaluate(assignment));
  return SteinhausMatrix::from_sequence(seq);
}

}  // namespace steinhaus::gf2
