#include "steinhaus/symmetry.hpp"

#include <stdexcept>

namespace steinhaus {

namespace {

bool antidiagonal_symmetric(const SteinhausMatrix& m) {
  const int n = m.size();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (m.entry(i, j) != m.entry(n - j + 1, n - i + 1)) return false;
  return true;
}

bool rows_palindromic(const SteinhausMatrix& m) {
  const int n = m.size();
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (m.entry(i, j) != m.entry(i, n - j + i + 1)) return false;
  return true;
}

bool overdiagonal_palindromic(const SteinhausMatrix& m) {
  const int n = m.size();
  for (int i = 1; i <= n - 1; ++i)
    if (m.entry(i, i + 1) != m.entry(n - i, n - i + 1)) return false;
  return true;
}

}  // namespace

bool is_doubly_symmetric(const SteinhausMatrix& m) { return antidiagonal_symmetric(m); }

std::array<bool, 3> doubly_symmetric_characterizations(const SteinhausMatrix& m) {
  const int n = m.size();
  if (n < 3) throw std::domain_error("characterization undefined for n < 3");
  bool vanishing = true;
  for (int i = 1; i <= (n - 1) / 2; ++i)
    if (m.entry(i, n - i + 1)) vanishing = false;
  return {antidiagonal_symmetric(m), overdiagonal_palindromic(m), vanishing};
}

bool is_multi_symmetric(const SteinhausMatrix& m) {
  return antidiagonal_symmetric(m) && rows_palindromic(m);
}

std::array<bool, 3> multi_symmetric_characterizations(const SteinhausMatrix& m) {
  const int n = m.size();
  if (n < 3) throw std::domain_error("characterization undefined for n < 3");

  bool boundary = overdiagonal_palindromic(m);
  for (int j = 2; j <= n && boundary; ++j)
    if (m.entry(1, j) != m.entry(1, n - j + 2)) boundary = false;
  for (int i = 1; i <= n - 1 && boundary; ++i)
    if (m.entry(i, n) != m.entry(n - i, n)) boundary = false;

  bool vanishing = true;
  for (int i = 1; i <= (n - 1) / 2 && vanishing; ++i) {
    if (m.entry(i, n - i + 1) || m.entry(n - 2 * i + 1, n - i + 1) ||
        m.entry(i, 2 * i))
      vanishing = false;
  }
  return {is_multi_symmetric(m), boundary, vanishing};
}

bool column_symmetry_holds(const SteinhausMatrix& m) {
  if (!is_multi_symmetric(m))
    throw std::invalid_argument("column_symmetry_holds needs a multi-symmetric matrix");
  const int n = m.size();
  for (int j = 2; j <= n; ++j)
    for (int i = 1; i < j; ++i)
      if (m.entry(i, j) != m.entry(j - i, j)) return false;
  return true;
}

std::vector<std::pair<int, int>> ms_parameter_positions(int n) {
  if (n < 1) throw std::invalid_argument("need n >= 1");
  std::vector<std::pair<int, int>> pos;
  if (n % 2 == 0) {
    pos.emplace_back(1, n / 2 + 1);
    const int count = ms_dimension(n);
    for (int i = 1; i <= count - 1; ++i) pos.emplace_back(2 * i, 4 * i + 1);
  } else {
    const int count = ms_dimension(n);
    for (int i = 0; i < count; ++i) pos.emplace_back(2 * i + 1, (n + 1) / 2 + i);
  }
  return pos;
}

int ms_dimension(int n) {
  if (n < 1) throw std::invalid_argument("need n >= 1");
  if (n % 2 == 0) return (n + 5) / 6;
  return n >= 3 ? (n - 3 + 5) / 6 : 0;
}

std::uint64_t ms_count(int n) {
  const int d = ms_dimension(n);
  if (d > 63) throw std::overflow_error("multi-symmetric count exceeds 2^63");
  return std::uint64_t{1} << d;
}

gf2::AffineSpace ms_solution_space(int n) {
  const gf2::SymbolicMatrix sym = gf2::SymbolicMatrix::over_first_row(n);
  gf2::LinearSystem sys(sym.vars());
  for (int i = 1; i <= (n - 1) / 2; ++i) {
    sys.add(sym.entry_form(i, n - i + 1));
    sys.add(sym.entry_form(n - 2 * i + 1, n - i + 1));
    sys.add(sym.entry_form(i, 2 * i));
  }
  return gf2::eliminate(sys);
}

gf2::SymbolicMatrix ms_symbolic_matrix(int n) {
  const gf2::AffineSpace space = ms_solution_space(n);
  const auto positions = ms_parameter_positions(n);
  const std::size_t p = positions.size();
  if (space.inconsistent || space.dim() != p)
    throw std::logic_error("multi-symmetric solution space has unexpected dimension");

  // Coordinate map: coord[t][u] = value of canonical entry t on basis
  // vector u. Solutions are x = sum_u c_u basis_u, their canonical entries
  // b = coord * c, so c = coord^-1 * b.
  const gf2::SymbolicMatrix free_sym = gf2::SymbolicMatrix::over_first_row(n);
  std::vector<BitVec> coord(p, BitVec(p));
  for (std::size_t t = 0; t < p; ++t) {
    const auto [i, j] = positions[t];
    const gf2::LinearForm form = free_sym.entry_form(i, j);
    for (std::size_t u = 0; u < p; ++u)
      coord[t].set(u, form.evaluate(space.basis[u]));
  }
  const auto inv = gf2::invert_square(coord);
  if (!inv) throw std::logic_error("canonical parameter map is singular");

  // first-row bit a(1,j) as a form over the canonical parameters b:
  // coefficient of b_t is sum_u inv[u][t] * basis[u][j-2].
  std::vector<BitVec> inv_col(p, BitVec(p));  // inv_col[t][u] = inv[u][t]
  for (std::size_t u = 0; u < p; ++u)
    (*inv)[u].for_each_set([&](std::size_t t) { inv_col[t].set(u, 1); });

  std::vector<gf2::LinearForm> forms;
  forms.reserve(static_cast<std::size_t>(n - 1));
  BitVec basis_col(p);
  for (int j = 2; j <= n; ++j) {
    for (std::size_t u = 0; u < p; ++u)
      basis_col.set(u, space.basis[u].get(static_cast<std::size_t>(j - 2)));
    gf2::LinearForm f(p);
    for (std::size_t t = 0; t < p; ++t) f.coeffs.set(t, inv_col[t].dot(basis_col));
    forms.push_back(std::move(f));
  }
  return gf2::SymbolicMatrix(n, std::move(forms));
}

SteinhausMatrix ms_from_parameters(int n, const BitVec& bits) {
  const gf2::SymbolicMatrix sym = ms_symbolic_matrix(n);
  if (bits.size() != sym.vars())
    throw std::invalid_argument("parameter count mismatch");
  return sym.evaluate(bits);
}

}  // namespace steinhaus
