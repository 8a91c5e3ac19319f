#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "steinhaus/bitvec.hpp"
#include "steinhaus/matrix.hpp"

namespace steinhaus::gf2 {

// Affine function of m parameter bits: x -> (coeffs . x) ^ constant.
struct LinearForm {
  BitVec coeffs;
  bool constant = false;

  explicit LinearForm(std::size_t vars = 0) : coeffs(vars) {}

  static LinearForm variable(std::size_t vars, std::size_t index) {
    LinearForm f(vars);
    f.coeffs.set(index, 1);
    return f;
  }

  int evaluate(const BitVec& assignment) const {
    return coeffs.dot(assignment) ^ static_cast<int>(constant);
  }

  LinearForm& operator^=(const LinearForm& o) {
    coeffs ^= o.coeffs;
    constant ^= o.constant;
    return *this;
  }

  friend LinearForm operator^(LinearForm a, const LinearForm& b) {
    a ^= b;
    return a;
  }

  bool is_zero() const { return !constant && !coeffs.any(); }

  friend bool operator==(const LinearForm&, const LinearForm&) = default;
};

// Conjunction of affine constraints, each asserted equal to zero.
struct LinearSystem {
  std::size_t vars = 0;
  std::vector<LinearForm> forms;

  explicit LinearSystem(std::size_t vars_ = 0) : vars(vars_) {}
  void add(LinearForm f) { forms.push_back(std::move(f)); }
};

// Solution set of a LinearSystem: empty, or particular + span(basis).
// Solutions are exactly {particular ^ any xor-combination of basis vectors};
// the count is 2^dim() when nonempty.
struct AffineSpace {
  bool inconsistent = false;
  BitVec particular;
  std::vector<BitVec> basis;

  std::size_t dim() const { return basis.size(); }
  bool contains_solutions() const { return !inconsistent; }
};

struct CapExceeded : std::runtime_error {
  std::size_t dimension;
  std::size_t cap;
  CapExceeded(std::size_t d, std::size_t c)
      : std::runtime_error("enumeration dimension exceeds cap"), dimension(d), cap(c) {}
};

// Gaussian elimination with fixed lowest-index pivoting. Deterministic:
// identical systems produce bit-identical particular solutions and bases.
AffineSpace eliminate(const LinearSystem& sys);

// Visits all 2^dim assignments in Gray-code order starting from the
// particular solution, so consecutive assignments differ by exactly one
// basis vector. Throws CapExceeded if dim > cap; visits nothing when the
// space is inconsistent.
template <typename Fn>
void enumerate_affine(const AffineSpace& space, std::size_t cap, Fn&& fn) {
  if (space.inconsistent) return;
  const std::size_t d = space.dim();
  if (d > cap) throw CapExceeded(d, cap);
  BitVec point = space.particular;
  fn(const_cast<const BitVec&>(point));
  for (std::uint64_t t = 1; t < (std::uint64_t{1} << d); ++t) {
    point ^= space.basis[static_cast<std::size_t>(std::countr_zero(t))];
    fn(const_cast<const BitVec&>(point));
  }
}

// Inverse of a square bit matrix given as rows; nullopt when singular.
std::optional<std::vector<BitVec>> invert_square(const std::vector<BitVec>& rows);

// Steinhaus matrix whose first-row bits are affine forms of m free
// parameters. Any assignment of the parameters evaluates to a concrete
// matrix; any entry is available as a form via the binomial closed form.
class SymbolicMatrix {
 public:
  SymbolicMatrix(int n, std::vector<LinearForm> first_row_forms);

  // Unconstrained matrix: the parameters are the n-1 first-row bits.
  static SymbolicMatrix over_first_row(int n);

  int size() const { return n_; }
  std::size_t vars() const { return vars_; }

  // Form of the first-row bit a(1, j), 2 <= j <= n.
  const LinearForm& first_row_form(int j) const {
    return first_row_[static_cast<std::size_t>(j - 2)];
  }

  // Form of a(i,j) for any cell; diagonal is the zero form.
  LinearForm entry_form(int i, int j) const;

  SteinhausMatrix evaluate(const BitVec& assignment) const;

 private:
  int n_;
  std::size_t vars_;
  std::vector<LinearForm> first_row_;  // index j-2 holds a(1,j)
};

}  // namespace steinhaus::gf2
