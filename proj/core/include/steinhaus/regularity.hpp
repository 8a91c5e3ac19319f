#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "steinhaus/gf2.hpp"
#include "steinhaus/matrix.hpp"
#include "steinhaus/report.hpp"
#include "steinhaus/sequence.hpp"
#include "steinhaus/symmetry.hpp"

namespace steinhaus {

// deg(V_i) is congruent to residue modulo modulus (2 or 4).
struct Mod4Prediction {
  int modulus;
  int residue;
};

// Vertex degrees modulo 4, together with the residues the degree congruences
// of multi-symmetric matrices predict. Predictions are filled only when the
// matrix is multi-symmetric; every vertex they cover must then match the
// direct residue.
struct Mod4Profile {
  std::vector<int> residues;                             // deg(V_i) mod 4, index i-1
  std::vector<std::optional<Mod4Prediction>> predicted;  // index i-1

  int residue(int i) const { return residues[static_cast<std::size_t>(i - 1)]; }

  const std::optional<Mod4Prediction>& prediction(int i) const {
    return predicted[static_cast<std::size_t>(i - 1)];
  }

  // True when every predicted residue matches the direct one.
  bool consistent() const;
};

Mod4Profile mod4_profile(const SteinhausMatrix& m);

// In a multi-symmetric matrix, deg(V_4) (even n >= 6) resp. deg(V_3)
// (odd n >= 3) is divisible by 4; vacuously true for smaller sizes, where
// the governing congruence does not exist. Requires is_multi_symmetric(m).
bool divisibility_remarks_check(const SteinhausMatrix& m);

// Necessary linear conditions, over the canonical multi-symmetric
// parameters, for the graph of a multi-symmetric matrix of size n >= 5 to be
// regular mod 4 (all such graphs have every degree divisible by 4, so each
// congruence right-hand side is forced to vanish). ms must come from
// ms_symbolic_matrix(n).
gf2::LinearSystem regular_mod4_system(const gf2::SymbolicMatrix& ms);
gf2::LinearSystem regular_mod4_system(int n);

// Solves the necessary system, enumerates its affine solution space, and
// keeps the candidates whose integer degrees really are all equal mod 4.
// When the solution-space dimension exceeds cap, the report comes back with
// capped = true and nothing enumerated. Requires n >= 5.
SearchReport search_regular_mod4(int n, std::size_t cap = kDefaultEnumerationCap);

// For odd n: the zero matrix is the only multi-symmetric matrix whose graph
// is regular (exact integer regularity). Checked by enumeration below size 5,
// by search above. Throws gf2::CapExceeded when the search is capped.
bool odd_regular_theorem_check(int n, std::size_t cap = kDefaultEnumerationCap);

struct ConjectureVerdict {
  bool verified = false;
  std::optional<BinarySequence> counterexample;
};

// Verifies at even order n_vertices >= 4 that no Steinhaus graph is regular
// of odd degree: any such graph would leave a regular-mod-4 multi-symmetric
// interior after deleting the first and last vertices, so every survivor of
// the interior search is lifted through all possible two-vertex extensions
// and each extension is tested for exact odd regularity. Orders 4 and 6 are
// settled by exhausting all 2^(n-1) sequences directly.
ConjectureVerdict verify_conjecture2_at(int n_vertices,
                                        std::size_t cap = kDefaultEnumerationCap);

enum class DegreeParity { Any, Odd, Even };

// All generating sequences of length n-1 whose graph is regular with the
// requested degree parity, by exhaustive enumeration of all 2^(n-1)
// sequences. Throws gf2::CapExceeded when n > hard_cap.
std::vector<BinarySequence> brute_force_regular(int n, DegreeParity parity,
                                                unsigned jobs = 1, int hard_cap = 30);

// Common degree when the graph is regular, nullopt otherwise.
std::optional<int> regular_degree(const DegreeVector& degs);

bool is_regular_mod4(const DegreeVector& degs);

}  // namespace steinhaus
