#pragma once

#include <vector>

namespace prerad {

using IntMatrix = std::vector<std::vector<long long>>;

// Diagonal form U * A * V = D of an integer matrix with unimodular U, V.
// Only the column transform is kept: for a relation matrix A whose rows span
// a lattice L in Z^n, the map x -> x * V sends L onto the diagonal lattice,
// so Z^n / L is the direct sum of Z / diagonal[j].
struct SmithForm {
  std::vector<long long> diagonal;  // length n; d[0] | d[1] | ... (0 = free)
  IntMatrix v;                      // n x n
  IntMatrix v_inverse;              // n x n
};

SmithForm smith_normal_form(IntMatrix a, std::size_t columns);

}  // namespace prerad
