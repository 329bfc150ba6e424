#pragma once

#include <vector>

#include "jacring/rational.hpp"

namespace jacring {

/// Coefficient k counts Young diagrams of size k whose boxes lie strictly
/// under the hypotenuse of the triangle with legs q (along x) and p (along y):
/// row r (from 1) holds at most floor(q (p - r) / p) boxes.
std::vector<std::size_t> dyck_poly(int p, int q);

/// (1/(p+q)) binom(p+q, p); divisibility is asserted.
Integer catalan_count(int p, int q);

/// Coefficients of prod_{i=1}^{p-1} (1 - T^{q+i}) / (1 - T^{i+1}) up to T^up_to.
std::vector<Integer> closed_hilbert_series(int p, int q, int up_to);

}  // namespace jacring
