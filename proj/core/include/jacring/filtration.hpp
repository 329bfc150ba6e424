#pragma once

#include <string>
#include <vector>

#include "jacring/bigraded.hpp"
#include "jacring/graded_quotient.hpp"

namespace jacring {

/// Double-filtration table of V = R_{eps=1,s=1}, realized as the degree-B
/// piece of R_{eps=1}. Rows i follow the eps-filtration, columns j the
/// s-filtration.
struct FiltrationTable {
  int p = 0, q = 0, delta = 0, stable_degree = 0;
  std::size_t dim_v = 0;
  bool stable = false;  // dim R_{eps=1}[B] == dim R_{eps=1}[B-1]
  std::vector<std::vector<std::size_t>> cumulative;  // A(i,j) = dim(F^eps_{<=i} ∩ F^s_{<=j}), i,j in 0..B
  std::vector<std::vector<std::size_t>> dims;        // [i][j], i in 0..delta, j in 0..2 delta

  std::size_t at(int i, int j) const;
  /// A(i,j) with indices clamped into the computed range (negative -> 0).
  std::size_t cumulative_at(int i, int j) const;
  std::vector<std::size_t> row_sums() const;
  std::vector<std::size_t> column_sums() const;

  struct Invariants {
    bool support = true;      // nonzero only for i <= j <= 2i
    bool lefschetz = true;    // dims(i,j) == dims(delta - j + i, 2 delta - j)
    bool exhausted = true;    // nothing outside 0..delta x 0..2delta
    std::vector<std::string> violations;
  };
  Invariants check_invariants() const;
};

/// stable_degree <= 0 selects 2 delta + 2.
FiltrationTable filtration_table(int p, int q, int stable_degree = 0);

struct BettiVector {
  std::vector<std::size_t> values;  // b_0, b_2, ..., b_{2 delta}
  std::size_t total = 0;
  bool nonnegative_differences = true;
  bool certified = false;
  std::string method;
};

/// Betti numbers from the eps-filtration of V (row sums of the table).
BettiVector betti_J(int p, int q, int stable_degree = 0);
BettiVector betti_from_table(const FiltrationTable& t);

/// Betti numbers from the saturated bigraded ring: b_{2a} = dim(R_{s=1})_a -
/// dim(R_{s=1})_{a-1}, reading (R_{s=1})_a at the last column b_max and
/// certifying that column b_max - 1 already agrees.
BettiVector betti_J_saturation(int p, int q, int b_max);

struct FlatnessSlot {
  int a = 0, b = 0;
  std::size_t ring_dim = 0;   // dim aR_b
  std::size_t image_dim = 0;  // dim(F^eps_{<=a} ∩ F^s_{<=b})
};
struct FlatnessReport {
  int p = 0, q = 0, a_max = 0, b_max = 0;
  std::vector<FlatnessSlot> slots;
  std::vector<FlatnessSlot> strict;     // ring_dim < image_dim
  std::vector<FlatnessSlot> anomalies;  // ring_dim > image_dim (cannot happen without s-torsion)
  bool certified = false;
  bool consistent() const { return strict.empty() && anomalies.empty(); }
};
/// Negative window entries select 2 delta + 2.
FlatnessReport flatness_probe(int p, int q, int a_max = -1, int b_max = -1);

}  // namespace jacring
