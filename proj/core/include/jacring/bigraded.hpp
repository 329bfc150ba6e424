#pragma once

#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "jacring/graded_quotient.hpp"

namespace jacring {

/// Slotwise quotient of a bigraded presentation that has one variable of
/// bidegree (1,0) (called eps below) and every other variable of positive
/// second weight. Provides the eps-saturated dimensions.
class BigradedQuotient {
 public:
  explicit BigradedQuotient(IdealPresentation pres);

  const IdealPresentation& presentation() const { return pres_; }
  std::size_t eps_index() const { return eps_; }

  const MonomialBasis& basis(int a, int b);
  DegreePiece& piece(int a, int b);
  DegreePiece& reduced_piece(int a, int b);
  std::size_t raw_dim(int a, int b);

  /// Smallest a* such that eps: (a,b) -> (a+1,b) is bijective on the
  /// unsaturated quotient for every a >= a*.
  int stable_bound(int b);

  struct SlotDim {
    std::size_t raw = 0;        // dim of the unsaturated piece
    std::size_t saturated = 0;  // dim after removing eps-power torsion
    int shift = 0;              // K used for ker eps^K
    bool certified = false;     // ker eps^K == ker eps^{K+1} verified
  };
  SlotDim saturated_dim(int a, int b);

  /// Saturated ideal piece at (a,b) as an echelon in basis(a,b) coordinates.
  SparseEchelon saturated_ideal(int a, int b);

  /// Saturating again changes nothing at (a,b): the preimage under eps of the
  /// saturated piece at (a+1,b) equals the saturated piece at (a,b).
  bool saturation_idempotent_at(int a, int b);

 private:
  int max_free_w1(int b);
  std::vector<int> eps_shift_columns(int a, int b, int k);

  IdealPresentation pres_;
  std::vector<int> w1_, w2_;
  std::size_t eps_ = 0;
  std::vector<SparsePoly> gens_;
  std::vector<std::pair<int, int>> gen_bideg_;
  std::map<std::pair<int, int>, MonomialBasis> bases_;
  std::map<std::pair<int, int>, std::unique_ptr<DegreePiece>> pieces_;
  std::map<int, int> max_free_;
};

struct SaturationTable {
  int a_max = 0, b_max = 0;
  std::vector<std::vector<std::size_t>> dims;  // [a][b]
  std::vector<std::vector<std::size_t>> raw;   // [a][b]
  std::vector<int> stable_bounds;              // a*(b) per b
  bool certified = true;
};

/// dim aR_b for 0 <= a <= a_max, 0 <= b <= b_max.
SaturationTable saturate_and_dims(BigradedQuotient& q, int a_max, int b_max);

}  // namespace jacring
