#pragma once

#include <memory>
#include <vector>

namespace jacring {

class NumericalSemigroup {
 public:
  /// Throws std::invalid_argument unless the generators are positive with gcd 1.
  explicit NumericalSemigroup(std::vector<int> generators);

  const std::vector<int>& generators() const { return generators_; }
  const std::vector<int>& gaps() const { return gaps_; }
  int conductor() const { return conductor_; }
  int delta() const { return static_cast<int>(gaps_.size()); }
  int multiplicity() const { return generators_.front(); }
  bool contains(int n) const;
  /// No generator is a non-negative combination of the others.
  bool is_minimally_generated() const;

  bool operator==(const NumericalSemigroup& o) const { return generators_ == o.generators_; }

 private:
  std::vector<int> generators_;
  std::vector<int> gaps_;
  std::vector<bool> member_;  // membership below the conductor
  int conductor_ = 0;
};

NumericalSemigroup gaps(std::vector<int> generators);

/// Gamma together with a subset of its gaps, closed under adding generators.
struct GammaModule {
  std::shared_ptr<const NumericalSemigroup> base;
  std::vector<int> adjoined_gaps;  // sorted

  bool contains(int n) const;
  bool operator==(const GammaModule& o) const {
    return *base == *o.base && adjoined_gaps == o.adjoined_gaps;
  }
};

bool is_gamma_closed(const NumericalSemigroup& g, const std::vector<int>& adjoined);

/// All 0-normalized modules, sorted by (size, lexicographic gap list).
std::vector<GammaModule> enumerate_modules(const std::shared_ptr<const NumericalSemigroup>& g);

/// sigma = module - shift as a subset of Z.
struct ShiftedModule {
  GammaModule module;
  int shift = 0;

  bool contains(int n) const { return module.contains(n + shift); }
  int min_element() const { return -shift; }
};
using BalancedModule = ShiftedModule;

/// #(Gamma - sigma∩Gamma) - #(sigma - sigma∩Gamma), from explicit sets.
int balance_defect(const ShiftedModule& sigma);

/// The unique shift with zero defect; found by search, cross-checked by a count.
BalancedModule balance(const GammaModule& delta);
/// Inverse of balance: forget the shift.
GammaModule normalize(const ShiftedModule& sigma);

/// Minimal element of sigma in each residue class; entry r is congruent to r mod n.
std::vector<int> residue_basis(const ShiftedModule& sigma, int n);
std::vector<int> p_basis(const ShiftedModule& sigma, int p);
std::vector<int> q_basis(const ShiftedModule& sigma, int q);

/// Modules sigma with balance_defect(sigma) == p - i, for Gamma = <p,q>.
std::vector<ShiftedModule> enumerate_sigma_i(int p, int q, int i);

struct FlagTuple {
  std::vector<int> d;  // d[0] is d_1
  bool operator==(const FlagTuple& o) const = default;
  auto operator<=>(const FlagTuple& o) const = default;
};

/// Residue basis of the i-th lattice in the chain attached to d:
/// {d_1..d_i, d_{i+1}+p..d_p+p}, indexed by position in d.
std::vector<int> chain_basis(const FlagTuple& d, int p, int i);
/// True iff the p residues form the p-basis of a <p,q>-module (closed under +q).
bool basis_closed_under(const std::vector<int>& basis, int p, int q);
ShiftedModule module_from_basis(const std::shared_ptr<const NumericalSemigroup>& g,
                                const std::vector<int>& basis, int p);
bool is_flag_tuple(const FlagTuple& d, int p, int q);

struct TildeSigmaSearch {
  std::vector<FlagTuple> tuples;  // sorted
  int window_lo = 0, window_hi = 0;
};

/// Exhaustive search of [-pq, pq + conductor]^p; throws if a solution reaches
/// the window boundary.
TildeSigmaSearch enumerate_tilde_sigma(int p, int q);

}  // namespace jacring
