#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "jacring/cache.hpp"
#include "jacring/matrix.hpp"
#include "jacring/presentation.hpp"

namespace jacring {

/// Monomials of a given (bi)degree, ordered reverse-lex descending
/// (index 0 is the largest).
struct MonomialBasis {
  std::vector<Monomial> monomials;
  std::map<Monomial, int> index;

  std::size_t size() const { return monomials.size(); }
  int find(const Monomial& m) const;
};

/// Degree-d monomials for positive weights.
MonomialBasis monomials_of_degree(const std::vector<int>& weights, int d);
/// Monomials of bidegree (a, b); weights may be zero in one grading but never in both.
MonomialBasis monomials_of_bidegree(const std::vector<int>& w1, const std::vector<int>& w2, int a, int b);
/// Reverse-lex comparison: the last nonzero entry of a - b is negative.
bool revlex_greater(const Monomial& a, const Monomial& b);

/// Row of m * g in the column coordinates of `basis` (g primitive integer).
SparseRow multiple_row(const Monomial& m, const SparsePoly& g, const MonomialBasis& basis);

struct DegreePiece {
  int degree = 0;
  MonomialBasis basis;
  SparseEchelon ideal;
  std::size_t quotient_dim() const { return basis.size() - ideal.rank(); }
};

struct GradedQuotientOptions {
  bool eliminate_linear = true;
  std::shared_ptr<DiskCache> cache = default_cache();
};

/// Degreewise quotient of a graded presentation. Pieces are built
/// incrementally: I_d = x * I_{d - w(x)} + span{m g : x does not divide m},
/// with x the first variable of smallest weight. Not thread-safe; use one
/// instance per thread.
class GradedQuotient {
 public:
  explicit GradedQuotient(IdealPresentation pres, GradedQuotientOptions opts = {});

  const IdealPresentation& presentation() const { return original_; }
  const IdealPresentation& working() const { return working_; }
  const std::string& hash() const { return hash_; }
  std::size_t eliminated_count() const { return eliminated_; }

  std::size_t dim(int d);
  std::vector<std::size_t> hilbert_function(int up_to);

  /// The echelon piece at degree d (built on demand, kept).
  DegreePiece& piece(int d);
  /// Same as piece(d) but with the echelon fully reduced, for normal forms.
  DegreePiece& reduced_piece(int d);
  const MonomialBasis& basis(int d);

  struct ArtinianCertificate {
    bool certified = false;
    int top_degree = -1;     // last degree with a nonzero piece
    int checked_up_to = -1;  // zero run verified through this degree
    std::vector<std::size_t> hilbert;
  };
  /// Scans degrees until max-weight consecutive zero pieces, or gives up at ceiling.
  ArtinianCertificate artinian(int ceiling);

 private:
  IdealPresentation original_;
  IdealPresentation working_;
  std::vector<SparsePoly> primitive_gens_;
  std::vector<int> gen_degree_;
  std::size_t shift_var_ = 0;
  std::size_t eliminated_ = 0;
  std::string hash_;
  GradedQuotientOptions opts_;
  std::map<int, std::unique_ptr<DegreePiece>> pieces_;
  std::map<int, MonomialBasis> bases_;
};

/// Exact Hilbert function of a graded quotient up to the given degree.
std::vector<std::size_t> hilbert_function(GradedQuotient& q, int up_to);

/// dim Gr^i_m per i, and the per-degree table [degree][i].
struct GrMResult {
  std::vector<std::size_t> gr;
  std::vector<std::vector<std::size_t>> by_degree;
  std::size_t total = 0;
};
GrMResult gr_m_filtration(GradedQuotient& q, int top_degree);

/// Rank of the span of the given columns modulo the piece's ideal.
std::size_t rank_modulo(const DegreePiece& piece, const std::vector<int>& columns);

/// Primitive integer row with the same span as a rational vector.
SparseRow integer_row(const RationalVector& v);

}  // namespace jacring
