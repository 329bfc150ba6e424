#include "jacring/bigraded.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace jacring {

namespace {
constexpr int kNone = std::numeric_limits<int>::min();
}

BigradedQuotient::BigradedQuotient(IdealPresentation pres) : pres_(std::move(pres)) {
  if (pres_.homogeneity != Homogeneity::bigraded || !pres_.context->bigraded())
    throw std::invalid_argument("bigraded quotient needs a bigraded presentation");
  audit_homogeneity(pres_);
  w1_ = pres_.context->weight1();
  w2_ = pres_.context->weight2();
  int found = 0;
  for (std::size_t i = 0; i < w1_.size(); ++i) {
    if (w2_[i] > 0 && w1_[i] >= 0) continue;
    if (w1_[i] == 1 && w2_[i] == 0) {
      eps_ = i;
      ++found;
      continue;
    }
    throw std::invalid_argument("unsupported bidegree for variable " + pres_.context->name(i));
  }
  if (found != 1) throw std::invalid_argument("need exactly one variable of bidegree (1,0)");
  for (const auto& g : pres_.generators) {
    if (g.is_zero()) continue;
    gens_.push_back(primitive_part(g));
    gen_bideg_.push_back(*bidegree(g));
  }
}

const MonomialBasis& BigradedQuotient::basis(int a, int b) {
  auto key = std::make_pair(a, b);
  auto it = bases_.find(key);
  if (it == bases_.end()) it = bases_.emplace(key, monomials_of_bidegree(w1_, w2_, a, b)).first;
  return it->second;
}

DegreePiece& BigradedQuotient::piece(int a, int b) {
  auto key = std::make_pair(a, b);
  if (auto it = pieces_.find(key); it != pieces_.end()) return *it->second;
  auto pc = std::make_unique<DegreePiece>();
  pc->degree = b;
  pc->basis = basis(a, b);
  pc->ideal = SparseEchelon(static_cast<int>(pc->basis.size()));
  if (pc->basis.size() > 0) {
    if (a >= 1) {
      DegreePiece& prev = piece(a - 1, b);
      for (const auto& row : prev.ideal.rows()) {
        SparseRow mapped;
        mapped.reserve(row.size());
        for (const auto& [c, v] : row) {
          Monomial m = prev.basis.monomials[c];
          ++m[eps_];
          mapped.emplace_back(pc->basis.find(m), v);
        }
        pc->ideal.insert_free_leading(std::move(mapped));
      }
    }
    for (std::size_t k = 0; k < gens_.size(); ++k) {
      const auto [ga, gb] = gen_bideg_[k];
      const MonomialBasis& mult = basis(a - ga, b - gb);
      for (const auto& m : mult.monomials) {
        if (m[eps_] > 0) continue;
        pc->ideal.insert(multiple_row(m, gens_[k], pc->basis));
      }
    }
  }
  return *pieces_.emplace(key, std::move(pc)).first->second;
}

DegreePiece& BigradedQuotient::reduced_piece(int a, int b) {
  DegreePiece& pc = piece(a, b);
  if (!pc.ideal.fully_reduced()) pc.ideal.reduce_fully();
  return pc;
}

std::size_t BigradedQuotient::raw_dim(int a, int b) { return piece(a, b).quotient_dim(); }

int BigradedQuotient::max_free_w1(int b) {
  if (b < 0) return kNone;
  if (auto it = max_free_.find(b); it != max_free_.end()) return it->second;
  // eps-free monomials are graded by the (positive) second weight alone.
  std::vector<int> w2, w1;
  for (std::size_t i = 0; i < w1_.size(); ++i)
    if (i != eps_) w2.push_back(w2_[i]), w1.push_back(w1_[i]);
  int best = kNone;
  for (const auto& m : monomials_of_degree(w2, b).monomials) best = std::max(best, weighted_degree(m, w1));
  max_free_[b] = best;
  return best;
}

int BigradedQuotient::stable_bound(int b) {
  int best = std::max(0, max_free_w1(b));
  for (const auto& [ga, gb] : gen_bideg_) {
    int f = max_free_w1(b - gb);
    if (f != kNone) best = std::max(best, ga + f);
  }
  return best;
}

std::vector<int> BigradedQuotient::eps_shift_columns(int a, int b, int k) {
  const MonomialBasis& src = basis(a, b);
  const MonomialBasis& dst = basis(a + k, b);
  std::vector<int> cols;
  cols.reserve(src.size());
  for (Monomial m : src.monomials) {
    m[eps_] += k;
    cols.push_back(dst.find(m));
  }
  return cols;
}

BigradedQuotient::SlotDim BigradedQuotient::saturated_dim(int a, int b) {
  SlotDim out;
  out.raw = raw_dim(a, b);
  out.shift = std::max(0, stable_bound(b) - a);
  out.saturated = rank_modulo(piece(a + out.shift, b), eps_shift_columns(a, b, out.shift));
  const std::size_t next = rank_modulo(piece(a + out.shift + 1, b), eps_shift_columns(a, b, out.shift + 1));
  out.certified = next == out.saturated;
  return out;
}

SparseEchelon BigradedQuotient::saturated_ideal(int a, int b) {
  const MonomialBasis& src = basis(a, b);
  SparseEchelon out(static_cast<int>(src.size()));
  if (src.size() == 0) return out;
  const int k = std::max(0, stable_bound(b) - a);
  DegreePiece& target = reduced_piece(a + k, b);
  const auto cols = eps_shift_columns(a, b, k);
  const std::size_t free = target.quotient_dim();
  ExactMatrix m(free, src.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    RationalVector nf = target.ideal.normal_form_of_column(cols[c]);
    for (std::size_t r = 0; r < free; ++r) m.at(r, c) = nf[r];
  }
  if (free == 0) {
    for (std::size_t c = 0; c < src.size(); ++c) out.insert(SparseRow{{static_cast<int>(c), Integer(1)}});
    return out;
  }
  for (const auto& v : kernel_basis(m)) out.insert(integer_row(v));
  return out;
}

bool BigradedQuotient::saturation_idempotent_at(int a, int b) {
  SparseEchelon here = saturated_ideal(a, b);
  SparseEchelon above = saturated_ideal(a + 1, b);
  const auto cols = eps_shift_columns(a, b, 1);
  // The original ideal lies inside its saturation.
  for (const auto& row : piece(a, b).ideal.rows()) {
    SparseEchelon probe = here;
    if (probe.insert(row)) return false;
  }
  // eps maps the saturated piece into the next one.
  SparseEchelon probe = above;
  for (const auto& row : here.rows()) {
    SparseRow mapped;
    for (const auto& [c, v] : row) mapped.emplace_back(cols[c], v);
    std::sort(mapped.begin(), mapped.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    if (probe.insert(mapped)) return false;
  }
  // Preimage has the same dimension: rank of eps-images modulo `above`.
  SparseEchelon span = above;
  const std::size_t base = span.rank();
  for (int c : cols) span.insert(SparseRow{{c, Integer(1)}});
  const std::size_t preimage = basis(a, b).size() - (span.rank() - base);
  return preimage == here.rank();
}

SaturationTable saturate_and_dims(BigradedQuotient& q, int a_max, int b_max) {
  SaturationTable t;
  t.a_max = a_max;
  t.b_max = b_max;
  t.dims.assign(a_max + 1, std::vector<std::size_t>(b_max + 1, 0));
  t.raw.assign(a_max + 1, std::vector<std::size_t>(b_max + 1, 0));
  for (int b = 0; b <= b_max; ++b) t.stable_bounds.push_back(q.stable_bound(b));
  for (int a = 0; a <= a_max; ++a)
    for (int b = 0; b <= b_max; ++b) {
      auto s = q.saturated_dim(a, b);
      t.dims[a][b] = s.saturated;
      t.raw[a][b] = s.raw;
      t.certified = t.certified && s.certified;
    }
  return t;
}

}  // namespace jacring
