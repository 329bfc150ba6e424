#include "jacring/matrix.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace jacring {

namespace {

using IntRow = std::vector<Integer>;

void make_primitive(IntRow& row) {
  Integer g = 0;
  for (const auto& x : row) {
    if (x != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) return;
  }
  if (g > 1)
    for (auto& x : row)
      if (x != 0) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

IntRow to_integer_row(const ExactMatrix& m, std::size_t r) {
  Integer den = 1;
  for (std::size_t c = 0; c < m.cols(); ++c)
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), m.at(r, c).get_den_mpz_t());
  IntRow out(m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c) {
    const Rational& x = m.at(r, c);
    if (x == 0) continue;
    mpz_divexact(out[c].get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
    out[c] *= x.get_num();
  }
  return out;
}

// Fraction-free elimination; pivot = smallest bit-size entry, ties to lowest row.
// With jordan set, pivot columns are also cleared above each pivot.
std::vector<std::size_t> eliminate(std::vector<IntRow>& rows, std::size_t cols, bool jordan) {
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  Integer g, a, b;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::optional<std::size_t> best;
    for (std::size_t r = rank; r < rows.size(); ++r) {
      if (rows[r][c] == 0) continue;
      if (!best || bit_size(rows[r][c]) < bit_size(rows[*best][c])) best = r;
    }
    if (!best) continue;
    std::swap(rows[rank], rows[*best]);
    const IntRow& piv = rows[rank];
    for (std::size_t r = jordan ? 0 : rank + 1; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      mpz_gcd(g.get_mpz_t(), piv[c].get_mpz_t(), rows[r][c].get_mpz_t());
      mpz_divexact(a.get_mpz_t(), piv[c].get_mpz_t(), g.get_mpz_t());
      mpz_divexact(b.get_mpz_t(), rows[r][c].get_mpz_t(), g.get_mpz_t());
      IntRow& row = rows[r];
      for (std::size_t k = 0; k < cols; ++k) {
        if (piv[k] == 0) {
          if (row[k] != 0) row[k] *= a;
          continue;
        }
        row[k] = a * row[k] - b * piv[k];
      }
      make_primitive(row);
    }
    pivots.push_back(c);
    ++rank;
  }
  return pivots;
}

}  // namespace

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

ExactMatrix ExactMatrix::from_rows(const std::vector<RationalVector>& rows, std::size_t cols) {
  ExactMatrix m(0, cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RationalVector ExactMatrix::row(std::size_t r) const {
  return RationalVector(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
}

void ExactMatrix::append_row(const RationalVector& row) {
  if (row.size() != cols_) throw std::invalid_argument("row length mismatch");
  data_.insert(data_.end(), row.begin(), row.end());
  ++rows_;
}

RationalVector ExactMatrix::apply(const RationalVector& v) const {
  if (v.size() != cols_) throw std::invalid_argument("vector length mismatch");
  RationalVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (at(r, c) != 0 && v[c] != 0) out[r] += at(r, c) * v[c];
  return out;
}

std::size_t ExactMatrix::rank() const {
  std::vector<IntRow> rows;
  rows.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) rows.push_back(to_integer_row(*this, r));
  return eliminate(rows, cols_, false).size();
}

ExactMatrix::Rref ExactMatrix::rref() const {
  std::vector<IntRow> rows;
  rows.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) rows.push_back(to_integer_row(*this, r));
  auto pivots = eliminate(rows, cols_, true);
  Rref out{ExactMatrix(pivots.size(), cols_), pivots};
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    const Integer& p = rows[r][pivots[r]];
    for (std::size_t c = 0; c < cols_; ++c)
      if (rows[r][c] != 0) out.matrix.at(r, c) = make_rational(rows[r][c], p);
  }
  return out;
}

std::vector<RationalVector> kernel_basis(const ExactMatrix& m) {
  auto rr = m.rref();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : rr.pivots) is_pivot[c] = true;
  std::vector<RationalVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    RationalVector v(m.cols());
    v[f] = 1;
    for (std::size_t r = 0; r < rr.pivots.size(); ++r) v[rr.pivots[r]] = -rr.matrix.at(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

SubspaceDims subspace_ops(const ExactMatrix& u, const ExactMatrix& v) {
  if (u.cols() != v.cols()) throw std::invalid_argument("subspace_ops: ambient mismatch");
  SubspaceDims d;
  d.dim_u = u.rank();
  d.dim_v = v.rank();
  ExactMatrix both = u;
  for (std::size_t r = 0; r < v.rows(); ++r) both.append_row(v.row(r));
  d.dim_sum = both.rank();
  d.dim_intersection = d.dim_u + d.dim_v - d.dim_sum;
  return d;
}

void normalize_row(SparseRow& row) {
  if (row.empty()) return;
  Integer g = 0;
  for (const auto& [c, x] : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  if (row.front().second < 0) g = -g;
  if (g != 1)
    for (auto& [c, x] : row) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

namespace {

// a*x - b*y, merged by column; drops cancelled entries.
SparseRow combine(const SparseRow& x, const Integer& a, const SparseRow& y, const Integer& b) {
  SparseRow out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  Integer t;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      out.emplace_back(x[i].first, a * x[i].second);
      ++i;
    } else if (i == x.size() || y[j].first < x[i].first) {
      out.emplace_back(y[j].first, -b * y[j].second);
      ++j;
    } else {
      t = a * x[i].second;
      mpz_submul(t.get_mpz_t(), b.get_mpz_t(), y[j].second.get_mpz_t());
      if (t != 0) out.emplace_back(x[i].first, t);
      ++i;
      ++j;
    }
  }
  return out;
}

// Clears row[pos] using pivot row p whose leading column equals row[pos].first.
SparseRow clear_entry(const SparseRow& row, std::size_t pos, const SparseRow& p) {
  Integer g, a, b;
  mpz_gcd(g.get_mpz_t(), p.front().second.get_mpz_t(), row[pos].second.get_mpz_t());
  mpz_divexact(a.get_mpz_t(), p.front().second.get_mpz_t(), g.get_mpz_t());
  mpz_divexact(b.get_mpz_t(), row[pos].second.get_mpz_t(), g.get_mpz_t());
  SparseRow out = combine(row, a, p, b);
  normalize_row(out);
  return out;
}

}  // namespace

SparseEchelon::SparseEchelon(int ncols) : ncols_(ncols), pivot_row_(ncols, -1) {}

bool SparseEchelon::insert(SparseRow row) {
  std::erase_if(row, [](const auto& e) { return e.second == 0; });
  while (!row.empty()) {
    int c = row.front().first;
    int pr = pivot_row_[c];
    if (pr < 0) {
      insert_free_leading(std::move(row));
      return true;
    }
    row = clear_entry(row, 0, rows_[pr]);
  }
  return false;
}

void SparseEchelon::insert_free_leading(SparseRow row) {
  if (row.empty()) throw std::logic_error("insert_free_leading: empty row");
  int c = row.front().first;
  if (pivot_row_[c] >= 0) throw std::logic_error("insert_free_leading: pivot taken");
  normalize_row(row);
  pivot_row_[c] = static_cast<int>(rows_.size());
  rows_.push_back(std::move(row));
  fully_reduced_ = false;
}

void SparseEchelon::reduce_fully() {
  std::vector<int> order;
  for (int c = ncols_ - 1; c >= 0; --c)
    if (pivot_row_[c] >= 0) order.push_back(pivot_row_[c]);
  for (int r : order) {
    SparseRow& row = rows_[r];
    std::size_t pos = 1;
    while (pos < row.size()) {
      int c = row[pos].first;
      if (pivot_row_[c] < 0) {
        ++pos;
        continue;
      }
      row = clear_entry(row, pos, rows_[pivot_row_[c]]);
      // Entries before pos are untouched by a pivot row with lead c.
    }
  }
  free_index_.assign(ncols_, -1);
  int k = 0;
  for (int c = 0; c < ncols_; ++c)
    if (pivot_row_[c] < 0) free_index_[c] = k++;
  fully_reduced_ = true;
}

std::vector<int> SparseEchelon::free_columns() const {
  std::vector<int> out;
  for (int c = 0; c < ncols_; ++c)
    if (pivot_row_[c] < 0) out.push_back(c);
  return out;
}

RationalVector SparseEchelon::normal_form_of_column(int col) const {
  if (!fully_reduced_) throw std::logic_error("normal_form_of_column needs reduce_fully()");
  RationalVector out(static_cast<std::size_t>(ncols_) - rows_.size());
  int pr = pivot_row_[col];
  if (pr < 0) {
    out[free_index_[col]] = 1;
    return out;
  }
  const SparseRow& row = rows_[pr];
  const Integer& lead = row.front().second;
  for (std::size_t k = 1; k < row.size(); ++k)
    out[free_index_[row[k].first]] = make_rational(-row[k].second, lead);
  return out;
}

}  // namespace jacring
