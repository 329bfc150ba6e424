#include "jacring/graded_quotient.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>

namespace jacring {

int MonomialBasis::find(const Monomial& m) const {
  auto it = index.find(m);
  return it == index.end() ? -1 : it->second;
}

bool revlex_greater(const Monomial& a, const Monomial& b) {
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

namespace {

MonomialBasis finish_basis(std::vector<Monomial> mons) {
  std::sort(mons.begin(), mons.end(), revlex_greater);
  MonomialBasis out;
  out.monomials = std::move(mons);
  for (std::size_t i = 0; i < out.monomials.size(); ++i) out.index.emplace(out.monomials[i], static_cast<int>(i));
  return out;
}

}  // namespace

MonomialBasis monomials_of_degree(const std::vector<int>& weights, int d) {
  std::vector<Monomial> mons;
  if (d < 0) return finish_basis(std::move(mons));
  Monomial cur(weights.size(), 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t k, int rest) {
    if (k + 1 == weights.size()) {
      if (rest % weights[k] == 0) {
        cur[k] = rest / weights[k];
        mons.push_back(cur);
        cur[k] = 0;
      }
      return;
    }
    for (int e = 0; e * weights[k] <= rest; ++e) {
      cur[k] = e;
      rec(k + 1, rest - e * weights[k]);
    }
    cur[k] = 0;
  };
  if (weights.empty()) {
    if (d == 0) mons.emplace_back();
  } else {
    rec(0, d);
  }
  return finish_basis(std::move(mons));
}

MonomialBasis monomials_of_bidegree(const std::vector<int>& w1, const std::vector<int>& w2, int a, int b) {
  std::vector<Monomial> mons;
  if (a < 0 || b < 0) return finish_basis(std::move(mons));
  for (std::size_t k = 0; k < w1.size(); ++k)
    if (w1[k] <= 0 && w2[k] <= 0) throw std::invalid_argument("variable without positive weight");
  Monomial cur(w1.size(), 0);
  std::function<void(std::size_t, int, int)> rec = [&](std::size_t k, int ra, int rb) {
    if (k == w1.size()) {
      if (ra == 0 && rb == 0) mons.push_back(cur);
      return;
    }
    for (int e = 0; e * w1[k] <= ra && e * w2[k] <= rb; ++e) {
      cur[k] = e;
      rec(k + 1, ra - e * w1[k], rb - e * w2[k]);
    }
    cur[k] = 0;
  };
  rec(0, a, b);
  return finish_basis(std::move(mons));
}

SparseRow multiple_row(const Monomial& m, const SparsePoly& g, const MonomialBasis& basis) {
  SparseRow row;
  row.reserve(g.size());
  for (const auto& [mg, c] : g.terms()) {
    int col = basis.find(monomial_product(m, mg));
    if (col < 0) throw std::logic_error("multiple_row: monomial outside the piece");
    if (c.get_den() != 1) throw std::logic_error("multiple_row: generator is not integral");
    row.emplace_back(col, c.get_num());
  }
  std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  return row;
}

SparseRow integer_row(const RationalVector& v) {
  Integer den = 1;
  for (const auto& x : v)
    if (x != 0) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
  SparseRow row;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    Integer t;
    mpz_divexact(t.get_mpz_t(), den.get_mpz_t(), v[i].get_den_mpz_t());
    row.emplace_back(static_cast<int>(i), t * v[i].get_num());
  }
  normalize_row(row);
  return row;
}

GradedQuotient::GradedQuotient(IdealPresentation pres, GradedQuotientOptions opts)
    : original_(std::move(pres)), opts_(std::move(opts)) {
  if (original_.homogeneity != Homogeneity::graded)
    throw std::invalid_argument("graded quotient needs a graded presentation");
  audit_homogeneity(original_);
  hash_ = presentation_hash(original_) + (opts_.eliminate_linear ? "-elim" : "-raw");
  if (opts_.eliminate_linear) {
    auto e = eliminate_linear_variables(original_);
    working_ = std::move(e.presentation);
    eliminated_ = e.eliminated.size();
  } else {
    working_ = original_;
  }
  const auto& w = working_.context->weight1();
  for (int x : w)
    if (x <= 0) throw std::invalid_argument("graded quotient needs positive weights");
  for (const auto& g : working_.generators) {
    if (g.is_zero()) continue;
    primitive_gens_.push_back(primitive_part(g));
    gen_degree_.push_back(*homogeneous_degree(g, 1));
  }
  for (std::size_t k = 1; k < w.size(); ++k)
    if (w[k] < w[shift_var_]) shift_var_ = k;
}

const MonomialBasis& GradedQuotient::basis(int d) {
  auto it = bases_.find(d);
  if (it == bases_.end()) it = bases_.emplace(d, monomials_of_degree(working_.context->weight1(), d)).first;
  return it->second;
}

DegreePiece& GradedQuotient::piece(int d) {
  if (auto it = pieces_.find(d); it != pieces_.end()) return *it->second;
  auto pc = std::make_unique<DegreePiece>();
  pc->degree = d;
  pc->basis = basis(d);
  pc->ideal = SparseEchelon(static_cast<int>(pc->basis.size()));
  const auto& w = working_.context->weight1();
  const std::size_t x = shift_var_;

  if (w.empty() || pc->basis.size() == 0) {
    return *pieces_.emplace(d, std::move(pc)).first->second;
  }
  if (d - w[x] >= 0) {
    DegreePiece& prev = piece(d - w[x]);
    for (const auto& row : prev.ideal.rows()) {
      SparseRow mapped;
      mapped.reserve(row.size());
      for (const auto& [c, v] : row) {
        Monomial m = prev.basis.monomials[c];
        ++m[x];
        mapped.emplace_back(pc->basis.find(m), v);
      }
      pc->ideal.insert_free_leading(std::move(mapped));
    }
  }
  for (std::size_t k = 0; k < primitive_gens_.size(); ++k) {
    const int dg = gen_degree_[k];
    if (dg > d) continue;
    const MonomialBasis& mult = basis(d - dg);
    for (const auto& m : mult.monomials) {
      if (m[x] > 0) continue;
      pc->ideal.insert(multiple_row(m, primitive_gens_[k], pc->basis));
    }
  }
  return *pieces_.emplace(d, std::move(pc)).first->second;
}

DegreePiece& GradedQuotient::reduced_piece(int d) {
  DegreePiece& pc = piece(d);
  if (!pc.ideal.fully_reduced()) pc.ideal.reduce_fully();
  return pc;
}

std::size_t GradedQuotient::dim(int d) {
  if (d < 0) return 0;
  const std::string key = sha256_hex(hash_ + ":" + std::to_string(d));
  if (opts_.cache) {
    if (auto hit = opts_.cache->get("dims", key)) return hit->at("dim").get<std::size_t>();
  }
  std::size_t out = piece(d).quotient_dim();
  if (opts_.cache) opts_.cache->put("dims", key, Json{{"presentation", hash_}, {"degree", d}, {"dim", out}});
  return out;
}

std::vector<std::size_t> GradedQuotient::hilbert_function(int up_to) {
  std::vector<std::size_t> out;
  for (int d = 0; d <= up_to; ++d) out.push_back(dim(d));
  return out;
}

GradedQuotient::ArtinianCertificate GradedQuotient::artinian(int ceiling) {
  const auto& w = working_.context->weight1();
  const int maxw = w.empty() ? 1 : *std::max_element(w.begin(), w.end());
  ArtinianCertificate cert;
  int run = 0;
  for (int d = 0; d <= ceiling; ++d) {
    std::size_t h = dim(d);
    cert.hilbert.push_back(h);
    if (h == 0) {
      ++run;
    } else {
      run = 0;
      cert.top_degree = d;
    }
    cert.checked_up_to = d;
    if (run >= maxw) {
      cert.certified = true;
      cert.hilbert.resize(cert.top_degree + 1);
      return cert;
    }
  }
  return cert;
}

std::vector<std::size_t> hilbert_function(GradedQuotient& q, int up_to) { return q.hilbert_function(up_to); }

std::size_t rank_modulo(const DegreePiece& piece, const std::vector<int>& columns) {
  SparseEchelon e = piece.ideal;
  const std::size_t base = e.rank();
  for (int c : columns) e.insert(SparseRow{{c, Integer(1)}});
  return e.rank() - base;
}

GrMResult gr_m_filtration(GradedQuotient& q, int top_degree) {
  GrMResult out;
  for (int j = 0; j <= top_degree; ++j) {
    DegreePiece& pc = q.reduced_piece(j);
    std::size_t maxcount = 0;
    for (const auto& m : pc.basis.monomials) maxcount = std::max<std::size_t>(maxcount, total_degree(m));
    std::vector<std::size_t> row(maxcount + 1, 0);
    if (pc.quotient_dim() > 0) {
      // Insert normal forms by decreasing monomial order of vanishing.
      std::vector<std::vector<int>> by_count(maxcount + 1);
      for (std::size_t c = 0; c < pc.basis.size(); ++c)
        by_count[total_degree(pc.basis.monomials[c])].push_back(static_cast<int>(c));
      SparseEchelon span(static_cast<int>(pc.quotient_dim()));
      std::size_t prev = 0;
      for (std::size_t i = maxcount + 1; i-- > 0;) {
        for (int c : by_count[i]) span.insert(integer_row(pc.ideal.normal_form_of_column(c)));
        row[i] = span.rank() - prev;
        prev = span.rank();
      }
    }
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (out.gr.size() <= i) out.gr.resize(i + 1, 0);
      out.gr[i] += row[i];
      out.total += row[i];
    }
    out.by_degree.push_back(std::move(row));
  }
  while (out.gr.size() > 1 && out.gr.back() == 0) out.gr.pop_back();
  return out;
}

}  // namespace jacring
