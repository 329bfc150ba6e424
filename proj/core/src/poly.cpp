#include "jacring/poly.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace jacring {

VariableContext::VariableContext(std::vector<std::string> names, std::vector<int> weight1,
                                 std::optional<std::vector<int>> weight2)
    : names_(std::move(names)), weight1_(std::move(weight1)), weight2_(std::move(weight2)) {
  if (weight1_.size() != names_.size())
    throw std::invalid_argument("weight1 length differs from variable count");
  if (weight2_ && weight2_->size() != names_.size())
    throw std::invalid_argument("weight2 length differs from variable count");
  for (std::size_t i = 0; i < names_.size(); ++i)
    for (std::size_t j = i + 1; j < names_.size(); ++j)
      if (names_[i] == names_[j]) throw std::invalid_argument("duplicate variable " + names_[i]);
}

std::optional<std::size_t> VariableContext::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

std::size_t VariableContext::index(std::string_view name) const {
  auto i = find(name);
  if (!i) throw std::out_of_range("unknown variable " + std::string(name));
  return *i;
}

const std::vector<int>& VariableContext::weight2() const {
  if (!weight2_) throw std::logic_error("context has no second grading");
  return *weight2_;
}

ContextPtr make_context(std::vector<std::string> names, std::vector<int> weight1,
                        std::optional<std::vector<int>> weight2) {
  return std::make_shared<const VariableContext>(std::move(names), std::move(weight1),
                                                 std::move(weight2));
}

bool same_context(const ContextPtr& a, const ContextPtr& b) {
  return a == b || (a && b && *a == *b);
}

int weighted_degree(const Monomial& m, const std::vector<int>& weights) {
  int d = 0;
  for (std::size_t i = 0; i < m.size(); ++i) d += m[i] * weights[i];
  return d;
}

int total_degree(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0); }

Monomial monomial_product(const Monomial& a, const Monomial& b) {
  Monomial out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

bool divides(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

bool GrlexLess::operator()(const Monomial& a, const Monomial& b) const {
  int da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  return a < b;
}

SparsePoly::SparsePoly(ContextPtr ctx) : ctx_(std::move(ctx)) {
  if (!ctx_) throw std::invalid_argument("null variable context");
}

SparsePoly SparsePoly::constant(ContextPtr ctx, const Rational& c) {
  SparsePoly p(ctx);
  p.add_term(Monomial(p.ctx_->size(), 0), c);
  return p;
}

SparsePoly SparsePoly::variable(ContextPtr ctx, std::string_view name) {
  std::size_t i = ctx->index(name);
  return variable(std::move(ctx), i);
}

SparsePoly SparsePoly::variable(ContextPtr ctx, std::size_t index) {
  SparsePoly p(ctx);
  Monomial m(p.ctx_->size(), 0);
  m.at(index) = 1;
  p.add_term(m, 1);
  return p;
}

SparsePoly SparsePoly::term(ContextPtr ctx, Monomial m, const Rational& c) {
  SparsePoly p(ctx);
  if (m.size() != p.ctx_->size()) throw std::invalid_argument("monomial length mismatch");
  p.add_term(m, c);
  return p;
}

void SparsePoly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational SparsePoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational SparsePoly::constant_term() const { return coefficient(Monomial(ctx_->size(), 0)); }

void SparsePoly::check_same(const SparsePoly& other) const {
  if (!same_context(ctx_, other.ctx_)) throw std::invalid_argument("variable context mismatch");
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& other) {
  check_same(other);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& other) {
  check_same(other);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

SparsePoly& SparsePoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

SparsePoly SparsePoly::operator-() const {
  SparsePoly out(*this);
  for (auto& [m, v] : out.terms_) v = -v;
  return out;
}

bool SparsePoly::operator==(const SparsePoly& other) const {
  return same_context(ctx_, other.ctx_) && terms_ == other.terms_;
}

SparsePoly poly_mul(const SparsePoly& a, const SparsePoly& b) {
  if (!same_context(a.context(), b.context()))
    throw std::invalid_argument("variable context mismatch");
  SparsePoly out(a.context());
  Rational prod;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      mpq_mul(prod.get_mpq_t(), ca.get_mpq_t(), cb.get_mpq_t());
      out.add_term(monomial_product(ma, mb), prod);
    }
  return out;
}

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) { return poly_mul(a, b); }

SparsePoly pow(const SparsePoly& a, unsigned n) {
  SparsePoly result = SparsePoly::constant(a.context(), 1);
  SparsePoly base = a;
  while (n > 0) {
    if (n & 1U) result = poly_mul(result, base);
    n >>= 1U;
    if (n > 0) base = poly_mul(base, base);
  }
  return result;
}

SparsePoly mul_truncated(const SparsePoly& a, const SparsePoly& b, std::size_t var, int max_deg) {
  if (!same_context(a.context(), b.context()))
    throw std::invalid_argument("variable context mismatch");
  SparsePoly out(a.context());
  Rational prod;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      if (ma[var] + mb[var] > max_deg) continue;
      mpq_mul(prod.get_mpq_t(), ca.get_mpq_t(), cb.get_mpq_t());
      out.add_term(monomial_product(ma, mb), prod);
    }
  return out;
}

SparsePoly coeff_of(const SparsePoly& p, std::string_view var, int k) {
  return coeff_of(p, p.context()->index(var), k);
}

SparsePoly coeff_of(const SparsePoly& p, std::size_t var, int k) {
  SparsePoly out(p.context());
  for (const auto& [m, c] : p.terms()) {
    if (m[var] != k) continue;
    Monomial r = m;
    r[var] = 0;
    out.add_term(r, c);
  }
  return out;
}

int degree_in(const SparsePoly& p, std::size_t var) {
  int d = -1;
  for (const auto& [m, c] : p.terms()) d = std::max(d, m[var]);
  return d;
}

SparsePoly truncate(const SparsePoly& p, std::size_t var, int max_deg) {
  SparsePoly out(p.context());
  for (const auto& [m, c] : p.terms())
    if (m[var] <= max_deg) out.add_term(m, c);
  return out;
}

SparsePoly rational_power_series(const SparsePoly& p, const Rational& exponent,
                                 std::string_view var, int truncation) {
  std::size_t v = p.context()->index(var);
  SparsePoly head = coeff_of(p, v, 0);
  if (!(head == SparsePoly::constant(p.context(), 1)))
    throw std::domain_error("power series base must have constant term 1 in " + std::string(var));
  SparsePoly tail = truncate(p, v, truncation) - head;
  for (const auto& [m, c] : tail.terms())
    if (m[v] == 0) throw std::domain_error("power series tail must vanish at " + std::string(var) + "=0");

  // (1 + u)^a = sum_k C(a,k) u^k; u has var-order >= 1, so k <= truncation.
  SparsePoly out = SparsePoly::constant(p.context(), 1);
  SparsePoly upow = SparsePoly::constant(p.context(), 1);
  for (int k = 1; k <= truncation; ++k) {
    upow = mul_truncated(upow, tail, v, truncation);
    if (upow.is_zero()) break;
    out += upow * binomial(exponent, k);
  }
  return out;
}

SparsePoly compose(const SparsePoly& p, const ContextPtr& target,
                   const std::vector<SparsePoly>& images) {
  const std::size_t n = p.context()->size();
  if (images.size() != n) throw std::invalid_argument("compose: image count mismatch");
  for (const auto& im : images)
    if (!same_context(im.context(), target)) throw std::invalid_argument("compose: image context");

  std::vector<std::vector<SparsePoly>> powers(n);
  auto power_of = [&](std::size_t i, int e) -> const SparsePoly& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(SparsePoly::constant(target, 1));
    while (static_cast<int>(cache.size()) <= e) cache.push_back(poly_mul(cache.back(), images[i]));
    return cache[e];
  };

  SparsePoly out(target);
  for (const auto& [m, c] : p.terms()) {
    SparsePoly acc = SparsePoly::constant(target, c);
    for (std::size_t i = 0; i < n && !acc.is_zero(); ++i)
      if (m[i] > 0) acc = poly_mul(acc, power_of(i, m[i]));
    out += acc;
  }
  return out;
}

SparsePoly substitute(const SparsePoly& p, std::size_t var, const SparsePoly& value) {
  const auto& ctx = p.context();
  std::vector<SparsePoly> images;
  images.reserve(ctx->size());
  for (std::size_t i = 0; i < ctx->size(); ++i)
    images.push_back(i == var ? value : SparsePoly::variable(ctx, i));
  return compose(p, ctx, images);
}

Rational evaluate(const SparsePoly& p, const std::vector<Rational>& point) {
  if (point.size() != p.context()->size()) throw std::invalid_argument("evaluate: point size");
  Rational out = 0, t, pw;
  for (const auto& [m, c] : p.terms()) {
    t = c;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      mpz_pow_ui(pw.get_num_mpz_t(), point[i].get_num_mpz_t(), m[i]);
      mpz_pow_ui(pw.get_den_mpz_t(), point[i].get_den_mpz_t(), m[i]);
      t *= pw;
    }
    out += t;
  }
  return out;
}

std::optional<int> homogeneous_degree(const SparsePoly& p, int grading) {
  const auto& w = grading == 2 ? p.context()->weight2() : p.context()->weight1();
  std::optional<int> d;
  for (const auto& [m, c] : p.terms()) {
    int dm = weighted_degree(m, w);
    if (d && *d != dm) return std::nullopt;
    d = dm;
  }
  return d;
}

std::optional<std::pair<int, int>> bidegree(const SparsePoly& p) {
  auto a = homogeneous_degree(p, 1);
  auto b = homogeneous_degree(p, 2);
  if (!a || !b) return std::nullopt;
  return std::make_pair(*a, *b);
}

SparsePoly primitive_part(const SparsePoly& p) {
  if (p.is_zero()) return p;
  Integer den = 1, num = 0;
  for (const auto& [m, c] : p.terms()) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.get_num_mpz_t());
  }
  return p * make_rational(den, num);
}

std::string to_string(const SparsePoly& p) {
  if (p.is_zero()) return "0";
  const auto& ctx = *p.context();
  std::ostringstream os;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    bool unit = total_degree(m) > 0 && (c == 1 || c == -1);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (!unit) os << to_string(Rational(abs(c)));
    bool need_star = !unit;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (need_star) os << "*";
      os << ctx.name(i);
      if (m[i] > 1) os << "^" << m[i];
      need_star = true;
    }
  }
  return os.str();
}

}  // namespace jacring

namespace jacring {

SparsePoly mul_truncated_weight(const SparsePoly& a, const SparsePoly& b,
                                const std::vector<int>& weights, int max_weight) {
  if (!same_context(a.context(), b.context()))
    throw std::invalid_argument("variable context mismatch");
  SparsePoly out(a.context());
  Rational prod;
  std::vector<int> wb;
  wb.reserve(b.size());
  for (const auto& [mb, cb] : b.terms()) wb.push_back(weighted_degree(mb, weights));
  for (const auto& [ma, ca] : a.terms()) {
    const int wa = weighted_degree(ma, weights);
    std::size_t k = 0;
    for (const auto& [mb, cb] : b.terms()) {
      if (wa + wb[k++] > max_weight) continue;
      mpq_mul(prod.get_mpq_t(), ca.get_mpq_t(), cb.get_mpq_t());
      out.add_term(monomial_product(ma, mb), prod);
    }
  }
  return out;
}

SparsePoly divide_by_variable(const SparsePoly& p, std::size_t var) {
  SparsePoly out(p.context());
  for (const auto& [m, c] : p.terms()) {
    if (m[var] == 0) throw std::domain_error("not divisible by " + p.context()->name(var));
    Monomial r = m;
    --r[var];
    out.add_term(r, c);
  }
  return out;
}

}  // namespace jacring
