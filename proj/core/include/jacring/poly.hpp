#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "jacring/rational.hpp"

namespace jacring {

/// Ordered variable names with one or two integer weight vectors.
class VariableContext {
 public:
  VariableContext(std::vector<std::string> names, std::vector<int> weight1,
                  std::optional<std::vector<int>> weight2 = std::nullopt);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> find(std::string_view name) const;
  std::size_t index(std::string_view name) const;

  const std::vector<int>& weight1() const { return weight1_; }
  bool bigraded() const { return weight2_.has_value(); }
  const std::vector<int>& weight2() const;

  bool operator==(const VariableContext& other) const = default;

 private:
  std::vector<std::string> names_;
  std::vector<int> weight1_;
  std::optional<std::vector<int>> weight2_;
};

using ContextPtr = std::shared_ptr<const VariableContext>;

ContextPtr make_context(std::vector<std::string> names, std::vector<int> weight1,
                        std::optional<std::vector<int>> weight2 = std::nullopt);
bool same_context(const ContextPtr& a, const ContextPtr& b);

using Monomial = std::vector<int>;

int weighted_degree(const Monomial& m, const std::vector<int>& weights);
int total_degree(const Monomial& m);
Monomial monomial_product(const Monomial& a, const Monomial& b);
bool divides(const Monomial& a, const Monomial& b);

/// Total degree first, then lexicographic.
struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

class SparsePoly {
 public:
  using Terms = std::map<Monomial, Rational, GrlexLess>;

  explicit SparsePoly(ContextPtr ctx);

  static SparsePoly constant(ContextPtr ctx, const Rational& c);
  static SparsePoly variable(ContextPtr ctx, std::string_view name);
  static SparsePoly variable(ContextPtr ctx, std::size_t index);
  static SparsePoly term(ContextPtr ctx, Monomial m, const Rational& c);

  const ContextPtr& context() const { return ctx_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Accumulates; drops the term if the sum is zero.
  void add_term(const Monomial& m, const Rational& c);
  Rational coefficient(const Monomial& m) const;
  Rational constant_term() const;

  SparsePoly& operator+=(const SparsePoly& other);
  SparsePoly& operator-=(const SparsePoly& other);
  SparsePoly& operator*=(const Rational& c);

  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend SparsePoly operator*(SparsePoly a, const Rational& c) { return a *= c; }
  friend SparsePoly operator*(const Rational& c, SparsePoly a) { return a *= c; }
  SparsePoly operator-() const;

  bool operator==(const SparsePoly& other) const;

 private:
  void check_same(const SparsePoly& other) const;

  ContextPtr ctx_;
  Terms terms_;
};

SparsePoly poly_mul(const SparsePoly& a, const SparsePoly& b);
SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);
SparsePoly pow(const SparsePoly& a, unsigned n);

/// Product with every term of var-degree above max_deg discarded.
SparsePoly mul_truncated(const SparsePoly& a, const SparsePoly& b, std::size_t var, int max_deg);

/// Coefficient of var^k, as a polynomial in the same context (var absent).
SparsePoly coeff_of(const SparsePoly& p, std::string_view var, int k);
SparsePoly coeff_of(const SparsePoly& p, std::size_t var, int k);
int degree_in(const SparsePoly& p, std::size_t var);

SparsePoly truncate(const SparsePoly& p, std::size_t var, int max_deg);

/// p^exponent as a binomial series in var, keeping var-degrees <= truncation.
SparsePoly rational_power_series(const SparsePoly& p, const Rational& exponent,
                                 std::string_view var, int truncation);

/// Replaces variable i of p's context by images[i] (all in target).
SparsePoly compose(const SparsePoly& p, const ContextPtr& target,
                   const std::vector<SparsePoly>& images);
SparsePoly substitute(const SparsePoly& p, std::size_t var, const SparsePoly& value);

Rational evaluate(const SparsePoly& p, const std::vector<Rational>& point);

/// Degree in weight1 (grading 1) or weight2 (grading 2) if every term agrees.
std::optional<int> homogeneous_degree(const SparsePoly& p, int grading = 1);
std::optional<std::pair<int, int>> bidegree(const SparsePoly& p);

/// Scales by a positive rational so all coefficients are coprime integers.
SparsePoly primitive_part(const SparsePoly& p);

std::string to_string(const SparsePoly& p);

}  // namespace jacring

namespace jacring {

/// Product keeping only terms of weighted degree <= max_weight.
SparsePoly mul_truncated_weight(const SparsePoly& a, const SparsePoly& b,
                                const std::vector<int>& weights, int max_weight);

/// Exact division by a single variable; throws if some term is not divisible.
SparsePoly divide_by_variable(const SparsePoly& p, std::size_t var);

}  // namespace jacring
