#include "jacring/semigroup.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

namespace jacring {

namespace {

int mod(int a, int n) { return ((a % n) + n) % n; }

}  // namespace

NumericalSemigroup::NumericalSemigroup(std::vector<int> generators) : generators_(std::move(generators)) {
  if (generators_.empty()) throw std::invalid_argument("semigroup needs generators");
  std::sort(generators_.begin(), generators_.end());
  generators_.erase(std::unique(generators_.begin(), generators_.end()), generators_.end());
  int g = 0;
  for (int x : generators_) {
    if (x <= 0) throw std::invalid_argument("semigroup generators must be positive");
    g = std::gcd(g, x);
  }
  if (g != 1) throw std::invalid_argument("semigroup generators are not coprime");

  // Frobenius number < (a-1)(b-1) for smallest a and largest b.
  const int a = generators_.front(), b = generators_.back();
  const int limit = (a - 1) * (b - 1) + a;
  std::vector<bool> member(limit + 1, false);
  member[0] = true;
  for (int n = 1; n <= limit; ++n)
    for (int x : generators_)
      if (x <= n && member[n - x]) {
        member[n] = true;
        break;
      }
  for (int n = 1; n <= limit; ++n)
    if (!member[n]) gaps_.push_back(n);
  conductor_ = gaps_.empty() ? 0 : gaps_.back() + 1;
  if (limit - conductor_ + 1 < a) throw std::logic_error("conductor bound violated");
  member.resize(conductor_);
  member_ = std::move(member);
}

bool NumericalSemigroup::contains(int n) const {
  if (n < 0) return false;
  if (n >= conductor_) return true;
  return member_[n];
}

bool NumericalSemigroup::is_minimally_generated() const {
  for (std::size_t k = 0; k < generators_.size(); ++k) {
    const int target = generators_[k];
    std::vector<bool> reach(target + 1, false);
    reach[0] = true;
    for (int n = 1; n <= target; ++n)
      for (std::size_t j = 0; j < generators_.size(); ++j)
        if (j != k && generators_[j] <= n && reach[n - generators_[j]]) {
          reach[n] = true;
          break;
        }
    if (reach[target]) return false;
  }
  return true;
}

NumericalSemigroup gaps(std::vector<int> generators) { return NumericalSemigroup(std::move(generators)); }

bool GammaModule::contains(int n) const {
  if (base->contains(n)) return true;
  return std::binary_search(adjoined_gaps.begin(), adjoined_gaps.end(), n);
}

bool is_gamma_closed(const NumericalSemigroup& g, const std::vector<int>& adjoined) {
  for (int x : adjoined) {
    if (g.contains(x) || x <= 0) return false;
    for (int h : g.generators()) {
      int y = x + h;
      if (!g.contains(y) && !std::binary_search(adjoined.begin(), adjoined.end(), y)) return false;
    }
  }
  return true;
}

std::vector<GammaModule> enumerate_modules(const std::shared_ptr<const NumericalSemigroup>& g) {
  const auto& gap_list = g->gaps();
  std::vector<int> required(g->conductor() + 1, 0);
  std::vector<int> chosen;
  std::vector<GammaModule> out;

  std::function<void(std::size_t)> dfs = [&](std::size_t idx) {
    if (idx == gap_list.size()) {
      out.push_back(GammaModule{g, chosen});
      return;
    }
    const int x = gap_list[idx];
    if (required[x] == 0) dfs(idx + 1);
    chosen.push_back(x);
    for (int h : g->generators())
      if (x + h < g->conductor() && !g->contains(x + h)) ++required[x + h];
    dfs(idx + 1);
    for (int h : g->generators())
      if (x + h < g->conductor() && !g->contains(x + h)) --required[x + h];
    chosen.pop_back();
  };
  dfs(0);

  std::sort(out.begin(), out.end(), [](const GammaModule& a, const GammaModule& b) {
    if (a.adjoined_gaps.size() != b.adjoined_gaps.size())
      return a.adjoined_gaps.size() < b.adjoined_gaps.size();
    return a.adjoined_gaps < b.adjoined_gaps;
  });
  for (const auto& m : out)
    if (!is_gamma_closed(*g, m.adjoined_gaps)) throw std::logic_error("enumerated module not closed");
  return out;
}

int balance_defect(const ShiftedModule& sigma) {
  const auto& g = *sigma.module.base;
  const int c = g.conductor();
  int outside = 0;  // sigma minus Gamma
  for (int z = sigma.min_element(); z < c; ++z)
    if (sigma.contains(z) && !g.contains(z)) ++outside;
  int missing = 0;  // Gamma minus sigma
  for (int z = 0; z < c + std::max(0, -sigma.shift) + 1; ++z)
    if (g.contains(z) && !sigma.contains(z)) ++missing;
  return missing - outside;
}

namespace {

int unique_shift_with_defect(const GammaModule& delta, int target) {
  const auto& g = *delta.base;
  const int span = g.conductor() + g.delta() + std::abs(target) + 1;
  std::vector<int> hits;
  for (int k = -span; k <= span; ++k)
    if (balance_defect(ShiftedModule{delta, k}) == target) hits.push_back(k);
  if (hits.size() != 1)
    throw std::logic_error("shift with defect " + std::to_string(target) + " is not unique (" +
                           std::to_string(hits.size()) + " found)");
  return hits.front();
}

}  // namespace

BalancedModule balance(const GammaModule& delta) {
  int k = unique_shift_with_defect(delta, 0);
  // Shifting down by one raises the defect by one; Gamma itself has defect 0.
  if (k != -static_cast<int>(delta.adjoined_gaps.size()))
    throw std::logic_error("balance shift disagrees with the gap count");
  return BalancedModule{delta, k};
}

GammaModule normalize(const ShiftedModule& sigma) { return sigma.module; }

std::vector<int> residue_basis(const ShiftedModule& sigma, int n) {
  std::vector<int> out(n);
  std::vector<bool> found(n, false);
  int remaining = n;
  for (int z = sigma.min_element(); remaining > 0; ++z) {
    if (!sigma.contains(z)) continue;
    int r = mod(z, n);
    if (!found[r]) {
      found[r] = true;
      out[r] = z;
      --remaining;
    }
  }
  return out;
}

std::vector<int> p_basis(const ShiftedModule& sigma, int p) { return residue_basis(sigma, p); }
std::vector<int> q_basis(const ShiftedModule& sigma, int q) { return residue_basis(sigma, q); }

std::vector<ShiftedModule> enumerate_sigma_i(int p, int q, int i) {
  if (i < 1 || i > p) throw std::invalid_argument("enumerate_sigma_i: need 1 <= i <= p");
  auto g = std::make_shared<const NumericalSemigroup>(std::vector<int>{p, q});
  std::vector<ShiftedModule> out;
  for (const auto& delta : enumerate_modules(g))
    out.push_back(ShiftedModule{delta, unique_shift_with_defect(delta, p - i)});
  return out;
}

std::vector<int> chain_basis(const FlagTuple& d, int p, int i) {
  std::vector<int> out(d.d.size());
  for (std::size_t k = 0; k < d.d.size(); ++k)
    out[k] = static_cast<int>(k) < i ? d.d[k] : d.d[k] + p;
  return out;
}

bool basis_closed_under(const std::vector<int>& basis, int p, int q) {
  std::vector<int> by_residue(p);
  std::vector<bool> seen(p, false);
  for (int b : basis) {
    int r = mod(b, p);
    if (seen[r]) return false;
    seen[r] = true;
    by_residue[r] = b;
  }
  for (int b : basis)
    if (b + q < by_residue[mod(b + q, p)]) return false;
  return true;
}

ShiftedModule module_from_basis(const std::shared_ptr<const NumericalSemigroup>& g,
                                const std::vector<int>& basis, int p) {
  std::vector<int> by_residue(p);
  for (int b : basis) by_residue[mod(b, p)] = b;
  const int lo = *std::min_element(basis.begin(), basis.end());
  auto in_sigma = [&](int z) { return z >= by_residue[mod(z, p)]; };
  std::vector<int> adjoined;
  for (int x : g->gaps())
    if (in_sigma(x + lo)) adjoined.push_back(x);
  for (int z = lo; z < lo + g->conductor(); ++z)
    if (g->contains(z - lo) && !in_sigma(z))
      throw std::invalid_argument("residue basis does not span a module over the semigroup");
  if (!is_gamma_closed(*g, adjoined)) throw std::invalid_argument("residue basis is not closed");
  return ShiftedModule{GammaModule{g, adjoined}, -lo};
}

bool is_flag_tuple(const FlagTuple& d, int p, int q) {
  if (static_cast<int>(d.d.size()) != p) return false;
  std::vector<bool> seen(p, false);
  for (int x : d.d) {
    if (seen[mod(x, p)]) return false;
    seen[mod(x, p)] = true;
  }
  for (int i = 1; i <= p; ++i) {
    auto prev = chain_basis(d, p, i - 1);
    int target = d.d[i - 1] + q;
    bool ok = false;
    for (int b : prev)
      if (mod(b, p) == mod(target, p)) ok = target >= b;
    if (!ok) return false;
  }
  auto g = std::make_shared<const NumericalSemigroup>(std::vector<int>{p, q});
  return balance_defect(module_from_basis(g, d.d, p)) == 0;
}

TildeSigmaSearch enumerate_tilde_sigma(int p, int q) {
  auto g = std::make_shared<const NumericalSemigroup>(std::vector<int>{p, q});
  TildeSigmaSearch out;
  out.window_lo = -p * q;
  out.window_hi = p * q + g->conductor();
  const long target_sum = static_cast<long>(p) * q * (p - 1) / 2;

  FlagTuple cur{std::vector<int>(p)};
  std::vector<bool> used(p, false);
  std::function<void(int)> dfs = [&](int k) {
    if (k == p) {
      long sum = 0;
      for (int x : cur.d) sum += x;
      // The sum pins the defect of the top lattice; is_flag_tuple rechecks it exactly.
      if (sum == target_sum && is_flag_tuple(cur, p, q)) out.tuples.push_back(cur);
      return;
    }
    for (int x = out.window_lo; x <= out.window_hi; ++x) {
      int r = mod(x, p);
      if (used[r]) continue;
      used[r] = true;
      cur.d[k] = x;
      dfs(k + 1);
      used[r] = false;
    }
  };
  dfs(0);
  std::sort(out.tuples.begin(), out.tuples.end());
  for (const auto& t : out.tuples)
    for (int x : t.d)
      if (x == out.window_lo || x == out.window_hi)
        throw std::runtime_error("flag tuple search touched the window boundary");
  return out;
}

}  // namespace jacring
