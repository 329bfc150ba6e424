#include "jacring/oracles.hpp"

#include <functional>
#include <numeric>
#include <stdexcept>

namespace jacring {

namespace {
void require_coprime(int p, int q) {
  if (p < 1 || q < 1 || std::gcd(p, q) != 1) throw std::invalid_argument("need coprime positive p, q");
}
}  // namespace

std::vector<std::size_t> dyck_poly(int p, int q) {
  require_coprime(p, q);
  std::vector<int> cap;
  for (int r = 1; r < p; ++r) cap.push_back(q * (p - r) / p);
  std::size_t max_size = 0;
  for (int c : cap) max_size += c;
  std::vector<std::size_t> out(max_size + 1, 0);
  // Rows are weakly decreasing and bounded by their caps.
  std::function<void(std::size_t, int, std::size_t)> rec = [&](std::size_t row, int prev, std::size_t size) {
    if (row == cap.size()) {
      ++out[size];
      return;
    }
    for (int len = 0; len <= std::min(prev, cap[row]); ++len) rec(row + 1, len, size + len);
  };
  rec(0, q, 0);
  while (out.size() > 1 && out.back() == 0) out.pop_back();
  return out;
}

Integer catalan_count(int p, int q) {
  require_coprime(p, q);
  Integer b = binomial(p + q, p);
  if (b % (p + q) != 0) throw std::logic_error("binomial not divisible by p + q");
  return b / (p + q);
}

std::vector<Integer> closed_hilbert_series(int p, int q, int up_to) {
  require_coprime(p, q);
  std::vector<Integer> s(up_to + 1, 0);
  s[0] = 1;
  for (int i = 1; i < p; ++i) {
    // multiply by (1 - T^{q+i})
    for (int d = up_to; d >= q + i; --d) s[d] -= s[d - q - i];
    // divide by (1 - T^{i+1}): running sum with stride i+1
    for (int d = i + 1; d <= up_to; ++d) s[d] += s[d - i - 1];
  }
  return s;
}

}  // namespace jacring
