#include "permlab/combinat.hpp"

#include <numeric>

#include "permlab/error.hpp"

namespace permlab {

std::vector<std::uint32_t> base_p_digits(std::uint64_t m, std::uint32_t p) {
  if (p < 2) throw DomainError("base must be at least 2");
  std::vector<std::uint32_t> d;
  while (m != 0) {
    d.push_back(static_cast<std::uint32_t>(m % p));
    m /= p;
  }
  return d;
}

std::uint64_t from_base_p_digits(const std::vector<std::uint32_t>& digits, std::uint32_t p) {
  std::uint64_t m = 0;
  for (std::size_t i = digits.size(); i-- > 0;) m = m * p + digits[i];
  return m;
}

namespace {

void check_sum(std::uint64_t m, const std::vector<std::uint64_t>& parts) {
  std::uint64_t s = 0;
  for (auto x : parts) s += x;
  if (s != m) throw DomainError("multinomial parts sum to " + std::to_string(s) + ", expected " + std::to_string(m));
}

}  // namespace

BigInt multinomial_exact(std::uint64_t m, const std::vector<std::uint64_t>& parts) {
  check_sum(m, parts);
  BigInt r = 1;
  std::uint64_t n = 0;
  for (auto k : parts) {
    // r *= C(n + k, k), built incrementally so every division is exact
    for (std::uint64_t i = 1; i <= k; ++i) {
      r *= n + i;
      r /= i;
    }
    n += k;
  }
  return r;
}

bool multinomial_coprime_p(std::uint64_t m, const std::vector<std::uint64_t>& parts, std::uint32_t p) {
  check_sum(m, parts);
  const auto target = base_p_digits(m, p);
  std::vector<std::uint64_t> sums(target.size(), 0);
  for (auto x : parts) {
    const auto d = base_p_digits(x, p);
    for (std::size_t j = 0; j < d.size(); ++j) {
      if (j >= sums.size()) return false;
      sums[j] += d[j];
    }
  }
  for (std::size_t j = 0; j < target.size(); ++j) {
    if (sums[j] != target[j]) return false;
  }
  return true;
}

unsigned base3_tuple_min_level(TupleFamily family) { return family == TupleFamily::Five ? 3 : 5; }

namespace {

std::uint32_t digit3(std::uint64_t n, unsigned pos) {
  for (unsigned i = 0; i < pos; ++i) n /= 3;
  return static_cast<std::uint32_t>(n % 3);
}

}  // namespace

TupleCheckResult base3_tuple_check(TupleFamily family, unsigned l) {
  if (l < base3_tuple_min_level(family) || l > 12) {
    throw DomainError("level " + std::to_string(l) + " outside the supported range");
  }
  std::uint64_t Q = 1;
  for (unsigned i = 0; i < l; ++i) Q *= 3;
  const bool five = family == TupleFamily::Five;
  const std::uint64_t total = five ? (Q + 3) / 6 : (Q + 51) / 6;
  const std::uint64_t target = Q - 1;

  TupleCheckResult res;
  for (std::uint64_t n9 = 0; 9 * n9 <= target && n9 <= total; ++n9) {
    for (std::uint64_t n5 = 0; 9 * n9 + 5 * n5 <= target && n9 + n5 <= total; ++n5) {
      const std::uint64_t n3_max = five ? total : 0;
      for (std::uint64_t n3 = 0; n3 <= n3_max; ++n3) {
        const std::uint64_t w = 9 * n9 + 5 * n5 + 3 * n3;
        const std::uint64_t s = n9 + n5 + n3;
        if (w > target || s > total) break;
        // n1 + n2 = total - s, n1 + 2 n2 = target - w
        const std::uint64_t rest_w = target - w;
        const std::uint64_t rest_s = total - s;
        if (rest_w < rest_s) continue;
        const std::uint64_t n2 = rest_w - rest_s;
        if (n2 > rest_s) continue;
        const std::uint64_t n1 = rest_s - n2;
        if (!multinomial_coprime_p(total, {n1, n2, n3, n5, n9}, 3)) continue;
        ++res.admissible;
        bool ok = digit3(n5, l - 2) == 1;
        if (five || l >= 6) ok = ok && digit3(n9, l - 3) == 1;
        if (!ok && !res.counterexample) {
          res.holds = false;
          res.counterexample = std::array<std::uint64_t, 5>{n1, n2, n3, n5, n9};
        }
      }
    }
  }
  return res;
}

}  // namespace permlab
