#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace permlab {

using BigInt = boost::multiprecision::cpp_int;

/// Base-p digits of m, least significant first; empty for m = 0.
std::vector<std::uint32_t> base_p_digits(std::uint64_t m, std::uint32_t p);
std::uint64_t from_base_p_digits(const std::vector<std::uint32_t>& digits, std::uint32_t p);

/// m! / (parts[0]! parts[1]! ...). Throws DomainError unless the parts sum to m.
BigInt multinomial_exact(std::uint64_t m, const std::vector<std::uint64_t>& parts);

/// Whether the multinomial coefficient is prime to p, decided digitwise:
/// true iff adding the parts in base p produces no carry.
bool multinomial_coprime_p(std::uint64_t m, const std::vector<std::uint64_t>& parts, std::uint32_t p);

/// The two base-3 tuple statements checked by base3_tuple_check.
///
/// Five: (n1,n2,n3,n5,n9) with n1+2n2+3n3+5n5+9n9 = Q-1 whose base-3 digits
/// add without carry to 1 + sum_{i<=l-2} 3^i. Conclusion: n5 has the digit
/// Q/9 and n9 has the digit Q/27.
///
/// Four: (n1,n2,n5,n9) with n1+2n2+5n5+9n9 = Q-1 whose digits add without
/// carry to 9 + sum_{i<=l-2} 3^i. Conclusion: n5 has the digit Q/9, and for
/// l >= 6 also n9 has the digit Q/27.
enum class TupleFamily { Five, Four };

struct TupleCheckResult {
  bool holds = true;
  std::uint64_t admissible = 0;  // tuples meeting the hypotheses
  /// First violating tuple as (n1,n2,n3,n5,n9); n3 = 0 for Four.
  std::optional<std::array<std::uint64_t, 5>> counterexample;
};

/// Enumerates every admissible tuple for Q = 3^l and checks the conclusion.
/// Requires l >= 3 (Five) or l >= 5 (Four); l <= 12.
TupleCheckResult base3_tuple_check(TupleFamily family, unsigned l);

/// The minimal l for which base3_tuple_check accepts a family.
unsigned base3_tuple_min_level(TupleFamily family);

}  // namespace permlab
