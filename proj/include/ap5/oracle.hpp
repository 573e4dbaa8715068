#pragma once

#include "ap5/integer.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace ap5 {

/// (x - d)^5 + x^5 + (x + d)^5 = y^n with gcd(x, d) = 1.
struct SolutionRecord {
  Int x, d, y;
  unsigned n = 0;
  friend bool operator==(const SolutionRecord&, const SolutionRecord&) = default;
};

/// kappa = gcd(x, 10), x = kappa^(n-1) a^n, 3x^4 + 20x^2d^2 + 10d^4 = kappa b^n, T = d^2 + x^2.
struct FactorWitness {
  int kappa = 0;
  Int a, b, T;
};

[[nodiscard]] Int main_form(const Int& x, const Int& d);

/// True when the record satisfies its equation and coprimality, by direct evaluation.
[[nodiscard]] bool check_record(const SolutionRecord& s);

/// Every coprime (x, d) with |x| <= box_x, |d| <= box_d whose value is a
/// perfect n-th power for some 2 <= n <= nmax, one record per (x, d, n).
/// For even n only y >= 0 is reported. Strips of x are searched on
/// `threads` workers and merged in order.
[[nodiscard]] std::vector<SolutionRecord> search_solutions(std::int64_t box_x, std::int64_t box_d, unsigned nmax,
                                                           unsigned threads = 0);

/// Throws PreconditionError for x = 0, y = 0 or composite n, and Error if an
/// invariant fails (which would contradict the factorization argument).
[[nodiscard]] FactorWitness derive_witness(const SolutionRecord& s);

struct ThreeDividesReport {
  bool d_coprime_to_3 = false;   ///< mod 9: 3 | d is incompatible with the equation
  bool x_or_b_divisible = false; ///< mod 3: 3 | x or 3 | b once 3 does not divide d
  bool x_divisible_iff_a = false;
  bool search_records_ok = false;  ///< 3 | y for every y != 0 record of a small search
  std::size_t records_checked = 0;
  [[nodiscard]] bool ok() const { return d_coprime_to_3 && x_or_b_divisible && x_divisible_iff_a && search_records_ok; }
};

[[nodiscard]] ThreeDividesReport three_divides_ab_check(std::int64_t search_box = 30);

struct FuzzReport {
  std::size_t trials = 0;
  std::size_t failures = 0;
  [[nodiscard]] bool ok() const { return trials > 0 && failures == 0; }
};

/// Random checks of (x-d)^5 + x^5 + (x+d)^5 = x(3x^4 + 20x^2d^2 + 10d^4)
/// and 3x^4 + 20x^2d^2 + 10d^4 = 10(d^2 + x^2)^2 - 7x^4.
[[nodiscard]] FuzzReport identity_fuzz(std::size_t trials, std::uint64_t seed = 1);

struct SjReport {
  bool applicable = false;  ///< j = +-3 mod 18
  bool identity = false;    ///< the factored form of S_j(z - (j-1)d/2, d, 5)
  bool mod3 = false;        ///< S_j = 0 mod 3 whenever 3 does not divide d
  bool mod9 = false;        ///< 3 | d forces S_j = +-3 mod 9
  [[nodiscard]] bool ok() const { return applicable && identity && mod3 && mod9; }
};

[[nodiscard]] SjReport sj_three_divides(unsigned j);

}  // namespace ap5
