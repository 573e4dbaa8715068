#pragma once

#include "ap5/frey.hpp"
#include "ap5/json_io.hpp"
#include "ap5/newforms.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ap5 {

/// Norm_{K/Q}(a_p - c) for many integers c at once, from the characteristic
/// polynomial of a_p. Zero norms are kept: they mean a_p = c exactly.
class NormTable {
 public:
  explicit NormTable(const NumberFieldElem& ap);
  /// Throws if a_p is not integral enough for the norm to be an integer.
  [[nodiscard]] Int norm_minus(const Int& c) const;

 private:
  std::vector<Rat> charpoly_;
};

/// True when n divides v, with v = 0 counting as divisible.
[[nodiscard]] bool divides_norm(std::uint64_t n, const Int& v);

/// Level of E_kappa that a newform must have to be tested against kappa; 0 if none.
[[nodiscard]] int kappa_for_level(std::uint64_t level) noexcept;

struct ExponentBound {
  std::vector<std::uint64_t> primes;  ///< primes n >= 7 dividing Norm(a_3 - 4) or Norm(a_3 + 4)
  bool unbounded = false;             ///< one of the norms vanishes
  Int norm_minus4, norm_plus4;
};

/// Stage 1: a_3 = +-4 mod n.
[[nodiscard]] ExponentBound bound_exponent(const NewformClass& form);

struct CongruenceOutcome {
  bool survives = true;
  std::optional<std::uint64_t> witness_p;  ///< first prime at which the form fails
};

/// Stage 2: for each p, n must divide Norm(a_p - 2m) for some |m| <= sqrt(p),
/// or Norm(a_p -+ (p+1)). Primes equal to n or dividing the level are skipped.
[[nodiscard]] CongruenceOutcome congruence_sieve(const NewformClass& form, std::uint64_t n,
                                                 const std::vector<std::uint64_t>& primes);

struct KrausOutcome {
  bool eliminated = false;
  bool bad_reduction_clause = false;   ///< n | Norm(4 - a_p^2)
  std::optional<long> matching_trace;  ///< a trace t with n | Norm(a_p - t)
  std::size_t trace_count = 0;
  std::size_t singular_triples = 0;
};

/// Stage 3 at one prime p = 1 mod n.
[[nodiscard]] KrausOutcome kraus_eliminate(const NewformClass& form, std::uint64_t n, std::uint64_t p, int kappa);
[[nodiscard]] KrausOutcome kraus_eliminate(const NewformClass& form, std::uint64_t n, std::uint64_t p,
                                           const KrausTraceSet& traces);

struct PipelineConfig {
  std::vector<std::uint64_t> stage2_primes;                          ///< default: 11 <= p <= 97
  std::map<std::uint64_t, std::vector<std::uint64_t>> stage3_primes;  ///< n -> Kraus primes

  [[nodiscard]] static PipelineConfig defaults();
  /// Throws ConfigError unless every stage-3 prime is = 1 mod n and coprime to 70n.
  void check() const;
};

struct PairRef {
  std::uint64_t level = 0;
  std::string label;
  std::uint64_t n = 0;
  friend auto operator<=>(const PairRef&, const PairRef&) = default;
};

struct KrausStep {
  std::uint64_t n = 0, p = 0;
  std::size_t tested = 0, eliminated = 0;
  std::vector<long> traces;
  std::size_t singular_triples = 0;
};

struct EliminationReport {
  struct Stage1Entry {
    std::uint64_t level = 0;
    std::string label;
    std::vector<std::uint64_t> primes;
    bool unbounded = false;
  };
  std::vector<Stage1Entry> stage1;
  std::uint64_t stage1_max_n = 0;
  std::vector<PairRef> stage1_pairs;
  std::vector<PairRef> stage2_survivors;
  std::map<PairRef, std::uint64_t> stage2_witness;
  std::vector<KrausStep> stage3_steps;
  std::map<PairRef, std::uint64_t> stage3_witness;
  std::vector<PairRef> final_survivors;
  std::vector<std::string> skipped;  ///< defensive skips, logged

  /// Survivor counts keyed by n then level.
  [[nodiscard]] static std::map<std::uint64_t, std::map<std::uint64_t, std::size_t>> tally(
      const std::vector<PairRef>& pairs);
  [[nodiscard]] json to_json() const;
};

[[nodiscard]] EliminationReport run_pipeline(const NewformStore& store, const PipelineConfig& config);

}  // namespace ap5
