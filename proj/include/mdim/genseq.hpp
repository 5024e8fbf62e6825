#ifndef MDIM_GENSEQ_HPP
#define MDIM_GENSEQ_HPP

#include <cstdint>
#include <string>

#include "mdim/measures.hpp"
#include "mdim/word.hpp"

namespace mdim {

/// Counter-based generator: output i is the splitmix64 finalizer applied to
/// seed + (i+1)*golden-gamma. Stateless per draw, so positions and streams are
/// independent and the whole stream is reproducible from (seed, counter).
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

  /// Derive an independent stream for (seed, stream_id).
  static CounterRng stream(std::uint64_t seed, std::uint64_t stream_id);

  std::uint64_t bits(std::uint64_t counter) const;
  /// Uniform double in [0,1) with 53 random bits.
  double uniform(std::uint64_t counter) const;

  static constexpr const char* kName = "splitmix64-counter-v1";

 private:
  std::uint64_t seed_;
};

struct CoupledWords {
  Word u;
  Word w;
  // provenance
  std::string measure_desc;
  std::uint64_t seed = 0;
  std::size_t n = 0;
  std::string prng = CounterRng::kName;
};

/// One word sampled from a (plain-alphabet) longitudinal product measure by
/// inverse CDF, one uniform variate per position.
Word sample_word(const MeasureSeq& m, std::size_t n, std::uint64_t seed);

/// Coupled pair sampled from a pair-alphabet measure sequence.
CoupledWords sample_coupled(const MeasureSeq& m, std::size_t n,
                            std::uint64_t seed,
                            std::string measure_desc = "");

/// Low-discrepancy member of FREQ_a: at each step emit the symbol with the
/// largest remaining quota a(s)*(i+1) - count(s), ties to the smallest symbol.
/// Every prefix satisfies max_s |count(s) - n*a(s)| <= k.
Word freq_sequence(const Pmf& a, std::size_t n);

/// Exact rational value of 0.w in base k: sum w[i] * k^-(i+1), lowest terms.
struct Rational {
  std::string num;  // decimal digit strings (arbitrary precision)
  std::string den;
  std::string decimal;  // rendering to the requested digit count
};
Rational real_representation(const Word& w, int alphabet, int precision_digits);

}  // namespace mdim

#endif
