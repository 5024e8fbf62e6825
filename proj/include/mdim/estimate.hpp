#ifndef MDIM_ESTIMATE_HPP
#define MDIM_ESTIMATE_HPP

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "mdim/genseq.hpp"
#include "mdim/measures.hpp"
#include "mdim/word.hpp"

namespace mdim {

/// Information density sampled along a strictly increasing prefix schedule.
/// Values are normalized by log2 k and may stray slightly outside [0,1];
/// final dimension estimates are clamped.
struct DensityTrace {
  std::vector<std::size_t> schedule;
  std::vector<double> values;
};

/// Geometric prefix schedule n_j = ceil(1024 * 1.3^j), capped at n_max
/// (n_max itself is always the last point).
std::vector<std::size_t> default_schedule(std::size_t n_max);

/// Abstract code-length functional standing in for Kolmogorov complexity.
struct Compressor {
  std::string name;
  std::function<double(const Word&, int /*alphabet*/)> code_length_bits;
};

/// Adaptive Krichevsky-Trofimov code length in bits:
/// sum_i log2 [(i + k/2) / (count_i(w[i]) + 1/2)].
/// For i.i.d. words, length/n approaches the entropy rate.
double kt_code_length(const Word& w, int alphabet);

Compressor kt_compressor();

/// Plug-in entropy rate (bits/symbol) from non-overlapping blocks of length
/// block_len. Requires block_len * log2(k) <= 24.
double plugin_entropy_rate(const Word& w, int alphabet, int block_len);

/// Normalized mutual-information density of equal-length words:
/// [H(u) + H(w) - H(pair word)] / log2 k with block plug-in entropies.
/// Raw value (not clamped); nonnegative by construction of the plug-in.
double mi_density_plugin(const Word& u, const Word& w, int alphabet,
                         int block_len);

/// Compressor-based density: [C(u) + C(w) - C(pair word)] / (n log2 k).
/// May be negative.
double mi_density_compressor(const Word& u, const Word& w, int alphabet,
                             const Compressor& c);

DensityTrace mi_density_trace(const Word& u, const Word& w, int alphabet,
                              int block_len,
                              const std::vector<std::size_t>& schedule);

struct DimensionEstimate {
  double lower;  // min over the tail half of the schedule, clamped to [0,1]
  double upper;  // max over the tail half, clamped to [0,1]
  double lower_raw;
  double upper_raw;
};

/// Finite-schedule proxy for liminf/limsup: extremes over the tail half of
/// the trace. Requires at least 4 points.
DimensionEstimate dimension_estimate(const DensityTrace& trace);

/// Cumulative log2 likelihood ratio mu_num(prefix)/mu_den(prefix) for each
/// prefix of the coupled pair; entry i is the capital in bits after i+1
/// positions of the martingale betting for m_num against m_den.
/// Throws on a zero denominator probability at an observed pair.
std::vector<double> likelihood_ratio_log(const MeasureSeq& m_num,
                                         const MeasureSeq& m_den,
                                         const CoupledWords& cw);

}  // namespace mdim

#endif
