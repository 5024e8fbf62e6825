#include "mdim/estimate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mdim {

namespace {

class Accumulator {
 public:
  void add(double x) {
    double y = x - comp_;
    double t = sum_ + y;
    comp_ = (t - sum_) - y;
    sum_ = t;
  }
  double value() const { return sum_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

// Plug-in entropy of a count vector, in bits per draw. Nonzero counts are
// summed in sorted order, so the result depends only on the count multiset;
// this makes the pair-word entropy invariant under swapping u and w.
double counts_entropy(std::vector<std::uint32_t>& counts, std::uint64_t total) {
  if (total == 0) return 0.0;
  std::sort(counts.begin(), counts.end());
  Accumulator acc;
  for (std::uint32_t c : counts) {
    if (c == 0) continue;
    acc.add(double(c) * std::log2(double(c)));
  }
  double h = std::log2(double(total)) - acc.value() / double(total);
  return std::max(0.0, h);
}

std::uint64_t block_table_size(int alphabet, int block_len) {
  double bits = double(block_len) * std::log2(double(alphabet));
  if (bits > 24.0 + 1e-9)
    throw std::length_error("block_len too large: table exceeds 2^24");
  std::uint64_t size = 1;
  for (int i = 0; i < block_len; ++i) size *= std::uint64_t(alphabet);
  return size;
}

// Non-overlapping block counts of w[0..n), keeping only nonzero cells.
std::vector<std::uint32_t> block_counts(const Word& w, std::size_t n,
                                        int alphabet, int block_len,
                                        std::uint64_t& blocks_out) {
  std::uint64_t table = block_table_size(alphabet, block_len);
  std::vector<std::uint32_t> counts(table, 0);
  std::size_t blocks = n / std::size_t(block_len);
  for (std::size_t b = 0; b < blocks; ++b) {
    std::uint64_t idx = 0;
    for (int j = 0; j < block_len; ++j)
      idx = idx * std::uint64_t(alphabet) + w[b * block_len + j];
    ++counts[idx];
  }
  blocks_out = blocks;
  std::vector<std::uint32_t> nz;
  nz.reserve(256);
  for (std::uint32_t c : counts)
    if (c) nz.push_back(c);
  return nz;
}

double block_entropy_rate(const Word& w, std::size_t n, int alphabet,
                          int block_len) {
  std::uint64_t blocks = 0;
  auto nz = block_counts(w, n, alphabet, block_len, blocks);
  return counts_entropy(nz, blocks) / double(block_len);
}

// Per-position flat probability with a cheap path for rho families and
// stationary tails.
class FlatProber {
 public:
  explicit FlatProber(const MeasureSeq& m)
      : m_(m), rs_(m.rho()), stat_(m.stationary_from()),
        tail_(stationary_tail(m)) {}

  double at(std::size_t i, Symbol s) const {
    if (rs_ && rs_->family() != RhoSchedule::Family::Const) {
      double rho = rs_->at(i);
      return (s == 0 || s == 3) ? (1.0 + rho) / 4.0 : (1.0 - rho) / 4.0;
    }
    if (i >= stat_) return (*tail_)(s);
    return m_.flat_at(i)(s);
  }

 private:
  static std::optional<Pmf> stationary_tail(const MeasureSeq& m) {
    std::size_t stat = m.stationary_from();
    if (stat == std::size_t(-1)) return std::nullopt;
    return m.flat_at(stat);
  }
  const MeasureSeq& m_;
  const RhoSchedule* rs_;
  std::size_t stat_;
  std::optional<Pmf> tail_;
};

}  // namespace

std::vector<std::size_t> default_schedule(std::size_t n_max) {
  std::vector<std::size_t> s;
  double x = 1024.0;
  while (true) {
    std::size_t n = std::size_t(std::ceil(x));
    if (n >= n_max) break;
    s.push_back(n);
    x *= 1.3;
  }
  if (s.empty() || s.back() != n_max) s.push_back(n_max);
  return s;
}

double kt_code_length(const Word& w, int alphabet) {
  check_symbols(w, alphabet);
  std::vector<std::uint64_t> counts(alphabet, 0);
  Accumulator acc;
  for (std::size_t i = 0; i < w.size(); ++i) {
    double num = double(i) + double(alphabet) / 2.0;
    double den = double(counts[w[i]]) + 0.5;
    acc.add(std::log2(num / den));
    ++counts[w[i]];
  }
  return acc.value();
}

Compressor kt_compressor() {
  return Compressor{"kt-v1", [](const Word& w, int k) {
                      return kt_code_length(w, k);
                    }};
}

double plugin_entropy_rate(const Word& w, int alphabet, int block_len) {
  if (block_len < 1) throw std::invalid_argument("block_len >= 1");
  check_symbols(w, alphabet);
  return block_entropy_rate(w, w.size(), alphabet, block_len);
}

double mi_density_plugin(const Word& u, const Word& w, int alphabet,
                         int block_len) {
  if (u.size() != w.size() || u.empty())
    throw std::invalid_argument("mi_density: need equal nonzero lengths");
  std::size_t n = u.size();
  double hu = block_entropy_rate(u, n, alphabet, block_len);
  double hw = block_entropy_rate(w, n, alphabet, block_len);
  Word pw = pair_word(u, w, alphabet);
  double hp = block_entropy_rate(pw, n, alphabet * alphabet, block_len);
  return (hu + hw - hp) / std::log2(double(alphabet));
}

double mi_density_compressor(const Word& u, const Word& w, int alphabet,
                             const Compressor& c) {
  if (u.size() != w.size() || u.empty())
    throw std::invalid_argument("mi_density: need equal nonzero lengths");
  double cu = c.code_length_bits(u, alphabet);
  double cw = c.code_length_bits(w, alphabet);
  // joint code length over the pair alphabet; an order-0 coder on an
  // interleaved stream would be blind to the cross-sequence structure
  double cj = c.code_length_bits(pair_word(u, w, alphabet),
                                 alphabet * alphabet);
  return (cu + cw - cj) / (double(u.size()) * std::log2(double(alphabet)));
}

DensityTrace mi_density_trace(const Word& u, const Word& w, int alphabet,
                              int block_len,
                              const std::vector<std::size_t>& schedule) {
  DensityTrace t;
  Word pw = pair_word(u, w, alphabet);
  double logk = std::log2(double(alphabet));
  for (std::size_t n : schedule) {
    if (n > u.size()) break;
    double hu = block_entropy_rate(u, n, alphabet, block_len);
    double hw = block_entropy_rate(w, n, alphabet, block_len);
    double hp = block_entropy_rate(pw, n, alphabet * alphabet, block_len);
    t.schedule.push_back(n);
    t.values.push_back((hu + hw - hp) / logk);
  }
  return t;
}

DimensionEstimate dimension_estimate(const DensityTrace& trace) {
  std::size_t n = trace.values.size();
  if (n < 4 || trace.schedule.size() != n)
    throw std::invalid_argument("dimension_estimate: need at least 4 points");
  for (std::size_t i = 1; i < n; ++i)
    if (trace.schedule[i] <= trace.schedule[i - 1])
      throw std::invalid_argument("dimension_estimate: schedule not increasing");
  std::size_t from = n / 2;
  double lo = trace.values[from], hi = trace.values[from];
  for (std::size_t i = from; i < n; ++i) {
    lo = std::min(lo, trace.values[i]);
    hi = std::max(hi, trace.values[i]);
  }
  return {std::clamp(lo, 0.0, 1.0), std::clamp(hi, 0.0, 1.0), lo, hi};
}

std::vector<double> likelihood_ratio_log(const MeasureSeq& m_num,
                                         const MeasureSeq& m_den,
                                         const CoupledWords& cw) {
  if (!m_num.pair_alphabet() || !m_den.pair_alphabet())
    throw std::invalid_argument("likelihood_ratio_log needs pair measures");
  int k = m_num.base_alphabet();
  if (m_den.base_alphabet() != k)
    throw std::invalid_argument("likelihood_ratio_log: alphabet mismatch");
  FlatProber num(m_num), den(m_den);
  std::vector<double> capital(cw.n);
  double acc = 0.0;
  for (std::size_t i = 0; i < cw.n; ++i) {
    Symbol s = pair_encode(cw.u[i], cw.w[i], k);
    double pd = den.at(i, s);
    if (pd == 0.0)
      throw std::domain_error(
          "likelihood_ratio_log: denominator measure is singular on an "
          "observed pair");
    // telescoping: each prefix value is the previous plus one position
    acc += std::log2(num.at(i, s) / pd);
    capital[i] = acc;
  }
  return capital;
}

}  // namespace mdim
