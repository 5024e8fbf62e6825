#include "mdim/genseq.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace mdim {

namespace {

constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

CounterRng CounterRng::stream(std::uint64_t seed, std::uint64_t stream_id) {
  return CounterRng(mix64(seed ^ mix64(stream_id + kGamma)));
}

std::uint64_t CounterRng::bits(std::uint64_t counter) const {
  return mix64(seed_ + (counter + 1) * kGamma);
}

double CounterRng::uniform(std::uint64_t counter) const {
  return double(bits(counter) >> 11) * 0x1.0p-53;
}

namespace {

void fill_cdf(const Pmf& p, std::vector<double>& cdf) {
  cdf.resize(p.size());
  double acc = 0.0;
  for (int i = 0; i < p.size(); ++i) {
    acc += p(i);
    cdf[i] = acc;
  }
  cdf.back() = 1.0;
}

Symbol draw(const std::vector<double>& cdf, double u) {
  auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
  if (it == cdf.end()) --it;
  return static_cast<Symbol>(it - cdf.begin());
}

}  // namespace

Word sample_word(const MeasureSeq& m, std::size_t n, std::uint64_t seed) {
  CounterRng rng(seed);
  Word out(n);
  const RhoSchedule* rs = m.rho();
  if (rs && rs->family() != RhoSchedule::Family::Const) {
    // per-position 4-symbol CDF straight from rho_n
    for (std::size_t i = 0; i < n; ++i) {
      double rho = rs->at(i);
      double d = (1.0 + rho) / 4.0;
      double o = (1.0 - rho) / 4.0;
      double u = rng.uniform(i);
      // flat order (0,0),(0,1),(1,0),(1,1)
      if (u < d) out[i] = 0;
      else if (u < d + o) out[i] = 1;
      else if (u < d + 2 * o) out[i] = 2;
      else out[i] = 3;
    }
    return out;
  }
  std::size_t stat = m.stationary_from();
  std::vector<double> cdf;
  std::vector<double> tail_cdf;
  fill_cdf(m.flat_at(stat == std::size_t(-1) ? 0 : stat), tail_cdf);
  for (std::size_t i = 0; i < n; ++i) {
    const std::vector<double>* use = &tail_cdf;
    if (i < stat) {
      fill_cdf(m.flat_at(i), cdf);
      use = &cdf;
    }
    out[i] = draw(*use, rng.uniform(i));
  }
  return out;
}

CoupledWords sample_coupled(const MeasureSeq& m, std::size_t n,
                            std::uint64_t seed, std::string measure_desc) {
  if (!m.pair_alphabet())
    throw std::invalid_argument("sample_coupled needs a pair-alphabet measure");
  Word flat = sample_word(m, n, seed);
  int k = m.base_alphabet();
  CoupledWords cw;
  cw.u.resize(n);
  cw.w.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto [a, b] = pair_decode(flat[i], k);
    cw.u[i] = a;
    cw.w[i] = b;
  }
  cw.measure_desc = std::move(measure_desc);
  cw.seed = seed;
  cw.n = n;
  return cw;
}

Word freq_sequence(const Pmf& a, std::size_t n) {
  int k = a.size();
  Word out(n);
  std::vector<double> count(k, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    int best = 0;
    double best_deficit = a(0) * double(i + 1) - count[0];
    for (int s = 1; s < k; ++s) {
      double d = a(s) * double(i + 1) - count[s];
      if (d > best_deficit) {
        best = s;
        best_deficit = d;
      }
    }
    out[i] = static_cast<Symbol>(best);
    count[best] += 1.0;
  }
  return out;
}

Rational real_representation(const Word& w, int alphabet,
                             int precision_digits) {
  if (w.empty()) throw std::invalid_argument("real_representation: empty word");
  check_symbols(w, alphabet);
  using boost::multiprecision::cpp_int;
  cpp_int num = 0;
  cpp_int den = 1;
  for (Symbol s : w) {
    num = num * alphabet + s;
    den *= alphabet;
  }
  cpp_int g = boost::multiprecision::gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  std::ostringstream dec;
  dec << "0.";
  cpp_int rem = num;
  for (int i = 0; i < precision_digits; ++i) {
    rem *= 10;
    dec << char('0' + int(rem / den));
    rem %= den;
  }
  Rational r;
  r.num = num.str();
  r.den = den.str();
  r.decimal = dec.str();
  return r;
}

}  // namespace mdim
