#ifndef MDIM_INFO_HPP
#define MDIM_INFO_HPP

#include "mdim/measures.hpp"
#include "mdim/word.hpp"

namespace mdim {

// All logarithms base 2; results are in bits unless noted. The 0*log(0) = 0
// convention applies throughout. Divergences against measures with missing
// support return +infinity rather than throwing. Sums run index-ascending
// with compensated (Kahan) accumulation so results are reproducible.

/// Shannon entropy H(a), in [0, log2 k].
double entropy(const Pmf& a);

/// Binary entropy of a single probability.
double binary_entropy(double p);

/// Shannon mutual information between the marginals of j.
double mutual_information(const JointPmf& j);

/// Kullback-Leibler divergence D(a||b); +infinity when b misses support of a.
double kl_divergence(const Pmf& a, const Pmf& b);

/// Cross entropy = H(a) + D(a||b) = sum_a a(x) log2 1/b(x).
double cross_entropy(const Pmf& a, const Pmf& b);

/// Self-information l_b(w) = sum_i log2 1/b(w[i]); +infinity on zero-prob
/// symbols. Additive over concatenation in the fixed accumulation order.
double self_information(const Pmf& b, const Word& w);

/// Pointwise mutual information log2 [ mu(u,w) / (mu1(u) mu2(w)) ] for a
/// pair-alphabet measure sequence, accumulated position-wise in log space.
/// May be negative; -infinity on a zero-probability pair.
double pointwise_mi(const MeasureSeq& m, const Word& u, const Word& w);

/// Hellinger distance (dimensionless), in [0, sqrt(2)].
double hellinger(const Pmf& a, const Pmf& b);

}  // namespace mdim

#endif
