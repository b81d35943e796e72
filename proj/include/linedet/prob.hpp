#ifndef LINEDET_PROB_HPP
#define LINEDET_PROB_HPP

#include <cstdint>

namespace linedet {

/**
 * Parameters of the pair-sampling detection model: a population of N
 * candidate pixels holds n pixels of a true line and m pixels of a spurious
 * structure; i_c is the region segmentation coefficient; M sampling
 * experiments are run with detection-count cutoff k0.
 */
struct SamplingScenario {
    long N = 0;
    long n = 0;
    long m = 0;
    double i_c = 1.0;
    long M = 1;
    long k0 = 0;
};

/// Probability that one random pixel pair lies on the n-pixel line:
/// n(n-1) / (N(N-1)).
double p_hit(long n, long N);

/// Same probability after region segmentation shrinks the population to
/// N*i_c (the line lies wholly inside the region):
/// n(n-1) / ((N*i_c)(N*i_c - 1)), clamped to [0, 1].
double p_hit_improved(long n, long N, double i_c);

/// Probability that a pair lies on an m-pixel spurious structure.
double p_noise(long m, long N);

/// Segmented variant; spurious pixels are modeled as uniformly spread, so
/// only the fraction i_c survives masking:
/// (m*i_c)(m*i_c - 1) / ((N*i_c)(N*i_c - 1)), clamped to [0, 1].
double p_noise_improved(long m, long N, double i_c);

/// Binomial pmf C(M,k) p^k (1-p)^(M-k). Exact 64-bit coefficients for
/// M <= 64, log-domain evaluation above.
double binom_pmf(long M, long k, double p);

/// Probability of detecting the line at most k0 times in M experiments
/// (the miss probability): sum_{k=0}^{k0} pmf.
double p_miss(long M, long k0, double p);

/// Complement of p_miss: probability a structure is reported more than k0
/// times (the false-detection probability when p is a noise probability).
double p_false(long M, long k0, double p);

struct MonteCarloEstimate {
    double p_hat = 0;
    double std_error = 0;
    long hits = 0;
    long trials = 0;
};

/**
 * Literal simulation of the pair-sampling experiment: `trials` uniform
 * unordered pairs of distinct indices from a `population`-pixel set whose
 * first `target` indices are the structure of interest. Trials may be split
 * into `partitions` independently seeded substreams; the result is
 * deterministic for a fixed (seed, partitions) pair.
 */
MonteCarloEstimate monte_carlo_pair_hit(long population, long target, long trials,
                                        std::uint64_t seed, int partitions = 1);

/// Pair-hit simulation of the scenario's line: population N*i_c holding the
/// n line pixels (whole image when i_c = 1).
MonteCarloEstimate monte_carlo_hit(const SamplingScenario& scenario, long trials,
                                   std::uint64_t seed, int partitions = 1);

/// Number of [0,1] clamping events since process start (model evaluations
/// whose raw value fell outside [0,1]).
long prob_clamp_count();
void reset_prob_clamp_count();

}  // namespace linedet

#endif  // LINEDET_PROB_HPP
