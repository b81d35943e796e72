#include "linedet/prob.hpp"

#include <atomic>
#include <cmath>
#include <stdexcept>

#include "linedet/rng.hpp"

namespace linedet {

namespace {

std::atomic<long> g_clamp_events{0};

double clamp_unit(double v) {
    if (v < 0 || v > 1) {
        g_clamp_events.fetch_add(1, std::memory_order_relaxed);
        return v < 0 ? 0.0 : 1.0;
    }
    return v;
}

// Exact binomial coefficient; valid for M <= 64 (C(64,32) fits in 64 bits,
// the intermediate product needs 128).
std::uint64_t choose_u64(long M, long k) {
    if (k > M - k) k = M - k;
    std::uint64_t r = 1;
    for (long i = 0; i < k; ++i) {
        const unsigned __int128 t =
            static_cast<unsigned __int128>(r) * static_cast<std::uint64_t>(M - i);
        r = static_cast<std::uint64_t>(t / static_cast<std::uint64_t>(i + 1));
    }
    return r;
}

}  // namespace

long prob_clamp_count() { return g_clamp_events.load(); }
void reset_prob_clamp_count() { g_clamp_events.store(0); }

double p_hit(long n, long N) {
    if (N < 2) throw std::invalid_argument("p_hit: N must be >= 2");
    if (n < 0 || n > N) throw std::invalid_argument("p_hit: need 0 <= n <= N");
    return clamp_unit(static_cast<double>(n) * (n - 1) /
                      (static_cast<double>(N) * (N - 1)));
}

double p_hit_improved(long n, long N, double i_c) {
    const double pop = static_cast<double>(N) * i_c;
    if (pop < 2) throw std::invalid_argument("p_hit_improved: N*i_c must be >= 2");
    if (n < 0 || static_cast<double>(n) > pop)
        throw std::invalid_argument("p_hit_improved: need n <= N*i_c");
    return clamp_unit(static_cast<double>(n) * (n - 1) / (pop * (pop - 1)));
}

double p_noise(long m, long N) { return p_hit(m, N); }

double p_noise_improved(long m, long N, double i_c) {
    const double pop = static_cast<double>(N) * i_c;
    if (pop < 2) throw std::invalid_argument("p_noise_improved: N*i_c must be >= 2");
    if (m < 0 || m > N) throw std::invalid_argument("p_noise_improved: need 0 <= m <= N");
    const double surviving = static_cast<double>(m) * i_c;
    return clamp_unit(surviving * (surviving - 1) / (pop * (pop - 1)));
}

double binom_pmf(long M, long k, double p) {
    if (M < 0 || k < 0 || k > M)
        throw std::invalid_argument("binom_pmf: need 0 <= k <= M");
    if (p < 0 || p > 1) throw std::invalid_argument("binom_pmf: p must be in [0, 1]");
    if (p == 0) return k == 0 ? 1.0 : 0.0;
    if (p == 1) return k == M ? 1.0 : 0.0;
    if (M <= 64) {
        return static_cast<double>(choose_u64(M, k)) * std::pow(p, k) *
               std::pow(1 - p, M - k);
    }
    const double log_pmf = std::lgamma(M + 1.0) - std::lgamma(k + 1.0) -
                           std::lgamma(M - k + 1.0) + k * std::log(p) +
                           (M - k) * std::log1p(-p);
    return std::exp(log_pmf);
}

double p_miss(long M, long k0, double p) {
    if (k0 < 0 || k0 > M) throw std::invalid_argument("p_miss: need 0 <= k0 <= M");
    double cdf = 0;
    for (long k = 0; k <= k0; ++k) cdf += binom_pmf(M, k, p);
    return clamp_unit(cdf);
}

double p_false(long M, long k0, double p) { return 1.0 - p_miss(M, k0, p); }

MonteCarloEstimate monte_carlo_pair_hit(long population, long target, long trials,
                                        std::uint64_t seed, int partitions) {
    if (population < 2)
        throw std::invalid_argument("monte_carlo_pair_hit: population must be >= 2");
    if (target < 0 || target > population)
        throw std::invalid_argument("monte_carlo_pair_hit: bad target count");
    if (trials < 1 || partitions < 1 || partitions > trials)
        throw std::invalid_argument("monte_carlo_pair_hit: bad trials/partitions");

    long hits = 0;
    const long chunk = trials / partitions;
    const long extra = trials % partitions;
    for (int part = 0; part < partitions; ++part) {
        SplitMix64 rng(SplitMix64::substream_seed(seed, part));
        const long local_trials = chunk + (part < extra ? 1 : 0);
        const auto n = static_cast<std::uint64_t>(population);
        for (long t = 0; t < local_trials; ++t) {
            const std::uint64_t i = rng.bounded(n);
            std::uint64_t j = rng.bounded(n - 1);
            if (j >= i) ++j;
            if (i < static_cast<std::uint64_t>(target) &&
                j < static_cast<std::uint64_t>(target))
                ++hits;
        }
    }
    MonteCarloEstimate est;
    est.hits = hits;
    est.trials = trials;
    est.p_hat = static_cast<double>(hits) / static_cast<double>(trials);
    est.std_error = std::sqrt(est.p_hat * (1 - est.p_hat) / static_cast<double>(trials));
    return est;
}

MonteCarloEstimate monte_carlo_hit(const SamplingScenario& scenario, long trials,
                                   std::uint64_t seed, int partitions) {
    const long population = std::lround(static_cast<double>(scenario.N) * scenario.i_c);
    return monte_carlo_pair_hit(population, scenario.n, trials, seed, partitions);
}

}  // namespace linedet
