#pragma once

#include <string>

#include "seqgini/random.hpp"

namespace seqgini {

enum class Family { gamma, lognormal, pareto };

std::string family_name(Family family);
Family family_from_name(const std::string& name);

/// A parametrized income distribution.
///
/// Parameter meanings per family:
///   gamma     - shape k, rate lambda
///   lognormal - meanlog, sdlog (log-scale mean and standard deviation)
///   pareto    - scale x_m (support lower bound), shape a
struct DistributionSpec {
    Family family = Family::gamma;
    double param1 = 1.0;
    double param2 = 1.0;

    static DistributionSpec gamma(double shape, double rate);
    static DistributionSpec lognormal(double meanlog, double sdlog);
    static DistributionSpec pareto(double scale, double shape);

    /// Throws ConfigError unless both parameters are positive.
    void validate() const;
};

/// Paper defaults: gamma(2.649, 0.84), lognormal(2.185, 0.562),
/// pareto(20000, 5).
DistributionSpec default_spec(Family family);

/// Standard normal draw by inversion of uniform01 through the polished
/// rational quantile; one uniform per variate, bit-reproducible.
double sample_normal(Rng& rng);

/// One draw from the distribution. Gamma uses Marsaglia-Tsang squeeze
/// rejection (any shape > 0), lognormal exponentiates a normal draw,
/// Pareto inverts the CDF.
double sample(const DistributionSpec& spec, Rng& rng);

}  // namespace seqgini
