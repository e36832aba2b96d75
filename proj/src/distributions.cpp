#include "seqgini/distributions.hpp"

#include <cmath>

#include "seqgini/errors.hpp"
#include "seqgini/normal.hpp"

namespace seqgini {

std::string family_name(Family family) {
    switch (family) {
        case Family::gamma:
            return "gamma";
        case Family::lognormal:
            return "lognormal";
        case Family::pareto:
            return "pareto";
    }
    throw ConfigError("unknown distribution family");
}

Family family_from_name(const std::string& name) {
    if (name == "gamma") return Family::gamma;
    if (name == "lognormal") return Family::lognormal;
    if (name == "pareto") return Family::pareto;
    throw ConfigError("unknown distribution family: " + name);
}

DistributionSpec DistributionSpec::gamma(double shape, double rate) {
    DistributionSpec spec{Family::gamma, shape, rate};
    spec.validate();
    return spec;
}

DistributionSpec DistributionSpec::lognormal(double meanlog, double sdlog) {
    DistributionSpec spec{Family::lognormal, meanlog, sdlog};
    spec.validate();
    return spec;
}

DistributionSpec DistributionSpec::pareto(double scale, double shape) {
    DistributionSpec spec{Family::pareto, scale, shape};
    spec.validate();
    return spec;
}

void DistributionSpec::validate() const {
    if (!(param1 > 0.0) || !std::isfinite(param1) || !(param2 > 0.0) || !std::isfinite(param2)) {
        throw ConfigError("distribution parameters must be positive finite reals");
    }
}

DistributionSpec default_spec(Family family) {
    switch (family) {
        case Family::gamma:
            return DistributionSpec::gamma(2.649, 0.84);
        case Family::lognormal:
            return DistributionSpec::lognormal(2.185, 0.562);
        case Family::pareto:
            return DistributionSpec::pareto(20000.0, 5.0);
    }
    throw ConfigError("unknown distribution family");
}

double sample_normal(Rng& rng) { return norm_quantile(rng.uniform01()); }

namespace {

// Marsaglia-Tsang (2000) for shape >= 1; shapes below 1 are boosted to
// shape+1 and scaled back by U^{1/shape}.
double sample_std_gamma(double shape, Rng& rng) {
    if (shape < 1.0) {
        const double u = rng.uniform01();
        return sample_std_gamma(shape + 1.0, rng) * std::pow(u, 1.0 / shape);
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x;
        double v;
        do {
            x = sample_normal(rng);
            v = 1.0 + c * x;
        } while (v <= 0.0);
        v = v * v * v;
        const double u = rng.uniform01();
        const double x_sq = x * x;
        if (u < 1.0 - 0.0331 * x_sq * x_sq) {
            return d * v;
        }
        if (std::log(u) < 0.5 * x_sq + d * (1.0 - v + std::log(v))) {
            return d * v;
        }
    }
}

}  // namespace

double sample(const DistributionSpec& spec, Rng& rng) {
    spec.validate();
    switch (spec.family) {
        case Family::gamma:
            return sample_std_gamma(spec.param1, rng) / spec.param2;
        case Family::lognormal:
            return std::exp(spec.param1 + spec.param2 * sample_normal(rng));
        case Family::pareto:
            return spec.param1 * std::pow(rng.uniform01(), -1.0 / spec.param2);
    }
    throw ConfigError("unknown distribution family");
}

}  // namespace seqgini
