#pragma once

namespace seqgini {

/// Standard normal CDF, evaluated through erfc so both tails keep full
/// relative accuracy.
double normal_cdf(double x);

/// Upper tail probability P(Z > x) = 1 - normal_cdf(x).
double normal_sf(double x);

/// Lower-tail standard normal quantile: returns x with normal_cdf(x) = p.
/// Rational approximation polished with one Newton step; absolute error
/// is well below 1e-12 across (0, 1).
///
/// Throws DomainError unless 0 < p < 1.
double norm_quantile(double p);

/// Upper p-th quantile of the standard normal: z with normal_cdf(z) = 1 - p.
/// Throws DomainError unless 0 < p < 1.
double z_quantile(double p);

}  // namespace seqgini
