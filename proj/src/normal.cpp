#include "seqgini/normal.hpp"

#include <cmath>

#include "seqgini/errors.hpp"

namespace seqgini {

namespace {

// Rational approximation of the lower-tail normal quantile, after
// Peter Acklam's algorithm. Absolute error of the raw approximation is
// about 1.15e-9 over (0, 1); the caller refines it with a Newton step.
double quantile_rational(double p) {
    static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                               -2.759285104469687e+02, 1.383577518672690e+02,
                               -3.066479806614716e+01, 2.506628277459239e+00};
    static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                               -1.556989798598866e+02, 6.680131188771972e+01,
                               -1.328068155288572e+01};
    static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                               -2.400758277161838e+00, -2.549732539343734e+00,
                               4.374664141464968e+00,  2.938163982698783e+00};
    static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                               2.445134137142996e+00, 3.754408661907416e+00};
    constexpr double p_low = 0.02425;

    if (p < p_low) {
        const double q = std::sqrt(-2.0 * std::log(p));
        return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
               ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    if (p <= 1.0 - p_low) {
        const double q = p - 0.5;
        const double r = q * q;
        return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
               (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
    }
    const double q = std::sqrt(-2.0 * std::log(1.0 - p));
    return -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
}

constexpr double kInvSqrt2 = 0.70710678118654752440;
constexpr double kSqrt2Pi = 2.50662827463100050242;

}  // namespace

double normal_cdf(double x) {
    if (x < 0.0) {
        return 0.5 * std::erfc(-x * kInvSqrt2);
    }
    return 1.0 - 0.5 * std::erfc(x * kInvSqrt2);
}

double normal_sf(double x) { return normal_cdf(-x); }

double norm_quantile(double p) {
    if (!(p > 0.0 && p < 1.0)) {
        throw DomainError("norm_quantile: p must lie strictly inside (0, 1)");
    }
    if (p == 0.5) {
        return 0.0;
    }
    // Evaluate on the lower half and mirror, so the Newton residual
    // Phi(x) - p is always a difference of numbers of comparable size.
    if (p > 0.5) {
        return -norm_quantile(1.0 - p);
    }
    double x = quantile_rational(p);
    // One Newton step: x <- x - (Phi(x) - p) / phi(x). Here x <= 0, so
    // Phi(x) = erfc(-x/sqrt2)/2 carries no cancellation.
    const double err = 0.5 * std::erfc(-x * kInvSqrt2) - p;
    x -= err * kSqrt2Pi * std::exp(0.5 * x * x);
    return x;
}

double z_quantile(double p) {
    if (!(p > 0.0 && p < 1.0)) {
        throw DomainError("z_quantile: p must lie strictly inside (0, 1)");
    }
    return -norm_quantile(p);
}

}  // namespace seqgini
