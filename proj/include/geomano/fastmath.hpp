#pragma once

#include <bit>
#include <cstdint>
#include <cstddef>

namespace geomano {

// exp with ~1 ulp accuracy written so the array loops below autovectorize
// (libm calls block vectorization and dominate softmax/activation cost).
// Range-reduced x = k*ln2 + r, |r| <= ln2/2, degree-12 Taylor on r, scale by
// 2^k through the exponent bits. Arguments below -745 flush to 0, above 709
// saturate to the x=709 value; callers keep arguments in safe range anyway.
inline double fast_exp(double x) {
    if (x < -745.0) return 0.0;
    if (x > 709.0) x = 709.0;
    const double inv_ln2 = 1.4426950408889634073599246810019;
    const double ln2_hi = 6.93147180369123816490e-01;
    const double ln2_lo = 1.90821492927058770002e-10;
    // round-to-nearest via the 1.5*2^52 magic constant; low 32 bits hold k
    const double shifted = x * inv_ln2 + 6755399441055744.0;
    const std::int64_t k = static_cast<std::int32_t>(std::bit_cast<std::int64_t>(shifted));
    const double kd = static_cast<double>(k);
    const double r = (x - kd * ln2_hi) - kd * ln2_lo;
    // Taylor coefficients 1/n!
    double p = 2.08767569878680989792e-09; // 1/12!
    p = p * r + 2.50521083854417187751e-08;
    p = p * r + 2.75573192239858906526e-07;
    p = p * r + 2.75573192239858925110e-06;
    p = p * r + 2.48015873015873015873e-05;
    p = p * r + 1.98412698412698412698e-04;
    p = p * r + 1.38888888888888894069e-03;
    p = p * r + 8.33333333333333321769e-03;
    p = p * r + 4.16666666666666666435e-02;
    p = p * r + 1.66666666666666666667e-01;
    p = p * r + 5.00000000000000000000e-01;
    p = p * r + 1.0;
    p = p * r + 1.0;
    const std::int64_t bits = std::bit_cast<std::int64_t>(p) + (k << 52);
    return std::bit_cast<double>(bits);
}

inline void vexp(const double* x, double* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = fast_exp(x[i]);
}

// logistic(x) = 1/(1+e^-x), overflow-safe (exp argument always <= 0).
inline double logistic(double x) {
    if (x >= 0.0) {
        return 1.0 / (1.0 + fast_exp(-x));
    }
    const double e = fast_exp(x);
    return e / (1.0 + e);
}

} // namespace geomano
