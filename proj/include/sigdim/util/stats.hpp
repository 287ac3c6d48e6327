#pragma once

#include <cstddef>
#include <vector>

namespace sigdim {

// Neumaier-compensated accumulator; keeps sums independent of input order
// down to ~1 ulp.
class CompensatedSum {
public:
    void add(double x) {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

double mean(const std::vector<double>& v);

// Sample variance (denominator n-1); two-pass.
double sample_variance(const std::vector<double>& v);

// Pearson correlation of two equal-length spans. Returns false (and leaves
// `out` untouched) when either side is constant.
bool pearson(const double* x, const double* y, std::size_t n, double& out);

double normal_cdf(double x);

// Inverse of normal_cdf, solved numerically (bisection + Newton polish);
// accurate to ~1e-12 for p in (0, 1).
double normal_quantile(double p);

// log C(n, k)
double log_choose(unsigned n, unsigned k);

// P[Bin(n, 1/2) >= k] and P[Bin(n, 1/2) <= k], exact.
double binom_tail_ge(unsigned n, unsigned k);
double binom_tail_le(unsigned n, unsigned k);

}  // namespace sigdim
