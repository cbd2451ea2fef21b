#pragma once

namespace fpt {

// Compensated summation; the normalizer sums add thousands of terms spanning
// many orders of magnitude.
struct KahanSum {
    double sum = 0;
    double carry = 0;

    void add(double x) {
        const double y = x - carry;
        const double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
    double value() const { return sum; }
};

}  // namespace fpt
