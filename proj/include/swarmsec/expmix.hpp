#pragma once

#include <vector>

// Finite mixtures  offset + sum_i c_i x^{k_i} e^{-a_i x}  on [0, inf).
// The squared-envelope fading densities, their CDFs, and everything the
// relay-selection and combining layers derive from them stay inside this
// family: it is closed under sums, products, integer powers, derivatives,
// and equal-rate convolution.

namespace swarmsec {

struct ExpPolyTerm {
    double coef;
    int power;    // k >= 0
    double rate;  // a >= 0
};

class ExpPolyMix {
public:
    ExpPolyMix() = default;
    static ExpPolyMix constant(double c);

    void add_term(double coef, int power, double rate);

    double offset() const { return offset_; }
    const std::vector<ExpPolyTerm>& terms() const { return terms_; }
    int max_power() const;

    double operator()(double x) const;

    ExpPolyMix& operator+=(const ExpPolyMix& rhs);
    ExpPolyMix& operator-=(const ExpPolyMix& rhs);
    ExpPolyMix& operator*=(double s);

    ExpPolyMix pow(int n) const;
    ExpPolyMix derivative() const;

    // Merges terms with equal power and nearly equal rate and drops exact
    // zeros.  Rates that should coincide (integer multiples of one fading
    // rate) can drift apart by ulps during products, hence the tolerance.
    void consolidate(double rate_rel_tol = 1e-9);

    double integral_zero_to(double x) const;
    double integral_to_inf() const;  // requires offset == 0 and rates > 0
    double mean() const;             // int_0^inf x f(x) dx

private:
    double offset_ = 0.0;
    std::vector<ExpPolyTerm> terms_;
};

ExpPolyMix operator+(ExpPolyMix lhs, const ExpPolyMix& rhs);
ExpPolyMix operator-(ExpPolyMix lhs, const ExpPolyMix& rhs);
ExpPolyMix operator*(const ExpPolyMix& lhs, const ExpPolyMix& rhs);
ExpPolyMix operator*(double s, ExpPolyMix m);

// Convolution of two densities whose terms all share one common rate and
// whose offsets are zero.  conv(x^i, x^j) e^{-ax} = i! j! / (i+j+1)! x^{i+j+1}.
ExpPolyMix convolve_equal_rate(const ExpPolyMix& f, const ExpPolyMix& g);

// n-fold convolution of f with itself (n >= 1 returns f convolved n times,
// so n = 1 is f itself).
ExpPolyMix convolve_iterated_equal_rate(const ExpPolyMix& f, int n);

}  // namespace swarmsec
