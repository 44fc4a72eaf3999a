#pragma once

#include "swarmsec/expmix.hpp"

namespace swarmsec {

// Order statistics and sums of n i.i.d. nonnegative channel gains, staying
// inside the exponential-polynomial family.

// CDF of max of n i.i.d. draws: F^n.
ExpPolyMix max_iid_cdf(const ExpPolyMix& cdf, int n);

// pdf of max of n i.i.d. draws: n f F^{n-1}.
ExpPolyMix max_iid_pdf(const ExpPolyMix& pdf, const ExpPolyMix& cdf, int n);

// pdf of the sum of n i.i.d. draws whose terms share one exponential rate.
ExpPolyMix sum_iid_pdf(const ExpPolyMix& pdf, int n);

}  // namespace swarmsec
