#include "swarmsec/composite.hpp"

#include <stdexcept>

namespace swarmsec {

ExpPolyMix max_iid_cdf(const ExpPolyMix& cdf, int n) {
    if (n < 1) throw std::domain_error("max_iid_cdf: n must be >= 1");
    return cdf.pow(n);
}

ExpPolyMix max_iid_pdf(const ExpPolyMix& pdf, const ExpPolyMix& cdf, int n) {
    if (n < 1) throw std::domain_error("max_iid_pdf: n must be >= 1");
    ExpPolyMix out = static_cast<double>(n) * (pdf * cdf.pow(n - 1));
    out.consolidate();
    return out;
}

ExpPolyMix sum_iid_pdf(const ExpPolyMix& pdf, int n) {
    return convolve_iterated_equal_rate(pdf, n);
}

}  // namespace swarmsec
