#include "swarmsec/expmix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "swarmsec/specfun.hpp"

namespace swarmsec {

namespace {

double factorial(int n) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

}  // namespace

ExpPolyMix ExpPolyMix::constant(double c) {
    ExpPolyMix m;
    m.offset_ = c;
    return m;
}

void ExpPolyMix::add_term(double coef, int power, double rate) {
    if (power < 0) throw std::domain_error("ExpPolyMix: power must be >= 0");
    if (rate < 0.0) throw std::domain_error("ExpPolyMix: rate must be >= 0");
    if (coef != 0.0) terms_.push_back({coef, power, rate});
}

int ExpPolyMix::max_power() const {
    int p = 0;
    for (const auto& t : terms_) p = std::max(p, t.power);
    return p;
}

double ExpPolyMix::operator()(double x) const {
    double s = offset_;
    for (const auto& t : terms_)
        s += t.coef * std::pow(x, t.power) * std::exp(-t.rate * x);
    return s;
}

ExpPolyMix& ExpPolyMix::operator+=(const ExpPolyMix& rhs) {
    offset_ += rhs.offset_;
    terms_.insert(terms_.end(), rhs.terms_.begin(), rhs.terms_.end());
    return *this;
}

ExpPolyMix& ExpPolyMix::operator-=(const ExpPolyMix& rhs) {
    offset_ -= rhs.offset_;
    for (const auto& t : rhs.terms_) terms_.push_back({-t.coef, t.power, t.rate});
    return *this;
}

ExpPolyMix& ExpPolyMix::operator*=(double s) {
    offset_ *= s;
    for (auto& t : terms_) t.coef *= s;
    return *this;
}

ExpPolyMix operator+(ExpPolyMix lhs, const ExpPolyMix& rhs) { return lhs += rhs; }
ExpPolyMix operator-(ExpPolyMix lhs, const ExpPolyMix& rhs) { return lhs -= rhs; }
ExpPolyMix operator*(double s, ExpPolyMix m) { return m *= s; }

ExpPolyMix operator*(const ExpPolyMix& lhs, const ExpPolyMix& rhs) {
    ExpPolyMix out = ExpPolyMix::constant(lhs.offset() * rhs.offset());
    for (const auto& b : rhs.terms())
        out.add_term(lhs.offset() * b.coef, b.power, b.rate);
    for (const auto& a : lhs.terms())
        out.add_term(rhs.offset() * a.coef, a.power, a.rate);
    for (const auto& a : lhs.terms())
        for (const auto& b : rhs.terms())
            out.add_term(a.coef * b.coef, a.power + b.power, a.rate + b.rate);
    out.consolidate();
    return out;
}

ExpPolyMix ExpPolyMix::pow(int n) const {
    if (n < 0) throw std::domain_error("ExpPolyMix::pow: n must be >= 0");
    ExpPolyMix acc = constant(1.0);
    for (int i = 0; i < n; ++i) acc = acc * (*this);
    return acc;
}

ExpPolyMix ExpPolyMix::derivative() const {
    ExpPolyMix out;
    for (const auto& t : terms_) {
        if (t.power > 0) out.add_term(t.coef * t.power, t.power - 1, t.rate);
        if (t.rate > 0.0) out.add_term(-t.coef * t.rate, t.power, t.rate);
    }
    out.consolidate();
    return out;
}

void ExpPolyMix::consolidate(double rate_rel_tol) {
    std::sort(terms_.begin(), terms_.end(), [](const ExpPolyTerm& a, const ExpPolyTerm& b) {
        if (a.rate != b.rate) return a.rate < b.rate;
        return a.power < b.power;
    });
    std::vector<ExpPolyTerm> merged;
    for (const auto& t : terms_) {
        bool joined = false;
        for (auto it = merged.rbegin(); it != merged.rend(); ++it) {
            if (std::fabs(it->rate - t.rate) > rate_rel_tol * std::max(1.0, t.rate))
                break;
            if (it->power == t.power) {
                it->coef += t.coef;
                joined = true;
                break;
            }
        }
        if (!joined) merged.push_back(t);
    }
    merged.erase(std::remove_if(merged.begin(), merged.end(),
                                [](const ExpPolyTerm& t) { return t.coef == 0.0; }),
                 merged.end());
    terms_ = std::move(merged);
}

double ExpPolyMix::integral_zero_to(double x) const {
    double s = offset_ * x;
    for (const auto& t : terms_) {
        if (t.rate > 0.0)
            s += t.coef * exp_poly_lower_integral(t.power, t.rate, x);
        else
            s += t.coef * std::pow(x, t.power + 1.0) / (t.power + 1.0);
    }
    return s;
}

double ExpPolyMix::integral_to_inf() const {
    if (offset_ != 0.0)
        throw std::domain_error("ExpPolyMix: integral diverges with an offset");
    double s = 0.0;
    for (const auto& t : terms_) {
        if (t.rate <= 0.0)
            throw std::domain_error("ExpPolyMix: integral diverges with rate 0");
        s += t.coef * factorial(t.power) / std::pow(t.rate, t.power + 1.0);
    }
    return s;
}

double ExpPolyMix::mean() const {
    if (offset_ != 0.0)
        throw std::domain_error("ExpPolyMix: mean diverges with an offset");
    double s = 0.0;
    for (const auto& t : terms_) {
        if (t.rate <= 0.0)
            throw std::domain_error("ExpPolyMix: mean diverges with rate 0");
        s += t.coef * factorial(t.power + 1) / std::pow(t.rate, t.power + 2.0);
    }
    return s;
}

ExpPolyMix convolve_equal_rate(const ExpPolyMix& f, const ExpPolyMix& g) {
    if (f.offset() != 0.0 || g.offset() != 0.0)
        throw std::domain_error("convolve_equal_rate: offsets must be zero");
    double rate = -1.0;
    for (const auto& t : f.terms()) {
        if (rate < 0.0) rate = t.rate;
        if (std::fabs(t.rate - rate) > 1e-9 * std::max(1.0, rate))
            throw std::domain_error("convolve_equal_rate: rates differ");
    }
    for (const auto& t : g.terms())
        if (rate >= 0.0 && std::fabs(t.rate - rate) > 1e-9 * std::max(1.0, rate))
            throw std::domain_error("convolve_equal_rate: rates differ");

    ExpPolyMix out;
    for (const auto& a : f.terms())
        for (const auto& b : g.terms())
            out.add_term(a.coef * b.coef * factorial(a.power) * factorial(b.power) /
                             factorial(a.power + b.power + 1),
                         a.power + b.power + 1, a.rate);
    out.consolidate();
    return out;
}

ExpPolyMix convolve_iterated_equal_rate(const ExpPolyMix& f, int n) {
    if (n < 1) throw std::domain_error("convolve_iterated_equal_rate: n must be >= 1");
    ExpPolyMix acc = f;
    for (int i = 1; i < n; ++i) acc = convolve_equal_rate(acc, f);
    return acc;
}

}  // namespace swarmsec
