#include "tribell/sequences.hpp"

#include <algorithm>
#include <utility>

namespace tribell {

namespace {

bool all_zero(const std::vector<Rational>& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

} // namespace

RecurrenceSpec RecurrenceSpec::create(std::vector<Rational> coeffs, std::vector<Rational> initials) {
    if (coeffs.empty()) throw dimension_error("recurrence order must be at least 1");
    if (coeffs.size() != initials.size())
        throw dimension_error("need exactly one initial term per coefficient");
    if (all_zero(coeffs)) throw domain_error("all recurrence coefficients are zero");
    if (all_zero(initials)) throw domain_error("all initial terms are zero");
    RecurrenceSpec s;
    s.coeffs = std::move(coeffs);
    s.initials = std::move(initials);
    return s;
}

std::string RecurrenceSpec::key() const {
    std::string k = "c:";
    for (const Rational& c : coeffs) {
        k += to_string(c);
        k += ',';
    }
    k += "|a:";
    for (const Rational& a : initials) {
        k += to_string(a);
        k += ',';
    }
    return k;
}

RecurrenceSpec make_tribonacci(const Rational& u, const Rational& v, const Rational& w,
                               const Rational& a, const Rational& b, const Rational& c) {
    return RecurrenceSpec::create({u, v, w}, {a, b, c});
}

RecurrenceSpec make_lstep(std::size_t l) {
    if (l < 2) throw domain_error("step count must be at least 2");
    std::vector<Rational> coeffs(l, Rational(1));
    std::vector<Rational> initials;
    initials.reserve(l);
    initials.emplace_back(0);
    initials.emplace_back(1);
    Rational next(1);
    for (std::size_t j = 2; j < l; ++j) {
        initials.push_back(next);
        next *= 2;
    }
    return RecurrenceSpec::create(std::move(coeffs), std::move(initials));
}

RecurrenceSpec make_lstep_companion(std::size_t l) {
    if (l < 2) throw domain_error("step count must be at least 2");
    std::vector<Rational> coeffs(l, Rational(1));
    std::vector<Rational> initials;
    initials.reserve(l);
    initials.emplace_back(static_cast<long>(l));
    Rational pw(2);
    for (std::size_t j = 1; j < l; ++j) {
        Rational t = pw - 1;
        initials.push_back(t);
        pw *= 2;
    }
    return RecurrenceSpec::create(std::move(coeffs), std::move(initials));
}

SequenceHandle::SequenceHandle(RecurrenceSpec spec)
    : spec_(RecurrenceSpec::create(std::move(spec.coeffs), std::move(spec.initials))),
      forward_(spec_.initials.begin(), spec_.initials.end()),
      trailing_nonzero_(spec_.coeffs.back() != 0) {}

const Rational& SequenceHandle::term(long n) {
    const std::size_t l = spec_.order();
    if (n >= 0) {
        auto idx = static_cast<std::size_t>(n);
        while (forward_.size() <= idx) {
            std::size_t m = forward_.size();
            Rational acc(0), t;
            for (std::size_t k = 1; k <= l; ++k) {
                t = spec_.coeffs[k - 1] * forward_[m - k];
                acc += t;
            }
            forward_.push_back(std::move(acc));
        }
        return forward_[idx];
    }
    if (!trailing_nonzero_)
        throw domain_error("negative index needs a nonzero trailing coefficient");
    auto depth = static_cast<std::size_t>(-(n + 1)); // n = -1 -> 0
    while (backward_.size() <= depth) {
        // Compute a_m for m = -(backward_.size()+1) from terms above it.
        long m = -static_cast<long>(backward_.size()) - 1;
        Rational acc = term(m + static_cast<long>(l));
        Rational t;
        for (std::size_t k = 1; k < l; ++k) {
            t = spec_.coeffs[k - 1] * term(m + static_cast<long>(l - k));
            acc -= t;
        }
        acc /= spec_.coeffs.back();
        backward_.push_back(std::move(acc));
    }
    return backward_[depth];
}

std::vector<Rational> SequenceHandle::terms(long lo, long hi) {
    if (lo > hi) throw domain_error("term range is empty");
    std::vector<Rational> out;
    out.reserve(static_cast<std::size_t>(hi - lo + 1));
    for (long n = lo; n <= hi; ++n) out.push_back(term(n));
    return out;
}

} // namespace tribell
