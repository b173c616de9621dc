#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <ostream>
#include <vector>

#include "oscillab/rational.hpp"

namespace oscillab {

// Index domain for the prefix statistics of the Urysohn model: a natural
// number or omega, with every natural < omega.
struct IndexOrOmega {
    std::optional<std::uint64_t> value; // nullopt = omega

    static IndexOrOmega omega() { return {std::nullopt}; }
    static IndexOrOmega at(std::uint64_t n) { return {n}; }

    bool is_omega() const { return !value.has_value(); }
    std::uint64_t finite() const {
        if (is_omega()) throw std::logic_error("IndexOrOmega: omega where a finite index was required");
        return *value;
    }

    friend bool operator==(const IndexOrOmega&, const IndexOrOmega&) = default;
    friend bool operator<(const IndexOrOmega& a, const IndexOrOmega& b) {
        if (a.is_omega()) return false;
        if (b.is_omega()) return true;
        return *a.value < *b.value;
    }
};

// Eventually periodic sequence of exact rationals: the finite stand-in for
// points of l_infinity and of the Urysohn model U. Denotes
//   n |-> transient[n]              for n < |transient|
//   n |-> period[(n-|transient|) mod |period|]   otherwise.
//
// Instances are always held in canonical form (minimal period, minimal
// transient), so semantic equality is structural equality.
class EPSeq {
public:
    EPSeq() : period_{Rational(0)} {}

    EPSeq(std::vector<Rational> transient, std::vector<Rational> period)
        : transient_(std::move(transient)), period_(std::move(period)) {
        if (period_.empty()) throw std::domain_error("EPSeq: empty period");
        canonicalize();
    }

    static EPSeq zero() { return EPSeq(); }

    // Finitely supported sequence: the given entries, then zeros forever.
    static EPSeq finitely_supported(std::vector<Rational> entries) {
        return EPSeq(std::move(entries), {Rational(0)});
    }

    const std::vector<Rational>& transient() const { return transient_; }
    const std::vector<Rational>& period() const { return period_; }

    std::size_t transient_size() const { return transient_.size(); }
    std::size_t period_size() const { return period_.size(); }

    // Every value the sequence ever takes appears at some index below this.
    std::size_t stabilization_bound() const { return transient_.size() + period_.size(); }

    Rational entry(std::size_t n) const {
        if (n < transient_.size()) return transient_[n];
        return period_[(n - transient_.size()) % period_.size()];
    }

    bool is_zero() const {
        return transient_.empty() && period_.size() == 1 && period_[0] == 0;
    }

    // Finitely supported = canonical period is the single entry 0.
    bool finitely_supported_form() const {
        return period_.size() == 1 && period_[0] == 0;
    }

    bool all_entries_in(const Rational& lo, const Rational& hi) const {
        auto ok = [&](const Rational& v) { return lo <= v && v <= hi; };
        return std::all_of(transient_.begin(), transient_.end(), ok) &&
               std::all_of(period_.begin(), period_.end(), ok);
    }

    friend bool operator==(const EPSeq&, const EPSeq&) = default;

private:
    void canonicalize() {
        // minimal period: smallest divisor d of |period| with period d-periodic
        const std::size_t p = period_.size();
        for (std::size_t d = 1; d <= p; ++d) {
            if (p % d != 0) continue;
            bool ok = true;
            for (std::size_t i = d; i < p && ok; ++i)
                if (period_[i] != period_[i % d]) ok = false;
            if (ok) {
                period_.resize(d);
                break;
            }
        }
        // absorb transient entries the period already accounts for
        while (!transient_.empty() && transient_.back() == period_.back()) {
            transient_.pop_back();
            std::rotate(period_.rbegin(), period_.rbegin() + 1, period_.rend());
        }
    }

    std::vector<Rational> transient_;
    std::vector<Rational> period_;
};

inline Rational entry(const EPSeq& x, std::size_t n) { return x.entry(n); }

// sup_n |x(n)|; attained within transient plus one period.
inline Rational sup_abs(const EPSeq& x) {
    Rational best(0);
    for (const auto& v : x.transient()) best = std::max(best, rat_abs(v));
    for (const auto& v : x.period()) best = std::max(best, rat_abs(v));
    return best;
}

// Pointwise alpha*x + beta*y over a common transient length and lcm period.
inline EPSeq add_scaled(const EPSeq& x, const EPSeq& y,
                        const Rational& alpha, const Rational& beta) {
    const std::size_t t = std::max(x.transient_size(), y.transient_size());
    const std::size_t p = std::lcm(x.period_size(), y.period_size());
    std::vector<Rational> transient, period;
    transient.reserve(t);
    period.reserve(p);
    for (std::size_t n = 0; n < t; ++n)
        transient.push_back(alpha * x.entry(n) + beta * y.entry(n));
    for (std::size_t j = 0; j < p; ++j)
        period.push_back(alpha * x.entry(t + j) + beta * y.entry(t + j));
    return EPSeq(std::move(transient), std::move(period));
}

// j-fold forward shift: j leading zeros, then x.
inline EPSeq shift(const EPSeq& x, std::size_t j) {
    std::vector<Rational> transient(j, Rational(0));
    transient.insert(transient.end(), x.transient().begin(), x.transient().end());
    return EPSeq(std::move(transient), x.period());
}

// Point of the Urysohn model U: entries in [0,1] with liminf 0. For
// eventually periodic sequences liminf 0 is exactly "the period part
// attains 0".
class UPoint {
public:
    explicit UPoint(EPSeq seq) : seq_(std::move(seq)) {
        if (!seq_.all_entries_in(Rational(0), Rational(1)))
            throw std::domain_error("UPoint: entries must lie in [0,1]");
        if (*std::min_element(seq_.period().begin(), seq_.period().end()) != 0)
            throw std::domain_error("UPoint: liminf must be 0 (period must attain 0)");
    }

    UPoint(std::vector<Rational> transient, std::vector<Rational> period)
        : UPoint(EPSeq(std::move(transient), std::move(period))) {}

    const EPSeq& seq() const { return seq_; }
    Rational entry(std::size_t n) const { return seq_.entry(n); }
    std::size_t stabilization_bound() const { return seq_.stabilization_bound(); }

    friend bool operator==(const UPoint&, const UPoint&) = default;

private:
    EPSeq seq_;
};

} // namespace oscillab
