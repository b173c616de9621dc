#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "oscillab/epseq.hpp"

namespace oscillab {

// Rigidity for maps between initial segments of the naturals: onto an
// initial segment, with the first occurrence of v+1 after the first
// occurrence of v. Equivalently, each value is at most 1 + max of the
// values before it (and the first value is 0).
inline bool is_rigid(const std::vector<std::size_t>& values) {
    if (values.empty()) return false;
    std::size_t next_fresh = 0;
    for (std::size_t v : values) {
        if (v > next_fresh) return false;
        if (v == next_fresh) ++next_fresh;
    }
    return true;
}

// Rigid surjection [n] -> [m], stored as its value list.
class FiniteRigidSurjection {
public:
    explicit FiniteRigidSurjection(std::vector<std::size_t> values)
        : values_(std::move(values)) {
        if (!is_rigid(values_))
            throw std::domain_error("FiniteRigidSurjection: value list is not rigid");
    }

    static FiniteRigidSurjection identity(std::size_t n) {
        std::vector<std::size_t> v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = i;
        return FiniteRigidSurjection(std::move(v));
    }

    std::size_t domain_size() const { return values_.size(); }
    std::size_t codomain_size() const {
        std::size_t m = 0;
        for (std::size_t v : values_) m = std::max(m, v + 1);
        return m;
    }

    std::size_t operator()(std::size_t i) const { return values_.at(i); }
    const std::vector<std::size_t>& values() const { return values_; }

    friend bool operator==(const FiniteRigidSurjection&, const FiniteRigidSurjection&) = default;
    friend bool operator<(const FiniteRigidSurjection& a, const FiniteRigidSurjection& b) {
        return a.values_ < b.values_;
    }

private:
    std::vector<std::size_t> values_;
};

// (r o p)(i) = r(p(i)); requires codomain of p to fit the domain of r.
inline FiniteRigidSurjection compose(const FiniteRigidSurjection& r,
                                     const FiniteRigidSurjection& p) {
    if (p.codomain_size() > r.domain_size())
        throw std::domain_error("compose: codomain of p exceeds domain of r");
    std::vector<std::size_t> values(p.domain_size());
    for (std::size_t i = 0; i < p.domain_size(); ++i) values[i] = r(p(i));
    return FiniteRigidSurjection(std::move(values));
}

// All rigid surjections [n] -> [m] in lexicographic order; the count is the
// Stirling number of the second kind S(n, m). Generation is incremental:
// position i may take any value up to 1 + max of earlier values, pruned so
// all of [m] can still be reached.
inline std::vector<FiniteRigidSurjection> enumerate_rigid(std::size_t n, std::size_t m) {
    if (m == 0 || m > n)
        throw std::domain_error("enumerate_rigid: need 1 <= m <= n");
    std::vector<FiniteRigidSurjection> out;
    std::vector<std::size_t> cur(n);
    auto rec = [&](auto&& self, std::size_t pos, std::size_t used) -> void {
        if (pos == n) {
            if (used == m) out.emplace_back(cur);
            return;
        }
        // remaining positions must still introduce the m - used missing values
        if (m - used > n - pos) return;
        const std::size_t top = std::min(used, m - 1);
        for (std::size_t v = 0; v <= top; ++v) {
            cur[pos] = v;
            self(self, pos + 1, std::max(used, v + 1));
        }
    };
    rec(rec, 0, 0);
    return out;
}

// Ordered partition of [n]: disjoint nonempty blocks covering [n], listed
// in increasing order of their minima.
struct OrderedPartition {
    std::vector<std::vector<std::size_t>> blocks;
    friend bool operator==(const OrderedPartition&, const OrderedPartition&) = default;
};

inline OrderedPartition to_ordered_partition(const FiniteRigidSurjection& f) {
    OrderedPartition part;
    part.blocks.resize(f.codomain_size());
    for (std::size_t i = 0; i < f.domain_size(); ++i) part.blocks[f(i)].push_back(i);
    return part;
}

inline FiniteRigidSurjection from_ordered_partition(const OrderedPartition& part) {
    std::size_t n = 0;
    for (const auto& block : part.blocks) n += block.size();
    std::vector<std::size_t> values(n);
    for (std::size_t b = 0; b < part.blocks.size(); ++b)
        for (std::size_t i : part.blocks[b]) values.at(i) = b;
    return FiniteRigidSurjection(std::move(values));
}

// The unique r with q = r o p, when the partition of q coarsens the
// partition of p; absence is a valid outcome, not an error.
inline std::optional<FiniteRigidSurjection> factorize(const FiniteRigidSurjection& q,
                                                      const FiniteRigidSurjection& p) {
    if (q.domain_size() != p.domain_size())
        throw std::domain_error("factorize: q and p must share a domain");
    const std::size_t l = p.codomain_size();
    std::vector<std::size_t> values(l);
    std::vector<bool> seen(l, false);
    for (std::size_t i = 0; i < p.domain_size(); ++i) {
        const std::size_t k = p(i);
        if (!seen[k]) {
            seen[k] = true;
            values[k] = q(i);
        } else if (values[k] != q(i)) {
            return std::nullopt; // q is not constant on a block of p
        }
    }
    if (!is_rigid(values)) return std::nullopt;
    return FiniteRigidSurjection(std::move(values));
}

// Rigid surjection omega -> omega of eventually affine form: an explicit
// prefix of values at 0..N-1, then p(n) = n - c for n >= N. Every rigid
// surjection this artifact constructs is of this form, and the class is
// closed under composition. Canonical: N minimal.
class EARigidSurjection {
public:
    EARigidSurjection(std::vector<std::size_t> prefix, std::size_t tail_offset)
        : prefix_(std::move(prefix)), tail_offset_(tail_offset) {
        canonicalize();
        validate();
    }

    static EARigidSurjection identity() { return EARigidSurjection({}, 0); }

    const std::vector<std::size_t>& prefix() const { return prefix_; }
    std::size_t tail_offset() const { return tail_offset_; }

    std::size_t operator()(std::size_t n) const {
        if (n < prefix_.size()) return prefix_[n];
        return n - tail_offset_;
    }

    // min p^{-1}({v}); total because the denotation is onto omega.
    std::size_t first_preimage(std::size_t v) const {
        for (std::size_t i = 0; i < prefix_.size(); ++i)
            if (prefix_[i] == v) return i;
        return v + tail_offset_;
    }

    friend bool operator==(const EARigidSurjection&, const EARigidSurjection&) = default;

private:
    void canonicalize() {
        while (!prefix_.empty() &&
               prefix_.size() - 1 >= tail_offset_ &&
               prefix_.back() == prefix_.size() - 1 - tail_offset_)
            prefix_.pop_back();
    }

    void validate() const {
        const std::size_t n = prefix_.size();
        if (n == 0) {
            if (tail_offset_ != 0)
                throw std::domain_error("EARigidSurjection: empty prefix requires tail offset 0");
            return;
        }
        std::size_t next_fresh = 0;
        for (std::size_t v : prefix_) {
            if (v > next_fresh)
                throw std::domain_error("EARigidSurjection: prefix is not rigid");
            if (v == next_fresh) ++next_fresh;
        }
        // tail values n - c, n >= N must be >= 0 and leave no value uncovered
        if (tail_offset_ > n)
            throw std::domain_error("EARigidSurjection: tail would take negative values");
        if (n - tail_offset_ > next_fresh)
            throw std::domain_error("EARigidSurjection: gap between prefix values and tail");
    }

    std::vector<std::size_t> prefix_;
    std::size_t tail_offset_;
};

// (r o p)(n) = r(p(n)); eventually affine with offset c_p + c_r.
inline EARigidSurjection compose(const EARigidSurjection& r, const EARigidSurjection& p) {
    const std::size_t bound = std::max(p.prefix().size(),
                                       r.prefix().size() + p.tail_offset());
    std::vector<std::size_t> prefix(bound);
    for (std::size_t n = 0; n < bound; ++n) prefix[n] = r(p(n));
    return EARigidSurjection(std::move(prefix), p.tail_offset() + r.tail_offset());
}

// Right action x o p of the rigid-surjection monoid on sequences; the
// result is again eventually periodic, with the same value set, so the
// sup norm is preserved.
inline EPSeq apply(const EPSeq& x, const EARigidSurjection& p) {
    const std::size_t c = p.tail_offset();
    const std::size_t bound = std::max(p.prefix().size(), x.transient_size() + c);
    std::vector<Rational> transient(bound);
    for (std::size_t n = 0; n < bound; ++n) transient[n] = x.entry(p(n));
    std::vector<Rational> period(x.period_size());
    for (std::size_t j = 0; j < period.size(); ++j) period[j] = x.entry(bound + j - c);
    return EPSeq(std::move(transient), std::move(period));
}

inline UPoint apply(const UPoint& x, const EARigidSurjection& p) {
    return UPoint(apply(x.seq(), p));
}

} // namespace oscillab
