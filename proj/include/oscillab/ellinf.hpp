#pragma once

#include <vector>

#include "oscillab/epseq.hpp"
#include "oscillab/rigidsurj.hpp"

namespace oscillab {

// The staircase unit vector
//   x_k = (0, 1/k, -1/k, 2/k, -2/k, ..., 1, -1, (k-1)/k, ..., 1/k, -1/k, 0, ...)
// with support exactly [1, 4k-2]. Its orbit under the rigid-surjection
// monoid 2/k-approximates the unit sphere of an isometric copy of the
// whole sequence space.
struct XkVector {
    unsigned k;
    EPSeq seq;
};

inline XkVector make_xk(unsigned k) {
    if (k == 0) throw std::domain_error("make_xk: k must be >= 1");
    std::vector<Rational> t;
    t.reserve(4 * static_cast<std::size_t>(k) - 1);
    t.emplace_back(0);
    for (unsigned j = 1; j <= k; ++j) {
        t.emplace_back(Rational(j, k));
        t.emplace_back(-Rational(j, k));
    }
    for (unsigned j = k - 1; j >= 1; --j) {
        t.emplace_back(Rational(j, k));
        t.emplace_back(-Rational(j, k));
    }
    return {k, EPSeq::finitely_supported(std::move(t))};
}

// Step rounding of [-1,1] onto multiples of 1/k:
//   u in [-1/2k, 1/2k]                  -> 0
//   u in ((2l+1)/2k, (2l+3)/2k], l >= 0 -> (l+1)/k
//   u in [-(2l+3)/2k, -(2l+1)/2k), l>=0 -> -(l+1)/k
// Satisfies: h(u) is a multiple of 1/k, |h(u) - u| <= 1/2k, h(-u) = -h(u),
// and |u - v| <= 1/k implies |h(u) - h(v)| <= 1/k.
inline Rational round_h(const Rational& u, unsigned k) {
    if (k == 0) throw std::domain_error("round_h: k must be >= 1");
    if (rat_abs(u) > 1) throw std::domain_error("round_h: |u| must be <= 1");
    const Rational a = rat_abs(u);
    if (a <= Rational(1, 2 * k)) return Rational(0);
    // smallest l >= 0 with a <= (2l+3)/2k, i.e. l >= (2k*a - 3)/2
    Integer l = rat_ceil((Rational(2 * k) * a - 3) / 2);
    if (l < 0) l = 0;
    Rational h((l + 1), Integer(k));
    return u < 0 ? Rational(-h) : h;
}

// Rigid surjection plus the exact sup distance it achieves against the
// bound claimed by the statement being exercised.
struct ApproximationCertificate {
    EARigidSurjection p;
    Rational distance;
    Rational bound;
};

namespace detail {

// Support indices of a finitely supported sequence (positions of nonzero
// transient entries).
inline std::vector<std::size_t> support(const EPSeq& a) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < a.transient_size(); ++i)
        if (a.entry(i) != 0) s.push_back(i);
    return s;
}

} // namespace detail

// The orbit-approximation construction: given a nonnegative, finitely
// supported a with sup 1 attained, and offsets n_i (one per support index,
// strictly increasing with gaps >= 4k-1), form x = sum_i a(i) S^{n_i}(x_k)
// and build the rigid surjection p with x_k o p = h o x exactly, so that
// sup|x - x_k o p| <= 1/2k.
//
// Stages: (1) for n <= N := n_{i0} + 2k, match h(x(n)) to its unique
// position among x_k(0..2k); (2) the forced run p(N+n) = 2k+n for
// 1 <= n <= 2k-2; (3) afterwards, nonzero values map to their unique
// position in [1, 2k] and zeros open a fresh value max{p(0..n-1)} + 1.
inline ApproximationCertificate build_p(const EPSeq& a,
                                        const std::vector<std::size_t>& offsets,
                                        unsigned k) {
    if (k == 0) throw std::domain_error("build_p: k must be >= 1");
    if (!a.finitely_supported_form())
        throw std::domain_error("build_p: a must be finitely supported (period [0])");
    for (std::size_t i = 0; i < a.transient_size(); ++i)
        if (a.entry(i) < 0) throw std::domain_error("build_p: a must be nonnegative");
    if (sup_abs(a) != 1)
        throw std::domain_error("build_p: sup of a must equal 1 and be attained");

    const std::vector<std::size_t> supp = detail::support(a);
    if (offsets.size() != supp.size())
        throw std::domain_error("build_p: need exactly one offset per support index");
    for (std::size_t j = 0; j + 1 < offsets.size(); ++j)
        if (offsets[j + 1] < offsets[j] + (4 * static_cast<std::size_t>(k) - 1))
            throw std::domain_error("build_p: offset gap below 4k-1");

    const XkVector xk = make_xk(k);

    // x = sum_j a(supp[j]) * S^{offsets[j]}(x_k)
    EPSeq x = EPSeq::zero();
    for (std::size_t j = 0; j < supp.size(); ++j)
        x = add_scaled(x, shift(xk.seq, offsets[j]), Rational(1), a.entry(supp[j]));

    // i0: smallest support index with a(i0) > (2k-1)/2k
    const Rational threshold(2 * k - 1, 2 * k);
    std::size_t i0 = supp.size();
    for (std::size_t j = 0; j < supp.size(); ++j)
        if (a.entry(supp[j]) > threshold) { i0 = j; break; }
    if (i0 == supp.size())
        throw std::domain_error("build_p: no entry of a exceeds (2k-1)/2k");

    const std::size_t N = offsets[i0] + 2 * k;
    const std::size_t last = offsets.back() + 4 * k - 1; // x vanishes from here on
    const std::size_t end = std::max(N + 2 * k - 1, last);

    auto y_at = [&](std::size_t n) { return round_h(x.entry(n), k); };
    auto xk_position = [&](const Rational& v, std::size_t lo, std::size_t hi) {
        for (std::size_t m = lo; m <= hi; ++m)
            if (xk.seq.entry(m) == v) return m;
        throw std::logic_error("build_p: value outside the x_k staircase");
    };

    std::vector<std::size_t> prefix(end + 1);
    std::size_t max_so_far = 0;
    for (std::size_t n = 0; n <= end; ++n) {
        std::size_t v;
        if (n <= N) {
            v = xk_position(y_at(n), 0, 2 * k);
        } else if (n <= N + 2 * k - 2) {
            v = 2 * k + (n - N);
        } else if (Rational y = y_at(n); y != 0) {
            v = xk_position(y, 1, 2 * k);
        } else {
            v = max_so_far + 1;
        }
        prefix[n] = v;
        max_so_far = std::max(max_so_far, v);
    }
    // beyond `end` the sequence is zero and the fresh-value rule runs affinely
    EARigidSurjection p(std::move(prefix), end - max_so_far);

    const EPSeq xk_p = apply(xk.seq, p);
    // the construction promises x_k o p = h o x exactly; re-check
    std::vector<Rational> yv(end + 1);
    for (std::size_t n = 0; n <= end; ++n) yv[n] = y_at(n);
    if (xk_p != EPSeq::finitely_supported(std::move(yv)))
        throw std::logic_error("build_p: x_k o p differs from h o x");

    const Rational distance = sup_abs(add_scaled(x, xk_p, Rational(1), Rational(-1)));
    const Rational bound(1, 2 * k);
    if (distance > bound)
        throw std::logic_error("build_p: achieved distance exceeds 1/2k");
    return {std::move(p), distance, bound};
}

// T(a) = sum_i a(i) S^{4ki}(x_k): the disjointly supported linear isometry
// whose image is the isometric copy being approximated.
inline EPSeq embed_T(const EPSeq& a, unsigned k) {
    if (k == 0) throw std::domain_error("embed_T: k must be >= 1");
    if (!a.finitely_supported_form())
        throw std::domain_error("embed_T: a must be finitely supported (period [0])");
    if (sup_abs(a) > 1)
        throw std::domain_error("embed_T: sup of a must be <= 1");
    const XkVector xk = make_xk(k);
    EPSeq out = EPSeq::zero();
    for (std::size_t i : detail::support(a))
        out = add_scaled(out, shift(xk.seq, 4 * static_cast<std::size_t>(k) * i),
                         Rational(1), a.entry(i));
    return out;
}

// Orbit approximation of T(a) within 2/k: offsets 4ki for a(i) >= 0 and
// 4ki+1 for a(i) < 0, then the build_p construction on |a|. The sign flip
// costs at most 1/k (since sup|x_k + S(x_k)| = 1/k) and the rounding at
// most 1/2k.
inline ApproximationCertificate approximate_in_orbit(const EPSeq& a, unsigned k) {
    if (k == 0) throw std::domain_error("approximate_in_orbit: k must be >= 1");
    if (!a.finitely_supported_form())
        throw std::domain_error("approximate_in_orbit: a must be finitely supported (period [0])");

    std::vector<Rational> abs_entries;
    abs_entries.reserve(a.transient_size());
    std::vector<std::size_t> offsets;
    for (std::size_t i = 0; i < a.transient_size(); ++i) {
        abs_entries.push_back(rat_abs(a.entry(i)));
        if (a.entry(i) != 0)
            offsets.push_back(4 * static_cast<std::size_t>(k) * i + (a.entry(i) < 0 ? 1 : 0));
    }
    EPSeq abs_a = EPSeq::finitely_supported(std::move(abs_entries));

    ApproximationCertificate inner = build_p(abs_a, offsets, k);
    const EPSeq ta = embed_T(a, k);
    const EPSeq xk_p = apply(make_xk(k).seq, inner.p);
    const Rational distance = sup_abs(add_scaled(ta, xk_p, Rational(1), Rational(-1)));
    const Rational bound(2, k);
    if (distance > bound)
        throw std::logic_error("approximate_in_orbit: achieved distance exceeds 2/k");
    return {std::move(inner.p), distance, bound};
}

} // namespace oscillab
