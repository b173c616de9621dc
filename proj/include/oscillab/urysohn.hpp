#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "oscillab/epseq.hpp"
#include "oscillab/rigidsurj.hpp"

namespace oscillab {

// Running prefix statistics of a pair of U-points:
//   m(x,y,n) = sup_{k<=n} |x(k) - y(k)|   (nondecreasing)
//   M(x,y,n) = inf_{k<=n} (x(k) + y(k))   (nonincreasing)
// At omega both stabilize within the common transient plus one lcm period.
struct PrefixBounds {
    Rational m_val;
    Rational M_val;
    IndexOrOmega n;
};

namespace detail {

// Index past which both m and M have stabilized.
inline std::size_t pair_bound(const UPoint& x, const UPoint& y) {
    return std::max(x.seq().transient_size(), y.seq().transient_size()) +
           std::lcm(x.seq().period_size(), y.seq().period_size());
}

} // namespace detail

inline PrefixBounds prefix_bounds(const UPoint& x, const UPoint& y, IndexOrOmega n) {
    const std::size_t stab = detail::pair_bound(x, y);
    const std::size_t top = n.is_omega()
        ? stab - 1
        : std::min<std::size_t>(n.finite(), stab - 1);
    Rational m = rat_abs(x.entry(0) - y.entry(0));
    Rational M = x.entry(0) + y.entry(0);
    for (std::size_t k = 1; k <= top; ++k) {
        m = std::max(m, rat_abs(x.entry(k) - y.entry(k)));
        M = std::min(M, x.entry(k) + y.entry(k));
    }
    return {std::move(m), std::move(M), n};
}

// Least n with M(x,y,n) <= m(x,y,n). Finite for every pair of eventually
// periodic U-points: liminf x = 0 forces M(omega) <= m(omega), and both
// stabilize below the pair bound.
inline IndexOrOmega crossing_index(const UPoint& x, const UPoint& y) {
    const std::size_t stab = detail::pair_bound(x, y);
    Rational m(0), M(2);
    for (std::size_t n = 0; n < stab; ++n) {
        m = std::max(m, rat_abs(x.entry(n) - y.entry(n)));
        M = std::min(M, x.entry(n) + y.entry(n));
        if (M <= m) return IndexOrOmega::at(n);
    }
    throw std::logic_error("crossing_index: no crossing below the stabilization bound");
}

enum class DistanceCase { equal, m_constant, M_constant };

inline const char* to_string(DistanceCase c) {
    switch (c) {
        case DistanceCase::equal: return "equal";
        case DistanceCase::m_constant: return "m_constant";
        case DistanceCase::M_constant: return "M_constant";
    }
    return "?";
}

// The pseudometric value together with the crossing index, the case of the
// three-way definition, and the witness time t at which the piecewise
// affine extensions of m and M both equal d.
struct DistanceResult {
    Rational d;
    IndexOrOmega crossing;
    DistanceCase case_tag;
    Rational witness_t;
};

// The three-case pseudometric of the Urysohn model. With n* the crossing
// index: if m and M agree there, d is the common value; otherwise n* = k+1
// and exactly one of m, M was constant across the step k -> k+1, and d is
// that constant value.
inline DistanceResult dist(const UPoint& x, const UPoint& y) {
    const IndexOrOmega cross = crossing_index(x, y);
    const std::uint64_t n = cross.finite();
    const PrefixBounds at_n = prefix_bounds(x, y, cross);
    if (at_n.m_val == at_n.M_val)
        return {at_n.m_val, cross, DistanceCase::equal, Rational(n)};

    if (n == 0)
        throw std::logic_error("dist: m(0) > M(0) is impossible");
    const std::uint64_t k = n - 1;
    const PrefixBounds at_k = prefix_bounds(x, y, IndexOrOmega::at(k));
    const bool m_const = at_k.m_val == at_n.m_val;
    const bool M_const = at_k.M_val == at_n.M_val;
    if (m_const == M_const)
        throw std::logic_error("dist: exactly one of m, M must be constant across the step");

    if (m_const) {
        // m flat at d; M affine from M(k) down to M(k+1) crosses it
        const Rational d = at_k.m_val;
        const Rational t = Rational(k) + (at_k.M_val - d) / (at_k.M_val - at_n.M_val);
        return {d, cross, DistanceCase::m_constant, t};
    }
    const Rational d = at_k.M_val;
    const Rational t = Rational(k) + (d - at_k.m_val) / (at_n.m_val - at_k.m_val);
    return {d, cross, DistanceCase::M_constant, t};
}

// w_r = (1, (r-1)/r, ..., 1/r, 0, 0, ...): the staircase whose 1/2r-fattened
// orbit is universal for separable metric spaces of diameter <= 1.
inline UPoint make_wr(unsigned r) {
    if (r == 0) throw std::domain_error("make_wr: r must be >= 1");
    std::vector<Rational> t;
    t.reserve(r);
    for (unsigned i = 0; i < r; ++i) t.emplace_back(Rational(r - i, r));
    return UPoint(std::move(t), {Rational(0)});
}

// Project y into the orbit of w_r: requires y(0) = 1 and steps bounded by
// 1/r. With n0 the least index where y drops to <= 1/2r, values below n0 are
// bucketed to the nearest step of w_r and the tail is p(n) = n - n0 + r.
// Returns p and the exact pseudodistance d(w_r o p, y), which is <= 1/2r.
inline std::pair<EARigidSurjection, Rational> orbit_projection(const UPoint& y, unsigned r) {
    if (r == 0) throw std::domain_error("orbit_projection: r must be >= 1");
    if (y.entry(0) != 1)
        throw std::domain_error("orbit_projection: y(0) must equal 1");
    const std::size_t stab = y.stabilization_bound();
    const Rational step(1, r);
    for (std::size_t n = 0; n < stab; ++n)
        if (rat_abs(y.entry(n + 1) - y.entry(n)) > step)
            throw std::domain_error("orbit_projection: step |y(n+1) - y(n)| exceeds 1/r");

    const Rational half(1, 2 * r);
    std::size_t n0 = stab;
    for (std::size_t n = 0; n < stab; ++n)
        if (y.entry(n) <= half) { n0 = n; break; }
    if (n0 == stab)
        throw std::domain_error("orbit_projection: no index with y(n) <= 1/2r");
    // the step condition forces n0 >= r, so the tail n - (n0 - r) is valid
    if (n0 < r) throw std::logic_error("orbit_projection: n0 < r violates the step condition");

    std::vector<std::size_t> prefix(n0 + 1);
    for (std::size_t n = 0; n <= n0; ++n) {
        // unique k <= r with y(n) in ((2(r-k)-1)/2r, (2(r-k)+1)/2r]
        Integer j = rat_ceil(Rational(r) * y.entry(n) - Rational(1, 2));
        if (j < 0 || j > r)
            throw std::logic_error("orbit_projection: bucket out of range");
        prefix[n] = r - j.convert_to<std::size_t>();
    }
    EARigidSurjection p(std::move(prefix), n0 - r);

    const Rational d = dist(apply(make_wr(r), p), y).d;
    if (d > half)
        throw std::logic_error("orbit_projection: achieved distance exceeds 1/2r");
    return {std::move(p), d};
}

// Finite metric space with exact rational distances and diameter <= 1.
struct FiniteMetricSpace {
    std::vector<std::string> names;
    std::vector<std::vector<Rational>> dist;

    FiniteMetricSpace(std::vector<std::string> names_,
                      std::vector<std::vector<Rational>> dist_)
        : names(std::move(names_)), dist(std::move(dist_)) {
        validate();
    }

    std::size_t size() const { return names.size(); }

    void validate() const {
        const std::size_t n = names.size();
        if (n == 0) throw std::domain_error("FiniteMetricSpace: empty space");
        if (dist.size() != n)
            throw std::domain_error("FiniteMetricSpace: matrix size mismatch");
        for (std::size_t i = 0; i < n; ++i) {
            if (dist[i].size() != n)
                throw std::domain_error("FiniteMetricSpace: matrix row size mismatch");
            if (dist[i][i] != 0)
                throw std::domain_error("FiniteMetricSpace: nonzero diagonal");
            for (std::size_t j = 0; j < n; ++j) {
                if (dist[i][j] < 0 || dist[i][j] > 1)
                    throw std::domain_error("FiniteMetricSpace: distance outside [0,1]");
                if (dist[i][j] != dist[j][i])
                    throw std::domain_error("FiniteMetricSpace: asymmetric matrix");
                for (std::size_t l = 0; l < n; ++l)
                    if (dist[i][j] > dist[i][l] + dist[l][j])
                        throw std::domain_error("FiniteMetricSpace: triangle inequality violated");
            }
        }
    }
};

// Per-point outcome of the universality embedding, plus the tour of hull
// points used to generate the coordinate sequences.
struct EmbeddingReport {
    struct Point {
        std::string name;
        UPoint f;
        EARigidSurjection p;
        Rational membership_distance;
    };
    std::vector<Point> points;
    std::vector<std::vector<Rational>> tour_transient;
    std::vector<std::vector<Rational>> tour_period;
};

namespace detail {

inline Rational sup_dist(const std::vector<Rational>& u, const std::vector<Rational>& v) {
    Rational best(0);
    for (std::size_t j = 0; j < u.size(); ++j)
        best = std::max(best, rat_abs(u[j] - v[j]));
    return best;
}

// Subdivide the straight segment from `from` to `to` into ceil(r * length)
// equal steps (at least one), appending every node after `from`.
inline void subdivide_segment(const std::vector<Rational>& from,
                              const std::vector<Rational>& to,
                              unsigned r,
                              std::vector<std::vector<Rational>>& out) {
    const Rational len = sup_dist(from, to);
    Integer steps = rat_ceil(Rational(r) * len);
    if (steps < 1) steps = 1;
    const auto s = steps.convert_to<std::size_t>();
    for (std::size_t t = 1; t <= s; ++t) {
        std::vector<Rational> node(from.size());
        for (std::size_t j = 0; j < from.size(); ++j)
            node[j] = from[j] + Rational(t, s) * (to[j] - from[j]);
        out.push_back(std::move(node));
    }
}

} // namespace detail

// Isometric embedding of a finite metric space into the 1/2r-fattened orbit
// of w_r. The space is extended by a base point * at distance 1, each point
// is sent to its distance vector over the extended space (Kuratowski, sup
// metric), and coordinates are read off along a tour that starts at *,
// walks to every point in steps of sup-length <= 1/r, and then cycles
// through all points forever.
inline EmbeddingReport embed_metric(const FiniteMetricSpace& space, unsigned r) {
    if (r == 0) throw std::domain_error("embed_metric: r must be >= 1");
    const std::size_t n = space.size();

    // distance vectors over X u {*}; coordinate n is the base point
    auto kuratowski = [&](std::size_t i) {
        std::vector<Rational> v(n + 1);
        for (std::size_t j = 0; j < n; ++j) v[j] = space.dist[i][j];
        v[n] = Rational(1);
        return v;
    };
    std::vector<Rational> base(n + 1, Rational(1));
    base[n] = Rational(0);

    // transient: * -> x_0 -> ... -> x_{n-1}; period: the cycle back through
    // x_0, ..., x_{n-1}
    std::vector<std::vector<Rational>> tour_transient{base};
    std::vector<Rational> cursor = base;
    for (std::size_t i = 0; i < n; ++i) {
        detail::subdivide_segment(cursor, kuratowski(i), r, tour_transient);
        cursor = kuratowski(i);
    }
    std::vector<std::vector<Rational>> tour_period;
    for (std::size_t i = 0; i < n; ++i) {
        detail::subdivide_segment(cursor, kuratowski(i), r, tour_period);
        cursor = kuratowski(i);
    }

    EmbeddingReport report;
    report.tour_transient = tour_transient;
    report.tour_period = tour_period;
    for (std::size_t i = 0; i < n; ++i) {
        const std::vector<Rational> kx = kuratowski(i);
        std::vector<Rational> transient, period;
        transient.reserve(tour_transient.size());
        for (const auto& node : tour_transient)
            transient.push_back(detail::sup_dist(kx, node));
        period.reserve(tour_period.size());
        for (const auto& node : tour_period)
            period.push_back(detail::sup_dist(kx, node));
        UPoint f(std::move(transient), std::move(period));
        auto [p, membership] = orbit_projection(f, r);
        report.points.push_back({space.names[i], std::move(f), std::move(p),
                                 std::move(membership)});
    }
    return report;
}

// osc over a finite sample: the largest pairwise pseudodistance.
inline Rational oscillation(const std::vector<UPoint>& points) {
    if (points.empty()) throw std::domain_error("oscillation: empty sample");
    Rational best(0);
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            best = std::max(best, dist(points[i], points[j]).d);
    return best;
}

} // namespace oscillab
