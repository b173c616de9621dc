#include "doctest.h"

#include "oscillab/rng.hpp"
#include "oscillab/urysohn.hpp"

using namespace oscillab;

namespace {

UPoint up(std::vector<Rational> transient) {
    return UPoint(std::move(transient), {Rational(0)});
}

UPoint random_upoint(SplitMix64& rng) {
    std::vector<Rational> transient(rng.below(7)), period(rng.range(1, 4));
    for (auto& v : transient) v = rng.unit_rational(12);
    for (auto& v : period) v = rng.unit_rational(12);
    period[rng.below(period.size())] = Rational(0);
    return UPoint(std::move(transient), std::move(period));
}

// Independent distance oracle: materialize both sequences over a long
// window and follow the three-case definition by a literal scan, with no
// use of the library's prefix_bounds / crossing_index / dist.
Rational oracle_dist(const UPoint& x, const UPoint& y) {
    const std::size_t window =
        2 * (x.stabilization_bound() + y.stabilization_bound()) + 8;
    std::vector<Rational> xs(window), ys(window);
    for (std::size_t n = 0; n < window; ++n) { xs[n] = x.entry(n); ys[n] = y.entry(n); }

    auto m_at = [&](std::size_t n) {
        Rational best(0);
        for (std::size_t k = 0; k <= n; ++k)
            best = std::max(best, rat_abs(xs[k] - ys[k]));
        return best;
    };
    auto M_at = [&](std::size_t n) {
        Rational best = xs[0] + ys[0];
        for (std::size_t k = 0; k <= n; ++k)
            best = std::min(best, Rational(xs[k] + ys[k]));
        return best;
    };

    for (std::size_t n = 0; n < window; ++n) {
        if (M_at(n) > m_at(n)) continue;
        if (M_at(n) == m_at(n)) return m_at(n);
        REQUIRE(n >= 1);
        if (m_at(n - 1) == m_at(n)) return m_at(n - 1);
        REQUIRE(M_at(n - 1) == M_at(n));
        return M_at(n - 1);
    }
    REQUIRE(false);
    return Rational(0);
}

} // namespace

TEST_CASE("prefix_bounds") {
    const UPoint x = up({Rational(9, 10), Rational(1, 5)});
    const UPoint y = up({Rational(1, 2), Rational(1, 10)});
    const PrefixBounds b = prefix_bounds(x, y, IndexOrOmega::at(1));
    CHECK(b.m_val == Rational(2, 5));
    CHECK(b.M_val == Rational(3, 10));

    SplitMix64 rng(41);
    for (int i = 0; i < 300; ++i) {
        const UPoint a = random_upoint(rng), c = random_upoint(rng);
        const PrefixBounds w = prefix_bounds(a, c, IndexOrOmega::omega());
        CHECK(w.M_val <= w.m_val);
        const PrefixBounds self = prefix_bounds(a, a, IndexOrOmega::omega());
        CHECK(self.m_val == 0);
    }
}

TEST_CASE("crossing_index") {
    CHECK(crossing_index(up({Rational(1)}), up({})) == IndexOrOmega::at(0));
    CHECK(crossing_index(up({Rational(9, 10), Rational(1, 5)}),
                         up({Rational(1, 2), Rational(1, 10)})) == IndexOrOmega::at(1));
    CHECK(crossing_index(up({}), up({})) == IndexOrOmega::at(0));
}

TEST_CASE("dist examples") {
    const UPoint x = up({Rational(9, 10), Rational(1, 5)});
    CHECK(dist(x, x).d == 0);
    CHECK(dist(x, x).case_tag == DistanceCase::equal);

    const DistanceResult a = dist(x, up({Rational(1, 2), Rational(1, 10)}));
    CHECK(a.d == Rational(2, 5));
    CHECK(a.case_tag == DistanceCase::m_constant);
    CHECK(a.crossing == IndexOrOmega::at(1));

    const DistanceResult b = dist(up({Rational(3, 10), Rational(1)}),
                                  up({Rational(1, 10), Rational(1, 5)}));
    CHECK(b.d == Rational(2, 5));
    CHECK(b.case_tag == DistanceCase::M_constant);
    CHECK(b.witness_t == Rational(1, 3));
}

TEST_CASE("dist agrees with the literal-scan oracle") {
    SplitMix64 rng(42);
    for (int i = 0; i < 500; ++i) {
        const UPoint x = random_upoint(rng), y = random_upoint(rng);
        CHECK(dist(x, y).d == oracle_dist(x, y));
    }
}

TEST_CASE("make_wr") {
    CHECK(make_wr(1).seq() == EPSeq::finitely_supported({Rational(1)}));
    CHECK(make_wr(2).seq() == EPSeq::finitely_supported({Rational(1), Rational(1, 2)}));
    CHECK(make_wr(3).seq() ==
          EPSeq::finitely_supported({Rational(1), Rational(2, 3), Rational(1, 3)}));
    CHECK_THROWS_AS(make_wr(0), std::domain_error);
}

TEST_CASE("orbit_projection") {
    for (unsigned r = 1; r <= 4; ++r) {
        const auto [p, d] = orbit_projection(make_wr(r), r);
        CHECK(p == EARigidSurjection::identity());
        CHECK(d == 0);
    }
    // later disagreement is invisible once m and M have both hit 0
    const UPoint y(std::vector<Rational>{Rational(1)},
                   std::vector<Rational>{Rational(1, 2), Rational(0)});
    const auto [p, d] = orbit_projection(y, 2);
    CHECK(p == EARigidSurjection::identity());
    CHECK(d == 0);

    CHECK_THROWS_AS(orbit_projection(up({Rational(1, 2)}), 2), std::domain_error);
    CHECK_THROWS_AS(orbit_projection(up({Rational(1)}), 2), std::domain_error); // step 1 > 1/2
}

TEST_CASE("embed_metric on one point") {
    const FiniteMetricSpace space({"A"}, {{Rational(0)}});
    const EmbeddingReport report = embed_metric(space, 1);
    REQUIRE(report.points.size() == 1);
    CHECK(report.points[0].f.seq() == EPSeq::finitely_supported({Rational(1)}));
    CHECK(report.points[0].membership_distance <= Rational(1, 2));
    CHECK(dist(report.points[0].f, report.points[0].f).d == 0);
}

TEST_CASE("embed_metric on the two-point space at distance 1/2") {
    const FiniteMetricSpace space({"A", "B"},
                                  {{Rational(0), Rational(1, 2)},
                                   {Rational(1, 2), Rational(0)}});
    const EmbeddingReport report = embed_metric(space, 2);
    REQUIRE(report.points.size() == 2);
    const UPoint& fa = report.points[0].f;
    const UPoint& fb = report.points[1].f;
    CHECK(fa == UPoint(std::vector<Rational>{Rational(1)},
                       std::vector<Rational>{Rational(1, 2), Rational(0)}));
    CHECK(fb.entry(0) == 1);
    CHECK(fb.entry(1) == Rational(3, 4));
    CHECK(fb.entry(2) == Rational(1, 2));
    CHECK(fb.entry(3) == 0);
    CHECK(dist(fa, fb).d == Rational(1, 2));
    CHECK(report.points[0].membership_distance == 0);
    CHECK(report.points[0].p == EARigidSurjection::identity());
}

TEST_CASE("embed_metric is isometric on random spaces") {
    SplitMix64 rng(43);
    for (int i = 0; i < 60; ++i) {
        const std::size_t n = rng.range(1, 4);
        std::vector<std::vector<Rational>> d(n, std::vector<Rational>(n, Rational(0)));
        std::vector<std::string> names;
        for (std::size_t a = 0; a < n; ++a) names.push_back("P" + std::to_string(a));
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a + 1; b < n; ++b) {
                const std::uint64_t den = rng.range(1, 8);
                d[a][b] = d[b][a] = Rational(rng.range((den + 1) / 2, den), den);
            }
        const unsigned r = static_cast<unsigned>(rng.range(1, 3));
        const EmbeddingReport report = embed_metric(FiniteMetricSpace(names, d), r);
        for (std::size_t a = 0; a < n; ++a) {
            CHECK(report.points[a].membership_distance <= Rational(1, 2 * r));
            for (std::size_t b = a + 1; b < n; ++b) {
                CHECK(dist(report.points[a].f, report.points[b].f).d == d[a][b]);
                CHECK(oracle_dist(report.points[a].f, report.points[b].f) == d[a][b]);
            }
        }
    }
}

TEST_CASE("FiniteMetricSpace validation") {
    CHECK_THROWS_AS(FiniteMetricSpace({}, {}), std::domain_error);
    CHECK_THROWS_AS(FiniteMetricSpace({"A"}, {{Rational(1)}}), std::domain_error);
    CHECK_THROWS_AS(FiniteMetricSpace({"A", "B"},
                                      {{Rational(0), Rational(1, 2)},
                                       {Rational(1, 3), Rational(0)}}),
                    std::domain_error);
    CHECK_THROWS_AS(FiniteMetricSpace({"A", "B"},
                                      {{Rational(0), Rational(2)},
                                       {Rational(2), Rational(0)}}),
                    std::domain_error);
    CHECK_THROWS_AS(FiniteMetricSpace({"A", "B", "C"},
                                      {{Rational(0), Rational(1), Rational(1, 8)},
                                       {Rational(1), Rational(0), Rational(1, 8)},
                                       {Rational(1, 8), Rational(1, 8), Rational(0)}}),
                    std::domain_error); // triangle violated
}

TEST_CASE("oscillation") {
    const UPoint zero = up({});
    CHECK(oscillation({zero}) == 0);
    CHECK(oscillation({zero, up({Rational(1)})}) == 1);
    CHECK(oscillation({zero, up({Rational(1)}), zero, up({Rational(1)})}) == 1);
    CHECK_THROWS_AS(oscillation({}), std::domain_error);
}

TEST_CASE("prefix agreement forces distance zero") {
    // p and q agree through the first preimage of r
    const unsigned r = 2;
    const EARigidSurjection p({0, 0, 1, 2}, 2); // 0,0,1,2,2,3,...
    const EARigidSurjection q({0, 0, 1, 2, 2, 2}, 4);
    const std::size_t through = p.first_preimage(r);
    for (std::size_t n = 0; n <= through; ++n) REQUIRE(p(n) == q(n));
    const UPoint wr = make_wr(r);
    CHECK(dist(apply(wr, p), apply(wr, q)).d == 0);
}
