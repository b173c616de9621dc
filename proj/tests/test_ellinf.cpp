#include "doctest.h"

#include "oscillab/ellinf.hpp"
#include "oscillab/rng.hpp"

using namespace oscillab;

TEST_CASE("make_xk") {
    const EPSeq x2 = make_xk(2).seq;
    CHECK(x2 == EPSeq::finitely_supported({Rational(0), Rational(1, 2), Rational(-1, 2),
                                           Rational(1), Rational(-1), Rational(1, 2),
                                           Rational(-1, 2)}));
    const EPSeq x1 = make_xk(1).seq;
    CHECK(x1 == EPSeq::finitely_supported({Rational(0), Rational(1), Rational(-1)}));
    CHECK_THROWS_AS(make_xk(0), std::domain_error);

    for (unsigned k = 1; k <= 6; ++k) {
        const EPSeq xk = make_xk(k).seq;
        CHECK(sup_abs(xk) == 1);
        // support exactly [1, 4k-2]
        CHECK(xk.entry(0) == 0);
        for (std::size_t n = 1; n <= 4 * k - 2; ++n) CHECK(xk.entry(n) != 0);
        CHECK(xk.entry(4 * k - 1) == 0);
        // (i): steps of |x_k| bounded by 1/k; (ii): -u is preceded by u
        for (std::size_t n = 0; n <= 4 * k; ++n) {
            CHECK(rat_abs(rat_abs(xk.entry(n + 1)) - rat_abs(xk.entry(n))) <= Rational(1, k));
            if (xk.entry(n) < 0) {
                CHECK(n >= 1);
                CHECK(xk.entry(n - 1) == -xk.entry(n));
            }
        }
    }
}

TEST_CASE("round_h examples") {
    CHECK(round_h(Rational(0), 3) == 0);
    CHECK(round_h(Rational(1), 2) == 1);
    CHECK(round_h(Rational(-3, 5), 2) == Rational(-1, 2));
    CHECK_THROWS_AS(round_h(Rational(3, 2), 2), std::domain_error);
    CHECK_THROWS_AS(round_h(Rational(1, 2), 0), std::domain_error);
}

TEST_CASE("round_h properties (a)-(d) exhaustively on the grid") {
    for (unsigned k = 1; k <= 5; ++k) {
        const long grid = 4L * k;
        std::vector<Rational> points;
        for (long j = -grid; j <= grid; ++j) points.emplace_back(Rational(j, grid));
        for (const Rational& u : points) {
            const Rational h = round_h(u, k);
            // (a) integer multiple of 1/k
            CHECK(rat_den(h * k) == 1);
            // (b) |h(u) - u| <= 1/2k
            CHECK(rat_abs(h - u) <= Rational(1, 2 * k));
            // (c) odd
            CHECK(round_h(-u, k) == -h);
            // (d) 1/k-regularity
            for (const Rational& v : points)
                if (rat_abs(u - v) <= Rational(1, k))
                    CHECK(rat_abs(h - round_h(v, k)) <= Rational(1, k));
        }
    }
}

TEST_CASE("build_p on a single unit block") {
    // k = 1: x = x_1, h o x = x, p is the identity
    const auto cert1 = build_p(EPSeq::finitely_supported({Rational(1)}), {0}, 1);
    CHECK(cert1.p == EARigidSurjection::identity());
    CHECK(cert1.distance == 0);
    CHECK(cert1.bound == Rational(1, 2));

    // k = 2: entries of x_2 are already multiples of 1/2, so again exact
    const auto cert2 = build_p(EPSeq::finitely_supported({Rational(1)}), {0}, 2);
    CHECK(cert2.p == EARigidSurjection::identity());
    CHECK(cert2.distance == 0);
    CHECK(cert2.distance <= Rational(1, 4));
}

TEST_CASE("build_p rejects bad inputs with named conditions") {
    const EPSeq one = EPSeq::finitely_supported({Rational(1)});
    CHECK_THROWS_AS(build_p(one, {0}, 0), std::domain_error);
    CHECK_THROWS_AS(build_p(EPSeq::finitely_supported({Rational(1, 2)}), {0}, 2),
                    std::domain_error); // sup not attained at 1
    CHECK_THROWS_AS(build_p(EPSeq::finitely_supported({Rational(-1)}), {0}, 2),
                    std::domain_error); // negative entry
    CHECK_THROWS_AS(build_p(EPSeq::finitely_supported({Rational(1), Rational(1, 2)}),
                            {0, 3}, 2),
                    std::domain_error); // gap 3 < 4k-1 = 7
    CHECK_THROWS_AS(build_p(one, {0, 7}, 2), std::domain_error); // offset count mismatch
    CHECK_THROWS_AS(build_p(EPSeq({}, {Rational(1), Rational(0)}), {0}, 2),
                    std::domain_error); // not finitely supported
}

TEST_CASE("build_p is deterministic and picks the smallest i0") {
    const EPSeq a = EPSeq::finitely_supported({Rational(1), Rational(1)});
    const auto c1 = build_p(a, {0, 7}, 2);
    const auto c2 = build_p(a, {0, 7}, 2);
    CHECK(c1.p == c2.p);
    CHECK(c1.distance == c2.distance);
    CHECK(c1.distance <= Rational(1, 4));
}

TEST_CASE("build_p with user offsets at the minimal gap") {
    SplitMix64 rng(31);
    for (int i = 0; i < 100; ++i) {
        const unsigned k = static_cast<unsigned>(rng.range(1, 4));
        const std::size_t support = rng.range(1, 3);
        std::vector<Rational> entries;
        std::vector<std::size_t> offsets;
        std::size_t off = rng.below(4);
        for (std::size_t j = 0; j < support; ++j) {
            const std::uint64_t den = rng.range(1, 10);
            entries.push_back(Rational(rng.range(1, den), den));
            offsets.push_back(off);
            off += 4 * static_cast<std::size_t>(k) - 1; // minimal allowed gap
        }
        entries[rng.below(support)] = Rational(1);
        const EPSeq a = EPSeq::finitely_supported(entries);
        const auto cert = build_p(a, offsets, k);
        CHECK(cert.distance <= Rational(1, 2 * k));

        // x_k o p = h o x, recomputed here
        const EPSeq xk = make_xk(k).seq;
        EPSeq x = EPSeq::zero();
        std::size_t oi = 0;
        for (std::size_t j = 0; j < a.transient_size(); ++j)
            if (a.entry(j) != 0)
                x = add_scaled(x, shift(xk, offsets[oi++]), Rational(1), a.entry(j));
        const EPSeq xkp = apply(xk, cert.p);
        for (std::size_t n = 0; n < x.stabilization_bound() + xkp.stabilization_bound(); ++n)
            CHECK(xkp.entry(n) == round_h(x.entry(n), k));
        CHECK(sup_abs(add_scaled(x, xkp, Rational(1), Rational(-1))) == cert.distance);
    }
}

TEST_CASE("embed_T") {
    CHECK(embed_T(EPSeq::zero(), 3).is_zero());
    CHECK(embed_T(EPSeq::finitely_supported({Rational(1)}), 2) == make_xk(2).seq);
    CHECK(embed_T(EPSeq::finitely_supported({Rational(-1)}), 1) ==
          EPSeq::finitely_supported({Rational(0), Rational(-1), Rational(1)}));

    SplitMix64 rng(32);
    for (int i = 0; i < 100; ++i) {
        const unsigned k = static_cast<unsigned>(rng.range(1, 4));
        std::vector<Rational> entries(rng.range(1, 5));
        for (auto& v : entries) v = (rng.coin() ? 1 : -1) * rng.unit_rational(9);
        const EPSeq a = EPSeq::finitely_supported(std::move(entries));
        CHECK(sup_abs(embed_T(a, k)) == sup_abs(a)); // T is an isometry
    }
}

TEST_CASE("approximate_in_orbit") {
    const auto pos = approximate_in_orbit(EPSeq::finitely_supported({Rational(1)}), 2);
    CHECK(pos.distance <= Rational(1, 4)); // no sign-flip penalty
    CHECK(pos.bound == Rational(1));

    const EPSeq neg = EPSeq::finitely_supported({Rational(-1)});
    // intermediate vector differs from T(a) by exactly 1/k before rounding
    const EPSeq ta = embed_T(neg, 1);
    const EPSeq x = shift(make_xk(1).seq, 1);
    CHECK(sup_abs(add_scaled(ta, x, Rational(1), Rational(-1))) == 1);
    const auto cert = approximate_in_orbit(neg, 1);
    CHECK(cert.distance <= Rational(2));
    CHECK(cert.bound == Rational(2));
}
