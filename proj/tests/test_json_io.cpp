#include "doctest.h"

#include "oscillab/json_io.hpp"
#include "oscillab/rng.hpp"

using namespace oscillab;

TEST_CASE("EPSeq schema") {
    const EPSeq x({Rational(1), Rational(1, 2)}, {Rational(0)});
    const json j = to_json(x);
    CHECK(j.at("transient") == json::array({"1/1", "1/2"}));
    CHECK(j.at("period") == json::array({"0/1"}));
    CHECK(epseq_from_json(j) == x);
}

TEST_CASE("round trips on random values") {
    SplitMix64 rng(51);
    for (int i = 0; i < 100; ++i) {
        std::vector<Rational> transient(rng.below(5)), period(rng.range(1, 3));
        for (auto& v : transient) v = (rng.coin() ? 1 : -1) * rng.unit_rational(12);
        for (auto& v : period) v = (rng.coin() ? 1 : -1) * rng.unit_rational(12);
        const EPSeq x(std::move(transient), std::move(period));
        CHECK(epseq_from_json(json::parse(to_json(x).dump())) == x);
    }
    for (std::size_t n = 1; n <= 5; ++n)
        for (std::size_t m = 1; m <= n; ++m)
            for (const auto& f : enumerate_rigid(n, m))
                CHECK(finite_rigid_from_json(to_json(f)) == f);
    const EARigidSurjection p({0, 0, 1}, 1);
    CHECK(ea_rigid_from_json(to_json(p)) == p);
}

TEST_CASE("metric space schema") {
    const FiniteMetricSpace space({"A", "B"},
                                  {{Rational(0), Rational(1, 2)},
                                   {Rational(1, 2), Rational(0)}});
    const json j = to_json(space);
    CHECK(j.at("points") == json::array({"A", "B"}));
    const FiniteMetricSpace back = metric_space_from_json(j);
    CHECK(back.names == space.names);
    CHECK(back.dist == space.dist);
}

TEST_CASE("decoding rejects malformed input") {
    CHECK_THROWS_AS(epseq_from_json(json{{"transient", json::array()}}), json::exception);
    CHECK_THROWS_AS(epseq_from_json(json{{"transient", json::array({"1/2"})},
                                         {"period", json::array({"1/0"})}}),
                    std::domain_error);
    CHECK_THROWS_AS(ea_rigid_from_json(json{{"prefix", json::array({1, 0})},
                                            {"tail_offset", 0}}),
                    std::domain_error);
    CHECK_THROWS_AS(rational_from_json(json(3)), std::domain_error);
}

TEST_CASE("ramsey instance parsing") {
    const json j{{"n", 4}, {"k", 2}, {"m", 2},
                 {"coloring", json{{"kind", "position_mod"}, {"position", 3}, {"colors", 2}}}};
    const RamseyInstance instance = ramsey_instance_from_json(j);
    CHECK(instance.m == 2);
    CHECK(instance.table.n() == 4);
    CHECK(instance.table.k() == 2);

    json bad = j;
    bad["coloring"]["kind"] = "mystery";
    CHECK_THROWS_AS(ramsey_instance_from_json(bad), std::domain_error);
}
