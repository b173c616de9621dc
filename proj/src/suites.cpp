#include "oscillab/suites.hpp"

#include <sstream>

#include <nlohmann/json.hpp>

#include "oscillab/dualramsey.hpp"
#include "oscillab/ellinf.hpp"
#include "oscillab/rng.hpp"
#include "oscillab/urysohn.hpp"

namespace oscillab {

namespace {

UPoint random_upoint(SplitMix64& rng,
                     std::uint64_t max_transient = 6,
                     std::uint64_t max_period = 4,
                     std::uint64_t max_den = 12) {
    const std::size_t tl = rng.below(max_transient + 1);
    const std::size_t pl = rng.range(1, max_period);
    std::vector<Rational> transient(tl), period(pl);
    for (auto& v : transient) v = rng.unit_rational(max_den);
    for (auto& v : period) v = rng.unit_rational(max_den);
    period[rng.below(pl)] = Rational(0); // liminf 0
    return UPoint(std::move(transient), std::move(period));
}

EPSeq random_signed_seq(SplitMix64& rng) {
    const std::size_t tl = rng.below(7);
    const std::size_t pl = rng.range(1, 4);
    std::vector<Rational> transient(tl), period(pl);
    for (auto& v : transient) v = (rng.coin() ? 1 : -1) * rng.unit_rational(12);
    for (auto& v : period) v = (rng.coin() ? 1 : -1) * rng.unit_rational(12);
    return EPSeq(std::move(transient), std::move(period));
}

EARigidSurjection random_ea(SplitMix64& rng, std::vector<std::size_t> forced = {}) {
    std::size_t next_fresh = 0;
    for (std::size_t v : forced) next_fresh = std::max(next_fresh, v + 1);
    const std::size_t extra = rng.below(7);
    std::vector<std::size_t> prefix = std::move(forced);
    for (std::size_t i = 0; i < extra || prefix.empty(); ++i) {
        const std::size_t v = prefix.empty() ? 0 : rng.below(next_fresh + 1);
        prefix.push_back(v);
        next_fresh = std::max(next_fresh, v + 1);
    }
    const std::size_t n = prefix.size();
    const std::size_t lo = n > next_fresh ? n - next_fresh : 0;
    const std::size_t c = rng.range(lo, n);
    return EARigidSurjection(std::move(prefix), c);
}

// Piecewise-affine extensions of the prefix statistics to rational times.
Rational m_affine(const UPoint& x, const UPoint& y, const Rational& t) {
    const auto k = rat_floor(t).convert_to<std::uint64_t>();
    const Rational mk = prefix_bounds(x, y, IndexOrOmega::at(k)).m_val;
    const Rational frac = t - Rational(k);
    if (frac == 0) return mk;
    const Rational mk1 = prefix_bounds(x, y, IndexOrOmega::at(k + 1)).m_val;
    return mk + frac * (mk1 - mk);
}

Rational M_affine(const UPoint& x, const UPoint& y, const Rational& t) {
    const auto k = rat_floor(t).convert_to<std::uint64_t>();
    const Rational Mk = prefix_bounds(x, y, IndexOrOmega::at(k)).M_val;
    const Rational frac = t - Rational(k);
    if (frac == 0) return Mk;
    const Rational Mk1 = prefix_bounds(x, y, IndexOrOmega::at(k + 1)).M_val;
    return Mk + frac * (Mk1 - Mk);
}

class SuiteRun {
public:
    explicit SuiteRun(std::string name) { result_.name = std::move(name); }

    void check(bool ok, const std::string& what, std::uint64_t case_index) {
        if (!ok) fail(what, case_index);
    }

    void fail(const std::string& what, std::uint64_t case_index) {
        ++result_.violations;
        if (result_.first_failure.empty())
            result_.first_failure = what + " (case " + std::to_string(case_index) + ")";
    }

    SuiteResult finish(std::uint64_t cases) {
        result_.cases = cases;
        return result_;
    }

private:
    SuiteResult result_;
};

} // namespace

SuiteResult pseudometric_suite(std::uint64_t seed, std::uint64_t cases) {
    SuiteRun run("pseudometric");
    SplitMix64 rng(seed ^ 0x70736575646fULL);
    for (std::uint64_t i = 0; i < cases; ++i) {
        const UPoint x = random_upoint(rng), y = random_upoint(rng), z = random_upoint(rng);
        run.check(dist(x, x).d == 0, "dist(x,x) != 0", i);
        run.check(dist(x, y).d == dist(y, x).d, "symmetry", i);
        run.check(dist(x, z).d <= dist(x, y).d + dist(y, z).d, "triangle inequality", i);
        run.check(dist(x, y).d <= 1, "diameter > 1", i);
    }
    return run.finish(cases);
}

SuiteResult mm_structure_suite(std::uint64_t seed, std::uint64_t cases) {
    SuiteRun run("mm_structure");
    SplitMix64 rng(seed ^ 0x6d4d737472ULL);
    for (std::uint64_t i = 0; i < cases; ++i) {
        const UPoint x = random_upoint(rng), y = random_upoint(rng), z = random_upoint(rng);
        const std::size_t stab = std::max({x.stabilization_bound(), y.stabilization_bound(),
                                           z.stabilization_bound()}) * 2;
        Rational prev_m(-1), prev_M(3);
        for (std::size_t n = 0; n <= stab; ++n) {
            const auto idx = IndexOrOmega::at(n);
            const PrefixBounds xy = prefix_bounds(x, y, idx);
            run.check(xy.m_val >= prev_m, "m not nondecreasing", i);
            run.check(xy.M_val <= prev_M, "M not nonincreasing", i);
            const PrefixBounds xz = prefix_bounds(x, z, idx);
            const PrefixBounds yz = prefix_bounds(y, z, idx);
            run.check(xz.m_val <= xy.m_val + yz.m_val, "m triangle", i);
            run.check(xz.M_val <= xy.M_val + yz.m_val, "M/m triangle", i);
            if (n > 0) {
                // at least one of: m constant, M constant, m <= M at n
                const bool m_const = xy.m_val == prev_m;
                const bool M_const = xy.M_val == prev_M;
                run.check(m_const || M_const || xy.m_val <= xy.M_val,
                          "step alternative fails", i);
            }
            prev_m = xy.m_val;
            prev_M = xy.M_val;
        }
        const PrefixBounds at0 = prefix_bounds(x, y, IndexOrOmega::at(0));
        run.check(at0.m_val <= at0.M_val, "m(0) > M(0)", i);
        const PrefixBounds atw = prefix_bounds(x, y, IndexOrOmega::omega());
        run.check(atw.M_val <= atw.m_val, "M(omega) > m(omega)", i);
    }
    return run.finish(cases);
}

SuiteResult witness_suite(std::uint64_t seed, std::uint64_t cases) {
    SuiteRun run("witness");
    SplitMix64 rng(seed ^ 0x7769746eULL);
    for (std::uint64_t i = 0; i < cases; ++i) {
        const UPoint x = random_upoint(rng), y = random_upoint(rng);
        const DistanceResult d = dist(x, y);
        run.check(m_affine(x, y, d.witness_t) == d.d, "m(t) != d at witness", i);
        run.check(M_affine(x, y, d.witness_t) == d.d, "M(t) != d at witness", i);
        run.check(d.d <= prefix_bounds(x, y, d.crossing).m_val, "d > m at crossing", i);
    }
    return run.finish(cases);
}

SuiteResult isometry_suite(std::uint64_t seed, std::uint64_t cases) {
    SuiteRun run("isometry");
    SplitMix64 rng(seed ^ 0x69736f6dULL);
    for (std::uint64_t i = 0; i < cases; ++i) {
        const UPoint x = random_upoint(rng), y = random_upoint(rng);
        const EARigidSurjection p = random_ea(rng);
        run.check(dist(apply(x, p), apply(y, p)).d == dist(x, y).d,
                  "action not isometric for d", i);
        const EPSeq s = random_signed_seq(rng);
        run.check(sup_abs(apply(s, p)) == sup_abs(s), "sup norm not preserved", i);

        // index transport: m(x o p, y o p, n) = m(x, y, k) for h(k) <= n < h(k+1)
        const UPoint xp = apply(x, p), yp = apply(y, p);
        const std::size_t kmax = detail::pair_bound(x, y);
        for (std::size_t k = 0; k < kmax; ++k) {
            const Rational mk = prefix_bounds(x, y, IndexOrOmega::at(k)).m_val;
            const Rational Mk = prefix_bounds(x, y, IndexOrOmega::at(k)).M_val;
            for (std::size_t n = p.first_preimage(k); n < p.first_preimage(k + 1); ++n) {
                run.check(prefix_bounds(xp, yp, IndexOrOmega::at(n)).m_val == mk,
                          "index transport for m", i);
                run.check(prefix_bounds(xp, yp, IndexOrOmega::at(n)).M_val == Mk,
                          "index transport for M", i);
            }
        }
    }
    return run.finish(cases);
}

SuiteResult orbit_approx_suite(std::uint64_t seed, std::uint64_t cases) {
    SuiteRun run("orbit_approx");
    SplitMix64 rng(seed ^ 0x6c656d33ULL);
    for (std::uint64_t i = 0; i < cases; ++i) {
        const unsigned k = static_cast<unsigned>(rng.range(1, 4));
        const std::size_t support = rng.range(1, 4);

        std::vector<std::size_t> indices;
        std::size_t idx = rng.below(3);
        for (std::size_t j = 0; j < support; ++j) {
            indices.push_back(idx);
            idx += 1 + rng.below(3);
        }
        std::vector<Rational> entries(indices.back() + 1, Rational(0));
        for (std::size_t j : indices) {
            const std::uint64_t den = rng.range(1, 10);
            entries[j] = Rational(rng.range(1, den), den);
        }
        entries[indices[rng.below(support)]] = Rational(1); // sup attained

        std::vector<std::size_t> offsets;
        std::size_t off = rng.below(5);
        for (std::size_t j = 0; j < support; ++j) {
            offsets.push_back(off);
            off += 4 * static_cast<std::size_t>(k) - 1 + rng.below(4);
        }

        const EPSeq a = EPSeq::finitely_supported(entries);
        try {
            const ApproximationCertificate cert = build_p(a, offsets, k);
            // recompute the claims independently of the certificate fields
            const EPSeq xk = make_xk(k).seq;
            EPSeq x = EPSeq::zero();
            std::size_t oi = 0;
            for (std::size_t j = 0; j < a.transient_size(); ++j)
                if (a.entry(j) != 0)
                    x = add_scaled(x, shift(xk, offsets[oi++]), Rational(1), a.entry(j));
            const EPSeq xkp = apply(xk, cert.p);
            const Rational distance = sup_abs(add_scaled(x, xkp, Rational(1), Rational(-1)));
            run.check(distance <= Rational(1, 2 * k), "distance > 1/2k", i);
            run.check(distance == cert.distance, "certificate distance mismatch", i);
            const std::size_t bound = x.stabilization_bound() + xkp.stabilization_bound();
            bool pointwise = true;
            for (std::size_t n = 0; n <= bound; ++n)
                if (xkp.entry(n) != round_h(x.entry(n), k)) pointwise = false;
            run.check(pointwise, "x_k o p != h o x", i);
        } catch (const std::exception& e) {
            run.fail(std::string("build_p threw: ") + e.what(), i);
        }
    }
    return run.finish(cases);
}

SuiteResult sphere_approx_suite(std::uint64_t seed, std::uint64_t cases) {
    SuiteRun run("sphere_approx");
    SplitMix64 rng(seed ^ 0x70333200ULL);
    // sup|x_k + S(x_k)| = 1/k
    for (unsigned k = 1; k <= 6; ++k) {
        const EPSeq xk = make_xk(k).seq;
        run.check(sup_abs(add_scaled(xk, shift(xk, 1), Rational(1), Rational(1))) ==
                      Rational(1, k),
                  "sup|x_k + S(x_k)| != 1/k", k);
    }
    for (std::uint64_t i = 0; i < cases; ++i) {
        const unsigned k = static_cast<unsigned>(rng.range(1, 4));
        const std::size_t support = rng.range(1, 4);
        std::vector<std::size_t> indices;
        std::size_t idx = rng.below(2);
        for (std::size_t j = 0; j < support; ++j) {
            indices.push_back(idx);
            idx += 1 + rng.below(2);
        }
        std::vector<Rational> entries(indices.back() + 1, Rational(0));
        for (std::size_t j : indices) {
            const std::uint64_t den = rng.range(1, 10);
            entries[j] = (rng.coin() ? 1 : -1) * Rational(rng.range(1, den), den);
        }
        entries[indices[rng.below(support)]] = Rational(rng.coin() ? 1 : -1);
        const EPSeq a = EPSeq::finitely_supported(entries);

        try {
            const ApproximationCertificate cert = approximate_in_orbit(a, k);
            const EPSeq xk = make_xk(k).seq;
            const EPSeq ta = embed_T(a, k);
            const Rational distance =
                sup_abs(add_scaled(ta, apply(xk, cert.p), Rational(1), Rational(-1)));
            run.check(distance <= Rational(2, k), "distance > 2/k", i);
            run.check(distance == cert.distance, "certificate distance mismatch", i);
            run.check(cert.bound == Rational(2, k), "certificate bound != 2/k", i);

            // intermediate vector x with the signed offsets
            EPSeq x = EPSeq::zero();
            for (std::size_t j = 0; j < a.transient_size(); ++j)
                if (a.entry(j) != 0) {
                    const std::size_t off =
                        4 * static_cast<std::size_t>(k) * j + (a.entry(j) < 0 ? 1 : 0);
                    x = add_scaled(x, shift(xk, off), Rational(1), rat_abs(a.entry(j)));
                }
            run.check(sup_abs(add_scaled(ta, x, Rational(1), Rational(-1))) <= Rational(1, k),
                      "intermediate |T(a) - x| > 1/k", i);
            run.check(sup_abs(ta) == sup_abs(a), "T not isometric", i);
        } catch (const std::exception& e) {
            run.fail(std::string("approximate_in_orbit threw: ") + e.what(), i);
        }
    }
    return run.finish(cases);
}

SuiteResult embedding_suite(std::uint64_t seed, std::uint64_t cases) {
    SuiteRun run("embedding");
    SplitMix64 rng(seed ^ 0x656d6264ULL);
    for (std::uint64_t i = 0; i < cases; ++i) {
        const std::size_t n = rng.range(1, 5);
        // distances in [1/2, 1] satisfy the triangle inequality outright
        std::vector<std::vector<Rational>> d(n, std::vector<Rational>(n, Rational(0)));
        std::vector<std::string> names;
        for (std::size_t a = 0; a < n; ++a) names.push_back("P" + std::to_string(a));
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a + 1; b < n; ++b) {
                const std::uint64_t den = rng.range(1, 8);
                const std::uint64_t num = rng.range((den + 1) / 2, den);
                d[a][b] = d[b][a] = Rational(num, den);
            }
        const unsigned r = static_cast<unsigned>(rng.range(1, 4));
        try {
            const FiniteMetricSpace space(names, d);
            const EmbeddingReport report = embed_metric(space, r);
            const Rational half(1, 2 * r);
            for (std::size_t a = 0; a < n; ++a) {
                run.check(report.points[a].membership_distance <= half,
                          "membership distance > 1/2r", i);
                run.check(report.points[a].f.entry(0) == 1, "f(x)(0) != 1", i);
                const std::size_t stab = report.points[a].f.stabilization_bound();
                for (std::size_t m = 0; m < stab; ++m)
                    run.check(rat_abs(report.points[a].f.entry(m + 1) -
                                      report.points[a].f.entry(m)) <= Rational(1, r),
                              "step condition fails", i);
                for (std::size_t b = a + 1; b < n; ++b)
                    run.check(dist(report.points[a].f, report.points[b].f).d == d[a][b],
                              "embedding not isometric", i);
            }
        } catch (const std::exception& e) {
            run.fail(std::string("embed_metric threw: ") + e.what(), i);
        }
    }
    return run.finish(cases);
}

SuiteResult prefix_agreement_suite(std::uint64_t seed, std::uint64_t cases) {
    SuiteRun run("prefix_agreement");
    SplitMix64 rng(seed ^ 0x70666978ULL);
    for (std::uint64_t i = 0; i < cases; ++i) {
        const unsigned r = static_cast<unsigned>(rng.range(1, 4));
        const EARigidSurjection p = random_ea(rng);
        const std::size_t through = p.first_preimage(r);
        std::vector<std::size_t> agreed(through + 1);
        for (std::size_t n = 0; n <= through; ++n) agreed[n] = p(n);
        const EARigidSurjection q = random_ea(rng, std::move(agreed));
        const UPoint wr = make_wr(r);
        run.check(dist(apply(wr, p), apply(wr, q)).d == 0,
                  "d(w_r o p, w_r o q) != 0", i);
    }
    return run.finish(cases);
}

SuiteResult combinatorics_suite() {
    SuiteRun run("combinatorics");
    std::uint64_t cases = 0;

    // Stirling numbers of the second kind by the recurrence, as the count oracle
    constexpr std::size_t NMAX = 8;
    std::uint64_t stirling[NMAX + 1][NMAX + 1] = {};
    stirling[0][0] = 1;
    for (std::size_t n = 1; n <= NMAX; ++n)
        for (std::size_t m = 1; m <= n; ++m)
            stirling[n][m] = m * stirling[n - 1][m] + stirling[n - 1][m - 1];
    for (std::size_t n = 1; n <= NMAX; ++n)
        for (std::size_t m = 1; m <= n; ++m) {
            ++cases;
            run.check(enumerate_rigid(n, m).size() == stirling[n][m],
                      "enumeration count != S(n,m)", n * 100 + m);
        }

    // factorization <-> coarsening, exhaustively on a common domain [n]
    for (std::size_t n = 1; n <= 6; ++n) {
        std::vector<FiniteRigidSurjection> all;
        for (std::size_t m = 1; m <= n; ++m)
            for (const auto& f : enumerate_rigid(n, m)) all.push_back(f);
        for (const auto& q : all)
            for (const auto& p : all) {
                ++cases;
                // independent coarsening test: q constant on every block of p
                const OrderedPartition bp = to_ordered_partition(p);
                bool coarsens = true;
                for (const auto& block : bp.blocks)
                    for (std::size_t e : block)
                        if (q(e) != q(block.front())) coarsens = false;
                const auto r = factorize(q, p);
                run.check(r.has_value() == coarsens, "factorize vs coarsening", n);
                if (r) {
                    run.check(compose(*r, p) == q, "factorize: r o p != q", n);
                }
            }
    }

    // round trip through ordered partitions
    for (std::size_t n = 1; n <= 6; ++n)
        for (std::size_t m = 1; m <= n; ++m)
            for (const auto& f : enumerate_rigid(n, m)) {
                ++cases;
                run.check(from_ordered_partition(to_ordered_partition(f)) == f,
                          "partition round trip", n);
            }

    // dual-Ramsey searches with independent verification
    {
        const ColoringTable table = ColoringTable::position_mod(4, 2, 3, 2);
        const auto w = search_monochromatic(table, 2);
        ++cases;
        if (w) {
            run.check(verify_witness(table, *w), "witness fails verification", 0);
            // coarsening coherence: factorize(r o p, p) recovers r
            for (const auto& r : enumerate_rigid(2, 2)) {
                ++cases;
                const auto back = factorize(compose(r, w->p), w->p);
                run.check(back.has_value() && *back == r, "coarsening coherence", 0);
            }
        }
        // independent exhaustive oracle over all candidates
        std::optional<MonochromaticWitness> oracle;
        for (const auto& p : enumerate_rigid(4, 2)) {
            bool mono = true;
            std::optional<unsigned> color;
            for (const auto& r : enumerate_rigid(2, 2)) {
                const unsigned c = table.color_of(compose(r, p));
                if (!color) color = c;
                else if (*color != c) mono = false;
            }
            if (mono) { oracle = MonochromaticWitness{p, *color}; break; }
        }
        ++cases;
        run.check(w.has_value() == oracle.has_value() &&
                      (!w || (w->p == oracle->p && w->color == oracle->color)),
                  "search disagrees with exhaustive oracle", 0);
    }
    {
        // constant coloring: the first candidate must win
        std::map<std::vector<std::size_t>, unsigned> colors;
        for (const auto& f : enumerate_rigid(5, 2)) colors[f.values()] = 1;
        const ColoringTable table(5, 2, 3, std::move(colors));
        const auto w = search_monochromatic(table, 3);
        ++cases;
        run.check(w.has_value() && w->color == 1 &&
                      w->p == enumerate_rigid(5, 3).front() &&
                      verify_witness(table, *w),
                  "constant coloring search", 0);
    }

    return run.finish(cases);
}

std::vector<SuiteResult> run_all_suites(std::uint64_t seed, std::uint64_t cases) {
    return {
        pseudometric_suite(seed, cases),
        mm_structure_suite(seed, cases),
        witness_suite(seed, cases / 2),
        isometry_suite(seed, cases / 2),
        orbit_approx_suite(seed, cases / 5),
        sphere_approx_suite(seed, cases / 5),
        embedding_suite(seed, cases / 5),
        prefix_agreement_suite(seed, cases / 5),
        combinatorics_suite(),
    };
}

std::string render_report_table(const std::vector<SuiteResult>& results) {
    std::ostringstream out;
    for (const auto& r : results) {
        out << "suite=" << r.name << " cases=" << r.cases
            << " violations=" << r.violations
            << " status=" << (r.passed() ? "PASS" : "FAIL");
        if (!r.first_failure.empty()) out << " first_failure=\"" << r.first_failure << "\"";
        out << "\n";
    }
    return out.str();
}

std::string render_report_json(const std::vector<SuiteResult>& results,
                               std::uint64_t seed, std::uint64_t cases) {
    nlohmann::json suites = nlohmann::json::array();
    for (const auto& r : results) {
        nlohmann::json entry{{"suite", r.name},
                             {"cases", r.cases},
                             {"violations", r.violations},
                             {"status", r.passed() ? "PASS" : "FAIL"}};
        if (!r.first_failure.empty()) entry["first_failure"] = r.first_failure;
        suites.push_back(std::move(entry));
    }
    nlohmann::json report{{"seed", seed}, {"cases", cases}, {"suites", suites}};
    return report.dump(2) + "\n";
}

} // namespace oscillab
