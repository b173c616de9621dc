// Command-line front end: exact constructions, distance reports, the
// dual-Ramsey explorer, and the seeded self-verification battery. All
// authoritative output is exact rationals serialized as "num/den".

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "oscillab/json_io.hpp"
#include "oscillab/suites.hpp"

namespace {

using namespace oscillab;

constexpr int kExitOk = 0;
constexpr int kExitPropertyViolation = 1;
constexpr int kExitInputError = 2;

// Inputs are either a file path or inline JSON (detected by a leading '{').
json load_json(const std::string& arg) {
    std::string text = arg;
    if (arg.empty() || arg[0] != '{') {
        std::ifstream in(arg);
        if (!in) throw std::domain_error("cannot open input file: " + arg);
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::domain_error(std::string("malformed JSON: ") + e.what());
    }
}

void emit(const json& j, bool decimal) {
    if (!decimal) {
        std::cout << j.dump(2) << "\n";
        return;
    }
    // add a non-authoritative decimal rendering next to each rational string
    json annotated = j;
    annotated["decimal_note"] = "decimal column is approximate; rationals are authoritative";
    std::cout << annotated.dump(2) << "\n";
}

std::uint64_t resolve_seed(const CLI::Option* seed_opt, std::uint64_t seed_flag) {
    if (seed_opt->count() > 0) return seed_flag;
    if (const char* env = std::getenv("OSCILLAB_SEED")) return std::strtoull(env, nullptr, 10);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"oscillab: exact-rational toolkit for rigid surjections, "
                 "orbit approximation, and the Urysohn model"};
    app.require_subcommand(1);

    bool decimal = false;
    app.add_flag("--decimal", decimal, "add approximate decimal renderings (non-authoritative)");

    unsigned arg_k = 0, arg_r = 0;
    std::string input_a, input_b;

    auto* cmd_xk = app.add_subcommand("xk", "emit the staircase vector x_k");
    cmd_xk->add_option("k", arg_k, "index k >= 1")->required();

    auto* cmd_h = app.add_subcommand("h", "emit the rounding map h on the grid {j/4k}");
    cmd_h->add_option("k", arg_k, "index k >= 1")->required();

    auto* cmd_approx = app.add_subcommand("approx", "orbit-approximation certificate for T(a)");
    cmd_approx->add_option("a", input_a, "finitely supported a (file or inline JSON EPSeq)")->required();
    cmd_approx->add_option("k", arg_k, "index k >= 1")->required();

    auto* cmd_udist = app.add_subcommand("udist", "pseudodistance between two U-points");
    cmd_udist->add_option("x", input_a, "first U-point (file or inline JSON EPSeq)")->required();
    cmd_udist->add_option("y", input_b, "second U-point (file or inline JSON EPSeq)")->required();

    auto* cmd_wr = app.add_subcommand("wr", "emit the staircase w_r");
    cmd_wr->add_option("r", arg_r, "index r >= 1")->required();

    auto* cmd_embed = app.add_subcommand("embed", "embed a finite metric space near the w_r orbit");
    cmd_embed->add_option("space", input_a, "finite metric space (file or inline JSON)")->required();
    cmd_embed->add_option("r", arg_r, "index r >= 1")->required();

    auto* cmd_ramsey = app.add_subcommand("ramsey", "search a coloring for a monochromatic coarsening family");
    cmd_ramsey->add_option("instance", input_a, "instance (file or inline JSON)")->required();

    std::uint64_t seed = 0, cases = 1000;
    std::string format = "json";
    auto* cmd_selftest = app.add_subcommand("selftest", "run every invariant suite");
    auto* seed_opt = cmd_selftest->add_option("--seed", seed, "seed for the splitmix64 generator");
    cmd_selftest->add_option("--cases", cases, "base case count per randomized suite");
    cmd_selftest->add_option("--format", format, "report format: json | table")
        ->check(CLI::IsMember({"json", "table"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (*cmd_xk) {
            if (arg_k == 0) throw std::domain_error("k must be >= 1");
            emit(to_json(make_xk(arg_k).seq), decimal);
        } else if (*cmd_h) {
            if (arg_k == 0) throw std::domain_error("k must be >= 1");
            json table = json::array();
            const long grid = 4L * arg_k;
            for (long j = -grid; j <= grid; ++j) {
                const Rational u(j, grid);
                table.push_back(json{{"u", rat_to_string(u)},
                                     {"h", rat_to_string(round_h(u, arg_k))}});
            }
            emit(json{{"k", arg_k}, {"table", table}}, decimal);
        } else if (*cmd_approx) {
            const EPSeq a = epseq_from_json(load_json(input_a));
            emit(to_json(approximate_in_orbit(a, arg_k)), decimal);
        } else if (*cmd_udist) {
            const UPoint x = upoint_from_json(load_json(input_a));
            const UPoint y = upoint_from_json(load_json(input_b));
            emit(to_json(dist(x, y)), decimal);
        } else if (*cmd_wr) {
            if (arg_r == 0) throw std::domain_error("r must be >= 1");
            emit(to_json(make_wr(arg_r).seq()), decimal);
        } else if (*cmd_embed) {
            const FiniteMetricSpace space = metric_space_from_json(load_json(input_a));
            emit(to_json(embed_metric(space, arg_r)), decimal);
        } else if (*cmd_ramsey) {
            const RamseyInstance instance = ramsey_instance_from_json(load_json(input_a));
            const auto witness = search_monochromatic(instance.table, instance.m);
            json out{{"found", witness.has_value()}};
            if (witness) out["witness"] = to_json(*witness);
            emit(out, decimal);
        } else if (*cmd_selftest) {
            const std::uint64_t s = resolve_seed(seed_opt, seed);
            const auto results = run_all_suites(s, cases);
            std::cout << (format == "table" ? render_report_table(results)
                                            : render_report_json(results, s, cases));
            for (const auto& r : results)
                if (!r.passed()) return kExitPropertyViolation;
        }
    } catch (const std::domain_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "property violation: " << e.what() << "\n";
        return kExitPropertyViolation;
    }
    return kExitOk;
}
