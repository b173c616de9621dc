#pragma once

#include <nlohmann/json.hpp>

#include "oscillab/dualramsey.hpp"
#include "oscillab/ellinf.hpp"
#include "oscillab/epseq.hpp"
#include "oscillab/rigidsurj.hpp"
#include "oscillab/urysohn.hpp"

namespace oscillab {

using nlohmann::json;

inline json to_json(const Rational& r) { return rat_to_string(r); }

inline Rational rational_from_json(const json& j) {
    if (!j.is_string()) throw std::domain_error("expected rational as \"num/den\" string");
    return rat_from_string(j.get<std::string>());
}

inline json rationals_to_json(const std::vector<Rational>& v) {
    json arr = json::array();
    for (const auto& r : v) arr.push_back(rat_to_string(r));
    return arr;
}

inline std::vector<Rational> rationals_from_json(const json& j) {
    if (!j.is_array()) throw std::domain_error("expected an array of rationals");
    std::vector<Rational> out;
    out.reserve(j.size());
    for (const auto& e : j) out.push_back(rational_from_json(e));
    return out;
}

// {"transient": ["num/den", ...], "period": ["num/den", ...]}
inline json to_json(const EPSeq& x) {
    return json{{"transient", rationals_to_json(x.transient())},
                {"period", rationals_to_json(x.period())}};
}

inline EPSeq epseq_from_json(const json& j) {
    return EPSeq(rationals_from_json(j.at("transient")),
                 rationals_from_json(j.at("period")));
}

inline UPoint upoint_from_json(const json& j) { return UPoint(epseq_from_json(j)); }

// {"values": [...]}
inline json to_json(const FiniteRigidSurjection& f) {
    return json{{"values", f.values()}};
}

inline FiniteRigidSurjection finite_rigid_from_json(const json& j) {
    return FiniteRigidSurjection(j.at("values").get<std::vector<std::size_t>>());
}

// {"prefix": [...], "tail_offset": c}
inline json to_json(const EARigidSurjection& p) {
    return json{{"prefix", p.prefix()}, {"tail_offset", p.tail_offset()}};
}

inline EARigidSurjection ea_rigid_from_json(const json& j) {
    return EARigidSurjection(j.at("prefix").get<std::vector<std::size_t>>(),
                             j.at("tail_offset").get<std::size_t>());
}

// {"p": ..., "distance": "num/den", "bound": "num/den"}
inline json to_json(const ApproximationCertificate& c) {
    return json{{"p", to_json(c.p)},
                {"distance", rat_to_string(c.distance)},
                {"bound", rat_to_string(c.bound)}};
}

inline json to_json(const IndexOrOmega& n) {
    if (n.is_omega()) return "omega";
    return n.finite();
}

inline json to_json(const DistanceResult& d) {
    return json{{"d", rat_to_string(d.d)},
                {"crossing", to_json(d.crossing)},
                {"case", to_string(d.case_tag)},
                {"witness_t", rat_to_string(d.witness_t)}};
}

// {"points": ["A", ...], "dist": [["num/den", ...], ...]}
inline json to_json(const FiniteMetricSpace& space) {
    json rows = json::array();
    for (const auto& row : space.dist) rows.push_back(rationals_to_json(row));
    return json{{"points", space.names}, {"dist", rows}};
}

inline FiniteMetricSpace metric_space_from_json(const json& j) {
    std::vector<std::vector<Rational>> dist;
    for (const auto& row : j.at("dist")) dist.push_back(rationals_from_json(row));
    return FiniteMetricSpace(j.at("points").get<std::vector<std::string>>(),
                             std::move(dist));
}

inline json to_json(const EmbeddingReport& report) {
    json points = json::array();
    for (const auto& pt : report.points)
        points.push_back(json{{"name", pt.name},
                              {"f", to_json(pt.f.seq())},
                              {"p", to_json(pt.p)},
                              {"membership_distance", rat_to_string(pt.membership_distance)}});
    json transient = json::array(), period = json::array();
    for (const auto& node : report.tour_transient) transient.push_back(rationals_to_json(node));
    for (const auto& node : report.tour_period) period.push_back(rationals_to_json(node));
    return json{{"points", points},
                {"tour", json{{"transient", transient}, {"period", period}}}};
}

inline json to_json(const MonochromaticWitness& w) {
    return json{{"p", to_json(w.p)}, {"color", w.color}};
}

// {"n":..., "k":..., "m":..., "coloring": {"kind": "table"|"position_mod", ...}}
struct RamseyInstance {
    ColoringTable table;
    std::size_t m;
};

inline RamseyInstance ramsey_instance_from_json(const json& j) {
    const auto n = j.at("n").get<std::size_t>();
    const auto k = j.at("k").get<std::size_t>();
    const auto m = j.at("m").get<std::size_t>();
    const json& coloring = j.at("coloring");
    const auto kind = coloring.at("kind").get<std::string>();
    if (kind == "position_mod") {
        return {ColoringTable::position_mod(n, k,
                                            coloring.at("position").get<std::size_t>(),
                                            coloring.at("colors").get<unsigned>()),
                m};
    }
    if (kind == "table") {
        std::map<std::vector<std::size_t>, unsigned> colors;
        for (const auto& e : coloring.at("entries"))
            colors[e.at("values").get<std::vector<std::size_t>>()] =
                e.at("color").get<unsigned>();
        return {ColoringTable(n, k, coloring.at("colors").get<unsigned>(),
                              std::move(colors)),
                m};
    }
    throw std::domain_error("coloring kind must be \"table\" or \"position_mod\"");
}

} // namespace oscillab
