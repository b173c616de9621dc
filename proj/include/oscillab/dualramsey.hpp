#pragma once

#include <map>
#include <optional>
#include <vector>

#include "oscillab/rigidsurj.hpp"

namespace oscillab {

// Total coloring of the rigid surjections [n] -> [k]; the search space of
// the finite dual-Ramsey analogue.
class ColoringTable {
public:
    ColoringTable(std::size_t n, std::size_t k, unsigned num_colors,
                  std::map<std::vector<std::size_t>, unsigned> colors)
        : n_(n), k_(k), num_colors_(num_colors), colors_(std::move(colors)) {
        for (const auto& f : enumerate_rigid(n_, k_)) {
            auto it = colors_.find(f.values());
            if (it == colors_.end())
                throw std::domain_error("ColoringTable: coloring not total on rigid [n]->[k]");
            if (it->second >= num_colors_)
                throw std::domain_error("ColoringTable: color index out of range");
        }
    }

    // Compact instance form: color(f) = f(position) mod num_colors.
    static ColoringTable position_mod(std::size_t n, std::size_t k,
                                      std::size_t position, unsigned num_colors) {
        if (position >= n)
            throw std::domain_error("ColoringTable: position outside the domain");
        std::map<std::vector<std::size_t>, unsigned> colors;
        for (const auto& f : enumerate_rigid(n, k))
            colors[f.values()] = static_cast<unsigned>(f(position) % num_colors);
        return ColoringTable(n, k, num_colors, std::move(colors));
    }

    std::size_t n() const { return n_; }
    std::size_t k() const { return k_; }
    unsigned num_colors() const { return num_colors_; }

    unsigned color_of(const FiniteRigidSurjection& f) const {
        auto it = colors_.find(f.values());
        if (it == colors_.end())
            throw std::domain_error("ColoringTable: surjection outside the table");
        return it->second;
    }

private:
    std::size_t n_, k_;
    unsigned num_colors_;
    std::map<std::vector<std::size_t>, unsigned> colors_;
};

// p such that every composite r o p, r rigid [m] -> [k], has this color.
struct MonochromaticWitness {
    FiniteRigidSurjection p;
    unsigned color;
};

inline bool verify_witness(const ColoringTable& table, const MonochromaticWitness& w) {
    if (w.p.domain_size() != table.n()) return false;
    const std::size_t m = w.p.codomain_size();
    if (m < table.k() || !is_rigid(w.p.values())) return false;
    for (const auto& r : enumerate_rigid(m, table.k()))
        if (table.color_of(compose(r, w.p)) != w.color) return false;
    return true;
}

// Exhaustive scan of the rigid surjections [n] -> [m] in lexicographic
// order for the first p whose composed family {r o p} is monochromatic.
// Candidates are abandoned at the first color mismatch. The returned
// witness is re-verified before being handed out.
inline std::optional<MonochromaticWitness> search_monochromatic(const ColoringTable& table,
                                                                std::size_t m) {
    if (m < table.k() || m > table.n())
        throw std::domain_error("search_monochromatic: need k <= m <= n");
    const std::vector<FiniteRigidSurjection> coarsenings = enumerate_rigid(m, table.k());
    for (const auto& p : enumerate_rigid(table.n(), m)) {
        bool mono = true;
        unsigned color = 0;
        for (std::size_t i = 0; i < coarsenings.size(); ++i) {
            const unsigned c = table.color_of(compose(coarsenings[i], p));
            if (i == 0) {
                color = c;
            } else if (c != color) {
                mono = false;
                break;
            }
        }
        if (mono) {
            MonochromaticWitness w{p, color};
            if (!verify_witness(table, w))
                throw std::logic_error("search_monochromatic: witness failed re-verification");
            return w;
        }
    }
    return std::nullopt;
}

} // namespace oscillab
