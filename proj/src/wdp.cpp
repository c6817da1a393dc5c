#include "platepack/wdp.hpp"

namespace platepack {

BatchScore score(const Layout& layout, const Instance& instance) {
    BatchScore s;
    for (const Placement& pl : layout.placements) {
        s.total_mass += part_mass(instance.parts.at(pl.part));
        s.covered_area += pl.placed_length * pl.placed_width;
    }
    const double bed = layout.platform.area();
    s.coverage_fraction = bed > 0.0 ? s.covered_area / bed : 0.0;
    s.part_count = layout.placements.size();
    if (instance.economics) {
        s.income = income(s.total_mass, *instance.economics);
        s.cost = cost(s.total_mass, *instance.economics);
    }
    return s;
}

double income(double mass, const EconomicParams& economics) {
    return scaled_by_decimal(mass, economics.price_per_mm3);
}

double cost(double mass, const EconomicParams& economics) {
    return economics.fixed_cost + scaled_by_decimal(mass, economics.variable_cost);
}

bool outranks(const Layout& a, const Layout& b) {
    if (a.total_mass != b.total_mass) return a.total_mass > b.total_mass;
    return a.covered_area > b.covered_area;
}

std::size_t select_winner(std::span<const Layout> candidates) {
    if (candidates.empty()) throw ValidationError("no candidate layouts");
    std::size_t best = 0;
    for (std::size_t i = 1; i < candidates.size(); ++i) {
        if (outranks(candidates[i], candidates[best])) best = i;
    }
    return best;
}

} // namespace platepack
