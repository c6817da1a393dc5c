#pragma once

#include "platepack/model.hpp"

#include <span>

namespace platepack {

struct BatchScore {
    double total_mass = 0.0;
    double covered_area = 0.0;
    double coverage_fraction = 0.0;
    std::size_t part_count = 0;
    std::optional<double> income;
    std::optional<double> cost;
};

/// The two figures the winner decision is based on (mass and occupied
/// area), plus income/cost when economic parameters are available.
BatchScore score(const Layout& layout, const Instance& instance);

/// Expected income for a batch of mass m: p * m.
double income(double mass, const EconomicParams& economics);

/// Production cost for a batch of mass m: k + c * m.
double cost(double mass, const EconomicParams& economics);

/// Winner ordering: more mass first, then more covered area. Strict; equal
/// batches compare false both ways so callers add their own final
/// tie-break (candidate index).
bool outranks(const Layout& a, const Layout& b);

/// Index of the winning batch: maximum mass, ties by covered area, then
/// the earliest candidate.
std::size_t select_winner(std::span<const Layout> candidates);

} // namespace platepack
