#pragma once

#include "platepack/model.hpp"

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace platepack {

enum class Fit { as_is, rotated, none };

enum class Ordering { random, largest_first, smallest_first, as_given };

/// Where the two subareas of a consumed free area enter the LAA:
/// in place of the consumed area (default) or at the back of the list.
enum class InsertPolicy { in_place, append };

enum class OrientationRule : std::uint8_t {
    automatic, // try as-is, then rotated (the flow-chart rule)
    keep,      // only the given orientation
    rotate,    // only the rotated orientation
};

struct SequenceItem {
    std::size_t part = 0;
    OrientationRule orientation = OrientationRule::automatic;
};

struct PackPolicy {
    InsertPolicy insert = InsertPolicy::in_place;
    // The default accepts exact fits; strict mode keeps the
    // strictly-smaller comparison for fidelity experiments.
    bool strict_fit = false;
};

struct SearchConfig {
    int iterations = 120;
    std::uint64_t master_seed = 77;
    Ordering ordering = Ordering::random;
    int keep_top = 8;
    PackPolicy policy;
};

/// Snapshot handed to a step observer after each placement.
struct PackState {
    std::span<const FreeArea> available_areas;
    std::span<const Placement> placements;
};

using StepObserver = std::function<void(const PackState&)>;

/// Can `footprint` be placed in `area`, and in which orientation?
/// The un-rotated orientation is checked first and wins ties.
Fit fits(Footprint footprint, const FreeArea& area, bool strict_fit = false);

/// Guillotine split of `area` after placing `placed` in its top-left
/// corner: first the strip directly below the part (same length), then the
/// full-width remainder to the right. Degenerate (zero length or width)
/// subareas are dropped. The returned areas plus the placed footprint tile
/// `area` exactly.
std::vector<FreeArea> split_area(const FreeArea& area, Footprint placed);

/// Deterministic single pass: walks `order` once, placing each part in the
/// first free area that admits it; parts that fit nowhere are recorded as
/// unplaced. Free areas only ever shrink, so skipped parts never become
/// placeable later in the same pass.
Layout pack_sequence(const Instance& instance, std::span<const SequenceItem> order,
                     const PackPolicy& policy = {}, const StepObserver* observer = nullptr);

Layout pack_sequence(const Instance& instance, std::span<const std::size_t> order,
                     const PackPolicy& policy = {}, const StepObserver* observer = nullptr);

/// Convenience: pack the instance's parts in their given order.
Layout pack_as_given(const Instance& instance, const PackPolicy& policy = {});

struct RankedLayout {
    Layout layout;
    int iteration = 0; // iteration that first produced this layout
};

struct SearchResult {
    /// Distinct layouts ranked by the winner criterion (mass, then covered
    /// area, then first iteration); at most keep_top entries.
    std::vector<RankedLayout> candidates;
    /// The layout with the highest coverage seen across all iterations.
    RankedLayout best_coverage;
    int iterations_run = 0;
};

/// Runs `config.iterations` independent packing passes and keeps the best
/// candidates. Each iteration's shuffle is seeded from (master_seed,
/// iteration) only, and the merge is order-insensitive, so the result does
/// not depend on `threads` (0 = one task per hardware thread).
SearchResult multi_start(const Instance& instance, const SearchConfig& config,
                         int threads = 1);

const char* ordering_name(Ordering ordering);
Ordering ordering_from_name(const std::string& name);

} // namespace platepack
