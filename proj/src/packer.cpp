#include "platepack/packer.hpp"

#include "platepack/rng.hpp"
#include "platepack/wdp.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <thread>
#include <tuple>

namespace platepack {

namespace {

bool fits_dims(Footprint f, const FreeArea& area, bool strict) {
    if (strict) return f.width < area.width && f.length < area.length;
    return f.width <= area.width && f.length <= area.length;
}

// Sort keys for the prescribed orderings; ties broken by name so the
// result does not depend on the input order.
std::vector<std::size_t> sorted_by_area(const Instance& instance, bool descending) {
    std::vector<std::size_t> order(instance.parts.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const Part& pa = instance.parts[a];
        const Part& pb = instance.parts[b];
        const double area_a = pa.length * pa.width;
        const double area_b = pb.length * pb.width;
        if (area_a != area_b) return descending ? area_a > area_b : area_a < area_b;
        return pa.name < pb.name;
    });
    return order;
}

// Key on placement content so repeated shuffles that land on the same
// layout collapse into one candidate.
using LayoutKey = std::vector<std::tuple<std::size_t, double, double, bool>>;

LayoutKey layout_key(const Layout& layout) {
    LayoutKey key;
    key.reserve(layout.placements.size());
    for (const Placement& pl : layout.placements) {
        key.emplace_back(pl.part, pl.x, pl.y, pl.rotated);
    }
    return key;
}

bool ranks_before(const RankedLayout& a, const RankedLayout& b) {
    if (outranks(a.layout, b.layout)) return true;
    if (outranks(b.layout, a.layout)) return false;
    return a.iteration < b.iteration;
}

bool covers_before(const RankedLayout& a, const RankedLayout& b) {
    if (a.layout.covered_area != b.layout.covered_area)
        return a.layout.covered_area > b.layout.covered_area;
    if (a.layout.total_mass != b.layout.total_mass)
        return a.layout.total_mass > b.layout.total_mass;
    return a.iteration < b.iteration;
}

struct IterationRange {
    int begin = 0;
    int end = 0;
};

} // namespace

Fit fits(Footprint footprint, const FreeArea& area, bool strict_fit) {
    if (fits_dims(footprint, area, strict_fit)) return Fit::as_is;
    if (fits_dims(rotated(footprint), area, strict_fit)) return Fit::rotated;
    return Fit::none;
}

std::vector<FreeArea> split_area(const FreeArea& area, Footprint placed) {
    assert(placed.length <= area.length && placed.width <= area.width);
    std::vector<FreeArea> subareas;
    // Strip below the part, same length as the part.
    const FreeArea below{area.x, area.y + placed.width, placed.length,
                         area.width - placed.width};
    // Full-width remainder to the right.
    const FreeArea right{area.x + placed.length, area.y, area.length - placed.length,
                         area.width};
    if (below.length > 0.0 && below.width > 0.0) subareas.push_back(below);
    if (right.length > 0.0 && right.width > 0.0) subareas.push_back(right);
    return subareas;
}

Layout pack_sequence(const Instance& instance, std::span<const SequenceItem> order,
                     const PackPolicy& policy, const StepObserver* observer) {
    Layout layout;
    layout.platform = instance.platform;

    std::vector<FreeArea> areas;
    areas.push_back({0.0, 0.0, instance.platform.length, instance.platform.width});

    for (const SequenceItem& item : order) {
        const Part& part = instance.parts.at(item.part);
        Footprint footprint = part.footprint();
        if (item.orientation == OrientationRule::rotate) footprint = rotated(footprint);

        bool placed = false;
        for (std::size_t i = 0; i < areas.size(); ++i) {
            const FreeArea area = areas[i];
            Footprint chosen = footprint;
            bool did_rotate = item.orientation == OrientationRule::rotate;
            if (item.orientation == OrientationRule::automatic) {
                const Fit fit = fits(footprint, area, policy.strict_fit);
                if (fit == Fit::none) continue;
                if (fit == Fit::rotated) {
                    chosen = rotated(footprint);
                    did_rotate = true;
                }
            } else {
                if (!fits_dims(chosen, area, policy.strict_fit)) continue;
            }

            layout.placements.push_back({item.part, area.x, area.y, did_rotate,
                                         chosen.length, chosen.width});
            layout.covered_area += chosen.length * chosen.width;
            layout.total_mass += part_mass(part);

            const std::vector<FreeArea> subareas = split_area(area, chosen);
            if (policy.insert == InsertPolicy::in_place) {
                areas.erase(areas.begin() + static_cast<std::ptrdiff_t>(i));
                areas.insert(areas.begin() + static_cast<std::ptrdiff_t>(i),
                             subareas.begin(), subareas.end());
            } else {
                areas.erase(areas.begin() + static_cast<std::ptrdiff_t>(i));
                areas.insert(areas.end(), subareas.begin(), subareas.end());
            }
            placed = true;
            break;
        }
        if (!placed) layout.unplaced.push_back(item.part);

        if (observer) {
            const PackState state{areas, layout.placements};
            (*observer)(state);
        }
    }
    return layout;
}

Layout pack_sequence(const Instance& instance, std::span<const std::size_t> order,
                     const PackPolicy& policy, const StepObserver* observer) {
    std::vector<SequenceItem> items;
    items.reserve(order.size());
    for (std::size_t index : order) items.push_back({index});
    return pack_sequence(instance, items, policy, observer);
}

Layout pack_as_given(const Instance& instance, const PackPolicy& policy) {
    std::vector<std::size_t> order(instance.parts.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    return pack_sequence(instance, order, policy);
}

SearchResult multi_start(const Instance& instance, const SearchConfig& config,
                         int threads) {
    if (config.iterations < 1) throw ValidationError("iterations must be >= 1");
    if (config.keep_top < 1) throw ValidationError("keepTop must be >= 1");

    std::vector<std::size_t> base_order(instance.parts.size());
    std::iota(base_order.begin(), base_order.end(), std::size_t{0});
    if (config.ordering == Ordering::largest_first) {
        base_order = sorted_by_area(instance, true);
    } else if (config.ordering == Ordering::smallest_first) {
        base_order = sorted_by_area(instance, false);
    }

    const bool shuffled = config.ordering == Ordering::random;

    auto run_range = [&](IterationRange range, std::vector<RankedLayout>& top,
                         RankedLayout& best_cov, bool& any) {
        std::vector<std::size_t> order = base_order;
        for (int iter = range.begin; iter < range.end; ++iter) {
            if (shuffled) {
                order = base_order;
                SplitMix64 rng(iteration_seed(config.master_seed,
                                              static_cast<std::uint64_t>(iter)));
                seeded_shuffle(order, rng);
            }
            RankedLayout candidate{pack_sequence(instance, order, config.policy), iter};
            if (!any || covers_before(candidate, best_cov)) best_cov = candidate;
            any = true;
            top.push_back(std::move(candidate));
            if (top.size() > static_cast<std::size_t>(config.keep_top) * 4) {
                // Trim, keeping distinct leaders; duplicates of kept layouts
                // are dropped here and again at the final merge.
                std::sort(top.begin(), top.end(), ranks_before);
                std::map<LayoutKey, bool> seen;
                std::vector<RankedLayout> kept;
                for (RankedLayout& rl : top) {
                    if (kept.size() >= static_cast<std::size_t>(config.keep_top)) break;
                    if (seen.emplace(layout_key(rl.layout), true).second) {
                        kept.push_back(std::move(rl));
                    }
                }
                top = std::move(kept);
            }
        }
    };

    int task_count = threads;
    if (task_count <= 0) {
        task_count = static_cast<int>(std::thread::hardware_concurrency());
        if (task_count < 1) task_count = 1;
    }
    task_count = std::min(task_count, config.iterations);

    std::vector<std::vector<RankedLayout>> tops(static_cast<std::size_t>(task_count));
    std::vector<RankedLayout> covs(static_cast<std::size_t>(task_count));
    std::vector<char> any(static_cast<std::size_t>(task_count), 0);

    if (task_count == 1) {
        bool flag = false;
        run_range({0, config.iterations}, tops[0], covs[0], flag);
        any[0] = flag ? 1 : 0;
    } else {
        std::vector<std::thread> workers;
        const int per = config.iterations / task_count;
        const int extra = config.iterations % task_count;
        int begin = 0;
        for (int t = 0; t < task_count; ++t) {
            const int len = per + (t < extra ? 1 : 0);
            const IterationRange range{begin, begin + len};
            begin += len;
            workers.emplace_back([&, t, range] {
                bool flag = false;
                run_range(range, tops[static_cast<std::size_t>(t)],
                          covs[static_cast<std::size_t>(t)], flag);
                any[static_cast<std::size_t>(t)] = flag ? 1 : 0;
            });
        }
        for (std::thread& w : workers) w.join();
    }

    // Deterministic merge: global rank order, first iteration wins ties,
    // duplicates (same placements) collapse.
    std::vector<RankedLayout> all;
    for (auto& t : tops)
        for (RankedLayout& rl : t) all.push_back(std::move(rl));
    std::sort(all.begin(), all.end(), ranks_before);

    SearchResult result;
    std::map<LayoutKey, bool> seen;
    for (RankedLayout& rl : all) {
        if (result.candidates.size() >= static_cast<std::size_t>(config.keep_top)) break;
        if (seen.emplace(layout_key(rl.layout), true).second) {
            result.candidates.push_back(std::move(rl));
        }
    }

    bool have_cov = false;
    for (int t = 0; t < task_count; ++t) {
        if (!any[static_cast<std::size_t>(t)]) continue;
        if (!have_cov || covers_before(covs[static_cast<std::size_t>(t)],
                                       result.best_coverage)) {
            result.best_coverage = covs[static_cast<std::size_t>(t)];
        }
        have_cov = true;
    }
    result.iterations_run = config.iterations;
    return result;
}

const char* ordering_name(Ordering ordering) {
    switch (ordering) {
        case Ordering::random: return "random";
        case Ordering::largest_first: return "largest";
        case Ordering::smallest_first: return "smallest";
        case Ordering::as_given: return "as-given";
    }
    return "random";
}

Ordering ordering_from_name(const std::string& name) {
    if (name == "random") return Ordering::random;
    if (name == "largest") return Ordering::largest_first;
    if (name == "smallest") return Ordering::smallest_first;
    if (name == "as-given") return Ordering::as_given;
    throw ValidationError("unknown ordering '" + name +
                          "' (expected random|largest|smallest|as-given)");
}

} // namespace platepack
