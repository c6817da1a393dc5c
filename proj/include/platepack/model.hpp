#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace platepack {

using BigInt = boost::multiprecision::cpp_int;

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input document (syntax or missing/ill-typed fields).
class ParseError : public Error {
public:
    using Error::Error;
};

/// Structurally valid input that violates a model invariant.
class ValidationError : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

/// A part footprint on the bed: length is the X extent, width the Y extent.
struct Footprint {
    double length = 0.0;
    double width = 0.0;
};

constexpr Footprint rotated(Footprint f) { return {f.width, f.length}; }

/// One ordered part. All dimensions in millimeters, filling in (0, 1].
struct Part {
    std::string name;
    double length = 0.0;  // X extent
    double width = 0.0;   // Y extent
    double height = 0.0;  // Z extent
    double filling = 0.0; // solidness fraction

    Footprint footprint() const { return {length, width}; }
};

/// The printer bed: a length x width surface with chamber height.
struct Platform {
    std::string name;
    double length = 0.0;
    double width = 0.0;
    double height = 0.0;

    double area() const { return length * width; }
};

/// A free rectangular sub-region of the bed. (x, y) is the top-left
/// corner, X grows rightward, Y grows downward.
struct FreeArea {
    double x = 0.0;
    double y = 0.0;
    double length = 0.0;
    double width = 0.0;

    double area() const { return length * width; }
};

/// A part placed on the bed. `part` indexes into Instance::parts; the
/// placed dimensions are the footprint after any 90-degree rotation.
struct Placement {
    std::size_t part = 0;
    double x = 0.0;
    double y = 0.0;
    bool rotated = false;
    double placed_length = 0.0;
    double placed_width = 0.0;

    bool operator==(const Placement&) const = default;
};

/// A candidate batch: the placements plus derived metrics. Parts that did
/// not fit anywhere are listed in `unplaced` (indexes into Instance::parts).
struct Layout {
    Platform platform;
    std::vector<Placement> placements;
    std::vector<std::size_t> unplaced;
    double covered_area = 0.0;
    double total_mass = 0.0;

    double coverage() const {
        const double bed = platform.area();
        return bed > 0.0 ? covered_area / bed : 0.0;
    }
};

struct EconomicParams {
    double price_per_mm3 = 0.0;  // p
    double fixed_cost = 0.0;     // k
    double variable_cost = 0.0;  // c, per mm^3
};

struct Instance {
    Platform platform;
    std::vector<Part> parts;
    std::optional<EconomicParams> economics;
};

/// value * factor, where factor is decoded back into its decimal digits so
/// that products like 302500 * 0.4 come out as exactly 121000 whenever the
/// decimal result is representable. Falls back to a plain multiply when the
/// decomposition would overflow.
double scaled_by_decimal(double value, double factor);

double part_volume(const Part& part);

/// Material needed to print the part, expressed as a volume (mm^3):
/// volume scaled by the filling fraction.
double part_mass(const Part& part);

/// 2^n * n!, the number of (sequence, orientation) decisions an n-part
/// instance admits. Exact for any n.
BigInt search_space_size(unsigned n);

/// Throws ValidationError describing the first violated invariant.
void validate_instance(const Instance& instance);

/// Recomputes covered_area and total_mass from the placements.
void refresh_layout_metrics(Layout& layout, const Instance& instance);

/// Percent with two decimals, rounding halves away from zero (92.6875 -> 92.69).
double coverage_percent_2dp(double covered_area, double bed_area);

} // namespace platepack
