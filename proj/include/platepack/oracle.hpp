#pragma once

#include "platepack/model.hpp"
#include "platepack/packer.hpp"

#include <cstdint>

namespace platepack {

/// Enumeration would exceed the caller's limit. Carries the exact count so
/// callers can decide whether to retry with a higher limit.
class LimitError : public Error {
public:
    LimitError(std::string message, std::string count)
        : Error(std::move(message)), canonical_count_(std::move(count)) {}

    const std::string& canonical_count() const { return canonical_count_; }

private:
    std::string canonical_count_;
};

struct OracleResult {
    Layout best_by_mass;
    Layout best_by_coverage;
    std::uint64_t sequences_evaluated = 0;
    BigInt canonical_sequences = 0;
};

struct OracleOptions {
    std::uint64_t limit = 1'000'000;
    /// Also enumerate forced orientations (2^n per ordering). Off by
    /// default: the fit rule already decides rotation from a sequence, so
    /// plain orderings index every layout the packer can reach.
    bool full_rotation = false;
    int threads = 1; // 0 = one task per hardware thread
    PackPolicy policy;
};

/// Exact number of sequences enumerate_optimal would evaluate: distinct
/// permutations (orderings equal up to swapping identical parts count
/// once), times 2^n in full-rotation mode.
BigInt canonical_sequence_count(const Instance& instance, bool full_rotation);

/// Packs every canonical sequence and returns the best layout by mass and
/// the best by coverage, with ties resolved exactly like the winner rule
/// (then by earlier sequence). Deterministic for any thread count.
OracleResult enumerate_optimal(const Instance& instance, const OracleOptions& options = {});

} // namespace platepack
