#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace basta {

// Total variation distance (1/2)*sum |p(n) - q(n)| over the union of
// supports; entries missing from the shorter vector count as 0.
// Throws std::invalid_argument on a negative entry.
double tv_distance(std::span<const double> p, std::span<const double> q);

// counts / sum(counts), index alignment preserved (including any overflow
// bucket the caller keeps at the end). Throws std::invalid_argument when the
// counts sum to zero.
std::vector<double> normalize_counts(std::span<const std::uint64_t> counts);

}  // namespace basta
