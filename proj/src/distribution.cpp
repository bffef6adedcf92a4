#include "basta/distribution.hpp"

#include <cmath>
#include <stdexcept>

namespace basta {

double tv_distance(std::span<const double> p, std::span<const double> q) {
    const std::size_t n = std::max(p.size(), q.size());
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double pi = i < p.size() ? p[i] : 0.0;
        const double qi = i < q.size() ? q[i] : 0.0;
        if (pi < 0.0 || qi < 0.0) {
            throw std::invalid_argument("tv_distance: negative entry");
        }
        sum += std::abs(pi - qi);
    }
    return 0.5 * sum;
}

std::vector<double> normalize_counts(std::span<const std::uint64_t> counts) {
    std::uint64_t total = 0;
    for (std::uint64_t c : counts) {
        total += c;
    }
    if (total == 0) {
        throw std::invalid_argument("normalize_counts: all counts are zero");
    }
    std::vector<double> probs(counts.size());
    for (std::size_t i = 0; i < counts.size(); ++i) {
        probs[i] = static_cast<double>(counts[i]) / static_cast<double>(total);
    }
    return probs;
}

}  // namespace basta
