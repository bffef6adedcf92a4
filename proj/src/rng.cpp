#include "basta/rng.hpp"

#include <stdexcept>

namespace basta {

rng_stream rng_stream::scripted(std::vector<double> draws) {
    rng_stream stream;
    stream.script_ = std::move(draws);
    stream.scripted_ = true;
    return stream;
}

double rng_stream::next_uniform() {
    ++draws_;
    if (scripted_) {
        if (script_pos_ >= script_.size()) {
            throw std::out_of_range("scripted rng_stream exhausted");
        }
        return script_[script_pos_++];
    }
    // Top 53 bits -> [0, 1); bit-stable across platforms, unlike
    // std::uniform_real_distribution.
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

}  // namespace basta
