#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace quadmatch {

// Integer match weight extended with a distinguished negative infinity.
// Negative infinity absorbs addition; finite values add exactly. Finite
// magnitudes are bounded at lattice load so that sums over any realistic
// sequence length cannot overflow.
class Weight {
public:
    constexpr Weight() = default;

    static constexpr Weight finite(std::int64_t v) {
        Weight w;
        w.raw_ = v;
        return w;
    }

    static constexpr Weight neg_inf() {
        Weight w;
        w.raw_ = kNegInf;
        return w;
    }

    constexpr bool is_neg_inf() const { return raw_ == kNegInf; }
    constexpr bool is_finite() const { return raw_ != kNegInf; }

    // Finite value; calling this on negative infinity is a logic error.
    constexpr std::int64_t value() const {
        if (is_neg_inf())
            throw std::logic_error("Weight::value() called on -inf");
        return raw_;
    }

    // Saturating addition: -inf absorbs.
    constexpr Weight operator+(Weight o) const {
        if (is_neg_inf() || o.is_neg_inf())
            return neg_inf();
        return finite(raw_ + o.raw_);
    }

    constexpr Weight& operator+=(Weight o) { return *this = *this + o; }

    // -inf is the raw minimum, so ordering on raw_ orders -inf below all
    // finite weights.
    friend constexpr bool operator==(Weight a, Weight b) { return a.raw_ == b.raw_; }
    friend constexpr bool operator!=(Weight a, Weight b) { return a.raw_ != b.raw_; }
    friend constexpr bool operator<(Weight a, Weight b) { return a.raw_ < b.raw_; }
    friend constexpr bool operator<=(Weight a, Weight b) { return a.raw_ <= b.raw_; }
    friend constexpr bool operator>(Weight a, Weight b) { return a.raw_ > b.raw_; }
    friend constexpr bool operator>=(Weight a, Weight b) { return a.raw_ >= b.raw_; }

    std::string to_string() const {
        return is_neg_inf() ? "-inf" : std::to_string(raw_);
    }

private:
    static constexpr std::int64_t kNegInf = INT64_MIN;
    std::int64_t raw_ = 0;
};

} // namespace quadmatch
