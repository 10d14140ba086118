#pragma once

#include <compare>
#include <optional>
#include <string>

namespace ghs {

/// A separation between blocks of a partition: a nonnegative distance, or the
/// unbounded sentinel used when there are no pairs of distinct blocks (one
/// block). The sentinel is never fed into arithmetic; `subtracted_from`
/// reports "minus infinity" as an empty optional so it never wins a max.
class Spacing {
public:
    constexpr Spacing() = default;
    constexpr explicit Spacing(double value) : value_(value), unbounded_(false) {}

    static constexpr Spacing unbounded() { return Spacing(); }

    constexpr bool is_unbounded() const { return unbounded_; }
    constexpr bool is_finite() const { return !unbounded_; }

    /// Precondition: is_finite().
    constexpr double value() const { return value_; }

    /// `lambda - *this`, or nullopt when *this is unbounded.
    constexpr std::optional<double> subtracted_from(double lambda) const {
        if (unbounded_) return std::nullopt;
        return lambda - value_;
    }

    /// max(floor, lambda - *this) with the unbounded case short-circuited.
    constexpr double max_with_difference(double floor, double lambda) const {
        if (unbounded_) return floor;
        const double d = lambda - value_;
        return d > floor ? d : floor;
    }

    constexpr std::partial_ordering operator<=>(const Spacing& o) const {
        if (unbounded_ || o.unbounded_) {
            if (unbounded_ && o.unbounded_) return std::partial_ordering::equivalent;
            return unbounded_ ? std::partial_ordering::greater : std::partial_ordering::less;
        }
        return value_ <=> o.value_;
    }
    constexpr bool operator==(const Spacing& o) const {
        return unbounded_ == o.unbounded_ && (unbounded_ || value_ == o.value_);
    }

    constexpr Spacing min(const Spacing& o) const { return (o < *this) ? o : *this; }
    constexpr Spacing max(const Spacing& o) const { return (o > *this) ? o : *this; }

    std::string to_string() const;

private:
    double value_ = 0.0;
    bool unbounded_ = true;
};

}  // namespace ghs
