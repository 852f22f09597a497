#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "charn/errors.hpp"

namespace charn {

/// An observed path X_0, ..., X_n. All values finite, length >= 2.
class Series {
public:
    explicit Series(std::vector<double> values, std::string provenance = {})
        : values_(std::move(values)), provenance_(std::move(provenance)) {
        if (values_.size() < 2)
            throw CharnError("a series needs at least two observations");
        for (std::size_t i = 0; i < values_.size(); ++i)
            if (!std::isfinite(values_[i]))
                throw CharnError("non-finite observation at position " + std::to_string(i));
    }

    const std::vector<double>& values() const noexcept { return values_; }

    /// Number of lag/response pairs, i.e. n for observations X_0..X_n.
    std::size_t pair_count() const noexcept { return values_.size() - 1; }

    /// Free-form origin note (e.g. the simulation seed); may be empty.
    const std::string& provenance() const noexcept { return provenance_; }

private:
    std::vector<double> values_;
    std::string provenance_;
};

}  // namespace charn
