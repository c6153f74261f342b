#pragma once

#include <compare>
#include <string>
#include <vector>

namespace lrkron {

/// Outer-multiplicity label tuple: one entry for SU(3), three for SU(4).
struct EtaLabels {
    std::vector<int> values;

    auto operator<=>(const EtaLabels&) const = default;

    std::string to_string() const {
        if (values.size() == 1) return std::to_string(values[0]);
        std::string s = "(";
        for (std::size_t i = 0; i < values.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(values[i]);
        }
        s += ')';
        return s;
    }
};

} // namespace lrkron
