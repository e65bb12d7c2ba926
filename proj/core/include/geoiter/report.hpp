#pragma once

#include <string>
#include <vector>

namespace geoiter {

// One named check with its outcome; detail carries the witness (the first
// violating m, the exact bound, ...) in human-readable form.
struct CheckItem {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct CheckReport {
    std::vector<CheckItem> items;

    bool all_pass() const {
        for (const auto& it : items)
            if (!it.pass) return false;
        return true;
    }

    const CheckItem* first_failure() const {
        for (const auto& it : items)
            if (!it.pass) return &it;
        return nullptr;
    }
};

} // namespace geoiter
