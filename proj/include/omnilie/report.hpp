#pragma once

#include <optional>
#include <string>
#include <vector>

namespace omnilie {

/// Evidence attached to a failed check: where the defect occurred and
/// the first nonzero defect polynomial in canonical form.
struct Witness {
    std::string context;
    std::string defect;
};

struct Check {
    std::string name;
    std::string tag;
    bool pass = false;
    std::optional<Witness> witness;
};

struct Report {
    std::vector<Check> checks;

    void add(std::string name, std::string tag, bool pass,
             std::optional<Witness> witness = std::nullopt) {
        checks.push_back({std::move(name), std::move(tag), pass, std::move(witness)});
    }

    void merge(const Report& other) {
        checks.insert(checks.end(), other.checks.begin(), other.checks.end());
    }

    bool all_pass() const {
        for (const Check& c : checks)
            if (!c.pass) return false;
        return true;
    }

    const Check* find(const std::string& tag) const {
        for (const Check& c : checks)
            if (c.tag == tag) return &c;
        return nullptr;
    }
};

}  // namespace omnilie
