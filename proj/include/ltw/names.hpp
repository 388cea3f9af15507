#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace ltw {

// Ordered set of identifiers. Insertion order defines the dense index that
// every algorithm in this library uses for deterministic tie-breaking, so two
// tables are equal only if they list the same names in the same order.
class NameTable {
public:
    int add(const std::string& name) {
        auto it = index_.find(name);
        if (it != index_.end()) return it->second;
        int id = static_cast<int>(names_.size());
        names_.push_back(name);
        index_.emplace(name, id);
        return id;
    }

    std::optional<int> find(const std::string& name) const {
        auto it = index_.find(name);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    bool contains(const std::string& name) const { return index_.count(name) != 0; }

    const std::string& name(int id) const { return names_.at(static_cast<std::size_t>(id)); }

    int size() const { return static_cast<int>(names_.size()); }

    const std::vector<std::string>& all() const { return names_; }

    // First name not already present among base, base', base'', ...
    std::string fresh(const std::string& base) const {
        std::string candidate = base;
        while (contains(candidate)) candidate += '\'';
        return candidate;
    }

    friend bool operator==(const NameTable& a, const NameTable& b) { return a.names_ == b.names_; }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, int> index_;
};

}  // namespace ltw
