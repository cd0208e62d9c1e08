#pragma once

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace subalg {

/// Ordered variable roster, optionally partitioned into contiguous named
/// blocks (e.g. an x-block ahead of a tag block). Immutable once built and
/// shared by reference between all values over the same ring.
class VariableContext {
public:
    struct Block {
        std::string name;
        std::size_t first;
        std::size_t count;
    };

    static std::shared_ptr<const VariableContext> make(std::vector<std::string> names) {
        std::vector<Block> blocks{{"x", 0, names.size()}};
        return std::shared_ptr<const VariableContext>(
            new VariableContext(std::move(names), std::move(blocks)));
    }

    /// One block per (name, variables) group, concatenated in order.
    static std::shared_ptr<const VariableContext> make_blocks(
        const std::vector<std::pair<std::string, std::vector<std::string>>>& groups) {
        std::vector<std::string> names;
        std::vector<Block> blocks;
        for (const auto& [bname, vars] : groups) {
            blocks.push_back({bname, names.size(), vars.size()});
            names.insert(names.end(), vars.begin(), vars.end());
        }
        return std::shared_ptr<const VariableContext>(
            new VariableContext(std::move(names), std::move(blocks)));
    }

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    const std::vector<std::string>& names() const { return names_; }
    const std::vector<Block>& blocks() const { return blocks_; }

    std::size_t index_of(const std::string& name) const {
        auto it = index_.find(name);
        if (it == index_.end())
            throw std::invalid_argument("unknown variable '" + name + "'");
        return it->second;
    }
    bool has(const std::string& name) const { return index_.count(name) != 0; }

    bool operator==(const VariableContext& o) const {
        if (names_ != o.names_ || blocks_.size() != o.blocks_.size()) return false;
        for (std::size_t i = 0; i < blocks_.size(); ++i) {
            if (blocks_[i].name != o.blocks_[i].name || blocks_[i].first != o.blocks_[i].first ||
                blocks_[i].count != o.blocks_[i].count)
                return false;
        }
        return true;
    }
    bool operator!=(const VariableContext& o) const { return !(*this == o); }

private:
    VariableContext(std::vector<std::string> names, std::vector<Block> blocks)
        : names_(std::move(names)), blocks_(std::move(blocks)) {
        std::size_t covered = 0;
        for (const auto& b : blocks_) {
            if (b.first != covered)
                throw std::invalid_argument("context blocks must be contiguous");
            covered += b.count;
        }
        if (covered != names_.size())
            throw std::invalid_argument("context blocks must cover all variables");
        for (std::size_t i = 0; i < names_.size(); ++i) {
            if (!index_.emplace(names_[i], i).second)
                throw std::invalid_argument("duplicate variable name '" + names_[i] + "'");
        }
    }

    std::vector<std::string> names_;
    std::vector<Block> blocks_;
    std::unordered_map<std::string, std::size_t> index_;
};

using ContextPtr = std::shared_ptr<const VariableContext>;

inline bool same_context(const ContextPtr& a, const ContextPtr& b) {
    return a == b || (a && b && *a == *b);
}

inline void require_same_context(const ContextPtr& a, const ContextPtr& b, const char* where) {
    if (!same_context(a, b))
        throw std::invalid_argument(std::string(where) + ": variable context mismatch");
}

}  // namespace subalg
