#include "gtsp/knowledge_base.hpp"

#include <algorithm>
#include <string>

#include "gtsp/error.hpp"

namespace gtsp {

std::uint64_t KnowledgeBase::key(NodeId a, NodeId b) const noexcept {
    const auto lo = std::min(a, b);
    const auto hi = std::max(a, b);
    return (static_cast<std::uint64_t>(lo) << 32) | hi;
}

void KnowledgeBase::add_count(const EdgeReport& r) { ++counts_[key(r.from, r.to)]; }

void KnowledgeBase::remove_count(const EdgeReport& r) {
    auto it = counts_.find(key(r.from, r.to));
    if (it != counts_.end() && --it->second == 0) counts_.erase(it);
}

void KnowledgeBase::publish(const EdgeReport& report) {
    if (report.from >= node_count_ || report.to >= node_count_ || report.from == report.to) {
        throw InputError("reported edge (" + std::to_string(report.from) + ", " +
                         std::to_string(report.to) + ") is not an edge of the instance");
    }
    queue_.push_back(report);
    add_count(report);
}

void KnowledgeBase::deliver() {
    records_.insert(records_.end(), queue_.begin(), queue_.end());
    queue_.clear();
}

void KnowledgeBase::forget_before(std::size_t iteration) {
    // Records arrive in iteration order.
    while (!records_.empty() && records_.front().iteration < iteration) {
        remove_count(records_.front());
        records_.pop_front();
    }
}

bool KnowledgeBase::knows(NodeId a, NodeId b) const { return counts_.contains(key(a, b)); }

}  // namespace gtsp
