#pragma once

#include <cstddef>
#include <cstdint>
#include <deque>
#include <unordered_map>
#include <vector>

#include "gtsp/model.hpp"

namespace gtsp {

/// One edge announcement: `agent` traversed (from, to) during `iteration`.
struct EdgeReport {
    NodeId from = 0;
    NodeId to = 0;
    std::size_t agent = 0;
    std::size_t iteration = 0;
};

/// Shared memory of the SSAS agents. Announcements sit in the message queue
/// until delivered at the end of an iteration, after which they are kept as
/// records until they age out.
class KnowledgeBase {
public:
    explicit KnowledgeBase(std::size_t node_count) : node_count_(node_count) {}

    /// Queues an announcement. Throws InputError for a self-loop or an
    /// unknown node.
    void publish(const EdgeReport& report);

    /// Moves every queued announcement into the records.
    void deliver();

    /// Drops records whose iteration is below `iteration`.
    void forget_before(std::size_t iteration);

    /// True when the undirected edge is queued or recorded.
    bool knows(NodeId a, NodeId b) const;

    const std::vector<EdgeReport>& message_queue() const noexcept { return queue_; }
    const std::deque<EdgeReport>& records() const noexcept { return records_; }

private:
    std::uint64_t key(NodeId a, NodeId b) const noexcept;
    void add_count(const EdgeReport& r);
    void remove_count(const EdgeReport& r);

    std::size_t node_count_;
    std::vector<EdgeReport> queue_;
    std::deque<EdgeReport> records_;
    std::unordered_map<std::uint64_t, std::size_t> counts_;
};

}  // namespace gtsp
