#pragma once

#include <cstdint>
#include <deque>
#include <vector>

#include "saprlab/forwarding.hpp"
#include "saprlab/graph.hpp"
#include "saprlab/rng.hpp"

namespace saprlab {

struct Packet {
    NodeId source;
    NodeId dest;
    std::int32_t birth_step;
    std::int32_t enqueue_step;  // step at which it joined its current queue
    std::uint32_t id;           // creation order, used by queue-discipline checks
};

struct SimConfig {
    int packets_per_step = 1;  // R: packets injected each step
    int capacity = 1;          // C: packets a node may forward per step
    int steps = 10000;
    int warmup = 2000;         // steps discarded before measuring
    int window = 100;          // growth-rate sampling interval
    std::uint64_t seed = 1;

    void validate() const;
};

struct Delivery {
    std::int32_t step;
    std::int32_t travel_time;
};

// Queue state of a running simulation, exposed for stepping by hand in tests.
class SimState {
public:
    explicit SimState(NodeId n) : queues_(static_cast<std::size_t>(n)) {}

    NodeId node_count() const { return static_cast<NodeId>(queues_.size()); }
    int now() const { return now_; }
    std::int64_t generated() const { return generated_; }
    std::int64_t delivered() const { return delivered_; }
    std::int64_t in_network() const { return generated_ - delivered_; }
    const std::deque<Packet>& queue(NodeId u) const { return queues_[static_cast<std::size_t>(u)]; }
    const std::vector<Delivery>& deliveries() const { return deliveries_; }

    // Plants a packet by hand, as if it had just been generated this step
    // (so it becomes forwardable on the next step).
    void inject(NodeId source, NodeId dest);

    friend void step(SimState& st, const Graph& g, const ForwardingPlan& plan,
                     const SimConfig& cfg, Rng& rng);

private:
    std::vector<std::deque<Packet>> queues_;
    int now_ = 0;
    std::int64_t generated_ = 0;
    std::int64_t delivered_ = 0;
    std::uint32_t next_id_ = 0;
    std::vector<Delivery> deliveries_;
    std::vector<NodeId> order_;  // scratch for the per-step service permutation
};

// One time step: R fresh packets land on random sources, then nodes take
// turns in a fresh random order, each forwarding up to C packets from the
// head of its queue. Only packets enqueued on an earlier step are
// forwardable; a packet next to its destination jumps straight there.
// Arrivals leave the network without spending queue capacity.
void step(SimState& st, const Graph& g, const ForwardingPlan& plan, const SimConfig& cfg, Rng& rng);

// Order parameter of the steady state: the mean growth rate of the
// in-network packet count over post-warmup windows, scaled by C/R. Free flow
// gives ~0, congestion a positive fraction of the injection rate.
double order_parameter(const std::vector<std::int64_t>& n_packets, const SimConfig& cfg);

struct SimResult {
    std::vector<std::int64_t> n_packets;  // in-network count at the end of each step
    std::vector<std::int32_t> travel_times;  // deliveries completing after warmup
    double eta = 0.0;
    double eta_raw = 0.0;  // unclamped growth rate, can dip below zero by noise
    double avg_travel_time = 0.0;
    std::int64_t generated = 0;
    std::int64_t delivered = 0;
};

SimResult run(const Graph& g, const ForwardingPlan& plan, const SimConfig& cfg);

}  // namespace saprlab
