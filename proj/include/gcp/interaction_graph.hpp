#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gcp/circuit.hpp"
#include "gcp/network.hpp"

namespace gcp {

enum class GraphMode { Simple, Extended };

/// One two-qubit gate as an intra-layer edge between its endpoint slots.
struct GateEdge {
    int qa = 0;
    int qb = 0;
    int layer = 0;
};

/// A packed group of controlled-phase gates sharing a lead control qubit,
/// rerooted onto the node of the lead's first member gate. Distributing the
/// group costs one e-bit per external QPU its member edges reach.
struct GateGroup {
    int lead_slot = 0;
    int control_layer = 0;
    std::vector<std::pair<int, int>> members; // (partner slot, layer), in layer order
    int first_layer() const { return control_layer; }
    int last_layer() const { return members.empty() ? control_layer : members.back().second; }
};

/// Extended circuit interaction graph: one node per (physical slot, layer),
/// a state-edge chain along each slot's timeline, and gate edges inside
/// layers. Padding slots beyond the circuit's qubits carry zero-weight state
/// edges; they exist so per-layer QPU capacities are met exactly.
/// Immutable after build; shared freely across threads.
class InteractionGraph {
public:
    GraphMode mode() const { return mode_; }
    int slot_count() const { return n_phys_; }
    int qubit_count() const { return n_q_; }
    int depth() const { return depth_; }
    const std::vector<GateEdge>& gate_edges() const { return gate_edges_; }
    const std::vector<GateGroup>& groups() const { return groups_; }

    /// Structural count, padding chains included.
    long long state_edge_count() const {
        return depth_ > 0 ? static_cast<long long>(n_phys_) * (depth_ - 1) : 0;
    }

    /// Gate edges with an endpoint on the given slot (Simple mode cost
    /// updates), and groups touching it as control or partner (Extended).
    const std::vector<int>& gate_edges_on_slot(int slot) const {
        return gate_edges_by_slot_[static_cast<std::size_t>(slot)];
    }
    const std::vector<int>& groups_on_slot(int slot) const {
        return groups_by_slot_[static_cast<std::size_t>(slot)];
    }

    friend InteractionGraph build_graph(const Circuit& c, const QpuNetwork& net,
                                        GraphMode mode);

private:
    GraphMode mode_ = GraphMode::Simple;
    int n_phys_ = 0;
    int n_q_ = 0;
    int depth_ = 0;
    std::vector<GateEdge> gate_edges_;
    std::vector<GateGroup> groups_;
    std::vector<std::vector<int>> gate_edges_by_slot_;
    std::vector<std::vector<int>> groups_by_slot_;
};

/// Builds the interaction graph for a circuit on a network. The circuit's
/// qubits occupy slots 0..n_q-1; remaining slots are idle padding. Throws if
/// the circuit is wider than the network's total capacity.
InteractionGraph build_graph(const Circuit& c, const QpuNetwork& net, GraphMode mode);

/// Greedy gate packing. A first pass measures, per qubit, the maximal runs
/// of CP gates on its line separated only by diagonal or anti-diagonal
/// single-qubit gates; a General gate on the line closes the run. Runs then
/// claim their still-unclaimed gates largest-first (ties to the lower lead
/// qubit, then earlier start), so a gate taken by a longer group on its
/// other endpoint is skipped. Every gate ends up in exactly one group.
std::vector<GateGroup> group_gates(const Circuit& c);

/// Number of distinct QPUs, other than the control node's own, hosting the
/// partner endpoint of at least one member edge (each partner evaluated at
/// its own layer's row).
int group_external_degree(const GateGroup& g, const Assignment& a);

/// DOT dump for eyeballing small graphs; group member edges are red.
std::string to_dot(const InteractionGraph& g);

} // namespace gcp
