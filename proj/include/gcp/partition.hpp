#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gcp/interaction_graph.hpp"
#include "gcp/network.hpp"

namespace gcp {

/// One qubit relocation between consecutive layers (a cut state edge).
struct StateTeleport {
    int qubit = 0;
    int layer = 0; // between layer and layer+1
    int from_qpu = 0;
    int to_qpu = 0;
};

/// One gate-group link event: the e-bits spent linking a group's control to
/// every external QPU its members reach. In Simple mode each cut gate edge
/// appears as its own single-QPU link.
struct GroupLink {
    int group = 0;
    std::vector<int> qpus;
};

struct EbitReport {
    double total = 0.0;
    std::vector<StateTeleport> state_teleports;
    std::vector<GroupLink> group_links;
    int two_qubit_gates = 0;
    double ratio = 0.0; // total / two-qubit gate count (0 when no CP gates)
    std::string to_json() const;
};

/// Cut-edge cost: every cut state edge and every cut gate edge contributes
/// f(r(.,.)), i.e. 1 on homogeneous networks. Padding-slot state edges have
/// weight zero; relocating an idle slot is free.
double cost_simple(const InteractionGraph& g, const Assignment& a, const QpuNetwork& net);

/// Gate-packing cost: state edges as in cost_simple, and each gate group
/// contributes one link per distinct external QPU reached. Requires an
/// Extended-mode graph.
double cost_extended(const InteractionGraph& g, const Assignment& a, const QpuNetwork& net);

/// Dispatch on the graph's own mode.
double cost(const InteractionGraph& g, const Assignment& a, const QpuNetwork& net);

/// The per-group term of cost_extended: one f(r(control, qpu)) per distinct
/// external QPU reached by the group's members.
double group_link_cost(const GateGroup& grp, const Assignment& a, const QpuNetwork& net);

/// Full event breakdown; the event totals always reproduce the matching
/// cost function's value.
EbitReport extract_schedule(const InteractionGraph& g, const Assignment& a,
                            const QpuNetwork& net);

/// All distinct ways of filling the network's slots with QPU labels
/// (permutations within a QPU deduplicated).
std::vector<std::vector<std::uint8_t>> enumerate_arrangements(const QpuNetwork& net);

struct BruteForceResult {
    double cost = 0.0;
    Assignment best;
};

/// Exhaustive search over per-layer arrangements. Throws when the search
/// space (arrangements^depth) exceeds max_space.
BruteForceResult brute_force_optimum(const InteractionGraph& g, const QpuNetwork& net,
                                     std::uint64_t max_space = 1000000);

} // namespace gcp
