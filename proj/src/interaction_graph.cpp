#include "gcp/interaction_graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace gcp {

namespace {

struct Run {
    int lead = 0;
    std::vector<int> gate_idx; // CP gates on this qubit's line, layer order
    int first_layer = 0;
};

} // namespace

std::vector<GateGroup> group_gates(const Circuit& c) {
    const auto& gates = c.gates();

    // Pass 1: per-qubit maximal runs. The gates vector is in program order,
    // so each qubit's subsequence is already ordered by layer.
    std::vector<Run> runs;
    for (int q = 0; q < c.qubit_count(); ++q) {
        Run cur{q, {}, 0};
        auto close = [&] {
            if (!cur.gate_idx.empty()) {
                cur.first_layer = gates[static_cast<std::size_t>(cur.gate_idx.front())].layer;
                runs.push_back(std::move(cur));
            }
            cur = Run{q, {}, 0};
        };
        for (std::size_t gi = 0; gi < gates.size(); ++gi) {
            const Gate& g = gates[gi];
            if (!g.touches(q)) continue;
            if (g.is_two_qubit()) {
                cur.gate_idx.push_back(static_cast<int>(gi));
            } else if (classify_gate(g) == DiagClass::General) {
                close();
            }
            // Diagonal/AntiDiagonal gates ride along inside a run.
        }
        close();
    }

    // Largest available group first; ties to the lower lead qubit, then the
    // earlier start.
    std::stable_sort(runs.begin(), runs.end(), [](const Run& a, const Run& b) {
        if (a.gate_idx.size() != b.gate_idx.size()) {
            return a.gate_idx.size() > b.gate_idx.size();
        }
        if (a.lead != b.lead) return a.lead < b.lead;
        return a.first_layer < b.first_layer;
    });

    // Pass 2: claim. A gate already taken by an earlier (longer) run on its
    // other endpoint is skipped; the remaining gates of a run still satisfy
    // both grouping conditions because the run contained no General gate on
    // the lead anywhere between its first and last member.
    std::vector<bool> claimed(gates.size(), false);
    std::vector<GateGroup> groups;
    for (const Run& r : runs) {
        GateGroup grp;
        grp.lead_slot = r.lead;
        for (int gi : r.gate_idx) {
            if (claimed[static_cast<std::size_t>(gi)]) continue;
            claimed[static_cast<std::size_t>(gi)] = true;
            const Gate& g = gates[static_cast<std::size_t>(gi)];
            grp.members.emplace_back(g.partner(r.lead), g.layer);
        }
        if (grp.members.empty()) continue;
        grp.control_layer = grp.members.front().second;
        groups.push_back(std::move(grp));
    }

    // Safety net; runs cover every CP gate, so this should stay empty.
    for (std::size_t gi = 0; gi < gates.size(); ++gi) {
        const Gate& g = gates[gi];
        if (!g.is_two_qubit() || claimed[gi]) continue;
        GateGroup grp;
        grp.lead_slot = g.q0;
        grp.control_layer = g.layer;
        grp.members.emplace_back(g.q1, g.layer);
        groups.push_back(std::move(grp));
    }
    return groups;
}

InteractionGraph build_graph(const Circuit& c, const QpuNetwork& net, GraphMode mode) {
    if (c.qubit_count() > net.total_slots()) {
        throw std::invalid_argument("build_graph: circuit wider than network capacity (" +
                                    std::to_string(c.qubit_count()) + " qubits, " +
                                    std::to_string(net.total_slots()) + " slots)");
    }
    InteractionGraph g;
    g.mode_ = mode;
    g.n_phys_ = net.total_slots();
    g.n_q_ = c.qubit_count();
    g.depth_ = c.depth();
    for (const Gate& gt : c.gates()) {
        if (gt.is_two_qubit()) {
            g.gate_edges_.push_back(GateEdge{gt.q0, gt.q1, gt.layer});
        }
    }
    g.gate_edges_by_slot_.resize(static_cast<std::size_t>(g.n_phys_));
    for (std::size_t ei = 0; ei < g.gate_edges_.size(); ++ei) {
        g.gate_edges_by_slot_[static_cast<std::size_t>(g.gate_edges_[ei].qa)].push_back(
            static_cast<int>(ei));
        g.gate_edges_by_slot_[static_cast<std::size_t>(g.gate_edges_[ei].qb)].push_back(
            static_cast<int>(ei));
    }
    g.groups_by_slot_.resize(static_cast<std::size_t>(g.n_phys_));
    if (mode == GraphMode::Extended) {
        g.groups_ = group_gates(c);
        for (std::size_t i = 0; i < g.groups_.size(); ++i) {
            const GateGroup& grp = g.groups_[i];
            std::vector<int> slots{grp.lead_slot};
            for (const auto& [partner, layer] : grp.members) slots.push_back(partner);
            std::sort(slots.begin(), slots.end());
            slots.erase(std::unique(slots.begin(), slots.end()), slots.end());
            for (int s : slots) {
                g.groups_by_slot_[static_cast<std::size_t>(s)].push_back(static_cast<int>(i));
            }
        }
    }
    return g;
}

int group_external_degree(const GateGroup& g, const Assignment& a) {
    const std::uint8_t home = a.at(g.control_layer, g.lead_slot);
    std::uint64_t seen[4] = {0, 0, 0, 0}; // bitmask over the 8-bit label space
    int degree = 0;
    for (const auto& [partner, layer] : g.members) {
        const std::uint8_t q = a.at(layer, partner);
        if (q == home) continue;
        std::uint64_t& word = seen[q >> 6];
        const std::uint64_t bit = 1ULL << (q & 63);
        if (word & bit) continue;
        word |= bit;
        ++degree;
    }
    return degree;
}

std::string to_dot(const InteractionGraph& g) {
    std::string out = "graph interaction {\n  node [shape=circle fontsize=10];\n";
    auto name = [](int slot, int layer) {
        return "\"q" + std::to_string(slot) + "@l" + std::to_string(layer) + "\"";
    };
    for (int j = 0; j < g.slot_count(); ++j) {
        for (int l = 0; l + 1 < g.depth(); ++l) {
            out += "  " + name(j, l) + " -- " + name(j, l + 1);
            if (j >= g.qubit_count()) out += " [style=dotted]";
            out += ";\n";
        }
    }
    if (g.mode() == GraphMode::Extended) {
        for (const GateGroup& grp : g.groups()) {
            for (const auto& [partner, layer] : grp.members) {
                out += "  " + name(grp.lead_slot, grp.control_layer) + " -- " +
                       name(partner, layer) + " [color=red];\n";
            }
        }
    } else {
        for (const GateEdge& e : g.gate_edges()) {
            out += "  " + name(e.qa, e.layer) + " -- " + name(e.qb, e.layer) + ";\n";
        }
    }
    out += "}\n";
    return out;
}

} // namespace gcp
