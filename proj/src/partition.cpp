#include "gcp/partition.hpp"

#include <algorithm>
#include <stdexcept>

#include "json.hpp"

namespace gcp {

namespace {

void check_dims(const InteractionGraph& g, const Assignment& a, const QpuNetwork& net) {
    if (a.depth() != g.depth() || a.slots() != g.slot_count() ||
        g.slot_count() != net.total_slots()) {
        throw std::invalid_argument("cost: assignment/graph/network dimension mismatch");
    }
}

double state_edge_cost(const InteractionGraph& g, const Assignment& a,
                       const QpuNetwork& net) {
    double c = 0.0;
    for (int l = 0; l + 1 < g.depth(); ++l) {
        const std::uint8_t* cur = a.row(l);
        const std::uint8_t* nxt = a.row(l + 1);
        for (int j = 0; j < g.qubit_count(); ++j) {
            if (cur[j] != nxt[j]) c += net.link_cost(cur[j], nxt[j]);
        }
    }
    return c;
}

} // namespace

double group_link_cost(const GateGroup& grp, const Assignment& a, const QpuNetwork& net) {
    const std::uint8_t home = a.at(grp.control_layer, grp.lead_slot);
    std::uint64_t seen[4] = {0, 0, 0, 0};
    double c = 0.0;
    for (const auto& [partner, layer] : grp.members) {
        const std::uint8_t q = a.at(layer, partner);
        if (q == home) continue;
        std::uint64_t& word = seen[q >> 6];
        const std::uint64_t bit = 1ULL << (q & 63);
        if (word & bit) continue;
        word |= bit;
        c += net.link_cost(home, q);
    }
    return c;
}

double cost_simple(const InteractionGraph& g, const Assignment& a, const QpuNetwork& net) {
    check_dims(g, a, net);
    double c = state_edge_cost(g, a, net);
    for (const GateEdge& e : g.gate_edges()) {
        const std::uint8_t la = a.at(e.layer, e.qa);
        const std::uint8_t lb = a.at(e.layer, e.qb);
        if (la != lb) c += net.link_cost(la, lb);
    }
    return c;
}

double cost_extended(const InteractionGraph& g, const Assignment& a, const QpuNetwork& net) {
    if (g.mode() != GraphMode::Extended) {
        throw std::invalid_argument("cost_extended: graph not built in Extended mode");
    }
    check_dims(g, a, net);
    double c = state_edge_cost(g, a, net);
    for (const GateGroup& grp : g.groups()) c += group_cost(grp, a, net);
    return c;
}

double cost(const InteractionGraph& g, const Assignment& a, const QpuNetwork& net) {
    return g.mode() == GraphMode::Extended ? cost_extended(g, a, net)
                                           : cost_simple(g, a, net);
}

EbitReport extract_schedule(const InteractionGraph& g, const Assignment& a,
                            const QpuNetwork& net) {
    check_dims(g, a, net);
    EbitReport rep;
    rep.two_qubit_gates = static_cast<int>(g.gate_edges().size());
    for (int l = 0; l + 1 < g.depth(); ++l) {
        for (int j = 0; j < g.qubit_count(); ++j) {
            const std::uint8_t from = a.at(l, j);
            const std::uint8_t to = a.at(l + 1, j);
            if (from != to) {
                rep.state_teleports.push_back(StateTeleport{j, l, from, to});
                rep.total += net.link_cost(from, to);
            }
        }
    }
    if (g.mode() == GraphMode::Extended) {
        for (std::size_t i = 0; i < g.groups().size(); ++i) {
            const GateGroup& grp = g.groups()[i];
            const std::uint8_t home = a.at(grp.control_layer, grp.lead_slot);
            std::vector<int> qpus;
            for (const auto& [partner, layer] : grp.members) {
                const int q = a.at(layer, partner);
                if (q != home && std::find(qpus.begin(), qpus.end(), q) == qpus.end()) {
                    qpus.push_back(q);
                    rep.total += net.link_cost(home, q);
                }
            }
            if (!qpus.empty()) {
                std::sort(qpus.begin(), qpus.end());
                rep.group_links.push_back(GroupLink{static_cast<int>(i), std::move(qpus)});
            }
        }
    } else {
        for (std::size_t i = 0; i < g.gate_edges().size(); ++i) {
            const GateEdge& e = g.gate_edges()[i];
            const std::uint8_t la = a.at(e.layer, e.qa);
            const std::uint8_t lb = a.at(e.layer, e.qb);
            if (la != lb) {
                rep.group_links.push_back(GroupLink{static_cast<int>(i), {lb}});
                rep.total += net.link_cost(la, lb);
            }
        }
    }
    rep.ratio = rep.two_qubit_gates > 0 ? rep.total / rep.two_qubit_gates : 0.0;
    return rep;
}

std::string EbitReport::to_json() const {
    nlohmann::json j;
    j["ebits"] = total;
    j["two_qubit_gates"] = two_qubit_gates;
    j["ratio"] = ratio;
    auto& st = j["state_teleports"] = nlohmann::json::array();
    for (const StateTeleport& t : state_teleports) {
        st.push_back({{"qubit", t.qubit},
                      {"layer", t.layer},
                      {"from", t.from_qpu},
                      {"to", t.to_qpu}});
    }
    auto& gl = j["group_links"] = nlohmann::json::array();
    for (const GroupLink& l : group_links) {
        gl.push_back({{"group", l.group}, {"qpus", l.qpus}});
    }
    return j.dump(2);
}

std::vector<std::vector<std::uint8_t>> enumerate_arrangements(const QpuNetwork& net) {
    std::vector<std::uint8_t> labels;
    for (int q = 0; q < net.qpu_count(); ++q) {
        labels.insert(labels.end(), static_cast<std::size_t>(net.capacity(q)),
                      static_cast<std::uint8_t>(q));
    }
    std::vector<std::vector<std::uint8_t>> out;
    do {
        out.push_back(labels);
    } while (std::next_permutation(labels.begin(), labels.end()));
    return out;
}

BruteForceResult brute_force_optimum(const InteractionGraph& g, const QpuNetwork& net,
                                     std::uint64_t max_space) {
    const auto arrangements = enumerate_arrangements(net);
    const std::uint64_t n_arr = arrangements.size();
    std::uint64_t space = 1;
    for (int l = 0; l < g.depth(); ++l) {
        if (space > max_space / std::max<std::uint64_t>(n_arr, 1)) {
            throw std::runtime_error(
                "brute_force_optimum: search space exceeds bound; use a smaller instance");
        }
        space *= n_arr;
    }

    BruteForceResult res;
    res.best = Assignment(g.depth(), g.slot_count());
    if (g.depth() == 0) {
        res.cost = 0.0;
        return res;
    }

    std::vector<std::size_t> idx(static_cast<std::size_t>(g.depth()), 0);
    Assignment a(g.depth(), g.slot_count());
    bool first = true;
    while (true) {
        for (int l = 0; l < g.depth(); ++l) {
            a.fill_row(l, arrangements[idx[static_cast<std::size_t>(l)]]);
        }
        const double c = cost(g, a, net);
        if (first || c < res.cost) {
            res.cost = c;
            res.best = a;
            first = false;
        }
        int l = 0;
        for (; l < g.depth(); ++l) {
            if (++idx[static_cast<std::size_t>(l)] < n_arr) break;
            idx[static_cast<std::size_t>(l)] = 0;
        }
        if (l == g.depth()) break;
    }
    return res;
}

} // namespace gcp
