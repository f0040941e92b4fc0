#include "gcp/generators.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "gcp/rng.hpp"

namespace gcp {

namespace {

constexpr double kPi = std::numbers::pi;

Gate random_u(int q, Rng& rng) {
    return Gate::u(q, rng.uniform(0.0, 2.0 * kPi), rng.uniform(0.0, kPi),
                   rng.uniform(0.0, 2.0 * kPi));
}

// Guaranteed General class: theta bounded away from 0 and pi.
Gate random_general_u(int q, Rng& rng) {
    return Gate::u(q, rng.uniform(0.0, 2.0 * kPi), rng.uniform(0.1, kPi - 0.1),
                   rng.uniform(0.0, 2.0 * kPi));
}

} // namespace

std::string family_name(CircuitFamily f) {
    switch (f) {
    case CircuitFamily::CpFraction: return "cp-fraction";
    case CircuitFamily::Qft: return "qft";
    case CircuitFamily::QuantumVolume: return "qv";
    case CircuitFamily::Qaoa: return "qaoa";
    }
    return "?";
}

CircuitFamily parse_family(const std::string& name) {
    if (name == "cp-fraction" || name == "cp") return CircuitFamily::CpFraction;
    if (name == "qft") return CircuitFamily::Qft;
    if (name == "qv" || name == "quantum-volume") return CircuitFamily::QuantumVolume;
    if (name == "qaoa") return CircuitFamily::Qaoa;
    throw std::invalid_argument("unknown circuit family '" + name + "'");
}

Circuit generate(const GeneratorSpec& s) {
    switch (s.family) {
    case CircuitFamily::CpFraction:
        return gen_cp_fraction(s.n_q, s.depth > 0 ? s.depth : s.n_q, s.p, s.seed);
    case CircuitFamily::Qft: return gen_qft(s.n_q);
    case CircuitFamily::QuantumVolume: return gen_quantum_volume(s.n_q, s.seed, s.rounds);
    case CircuitFamily::Qaoa: return gen_qaoa_maxcut(s.n_q, s.edge_prob, s.reps, s.seed);
    }
    throw std::invalid_argument("bad circuit family");
}

Circuit gen_cp_fraction(int n_q, int d, double p, std::uint64_t seed) {
    if (n_q < 2) throw std::invalid_argument("cp-fraction: need at least 2 qubits");
    if (d < 1) throw std::invalid_argument("cp-fraction: depth must be positive");
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("cp-fraction: p outside [0,1]");
    Rng rng(seed);
    std::vector<Gate> gates;
    for (int layer = 0; layer < d; ++layer) {
        std::vector<int> pool;
        for (int q = 0; q < n_q; ++q) {
            if (rng.unit() < 1.0 - p) {
                gates.push_back(random_u(q, rng));
            } else {
                pool.push_back(q);
            }
        }
        rng.shuffle(pool);
        // After shuffling, dropping the trailing element is a uniform choice
        // of which leftover qubit idles this layer.
        if (pool.size() % 2 == 1) pool.pop_back();
        for (std::size_t i = 0; i + 1 < pool.size(); i += 2) {
            gates.push_back(Gate::cp(pool[i], pool[i + 1], rng.uniform(0.0, 2.0 * kPi)));
        }
    }
    return layer_circuit(std::move(gates), n_q);
}

Circuit gen_qft(int n_q) {
    if (n_q < 2) throw std::invalid_argument("qft: need at least 2 qubits");
    std::vector<Gate> gates;
    for (int i = 0; i < n_q; ++i) {
        gates.push_back(Gate::u(i, 0.0, kPi / 2.0, kPi)); // Hadamard
        for (int k = i + 1; k < n_q; ++k) {
            gates.push_back(Gate::cp(i, k, kPi / std::pow(2.0, k - i)));
        }
    }
    return layer_circuit(std::move(gates), n_q);
}

Circuit gen_quantum_volume(int n_q, std::uint64_t seed, int rounds) {
    if (n_q < 2) throw std::invalid_argument("qv: need at least 2 qubits");
    if (rounds <= 0) rounds = n_q;
    Rng rng(seed);
    std::vector<Gate> gates;
    std::vector<int> perm(static_cast<std::size_t>(n_q));
    for (int q = 0; q < n_q; ++q) perm[static_cast<std::size_t>(q)] = q;
    auto block_layer = [&](int a, int b) {
        gates.push_back(random_general_u(a, rng));
        gates.push_back(random_general_u(b, rng));
    };
    for (int r = 0; r < rounds; ++r) {
        rng.shuffle(perm);
        for (int i = 0; i + 1 < n_q; i += 2) {
            const int a = perm[static_cast<std::size_t>(i)];
            const int b = perm[static_cast<std::size_t>(i + 1)];
            // KAK-shaped SU(4) block: the General U gates between CPs keep
            // every CP ungroupable on both qubits.
            block_layer(a, b);
            for (int k = 0; k < 3; ++k) {
                gates.push_back(Gate::cp(a, b, rng.uniform(0.0, 2.0 * kPi)));
                block_layer(a, b);
            }
        }
    }
    return layer_circuit(std::move(gates), n_q);
}

Circuit gen_qaoa_maxcut(int n_q, double edge_prob, int reps, std::uint64_t seed) {
    if (n_q < 2) throw std::invalid_argument("qaoa: need at least 2 qubits");
    if (edge_prob < 0.0 || edge_prob > 1.0) {
        throw std::invalid_argument("qaoa: edge probability outside [0,1]");
    }
    if (reps < 1) throw std::invalid_argument("qaoa: reps must be positive");
    Rng rng(seed);
    // Lead-qubit-major edge order keeps each vertex's cost-layer gates
    // adjacent on its line, which is what makes the chains groupable.
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n_q; ++i) {
        for (int j = i + 1; j < n_q; ++j) {
            if (rng.unit() < edge_prob) edges.emplace_back(i, j);
        }
    }
    std::vector<Gate> gates;
    for (int r = 0; r < reps; ++r) {
        const double gamma = rng.uniform(0.0, 2.0 * kPi);
        const double beta = rng.uniform(0.1, kPi - 0.1);
        for (const auto& [i, j] : edges) {
            gates.push_back(Gate::cp(i, j, gamma));
            gates.push_back(Gate::u(i, gamma / 2.0, 0.0, 0.0)); // RZ, diagonal
            gates.push_back(Gate::u(j, gamma / 2.0, 0.0, 0.0));
        }
        for (int q = 0; q < n_q; ++q) {
            gates.push_back(Gate::u(q, -kPi / 2.0, beta, kPi / 2.0)); // RX mixer
        }
    }
    return layer_circuit(std::move(gates), n_q);
}

} // namespace gcp
