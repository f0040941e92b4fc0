#pragma once

#include <cstdint>
#include <string>

#include "gcp/circuit.hpp"

namespace gcp {

enum class CircuitFamily { CpFraction, Qft, QuantumVolume, Qaoa };

std::string family_name(CircuitFamily f);
CircuitFamily parse_family(const std::string& name);

/// Parameters for one benchmark circuit instance. Generation is a pure
/// function of this struct, so identical specs give identical circuits.
struct GeneratorSpec {
    CircuitFamily family = CircuitFamily::CpFraction;
    int n_q = 8;
    std::uint64_t seed = 0;
    double p = 0.5;         // CpFraction: two-qubit fraction
    int depth = 0;          // CpFraction: 0 means n_q
    double edge_prob = 0.5; // Qaoa
    int reps = 1;           // Qaoa
    int rounds = 0;         // QuantumVolume: 0 means n_q
};

Circuit generate(const GeneratorSpec& spec);

/// d layers; per layer each qubit draws a random U with probability 1-p and
/// the rest are paired uniformly at random into CP gates (one uniformly
/// chosen leftover sits out when the count is odd).
Circuit gen_cp_fraction(int n_q, int d, double p, std::uint64_t seed);

/// Standard QFT without the final swap network: H on each qubit followed by
/// its controlled-phase chain, n_q(n_q-1)/2 CP gates in total.
Circuit gen_qft(int n_q);

/// Quantum-volume-style circuit: `rounds` rounds (default n_q) of a random
/// qubit permutation, adjacent pairs each receiving a 3-CP two-qubit block
/// whose interleaved single-qubit gates are always General class.
Circuit gen_quantum_volume(int n_q, std::uint64_t seed, int rounds = 0);

/// QAOA MaxCut over an Erdos-Renyi graph: per repetition one CP per graph
/// edge (ordered by lead qubit) with diagonal RZ rotations on both
/// endpoints, then a General mixer on every qubit.
Circuit gen_qaoa_maxcut(int n_q, double edge_prob, int reps, std::uint64_t seed);

} // namespace gcp
