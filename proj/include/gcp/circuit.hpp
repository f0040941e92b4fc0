#pragma once

#include <string>
#include <vector>

namespace gcp {

enum class GateType { ControlledPhase, SingleQubitU };

/// Diagonality class of a single-qubit unitary. Diagonal and anti-diagonal
/// gates commute through an active teleportation link on their qubit;
/// everything else breaks gate grouping.
enum class DiagClass { Diagonal, AntiDiagonal, General };

struct Gate {
    GateType type = GateType::SingleQubitU;
    int q0 = 0;
    int q1 = -1; // second qubit; -1 for single-qubit gates
    double p0 = 0.0, p1 = 0.0, p2 = 0.0; // cp: phase / u: phi, theta, lambda
    int layer = -1; // assigned by layer_circuit

    static Gate cp(int a, int b, double phase) {
        Gate g;
        g.type = GateType::ControlledPhase;
        g.q0 = a;
        g.q1 = b;
        g.p0 = phase;
        return g;
    }

    static Gate u(int q, double phi, double theta, double lambda) {
        Gate g;
        g.type = GateType::SingleQubitU;
        g.q0 = q;
        g.p0 = phi;
        g.p1 = theta;
        g.p2 = lambda;
        return g;
    }

    bool is_two_qubit() const { return type == GateType::ControlledPhase; }
    bool touches(int q) const { return q0 == q || (is_two_qubit() && q1 == q); }
    int partner(int q) const { return q0 == q ? q1 : q0; }

    bool operator==(const Gate& o) const {
        return type == o.type && q0 == o.q0 && q1 == o.q1 && p0 == o.p0 &&
               p1 == o.p1 && p2 == o.p2;
    }
};

/// Diagonality of U(phi, theta, lambda) under the convention
///   [[ cos(t/2),            -e^{i*lambda} sin(t/2) ],
///    [ e^{i*phi} sin(t/2),   e^{i*(phi+lambda)} cos(t/2) ]].
DiagClass classify_u(double phi, double theta, double lambda, double tol = 1e-9);
DiagClass classify_gate(const Gate& g, double tol = 1e-9);

/// A layered circuit. Gates stay in program order; each carries the layer
/// assigned by ASAP layering. Immutable after construction.
class Circuit {
public:
    Circuit() = default;

    int qubit_count() const { return n_q_; }
    int depth() const { return depth_; }
    const std::vector<Gate>& gates() const { return gates_; }
    int two_qubit_count() const { return cp_count_; }

    bool operator==(const Circuit& o) const {
        return n_q_ == o.n_q_ && gates_ == o.gates_;
    }

    friend Circuit layer_circuit(std::vector<Gate> gates, int n_q);

private:
    int n_q_ = 0;
    int depth_ = 0;
    int cp_count_ = 0;
    std::vector<Gate> gates_;
};

/// ASAP greedy layering: each gate lands in the earliest layer after every
/// earlier gate that shares one of its qubits. Throws std::invalid_argument
/// on bad qubit indices.
Circuit layer_circuit(std::vector<Gate> gates, int n_q);

/// Text format:
///   qubits <n_q>
///   cp <qa> <qb> <phase>
///   u <q> <phi> <theta> <lambda>
/// '#' starts a comment. Layering is recomputed on load; the file stores
/// program order only. Throws std::runtime_error naming the offending line.
Circuit parse_circuit(const std::string& text);
std::string serialize_circuit(const Circuit& c);

} // namespace gcp
