#include "gcp/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace gcp {

DiagClass classify_u(double phi, double theta, double lambda, double tol) {
    using cd = std::complex<double>;
    const cd i(0.0, 1.0);
    const double c = std::cos(theta / 2.0);
    const double s = std::sin(theta / 2.0);
    const cd m00 = cd(c, 0.0);
    const cd m01 = -std::exp(i * lambda) * s;
    const cd m10 = std::exp(i * phi) * s;
    const cd m11 = std::exp(i * (phi + lambda)) * c;
    if (std::abs(m01) <= tol && std::abs(m10) <= tol) return DiagClass::Diagonal;
    if (std::abs(m00) <= tol && std::abs(m11) <= tol) return DiagClass::AntiDiagonal;
    return DiagClass::General;
}

DiagClass classify_gate(const Gate& g, double tol) {
    if (g.type != GateType::SingleQubitU) {
        throw std::invalid_argument("classify_gate: gate is not single-qubit");
    }
    return classify_u(g.p0, g.p1, g.p2, tol);
}

Circuit layer_circuit(std::vector<Gate> gates, int n_q) {
    if (n_q < 0) throw std::invalid_argument("layer_circuit: negative qubit count");
    std::vector<int> next_free(static_cast<std::size_t>(n_q), 0);
    int depth = 0;
    int cp_count = 0;
    for (std::size_t gi = 0; gi < gates.size(); ++gi) {
        Gate& g = gates[gi];
        if (g.q0 < 0 || g.q0 >= n_q) {
            throw std::invalid_argument("layer_circuit: gate " + std::to_string(gi) +
                                        " qubit index " + std::to_string(g.q0) +
                                        " out of range");
        }
        if (g.is_two_qubit()) {
            if (g.q1 < 0 || g.q1 >= n_q) {
                throw std::invalid_argument("layer_circuit: gate " + std::to_string(gi) +
                                            " qubit index " + std::to_string(g.q1) +
                                            " out of range");
            }
            if (g.q1 == g.q0) {
                throw std::invalid_argument("layer_circuit: gate " + std::to_string(gi) +
                                            " uses the same qubit twice");
            }
            ++cp_count;
        }
        int layer = next_free[static_cast<std::size_t>(g.q0)];
        if (g.is_two_qubit()) {
            layer = std::max(layer, next_free[static_cast<std::size_t>(g.q1)]);
        }
        g.layer = layer;
        next_free[static_cast<std::size_t>(g.q0)] = layer + 1;
        if (g.is_two_qubit()) next_free[static_cast<std::size_t>(g.q1)] = layer + 1;
        depth = std::max(depth, layer + 1);
    }
    Circuit c;
    c.n_q_ = n_q;
    c.depth_ = depth;
    c.cp_count_ = cp_count;
    c.gates_ = std::move(gates);
    return c;
}

namespace {

[[noreturn]] void parse_fail(int line_no, const std::string& why) {
    throw std::runtime_error("parse error, line " + std::to_string(line_no) + ": " + why);
}

bool parse_double(const std::string& tok, double& out) {
    try {
        std::size_t pos = 0;
        out = std::stod(tok, &pos);
        return pos == tok.size();
    } catch (const std::exception&) {
        return false;
    }
}

bool parse_int(const std::string& tok, int& out) {
    try {
        std::size_t pos = 0;
        long v = std::stol(tok, &pos);
        if (pos != tok.size()) return false;
        out = static_cast<int>(v);
        return true;
    } catch (const std::exception&) {
        return false;
    }
}

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

} // namespace

Circuit parse_circuit(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    int n_q = -1;
    std::vector<Gate> gates;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::vector<std::string> tok;
        std::string t;
        while (ls >> t) tok.push_back(t);
        if (tok.empty()) continue;
        if (n_q < 0) {
            if (tok[0] != "qubits" || tok.size() != 2) {
                parse_fail(line_no, "expected 'qubits <n>' header");
            }
            if (!parse_int(tok[1], n_q) || n_q < 0) {
                parse_fail(line_no, "bad qubit count '" + tok[1] + "'");
            }
            continue;
        }
        if (tok[0] == "cp") {
            if (tok.size() != 4) parse_fail(line_no, "cp expects 3 arguments");
            int a = 0, b = 0;
            double phase = 0;
            if (!parse_int(tok[1], a)) parse_fail(line_no, "bad qubit '" + tok[1] + "'");
            if (!parse_int(tok[2], b)) parse_fail(line_no, "bad qubit '" + tok[2] + "'");
            if (!parse_double(tok[3], phase)) parse_fail(line_no, "bad angle '" + tok[3] + "'");
            if (a < 0 || a >= n_q || b < 0 || b >= n_q) {
                parse_fail(line_no, "qubit index out of range");
            }
            if (a == b) parse_fail(line_no, "cp uses the same qubit twice");
            gates.push_back(Gate::cp(a, b, phase));
        } else if (tok[0] == "u") {
            if (tok.size() != 5) parse_fail(line_no, "u expects 4 arguments");
            int q = 0;
            double phi = 0, theta = 0, lambda = 0;
            if (!parse_int(tok[1], q)) parse_fail(line_no, "bad qubit '" + tok[1] + "'");
            if (!parse_double(tok[2], phi)) parse_fail(line_no, "bad angle '" + tok[2] + "'");
            if (!parse_double(tok[3], theta)) parse_fail(line_no, "bad angle '" + tok[3] + "'");
            if (!parse_double(tok[4], lambda)) parse_fail(line_no, "bad angle '" + tok[4] + "'");
            if (q < 0 || q >= n_q) parse_fail(line_no, "qubit index out of range");
            gates.push_back(Gate::u(q, phi, theta, lambda));
        } else {
            parse_fail(line_no, "unknown gate '" + tok[0] + "'");
        }
    }
    if (n_q < 0) parse_fail(line_no == 0 ? 1 : line_no, "missing 'qubits <n>' header");
    return layer_circuit(std::move(gates), n_q);
}

std::string serialize_circuit(const Circuit& c) {
    std::string out = "qubits " + std::to_string(c.qubit_count()) + "\n";
    for (const Gate& g : c.gates()) {
        if (g.is_two_qubit()) {
            out += "cp " + std::to_string(g.q0) + " " + std::to_string(g.q1) + " " +
                   fmt_double(g.p0) + "\n";
        } else {
            out += "u " + std::to_string(g.q0) + " " + fmt_double(g.p0) + " " +
                   fmt_double(g.p1) + " " + fmt_double(g.p2) + "\n";
        }
    }
    return out;
}

} // namespace gcp
