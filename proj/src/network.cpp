#include "gcp/network.hpp"

#include <cstring>
#include <stdexcept>

namespace gcp {

QpuNetwork::QpuNetwork(std::vector<int> capacities)
    : QpuNetwork(std::move(capacities),
                 [](int a, int b) { return a == b ? 0 : 1; },
                 [](int) { return 1.0; }) {}

QpuNetwork::QpuNetwork(std::vector<int> capacities, const PathLenFn& path_len,
                       const CostScaleFn& cost_scale)
    : capacities_(std::move(capacities)) {
    init(path_len, cost_scale);
}

void QpuNetwork::init(const PathLenFn& path_len, const CostScaleFn& cost_scale) {
    if (capacities_.empty()) throw std::invalid_argument("network: no QPUs");
    if (capacities_.size() > 255) throw std::invalid_argument("network: too many QPUs");
    for (int c : capacities_) {
        if (c < 1) throw std::invalid_argument("network: QPU capacity must be positive");
        total_slots_ += c;
    }
    const std::size_t n = capacities_.size();
    link_cost_.resize(n * n, 0.0);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            const int r = path_len(static_cast<int>(a), static_cast<int>(b));
            const int rb = path_len(static_cast<int>(b), static_cast<int>(a));
            if (r != rb) throw std::invalid_argument("network: path length not symmetric");
            if (a == b && r != 0) throw std::invalid_argument("network: r(a,a) must be 0");
            const double f = cost_scale(r);
            if (f < 0.0) throw std::invalid_argument("network: negative cost scale");
            link_cost_[a * n + b] = f;
        }
    }
}

void Assignment::fill_row(int layer, const std::vector<std::uint8_t>& labels) {
    if (static_cast<int>(labels.size()) != slots_) {
        throw std::invalid_argument("assignment: row width mismatch");
    }
    std::memcpy(row(layer), labels.data(), labels.size());
}

bool is_valid(const Assignment& a, const QpuNetwork& net) {
    if (a.slots() != net.total_slots()) return false;
    std::vector<int> count(static_cast<std::size_t>(net.qpu_count()));
    for (int l = 0; l < a.depth(); ++l) {
        std::fill(count.begin(), count.end(), 0);
        for (int j = 0; j < a.slots(); ++j) {
            const std::uint8_t q = a.at(l, j);
            if (q >= net.qpu_count()) return false;
            ++count[q];
        }
        for (int q = 0; q < net.qpu_count(); ++q) {
            if (count[static_cast<std::size_t>(q)] != net.capacity(q)) return false;
        }
    }
    return true;
}

Assignment constant_assignment(const std::vector<std::uint8_t>& row, int depth) {
    Assignment a(depth, static_cast<int>(row.size()));
    for (int l = 0; l < depth; ++l) a.fill_row(l, row);
    return a;
}

} // namespace gcp
