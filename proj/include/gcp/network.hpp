#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace gcp {

/// QPU set with per-device qubit capacities and a link-cost hook. The
/// homogeneous default charges one unit per inter-QPU link: r(a,b) = 1 for
/// a != b and f = 1. Heterogeneous r/f are carried in the data model but the
/// optimiser is only exercised with the default.
class QpuNetwork {
public:
    using PathLenFn = std::function<int(int, int)>;
    using CostScaleFn = std::function<double(int)>;

    explicit QpuNetwork(std::vector<int> capacities);
    QpuNetwork(std::vector<int> capacities, const PathLenFn& path_len,
               const CostScaleFn& cost_scale);

    int qpu_count() const { return static_cast<int>(capacities_.size()); }
    int capacity(int qpu) const { return capacities_[static_cast<std::size_t>(qpu)]; }
    const std::vector<int>& capacities() const { return capacities_; }
    int total_slots() const { return total_slots_; }

    /// f(r(a,b)), precomputed.
    double link_cost(int a, int b) const {
        return link_cost_[static_cast<std::size_t>(a) * capacities_.size() +
                          static_cast<std::size_t>(b)];
    }

private:
    void init(const PathLenFn& path_len, const CostScaleFn& cost_scale);
    std::vector<int> capacities_;
    std::vector<double> link_cost_;
    int total_slots_ = 0;
};

/// Per-layer mapping of every physical slot to a QPU label. Row i is the
/// assignment during layer i; valid assignments match each QPU's capacity
/// exactly in every row.
class Assignment {
public:
    Assignment() = default;
    Assignment(int depth, int slots, std::uint8_t fill = 0)
        : depth_(depth), slots_(slots),
          labels_(static_cast<std::size_t>(depth) * static_cast<std::size_t>(slots), fill) {}

    int depth() const { return depth_; }
    int slots() const { return slots_; }

    std::uint8_t at(int layer, int slot) const {
        return labels_[static_cast<std::size_t>(layer) * slots_ + slot];
    }
    std::uint8_t& at(int layer, int slot) {
        return labels_[static_cast<std::size_t>(layer) * slots_ + slot];
    }

    const std::uint8_t* row(int layer) const {
        return labels_.data() + static_cast<std::size_t>(layer) * slots_;
    }
    std::uint8_t* row(int layer) {
        return labels_.data() + static_cast<std::size_t>(layer) * slots_;
    }

    void fill_row(int layer, const std::vector<std::uint8_t>& labels);

    bool operator==(const Assignment& o) const {
        return depth_ == o.depth_ && slots_ == o.slots_ && labels_ == o.labels_;
    }

private:
    int depth_ = 0;
    int slots_ = 0;
    std::vector<std::uint8_t> labels_;
};

/// True iff every row places exactly capacity(q) slots on each QPU q.
bool is_valid(const Assignment& a, const QpuNetwork& net);

/// Constant assignment replicating one row over the full depth.
Assignment constant_assignment(const std::vector<std::uint8_t>& row, int depth);

} // namespace gcp
