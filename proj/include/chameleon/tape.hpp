#pragma once

#include <functional>
#include <vector>

#include "chameleon/grid.hpp"
#include "chameleon/param_store.hpp"

namespace chm {

struct NodeId {
    int index = -1;
    bool valid() const { return index >= 0; }
};

/// Reverse-mode tape over ValueGrids. One tape records one forward episode;
/// backward() runs the recorded pullbacks in reverse order and flushes leaf
/// gradients into their ParamStore accumulators. Single-threaded by
/// contract; independent episodes use independent tapes.
///
/// cross_entropy applied directly to a softmax_rows output is fused: the
/// combined pullback writes (p - t)/R straight into the softmax input,
/// which stays stable even when predictions saturate to one-hot.
class Tape {
public:
    Tape() = default;
    Tape(const Tape&) = delete;
    Tape& operator=(const Tape&) = delete;

    /// Constant leaf (inputs, labels). No gradient is reported for it.
    NodeId input(ValueGrid v);

    /// Parameter leaf. `p` must outlive the tape; backward() accumulates
    /// d loss / d p into p.grad.
    NodeId param(Param& p);

    NodeId matmul(NodeId a, NodeId b);

    /// Adds a 1xC bias row to every row of a RxC grid.
    NodeId add_row_bias(NodeId a, NodeId bias);

    NodeId relu(NodeId a);

    /// Row-wise softmax, stabilized by row-max subtraction.
    NodeId softmax_rows(NodeId a);

    /// Mean over rows of -log(pred at the one-hot target index); 1x1 result.
    NodeId cross_entropy(NodeId pred, const ValueGrid& target_onehot);

    const ValueGrid& value(NodeId id) const { return nodes_[check(id)].value; }
    const ValueGrid& grad(NodeId id) const { return nodes_[check(id)].grad; }

    /// Value of a 1x1 node.
    double scalar(NodeId id) const;

    /// Reverse sweep from a scalar loss node. Throws ContractError if the
    /// node is not 1x1. May be called once per tape.
    void backward(NodeId loss);

    std::size_t node_count() const { return nodes_.size(); }

private:
    struct Node {
        ValueGrid value;
        ValueGrid grad;
        Param* leaf = nullptr;
        bool is_softmax = false;
        int softmax_input = -1;  // set when is_softmax
        std::function<void(Tape&)> back;
    };

    std::size_t check(NodeId id) const;
    NodeId push(Node n);

    std::vector<Node> nodes_;
    bool backward_done_ = false;
};

}  // namespace chm
