#include "chameleon/tape.hpp"

#include <cmath>

#include "chameleon/error.hpp"

namespace chm {

std::size_t Tape::check(NodeId id) const {
    if (!id.valid() || static_cast<std::size_t>(id.index) >= nodes_.size())
        throw ContractError("Tape: invalid node id");
    return static_cast<std::size_t>(id.index);
}

NodeId Tape::push(Node n) {
    nodes_.push_back(std::move(n));
    return NodeId{static_cast<int>(nodes_.size()) - 1};
}

NodeId Tape::input(ValueGrid v) {
    Node n;
    n.grad = ValueGrid(v.rows(), v.cols());
    n.value = std::move(v);
    return push(std::move(n));
}

NodeId Tape::param(Param& p) {
    Node n;
    n.value = p.value;
    n.grad = ValueGrid(p.value.rows(), p.value.cols());
    n.leaf = &p;
    return push(std::move(n));
}

NodeId Tape::matmul(NodeId a, NodeId b) {
    const std::size_t ia = check(a), ib = check(b);
    Node n;
    n.value = matmul_grids(nodes_[ia].value, nodes_[ib].value);
    n.grad = ValueGrid(n.value.rows(), n.value.cols());
    const int self = static_cast<int>(nodes_.size());
    n.back = [ia, ib, self](Tape& t) {
        const ValueGrid& g = t.nodes_[static_cast<std::size_t>(self)].grad;
        const ValueGrid da = matmul_grids(g, t.nodes_[ib].value.transposed());
        const ValueGrid db = matmul_grids(t.nodes_[ia].value.transposed(), g);
        auto& ga = t.nodes_[ia].grad;
        auto& gb = t.nodes_[ib].grad;
        for (std::size_t i = 0; i < ga.size(); ++i) ga.raw()[i] += da.raw()[i];
        for (std::size_t i = 0; i < gb.size(); ++i) gb.raw()[i] += db.raw()[i];
    };
    return push(std::move(n));
}

NodeId Tape::add_row_bias(NodeId a, NodeId bias) {
    const std::size_t ia = check(a), ibias = check(bias);
    const ValueGrid& av = nodes_[ia].value;
    const ValueGrid& bv = nodes_[ibias].value;
    if (bv.rows() != 1 || bv.cols() != av.cols())
        throw DimensionError("add_row_bias: bias " + bv.shape_str() + " for " + av.shape_str());
    Node n;
    n.value = av;
    for (int r = 0; r < av.rows(); ++r)
        for (int c = 0; c < av.cols(); ++c) n.value.at(r, c) += bv.at(0, c);
    n.grad = ValueGrid(av.rows(), av.cols());
    const int self = static_cast<int>(nodes_.size());
    n.back = [ia, ibias, self](Tape& t) {
        const ValueGrid& g = t.nodes_[static_cast<std::size_t>(self)].grad;
        auto& ga = t.nodes_[ia].grad;
        auto& gb = t.nodes_[ibias].grad;
        for (std::size_t i = 0; i < ga.size(); ++i) ga.raw()[i] += g.raw()[i];
        for (int r = 0; r < g.rows(); ++r)
            for (int c = 0; c < g.cols(); ++c) gb.at(0, c) += g.at(r, c);
    };
    return push(std::move(n));
}

NodeId Tape::relu(NodeId a) {
    const std::size_t ia = check(a);
    const ValueGrid& av = nodes_[ia].value;
    Node n;
    n.value = av;
    for (double& v : n.value.raw())
        if (v < 0.0) v = 0.0;
    n.grad = ValueGrid(av.rows(), av.cols());
    const int self = static_cast<int>(nodes_.size());
    n.back = [ia, self](Tape& t) {
        const ValueGrid& g = t.nodes_[static_cast<std::size_t>(self)].grad;
        const ValueGrid& x = t.nodes_[ia].value;
        auto& ga = t.nodes_[ia].grad;
        for (std::size_t i = 0; i < ga.size(); ++i)
            if (x.raw()[i] > 0.0) ga.raw()[i] += g.raw()[i];
    };
    return push(std::move(n));
}

NodeId Tape::softmax_rows(NodeId a) {
    const std::size_t ia = check(a);
    const ValueGrid& av = nodes_[ia].value;
    Node n;
    n.value = ValueGrid(av.rows(), av.cols());
    for (int r = 0; r < av.rows(); ++r) {
        double mx = av.at(r, 0);
        for (int c = 1; c < av.cols(); ++c) mx = std::max(mx, av.at(r, c));
        double sum = 0.0;
        for (int c = 0; c < av.cols(); ++c) {
            const double e = std::exp(av.at(r, c) - mx);
            n.value.at(r, c) = e;
            sum += e;
        }
        for (int c = 0; c < av.cols(); ++c) n.value.at(r, c) /= sum;
    }
    n.grad = ValueGrid(av.rows(), av.cols());
    n.is_softmax = true;
    n.softmax_input = static_cast<int>(ia);
    const int self = static_cast<int>(nodes_.size());
    n.back = [ia, self](Tape& t) {
        const ValueGrid& g = t.nodes_[static_cast<std::size_t>(self)].grad;
        const ValueGrid& y = t.nodes_[static_cast<std::size_t>(self)].value;
        auto& ga = t.nodes_[ia].grad;
        for (int r = 0; r < g.rows(); ++r) {
            double dot = 0.0;
            for (int c = 0; c < g.cols(); ++c) dot += g.at(r, c) * y.at(r, c);
            for (int c = 0; c < g.cols(); ++c) ga.at(r, c) += y.at(r, c) * (g.at(r, c) - dot);
        }
    };
    return push(std::move(n));
}

namespace {
// Returns the target column of each one-hot row; throws on malformed rows.
std::vector<int> target_columns(const ValueGrid& target) {
    std::vector<int> cols(static_cast<std::size_t>(target.rows()), -1);
    for (int r = 0; r < target.rows(); ++r) {
        for (int c = 0; c < target.cols(); ++c) {
            const double v = target.at(r, c);
            if (v == 1.0) {
                if (cols[static_cast<std::size_t>(r)] >= 0)
                    throw DomainError("cross_entropy: target row has multiple ones");
                cols[static_cast<std::size_t>(r)] = c;
            } else if (v != 0.0) {
                throw DomainError("cross_entropy: target row is not one-hot");
            }
        }
        if (cols[static_cast<std::size_t>(r)] < 0)
            throw DomainError("cross_entropy: target row has no one");
    }
    return cols;
}
}  // namespace

NodeId Tape::cross_entropy(NodeId pred, const ValueGrid& target_onehot) {
    const std::size_t ip = check(pred);
    const ValueGrid& pv = nodes_[ip].value;
    check_same_shape(pv, target_onehot, "cross_entropy");
    const std::vector<int> tcol = target_columns(target_onehot);
    const int rows = pv.rows();

    double loss = 0.0;
    for (int r = 0; r < rows; ++r) {
        const double p = pv.at(r, tcol[static_cast<std::size_t>(r)]);
        if (p <= 0.0) throw DomainError("cross_entropy: zero probability at target index");
        loss -= std::log(p);
    }
    loss /= rows;

    Node n;
    n.value = ValueGrid(1, 1, {loss});
    n.grad = ValueGrid(1, 1);
    const int self = static_cast<int>(nodes_.size());

    if (nodes_[ip].is_softmax) {
        // Fused path: push (p - t)/R into the softmax input and skip the
        // softmax Jacobian for this consumer.
        const std::size_t ilogits = static_cast<std::size_t>(nodes_[ip].softmax_input);
        ValueGrid target = target_onehot;
        n.back = [ip, ilogits, self, target = std::move(target), rows](Tape& t) {
            const double g = t.nodes_[static_cast<std::size_t>(self)].grad.at(0, 0);
            const ValueGrid& p = t.nodes_[ip].value;
            auto& gl = t.nodes_[ilogits].grad;
            for (std::size_t i = 0; i < gl.size(); ++i)
                gl.raw()[i] += g * (p.raw()[i] - target.raw()[i]) / rows;
        };
    } else {
        n.back = [ip, self, tcol, rows](Tape& t) {
            const double g = t.nodes_[static_cast<std::size_t>(self)].grad.at(0, 0);
            const ValueGrid& p = t.nodes_[ip].value;
            auto& gp = t.nodes_[ip].grad;
            for (int r = 0; r < rows; ++r) {
                const int c = tcol[static_cast<std::size_t>(r)];
                gp.at(r, c) -= g / (rows * p.at(r, c));
            }
        };
    }
    return push(std::move(n));
}

double Tape::scalar(NodeId id) const {
    const ValueGrid& v = value(id);
    if (v.rows() != 1 || v.cols() != 1)
        throw ContractError("Tape::scalar: node is " + v.shape_str() + ", not 1x1");
    return v.at(0, 0);
}

void Tape::backward(NodeId loss) {
    const std::size_t il = check(loss);
    const ValueGrid& lv = nodes_[il].value;
    if (lv.rows() != 1 || lv.cols() != 1)
        throw ContractError("Tape::backward: loss node is " + lv.shape_str() + ", not 1x1");
    if (backward_done_) throw ContractError("Tape::backward: called twice");
    backward_done_ = true;

    nodes_[il].grad.at(0, 0) = 1.0;
    // Creation order is already topological; nodes off the loss path carry
    // zero grads and their pullbacks are no-ops.
    for (std::size_t i = nodes_.size(); i-- > 0;) {
        if (nodes_[i].back) nodes_[i].back(*this);
    }
    for (auto& n : nodes_) {
        if (!n.leaf) continue;
        for (std::size_t i = 0; i < n.grad.size(); ++i) n.leaf->grad.raw()[i] += n.grad.raw()[i];
    }
}

}  // namespace chm
