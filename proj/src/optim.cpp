#include "chameleon/optim.hpp"

#include <cmath>

#include "chameleon/error.hpp"

namespace chm {

AdamState::AdamState(const ParamStore& store, AdamConfig cfg) : cfg_(cfg) {
    m_.reserve(store.size());
    v_.reserve(store.size());
    for (std::size_t i = 0; i < store.size(); ++i) {
        m_.emplace_back(store[i].value.rows(), store[i].value.cols());
        v_.emplace_back(store[i].value.rows(), store[i].value.cols());
    }
}

void AdamState::step(ParamStore& store, double lr, const ParamFilter& filter) {
    if (store.size() != m_.size())
        throw ContractError("AdamState: store size changed since construction");
    ++t_;
    const double bc1 = 1.0 - std::pow(cfg_.beta1, static_cast<double>(t_));
    const double bc2 = 1.0 - std::pow(cfg_.beta2, static_cast<double>(t_));
    for (std::size_t i = 0; i < store.size(); ++i) {
        Param& p = store[i];
        if (!p.value.same_shape(m_[i]))
            throw ContractError("AdamState: parameter " + p.name + " changed shape");
        if (filter && !filter(p)) continue;
        auto& val = p.value.raw();
        const auto& g = p.grad.raw();
        auto& m = m_[i].raw();
        auto& v = v_[i].raw();
        for (std::size_t k = 0; k < val.size(); ++k) {
            m[k] = cfg_.beta1 * m[k] + (1.0 - cfg_.beta1) * g[k];
            v[k] = cfg_.beta2 * v[k] + (1.0 - cfg_.beta2) * g[k] * g[k];
            const double mhat = m[k] / bc1;
            const double vhat = v[k] / bc2;
            val[k] -= lr * mhat / (std::sqrt(vhat) + cfg_.eps);
        }
    }
}

void sgd_step(ParamStore& store, double lr, const ParamFilter& filter) {
    for (std::size_t i = 0; i < store.size(); ++i) {
        Param& p = store[i];
        if (filter && !filter(p)) continue;
        auto& val = p.value.raw();
        const auto& g = p.grad.raw();
        for (std::size_t k = 0; k < val.size(); ++k) val[k] -= lr * g[k];
    }
}

}  // namespace chm
