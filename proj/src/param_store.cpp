#include "chameleon/param_store.hpp"

#include <cmath>

#include "chameleon/error.hpp"

namespace chm {

Param& ParamStore::add(const std::string& name, ValueGrid value) {
    if (index_.count(name)) throw ContractError("ParamStore: duplicate parameter " + name);
    ValueGrid grad(value.rows(), value.cols());
    params_.push_back(Param{name, std::move(value), std::move(grad)});
    index_.emplace(name, params_.size() - 1);
    return params_.back();
}

Param& ParamStore::at(const std::string& name) {
    auto it = index_.find(name);
    if (it == index_.end()) throw ContractError("ParamStore: unknown parameter " + name);
    return params_[it->second];
}

const Param& ParamStore::at(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) throw ContractError("ParamStore: unknown parameter " + name);
    return params_[it->second];
}

bool ParamStore::has(const std::string& name) const { return index_.count(name) > 0; }

void ParamStore::zero_grads() {
    for (auto& p : params_) p.grad.fill(0.0);
}

std::size_t ParamStore::scalar_count() const {
    std::size_t n = 0;
    for (const auto& p : params_) n += p.value.size();
    return n;
}

ValueGrid glorot_init(int rows, int cols, Rng& rng) {
    if (rows <= 0 || cols <= 0) throw DimensionError("glorot_init: nonpositive dimension");
    const double bound = std::sqrt(6.0 / (rows + cols));
    ValueGrid g(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) g.at(r, c) = rng.uniform_real(-bound, bound);
    return g;
}

}  // namespace chm
