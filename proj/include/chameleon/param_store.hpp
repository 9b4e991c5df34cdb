#pragma once

#include <deque>
#include <string>
#include <unordered_map>

#include "chameleon/grid.hpp"
#include "chameleon/rng.hpp"

namespace chm {

/// One named parameter grid with its co-shaped gradient accumulator.
struct Param {
    std::string name;
    ValueGrid value;
    ValueGrid grad;
};

/// Ordered collection of named parameters. Gradients accumulate across
/// backward passes until zero_grads(); the meta-loop reuses one store per
/// adaptation episode. Entries live in a deque so Param references stay
/// valid as parameters are added.
class ParamStore {
public:
    Param& add(const std::string& name, ValueGrid value);
    Param& at(const std::string& name);
    const Param& at(const std::string& name) const;
    bool has(const std::string& name) const;

    std::size_t size() const { return params_.size(); }
    Param& operator[](std::size_t i) { return params_[i]; }
    const Param& operator[](std::size_t i) const { return params_[i]; }

    void zero_grads();

    /// Total number of scalar parameters.
    std::size_t scalar_count() const;

    auto begin() { return params_.begin(); }
    auto end() { return params_.end(); }
    auto begin() const { return params_.begin(); }
    auto end() const { return params_.end(); }

private:
    std::deque<Param> params_;
    std::unordered_map<std::string, std::size_t> index_;
};

/// Glorot-uniform grid: entries ~ U[-b, b], b = sqrt(6 / (rows + cols)).
ValueGrid glorot_init(int rows, int cols, Rng& rng);

}  // namespace chm
