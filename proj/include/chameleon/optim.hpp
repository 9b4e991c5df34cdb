#pragma once

#include <functional>
#include <vector>

#include "chameleon/param_store.hpp"

namespace chm {

/// Predicate selecting which parameters an update touches. Null = all.
/// FROZEN uses this to keep encoder weights bitwise untouched.
using ParamFilter = std::function<bool(const Param&)>;

struct AdamConfig {
    double beta1 = 0.9;
    double beta2 = 0.999;
    double eps = 1e-8;
};

/// Per-parameter first/second moment grids plus a shared step counter.
/// Moments are co-shaped with the store the state was built from.
class AdamState {
public:
    explicit AdamState(const ParamStore& store, AdamConfig cfg = {});

    /// Bias-corrected Adam update from the store's current gradients.
    /// Gradients are left untouched; the caller resets them.
    void step(ParamStore& store, double lr, const ParamFilter& filter = nullptr);

    long step_count() const { return t_; }
    const AdamConfig& config() const { return cfg_; }

private:
    AdamConfig cfg_;
    long t_ = 0;
    std::vector<ValueGrid> m_;
    std::vector<ValueGrid> v_;
};

/// Plain gradient step p -= lr * g. Used by the Reptile sanity checks.
void sgd_step(ParamStore& store, double lr, const ParamFilter& filter = nullptr);

enum class InnerOptimizer { kAdam, kSgd };

}  // namespace chm
