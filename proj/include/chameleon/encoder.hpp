#pragma once

#include "chameleon/param_store.hpp"
#include "chameleon/tape.hpp"

namespace chm {

struct DatasetTable;
struct SplitSpec;

/// Shape of the alignment network: each feature's N instance values pass
/// through a shared pointwise map N -> 8 -> 16 -> K whose output row is
/// softmax-normalized. N is fixed at construction; every block fed to the
/// encoder must have exactly N rows.
struct EncoderDims {
    int instance_count;  // N
    int target_width;    // K
};

/// Adds the three-layer encoder parameters (Glorot weights, zero biases)
/// under names enc.w1/b1/w2/b2/w3/b3.
void add_encoder_params(ParamStore& store, const EncoderDims& dims, Rng& rng);

bool has_encoder_params(const ParamStore& store);

/// Recovers (N, K) from the stored shapes; validates hidden widths 8 and 16.
EncoderDims encoder_dims(const ParamStore& store);

/// Records the alignment network on the tape: x is N x F, the result is the
/// F x K row-stochastic reordering matrix.
NodeId phi_forward_node(Tape& tape, ParamStore& store, const ValueGrid& x);

/// Forward-only convenience wrapper.
ValueGrid phi_forward(ParamStore& store, const ValueGrid& x);

/// x_tilde[m, n] = sum_j x[m, j] * pi[j, n].
ValueGrid align(const ValueGrid& x, const ValueGrid& pi);

/// enc(x) = x * phi(x): N x F in, N x K out, differentiable end to end.
NodeId enc_node(Tape& tape, ParamStore& store, const ValueGrid& x);

ValueGrid enc(ParamStore& store, const ValueGrid& x);

/// Average reordering-matrix row per canonical feature over sampled tasks:
/// entry (j, n) is the mean share of feature j shifted to position n. Rows
/// of features that never occur in a sampled task are all-zero.
ValueGrid feature_shift_heatmap(const DatasetTable& table, const SplitSpec& split,
                                ParamStore& store, int n_tasks, Rng& rng);

}  // namespace chm
