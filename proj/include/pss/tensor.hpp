#pragma once

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <memory>
#include <string>
#include <vector>

namespace pss {

using Shape = std::vector<int>;

std::string shape_str(const Shape& s);
int64_t shape_numel(const Shape& s);

/// One value in the backward graph: storage, optional gradient, and the
/// closure that scatters this node's gradient into its parents.
struct TensorNode {
    Shape shape;
    std::vector<float> data;
    std::vector<float> grad; // empty until first accumulation
    bool requires_grad = false;
    std::vector<std::shared_ptr<TensorNode>> parents;
    std::function<void()> backward_fn;

    int64_t numel() const { return static_cast<int64_t>(data.size()); }
    void ensure_grad() {
        if (grad.empty()) grad.assign(data.size(), 0.0f);
    }
};

/// Dense row-major float32 tensor with reverse-mode autodiff.
/// Value-semantic handle: copies share the underlying node.
class Tensor {
public:
    Tensor() = default;
    explicit Tensor(Shape shape, float fill = 0.0f);
    Tensor(Shape shape, std::vector<float> values);
    explicit Tensor(std::shared_ptr<TensorNode> node) : node_(std::move(node)) {}

    static Tensor zeros(Shape shape) { return Tensor(std::move(shape), 0.0f); }
    static Tensor full(Shape shape, float v) { return Tensor(std::move(shape), v); }
    static Tensor scalar(float v) { return Tensor(Shape{1}, std::vector<float>{v}); }

    bool defined() const { return node_ != nullptr; }
    const Shape& shape() const { return node_->shape; }
    int rank() const { return static_cast<int>(node_->shape.size()); }
    int dim(int i) const { return node_->shape[static_cast<size_t>(i)]; }
    int64_t numel() const { return node_->numel(); }

    float* data() { return node_->data.data(); }
    const float* data() const { return node_->data.data(); }
    std::vector<float>& values() { return node_->data; }
    const std::vector<float>& values() const { return node_->data; }

    bool has_grad() const { return !node_->grad.empty(); }
    float* grad() { return node_->grad.empty() ? nullptr : node_->grad.data(); }
    const float* grad() const { return node_->grad.empty() ? nullptr : node_->grad.data(); }
    std::vector<float>& grad_values() { return node_->grad; }
    void ensure_grad() { node_->ensure_grad(); }
    void zero_grad() {
        if (!node_->grad.empty()) std::fill(node_->grad.begin(), node_->grad.end(), 0.0f);
    }

    bool requires_grad() const { return node_->requires_grad; }
    Tensor& set_requires_grad(bool v) {
        node_->requires_grad = v;
        return *this;
    }

    /// Value of a single-element tensor.
    float item() const;
    /// Element access by multi-index (test convenience, not a hot path).
    float at(std::initializer_list<int> idx) const;

    const std::shared_ptr<TensorNode>& node() const { return node_; }

private:
    std::shared_ptr<TensorNode> node_;
};

/// A named trainable tensor. `decay` marks it for decoupled weight decay.
struct Parameter {
    std::string name;
    Tensor tensor;
    bool decay = true;
};

// ---- gradient mode ---------------------------------------------------------

/// While a NoGradGuard is alive on this thread, ops do not record the
/// backward graph (inference mode).
class NoGradGuard {
public:
    NoGradGuard();
    ~NoGradGuard();
    NoGradGuard(const NoGradGuard&) = delete;
    NoGradGuard& operator=(const NoGradGuard&) = delete;

private:
    bool previous_;
};

bool grad_enabled();

// ---- operations ------------------------------------------------------------

/// Matrix product. Supports [.. ,M,K] x [K,N] (shared right operand) and
/// equal-rank batched [B..,M,K] x [B..,K,N].
Tensor matmul(const Tensor& a, const Tensor& b);

/// Elementwise sum; `b` may also be a suffix-shaped tensor broadcast over
/// the leading dimensions of `a` (e.g. bias [L] onto [B,k,L]).
Tensor add(const Tensor& a, const Tensor& b);

/// Elementwise product of same-shape tensors.
Tensor mul(const Tensor& a, const Tensor& b);

Tensor scale(const Tensor& a, float s);

/// GELU, tanh approximation.
Tensor gelu(const Tensor& x);

/// Softmax along `axis`, max-subtracted for stability.
Tensor softmax(const Tensor& x, int axis);

/// Normalize the last dimension to zero mean / unit variance, then apply
/// the affine gain/bias (both of length = last dimension).
Tensor layernorm(const Tensor& x, const Tensor& gain, const Tensor& bias, float eps = 1e-5f);

Tensor reshape(const Tensor& x, Shape new_shape);

/// Swap two axes (materializes a copy).
Tensor transpose(const Tensor& x, int axis0, int axis1);

Tensor concat(const std::vector<Tensor>& parts, int axis);

Tensor sum(const Tensor& x);
Tensor mean(const Tensor& x);

/// Mean cross-entropy of logits [B,C] against integer labels, computed via
/// log-sum-exp. Optional uniform label smoothing.
Tensor cross_entropy(const Tensor& logits, const std::vector<int>& labels,
                     float label_smoothing = 0.0f);

/// Per-image row gather: x [B,P,L] with per-image index lists of equal
/// length k -> [B,k,L]. Backward scatters only into the gathered rows;
/// dropped rows receive exactly-zero gradient.
Tensor gather_rows(const Tensor& x, const std::vector<std::vector<int>>& indices);

/// Per-pair bias lookup: table [R,H], flat_rows of length B*k*k ->
/// [B,H,k,k] with out[b,h,i,j] = table[flat_rows[(b*k+i)*k+j], h].
Tensor gather_bias(const Tensor& table, const std::vector<int>& flat_rows, int batch, int k);

/// Replicate a [1, ...] tensor along the leading axis -> [batch, ...].
Tensor expand_batch(const Tensor& x, int batch);

/// Reverse-mode sweep from a scalar loss. Gradients accumulate; repeated
/// calls without zeroing add up.
void backward(const Tensor& loss);

// ---- op-level multiply instrumentation --------------------------------------

namespace opcount {
/// When enabled, ops add their nominal multiply counts to a thread-local
/// tally (matmul exact; elementwise ops by per-element formula cost).
void enable(bool on);
void reset();
long long multiplies();
} // namespace opcount

} // namespace pss
