"""Minimal dense-tensor autograd core.

Float64 numpy arrays wrapped in a dynamically built reverse-mode graph,
plus the handful of layers the learned components need: affine maps, a
GRU cell, scaled dot-product attention over variable-size message sets,
MSE, and an Adam optimizer.  Everything here is checked against central
finite differences in the test suite.

Gradients accumulate into ``.grad`` until explicitly zeroed, so a sum of
several losses can be pushed through one ``backward`` call.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

__all__ = [
    "Tensor",
    "ShapeError",
    "no_grad",
    "concat",
    "stack",
    "masked_softmax",
    "AffineParams",
    "GruParams",
    "AttentionParams",
    "affine",
    "gru_step",
    "self_attention",
    "mse",
    "Adam",
    "save_manifest",
    "load_manifest",
    "collect_params",
    "assign_params",
]


class ShapeError(ValueError):
    """Raised when operand shapes are inconsistent."""


class _NoGrad:
    """Context manager that disables graph construction (pure forward)."""

    enabled = False

    def __enter__(self):
        self._prev = _NoGrad.enabled
        _NoGrad.enabled = True

    def __exit__(self, *exc):
        _NoGrad.enabled = self._prev


no_grad = _NoGrad


def _unbroadcast(grad: np.ndarray, shape: tuple) -> np.ndarray:
    """Sum ``grad`` down to ``shape`` (reverse of numpy broadcasting)."""
    if grad.shape == shape:
        return grad
    extra = grad.ndim - len(shape)
    if extra > 0:
        grad = grad.sum(axis=tuple(range(extra)))
    axes = tuple(i for i, s in enumerate(shape) if s == 1 and grad.shape[i] != 1)
    if axes:
        grad = grad.sum(axis=axes, keepdims=True)
    return grad


class Tensor:
    """A float64 array plus an optional gradient slot.

    Data is immutable once created except for the grad slot; parameter
    tensors are leaves whose data the optimizer updates between graphs.
    """

    __slots__ = ("data", "grad", "requires_grad", "_backward", "_parents", "name")

    def __init__(self, data, requires_grad: bool = False, _parents=(), name: str = ""):
        self.data = np.asarray(data, dtype=np.float64)
        self.grad: np.ndarray | None = None
        self.requires_grad = requires_grad and not _NoGrad.enabled
        self._backward = None
        self._parents = _parents if self.requires_grad else ()
        self.name = name

    # ---- introspection -------------------------------------------------

    @property
    def shape(self) -> tuple:
        return self.data.shape

    @property
    def ndim(self) -> int:
        return self.data.ndim

    @property
    def size(self) -> int:
        return self.data.size

    def item(self) -> float:
        return float(self.data.reshape(-1)[0])

    def __repr__(self):
        tag = f" name={self.name!r}" if self.name else ""
        return f"Tensor(shape={self.shape}, requires_grad={self.requires_grad}{tag})"

    # ---- grad bookkeeping ----------------------------------------------

    def zero_grad(self) -> None:
        self.grad = None

    def _accumulate(self, g: np.ndarray) -> None:
        if self.grad is None:
            self.grad = np.zeros_like(self.data)
        self.grad += g

    def backward(self) -> None:
        """Reverse-mode sweep from a scalar node.

        Grad slots of every reachable ``requires_grad`` tensor are
        accumulated into; repeated calls without zeroing add up.
        """
        if self.size != 1:
            raise ShapeError(f"backward requires a scalar node, got shape {self.shape}")
        if not self.requires_grad:
            raise ValueError("backward called on a tensor detached from any graph")
        topo: list[Tensor] = []
        visited: set[int] = set()
        stack = [(self, False)]
        while stack:
            node, processed = stack.pop()
            if processed:
                topo.append(node)
                continue
            if id(node) in visited:
                continue
            visited.add(id(node))
            stack.append((node, True))
            for parent in node._parents:
                if parent.requires_grad and id(parent) not in visited:
                    stack.append((parent, False))
        self._accumulate(np.ones_like(self.data))
        for node in reversed(topo):
            if node._backward is not None:
                node._backward()

    # ---- arithmetic ------------------------------------------------------

    @staticmethod
    def _lift(x) -> "Tensor":
        return x if isinstance(x, Tensor) else Tensor(x)

    def __add__(self, other):
        other = self._lift(other)
        out = Tensor(self.data + other.data,
                     requires_grad=self.requires_grad or other.requires_grad,
                     _parents=(self, other))
        if out.requires_grad:
            def _backward():
                if self.requires_grad:
                    self._accumulate(_unbroadcast(out.grad, self.shape))
                if other.requires_grad:
                    other._accumulate(_unbroadcast(out.grad, other.shape))
            out._backward = _backward
        return out

    __radd__ = __add__

    def __neg__(self):
        out = Tensor(-self.data, requires_grad=self.requires_grad, _parents=(self,))
        if out.requires_grad:
            def _backward():
                self._accumulate(-out.grad)
            out._backward = _backward
        return out

    def __sub__(self, other):
        other = self._lift(other)
        out = Tensor(self.data - other.data,
                     requires_grad=self.requires_grad or other.requires_grad,
                     _parents=(self, other))
        if out.requires_grad:
            def _backward():
                if self.requires_grad:
                    self._accumulate(_unbroadcast(out.grad, self.shape))
                if other.requires_grad:
                    other._accumulate(_unbroadcast(-out.grad, other.shape))
            out._backward = _backward
        return out

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        other = self._lift(other)
        out = Tensor(self.data * other.data,
                     requires_grad=self.requires_grad or other.requires_grad,
                     _parents=(self, other))
        if out.requires_grad:
            def _backward():
                if self.requires_grad:
                    self._accumulate(_unbroadcast(out.grad * other.data, self.shape))
                if other.requires_grad:
                    other._accumulate(_unbroadcast(out.grad * self.data, other.shape))
            out._backward = _backward
        return out

    __rmul__ = __mul__

    def __matmul__(self, other):
        other = self._lift(other)
        try:
            data = np.matmul(self.data, other.data)
        except ValueError as exc:
            raise ShapeError(f"matmul shapes {self.shape} and {other.shape}: {exc}") from None
        out = Tensor(data, requires_grad=self.requires_grad or other.requires_grad,
                     _parents=(self, other))
        if out.requires_grad:
            def _backward():
                g = out.grad
                a, b = self.data, other.data
                # 1-D operands follow numpy's vector promotion rules.
                if a.ndim == 1 and b.ndim == 1:
                    if self.requires_grad:
                        self._accumulate(g * b)
                    if other.requires_grad:
                        other._accumulate(g * a)
                    return
                if a.ndim == 1:
                    if self.requires_grad:
                        self._accumulate(_unbroadcast(np.matmul(b, g), a.shape))
                    if other.requires_grad:
                        other._accumulate(_unbroadcast(np.outer(a, g) if b.ndim == 2
                                                       else a[..., :, None] * g[..., None, :],
                                                       b.shape))
                    return
                if b.ndim == 1:
                    if self.requires_grad:
                        self._accumulate(_unbroadcast(g[..., :, None] * b, a.shape))
                    if other.requires_grad:
                        other._accumulate(_unbroadcast(np.matmul(np.swapaxes(a, -1, -2), g),
                                                       b.shape))
                    return
                if self.requires_grad:
                    self._accumulate(_unbroadcast(np.matmul(g, np.swapaxes(b, -1, -2)), a.shape))
                if other.requires_grad:
                    other._accumulate(_unbroadcast(np.matmul(np.swapaxes(a, -1, -2), g), b.shape))
            out._backward = _backward
        return out

    # ---- nonlinearities --------------------------------------------------

    def tanh(self):
        out = Tensor(np.tanh(self.data), requires_grad=self.requires_grad, _parents=(self,))
        if out.requires_grad:
            def _backward():
                self._accumulate((1.0 - out.data ** 2) * out.grad)
            out._backward = _backward
        return out

    def sigmoid(self):
        x = self.data
        pos = x >= 0
        y = np.empty_like(x)
        y[pos] = 1.0 / (1.0 + np.exp(-x[pos]))
        ex = np.exp(x[~pos])
        y[~pos] = ex / (1.0 + ex)
        out = Tensor(y, requires_grad=self.requires_grad, _parents=(self,))
        if out.requires_grad:
            def _backward():
                self._accumulate(out.data * (1.0 - out.data) * out.grad)
            out._backward = _backward
        return out

    def elu(self):
        x = self.data
        y = np.where(x > 0, x, np.expm1(np.minimum(x, 0.0)))
        out = Tensor(y, requires_grad=self.requires_grad, _parents=(self,))
        if out.requires_grad:
            def _backward():
                self._accumulate(np.where(x > 0, 1.0, y + 1.0) * out.grad)
            out._backward = _backward
        return out

    def abs(self):
        out = Tensor(np.abs(self.data), requires_grad=self.requires_grad, _parents=(self,))
        if out.requires_grad:
            def _backward():
                self._accumulate(np.sign(self.data) * out.grad)
            out._backward = _backward
        return out

    def exp(self):
        out = Tensor(np.exp(self.data), requires_grad=self.requires_grad, _parents=(self,))
        if out.requires_grad:
            def _backward():
                self._accumulate(out.data * out.grad)
            out._backward = _backward
        return out

    # ---- reductions and reshaping -----------------------------------------

    def sum(self, axis=None, keepdims: bool = False):
        out = Tensor(self.data.sum(axis=axis, keepdims=keepdims),
                     requires_grad=self.requires_grad, _parents=(self,))
        if out.requires_grad:
            def _backward():
                g = out.grad
                if axis is not None and not keepdims:
                    g = np.expand_dims(g, axis)
                self._accumulate(np.broadcast_to(g, self.shape).copy())
            out._backward = _backward
        return out

    def mean(self, axis=None, keepdims: bool = False):
        if axis is None:
            n = self.size
        else:
            n = self.shape[axis]
        return self.sum(axis=axis, keepdims=keepdims) * (1.0 / n)

    def reshape(self, *shape):
        if len(shape) == 1 and isinstance(shape[0], (tuple, list)):
            shape = tuple(shape[0])
        out = Tensor(self.data.reshape(shape), requires_grad=self.requires_grad,
                     _parents=(self,))
        if out.requires_grad:
            def _backward():
                self._accumulate(out.grad.reshape(self.shape))
            out._backward = _backward
        return out

    def take_rows(self, idx: np.ndarray):
        """Select one entry per row of a 2-D tensor: out[b] = self[b, idx[b]]."""
        if self.ndim != 2:
            raise ShapeError(f"take_rows expects a 2-D tensor, got {self.shape}")
        idx = np.asarray(idx, dtype=np.intp)
        rows = np.arange(self.shape[0])
        out = Tensor(self.data[rows, idx], requires_grad=self.requires_grad,
                     _parents=(self,))
        if out.requires_grad:
            def _backward():
                g = np.zeros_like(self.data)
                np.add.at(g, (rows, idx), out.grad)
                self._accumulate(g)
            out._backward = _backward
        return out


def concat(tensors: list[Tensor], axis: int = -1) -> Tensor:
    """Concatenate along ``axis``; gradient splits back to the inputs."""
    datas = [t.data for t in tensors]
    out = Tensor(np.concatenate(datas, axis=axis),
                 requires_grad=any(t.requires_grad for t in tensors),
                 _parents=tuple(tensors))
    if out.requires_grad:
        sizes = [d.shape[axis] for d in datas]
        offsets = np.cumsum([0] + sizes)

        def _backward():
            for t, lo, hi in zip(tensors, offsets[:-1], offsets[1:]):
                if t.requires_grad:
                    sl = [slice(None)] * out.data.ndim
                    sl[axis] = slice(lo, hi)
                    t._accumulate(out.grad[tuple(sl)])
        out._backward = _backward
    return out


def stack(tensors: list[Tensor], axis: int = 0) -> Tensor:
    """Stack equal-shaped tensors along a new axis."""
    out = Tensor(np.stack([t.data for t in tensors], axis=axis),
                 requires_grad=any(t.requires_grad for t in tensors),
                 _parents=tuple(tensors))
    if out.requires_grad:
        def _backward():
            for k, t in enumerate(tensors):
                if t.requires_grad:
                    t._accumulate(np.take(out.grad, k, axis=axis))
        out._backward = _backward
    return out


def masked_softmax(logits: Tensor, mask: np.ndarray) -> Tensor:
    """Softmax over the last axis restricted to ``mask == 1`` entries.

    Rows whose mask is all zero produce all-zero weights (the degenerate
    empty-set case).  ``mask`` is a constant, not differentiated through.
    """
    m = np.asarray(mask, dtype=np.float64)
    if m.shape != logits.shape:
        raise ShapeError(f"mask shape {m.shape} != logits shape {logits.shape}")
    # subtracting the per-row max over unmasked entries is gradient-neutral
    # and keeps exp bounded; all-masked rows fall through to zero weights
    masked = np.where(m > 0, logits.data, -np.inf)
    mx = np.max(masked, axis=-1, keepdims=True)
    mx = np.where(np.isfinite(mx), mx, 0.0)
    e = np.exp(masked - mx)
    z = e.sum(axis=-1, keepdims=True)
    y = np.divide(e, z, out=np.zeros_like(e), where=z > 0)
    out = Tensor(y, requires_grad=logits.requires_grad, _parents=(logits,))
    if out.requires_grad:
        def _backward():
            g = out.grad
            dot = (g * y).sum(axis=-1, keepdims=True)
            logits._accumulate(y * (g - dot))
        out._backward = _backward
    return out


# ---------------------------------------------------------------------------
# parameter containers and layers
# ---------------------------------------------------------------------------


def _uniform_init(rng: np.random.Generator, shape: tuple, fan_in: int) -> np.ndarray:
    bound = 1.0 / np.sqrt(max(fan_in, 1))
    return rng.uniform(-bound, bound, size=shape)


def param(rng: np.random.Generator, shape: tuple, fan_in: int, name: str = "") -> Tensor:
    return Tensor(_uniform_init(rng, shape, fan_in), requires_grad=True, name=name)


@dataclass
class AffineParams:
    """Weights for y = W x + b with W of shape [out, in]."""

    W: Tensor
    b: Tensor

    @classmethod
    def create(cls, rng: np.random.Generator, n_in: int, n_out: int) -> "AffineParams":
        return cls(W=param(rng, (n_out, n_in), n_in), b=param(rng, (n_out,), n_in))

    @property
    def n_in(self) -> int:
        return self.W.shape[1]

    @property
    def n_out(self) -> int:
        return self.W.shape[0]


def affine(p: AffineParams, x: Tensor) -> Tensor:
    """y = W x + b; accepts a vector [in] or batch [..., in]."""
    if x.shape[-1] != p.n_in:
        raise ShapeError(f"affine input has size {x.shape[-1]}, weights expect {p.n_in}")
    if x.ndim == 1:
        return p.W @ x + p.b
    return x @ _transpose(p.W) + p.b


def _transpose(t: Tensor) -> Tensor:
    out = Tensor(t.data.T, requires_grad=t.requires_grad, _parents=(t,))
    if out.requires_grad:
        def _backward():
            t._accumulate(out.grad.T)
        out._backward = _backward
    return out


@dataclass
class GruParams:
    """Update gate z, reset gate r, candidate h̃ weights over input and hidden."""

    w_z: Tensor
    u_z: Tensor
    b_z: Tensor
    w_r: Tensor
    u_r: Tensor
    b_r: Tensor
    w_h: Tensor
    u_h: Tensor
    b_h: Tensor

    @classmethod
    def create(cls, rng: np.random.Generator, n_in: int, n_hid: int) -> "GruParams":
        def w():
            return param(rng, (n_hid, n_in), n_in)

        def u():
            return param(rng, (n_hid, n_hid), n_hid)

        def b():
            return param(rng, (n_hid,), n_hid)

        return cls(w_z=w(), u_z=u(), b_z=b(), w_r=w(), u_r=u(), b_r=b(),
                   w_h=w(), u_h=u(), b_h=b())

    @property
    def n_in(self) -> int:
        return self.w_z.shape[1]

    @property
    def n_hid(self) -> int:
        return self.w_z.shape[0]


def gru_step(p: GruParams, h: Tensor, x: Tensor) -> Tensor:
    """One GRU recurrence: h' = (1 - z) * h + z * h̃.

    z = sigma(Wz x + Uz h + bz), r = sigma(Wr x + Ur h + br),
    h̃ = tanh(Wh x + Uh (r * h) + bh).  Supports [..., dim] batches.
    """
    if x.shape[-1] != p.n_in or h.shape[-1] != p.n_hid:
        raise ShapeError(
            f"gru_step got x {x.shape}, h {h.shape}; params expect in={p.n_in} hid={p.n_hid}")
    if x.ndim == 1:
        xz, xr, xh = p.w_z @ x, p.w_r @ x, p.w_h @ x
        hz, hr = p.u_z @ h, p.u_r @ h
        z = (xz + hz + p.b_z).sigmoid()
        r = (xr + hr + p.b_r).sigmoid()
        cand = (xh + p.u_h @ (r * h) + p.b_h).tanh()
    else:
        xz, xr, xh = x @ _transpose(p.w_z), x @ _transpose(p.w_r), x @ _transpose(p.w_h)
        hz, hr = h @ _transpose(p.u_z), h @ _transpose(p.u_r)
        z = (xz + hz + p.b_z).sigmoid()
        r = (xr + hr + p.b_r).sigmoid()
        cand = (xh + (r * h) @ _transpose(p.u_h) + p.b_h).tanh()
    return (1.0 - z) * h + z * cand


@dataclass
class AttentionParams:
    """Projections for scaled dot-product attention; all [d_k, d_in]."""

    w_q: Tensor
    w_k: Tensor
    w_v: Tensor

    @classmethod
    def create(cls, rng: np.random.Generator, d_in: int, d_k: int) -> "AttentionParams":
        return cls(w_q=param(rng, (d_k, d_in), d_in),
                   w_k=param(rng, (d_k, d_in), d_in),
                   w_v=param(rng, (d_k, d_in), d_in))

    @property
    def d_in(self) -> int:
        return self.w_q.shape[1]

    @property
    def d_k(self) -> int:
        return self.w_q.shape[0]


def attention_batch(p: AttentionParams, query: Tensor, keys: Tensor,
                    mask: np.ndarray) -> Tensor:
    """Attention with query [B, d_in], keys [B, K, d_in], mask [B, K].

    Rows with an all-zero mask yield the zero vector.
    """
    q = query @ _transpose(p.w_q)                      # [B, d_k]
    k = keys @ _transpose(p.w_k)                       # [B, K, d_k]
    v = keys @ _transpose(p.w_v)                       # [B, K, d_k]
    scale = 1.0 / np.sqrt(p.d_k)
    logits = (k @ q.reshape(q.shape[0], q.shape[1], 1)).reshape(k.shape[0], k.shape[1]) * scale
    weights = masked_softmax(logits, mask)             # [B, K]
    return (weights.reshape(weights.shape[0], 1, weights.shape[1]) @ v).reshape(
        v.shape[0], v.shape[2])


def self_attention(p: AttentionParams, query: Tensor,
                   keys_values: list[Tensor]) -> Tensor:
    """Aggregate a variable-size set of vectors; the empty set maps to zero.

    output = sum_j softmax_j((Wq q) . (Wk m_j) / sqrt(d_k)) * (Wv m_j)
    """
    if query.shape[-1] != p.d_in:
        raise ShapeError(f"query size {query.shape[-1]} != d_in {p.d_in}")
    if not keys_values:
        return Tensor(np.zeros(p.d_k), requires_grad=query.requires_grad
                      or any(t.requires_grad for t in (p.w_q, p.w_k, p.w_v)),
                      _parents=())
    keys = stack(keys_values, axis=0).reshape(1, len(keys_values), p.d_in)
    out = attention_batch(p, query.reshape(1, p.d_in), keys,
                          np.ones((1, len(keys_values))))
    return out.reshape(p.d_k)


def attention_weights(p: AttentionParams, query: np.ndarray,
                      keys_values: list[np.ndarray]) -> np.ndarray:
    """Forward-only softmax weights for inspection and tests."""
    if not keys_values:
        return np.zeros(0)
    q = p.w_q.data @ np.asarray(query)
    logits = np.array([q @ (p.w_k.data @ np.asarray(m)) for m in keys_values])
    logits /= np.sqrt(p.d_k)
    e = np.exp(logits - logits.max())
    return e / e.sum()


def mse(a: Tensor, b: Tensor) -> Tensor:
    """Mean of squared elementwise differences."""
    if a.shape != b.shape:
        raise ShapeError(f"mse shapes differ: {a.shape} vs {b.shape}")
    d = a - b
    return (d * d).mean() if a.ndim <= 1 else (d * d).reshape(a.size).mean()


# ---------------------------------------------------------------------------
# optimizer
# ---------------------------------------------------------------------------


class Adam:
    """Adaptive-moment optimizer over a list of parameter tensors.

    ``step`` requires every parameter to carry a gradient, applies the
    bias-corrected update, bumps the step counter and zeroes grads.
    """

    def __init__(self, params: list[Tensor], lr: float = 1e-3,
                 beta1: float = 0.9, beta2: float = 0.999, eps: float = 1e-8):
        self.params = list(params)
        self.lr = lr
        self.beta1 = beta1
        self.beta2 = beta2
        self.eps = eps
        self.t = 0
        self.m = [np.zeros_like(p.data) for p in self.params]
        self.v = [np.zeros_like(p.data) for p in self.params]

    def zero_grad(self) -> None:
        for p in self.params:
            p.grad = None

    def step(self) -> None:
        missing = [p.name or f"param{i}" for i, p in enumerate(self.params) if p.grad is None]
        if missing:
            raise ValueError(f"opt step with missing grads: {missing[:3]}"
                             + ("..." if len(missing) > 3 else ""))
        self.t += 1
        b1t = 1.0 - self.beta1 ** self.t
        b2t = 1.0 - self.beta2 ** self.t
        for p, m, v in zip(self.params, self.m, self.v):
            g = p.grad
            m *= self.beta1
            m += (1.0 - self.beta1) * g
            v *= self.beta2
            v += (1.0 - self.beta2) * g * g
            p.data -= self.lr * (m / b1t) / (np.sqrt(v / b2t) + self.eps)
        self.zero_grad()


# ---------------------------------------------------------------------------
# checkpoint manifest
# ---------------------------------------------------------------------------


def collect_params(tree, prefix: str = "") -> list[tuple[str, Tensor]]:
    """Walk dataclasses / dicts / lists and return (dotted name, tensor) leaves."""
    out: list[tuple[str, Tensor]] = []
    if isinstance(tree, Tensor):
        out.append((prefix or tree.name or "param", tree))
    elif isinstance(tree, dict):
        for k, v in tree.items():
            out.extend(collect_params(v, f"{prefix}.{k}" if prefix else str(k)))
    elif isinstance(tree, (list, tuple)):
        for i, v in enumerate(tree):
            out.extend(collect_params(v, f"{prefix}.{i}" if prefix else str(i)))
    elif hasattr(tree, "__dataclass_fields__"):
        for k in tree.__dataclass_fields__:
            out.extend(collect_params(getattr(tree, k), f"{prefix}.{k}" if prefix else k))
    return out


def save_manifest(path, tree, meta: dict | None = None) -> None:
    """Write parameters as a JSON manifest of {name, shape, data}.

    Python's float repr round-trips IEEE doubles exactly, so a reload is
    bit-identical to the saved arrays.
    """
    entries = []
    for name, t in collect_params(tree):
        entries.append({"name": name,
                        "shape": list(t.shape),
                        "data": t.data.reshape(-1).tolist()})
    doc = {"format": "copmarl-params-v1", "meta": meta or {}, "params": entries}
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(doc, fh)


def load_manifest(path) -> tuple[dict[str, np.ndarray], dict]:
    """Read a manifest back into {name: array} plus its metadata."""
    with open(path, "r", encoding="utf-8") as fh:
        doc = json.load(fh)
    if doc.get("format") != "copmarl-params-v1":
        raise ValueError(f"unrecognized checkpoint format in {path}")
    arrays = {}
    for entry in doc["params"]:
        arr = np.asarray(entry["data"], dtype=np.float64).reshape(entry["shape"])
        arrays[entry["name"]] = arr
    return arrays, doc.get("meta", {})


def assign_params(tree, arrays: dict[str, np.ndarray]) -> None:
    """Load arrays into an existing parameter tree by dotted name."""
    for name, t in collect_params(tree):
        if name not in arrays:
            raise KeyError(f"checkpoint is missing parameter {name!r}")
        arr = arrays[name]
        if tuple(arr.shape) != t.shape:
            raise ShapeError(f"checkpoint param {name!r} has shape {arr.shape}, "
                             f"model expects {t.shape}")
        t.data[...] = arr
