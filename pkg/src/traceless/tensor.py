"""Exact dense tensors with an orthogonal or symplectic metric and the diagram
action on them: permute along through lines, contract top arcs, insert the
dual metric at bottom arcs, with the crossing-parity sign."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction

from .brauer import AlgebraElement, BrauerDiagram, min_crossings
from .exactnum import PoleError, as_rational, rational_to_str


@dataclass(frozen=True)
class Metric:
    N: int
    eps: int
    g: tuple
    g_inv: tuple

    def pairing(self, a: int, b: int) -> Fraction:
        return self.g[a][b]

    def nonzero_pairs(self):
        """Index pairs (a, b) with g[a][b] != 0, with the matching inverse value."""
        return [
            (a, b, self.g[a][b], self.g_inv[a][b])
            for a in range(self.N)
            for b in range(self.N)
            if self.g[a][b] != 0
        ]

    def to_json(self) -> dict:
        return {
            "N": self.N,
            "eps": self.eps,
            "form": "identity" if self.eps == 1 else "symplectic_adjacent_blocks",
        }


def make_metric(N: int, eps: int) -> Metric:
    """Identity form for eps=+1; adjacent antisymmetric 2x2 blocks for eps=-1."""
    if N < 1:
        raise ValueError("N must be positive")
    if eps == 1:
        g = tuple(tuple(Fraction(1 if a == b else 0) for b in range(N)) for a in range(N))
        return Metric(N, 1, g, g)
    if eps == -1:
        if N % 2 != 0:
            raise ValueError("eps=-1 requires even N")
        g = [[Fraction(0)] * N for _ in range(N)]
        ginv = [[Fraction(0)] * N for _ in range(N)]
        for k in range(0, N, 2):
            g[k][k + 1] = Fraction(1)
            g[k + 1][k] = Fraction(-1)
            ginv[k][k + 1] = Fraction(-1)
            ginv[k + 1][k] = Fraction(1)
        return Metric(N, -1, tuple(map(tuple, g)), tuple(map(tuple, ginv)))
    raise ValueError("eps must be +1 or -1")


@dataclass(frozen=True)
class DenseTensor:
    """Rank-n tensor over an N dimensional space, row-major exact entries."""

    n: int
    N: int
    entries: tuple

    def __post_init__(self):
        if len(self.entries) != self.N**self.n:
            raise ValueError("entry count does not match the shape")

    @classmethod
    def zero(cls, n: int, N: int) -> "DenseTensor":
        return cls(n, N, (Fraction(0),) * (N**n))

    @classmethod
    def from_entries(cls, n: int, N: int, entries) -> "DenseTensor":
        return cls(n, N, tuple(as_rational(e) for e in entries))

    def flat_index(self, idx) -> int:
        out = 0
        for a in idx:
            out = out * self.N + a
        return out

    def __getitem__(self, idx) -> Fraction:
        return self.entries[self.flat_index(idx)]

    def is_zero(self) -> bool:
        return all(e == 0 for e in self.entries)

    def scale(self, c) -> "DenseTensor":
        c = as_rational(c)
        return DenseTensor(self.n, self.N, tuple(e * c for e in self.entries))

    def __add__(self, other):
        if (self.n, self.N) != (other.n, other.N):
            raise ValueError("shape mismatch")
        return DenseTensor(self.n, self.N, tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other):
        return self + other.scale(-1)

    def to_json(self, metric: Metric | None = None) -> dict:
        out = {"n": self.n, "N": self.N, "entries": [rational_to_str(e) for e in self.entries]}
        if metric is not None:
            out["metric"] = metric.to_json()
        return out

    @classmethod
    def from_json(cls, obj: dict) -> "DenseTensor":
        return cls.from_entries(obj["n"], obj["N"], [Fraction(e) for e in obj["entries"]])


def tensor_product(vectors) -> DenseTensor:
    """Decomposable tensor from a list of coordinate vectors."""
    vecs = [[as_rational(c) for c in v] for v in vectors]
    N = len(vecs[0])
    entries = []
    for idx in itertools.product(range(N), repeat=len(vecs)):
        prod = Fraction(1)
        for v, a in zip(vecs, idx):
            prod *= v[a]
        entries.append(prod)
    return DenseTensor(len(vecs), N, tuple(entries))


def pure_trace_tensor(m: Metric) -> DenseTensor:
    """Rank-2 tensor with components given by the inverse metric."""
    return DenseTensor(2, m.N, tuple(m.g_inv[a][b] for a in range(m.N) for b in range(m.N)))


def random_tensor(n: int, N: int, seed: int, bound: int = 9) -> DenseTensor:
    """Deterministic small-integer tensor for reproducible checks."""
    rng = random.Random(f"tensor:{seed}:{n}:{N}")
    return DenseTensor(n, N, tuple(Fraction(rng.randint(-bound, bound)) for _ in range(N**n)))


def trace_ij(t: DenseTensor, i: int, j: int, m: Metric) -> DenseTensor:
    """Metric contraction of slots i < j (1-indexed), dropping both slots."""
    if not (1 <= i < j <= t.n):
        raise ValueError(f"need 1 <= i < j <= {t.n}")
    if t.N != m.N:
        raise ValueError("dimension mismatch")
    N, n = t.N, t.n
    out = []
    for rest in itertools.product(range(N), repeat=n - 2):
        acc = Fraction(0)
        for a, b, gval, _ in m.nonzero_pairs():
            idx = list(rest)
            idx.insert(i - 1, a)
            idx.insert(j - 1, b)
            acc += gval * t[idx]
        out.append(acc)
    return DenseTensor(n - 2, N, tuple(out))


def is_traceless(t: DenseTensor, m: Metric) -> bool:
    return all(
        trace_ij(t, i, j, m).is_zero()
        for i in range(1, t.n)
        for j in range(i + 1, t.n + 1)
    )


def apply_diagram(b: BrauerDiagram, t: DenseTensor, m: Metric) -> DenseTensor:
    """Act with one diagram: contract top arcs with the metric, carry through
    lines downward, insert the dual metric at bottom arcs, and multiply by the
    crossing-parity sign."""
    if b.n != t.n or t.N != m.N:
        raise ValueError("shape mismatch")
    n, N = t.n, t.N
    sign = 1 if m.eps == 1 else (-1) ** (min_crossings(b) % 2)
    verticals = b.verticals()  # (top, bottom+n)
    top_arcs = b.top_arcs()
    bottom_arcs = [(a - n, c - n) for a, c in b.bottom_arcs()]
    vert_tops = [p[0] for p in verticals]
    vert_bots = [p[1] - n for p in verticals]
    pairs = m.nonzero_pairs()

    # carried[assignment of vertical tops] = metric-weighted sum over arcs
    carried: dict = {}
    for vert_vals in itertools.product(range(N), repeat=len(vert_tops)):
        acc = Fraction(0)
        for arc_choice in itertools.product(pairs, repeat=len(top_arcs)):
            idx = [0] * n
            for pos, val in zip(vert_tops, vert_vals):
                idx[pos] = val
            gprod = Fraction(1)
            for (i, j), (a, bb, gval, _) in zip(top_arcs, arc_choice):
                idx[i] = a
                idx[j] = bb
                gprod *= gval
            acc += gprod * t.entries[t.flat_index(idx)]
        if acc:
            carried[vert_vals] = acc

    out = [Fraction(0)] * (N**n)
    for arc_choice in itertools.product(pairs, repeat=len(bottom_arcs)):
        gprod = Fraction(1)
        base = [0] * n
        for (k, l), (a, bb, _, ginv) in zip(bottom_arcs, arc_choice):
            base[k] = a
            base[l] = bb
            gprod *= ginv
        if gprod == 0:
            continue
        for vert_vals, acc in carried.items():
            idx = list(base)
            for pos, val in zip(vert_bots, vert_vals):
                idx[pos] = val
            flat = 0
            for a in idx:
                flat = flat * N + a
            out[flat] += sign * gprod * acc
    return DenseTensor(n, N, tuple(out))


def apply_element(x: AlgebraElement, t: DenseTensor, m: Metric) -> DenseTensor:
    """Linear extension of the diagram action with coefficients specialized at
    the parameter value eps*N."""
    value = m.eps * m.N
    acc = DenseTensor.zero(t.n, t.N)
    for d, coeff in x.terms.items():
        try:
            c = coeff.evaluate(value)
        except PoleError as exc:
            raise PoleError(
                f"coefficient has a pole at the metric parameter {value}; "
                f"omit the corresponding spectrum factor instead ({exc})"
            ) from None
        if c == 0:
            continue
        acc = acc + apply_diagram(d, t, m).scale(c)
    return acc
