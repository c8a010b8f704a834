"""Diagram algebra on two rows of n nodes: perfect matchings, the loop-counted
product, conjugacy classes, the flip anti-involution, crossing counts, named
elements and symmetric group idempotents.

Nodes are coded 0..2n-1: top row 0..n-1, bottom row n..2n-1.  The text form
uses the 1-indexed labels t1..tn and b1..bn.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .exactnum import Polynomial, RationalFunction, RF_ONE, as_rational
from . import young


class BrauerDiagram:
    """Perfect matching on two rows of n nodes, stored canonically sorted."""

    __slots__ = ("n", "pairs", "_hash")

    def __init__(self, n: int, pairs):
        norm = tuple(sorted(tuple(sorted(p)) for p in pairs))
        seen = [v for p in norm for v in p]
        if sorted(seen) != list(range(2 * n)):
            raise ValueError(f"pairs {pairs!r} are not a perfect matching on {2 * n} nodes")
        self.n = n
        self.pairs = norm
        self._hash = hash((n, norm))

    @classmethod
    def identity(cls, n: int) -> "BrauerDiagram":
        return cls(n, [(i, n + i) for i in range(n)])

    @classmethod
    def from_permutation(cls, perm) -> "BrauerDiagram":
        """perm[i] is the 0-indexed image of top node i."""
        n = len(perm)
        return cls(n, [(i, n + perm[i]) for i in range(n)])

    def partner(self, v: int) -> int:
        for a, b in self.pairs:
            if a == v:
                return b
            if b == v:
                return a
        raise KeyError(v)

    def partner_map(self) -> dict:
        out = {}
        for a, b in self.pairs:
            out[a] = b
            out[b] = a
        return out

    def top_arcs(self):
        return [p for p in self.pairs if p[1] < self.n]

    def bottom_arcs(self):
        return [p for p in self.pairs if p[0] >= self.n]

    def verticals(self):
        return [p for p in self.pairs if p[0] < self.n <= p[1]]

    def arc_count(self) -> int:
        return len(self.top_arcs())

    def is_permutation(self) -> bool:
        return self.arc_count() == 0

    def permutation(self):
        if not self.is_permutation():
            raise ValueError("diagram has arcs")
        return tuple(self.partner(i) - self.n for i in range(self.n))

    def flip(self) -> "BrauerDiagram":
        n = self.n
        return BrauerDiagram(n, [tuple(v + n if v < n else v - n for v in p) for p in self.pairs])

    def relabel(self, node_map) -> "BrauerDiagram":
        return BrauerDiagram(self.n, [(node_map[a], node_map[b]) for a, b in self.pairs])

    def conjugate_by_swap(self, i: int) -> "BrauerDiagram":
        """Simultaneous swap of columns i and i+1 (0-indexed) in both rows."""
        n = self.n
        m = list(range(2 * n))
        m[i], m[i + 1] = m[i + 1], m[i]
        m[n + i], m[n + i + 1] = m[n + i + 1], m[n + i]
        return self.relabel(m)

    def node_name(self, v: int) -> str:
        return f"t{v + 1}" if v < self.n else f"b{v - self.n + 1}"

    def to_text(self) -> str:
        return ", ".join(f"{self.node_name(a)}-{self.node_name(b)}" for a, b in self.pairs)

    @classmethod
    def from_text(cls, n: int, text: str) -> "BrauerDiagram":
        def parse(tok):
            tok = tok.strip()
            row, idx = tok[0], int(tok[1:])
            if row == "t":
                return idx - 1
            if row == "b":
                return n + idx - 1
            raise ValueError(f"bad node {tok!r}")

        pairs = []
        for chunk in text.split(","):
            a, b = chunk.split("-")
            pairs.append((parse(a), parse(b)))
        return cls(n, pairs)

    def to_json(self) -> dict:
        return {"n": self.n, "pairs": [[self.node_name(a), self.node_name(b)] for a, b in self.pairs]}

    @classmethod
    def from_json(cls, obj: dict) -> "BrauerDiagram":
        n = obj["n"]
        return cls.from_text(n, ", ".join(f"{a}-{b}" for a, b in obj["pairs"]))

    def __eq__(self, other):
        return isinstance(other, BrauerDiagram) and self.n == other.n and self.pairs == other.pairs

    def __lt__(self, other):
        return (self.n, self.pairs) < (other.n, other.pairs)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"<{self.to_text()}>"


def enumerate_diagrams(n: int):
    """All (2n-1)!! matchings, smallest-free-node pairing order."""

    def rec(free, acc):
        if not free:
            yield tuple(acc)
            return
        a = free[0]
        for k in range(1, len(free)):
            b = free[k]
            acc.append((a, b))
            yield from rec(free[1:k] + free[k + 1 :], acc)
            acc.pop()

    for pairs in rec(list(range(2 * n)), []):
        yield BrauerDiagram(n, pairs)


def multiply_diagrams(b1: BrauerDiagram, b2: BrauerDiagram):
    """Concatenate b1 below b2; returns (loops, straightened diagram).

    The algebra product b1*b2 equals delta**loops times the diagram, matching
    composition of the tensor actions (b2 applied first).
    """
    if b1.n != b2.n:
        raise ValueError("diagrams act on different numbers of strands")
    n = b1.n
    # slots: 0..n-1 new top (top of b2), n..2n-1 glued middle, 2n..3n-1 new bottom
    parent = list(range(3 * n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[rx] = ry

    for a, b in b2.pairs:
        union(a, b)
    for a, b in b1.pairs:
        union(a + n, b + n)
    groups: dict = {}
    for v in itertools.chain(range(n), range(2 * n, 3 * n)):
        groups.setdefault(find(v), []).append(v)
    pairs = []
    for members in groups.values():
        if len(members) != 2:
            raise AssertionError("matching invariant broken")
        a, b = members
        pairs.append((a if a < n else a - n, b if b < n else b - n))
    middle_roots = {find(v) for v in range(n, 2 * n)}
    loops = sum(1 for r in middle_roots if r not in groups)
    return loops, BrauerDiagram(n, pairs)


def min_crossings(b: BrauerDiagram) -> int:
    """Number of interleaving line pairs when nodes are read around the
    rectangle boundary (top left to right, then bottom right to left)."""
    n = b.n

    def pos(v):
        return v if v < n else 3 * n - 1 - v

    chords = [tuple(sorted((pos(a), pos(b_)))) for a, b_ in b.pairs]
    count = 0
    for (a1, a2), (c1, c2) in itertools.combinations(chords, 2):
        if a1 < c1 < a2 < c2 or c1 < a1 < c2 < a2:
            count += 1
    return count


def arc_count(b: BrauerDiagram) -> int:
    return b.arc_count()


class AlgebraElement:
    """Sparse linear combination of diagrams with rational function coefficients."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms=None):
        self.n = n
        tidy: dict = {}
        for d, c in (terms or {}).items():
            if d.n != n:
                raise ValueError("mixed strand counts in one element")
            if not isinstance(c, RationalFunction):
                c = RationalFunction(Polynomial.const(as_rational(c)))
            if not c.is_zero():
                tidy[d] = c
        self.terms = tidy

    @classmethod
    def zero(cls, n: int) -> "AlgebraElement":
        return cls(n, {})

    @classmethod
    def one(cls, n: int) -> "AlgebraElement":
        return cls(n, {BrauerDiagram.identity(n): RF_ONE})

    @classmethod
    def from_diagram(cls, d: BrauerDiagram, coeff=1) -> "AlgebraElement":
        return cls(d.n, {d: RationalFunction.const(coeff) if not isinstance(coeff, RationalFunction) else coeff})

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, d: BrauerDiagram) -> RationalFunction:
        return self.terms.get(d, RationalFunction.const(0))

    def __eq__(self, other):
        return isinstance(other, AlgebraElement) and self.n == other.n and self.terms == other.terms

    def __add__(self, other):
        if self.n != other.n:
            raise ValueError("mixed strand counts")
        out = dict(self.terms)
        for d, c in other.terms.items():
            s = out.get(d)
            out[d] = c if s is None else s + c
        return AlgebraElement(self.n, out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, c) -> "AlgebraElement":
        if not isinstance(c, RationalFunction):
            c = RationalFunction(Polynomial.const(as_rational(c)))
        if c.is_zero():
            return AlgebraElement.zero(self.n)
        return AlgebraElement(self.n, {d: v * c for d, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return multiply_elements(self, other)
        return self.scale(other)

    __rmul__ = scale

    def evaluate_at(self, value) -> dict:
        """Coefficients specialized at a numeric parameter value."""
        return {d: c.evaluate(value) for d, c in self.terms.items()}

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = [f"({c})*[{d.to_text()}]" for d, c in sorted(self.terms.items(), key=lambda t: t[0].pairs)]
        return " + ".join(bits)

    def to_json(self) -> list:
        from .exactnum import rf_to_json

        items = sorted(self.terms.items(), key=lambda t: t[0].pairs)
        return [{"diagram": d.to_json(), "coefficient": rf_to_json(c)} for d, c in items]


@lru_cache(maxsize=None)
def _delta_power(ell: int) -> RationalFunction:
    return RationalFunction(Polynomial.const(1).shift(ell))


def multiply_elements(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    if a.n != b.n:
        raise ValueError("mixed strand counts")
    acc: dict = {}
    for d1, c1 in a.terms.items():
        for d2, c2 in b.terms.items():
            loops, d = multiply_diagrams(d1, d2)
            c = c1 * c2
            if loops:
                c = c * _delta_power(loops)
            s = acc.get(d)
            acc[d] = c if s is None else s + c
    return AlgebraElement(a.n, acc)


def flip_star(x: AlgebraElement) -> AlgebraElement:
    """Anti-involution flipping every diagram across the horizontal axis."""
    return AlgebraElement(x.n, {d.flip(): c for d, c in x.terms.items()})


def conjugacy_class(b: BrauerDiagram) -> set:
    """Orbit of a diagram under simultaneous row relabelling, grown by
    adjacent column swaps."""
    seen = {b}
    frontier = [b]
    while frontier:
        nxt = []
        for d in frontier:
            for i in range(d.n - 1):
                e = d.conjugate_by_swap(i)
                if e not in seen:
                    seen.add(e)
                    nxt.append(e)
        frontier = nxt
    return seen


def class_sum(b: BrauerDiagram, normalized: bool = False) -> AlgebraElement:
    """Sum over the conjugacy class; the unnormalized version carries the
    centralizer order so that it equals the full relabelling average."""
    orbit = conjugacy_class(b)
    if normalized:
        coeff = RF_ONE
    else:
        coeff = RationalFunction.const(Fraction(factorial(b.n), len(orbit)))
    return AlgebraElement(b.n, {d: coeff for d in orbit})


# named elements


def s_elem(n: int, i: int) -> AlgebraElement:
    return s_pair(n, i, i + 1)


def d_elem(n: int, i: int) -> AlgebraElement:
    return d_pair(n, i, i + 1)


def _check_pair(n, i, j):
    if not (1 <= i < j <= n):
        raise ValueError(f"need 1 <= i < j <= n, got i={i}, j={j}, n={n}")


def s_pair(n: int, i: int, j: int) -> AlgebraElement:
    """Transposition diagram swapping strands i and j (1-indexed)."""
    _check_pair(n, i, j)
    perm = list(range(n))
    perm[i - 1], perm[j - 1] = perm[j - 1], perm[i - 1]
    return AlgebraElement.from_diagram(BrauerDiagram.from_permutation(perm))


def d_pair(n: int, i: int, j: int) -> AlgebraElement:
    """Single contraction diagram with arcs joining strands i and j in both rows."""
    _check_pair(n, i, j)
    pairs = [(i - 1, j - 1), (n + i - 1, n + j - 1)]
    for k in range(n):
        if k not in (i - 1, j - 1):
            pairs.append((k, n + k))
    return AlgebraElement.from_diagram(BrauerDiagram(n, pairs))


def contraction_sum(n: int) -> AlgebraElement:
    """Sum of all single contractions; its kernel on tensors is the traceless subspace."""
    acc = AlgebraElement.zero(n)
    for i in range(1, n):
        for j in range(i + 1, n + 1):
            acc = acc + d_pair(n, i, j)
    return acc


def transposition_sum(n: int) -> AlgebraElement:
    acc = AlgebraElement.zero(n)
    for i in range(1, n):
        for j in range(i + 1, n + 1):
            acc = acc + s_pair(n, i, j)
    return acc


def multi_contraction_rep(n: int, f: int) -> BrauerDiagram:
    """Diagram with f disjoint contractions on strands (1,2), (3,4), ..."""
    if not (1 <= f <= n // 2):
        raise ValueError(f"need 1 <= f <= n//2, got f={f}")
    pairs = []
    for k in range(f):
        pairs.append((2 * k, 2 * k + 1))
        pairs.append((n + 2 * k, n + 2 * k + 1))
    for k in range(2 * f, n):
        pairs.append((k, n + k))
    return BrauerDiagram(n, pairs)


def contraction_sum_f(n: int, f: int) -> AlgebraElement:
    """Normalized class sum of f disjoint contractions, reducing to
    contraction_sum at f=1."""
    return class_sum(multi_contraction_rep(n, f), normalized=True)


def jucys_murphy(n: int, k: int) -> AlgebraElement:
    """k-th commuting element (k = 1..n)."""
    if not (1 <= k <= n):
        raise ValueError(f"need 1 <= k <= n, got k={k}")
    half = RationalFunction(Polynomial((Fraction(-1, 2), Fraction(1, 2))))
    acc = AlgebraElement.one(n).scale(half)
    for j in range(1, k):
        acc = acc + s_pair(n, j, k) - d_pair(n, j, k)
    return acc


def jm_sum(n: int) -> AlgebraElement:
    acc = AlgebraElement.zero(n)
    for k in range(1, n + 1):
        acc = acc + jucys_murphy(n, k)
    return acc


def build_named_element(name: str, n: int, i: int | None = None, j: int | None = None,
                        k: int | None = None, f: int | None = None) -> AlgebraElement:
    """Dispatch on the conventional generator and class element names."""
    if name == "identity":
        return AlgebraElement.one(n)
    if name == "s_i":
        return s_elem(n, i)
    if name == "d_i":
        return d_elem(n, i)
    if name == "s_ij":
        return s_pair(n, i, j)
    if name == "d_ij":
        return d_pair(n, i, j)
    if name == "A_n":
        return contraction_sum(n)
    if name == "A_f":
        return contraction_sum_f(n, f)
    if name == "x_k":
        return jucys_murphy(n, k)
    if name == "X_S":
        return transposition_sum(n)
    if name == "X_B":
        return jm_sum(n)
    raise ValueError(f"unknown element name {name!r}")


def permutation_parity(perm) -> int:
    """+1 or -1 for a 0-indexed permutation tuple."""
    seen = [False] * len(perm)
    sign = 1
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        v = start
        while not seen[v]:
            seen[v] = True
            v = perm[v]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def permutation_class_rep(n: int, cycle_type) -> BrauerDiagram:
    """Permutation diagram whose cycles occupy consecutive strands."""
    perm = list(range(n))
    start = 0
    for part in cycle_type:
        for t in range(part):
            perm[start + t] = start + (t + 1) % part
        start += part
    return BrauerDiagram.from_permutation(perm)


def central_young_symmetriser(mu) -> AlgebraElement:
    """Central idempotent of the permutation subalgebra built from characters
    and normalized class sums."""
    mu = tuple(mu)
    n = sum(mu)
    dim = young.hook_dim(mu)
    acc: dict = {}
    for rho in sorted(young.partitions_of(n), reverse=True):
        chi = young.mn_character(mu, rho)
        if chi == 0:
            continue
        coeff = RationalFunction.const(Fraction(dim * chi, factorial(n)))
        for d in conjugacy_class(permutation_class_rep(n, rho)):
            s = acc.get(d)
            acc[d] = coeff if s is None else s + coeff
    return AlgebraElement(n, acc)


def _subgroup_permutations(groups, n):
    """All permutations of 1..n that stabilize each listed group of entries,
    yielded as 0-indexed tuples."""
    for images in itertools.product(*(itertools.permutations(g) for g in groups)):
        perm = list(range(n))
        for group, image in zip(groups, images):
            for src, dst in zip(group, image):
                perm[src - 1] = dst - 1
        yield tuple(perm)


def young_symmetriser(tableau) -> AlgebraElement:
    """Row symmetrizer times signed column antisymmetrizer of a standard
    tableau, scaled to an idempotent.

    Accepts a young.Tableau with straight shape or a sequence of row tuples.
    """
    if isinstance(tableau, young.Tableau):
        vals = tableau.as_dict()
        nrows = max(i for (i, _) in vals)
        rows = [tuple(vals[(i, j)] for j in sorted(jj for (ii, jj) in vals if ii == i))
                for i in range(1, nrows + 1)]
    else:
        rows = [tuple(r) for r in tableau]
    entries = sorted(v for row in rows for v in row)
    n = len(entries)
    if entries != list(range(1, n + 1)):
        raise ValueError("tableau entries must be 1..n exactly once")
    shape = tuple(len(r) for r in rows)
    if not young.is_partition(shape):
        raise ValueError("rows must have weakly decreasing lengths")
    for j in range(len(rows[0])):
        col = [row[j] for row in rows if len(row) > j]
        if any(col[i] >= col[i + 1] for i in range(len(col) - 1)):
            raise ValueError("tableau is not standard")
    for row in rows:
        if any(row[i] >= row[i + 1] for i in range(len(row) - 1)):
            raise ValueError("tableau is not standard")

    cols = [tuple(row[j] for row in rows if len(row) > j) for j in range(len(rows[0]))]
    row_sym: dict = {}
    for perm in _subgroup_permutations(rows, n):
        row_sym[BrauerDiagram.from_permutation(perm)] = RF_ONE
    col_sym: dict = {}
    for perm in _subgroup_permutations(cols, n):
        col_sym[BrauerDiagram.from_permutation(perm)] = RationalFunction.const(permutation_parity(perm))
    product = multiply_elements(AlgebraElement(n, row_sym), AlgebraElement(n, col_sym))
    return product.scale(Fraction(young.hook_dim(shape), factorial(n)))
