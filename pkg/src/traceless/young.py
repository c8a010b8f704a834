"""Young diagram combinatorics: partitions, skew shapes, semistandard tableaux,
Littlewood-Richardson coefficients, sliding games, admissible label sets,
dimensions and symmetric group characters.

Partitions are plain tuples of weakly decreasing positive integers; cells are
(row, col) pairs indexed from 1, and the content of a cell is col - row.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import factorial

Partition = tuple

EMPTY: Partition = ()


def is_partition(parts) -> bool:
    parts = tuple(parts)
    return all(isinstance(p, int) and p >= 1 for p in parts) and all(
        parts[i] >= parts[i + 1] for i in range(len(parts) - 1)
    )


def check_partition(parts) -> Partition:
    parts = tuple(parts)
    if not is_partition(parts):
        raise ValueError(f"{parts!r} is not a partition")
    return parts


def partitions_of(n: int, max_rows: int | None = None, max_part: int | None = None) -> set:
    """All partitions of n, optionally bounded in row count or largest part."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    out = set()

    def rec(remaining, bound, prefix):
        if remaining == 0:
            out.add(tuple(prefix))
            return
        if max_rows is not None and len(prefix) >= max_rows:
            return
        for part in range(min(remaining, bound), 0, -1):
            prefix.append(part)
            rec(remaining - part, part, prefix)
            prefix.pop()

    top = n if max_part is None else min(n, max_part)
    rec(n, top, [])
    return out


def conjugate(lam) -> Partition:
    lam = tuple(lam)
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p >= j) for j in range(1, lam[0] + 1))


def transpose(lam, eps: int) -> Partition:
    """Identity for eps=+1, diagram conjugation for eps=-1."""
    if eps == 1:
        return tuple(lam)
    if eps == -1:
        return conjugate(lam)
    raise ValueError("eps must be +1 or -1")


def contains(inner, outer) -> bool:
    inner, outer = tuple(inner), tuple(outer)
    if len(inner) > len(outer):
        return False
    return all(inner[i] <= outer[i] for i in range(len(inner)))


def cells(lam):
    return [(i, j) for i, row in enumerate(lam, start=1) for j in range(1, row + 1)]


def content_sum(lam) -> int:
    return sum(j - i for (i, j) in cells(lam))


def is_even_partition(lam) -> bool:
    return all(p % 2 == 0 for p in lam)


@dataclass(frozen=True)
class SkewShape:
    outer: Partition
    inner: Partition

    def __post_init__(self):
        object.__setattr__(self, "outer", check_partition(self.outer) if self.outer else ())
        object.__setattr__(self, "inner", check_partition(self.inner) if self.inner else ())
        if not contains(self.inner, self.outer):
            raise ValueError(f"{self.inner} is not contained in {self.outer}")

    def cells(self):
        inner = set(cells(self.inner))
        return [c for c in cells(self.outer) if c not in inner]

    @property
    def size(self) -> int:
        return sum(self.outer) - sum(self.inner)

    def to_json(self):
        return {"outer": list(self.outer), "inner": list(self.inner)}

    def __str__(self):
        return f"{self.outer}\\{self.inner}"


def skew_content(shape: SkewShape) -> int:
    return content_sum(shape.outer) - content_sum(shape.inner)


@dataclass(frozen=True)
class Tableau:
    """Filling of a skew shape, stored as a sorted tuple of ((row, col), value)."""

    shape: SkewShape
    entries: tuple

    @classmethod
    def from_dict(cls, shape: SkewShape, filling: dict) -> "Tableau":
        return cls(shape, tuple(sorted(filling.items())))

    def as_dict(self) -> dict:
        return dict(self.entries)

    def is_semistandard(self) -> bool:
        vals = self.as_dict()
        if set(vals) != set(self.shape.cells()):
            return False
        for (i, j), v in vals.items():
            if (i, j + 1) in vals and vals[(i, j + 1)] < v:
                return False
            if (i + 1, j) in vals and vals[(i + 1, j)] <= v:
                return False
        return True

    def weight(self) -> Partition:
        counts: dict = {}
        for _, v in self.entries:
            counts[v] = counts.get(v, 0) + 1
        if not counts:
            return ()
        return tuple(counts.get(i, 0) for i in range(1, max(counts) + 1))


def row_word(t: Tableau) -> tuple:
    vals = t.as_dict()
    rows = sorted({i for (i, _) in vals}, reverse=True)
    word = []
    for i in rows:
        for j in sorted(jj for (ii, jj) in vals if ii == i):
            word.append(vals[(i, j)])
    return tuple(word)


def is_yamanouchi(word) -> bool:
    counts: dict = {}
    for letter in reversed(word):
        counts[letter] = counts.get(letter, 0) + 1
        if letter > 1 and counts.get(letter - 1, 0) < counts[letter]:
            return False
    return True


def ssyt_fillings(shape: SkewShape, weight):
    """All semistandard fillings of a skew shape with the given letter weight."""
    weight = tuple(weight)
    shape_cells = sorted(shape.cells())
    if len(shape_cells) != sum(weight):
        return
    remaining = list(weight)
    filling: dict = {}

    def rec(k):
        if k == len(shape_cells):
            yield Tableau.from_dict(shape, filling)
            return
        i, j = shape_cells[k]
        lo = 1
        if (i, j - 1) in filling:
            lo = max(lo, filling[(i, j - 1)])
        if (i - 1, j) in filling:
            lo = max(lo, filling[(i - 1, j)] + 1)
        for v in range(lo, len(weight) + 1):
            if remaining[v - 1] == 0:
                continue
            remaining[v - 1] -= 1
            filling[(i, j)] = v
            yield from rec(k + 1)
            del filling[(i, j)]
            remaining[v - 1] += 1

    yield from rec(0)


def lr_coefficient(mu, lam, nu) -> int:
    """Number of semistandard fillings of shape mu\\lam and weight nu whose
    row word is a Yamanouchi word; zero when the shape or sizes do not fit."""
    mu, lam, nu = tuple(mu), tuple(lam), tuple(nu)
    if not contains(lam, mu) or sum(nu) != sum(mu) - sum(lam):
        return 0
    shape = SkewShape(mu, lam)
    return sum(1 for t in ssyt_fillings(shape, nu) if is_yamanouchi(row_word(t)))


def highest_weight_tableau(nu) -> Tableau:
    nu = check_partition(nu) if nu else ()
    shape = SkewShape(nu, ())
    return Tableau.from_dict(shape, {(i, j): i for (i, j) in cells(nu)})


def _shape_of_cells(cell_set) -> Partition:
    rows: dict = {}
    for (i, j) in cell_set:
        rows.setdefault(i, set()).add(j)
    if not rows:
        return ()
    if set(rows) != set(range(1, max(rows) + 1)):
        raise ValueError("cells do not form a straight shape")
    parts = []
    for i in range(1, max(rows) + 1):
        if rows[i] != set(range(1, len(rows[i]) + 1)):
            raise ValueError("cells do not form a straight shape")
        parts.append(len(rows[i]))
    return check_partition(parts)


def inner_corners(inner) -> list:
    inner = tuple(inner)
    out = []
    for i, row in enumerate(inner, start=1):
        below = inner[i] if i < len(inner) else 0
        if row > below:
            out.append((i, row))
    return out


def _slide_once(filling: dict, corner):
    """Forward slide starting at an empty inner corner; mutates the filling and
    returns the outer cell that got vacated."""
    i, j = corner
    while True:
        right = filling.get((i, j + 1))
        below = filling.get((i + 1, j))
        if right is None and below is None:
            return (i, j)
        if right is None or (below is not None and below <= right):
            filling[(i, j)] = below
            del filling[(i + 1, j)]
            i += 1
        else:
            filling[(i, j)] = right
            del filling[(i, j + 1)]
            j += 1


def rectify(t: Tableau, corner_picker=None) -> Tableau:
    """Straight-shape tableau obtained by playing all forward slides.

    corner_picker may choose among available inner corners (used to exercise
    order independence); default takes the last in row-major order.
    """
    filling = t.as_dict()
    inner = tuple(t.shape.inner)
    while sum(inner) > 0:
        corners = inner_corners(inner)
        pick = corners[-1] if corner_picker is None else corner_picker(corners)
        _slide_once(filling, pick)
        ci, cj = pick
        inner_rows = list(inner)
        inner_rows[ci - 1] -= 1
        inner = tuple(p for p in inner_rows if p > 0)
    outer = _shape_of_cells(filling.keys())
    return Tableau.from_dict(SkewShape(outer, ()), filling)


def lr_coefficient_via_rectification(mu, lam, nu) -> int:
    """Slower route counting fillings whose rectification is the highest weight
    tableau; kept as an independent cross-check of lr_coefficient."""
    mu, lam, nu = tuple(mu), tuple(lam), tuple(nu)
    if not contains(lam, mu) or sum(nu) != sum(mu) - sum(lam):
        return 0
    target = highest_weight_tableau(nu)
    shape = SkewShape(mu, lam)
    return sum(1 for t in ssyt_fillings(shape, nu) if rectify(t) == target)


def _reverse_slide(filling: dict, corner):
    """Reverse slide pulling entries toward an addable corner; returns the cell
    vacated on the inner side."""
    i, j = corner
    while True:
        left = filling.get((i, j - 1)) if j > 1 else None
        above = filling.get((i - 1, j)) if i > 1 else None
        if left is None and above is None:
            return (i, j)
        if left is None or (above is not None and above >= left):
            filling[(i, j)] = above
            del filling[(i - 1, j)]
            i -= 1
        else:
            filling[(i, j)] = left
            del filling[(i, j - 1)]
            j -= 1


def _addable_corners(shape, frame):
    shape, frame = tuple(shape), tuple(frame)
    out = []
    for i in range(1, len(frame) + 1):
        row = shape[i - 1] if i <= len(shape) else 0
        above = (shape[i - 2] if i - 2 < len(shape) else 0) if i >= 2 else None
        if row >= frame[i - 1]:
            continue
        if i == 1 or above >= row + 1:
            out.append((i, row + 1))
    return out


def jdt_quotient(mu, nu) -> set:
    """All inner shapes reachable by reverse slides that grow the highest
    weight tableau of nu out to the frame mu; equals the set of lam with
    lr_coefficient(mu, lam, nu) > 0."""
    mu, nu = tuple(mu), tuple(nu)
    if not contains(nu, mu):
        return set()
    start = dict(highest_weight_tableau(nu).entries) if nu else {}
    results = set()
    seen = set()

    def state_key(filling, inner):
        return (tuple(sorted(filling.items())), inner)

    def rec(filling, inner):
        occupied = _shape_of_cells(set(filling) | set(cells(inner)))
        if occupied == mu:
            results.add(inner)
            return
        for corner in _addable_corners(occupied, mu):
            work = dict(filling)
            vacated = _reverse_slide(work, corner)
            new_inner = _shape_of_cells(set(cells(inner)) | {vacated})
            key = state_key(work, new_inner)
            if key in seen:
                continue
            seen.add(key)
            rec(work, new_inner)

    rec(start, ())
    return results


def admissible_lambda(l: int, N: int, eps: int) -> set:
    """Partitions of l labelling nontrivial traceless modules of the metric
    group: two leading column heights bounded by N for eps=+1, leading row
    bounded by N/2 for eps=-1."""
    if l < 0 or N < 1:
        raise ValueError("need l >= 0 and N >= 1")
    if eps == 1:
        out = set()
        for lam in partitions_of(l):
            dual = conjugate(lam)
            c1 = dual[0] if dual else 0
            c2 = dual[1] if len(dual) > 1 else 0
            if c1 + c2 <= N:
                out.add(lam)
        return out
    if eps == -1:
        if N % 2 != 0:
            raise ValueError("eps=-1 requires even N")
        return {lam for lam in partitions_of(l) if not lam or lam[0] <= N // 2}
    raise ValueError("eps must be +1 or -1")


def admissible_sigma(n: int, N: int, eps: int) -> set:
    """Partitions of n labelling symmetric group modules that act nontrivially
    on rank-n tensors over an N dimensional space."""
    if n < 0 or N < 1:
        raise ValueError("need n >= 0 and N >= 1")
    if eps == 1:
        return {mu for mu in partitions_of(n) if not mu or conjugate(mu)[0] <= N}
    if eps == -1:
        if N % 2 != 0:
            raise ValueError("eps=-1 requires even N")
        return {mu for mu in partitions_of(n) if not mu or mu[0] <= N}
    raise ValueError("eps must be +1 or -1")


def closure_set(lam, f: int, n: int, N: int | None = None, eps: int | None = None) -> set:
    """Partitions mu of n containing lam with |mu\\lam| = 2f that pair with at
    least one even partition of 2f under the Littlewood-Richardson product.

    With N (and eps) given, mu is additionally restricted to the admissible
    row/column bounds; N=None drops every size restriction.
    """
    lam = tuple(lam)
    if sum(lam) != n - 2 * f or f < 0:
        raise ValueError("need |lam| = n - 2f with f >= 0")
    if f == 0:
        return {lam}
    candidates = partitions_of(n) if N is None else admissible_sigma(n, N, eps)
    evens = [nu for nu in partitions_of(2 * f) if is_even_partition(nu)]
    out = set()
    for mu in candidates:
        if not contains(lam, mu):
            continue
        if any(lr_coefficient(mu, nu, lam) > 0 for nu in evens):
            out.add(mu)
    return out


def hook_dim(mu) -> int:
    """Number of standard tableaux of a straight shape (hook length formula)."""
    mu = tuple(mu)
    if not mu:
        return 1
    dual = conjugate(mu)
    num = factorial(sum(mu))
    for (i, j) in cells(mu):
        num //= mu[i - 1] - j + dual[j - 1] - i + 1
    return num


def standard_tableaux(mu):
    """All standard fillings of a straight shape, as row tuples."""
    mu = tuple(mu)
    n = sum(mu)
    rows = [[] for _ in mu]

    def rec(k):
        if k > n:
            yield tuple(tuple(r) for r in rows)
            return
        for i, row in enumerate(rows):
            if len(row) >= mu[i]:
                continue
            if i > 0 and len(rows[i - 1]) <= len(row):
                continue
            row.append(k)
            yield from rec(k + 1)
            row.pop()

    yield from rec(1)


@lru_cache(maxsize=None)
def _mn_rec(betas: tuple, rho: tuple) -> int:
    if not rho:
        return 1
    r = rho[0]
    rest = rho[1:]
    total = 0
    beta_set = set(betas)
    for idx, b in enumerate(betas):
        nb = b - r
        if nb < 0 or nb in beta_set:
            continue
        crossed = sum(1 for other in betas if nb < other < b)
        new = tuple(sorted((beta_set - {b}) | {nb}, reverse=True))
        total += (-1) ** crossed * _mn_rec(new, rest)
    return total


def mn_character(mu, cycle_type) -> int:
    """Symmetric group character via repeated border strip removal, run on
    first column hook lengths."""
    mu, cycle_type = tuple(mu), tuple(cycle_type)
    if sum(mu) != sum(cycle_type):
        raise ValueError("sizes of the shape and the cycle type differ")
    k = max(len(mu), 1)
    betas = tuple(sorted(((mu[i] if i < len(mu) else 0) + (k - 1 - i) for i in range(k)), reverse=True))
    rho = tuple(sorted(cycle_type, reverse=True))
    return _mn_rec(betas, rho)


def cycle_type_class_size(rho) -> int:
    rho = tuple(rho)
    n = sum(rho)
    counts: dict = {}
    for p in rho:
        counts[p] = counts.get(p, 0) + 1
    z = 1
    for part, m in counts.items():
        z *= part**m * factorial(m)
    return factorial(n) // z


def subdiagrams(mu):
    """All partitions contained in mu."""
    mu = tuple(mu)
    rows = len(mu)
    out = set()

    def rec(i, prev, prefix):
        out.add(tuple(p for p in prefix if p > 0))
        if i >= rows:
            return
        for part in range(min(mu[i], prev), 0, -1):
            rec(i + 1, part, prefix + [part])

    rec(0, mu[0] if mu else 0, [])
    return out
