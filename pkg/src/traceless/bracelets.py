"""Ternary bracelet coordinates for the permutation-centralizer subalgebra:
canonical cyclic words, the class-to-monomial correspondence, turnover
stability indices, the degree-raising derivation, the trace contraction rules
and the second order operator realizing left multiplication by the
contraction sum.

Letters are coded as integers with order n < s < p < s' < p' < s'', where a
prime marks a dot.  In text form the dotted letters are written S (dotted s),
P (dotted p) and Z (doubly dotted s); public objects only ever carry the
undotted alphabet n, s, p.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .exactnum import Polynomial, RationalFunction, RF_ONE
from .brauer import AlgebraElement, BrauerDiagram, conjugacy_class, enumerate_diagrams

LN, LS, LP, LSD, LPD, LSDD = range(6)
_CHAR_OF = {LN: "n", LS: "s", LP: "p", LSD: "S", LPD: "P", LSDD: "Z"}
_CODE_OF = {v: k for k, v in _CHAR_OF.items()}


def word_from_str(text: str) -> tuple:
    try:
        return tuple(_CODE_OF[ch] for ch in text)
    except KeyError as exc:
        raise ValueError(f"bad letter {exc.args[0]!r} in {text!r}") from None


def word_to_str(word) -> str:
    return "".join(_CHAR_OF[c] for c in word)


def canonical_word(word) -> tuple:
    """Lexicographic minimum over all rotations of the word and of its reversal."""
    word = tuple(word)
    if not word:
        raise ValueError("empty bracelet word")
    rev = word[::-1]
    best = word
    for base in (word, rev):
        for k in range(len(base)):
            cand = base[k:] + base[:k]
            if cand < best:
                best = cand
    return best


def _base_letter(c: int) -> int:
    if c in (LS, LSD, LSDD):
        return LS
    if c in (LP, LPD):
        return LP
    return LN


def word_in_basis(word) -> bool:
    """Membership in the admissible cyclic alphabet: balanced n and s counts
    with the two letters alternating around the loop (dots ignored)."""
    word = tuple(word)
    if not word:
        return False
    marks = [_base_letter(c) for c in word if _base_letter(c) != LP]
    n_count = sum(1 for c in marks if c == LN)
    if 2 * n_count != len(marks):
        return False
    for a, b in zip(marks, marks[1:] + marks[:1]):
        if len(marks) >= 2 and a == b:
            return False
    return True


@dataclass(frozen=True)
class Bracelet:
    """Canonical equivalence class of an undotted admissible cyclic word."""

    word: tuple

    def __post_init__(self):
        w = canonical_word(self.word)
        if any(c not in (LN, LS, LP) for c in w):
            raise ValueError(f"dotted letters not allowed here: {word_to_str(w)}")
        if not word_in_basis(w):
            raise ValueError(f"word {word_to_str(w)} violates the cyclic alternation rule")
        object.__setattr__(self, "word", w)

    @classmethod
    def from_str(cls, text: str) -> "Bracelet":
        return cls(word_from_str(text))

    def __len__(self):
        return len(self.word)

    def __str__(self):
        return f"[{word_to_str(self.word)}]"

    def __lt__(self, other):
        return (-len(self.word), self.word) < (-len(other.word), other.word)


def _sort_factors(words):
    return tuple(sorted(words, key=lambda w: (-len(w), w)))


@dataclass(frozen=True)
class BraceletMonomial:
    """Multiset of bracelets, ordered longest first."""

    factors: tuple

    def __post_init__(self):
        fa = tuple(sorted(self.factors, key=lambda b: (-len(b.word), b.word)))
        object.__setattr__(self, "factors", fa)

    @classmethod
    def from_words(cls, words) -> "BraceletMonomial":
        return cls(tuple(Bracelet(w) for w in words))

    @classmethod
    def from_str(cls, text: str) -> "BraceletMonomial":
        """Parse the bracket syntax, e.g. "[nsp][p]^2"."""
        toks = re.findall(r"\[([nsp]+)\](?:\^(\d+))?", text)
        if not toks or "".join(f"[{w}]" + (f"^{m}" if m else "") for w, m in toks) != text.replace(" ", ""):
            raise ValueError(f"cannot parse monomial {text!r}")
        words = []
        for w, m in toks:
            words.extend([word_from_str(w)] * (int(m) if m else 1))
        return cls.from_words(words)

    @property
    def degree(self) -> int:
        return sum(len(b.word) for b in self.factors)

    def words(self) -> tuple:
        return tuple(b.word for b in self.factors)

    def __str__(self):
        out = []
        for word, group in itertools.groupby(self.factors, key=lambda b: b.word):
            k = len(list(group))
            out.append(f"[{word_to_str(word)}]" + (f"^{k}" if k > 1 else ""))
        return "".join(out)

    def __lt__(self, other):
        return self.words() < other.words()

    def to_json(self) -> dict:
        factors = []
        for word, group in itertools.groupby(self.factors, key=lambda b: b.word):
            factors.append({"word": word_to_str(word), "mult": len(list(group))})
        return {"factors": factors}

    @classmethod
    def from_json(cls, obj: dict) -> "BraceletMonomial":
        words = []
        for item in obj["factors"]:
            words.extend([word_from_str(item["word"])] * item.get("mult", 1))
        return cls.from_words(words)


def identity_monomial(n: int) -> BraceletMonomial:
    return BraceletMonomial.from_words([(LP,)] * n)


def phi(b: BrauerDiagram) -> BraceletMonomial:
    """Cycle structure of a diagram after gluing each column's two nodes:
    top arcs read n, bottom arcs read s, through lines read p.

    The walk state is (column, side about to be left); following a line lands
    on the partner node, and the walk continues from the other side of that
    column.
    """
    n = b.n
    partner = b.partner_map()
    used = [False] * (2 * n)
    words = []
    for start in range(2 * n):
        if used[start]:
            continue
        word = []
        v = start
        while True:
            used[v] = True
            w = partner[v]
            used[w] = True
            if v < n and w < n:
                word.append(LN)
            elif v >= n and w >= n:
                word.append(LS)
            else:
                word.append(LP)
            v = w + n if w < n else w - n  # other node of the same column
            if used[v]:
                break
        words.append(canonical_word(word))
    return BraceletMonomial.from_words(words)


def representative_diagram(zeta: BraceletMonomial) -> BrauerDiagram:
    """One diagram in the conjugacy class of a monomial, with each factor laid
    out on a consecutive block of columns."""
    pairs = []
    offset = 0
    n = zeta.degree
    for bracelet in zeta.factors:
        word = bracelet.word
        k = len(word)
        cols = list(range(offset, offset + k))
        if LN in word:
            shift = word.index(LN)
            word = word[shift:] + word[:shift]
        # need[j] is the row the edge between cols[j] and cols[j+1] must use
        # at its left column; arcs force the opposite row at the next column.
        need_top = True
        for j, letter in enumerate(word):
            a, bcol = cols[j], cols[(j + 1) % k]
            if letter == LN:
                if not need_top:
                    raise AssertionError("alternation invariant broken")
                pairs.append((a, bcol))
                need_top = False
            elif letter == LS:
                if need_top:
                    raise AssertionError("alternation invariant broken")
                pairs.append((n + a, n + bcol))
                need_top = True
            else:  # vertical line
                if need_top:
                    pairs.append((a, n + bcol))
                else:
                    pairs.append((bcol, n + a))
        offset += k
    return BrauerDiagram(n, pairs)


@lru_cache(maxsize=None)
def _classes_by_monomial(n: int) -> dict:
    """Full diagram enumeration grouped by cycle monomial; cached per n."""
    groups: dict = {}
    for d in enumerate_diagrams(n):
        groups.setdefault(phi(d), []).append(d)
    return {zeta: tuple(ds) for zeta, ds in groups.items()}


def class_diagrams(zeta: BraceletMonomial) -> tuple:
    """All diagrams in the conjugacy class of a monomial."""
    n = zeta.degree
    if n <= 7:
        try:
            return _classes_by_monomial(n)[zeta]
        except KeyError:
            raise ValueError(f"{zeta} is not an admissible monomial") from None
    return tuple(sorted(conjugacy_class(representative_diagram(zeta))))


def class_from_monomial(zeta: BraceletMonomial, normalized: bool = False) -> AlgebraElement:
    """Conjugacy class sum of a monomial: coefficient 1 on each diagram when
    normalized, the turnover stability index otherwise."""
    diagrams = class_diagrams(zeta)
    coeff = RF_ONE if normalized else RationalFunction.const(stability_index(zeta))
    return AlgebraElement(zeta.degree, {d: coeff for d in diagrams})


def _word_stability(word) -> int:
    word = tuple(word)
    rev = word[::-1]
    count = 0
    for k in range(len(word)):
        rot = word[k:] + word[:k]
        if rot == word or rot == rev:
            count += 1
    return count


def stability_index(zeta: BraceletMonomial) -> int:
    """Product of the turnover stabilizer order of every factor times the
    factorials of repeated factor multiplicities; equals the order of the
    relabelling centralizer of any diagram in the class."""
    out = 1
    for word, group in itertools.groupby(zeta.factors, key=lambda b: b.word):
        mult = len(list(group))
        out *= _word_stability(word) ** mult * factorial(mult)
    return out


def star(zeta: BraceletMonomial) -> BraceletMonomial:
    """Swap the two arc letters in every factor (image of the diagram flip)."""
    swap = {LN: LS, LS: LN}
    return BraceletMonomial.from_words(
        tuple(swap.get(c, c) for c in b.word) for b in zeta.factors
    )


# polynomials in extended bracelets are dicts keyed by a sorted tuple of
# canonical words, with integer or Polynomial values

MonKey = tuple


def monkey(words) -> MonKey:
    return _sort_factors(canonical_word(w) for w in words)


def monkey_from_str(text: str) -> MonKey:
    toks = re.findall(r"\[([nspSPZ]+)\](?:\^(\d+))?", text)
    words = []
    for w, m in toks:
        words.extend([word_from_str(w)] * (int(m) if m else 1))
    return monkey(words)


def monkey_to_str(key: MonKey) -> str:
    out = []
    for word, group in itertools.groupby(key):
        k = len(list(group))
        out.append(f"[{word_to_str(word)}]" + (f"^{k}" if k > 1 else ""))
    return "".join(out)


_DERIVE_LETTER = {LS: LSD, LP: LPD, LSD: LSDD}


def derive(poly: dict) -> dict:
    """Leibniz extension of s -> s', p -> p', s' -> s''; the letters n, p' and
    s'' are constants."""
    out: dict = {}
    for key, coeff in poly.items():
        for fi, word in enumerate(key):
            for li, letter in enumerate(word):
                image = _DERIVE_LETTER.get(letter)
                if image is None:
                    continue
                new_word = word[:li] + (image,) + word[li + 1 :]
                new_key = monkey(key[:fi] + (new_word,) + key[fi + 1 :])
                out[new_key] = out.get(new_key, 0) + coeff
    return {k: c for k, c in out.items() if not _is_zero_coeff(c)}


def _is_zero_coeff(c) -> bool:
    if isinstance(c, Polynomial):
        return c.is_zero()
    return c == 0


def dot_count(word) -> int:
    return sum(1 for c in word if c in (LSD, LPD)) + 2 * sum(1 for c in word if c == LSDD)


def _is_fit(segment) -> bool:
    """A linear segment is fit when it is empty, or its bracelet closure is
    admissible and every s is eventually followed by an n."""
    if not segment:
        return True
    if any(c not in (LN, LS, LP) for c in segment):
        return False
    if not word_in_basis(segment):
        return False
    last_n = -1
    for i, c in enumerate(segment):
        if c == LN:
            last_n = i
    for i, c in enumerate(segment):
        if c == LS and i > last_n:
            return False
    return True


def _dihedral_forms(word):
    word = tuple(word)
    rev = word[::-1]
    seen = set()
    for base in (word, rev):
        for k in range(len(base)):
            rot = base[k:] + base[:k]
            if rot not in seen:
                seen.add(rot)
                yield rot


def _splits_at(word, first_letter, second_letter):
    """All (u, v) with some dihedral representative equal to
    first_letter + u + second_letter + v."""
    for form in _dihedral_forms(word):
        if form[0] != first_letter:
            continue
        for idx in range(1, len(form)):
            if form[idx] == second_letter:
                u = form[1:idx]
                v = form[idx + 1 :]
                if all(c in (LN, LS, LP) for c in u) and all(c in (LN, LS, LP) for c in v):
                    yield u, v


def _rest_forms(word, letter):
    """All u with some dihedral representative equal to letter + u."""
    for form in _dihedral_forms(word):
        if form[0] == letter and all(c in (LN, LS, LP) for c in form[1:]):
            yield form[1:]


class TraceRuleError(ValueError):
    """No contraction rule matches a doubly dotted monomial."""


def _tau_one_factor(word):
    """Contract the two dots inside a single factor; returns a list of
    (word tuple or pair of words, coefficient Polynomial)."""
    dots = sorted(c for c in word if c in (LSD, LPD, LSDD))
    if dots == [LSDD]:
        for u in _rest_forms(word, LSDD):
            return [((( (LS,) + u),), Polynomial((0, 2)))]
        raise TraceRuleError(word_to_str(word))
    if dots == [LSD, LSD]:
        for u, v in _splits_at(word, LSD, LSD):
            joined = (LS,) + u + (LS,) + v[::-1]
            split = ((LS,) + u, (LS,) + v)
            return [((joined,), Polynomial((2,))), (split, Polynomial((2,)))]
        raise TraceRuleError(word_to_str(word))
    if dots == [LSD, LPD]:
        for u, v in _splits_at(word, LPD, LSD):
            if _is_fit(u):
                joined = (LP,) + u + (LS,) + v[::-1]
                split = ((LP,) + u, (LS,) + v)
                return [((joined,), Polynomial((1,))), (split, Polynomial((1,)))]
        raise TraceRuleError(word_to_str(word))
    if dots == [LPD, LPD]:
        for u, v in _splits_at(word, LPD, LPD):
            if _is_fit(u) and _is_fit(v):
                return [(((LN,) + u + (LS,) + v[::-1],), Polynomial((1,)))]
        for u, v in _splits_at(word, LPD, LPD):
            if sum(1 for c in u if c == LS) > sum(1 for c in u if c == LN):
                return [(((LN,) + u, (LS,) + v), Polynomial((1,)))]
        raise TraceRuleError(word_to_str(word))
    raise TraceRuleError(word_to_str(word))


def _tau_two_factors(word1, word2):
    """Contract one dot from each of two factors into joined words."""
    d1 = sorted(c for c in word1 if c in (LSD, LPD))
    d2 = sorted(c for c in word2 if c in (LSD, LPD))
    def first(gen, what):
        for item in gen:
            return item
        raise TraceRuleError(f"no admissible representative ({what}) in "
                             f"{word_to_str(word1)} | {word_to_str(word2)}")

    if d1 == [LSD] and d2 == [LSD]:
        u = first(_rest_forms(word1, LSD), "dotted s first")
        v = first(_rest_forms(word2, LSD), "dotted s first")
        return [
            (((LS,) + u + (LS,) + v,), Polynomial((2,))),
            (((LS,) + u + (LS,) + v[::-1],), Polynomial((2,))),
        ]
    if {tuple(d1), tuple(d2)} == {(LPD,), (LSD,)}:
        pword, sword = (word1, word2) if d1 == [LPD] else (word2, word1)
        u = first((uu for uu in _rest_forms(pword, LPD) if _is_fit(uu)), "fit rest")
        v = first(_rest_forms(sword, LSD), "dotted s first")
        return [
            (((LP,) + u + (LS,) + v,), Polynomial((1,))),
            (((LP,) + u + (LS,) + v[::-1],), Polynomial((1,))),
        ]
    if d1 == [LPD] and d2 == [LPD]:
        u = first((uu for uu in _rest_forms(word1, LPD) if _is_fit(uu)), "fit rest")
        v = first((vv for vv in _rest_forms(word2, LPD) if _is_fit(vv)), "fit rest")
        return [(((LN,) + u + (LS,) + v[::-1],), Polynomial((1,)))]
    raise TraceRuleError(f"{word_to_str(word1)} | {word_to_str(word2)}")


def trace_tau(poly: dict) -> dict:
    """Apply the contraction rules to every doubly dotted monomial, linearly
    over the undotted factors; coefficients become polynomials in the algebra
    parameter."""
    out: dict = {}
    for key, coeff in poly.items():
        if not isinstance(coeff, Polynomial):
            coeff = Polynomial.const(coeff)
        dotted = [(i, w) for i, w in enumerate(key) if dot_count(w) > 0]
        total_dots = sum(dot_count(w) for _, w in dotted)
        if total_dots != 2:
            raise TraceRuleError(f"{monkey_to_str(key)} does not carry exactly two dots")
        spectators = tuple(w for i, w in enumerate(key) if all(i != j for j, _ in dotted))
        if len(dotted) == 1:
            produced = _tau_one_factor(dotted[0][1])
        else:
            produced = _tau_two_factors(dotted[0][1], dotted[1][1])
        for words, factor in produced:
            new_key = monkey(spectators + tuple(words))
            add = coeff * factor
            prev = out.get(new_key)
            out[new_key] = add if prev is None else prev + add
    return {k: c for k, c in out.items() if not c.is_zero()}


@dataclass
class BraceletVector:
    """Sparse coefficient vector over degree-n monomials."""

    n: int
    terms: dict

    def __post_init__(self):
        tidy = {}
        for zeta, c in self.terms.items():
            if zeta.degree != self.n:
                raise ValueError("mixed degrees in one vector")
            if not isinstance(c, RationalFunction):
                c = RationalFunction(Polynomial.const(c))
            if not c.is_zero():
                tidy[zeta] = c
        self.terms = tidy

    @classmethod
    def unit(cls, n: int) -> "BraceletVector":
        return cls(n, {identity_monomial(n): RF_ONE})

    def coefficient(self, zeta: BraceletMonomial) -> RationalFunction:
        return self.terms.get(zeta, RationalFunction.const(0))

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other):
        out = dict(self.terms)
        for z, c in other.terms.items():
            s = out.get(z)
            out[z] = c if s is None else s + c
        return BraceletVector(self.n, out)

    def __sub__(self, other):
        return self + other.scale(RationalFunction.const(-1))

    def scale(self, c: RationalFunction) -> "BraceletVector":
        return BraceletVector(self.n, {z: v * c for z, v in self.terms.items()})

    def __eq__(self, other):
        return isinstance(other, BraceletVector) and self.n == other.n and self.terms == other.terms

    def __repr__(self):
        if not self.terms:
            return "0"
        items = sorted(self.terms.items(), key=lambda t: t[0].words())
        return " + ".join(f"({c})*{z}" for z, c in items)


@lru_cache(maxsize=None)
def _delta_table(zeta: BraceletMonomial) -> tuple:
    """Coefficients of the contraction-sum action on a class basis vector,
    computed as half the traced second derivative."""
    key = monkey(zeta.words())
    second = derive(derive({key: 1}))
    traced = trace_tau(second)
    out = []
    for mk, poly in traced.items():
        half = poly.scale(Fraction(1, 2))
        out.append((BraceletMonomial.from_words(mk), half))
    return tuple(out)


def delta_op(zeta: BraceletMonomial) -> BraceletVector:
    """Coordinates of (contraction sum) * e_zeta over the unnormalized class
    basis."""
    n = zeta.degree
    return BraceletVector(n, {xi: RationalFunction(poly) for xi, poly in _delta_table(zeta)})


@lru_cache(maxsize=None)
def delta_normalized_row(zeta: BraceletMonomial) -> tuple:
    """Row of the contraction-sum action matrix in the normalized class basis,
    as (monomial, Polynomial) pairs."""
    st_z = stability_index(zeta)
    out = []
    for xi, poly in _delta_table(zeta):
        out.append((xi, poly.scale(Fraction(stability_index(xi), st_z))))
    return tuple(out)


def apply_a_normalized_poly(terms: dict) -> dict:
    """Contraction-sum action on a polynomial-coefficient vector over the
    normalized class basis."""
    acc: dict = {}
    for zeta, c in terms.items():
        for xi, row in delta_normalized_row(zeta):
            add = c * row
            prev = acc.get(xi)
            acc[xi] = add if prev is None else prev + add
    return {z: c for z, c in acc.items() if not c.is_zero()}


def a_action_normalized(v: BraceletVector) -> BraceletVector:
    """Image of a vector in the normalized class basis under left
    multiplication by the contraction sum."""
    acc: dict = {}
    for zeta, c in v.terms.items():
        for xi, row in delta_normalized_row(zeta):
            add = c * RationalFunction(row)
            prev = acc.get(xi)
            acc[xi] = add if prev is None else prev + add
    return BraceletVector(v.n, acc)


@lru_cache(maxsize=None)
def bracelet_words(length: int) -> tuple:
    """Canonical admissible words of a given length."""
    out = set()
    for word in itertools.product((LN, LS, LP), repeat=length):
        if word != canonical_word(word):
            continue
        if word_in_basis(word):
            out.add(word)
    return tuple(sorted(out))


@lru_cache(maxsize=None)
def monomials_of_degree(n: int) -> tuple:
    """All degree-n monomials, i.e. the class basis labels."""
    out = []

    def rec(remaining, max_len, acc):
        if remaining == 0:
            out.append(BraceletMonomial.from_words(acc))
            return
        for length in range(min(remaining, max_len), 0, -1):
            for word in bracelet_words(length):
                if acc and length == len(acc[-1]) and word > acc[-1]:
                    continue
                acc.append(word)
                rec(remaining - length, length, acc)
                acc.pop()

    rec(n, n, [])
    return tuple(sorted(set(out), key=lambda z: z.words()))
