"""Variable-word algebra: symbols, points, layouts, substitution, enumeration.

Symbols are plain ints: ``u >= 0`` is the alphabet digit u, ``-(m+1)`` is the
variable x_m.  This keeps words hashable and cheap, and symbol meaning does
not depend on the alphabet size, so alphabet enlargement never rewrites
words.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Optional

from .errors import ContractViolation, MalformedInput


def var(m: int) -> int:
    """Symbol for the variable x_m."""
    return -(m + 1)


def var_index(sym: int) -> int:
    return -sym - 1


def is_var(sym: int) -> bool:
    return sym < 0


def format_symbol(sym: int) -> str:
    return f"x{var_index(sym)}" if is_var(sym) else str(sym)


def parse_symbol(tok: str) -> int:
    if tok.startswith("x"):
        try:
            m = int(tok[1:])
        except ValueError:
            raise MalformedInput(f"bad variable token {tok!r}")
        if m < 0:
            raise MalformedInput(f"bad variable token {tok!r}")
        return var(m)
    try:
        u = int(tok)
    except ValueError:
        raise MalformedInput(f"bad symbol token {tok!r}")
    if u < 0:
        raise MalformedInput(f"bad symbol token {tok!r}")
    return u


# ---------------------------------------------------------------------------
# points


class Point:
    """A string in {0..d-1}^n, stored dense (tuple) or sparse (support map).

    The sparse form records only nonzero digits and is the workhorse for the
    long-layout pipeline, where n is in the thousands but points have tiny
    support.  Both forms interconvert losslessly and compare equal.
    """

    __slots__ = ("d", "n", "_dense", "_support")

    def __init__(self, d: int, n: int, *, dense=None, support=None):
        if d < 1 or n < 0:
            raise MalformedInput(f"bad point shape d={d} n={n}")
        self.d = d
        self.n = n
        self._dense: Optional[tuple] = None
        self._support: Optional[dict] = None
        if dense is not None:
            dense = tuple(dense)
            if len(dense) != n:
                raise MalformedInput(f"digit count {len(dense)} != n={n}")
            for u in dense:
                if not 0 <= u < d:
                    raise MalformedInput(f"digit {u} out of range for d={d}")
            self._dense = dense
        elif support is not None:
            sup = dict(support)
            for pos, u in sup.items():
                if not 0 <= pos < n:
                    raise MalformedInput(f"support position {pos} out of range")
                if not 1 <= u < d:
                    raise MalformedInput(f"support digit {u} out of range")
            self._support = sup
        else:
            self._support = {}

    @classmethod
    def dense(cls, d: int, digits) -> "Point":
        digits = tuple(digits)
        return cls(d, len(digits), dense=digits)

    @classmethod
    def sparse(cls, d: int, n: int, support) -> "Point":
        return cls(d, n, support=support)

    @classmethod
    def zeros(cls, d: int, n: int) -> "Point":
        return cls(d, n, support={})

    @classmethod
    def from_set(cls, n: int, ones) -> "Point":
        """Binary point from its set of 1-positions."""
        return cls(2, n, support={p: 1 for p in ones})

    @classmethod
    def parse(cls, text: str, d: int) -> "Point":
        try:
            digits = tuple(int(ch) for ch in text.strip())
        except ValueError:
            raise MalformedInput(f"bad point text {text!r}")
        return cls(d, len(digits), dense=digits)

    def digit(self, pos: int) -> int:
        if self._dense is not None:
            return self._dense[pos]
        return self._support.get(pos, 0)

    def digits(self) -> tuple:
        if self._dense is None:
            self._dense = tuple(self._support.get(i, 0) for i in range(self.n))
        return self._dense

    def support(self) -> dict:
        if self._support is None:
            self._support = {i: u for i, u in enumerate(self._dense) if u}
        return self._support

    def ones(self) -> frozenset:
        """Set view of a binary point (positions carrying digit 1)."""
        return frozenset(self.support())

    def key(self):
        return (self.n, tuple(sorted(self.support().items())))

    def __eq__(self, other):
        return (isinstance(other, Point) and self.d == other.d
                and self.key() == other.key())

    def __hash__(self):
        return hash((self.d, self.key()))

    def __repr__(self):
        if self.n <= 64:
            return f"Point({''.join(map(str, self.digits()))})"
        sup = sorted(self.support().items())
        return f"Point(n={self.n}, support={sup})"

    def text(self) -> str:
        return "".join(map(str, self.digits()))

    # set operations for the binary set-view (same-length points only)

    def _check_mate(self, other: "Point") -> None:
        if self.n != other.n or self.d != other.d:
            raise ContractViolation("set operations need matching shape")

    def union(self, other: "Point") -> "Point":
        self._check_mate(other)
        sup = dict(self.support())
        sup.update(other.support())
        return Point(self.d, self.n, support=sup)

    def intersect(self, other: "Point") -> "Point":
        self._check_mate(other)
        a, b = self.support(), other.support()
        return Point(self.d, self.n,
                     support={p: u for p, u in a.items() if p in b})

    def minus(self, other: "Point") -> "Point":
        self._check_mate(other)
        b = other.support()
        return Point(self.d, self.n,
                     support={p: u for p, u in self.support().items()
                              if p not in b})

    def disjoint(self, other: "Point") -> bool:
        self._check_mate(other)
        return not (self.ones() & other.ones())


def rank_point(p: Point) -> int:
    """Big-endian positional rank: position 0 is most significant."""
    r = 0
    d = p.d
    for u in p.digits():
        r = r * d + u
    return r


def unrank_point(i: int, n: int, d: int) -> Point:
    if not 0 <= i < d ** n:
        raise MalformedInput(f"rank {i} out of range for d^{n}")
    digits = [0] * n
    for pos in range(n - 1, -1, -1):
        i, digits[pos] = divmod(i, d)
    return Point(d, n, dense=digits)


def all_points(d: int, n: int) -> Iterator[Point]:
    """All points of d^n in rank order."""
    for digits in itertools.product(range(d), repeat=n):
        yield Point(d, n, dense=digits)


# ---------------------------------------------------------------------------
# variable words


@dataclass(frozen=True)
class VariableWord:
    """A finite sequence over digits 0..d-1 and variables x0, x1, ...

    Only digit bounds are enforced here; the classical normalization (the
    occurring variables are exactly x0..x_{n-1} and their first occurrences
    are increasing) is a property, because the positionwise-substitution
    variant of the pipeline deliberately breaks it.
    """

    d: int
    syms: tuple

    def __post_init__(self):
        for s in self.syms:
            if not is_var(s) and s >= self.d:
                raise MalformedInput(f"digit {s} out of range for d={self.d}")

    @classmethod
    def make(cls, d: int, syms) -> "VariableWord":
        return cls(d, tuple(syms))

    @classmethod
    def parse(cls, text: str, d: int) -> "VariableWord":
        toks = text.split()
        return cls(d, tuple(parse_symbol(t) for t in toks))

    def text(self) -> str:
        return " ".join(format_symbol(s) for s in self.syms)

    def __len__(self):
        return len(self.syms)

    @property
    def variables(self) -> tuple:
        """Sorted indices of the variables that occur."""
        return tuple(sorted({var_index(s) for s in self.syms if is_var(s)}))

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def is_constant(self) -> bool:
        return self.nvars == 0

    def is_normalized(self) -> bool:
        """Exactly x0..x_{n-1} occur and their first occurrences increase."""
        occ = occurrences(self)
        if sorted(occ) != list(range(len(occ))):
            return False
        firsts = [min(occ[m]) for m in sorted(occ)]
        return firsts == sorted(firsts) and len(set(firsts)) == len(firsts)

    def extend(self, syms) -> "VariableWord":
        return VariableWord(self.d, self.syms + tuple(syms))

    def extends(self, prefix: "VariableWord") -> bool:
        return self.syms[: len(prefix.syms)] == prefix.syms


def occurrences(v: VariableWord) -> dict:
    """Map m -> sorted positions of x_m in v."""
    occ: dict = {}
    for pos, s in enumerate(v.syms):
        if is_var(s):
            occ.setdefault(var_index(s), []).append(pos)
    return occ


def first_occurrences(v: VariableWord) -> dict:
    return {m: pos[0] for m, pos in occurrences(v).items()}


def substitute_truncating(v: VariableWord, a: Point) -> Point:
    """Substitute digits for variables, truncating at the next unused one.

    The occurring variables, sorted by index, are filled left to right from
    a's digits; the result is cut just before the first occurrence of the
    (len(a)+1)-th occurring variable, or runs to the end of the word when a
    covers every variable.
    """
    if a.d != v.d:
        raise ContractViolation("point alphabet differs from word alphabet")
    vs = v.variables
    hn = a.n
    assigned = {vs[t]: a.digit(t) for t in range(min(len(vs), hn))}
    if hn >= len(vs):
        cut = len(v.syms)
    else:
        cut = min(p for p, s in enumerate(v.syms)
                  if is_var(s) and var_index(s) == vs[hn])
    out = []
    for s in v.syms[:cut]:
        out.append(assigned[var_index(s)] if is_var(s) else s)
    return Point(v.d, len(out), dense=out)


def substitute_total(v: VariableWord, a: Point) -> Point:
    """Positionwise substitution x_m -> a(m); length preserving."""
    if a.d != v.d:
        raise ContractViolation("point alphabet differs from word alphabet")
    for s in v.syms:
        if is_var(s) and var_index(s) >= a.n:
            raise ContractViolation(
                f"variable x{var_index(s)} out of range for |a|={a.n}")
    out = [a.digit(var_index(s)) if is_var(s) else s for s in v.syms]
    return Point(v.d, len(out), dense=out)


def substitution_image(v: VariableWord, nvars: int) -> Iterator[Point]:
    """Points v(a) for all a in d^nvars, in rank order of a (positionwise)."""
    for a in all_points(v.d, nvars):
        yield substitute_total(v, a)


# ---------------------------------------------------------------------------
# section layouts


@dataclass(frozen=True)
class SectionLayout:
    """Block structure n_0..n_{r-1} over alphabet d with k colors."""

    d: int
    k: int
    seq: tuple

    def __post_init__(self):
        if self.d < 1 or self.k < 1:
            raise MalformedInput(f"bad d={self.d} or k={self.k}")
        if not self.seq or any(n < 1 for n in self.seq):
            raise MalformedInput(f"block sizes must be positive: {self.seq}")
        object.__setattr__(self, "seq", tuple(self.seq))

    @property
    def r(self) -> int:
        return len(self.seq)

    @property
    def total(self) -> int:
        return sum(self.seq)

    def block(self, s: int) -> range:
        start = sum(self.seq[:s])
        return range(start, start + self.seq[s])

    def blocks(self) -> list:
        return [self.block(s) for s in range(self.r)]

    def key(self) -> str:
        return f"d{self.d}k{self.k}:" + ",".join(map(str, self.seq))


def is_section_word(v: VariableWord, layout: SectionLayout, s: int) -> bool:
    """True iff v's variable first occurrences are exactly block s.

    Structurally: constants before the block, x_j exactly at block start + j,
    and afterwards any constant or any of the block's variables.
    """
    if len(v) != layout.total:
        raise ContractViolation(
            f"word length {len(v)} != layout length {layout.total}")
    if not 0 <= s < layout.r:
        raise ContractViolation(f"section {s} out of range")
    blk = layout.block(s)
    ns = layout.seq[s]
    for pos, sym in enumerate(v.syms):
        if pos < blk.start:
            if is_var(sym):
                return False
        elif pos in blk:
            if sym != var(pos - blk.start):
                return False
        else:
            if is_var(sym) and var_index(sym) >= ns:
                return False
    return True


def count_section_words(layout: SectionLayout, s: int) -> int:
    b = layout.block(s).start
    ns = layout.seq[s]
    tail = layout.total - b - ns
    return layout.d ** b * (layout.d + ns) ** tail


def enumerate_section_words(layout: SectionLayout,
                            s: int) -> Iterator[VariableWord]:
    """All section words for block s, in lexicographic symbol order.

    Symbol order: digits 0..d-1 before variables x0..x_{n_s-1}; leftmost
    position most significant.
    """
    if not 0 <= s < layout.r:
        raise ContractViolation(f"section {s} out of range")
    d = layout.d
    blk = layout.block(s)
    ns = layout.seq[s]
    fixed = tuple(var(j) for j in range(ns))
    tail_syms = tuple(range(d)) + tuple(var(j) for j in range(ns))
    tail = layout.total - blk.start - ns
    for prefix in itertools.product(range(d), repeat=blk.start):
        for suffix in itertools.product(tail_syms, repeat=tail):
            yield VariableWord(d, prefix + fixed + suffix)


@lru_cache(maxsize=None)
def _nvar_words_cached(d: int, length: int, nvars: int) -> tuple:
    return tuple(_gen_nvar_words(d, length, nvars))


def _gen_nvar_words(d: int, length: int, nvars: int):
    """All normalized words of the given length with exactly nvars variables."""
    def rec(pos, used, syms):
        if length - pos < nvars - used:
            return
        if pos == length:
            if used == nvars:
                yield VariableWord(d, tuple(syms))
            return
        for u in range(d):
            syms.append(u)
            yield from rec(pos + 1, used, syms)
            syms.pop()
        for m in range(min(used + 1, nvars)):
            syms.append(var(m))
            yield from rec(pos + 1, max(used, m + 1), syms)
            syms.pop()
    yield from rec(0, 0, [])


def enumerate_nvar_words(d: int, length: int,
                         nvars: int) -> Iterator[VariableWord]:
    """Normalized nvars-variable words of a given length, canonical order."""
    if length <= 8 and d <= 4:
        return iter(_nvar_words_cached(d, length, nvars))
    return _gen_nvar_words(d, length, nvars)
