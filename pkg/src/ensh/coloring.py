"""Colorings of d^N and the sectional-homogeneity decision.

A layout is sectionally homogeneous for a coloring when some section admits
a full-length section word whose whole substitution image gets one color.
A coloring for which no section word is monochromatic is a witness that the
layout has the ENSH property.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator, Optional

from .errors import ContractViolation, MalformedInput, OracleContract, SizeGuard
from .words import (Point, SectionLayout, VariableWord, all_points,
                    count_section_words, enumerate_section_words,
                    is_section_word, rank_point, substitute_total)

DENSE_TABLE_MAX_N = 24


class Coloring:
    """Base interface: a total map from d^n to colors 0..k-1."""

    d: int
    n: int
    k: int

    def color(self, p: Point) -> int:
        raise NotImplementedError

    def query_count(self) -> int:
        return 0


class TableColoring(Coloring):
    """Dense table indexed by point rank; only for small n."""

    def __init__(self, d: int, n: int, k: int, values) -> None:
        if n > DENSE_TABLE_MAX_N:
            raise SizeGuard(f"dense table rejected above n={DENSE_TABLE_MAX_N}")
        values = tuple(values)
        if len(values) != d ** n:
            raise MalformedInput(
                f"table length {len(values)} != {d}^{n}")
        if any(not 0 <= c < k for c in values):
            raise MalformedInput("table color out of range")
        self.d, self.n, self.k = d, n, k
        self.values = values
        self._queries = 0

    @classmethod
    def from_function(cls, d: int, n: int, k: int,
                      fn: Callable[[Point], int]) -> "TableColoring":
        return cls(d, n, k, [fn(p) for p in all_points(d, n)])

    @classmethod
    def parse(cls, text: str, d: int, n: int, k: int) -> "TableColoring":
        try:
            values = [int(ch) for ch in text.strip()]
        except ValueError:
            raise MalformedInput(f"bad table text {text!r}")
        return cls(d, n, k, values)

    def color(self, p: Point) -> int:
        self._queries += 1
        return self.values[rank_point(p)]

    def text(self) -> str:
        return "".join(map(str, self.values))

    def query_count(self) -> int:
        return self._queries


class OracleColoring(Coloring):
    """Pure-callable coloring, memoized; determinism spot-checked on hits.

    Every 64th memo hit re-evaluates the callable and compares against the
    memo, so a nondeterministic oracle is eventually caught without paying
    for re-evaluation on each repeat.
    """

    RECHECK_PERIOD = 64

    def __init__(self, d: int, n: int, k: int,
                 fn: Callable[[Point], int], name: str = "oracle") -> None:
        self.d, self.n, self.k = d, n, k
        self.fn = fn
        self.name = name
        self._memo: dict = {}
        self._hits = 0
        self._queries = 0

    def color(self, p: Point) -> int:
        self._queries += 1
        key = p.key()
        if key in self._memo:
            self._hits += 1
            cached = self._memo[key]
            if self._hits % self.RECHECK_PERIOD == 0:
                again = self.fn(p)
                if again != cached:
                    raise OracleContract(
                        f"oracle {self.name} returned {cached} then {again} "
                        f"for the same point")
            return cached
        c = self.fn(p)
        if not 0 <= c < self.k:
            raise OracleContract(
                f"oracle {self.name} returned color {c} outside 0..{self.k-1}")
        self._memo[key] = c
        return c

    def query_count(self) -> int:
        return self._queries


def as_table(f: Coloring) -> TableColoring:
    if isinstance(f, TableColoring):
        return f
    return TableColoring.from_function(f.d, f.n, f.k,
                                       lambda p: f.color(p))


@dataclass(frozen=True)
class SHCertificate:
    """A monochromatic section word: section index, word, common color."""

    s: int
    word: VariableWord
    color: int


def monochromatic_color(f: Coloring, v: VariableWord,
                        layout: SectionLayout) -> Optional[int]:
    """Common color of v's substitution image, or None if colors split.

    Queries exactly d^(n_s) points, n_s the variable count of the section.
    """
    if len(v) != layout.total:
        raise ContractViolation("word length does not match layout")
    nv = v.nvars
    first = None
    for a in all_points(f.d, nv):
        c = f.color(substitute_total(v, a))
        if first is None:
            first = c
        elif c != first:
            return None
    return first


def find_sh_certificate(f: Coloring,
                        layout: SectionLayout) -> Optional[SHCertificate]:
    """Canonically first monochromatic section word, or None.

    None means f witnesses that the layout is not sectionally homogeneous.
    Scan order: sections in order, words in the canonical enumeration order,
    so the result is reproducible regardless of any inner parallelism.
    """
    for s in range(layout.r):
        for v in enumerate_section_words(layout, s):
            c = monochromatic_color(f, v, layout)
            if c is not None:
                return SHCertificate(s, v, c)
    return None


def verify_sh_certificate(f: Coloring, layout: SectionLayout,
                          cert: SHCertificate) -> bool:
    try:
        if not is_section_word(cert.word, layout, cert.s):
            return False
    except ContractViolation:
        return False
    return monochromatic_color(f, cert.word, layout) == cert.color


def max_query_bound(layout: SectionLayout) -> int:
    """Upper bound on oracle queries one find_sh_certificate scan may issue."""
    return sum(count_section_words(layout, s) * layout.d ** layout.seq[s]
               for s in range(layout.r))
