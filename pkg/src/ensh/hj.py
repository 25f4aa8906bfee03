"""Hales-Jewett line search and its block-coding tie to section words.

HJ(d, k, n) asks for an N such that every k-coloring of d^N has a
monochromatic n-variable word.  Coding n-blocks of a d-ary string as single
letters of a d^n-ary alphabet turns a monochromatic 1-variable word over
the big alphabet into a monochromatic n-variable word whose variable first
occurrences fill exactly one block, i.e. a section certificate.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional

from .coloring import (Coloring, SHCertificate, TableColoring,
                       verify_sh_certificate)
from .errors import ContractViolation
from .words import (Point, SectionLayout, VariableWord, all_points,
                    enumerate_nvar_words, first_occurrences, is_var, var,
                    var_index, rank_point, substitute_truncating, unrank_point)


@dataclass(frozen=True)
class HJWitness:
    """A monochromatic n-variable word of length N with its color."""

    N: int
    word: VariableWord
    color: int


def block_code(p: Point, n: int) -> Point:
    """Code length-n blocks as digits of the alphabet d^n, big-endian."""
    if p.n % n:
        raise ContractViolation(f"length {p.n} not divisible by block {n}")
    digits = p.digits()
    out = []
    for t in range(p.n // n):
        code = 0
        for u in digits[t * n: (t + 1) * n]:
            code = code * p.d + u
        out.append(code)
    return Point(p.d ** n, p.n // n, dense=out)


def block_decode(p: Point, n: int, d: int) -> Point:
    """Inverse of block_code."""
    if p.d != d ** n:
        raise ContractViolation(f"alphabet {p.d} is not {d}^{n}")
    out = []
    for code in p.digits():
        block = []
        for _ in range(n):
            code, u = divmod(code, d)
            block.append(u)
        out.extend(reversed(block))
    return Point(d, p.n * n, dense=out)


def word_monochromatic(c: Coloring, v: VariableWord, n: int) -> Optional[int]:
    """Common color of {v(a) : a in d^n} under truncating substitution."""
    first = None
    for a in all_points(c.d, n):
        col = c.color(substitute_truncating(v, a))
        if first is None:
            first = col
        elif col != first:
            return None
    return first


def hj_search_word(c: Coloring, n: int) -> Optional[HJWitness]:
    """Canonically first monochromatic n-variable word of full length."""
    for v in enumerate_nvar_words(c.d, c.n, n):
        col = word_monochromatic(c, v, n)
        if col is not None:
            return HJWitness(c.n, v, col)
    return None


def hj_number(d: int, k: int, n: int, n_max: int) -> Optional[int]:
    """Least N <= n_max making every coloring admit a witness, if any."""
    for N in range(n, n_max + 1):
        npoints = d ** N
        total = k ** npoints
        words = list(enumerate_nvar_words(d, N, n))
        image_ranks = []
        for v in words:
            image_ranks.append(sorted({
                rank_point(substitute_truncating(v, a))
                for a in all_points(d, n)}))
        good = True
        for t in range(total):
            digits = []
            x = t
            for _ in range(npoints):
                digits.append(x % k)
                x //= k
            digits.reverse()
            if not any(len({digits[r] for r in rs}) == 1
                       for rs in image_ranks):
                good = False
                break
        if good:
            return N
    return None


def ensh_refutation_from_hj(r: int, f: Coloring, n: int) -> SHCertificate:
    """Decode an HJ line of the block-coded coloring into a section word.

    f colors d^(n*r); the certificate is for the layout of r blocks of
    size n, with variable first occurrences filling one whole block.
    Raises if the coded HJ search fails, which means r is too small.
    """
    if f.n != n * r:
        raise ContractViolation(f"coloring length {f.n} != n*r = {n * r}")
    d = f.d
    big_d = d ** n
    coded = TableColoring.from_function(
        big_d, r, f.k, lambda q: f.color(block_decode(q, n, d)))
    hit = hj_search_word(coded, 1)
    if hit is None:
        raise ContractViolation(
            f"no monochromatic line over alphabet {big_d}^{r}; "
            "increase the block count r")
    syms = []
    for sym in hit.word.syms:
        if is_var(sym):
            syms.extend(var(j) for j in range(n))
        else:
            syms.extend(unrank_point(sym, n, d).digits())
    word = VariableWord(d, tuple(syms))
    t_star = first_occurrences(hit.word)[0] // 1
    t_star = min(p for p, s in enumerate(hit.word.syms) if is_var(s))
    cert = SHCertificate(t_star, word, hit.color)
    layout = SectionLayout(d, f.k, (n,) * r)
    if not verify_sh_certificate(f, layout, cert):
        raise ContractViolation("decoded certificate failed verification")
    return cert
