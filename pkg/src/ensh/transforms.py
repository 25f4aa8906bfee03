"""Witness transport: subsequence embedding, domination, enlargement.

A witness for a longer/larger instance induces one for the smaller instance
by composing with an embedding of the small point space into the big one.
Every construction here is proof-backed, so the output is re-verified and a
failure raises InternalInvariant rather than returning quietly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .coloring import Coloring, TableColoring, find_sh_certificate
from .errors import ContractViolation, InternalInvariant
from .words import Point, SectionLayout


@dataclass(frozen=True)
class Subsequence:
    indices: tuple


@dataclass(frozen=True)
class Domination:
    target_seq: tuple


@dataclass(frozen=True)
class Enlarge:
    d: int
    k: int


TransportSpec = Union[Subsequence, Domination, Enlarge]


def _verified(table: TableColoring, layout: SectionLayout,
              what: str) -> TableColoring:
    if find_sh_certificate(table, layout) is not None:
        raise InternalInvariant(f"{what} produced a non-witness; "
                                "the construction is proof-backed, so this "
                                "is a bug")
    return table


def transport_subsequence(f_big: Coloring, big: SectionLayout,
                          indices) -> tuple:
    """Witness for the subsequence layout picked out by sorted indices.

    Points of the small space embed by padding every skipped block with
    zeros; the small coloring is the big one composed with that embedding.
    """
    idx = tuple(indices)
    if list(idx) != sorted(set(idx)) or not idx:
        raise ContractViolation("indices must be nonempty strictly increasing")
    if idx[-1] >= big.r:
        raise ContractViolation("index out of range for the source layout")
    small = SectionLayout(big.d, big.k, tuple(big.seq[s] for s in idx))
    positions = []          # small position -> big position
    for s in idx:
        positions.extend(big.block(s))

    def embed(p: Point) -> Point:
        sup = {}
        for small_pos, u in p.support().items():
            sup[positions[small_pos]] = u
        return Point(big.d, big.total, support=sup)

    table = TableColoring.from_function(
        small.d, small.total, small.k, lambda p: f_big.color(embed(p)))
    return small, _verified(table, small, "subsequence transport")


def transport_domination(f_small: Coloring, small: SectionLayout,
                         target_seq) -> tuple:
    """Witness for a pointwise-larger sequence of the same length.

    Each block of a target point is truncated to the source block size and
    colored by the source witness.
    """
    target_seq = tuple(target_seq)
    if len(target_seq) != small.r:
        raise ContractViolation("sequences must have equal length")
    if any(t < s for t, s in zip(target_seq, small.seq)):
        raise ContractViolation("target must dominate the source pointwise")
    target = SectionLayout(small.d, small.k, target_seq)
    keep = []               # target positions surviving the truncation
    for s in range(small.r):
        blk = target.block(s)
        keep.extend(blk[: small.seq[s]])
    pos_of = {big_pos: i for i, big_pos in enumerate(keep)}

    def project(p: Point) -> Point:
        sup = {}
        for big_pos, u in p.support().items():
            if big_pos in pos_of:
                sup[pos_of[big_pos]] = u
        return Point(small.d, small.total, support=sup)

    table = TableColoring.from_function(
        target.d, target.total, target.k,
        lambda p: f_small.color(project(p)))
    return target, _verified(table, target, "domination transport")


def transport_enlarge(f: Coloring, layout: SectionLayout,
                      d_big: int, k_big: int) -> tuple:
    """Witness over a larger alphabet and color bound.

    Digits outside the source alphabet project to 0, which keeps every
    substitution image of a section word surjective onto a source image.
    """
    if d_big < layout.d or k_big < layout.k:
        raise ContractViolation("alphabet and colors may only grow")
    big = SectionLayout(d_big, k_big, layout.seq)

    def project(p: Point) -> Point:
        sup = {pos: u for pos, u in p.support().items() if u < layout.d}
        return Point(layout.d, layout.total, support=sup)

    table = TableColoring.from_function(
        d_big, big.total, k_big, lambda p: f.color(project(p)))
    return big, _verified(table, big, "enlargement transport")


def apply_transport(f: Coloring, layout: SectionLayout,
                    spec: TransportSpec) -> tuple:
    if isinstance(spec, Subsequence):
        return transport_subsequence(f, layout, spec.indices)
    if isinstance(spec, Domination):
        return transport_domination(f, layout, spec.target_seq)
    if isinstance(spec, Enlarge):
        return transport_enlarge(f, layout, spec.d, spec.k)
    raise ContractViolation(f"unknown transport spec {spec!r}")
