"""Deciding ENSH(seq): known witnesses, exhaustive search, SAT reduction.

ENSH holds for a layout when some coloring has no monochromatic section
word.  Small instances are settled by enumerating every coloring; larger
ones are compiled to CNF, where a satisfying assignment is exactly a
witness coloring and UNSAT means every coloring is sectionally homogeneous.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from typing import Optional, Union

from .coloring import TableColoring, find_sh_certificate
from .errors import EngineError, MalformedInput, SizeGuard
from .words import (SectionLayout, count_section_words,
                    enumerate_section_words, rank_point, substitution_image)

BRUTE_MAX_COLORINGS = 1 << 16


@dataclass(frozen=True)
class ExhaustionReport:
    instance: str
    colorings_checked: int


@dataclass(frozen=True)
class UnsatReport:
    instance: str
    cnf_hash: str
    solver_id: str


@dataclass
class Witness:
    coloring: TableColoring


@dataclass
class NoWitness:
    evidence: Union[ExhaustionReport, UnsatReport]


EnshDecision = Union[Witness, NoWitness]


def known_witness(layout: SectionLayout) -> Optional[TableColoring]:
    """Closed-form witness tables for the handful of solved families."""
    if layout.d != 2 or layout.k != 2:
        return None
    seq = layout.seq
    if seq == (2, 2):
        fn = lambda p: (p.digit(0) + p.digit(1) + p.digit(2)) % 2
    elif seq == (2, 2, 2):
        fn = lambda p: (int(p.digit(0) + p.digit(1) > 0)
                        + p.digit(2) + p.digit(3) + p.digit(4)) % 2
    elif len(seq) == 1:
        fn = lambda p: p.digit(0) % 2
    else:
        return None
    table = TableColoring.from_function(2, layout.total, 2, fn)
    if find_sh_certificate(table, layout) is not None:
        raise MalformedInput("builtin witness failed verification")
    return table


def _word_rank_masks(layout: SectionLayout) -> list:
    """Per section word, the rank set of its substitution image."""
    masks = []
    for s in range(layout.r):
        ns = layout.seq[s]
        for v in enumerate_section_words(layout, s):
            masks.append([rank_point(p) for p in substitution_image(v, ns)])
    return masks


def decide_ensh_brute(layout: SectionLayout) -> EnshDecision:
    """Exhaust all k^(d^N) colorings; witness = rank-lex least, if any."""
    npoints = layout.d ** layout.total
    total = layout.k ** npoints
    if total > BRUTE_MAX_COLORINGS:
        raise SizeGuard(
            f"{total} colorings exceed the brute-force guard "
            f"({BRUTE_MAX_COLORINGS}); use the sat engine")
    ranksets = _word_rank_masks(layout)
    if layout.k == 2:
        # bit tricks: table t has values[r] = bit (npoints-1-r) of t
        bitmasks = [sum(1 << (npoints - 1 - r) for r in rs) for rs in ranksets]
        for t in range(total):
            if all(t & m and (t & m) != m for m in bitmasks):
                digits = [(t >> (npoints - 1 - r)) & 1 for r in range(npoints)]
                return Witness(TableColoring(layout.d, layout.total, 2, digits))
        return NoWitness(ExhaustionReport(layout.key(), total))
    for t in range(total):
        digits = []
        x = t
        for _ in range(npoints):
            digits.append(x % layout.k)
            x //= layout.k
        digits.reverse()
        if all(len({digits[r] for r in rs}) > 1 for rs in ranksets):
            return Witness(TableColoring(layout.d, layout.total,
                                          layout.k, digits))
    return NoWitness(ExhaustionReport(layout.key(), total))


# ---------------------------------------------------------------------------
# CNF reduction


@dataclass(frozen=True)
class CnfInstance:
    nvars: int
    clauses: tuple
    notes: str

    def dimacs(self) -> str:
        lines = [f"c {self.notes}", f"p cnf {self.nvars} {len(self.clauses)}"]
        for c in self.clauses:
            lines.append(" ".join(map(str, c)) + " 0")
        return "\n".join(lines) + "\n"

    def sha256(self) -> str:
        body = f"p cnf {self.nvars} {len(self.clauses)}\n" + "\n".join(
            " ".join(map(str, c)) + " 0" for c in self.clauses)
        return hashlib.sha256(body.encode()).hexdigest()


def encode_cnf(layout: SectionLayout) -> CnfInstance:
    """Satisfiable iff ENSH(seq) holds.

    k = 2: variable rank+1 per point, positive literal = color 1; every
    section word contributes a "not all 0" and a "not all 1" clause over its
    substitution image, ordered by section then canonical word order.
    k > 2: one variable per (point, color) pair with exactly-one clauses,
    then per word and color a "not all this color" clause.
    """
    npoints = layout.d ** layout.total
    clauses = []
    if layout.k == 2:
        for rs in _word_rank_masks(layout):
            lits = tuple(r + 1 for r in rs)
            clauses.append(lits)
            clauses.append(tuple(-x for x in lits))
        return CnfInstance(npoints, tuple(clauses),
                           f"ensh {layout.key()} direct encoding")
    def vid(rank: int, c: int) -> int:
        return rank * layout.k + c + 1
    for r in range(npoints):
        clauses.append(tuple(vid(r, c) for c in range(layout.k)))
        for c1 in range(layout.k):
            for c2 in range(c1 + 1, layout.k):
                clauses.append((-vid(r, c1), -vid(r, c2)))
    for rs in _word_rank_masks(layout):
        for c in range(layout.k):
            clauses.append(tuple(-vid(r, c) for r in rs))
    return CnfInstance(npoints * layout.k, tuple(clauses),
                       f"ensh {layout.key()} point-color encoding")


def decode_model(layout: SectionLayout, model) -> TableColoring:
    """Rebuild the witness table from a full solver assignment and verify it."""
    npoints = layout.d ** layout.total
    positive = {lit for lit in model if lit > 0}
    negative = {-lit for lit in model if lit < 0}
    if layout.k == 2:
        values = []
        for r in range(npoints):
            if r + 1 in positive:
                values.append(1)
            elif r + 1 in negative:
                values.append(0)
            else:
                raise EngineError(f"model leaves variable {r + 1} unassigned")
    else:
        values = []
        for r in range(npoints):
            hits = [c for c in range(layout.k)
                    if r * layout.k + c + 1 in positive]
            if len(hits) != 1:
                raise EngineError(
                    f"model assigns {len(hits)} colors to point rank {r}")
            values.append(hits[0])
    table = TableColoring(layout.d, layout.total, layout.k, values)
    if find_sh_certificate(table, layout) is not None:
        raise EngineError(
            "decoded model is not a witness: solver or encoding defect")
    return table


def decide_ensh(layout: SectionLayout, engine: str = "auto",
                solver: Optional[str] = None,
                timeout: Optional[float] = None) -> EnshDecision:
    """Decide ENSH(seq) by the requested engine; SAT results are re-verified."""
    from .solver import solve_external, solver_identity

    if engine == "auto":
        small = layout.k ** (layout.d ** layout.total) <= BRUTE_MAX_COLORINGS
        engine = "brute" if small else "sat"
    if engine == "brute":
        return decide_ensh_brute(layout)
    if engine != "sat":
        raise MalformedInput(f"unknown engine {engine!r}")
    cnf = encode_cnf(layout)
    outcome = solve_external(cnf.dimacs(), solver=solver, timeout=timeout)
    if outcome.satisfiable:
        return Witness(decode_model(layout, outcome.model))
    return NoWitness(UnsatReport(layout.key(), cnf.sha256(),
                                 solver_identity(solver)))
