"""Self-contained CDCL SAT solver speaking DIMACS in, SAT-competition out.

This is the bundled fallback for the external-solver slot: no solver binary
ships with most systems, so ``ensh-cdcl`` gives every install a working
reference solver.  It is deliberately a single file with no imports beyond
the stdlib, so it can also be copied out and used on its own.

Implementation: two-watched-literal propagation, VSIDS with exponential
decay, phase saving, Luby restarts, first-UIP clause learning and learned
clause database reduction.  Literals are encoded minisat-style as
``2*var`` (positive) and ``2*var + 1`` (negative), variables 0-based
internally, 1-based in DIMACS.
"""

from __future__ import annotations

import sys
from heapq import heappush, heappop

UNASSIGNED = -1


def _luby(i: int) -> int:
    """Luby restart sequence value for 0-based index i: 1,1,2,1,1,2,4,..."""
    size, seq = 1, 0
    while size < i + 1:
        seq += 1
        size = 2 * size + 1
    while size - 1 != i:
        size = (size - 1) // 2
        seq -= 1
        i %= size
    return 1 << seq


class CdclSolver:
    """CDCL solver over clauses given as lists of signed DIMACS literals."""

    def __init__(self, nvars: int, clauses) -> None:
        self.nvars = nvars
        self.values = [UNASSIGNED] * nvars      # per var: -1 / 0 / 1
        self.levels = [0] * nvars
        self.reasons: list = [None] * nvars     # clause (list of lits) or None
        self.trail: list[int] = []              # encoded lits, assignment order
        self.trail_lim: list[int] = []
        self.qhead = 0
        self.watches: list[list] = [[] for _ in range(2 * nvars)]
        self.activity = [0.0] * nvars
        self.var_inc = 1.0
        self.phase = [0] * nvars
        self.order: list = []                   # lazy-deletion max-heap
        self.learned: list = []
        self.cla_inc = 1.0
        self.conflicts = 0
        self.ok = True
        self._root_clauses = []
        for c in clauses:
            if not self._add_clause(sorted(set(c), key=abs)):
                self.ok = False
                break

    # ------------------------------------------------------------------
    # encoding helpers

    @staticmethod
    def _enc(lit: int) -> int:
        v = abs(lit) - 1
        return 2 * v if lit > 0 else 2 * v + 1

    @staticmethod
    def _dec(elit: int) -> int:
        return (elit // 2 + 1) * (-1 if elit & 1 else 1)

    def _lit_value(self, elit: int) -> int:
        v = self.values[elit >> 1]
        if v == UNASSIGNED:
            return UNASSIGNED
        return v ^ (elit & 1)

    # ------------------------------------------------------------------
    # clause management

    def _add_clause(self, lits) -> bool:
        # drop tautologies, strip duplicates (already deduped by caller)
        enc = [self._enc(x) for x in lits]
        for e in enc:
            if e ^ 1 in enc:
                return True
        if not enc:
            return False
        if len(enc) == 1:
            val = self._lit_value(enc[0])
            if val == 0:
                return False
            if val == UNASSIGNED:
                self._enqueue(enc[0], None)
            return self._propagate() is None
        clause = enc
        self._root_clauses.append(clause)
        self.watches[clause[0]].append(clause)
        self.watches[clause[1]].append(clause)
        return True

    def _attach_learned(self, clause) -> None:
        self.learned.append(clause)
        self.watches[clause[0]].append(clause)
        self.watches[clause[1]].append(clause)

    def _reduce_db(self) -> None:
        """Throw away the colder half of the learned clauses."""
        locked = {id(self.reasons[v]) for v in range(self.nvars)
                  if self.reasons[v] is not None}
        self.learned.sort(key=lambda c: c.act)
        keep, drop = [], set()
        half = len(self.learned) // 2
        for i, c in enumerate(self.learned):
            if i < half and len(c) > 2 and id(c) not in locked:
                drop.add(id(c))
            else:
                keep.append(c)
        if not drop:
            return
        self.learned = keep
        for w in self.watches:
            w[:] = [c for c in w if id(c) not in drop]

    # ------------------------------------------------------------------
    # assignment / propagation

    def _enqueue(self, elit: int, reason) -> None:
        v = elit >> 1
        self.values[v] = 1 - (elit & 1)
        self.levels[v] = len(self.trail_lim)
        self.reasons[v] = reason
        self.trail.append(elit)

    def _propagate(self):
        while self.qhead < len(self.trail):
            elit = self.trail[self.qhead]
            self.qhead += 1
            falsified = elit ^ 1
            ws = self.watches[falsified]
            i = j = 0
            n = len(ws)
            while i < n:
                c = ws[i]
                i += 1
                if c[0] == falsified:
                    c[0], c[1] = c[1], c[0]
                first = c[0]
                fv = self._lit_value(first)
                if fv == 1:
                    ws[j] = c
                    j += 1
                    continue
                for k in range(2, len(c)):
                    if self._lit_value(c[k]) != 0:
                        c[1], c[k] = c[k], c[1]
                        self.watches[c[1]].append(c)
                        break
                else:
                    ws[j] = c
                    j += 1
                    if fv == 0:
                        del ws[j:i]
                        n = len(ws)
                        i = j
                        self.qhead = len(self.trail)
                        return c
                    self._enqueue(first, c)
            del ws[j:n]
        return None

    # ------------------------------------------------------------------
    # conflict analysis

    def _bump_var(self, v: int) -> None:
        self.activity[v] += self.var_inc
        if self.activity[v] > 1e100:
            for u in range(self.nvars):
                self.activity[u] *= 1e-100
            self.var_inc *= 1e-100

    def _analyze(self, confl):
        learnt = [0]
        seen = bytearray(self.nvars)
        path = 0
        idx = len(self.trail) - 1
        p = None
        cur_level = len(self.trail_lim)
        while True:
            if isinstance(confl, _LearnedClause):
                confl.act = self.cla_inc + confl.act
            start = 0 if p is None else 1
            for q in confl[start:]:
                v = q >> 1
                if not seen[v] and self.levels[v] > 0:
                    seen[v] = 1
                    self._bump_var(v)
                    if self.levels[v] >= cur_level:
                        path += 1
                    else:
                        learnt.append(q)
            while not seen[self.trail[idx] >> 1]:
                idx -= 1
            p = self.trail[idx]
            v = p >> 1
            confl = self.reasons[v]
            seen[v] = 0
            path -= 1
            idx -= 1
            if path == 0:
                break
        learnt[0] = p ^ 1
        if len(learnt) == 1:
            return learnt, 0
        # move a max-level literal of the tail into slot 1
        mi = max(range(1, len(learnt)), key=lambda t: self.levels[learnt[t] >> 1])
        learnt[1], learnt[mi] = learnt[mi], learnt[1]
        return learnt, self.levels[learnt[1] >> 1]

    def _cancel_until(self, level: int) -> None:
        if len(self.trail_lim) <= level:
            return
        bound = self.trail_lim[level]
        for t in range(len(self.trail) - 1, bound - 1, -1):
            elit = self.trail[t]
            v = elit >> 1
            self.phase[v] = self.values[v]
            self.values[v] = UNASSIGNED
            self.reasons[v] = None
            heappush(self.order, (-self.activity[v], v))
        del self.trail[bound:]
        del self.trail_lim[level:]
        self.qhead = len(self.trail)

    def _pick_branch_var(self) -> int:
        while self.order:
            negact, v = heappop(self.order)
            if self.values[v] == UNASSIGNED and -negact == self.activity[v]:
                return v
        for v in range(self.nvars):
            if self.values[v] == UNASSIGNED:
                return v
        return -1

    # ------------------------------------------------------------------

    def solve(self) -> bool:
        """Returns True (SAT) or False (UNSAT)."""
        if not self.ok:
            return False
        for v in range(self.nvars):
            heappush(self.order, (-self.activity[v], v))
        restart = 0
        budget = 64 * _luby(restart)
        since_restart = 0
        max_learned = max(2000, len(self._root_clauses) // 2)
        while True:
            confl = self._propagate()
            if confl is not None:
                self.conflicts += 1
                since_restart += 1
                if not self.trail_lim:
                    return False
                learnt, back = self._analyze(confl)
                self._cancel_until(back)
                if len(learnt) == 1:
                    self._enqueue(learnt[0], None)
                else:
                    clause = _LearnedClause(learnt)
                    clause.act = self.cla_inc
                    self._attach_learned(clause)
                    self._enqueue(learnt[0], clause)
                self.var_inc /= 0.95
                self.cla_inc /= 0.999
                if self.cla_inc > 1e20:
                    for c in self.learned:
                        c.act *= 1e-20
                    self.cla_inc *= 1e-20
                continue
            if since_restart >= budget:
                restart += 1
                budget = 64 * _luby(restart)
                since_restart = 0
                self._cancel_until(0)
                continue
            if len(self.learned) > max_learned + len(self.trail):
                self._reduce_db()
            v = self._pick_branch_var()
            if v < 0:
                return True
            self.trail_lim.append(len(self.trail))
            self._enqueue(2 * v + (0 if self.phase[v] else 1), None)

    def model(self) -> list[int]:
        """Signed-literal assignment for all variables (after SAT)."""
        out = []
        for v in range(self.nvars):
            val = self.values[v]
            out.append((v + 1) if val == 1 else -(v + 1))
        return out


class _LearnedClause(list):
    __slots__ = ("act",)

    def __init__(self, lits):
        super().__init__(lits)
        self.act = 0.0


def parse_dimacs(text: str):
    """Parse DIMACS CNF text into (nvars, clauses)."""
    nvars = 0
    clauses = []
    cur: list[int] = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith(("c", "%")):
            continue
        if line.startswith("p"):
            parts = line.split()
            nvars = int(parts[2])
            continue
        for tok in line.split():
            x = int(tok)
            if x == 0:
                clauses.append(cur)
                cur = []
            else:
                cur.append(x)
    if cur:
        clauses.append(cur)
    return nvars, clauses


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    if len(argv) != 1:
        print("usage: ensh-cdcl FILE.cnf", file=sys.stderr)
        return 2
    with open(argv[0]) as f:
        nvars, clauses = parse_dimacs(f.read())
    solver = CdclSolver(nvars, clauses)
    if solver.solve():
        print("s SATISFIABLE")
        model = solver.model()
        for i in range(0, len(model), 20):
            print("v " + " ".join(str(x) for x in model[i:i + 20]))
        print("v 0")
        return 10
    print("s UNSATISFIABLE")
    return 20


if __name__ == "__main__":
    sys.exit(main())
