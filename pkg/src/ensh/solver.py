"""External SAT solver driver: DIMACS file in, SAT-competition output out.

The solver is an ordinary executable invoked as ``solver FILE.cnf``.  It is
resolved from, in order: an explicit path, the ENSH_SOLVER environment
variable, or the bundled ``ensh-cdcl`` reference solver.
"""

from __future__ import annotations

import os
import shutil
import subprocess
import sys
import tempfile
from dataclasses import dataclass
from typing import Optional

from .errors import EngineError

ENV_VAR = "ENSH_SOLVER"


@dataclass(frozen=True)
class SatOutcome:
    satisfiable: bool
    model: tuple


def resolve_solver(solver: Optional[str] = None) -> list:
    """Command argv prefix for the configured solver."""
    path = solver or os.environ.get(ENV_VAR)
    if path:
        found = shutil.which(path) or (path if os.path.exists(path) else None)
        if not found:
            raise EngineError(f"solver binary not found: {path}")
        return [found]
    bundled = shutil.which("ensh-cdcl")
    if bundled:
        return [bundled]
    # last resort: run the bundled solver module in-place
    return [sys.executable, "-m", "ensh.cdcl"]


def solver_identity(solver: Optional[str] = None) -> str:
    return " ".join(os.path.basename(part) for part in resolve_solver(solver))


def solve_external(dimacs: str, solver: Optional[str] = None,
                   timeout: Optional[float] = None) -> SatOutcome:
    """Run the solver on the CNF text and parse its verdict and model."""
    argv = resolve_solver(solver)
    with tempfile.NamedTemporaryFile("w", suffix=".cnf", delete=False) as f:
        f.write(dimacs)
        path = f.name
    try:
        try:
            proc = subprocess.run(argv + [path], capture_output=True,
                                  text=True, timeout=timeout)
        except subprocess.TimeoutExpired:
            raise EngineError(f"solver timed out after {timeout}s")
        except OSError as exc:
            raise EngineError(f"could not run solver {argv}: {exc}")
    finally:
        os.unlink(path)
    verdict = None
    lits = []
    for line in proc.stdout.splitlines():
        line = line.strip()
        if line.startswith("s "):
            tag = line[2:].strip()
            if tag == "SATISFIABLE":
                verdict = True
            elif tag == "UNSATISFIABLE":
                verdict = False
        elif line.startswith("v "):
            for tok in line[2:].split():
                x = int(tok)
                if x != 0:
                    lits.append(x)
    if verdict is None:
        raise EngineError(
            "solver produced no verdict line; exit code "
            f"{proc.returncode}; output head: {proc.stdout[:200]!r} "
            f"stderr head: {proc.stderr[:200]!r}")
    if verdict and not lits:
        raise EngineError("solver reported SAT but printed no model")
    return SatOutcome(verdict, tuple(lits))
