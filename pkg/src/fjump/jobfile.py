"""The line-oriented ``.fj`` input format.

    # comment
    ring p=<prime> vars=<name>(,<name>)*
    ideal <name> = <poly>(, <poly>)*

One ring per file; '#' starts a comment; blank lines are skipped.  Errors
carry 1-based line and column numbers.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .errors import FjumpError, JobFileError, PolyParseError
from .gfp import PrimeField
from .groebner import Ideal
from .multipoly import RingCtx, parse

_RING_RE = re.compile(r"^ring\s+p\s*=\s*(\d+)\s+vars\s*=\s*(.+?)\s*$")
_IDEAL_RE = re.compile(r"^ideal\s+([A-Za-z_][A-Za-z0-9_]*)\s*=\s*(.*)$")


@dataclass
class JobInput:
    ring: RingCtx
    ideals: dict[str, Ideal] = field(default_factory=dict)

    def ideal(self, name: str) -> Ideal:
        try:
            return self.ideals[name]
        except KeyError:
            raise JobFileError(f"ideal {name!r} is not defined in the input", 0) from None


def load_job(text: str) -> JobInput:
    job: JobInput | None = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        stripped = line.strip()
        if stripped.startswith("ring"):
            if job is not None:
                raise JobFileError("only one ring per file", lineno)
            m = _RING_RE.match(stripped)
            if m is None:
                raise JobFileError("expected: ring p=<prime> vars=<name>,<name>,...",
                                   lineno)
            names = tuple(v.strip() for v in m.group(2).split(","))
            try:
                ring = RingCtx(PrimeField(int(m.group(1))), names)
            except FjumpError as exc:
                raise JobFileError(str(exc), lineno) from exc
            job = JobInput(ring)
        elif stripped.startswith("ideal"):
            if job is None:
                raise JobFileError("the ring line must come first", lineno)
            m = _IDEAL_RE.match(stripped)
            if m is None:
                raise JobFileError("expected: ideal <name> = <poly>, <poly>, ...",
                                   lineno)
            name = m.group(1)
            if name in job.ideals:
                raise JobFileError(f"ideal {name!r} defined twice", lineno)
            body = m.group(2)
            if not body.strip():
                raise JobFileError(f"ideal {name!r} has no generators "
                                   "(use 0 for the zero ideal)", lineno)
            offset = m.start(2) + (len(line) - len(line.lstrip()))
            gens = []
            pos = 0
            for chunk in body.split(","):
                try:
                    gens.append(parse(chunk, job.ring))
                except PolyParseError as exc:
                    col = offset + pos + exc.offset + 1
                    raise JobFileError(exc.message, lineno, col) from exc
                pos += len(chunk) + 1
            job.ideals[name] = Ideal(job.ring, gens)
        else:
            raise JobFileError(f"unrecognized directive {stripped.split()[0]!r}",
                               lineno)
    if job is None:
        raise JobFileError("input defines no ring", 1)
    return job
