"""Plain-text instance and solution files.

Instance file::

    # comment
    p cpem <nA> <nB> <m> <k> <c>
    e <a-index> <b-index> <weight>      (m lines)
    x <edge-ordinal> <edge-ordinal>     (k lines)

Solution file::

    w <weight>
    m <edge-ordinal>                    (ascending)
    c <edge-ordinal> <edge-ordinal>     (realized crossings, ascending)

All indices and ordinals are 1-based.  Weights are decimals with at most
``precision`` fractional digits and are written with exactly that many.
"""

from __future__ import annotations

from dataclasses import dataclass

from .model import (
    Edge,
    Instance,
    InstanceError,
    NotAMatchingError,
    Solution,
    canonical_pair,
    format_weight,
    is_c_cpe,
    realized_crossings,
    scale_weight,
    validate,
)

DEFAULT_PRECISION = 6


class ParseError(ValueError):
    def __init__(self, errors: list[str]):
        super().__init__("; ".join(errors))
        self.errors = errors


def _int(token: str, lineno: int, errors: list[str]) -> int | None:
    try:
        return int(token)
    except ValueError:
        errors.append(f"line {lineno}: expected integer, got {token!r}")
        return None


def parse_instance(text: str, precision: int = DEFAULT_PRECISION) -> Instance:
    errors: list[str] = []
    header = None
    edges: list[Edge] = []
    pairs: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tok = line.split()
        kind = tok[0]
        if kind == "p":
            if header is not None:
                errors.append(f"line {lineno}: duplicate header")
                continue
            if len(tok) != 7 or tok[1] != "cpem":
                errors.append(f"line {lineno}: malformed header, expected 'p cpem nA nB m k c'")
                continue
            vals = [_int(t, lineno, errors) for t in tok[2:]]
            if None in vals:
                continue
            header = vals
        elif header is None:
            errors.append(f"line {lineno}: '{kind}' line before header")
        elif kind == "e":
            if len(tok) != 4:
                errors.append(f"line {lineno}: malformed edge line")
                continue
            a, b = _int(tok[1], lineno, errors), _int(tok[2], lineno, errors)
            try:
                w = scale_weight(tok[3], precision)
            except Exception:
                errors.append(f"line {lineno}: bad weight {tok[3]!r} at precision {precision}")
                continue
            if a is not None and b is not None:
                edges.append(Edge(a, b, w))
        elif kind == "x":
            if len(tok) != 3:
                errors.append(f"line {lineno}: malformed pair line")
                continue
            e, f = _int(tok[1], lineno, errors), _int(tok[2], lineno, errors)
            if e is None or f is None:
                continue
            if e == f:
                errors.append(f"line {lineno}: self-pair x {e} {f}")
                continue
            pairs.append((e - 1, f - 1))
        else:
            errors.append(f"line {lineno}: unknown line type {kind!r}")
    if header is None and not errors:
        errors.append("missing header line")
    if errors:
        raise ParseError(errors)
    n_a, n_b, m, k, c = header
    if len(edges) != m:
        errors.append(f"header declares m={m} but {len(edges)} edge lines found")
    if len(pairs) != k:
        errors.append(f"header declares k={k} but {len(pairs)} pair lines found")
    if errors:
        raise ParseError(errors)
    instance = Instance(n_a, n_b, tuple(edges), frozenset(pairs), c, precision)
    problems = validate(instance)
    if problems:
        raise InstanceError(problems)
    return instance


def write_instance(instance: Instance) -> str:
    lines = [f"p cpem {instance.n_a} {instance.n_b} {instance.m} {instance.k} {instance.c}"]
    for a, b, w in instance.edges:
        lines.append(f"e {a} {b} {format_weight(w, instance.precision)}")
    for e, f in instance.pairs:
        lines.append(f"x {e + 1} {f + 1}")
    return "\n".join(lines) + "\n"


def write_solution(solution: Solution, instance: Instance) -> str:
    lines = [f"w {format_weight(solution.weight, instance.precision)}"]
    lines += [f"m {e + 1}" for e in sorted(solution.matching)]
    lines += [f"c {e + 1} {f + 1}" for e, f in sorted(solution.realized_crossings)]
    return "\n".join(lines) + "\n"


@dataclass
class SolutionRecord:
    weight: int
    matching: list[int]
    crossings: list[tuple[int, int]]


def parse_solution(text: str, precision: int = DEFAULT_PRECISION) -> SolutionRecord:
    errors: list[str] = []
    weight = None
    matching: list[int] = []
    crossings: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tok = line.split()
        if tok[0] == "w" and len(tok) == 2:
            try:
                weight = scale_weight(tok[1], precision)
            except Exception:
                errors.append(f"line {lineno}: bad weight {tok[1]!r}")
        elif tok[0] == "m" and len(tok) == 2:
            e = _int(tok[1], lineno, errors)
            if e is not None:
                matching.append(e - 1)
        elif tok[0] == "c" and len(tok) == 3:
            e, f = _int(tok[1], lineno, errors), _int(tok[2], lineno, errors)
            if e is not None and f is not None:
                crossings.append(canonical_pair(e - 1, f - 1))
        else:
            errors.append(f"line {lineno}: malformed solution line")
    if weight is None and not errors:
        errors.append("missing weight line")
    if errors:
        raise ParseError(errors)
    return SolutionRecord(weight, matching, crossings)


def check_solution(record: SolutionRecord, instance: Instance) -> list[str]:
    """Problems with a claimed solution: validity, c-CPE feasibility and weight."""
    problems = []
    if len(set(record.matching)) != len(record.matching):
        problems.append("duplicate matched edge")
    bad = [e + 1 for e in record.matching if not 0 <= e < instance.m]
    if bad:
        return problems + [f"edge ordinals out of range: {bad}"]
    try:
        if not is_c_cpe(record.matching, instance):
            problems.append(f"matching is not {instance.c}-CPE")
    except NotAMatchingError as exc:
        problems.append(f"not a matching: {exc}")
    total = instance.weight_of(record.matching)
    if total != record.weight:
        problems.append(f"declared weight {format_weight(record.weight, instance.precision)} "
                        f"!= edge sum {format_weight(total, instance.precision)}")
    if set(record.crossings) != realized_crossings(record.matching, instance):
        problems.append("declared crossings differ from realized crossings")
    return problems
