"""Exhaustive verification sweeps over parameter and word ranges.

Each named check machine-verifies one invariant against the independent
Whitehead oracle or against exact arithmetic, reporting every failure.
The word-level sweeps enumerate distinct cyclic cores: the filter and
the oracle depend only on the cyclic core of a word (both reduce first
and are rotation-invariant), so canonical representatives cover all
reduced words of the stated length.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator

from .classify import DisconnectedComplexError, classify, quotient_graph
from .farey import ConnectedComplexError, nonconnectivity_witness
from .presentations import amalgam_decomposition, goeritz_presentation
from .primitivity import (
    FilterOutcome,
    is_primitive_positive,
    is_primitive_whitehead,
    nonprimitivity_filter,
)
from .sequences import make_params, pq_sequence, verify_symmetry
from .words import CyclicWord, Word, least_rotation


@dataclass(frozen=True)
class SweepFailure:
    subject: str
    detail: str


@dataclass(frozen=True)
class SweepResult:
    check: str
    bound: int
    subjects: int
    failures: tuple[SweepFailure, ...]

    @property
    def passed(self) -> bool:
        return not self.failures


DEFAULT_BOUNDS = {
    "four-primitives": 40,
    "oz-vs-whitehead": 14,
    "filter-soundness": 12,
    "witness": 60,
    "symmetry": 40,
    "dispatch-totality": 60,
}


def coprime_pairs(max_p: int) -> Iterator[tuple[int, int]]:
    """All (p, q) with 2 <= p <= max_p, 1 <= q <= p/2, gcd(p, q) = 1."""
    for p in range(2, max_p + 1):
        for q in range(1, p // 2 + 1):
            if math.gcd(p, q) == 1:
                yield p, q


def positive_cyclic_words(max_len: int) -> Iterator[tuple[int, ...]]:
    """Canonical rotations of all positive words over {z, y}, lengths 1..max_len."""
    for n in range(1, max_len + 1):
        for mask in range(1 << n):
            codes = tuple(3 if (mask >> i) & 1 else 2 for i in range(n))
            if least_rotation(codes) == codes:
                yield codes


def _cyclically_reduced_words(max_len: int) -> Iterator[tuple[int, ...]]:
    letters = (1, -1, 2, -2)
    path: list[int] = []

    def rec() -> Iterator[tuple[int, ...]]:
        if path and (len(path) == 1 or path[-1] != -path[0]):
            yield tuple(path)
        if len(path) == max_len:
            return
        for c in letters:
            if path and c == -path[-1]:
                continue
            path.append(c)
            yield from rec()
            path.pop()

    yield from rec()


def reduced_cores(max_len: int) -> Iterator[tuple[int, ...]]:
    """One representative per cyclic core class, up to the symmetries the
    filter and the oracle share: rotation, inversion and the y sign flip."""
    flip = lambda codes: tuple(-c if abs(c) == 2 else c for c in codes)
    invert = lambda codes: tuple(-c for c in reversed(codes))
    for codes in _cyclically_reduced_words(max_len):
        canon = least_rotation(codes)
        if canon != codes:
            continue
        variants = (codes, least_rotation(invert(codes)),
                    least_rotation(flip(codes)), least_rotation(flip(invert(codes))))
        if codes == min(variants):
            yield codes


def sweep_four_primitives(max_p: int) -> SweepResult:
    failures = []
    count = 0
    for p, q in coprime_pairs(max_p):
        count += 1
        seq = pq_sequence(make_params(p, q))
        oracle = {j for j, w in enumerate(seq.words) if is_primitive_whitehead(w)}
        if oracle != set(seq.primitive_indices):
            failures.append(
                SweepFailure(
                    f"({p},{q})",
                    f"oracle says {sorted(oracle)}, expected {sorted(seq.primitive_indices)}",
                )
            )
    return SweepResult("four-primitives", max_p, count, tuple(failures))


def sweep_oz_vs_whitehead(max_len: int) -> SweepResult:
    failures = []
    count = 0
    for codes in positive_cyclic_words(max_len):
        count += 1
        w = CyclicWord(codes)
        by_form = is_primitive_positive(w)
        by_oracle = is_primitive_whitehead(w)
        if by_form != by_oracle:
            failures.append(
                SweepFailure(str(w), f"normal form says {by_form}, oracle says {by_oracle}")
            )
    return SweepResult("oz-vs-whitehead", max_len, count, tuple(failures))


def sweep_filter_soundness(max_len: int) -> SweepResult:
    failures = []
    count = 0
    for codes in reduced_cores(max_len):
        count += 1
        verdict = nonprimitivity_filter(Word(codes))
        if verdict.outcome is FilterOutcome.NOT_PRIMITIVE and is_primitive_whitehead(
            Word(codes)
        ):
            failures.append(
                SweepFailure(str(Word(codes)), "filter fired on an oracle-primitive word")
            )
    return SweepResult("filter-soundness", max_len, count, tuple(failures))


def sweep_witness(max_p: int) -> SweepResult:
    failures = []
    count = 0
    for p, q in coprime_pairs(max_p):
        params = make_params(p, q)
        if params.connected:
            continue
        count += 1
        subject = f"({p},{q})"
        trace = nonconnectivity_witness(params)
        final = trace.disks[-1]
        if final.label.e != q + 1:
            failures.append(SweepFailure(subject, f"final e = {final.label.e} != q+1"))
            continue
        if not is_primitive_whitehead(final.word):
            failures.append(SweepFailure(subject, "final disk is not oracle-primitive"))
        d0 = trace.disks[0]
        d1 = next(s for s in trace.disks if s.tag in ("L", "R"))
        for name, step in (("D0", d0), ("D1", d1)):
            if is_primitive_whitehead(step.word):
                failures.append(SweepFailure(subject, f"{name} is oracle-primitive"))
        for step in trace.disks:
            if not step.label.matches_closed_form(params):
                failures.append(
                    SweepFailure(subject, f"label {step.label.fraction} breaks the closed form")
                )
            if step.tag != "seed" and step.label.e < 1:
                failures.append(
                    SweepFailure(subject, f"step word not positive: e = {step.label.e}")
                )
        # the fractions must walk a mediant path of Farey edges to s/(t+1)
        for step in trace.disks:
            if step.pair_before is None:
                continue
            left, right = step.pair_before
            if abs(left.a * right.b - right.a * left.b) != 1:
                failures.append(SweepFailure(subject, "pair is not a Farey edge"))
            if (step.label.a, step.label.b) != (left.a + right.a, left.b + right.b):
                failures.append(SweepFailure(subject, "fraction is not the mediant"))
        if (final.label.a, final.label.b) != (trace.s, trace.t + 1):
            failures.append(SweepFailure(subject, "final fraction is not s/(t+1)"))
    return SweepResult("witness", max_p, count, tuple(failures))


def sweep_symmetry(max_p: int) -> SweepResult:
    failures = []
    count = 0
    for p, q in coprime_pairs(max_p):
        count += 1
        if not verify_symmetry(pq_sequence(make_params(p, q))):
            failures.append(SweepFailure(f"({p},{q})", "reversal symmetry fails"))
    return SweepResult("symmetry", max_p, count, tuple(failures))


def sweep_dispatch_totality(max_p: int) -> SweepResult:
    """Structural cross-consistency: connectivity criterion agreement,
    dimension against triples, sigma generators against exchangeable
    pair factors, and factor counts against the quotient graph."""
    failures = []
    count = 0
    for p, q in coprime_pairs(max_p):
        count += 1
        subject = f"({p},{q})"
        params = make_params(p, q)
        structure = classify(params)

        try:
            pres = goeritz_presentation(params)
            pres_defined = True
        except DisconnectedComplexError:
            pres, pres_defined = None, False
        try:
            nonconnectivity_witness(params)
            witness_defined = True
        except ConnectedComplexError:
            witness_defined = False
        if pres_defined != structure.connected or witness_defined == structure.connected:
            failures.append(
                SweepFailure(
                    subject,
                    f"connected={structure.connected} but presentation defined="
                    f"{pres_defined}, witness defined={witness_defined}",
                )
            )
            continue
        two_dim = structure.dimension == 2
        if structure.connected and two_dim != (q == 2 or p == 2 * q + 1):
            failures.append(SweepFailure(subject, "dimension disagrees with the triple criterion"))
        if two_dim != (structure.triple_exists and structure.connected):
            failures.append(SweepFailure(subject, "dimension-2 and triple existence disagree"))
        if not structure.connected:
            continue
        amalgam = amalgam_decomposition(params)
        expected_factors = structure.quotient_graph.vertex_count
        if len(amalgam.factors) != expected_factors:
            failures.append(
                SweepFailure(
                    subject,
                    f"{len(amalgam.factors)} factors but quotient graph "
                    f"{structure.quotient_graph.value}",
                )
            )
        if len(amalgam.edges) != expected_factors - 1:
            failures.append(SweepFailure(subject, "edge count is not factor count - 1"))
        sigma_gens = sum(1 for n in pres.generator_names() if n.startswith("sigma"))
        sigma_factors = sum(
            1
            for f in amalgam.factors
            if f.presentation is not None
            and any(n.startswith("sigma") for n in f.presentation.generator_names())
        )
        if sigma_gens != sigma_factors:
            failures.append(
                SweepFailure(
                    subject,
                    f"{sigma_gens} sigma generators but {sigma_factors} exchangeable pair factors",
                )
            )
        if quotient_graph(params) is not structure.quotient_graph:
            failures.append(SweepFailure(subject, "quotient graph mismatch"))
    return SweepResult("dispatch-totality", max_p, count, tuple(failures))


_CHECKS = {
    "four-primitives": sweep_four_primitives,
    "oz-vs-whitehead": sweep_oz_vs_whitehead,
    "filter-soundness": sweep_filter_soundness,
    "witness": sweep_witness,
    "symmetry": sweep_symmetry,
    "dispatch-totality": sweep_dispatch_totality,
}


def run_sweep(check: str, bound: int | None = None) -> SweepResult:
    """Run one named check up to the given bound (a maximal p, or a maximal
    word length for the word-level checks)."""
    if check not in _CHECKS:
        raise ValueError(
            f"unknown check {check!r}; choose from {', '.join(sorted(_CHECKS))}"
        )
    if bound is None:
        bound = DEFAULT_BOUNDS[check]
    return _CHECKS[check](bound)
