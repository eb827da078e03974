"""Replacement calculus along the Farey graph.

When p is not +1 or -1 modulo q, write p = q*m + r with 2 <= r <= q-2.
Starting from the disks with boundary words (xy^q)^(m-1)*x*y^(q+r) and
x, labeled 1/0 and 0/1, each replacement step creates the disk whose
fraction is the mediant of the current ordered pair and whose word is
(xy^q)^(d1+d2+1)*x*y^(e1+e2-q).  Running the L/R schedule read off the
continued fraction of s/(t+1), where s*r - (t+1)*q = 1, ends at a
primitive disk separated from the starting one by non-primitive disks,
witnessing that the primitive disk complex is disconnected.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .sequences import PqParams
from .words import Word


class ConnectedComplexError(ValueError):
    """Witness construction refused: the complex is connected."""


@dataclass(frozen=True)
class FareyLabel:
    """A disk label: fraction a/b plus the word exponents d and e.

    The labeled disk has boundary word (xy^q)^d x y^e.  Against ambient
    parameters the closed forms are d = a*m + b - 1 and
    e = a*r - (b-1)*q; the replacement recursion keeps both.
    """

    a: int
    b: int
    d: int
    e: int

    @property
    def fraction(self) -> str:
        return f"{self.a}/{self.b}"

    def word(self, q: int) -> Word:
        block = [1] + [2] * q
        return Word(tuple(block * self.d) + (1,) + (2,) * self.e)

    def matches_closed_form(self, params: PqParams) -> bool:
        return (
            self.d == self.a * params.m + self.b - 1
            and self.e == self.a * params.r - (self.b - 1) * params.q
        )


def continued_fraction(numerator: int, denominator: int) -> tuple[int, ...]:
    """Partial quotients of numerator/denominator with the last one >= 2.

    All quotients are >= 1; a trailing quotient of 1 is absorbed into
    its predecessor, which makes the expansion unique.
    """
    if denominator < 1:
        raise ValueError(f"denominator must be positive, got {denominator}")
    if numerator <= denominator:
        raise ValueError(
            f"need numerator > denominator, got {numerator}/{denominator}"
        )
    if math.gcd(numerator, denominator) != 1:
        raise ValueError(f"{numerator}/{denominator} is not in lowest terms")
    quotients = []
    a, b = numerator, denominator
    while b:
        quotients.append(a // b)
        a, b = b, a % b
    if len(quotients) > 1 and quotients[-1] == 1:
        quotients.pop()
        quotients[-1] += 1
    return tuple(quotients)


def replacement(left: FareyLabel, right: FareyLabel, side: str, params: PqParams) -> FareyLabel:
    """The mediant label produced from an ordered pair.

    side is "R" when the new disk takes the right slot of the next pair
    and "L" when it takes the left slot; the label itself is the same
    either way.
    """
    if side not in ("L", "R"):
        raise ValueError(f"side must be 'L' or 'R', got {side!r}")
    return FareyLabel(
        a=left.a + right.a,
        b=left.b + right.b,
        d=left.d + right.d + 1,
        e=left.e + right.e - params.q,
    )


def seed_labels(params: PqParams) -> tuple[FareyLabel, FareyLabel]:
    """The starting labels: D_0 = 1/0 (word of E_m) and D_-1 = 0/1 (word x)."""
    if params.connected:
        raise ConnectedComplexError(
            f"{params}: p = {params.p} is congruent to +1 or -1 mod q = {params.q}; "
            "the primitive disk complex is connected and no witness exists"
        )
    d0 = FareyLabel(a=1, b=0, d=params.m - 1, e=params.q + params.r)
    d_minus_1 = FareyLabel(a=0, b=1, d=0, e=0)
    return d0, d_minus_1


def solve_replacement_equation(params: PqParams) -> tuple[int, int]:
    """Minimal positive s with s*r - (t+1)*q = 1 for some t >= 0."""
    q, r = params.q, params.r
    s = pow(r, -1, q)
    t_plus_1 = (s * r - 1) // q
    assert t_plus_1 >= 1
    return s, t_plus_1 - 1


@dataclass(frozen=True)
class ReplacementStep:
    """One disk of the trace together with the ordered pair it came from."""

    tag: str  # "seed", "L" or "R"
    label: FareyLabel
    word: Word
    pair_before: Optional[tuple[FareyLabel, FareyLabel]] = None


@dataclass(frozen=True)
class ReplacementTrace:
    params: PqParams
    s: int
    t: int
    cf: tuple[int, ...]
    disks: tuple[ReplacementStep, ...]

    @property
    def final(self) -> ReplacementStep:
        return self.disks[-1]


def nonconnectivity_witness(params: PqParams) -> ReplacementTrace:
    """Run the full replacement schedule; the final disk is primitive
    while the two starting disks next to it are not.

    The schedule alternates blocks of R- and L-replacements whose sizes
    are the partial quotients of s/(t+1); the final label is s/(t+1)
    and its word exponent e equals q + 1 exactly.
    """
    d0, d_minus_1 = seed_labels(params)
    s, t = solve_replacement_equation(params)
    cf = continued_fraction(s, t + 1)
    q = params.q
    disks = [
        ReplacementStep("seed", d0, d0.word(q)),
        ReplacementStep("seed", d_minus_1, d_minus_1.word(q)),
    ]
    pair = (d0, d_minus_1)
    for block, size in enumerate(cf):
        side = "R" if block % 2 == 0 else "L"
        for _ in range(size):
            new = replacement(pair[0], pair[1], side, params)
            disks.append(ReplacementStep(side, new, new.word(q), pair_before=pair))
            pair = (pair[0], new) if side == "R" else (new, pair[1])
    final = disks[-1].label
    assert (final.a, final.b) == (s, t + 1)
    assert final.e == q + 1
    return ReplacementTrace(params=params, s=s, t=t, cf=cf, disks=tuple(disks))
