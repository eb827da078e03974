"""Primitivity of elements of the rank-two free group, by three routes.

* the Osborne-Zieschang normal form for words with positive letters only,
* a quick sound-but-partial filter that can certify non-primitivity,
* an independent Whitehead-algorithm oracle: greedily shorten the cyclic
  word with Whitehead automorphisms; by peak reduction a primitive
  element admits a strictly shortening automorphism whenever its cyclic
  length exceeds one, so the terminal length decides.

Words over {z, y} are accepted everywhere; z is treated as the first
generator in place of x.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

from .words import (
    CyclicWord,
    Word,
    _caret,
    _coerce_codes,
    cyclic_reduce_codes,
    free_reduce_codes,
)

_X, _Y = 1, 2


def _normalize_rank2(w) -> tuple[int, ...]:
    """Codes over {1, 2}, renaming z to the first-generator slot."""
    codes = _coerce_codes(w)
    bases = {abs(c) for c in codes}
    if 1 in bases and 3 in bases:
        raise ValueError("word mixes x and z; no generating pair applies")
    return tuple(c if abs(c) != 3 else (1 if c > 0 else -1) for c in codes)


@dataclass(frozen=True)
class WhiteheadAutomorphism:
    """An automorphism of <x, y> given by its images of the generators.

    kind "I" is a signed permutation of the generators; kind "II" fixes a
    multiplier letter a and sends the other generator to one of b*a,
    a^-1*b or a^-1*b*a.
    """

    kind: str
    label: str
    image_x: tuple[int, ...]
    image_y: tuple[int, ...]
    inverse_x: tuple[int, ...]
    inverse_y: tuple[int, ...]
    _table: dict = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        inv = lambda img: tuple(-c for c in reversed(img))
        object.__setattr__(
            self,
            "_table",
            {
                _X: self.image_x,
                -_X: inv(self.image_x),
                _Y: self.image_y,
                -_Y: inv(self.image_y),
            },
        )

    def apply_codes(self, codes: tuple[int, ...]) -> tuple[int, ...]:
        out: list[int] = []
        table = self._table
        for c in codes:
            out.extend(table[c])
        return free_reduce_codes(out)

    def apply(self, w) -> Word:
        return Word(self.apply_codes(_normalize_rank2(w)))

    def inverse_codes(self, codes: tuple[int, ...]) -> tuple[int, ...]:
        inv = lambda img: tuple(-c for c in reversed(img))
        table = {
            _X: self.inverse_x,
            -_X: inv(self.inverse_x),
            _Y: self.inverse_y,
            -_Y: inv(self.inverse_y),
        }
        out: list[int] = []
        for c in codes:
            out.extend(table[c])
        return free_reduce_codes(out)

    def __str__(self) -> str:
        return self.label


def _map_letter(image_x: tuple[int, ...], image_y: tuple[int, ...], c: int) -> tuple[int, ...]:
    img = image_x if abs(c) == _X else image_y
    return img if c > 0 else tuple(-v for v in reversed(img))


def _make_type_i() -> tuple[WhiteheadAutomorphism, ...]:
    maps = []
    for tx, ty in ((_X, _Y), (_Y, _X)):
        for sx in (1, -1):
            for sy in (1, -1):
                maps.append(((sx * tx,), (sy * ty,)))
    autos = []
    for image_x, image_y in maps:
        # the inverse of a signed permutation is found among the same eight maps
        inverse_x = inverse_y = None
        for cand_x, cand_y in maps:
            comp_x = _map_letter(cand_x, cand_y, image_x[0])
            comp_y = _map_letter(cand_x, cand_y, image_y[0])
            if comp_x == (_X,) and comp_y == (_Y,):
                inverse_x, inverse_y = cand_x, cand_y
                break
        label = f"x -> {_caret(image_x)}, y -> {_caret(image_y)}"
        autos.append(
            WhiteheadAutomorphism("I", label, image_x, image_y, inverse_x, inverse_y)
        )
    return tuple(autos)


def _make_type_ii() -> tuple[WhiteheadAutomorphism, ...]:
    autos = []
    for a in (_X, -_X, _Y, -_Y):
        b = _Y if abs(a) == _X else _X
        for img_b, inv_b in (
            ((b, a), (b, -a)),
            ((-a, b), (a, b)),
            ((-a, b, a), (a, b, -a)),
        ):
            if abs(a) == _X:
                image_x, image_y = (_X,), img_b
                inverse_x, inverse_y = (_X,), inv_b
            else:
                image_x, image_y = img_b, (_Y,)
                inverse_x, inverse_y = inv_b, (_Y,)
            moved = "y" if abs(a) == _X else "x"
            label = f"{moved} -> {_caret(img_b)}"
            autos.append(
                WhiteheadAutomorphism("II", label, image_x, image_y, inverse_x, inverse_y)
            )
    return tuple(autos)


WHITEHEAD_TYPE_I = _make_type_i()
WHITEHEAD_TYPE_II = _make_type_ii()
WHITEHEAD_AUTOMORPHISMS = WHITEHEAD_TYPE_I + WHITEHEAD_TYPE_II


def _find_shortening(codes: tuple[int, ...]) -> Optional[tuple[WhiteheadAutomorphism, tuple[int, ...]]]:
    """First enumerated automorphism whose image is cyclically shorter.

    Type I maps permute letters and never change cyclic length, so only
    the type II candidates can shorten.
    """
    n = len(codes)
    for auto in WHITEHEAD_TYPE_II:
        image = cyclic_reduce_codes(auto.apply_codes(codes))
        if len(image) < n:
            return auto, image
    return None


def whitehead_reduce_step(w) -> Optional[tuple[WhiteheadAutomorphism, CyclicWord]]:
    """One strictly shortening Whitehead move, or None at a local minimum."""
    codes = cyclic_reduce_codes(free_reduce_codes(_normalize_rank2(w)))
    found = _find_shortening(codes)
    if found is None:
        return None
    auto, image = found
    return auto, CyclicWord(image)


def whitehead_trace(w) -> tuple[bool, list[tuple[WhiteheadAutomorphism, CyclicWord]]]:
    """Run the greedy reduction, returning the verdict and the move chain."""
    codes = cyclic_reduce_codes(free_reduce_codes(_normalize_rank2(w)))
    chain: list[tuple[WhiteheadAutomorphism, CyclicWord]] = []
    while len(codes) > 1:
        found = _find_shortening(codes)
        if found is None:
            break
        auto, codes = found
        chain.append((auto, CyclicWord(codes)))
    return len(codes) == 1, chain


def is_primitive_whitehead(w) -> bool:
    """Whitehead-algorithm primitivity oracle."""
    codes = cyclic_reduce_codes(free_reduce_codes(_normalize_rank2(w)))
    while len(codes) > 1:
        found = _find_shortening(codes)
        if found is None:
            return False
        codes = found[1]
    return len(codes) == 1


def oz_canonical_word(m: int, n: int) -> CyclicWord:
    """The positive normal form with m z's and n y's, for 1 <= m <= n coprime.

    Letter i of the product is z exactly when 1 + (i-1)*m falls in the
    residues 1..m modulo m+n.
    """
    if m < 1 or n < m:
        raise ValueError(f"need 1 <= m <= n, got ({m}, {n})")
    if math.gcd(m, n) != 1:
        raise ValueError(f"({m}, {n}) are not coprime")
    period = m + n
    codes = []
    for k in range(period):
        i = (1 + k * m) % period
        codes.append(3 if 1 <= i <= m else 2)
    return CyclicWord(codes)


def is_primitive_positive(w, symbols: Optional[tuple[str, str]] = None) -> bool:
    """Positive-word primitivity via the normal-form characterization.

    The word must contain only positive letters over a two-letter
    alphabet; the count of the non-y symbol may exceed the y count, in
    which case the symbols are exchanged before comparison.
    """
    codes = _normalize_rank2(w)
    if any(c < 0 for c in codes):
        raise ValueError("word has negative letters; use the Whitehead oracle")
    m = sum(1 for c in codes if c == _X)
    n = sum(1 for c in codes if c == _Y)
    if m == 0 or n == 0:
        return len(codes) == 1
    if math.gcd(m, n) != 1:
        return False
    if m > n:
        codes = tuple(_Y if c == _X else _X for c in codes)
        m, n = n, m
    as_zy = tuple(3 if c == _X else 2 for c in codes)
    return CyclicWord(as_zy) == oz_canonical_word(m, n)


class FilterOutcome(Enum):
    NOT_PRIMITIVE = "not-primitive"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class FilterWitness:
    normalization: str
    first: str
    first_offset: int
    second: str
    second_offset: int


@dataclass(frozen=True)
class FilterVerdict:
    outcome: FilterOutcome
    witness: Optional[FilterWitness] = None


def _scan_patterns(codes: tuple[int, ...]) -> Optional[tuple[str, int, str, int]]:
    """Look for {xy, xy^-1} or {xy^n x, y^(n+2)} in a cyclically reduced word."""
    n = len(codes)
    if n < 2:
        return None
    xy_at = xY_at = None
    for i, c in enumerate(codes):
        if c == _X:
            nxt = codes[(i + 1) % n]
            if nxt == _Y and xy_at is None:
                xy_at = i
            elif nxt == -_Y and xY_at is None:
                xY_at = i
    if xy_at is not None and xY_at is not None:
        return ("xy", xy_at, "xy^-1", xY_at)

    x_positions = [i for i, c in enumerate(codes) if c == _X]
    if len(x_positions) < 2:
        return None
    # clean gaps: y-power subwords flanked by two x's
    gaps: list[tuple[int, int]] = []
    for k, start in enumerate(x_positions):
        end = x_positions[(k + 1) % len(x_positions)]
        width = (end - start - 1) % n
        if all(codes[(start + 1 + t) % n] == _Y for t in range(width)):
            gaps.append((width, start))
    if not gaps:
        return None
    # longest cyclic run of positive y letters
    best_run, best_at = 0, 0
    i = 0
    while i < n:
        if codes[i] == _Y and (i > 0 or codes[-1] != _Y):
            j = i
            run = 0
            while run < n and codes[j % n] == _Y:
                run += 1
                j += 1
            if run > best_run:
                best_run, best_at = run, i
            i = j
        else:
            i += 1
    gap, gap_at = min(gaps)
    if best_run >= gap + 2:
        first = "x^2" if gap == 0 else ("xyx" if gap == 1 else f"xy^{gap}x")
        return (first, gap_at, f"y^{gap + 2}", best_at)
    return None


def nonprimitivity_filter(w) -> FilterVerdict:
    """Sound partial test: NOT_PRIMITIVE is definitive, INCONCLUSIVE decides nothing.

    The word is scanned cyclically under the four orientation
    normalizations: as given, inverted, with the sign of y flipped, and
    both.
    """
    core = cyclic_reduce_codes(free_reduce_codes(_normalize_rank2(w)))
    inverted = tuple(-c for c in reversed(core))
    flip = lambda codes: tuple(-c if abs(c) == _Y else c for c in codes)
    variants = (
        ("w", core),
        ("w^-1", inverted),
        ("y-flip of w", flip(core)),
        ("y-flip of w^-1", flip(inverted)),
    )
    for name, codes in variants:
        hit = _scan_patterns(codes)
        if hit is not None:
            first, i, second, j = hit
            return FilterVerdict(
                FilterOutcome.NOT_PRIMITIVE,
                FilterWitness(name, first, i, second, j),
            )
    return FilterVerdict(FilterOutcome.INCONCLUSIVE)
