"""Exact algebra of words in a free group of rank two.

Letters are stored as nonzero integers: +1/-1 for x/x^-1, +2/-2 for
y/y^-1 and +3/-3 for z/z^-1.  A word is a freely reduced tuple of such
codes; a cyclic word is additionally cyclically reduced and kept in a
canonical rotation, so equality of cyclic words is plain tuple equality.

The two-letter alphabets used in practice are {x, y} (boundary words
read off a meridian system of a handlebody) and {z, y} (an abstract
generating pair).  The rotation order puts x and z before y, and each
positive letter before its inverse.
"""

from __future__ import annotations

from typing import Iterable, Iterator, NamedTuple, Union

_SYMBOL_CODES = {"x": 1, "y": 2, "z": 3}
_CODE_SYMBOLS = {1: "x", 2: "y", 3: "z"}

# x and z sort before y; a positive letter sorts before its inverse.
_ROTATION_RANK = {1: 0, 2: 1, 3: 0}


class WordParseError(ValueError):
    """Malformed word text; carries the byte offset and the expected token."""

    def __init__(self, text: str, offset: int, expected: str):
        self.text = text
        self.offset = offset
        self.expected = expected
        found = repr(text[offset]) if offset < len(text) else "end of input"
        super().__init__(f"offset {offset}: expected {expected}, found {found}")


class Letter(NamedTuple):
    symbol: str
    sign: int

    @property
    def code(self) -> int:
        return _SYMBOL_CODES[self.symbol] * self.sign

    def inverse(self) -> "Letter":
        return Letter(self.symbol, -self.sign)

    def __str__(self) -> str:
        return self.symbol if self.sign > 0 else self.symbol.upper()


def _check_code(code: int) -> int:
    if not isinstance(code, int) or abs(code) not in _CODE_SYMBOLS:
        raise ValueError(f"not a letter code: {code!r}")
    return code


def _coerce_codes(letters) -> tuple[int, ...]:
    if isinstance(letters, (Word, CyclicWord)):
        return letters.codes
    out = []
    for item in letters:
        if isinstance(item, Letter):
            if item.symbol not in _SYMBOL_CODES or item.sign not in (1, -1):
                raise ValueError(f"bad letter {item!r}")
            out.append(item.code)
        else:
            out.append(_check_code(item))
    return tuple(out)


def free_reduce_codes(codes: Iterable[int]) -> tuple[int, ...]:
    """Cancel adjacent mutually inverse letters until none remain."""
    out: list[int] = []
    for c in codes:
        if out and out[-1] == -c:
            out.pop()
        else:
            out.append(c)
    return tuple(out)


def cyclic_reduce_codes(codes: tuple[int, ...]) -> tuple[int, ...]:
    """Strip mutually inverse first/last letters of a freely reduced word."""
    i, j = 0, len(codes)
    while j - i >= 2 and codes[i] == -codes[j - 1]:
        i += 1
        j -= 1
    return codes[i:j]


def _letter_key(code: int) -> tuple[int, int]:
    return (_ROTATION_RANK[abs(code)], 0 if code > 0 else 1)


def least_rotation(codes: tuple[int, ...]) -> tuple[int, ...]:
    """The lexicographically least rotation under the fixed letter order."""
    n = len(codes)
    if n <= 1:
        return tuple(codes)
    keys = [_letter_key(c) for c in codes]
    best = 0
    for i in range(1, n):
        for k in range(n):
            a = keys[(i + k) % n]
            b = keys[(best + k) % n]
            if a < b:
                best = i
                break
            if a > b:
                break
    return codes[best:] + codes[:best]


def _caret(codes: tuple[int, ...]) -> str:
    if not codes:
        return "1"
    parts = []
    i = 0
    n = len(codes)
    while i < n:
        c = codes[i]
        j = i
        while j < n and codes[j] == c:
            j += 1
        exp = (j - i) if c > 0 else -(j - i)
        sym = _CODE_SYMBOLS[abs(c)]
        parts.append(sym if exp == 1 else f"{sym}^{exp}")
        i = j
    return "".join(parts)


def _spell(codes: tuple[int, ...]) -> str:
    return "".join(
        _CODE_SYMBOLS[abs(c)] if c > 0 else _CODE_SYMBOLS[abs(c)].upper()
        for c in codes
    )


class Word:
    """A freely reduced word.  Immutable; concatenation reduces."""

    __slots__ = ("_codes",)

    def __init__(self, letters=()):
        object.__setattr__(self, "_codes", free_reduce_codes(_coerce_codes(letters)))

    @property
    def codes(self) -> tuple[int, ...]:
        return self._codes

    @property
    def letters(self) -> tuple[Letter, ...]:
        return tuple(
            Letter(_CODE_SYMBOLS[abs(c)], 1 if c > 0 else -1) for c in self._codes
        )

    def spell(self) -> str:
        return _spell(self._codes)

    def __len__(self) -> int:
        return len(self._codes)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __eq__(self, other) -> bool:
        return isinstance(other, Word) and self._codes == other._codes

    def __hash__(self) -> int:
        return hash(("Word", self._codes))

    def __mul__(self, other: "Word") -> "Word":
        return Word(self._codes + _coerce_codes(other))

    def __invert__(self) -> "Word":
        return Word(tuple(-c for c in reversed(self._codes)))

    def __pow__(self, n: int) -> "Word":
        if n < 0:
            return (~self) ** (-n)
        return Word(self._codes * n)

    def __str__(self) -> str:
        return _caret(self._codes)

    def __repr__(self) -> str:
        return f"Word({_caret(self._codes)!r})"

    def __setattr__(self, name, value):
        raise AttributeError("Word is immutable")


class CyclicWord:
    """A cyclically reduced word up to rotation, stored canonically."""

    __slots__ = ("_codes",)

    def __init__(self, letters=()):
        codes = cyclic_reduce_codes(free_reduce_codes(_coerce_codes(letters)))
        object.__setattr__(self, "_codes", least_rotation(codes))

    @property
    def codes(self) -> tuple[int, ...]:
        return self._codes

    @property
    def letters(self) -> tuple[Letter, ...]:
        return Word(self._codes).letters

    def rotations(self) -> Iterator[tuple[int, ...]]:
        n = len(self._codes)
        for i in range(max(n, 1)):
            yield self._codes[i:] + self._codes[:i]

    def to_word(self) -> Word:
        return Word(self._codes)

    def spell(self) -> str:
        return _spell(self._codes)

    def __len__(self) -> int:
        return len(self._codes)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __eq__(self, other) -> bool:
        return isinstance(other, CyclicWord) and self._codes == other._codes

    def __hash__(self) -> int:
        return hash(("CyclicWord", self._codes))

    def __str__(self) -> str:
        return _caret(self._codes)

    def __repr__(self) -> str:
        return f"CyclicWord({_caret(self._codes)!r})"

    def __setattr__(self, name, value):
        raise AttributeError("CyclicWord is immutable")


WordLike = Union[Word, CyclicWord, Iterable]


def reduce(letters: WordLike) -> Word:
    """Free reduction of a raw letter sequence."""
    return Word(letters)


def cyclic_reduce(w: WordLike) -> CyclicWord:
    """Cyclic reduction followed by rotation to canonical form."""
    return CyclicWord(w)


def cyclically_equal(u: WordLike, v: WordLike) -> bool:
    """True iff u is a rotation of v (after cyclic reduction)."""
    return CyclicWord(u) == CyclicWord(v)


def invert(w: WordLike):
    """w^-1: reversed sequence with all signs flipped.  Type-preserving."""
    codes = _coerce_codes(w)
    inv = tuple(-c for c in reversed(codes))
    return CyclicWord(inv) if isinstance(w, CyclicWord) else Word(inv)


def reverse(w: WordLike):
    """The reverse word: reversed sequence, signs kept.  Type-preserving."""
    codes = _coerce_codes(w)
    rev = tuple(reversed(codes))
    return CyclicWord(rev) if isinstance(w, CyclicWord) else Word(rev)


def swap_generators(w: WordLike, symbols: tuple[str, str] = ("z", "y")):
    """Apply the automorphism exchanging the two symbols of the alphabet."""
    a, b = (_SYMBOL_CODES[s] for s in symbols)
    codes = _coerce_codes(w)
    used = {abs(c) for c in codes}
    if not used <= {a, b}:
        raise ValueError(f"word is not over the alphabet {symbols}")
    table = {a: b, -a: -b, b: a, -b: -a}
    swapped = tuple(table[c] for c in codes)
    return CyclicWord(swapped) if isinstance(w, CyclicWord) else Word(swapped)


def abelianize(w: WordLike) -> tuple[int, int]:
    """Signed exponent sums (first symbol, y) where the first symbol is x or z."""
    first = 0
    second = 0
    bases = set()
    for c in _coerce_codes(w):
        s = 1 if c > 0 else -1
        if abs(c) == 2:
            second += s
        else:
            bases.add(abs(c))
            first += s
    if len(bases) > 1:
        raise ValueError("word mixes x and z; no two-letter alphabet applies")
    return (first, second)


def substitute(w: WordLike, z_image: WordLike) -> Word:
    """Homomorphic image with z mapped to the given word and y fixed."""
    image = Word(z_image).codes
    image_inv = tuple(-c for c in reversed(image))
    out: list[int] = []
    for c in _coerce_codes(w):
        if c == 3:
            out.extend(image)
        elif c == -3:
            out.extend(image_inv)
        elif abs(c) == 2:
            out.append(c)
        else:
            raise ValueError("substitution input must be a word over z and y")
    return Word(out)


def parse_word(text: str) -> Word:
    """Parse caret notation: atoms are a letter with an optional ^exponent.

    Letters x, y, z are positive, X, Y, Z their inverses; whitespace is
    ignored, so "x y^5 x y^-2" and "xy^5xy^-2" parse identically.
    """
    codes: list[int] = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        low = ch.lower()
        if low not in _SYMBOL_CODES:
            raise WordParseError(text, i, "a generator letter (x, y, z, X, Y or Z)")
        code = _SYMBOL_CODES[low] * (1 if ch.islower() else -1)
        i += 1
        exp = 1
        if i < n and text[i] == "^":
            i += 1
            j = i
            if j < n and text[j] in "+-":
                j += 1
            k = j
            while k < n and text[k].isdigit():
                k += 1
            if k == j:
                raise WordParseError(text, i, "an integer exponent")
            exp = int(text[i:k])
            i = k
        if exp < 0:
            code, exp = -code, -exp
        codes.extend([code] * exp)
    return Word(codes)
