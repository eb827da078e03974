"""Lens-space parameters and the (p,q)-sequence of words over {z, y}.

For coprime p, q the sequence w_0, ..., w_p has w_j built from the
residue pattern: letter i of w_j is z exactly when i is congruent to
one of 1, 1+q, ..., 1+(j-1)q modulo p.  Exactly the indices 1, q',
p-q' and p-1 give primitive words, where q' is the unique integer in
[1, p/2] with q*q' = +1 or -1 modulo p.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .words import Word, cyclically_equal, reverse, swap_generators


class InvalidParameters(ValueError):
    """Rejected lens-space parameters; the message names the constraint."""


@dataclass(frozen=True)
class PqParams:
    """Validated parameters of L(p,q) with q normalized into [1, p/2].

    q_prime is the companion slope, r = p mod q, m = p // q, and
    connected records whether p = +1 or -1 modulo q (vacuous for q = 1),
    the criterion for the primitive disk complex to be connected.
    """

    p: int
    q: int
    q_prime: int
    r: int
    m: int
    connected: bool

    @property
    def homeomorphism_slopes(self) -> tuple[int, ...]:
        """All slopes q-bar giving a homeomorphic lens space."""
        return tuple(
            sorted({self.q, self.q_prime, self.p - self.q, self.p - self.q_prime})
        )

    def __str__(self) -> str:
        return f"L({self.p},{self.q})"


def make_params(p: int, q: int) -> PqParams:
    """Validate and normalize (p, q); computes q', r, m and connectivity."""
    if not isinstance(p, int) or not isinstance(q, int):
        raise InvalidParameters("p and q must be integers")
    if p < 2:
        raise InvalidParameters(f"p must be at least 2, got p = {p}")
    if not 0 < q < p:
        raise InvalidParameters(f"q must satisfy 0 < q < p, got q = {q}")
    if math.gcd(p, q) != 1:
        raise InvalidParameters(f"p and q must be coprime, got gcd({p},{q}) = {math.gcd(p, q)}")
    q = min(q, p - q)
    q_prime = None
    for k in range(1, p // 2 + 1):
        if (q * k) % p in (1, p - 1):
            q_prime = k
            break
    assert q_prime is not None
    r = p % q
    m = p // q
    connected = q == 1 or r in (1, q - 1)
    return PqParams(p=p, q=q, q_prime=q_prime, r=r, m=m, connected=connected)


def sequence_word(p: int, qbar: int, j: int) -> Word:
    """The j-th word of the (p, qbar)-sequence, for any slope 0 < qbar < p."""
    if not 0 <= j <= p:
        raise ValueError(f"index {j} out of range 0..{p}")
    z_residues = {(1 + k * qbar) % p for k in range(j)}
    return Word([3 if (i % p) in z_residues else 2 for i in range(1, p + 1)])


@dataclass(frozen=True)
class PqSequence:
    params: PqParams
    words: tuple[Word, ...]
    primitive_indices: frozenset[int]


def primitive_indices(params: PqParams) -> frozenset[int]:
    """The primitive positions {1, q', p-q', p-1} (duplicates collapse)."""
    p, qp = params.p, params.q_prime
    return frozenset({1, qp, p - qp, p - 1})


def pq_sequence(params: PqParams) -> PqSequence:
    words = tuple(sequence_word(params.p, params.q, j) for j in range(params.p + 1))
    return PqSequence(params=params, words=words, primitive_indices=primitive_indices(params))


def verify_symmetry(seq: PqSequence) -> bool:
    """Check that w_{p-j} is a rotation of the reversed symbol swap of w_j."""
    p = seq.params.p
    return all(
        cyclically_equal(seq.words[p - j], reverse(swap_generators(seq.words[j])))
        for j in range(p + 1)
    )
