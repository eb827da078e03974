"""Classification of the primitive disk complex of L(p,q).

The complex is connected (and then contractible) exactly when p is +1
or -1 modulo q.  Connected complexes are trees except when q = 2 or
p = 2q + 1, where they are 2-dimensional; the case tag records which
clause of the structure classification applies, and the orbit data
feeds the quotient graph used to present the Goeritz group.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .sequences import PqParams


class DisconnectedComplexError(ValueError):
    """Operation is only defined when the complex is connected."""


class CaseTag(Enum):
    T1A = "T1a"
    T1B = "T1b"
    T1C = "T1c"
    T2A = "T2a"
    T2B = "T2b"
    T2C = "T2c"
    DISCONNECTED = "Disconnected"

    @property
    def clause(self) -> str:
        return {
            CaseTag.T1A: "(1)(a)",
            CaseTag.T1B: "(1)(b)",
            CaseTag.T1C: "(1)(c)",
            CaseTag.T2A: "(2)(a)",
            CaseTag.T2B: "(2)(b)",
            CaseTag.T2C: "(2)(c)",
            CaseTag.DISCONNECTED: "disconnected",
        }[self]


class QuotientGraph(Enum):
    SINGLE_EDGE = "single-edge"
    PATH3 = "path-3"
    PATH4 = "path-4"
    NOT_APPLICABLE = "not-applicable"

    @property
    def vertex_count(self) -> Optional[int]:
        return {
            QuotientGraph.SINGLE_EDGE: 2,
            QuotientGraph.PATH3: 3,
            QuotientGraph.PATH4: 4,
            QuotientGraph.NOT_APPLICABLE: None,
        }[self]


@dataclass(frozen=True)
class EdgeOrbit:
    representative: str
    exchangeable: bool


@dataclass(frozen=True)
class EdgeOrbitInfo:
    count: int
    orbits: tuple[EdgeOrbit, ...]


@dataclass(frozen=True)
class CommonDualRule:
    all_pairs: bool  # every primitive pair has a common dual disk (q = 1)
    dual_count: int  # common dual disks of a pair that has one: 2 iff p = 2


@dataclass(frozen=True)
class ComplexStructureReport:
    params: PqParams
    connected: bool
    dimension: int
    case_tag: CaseTag
    edge_types_present: frozenset[int]
    simplex_types_present: frozenset[int]
    triple_exists: bool
    common_dual_rule: CommonDualRule
    vertex_orbits: Optional[int]
    edge_orbits: Optional[EdgeOrbitInfo]
    quotient_graph: QuotientGraph


def case_tag(params: PqParams) -> CaseTag:
    """Dispatch into the structure classification.

    p = 3 is tested before the generic q = 1 branch: it is the only
    overlap between q = 1 and the two-dimensional condition p = 2q + 1.
    """
    p, q = params.p, params.q
    if not params.connected:
        return CaseTag.DISCONNECTED
    if p == 2:
        return CaseTag.T1A
    if p == 3:
        return CaseTag.T2A
    if q == 2 or p == 2 * q + 1:
        return CaseTag.T2B if p == 5 else CaseTag.T2C
    if q == 1:
        return CaseTag.T1B
    return CaseTag.T1C


_EDGE_TYPES = {
    CaseTag.T1A: frozenset({2}),
    CaseTag.T1B: frozenset({1}),
    CaseTag.T1C: frozenset({0, 1}),
    CaseTag.T2A: frozenset({1}),
    CaseTag.T2B: frozenset({0, 1}),
    CaseTag.T2C: frozenset({0, 1}),
    CaseTag.DISCONNECTED: frozenset({0, 1}),
}

_SIMPLEX_TYPES = {
    CaseTag.T2A: frozenset({3}),
    CaseTag.T2B: frozenset({1}),
    CaseTag.T2C: frozenset({1}),
}


def vertex_orbits(params: PqParams) -> int:
    """1 when q^2 = 1 mod p (the action is vertex-transitive), else 2."""
    _require_connected(params)
    return 1 if (params.q * params.q) % params.p == 1 else 2


def edge_orbits(params: PqParams) -> EdgeOrbitInfo:
    """Orbits of edges under the Goeritz group, with exchangeability flags.

    Representatives use the standing disks E, D = E_{q'} and the shell
    neighbours E_1, D_1.
    """
    _require_connected(params)
    p, q = params.p, params.q
    if q == 1:
        return EdgeOrbitInfo(1, (EdgeOrbit("{E, D}", True),))
    if (q * q) % p == 1:
        return EdgeOrbitInfo(
            2,
            (EdgeOrbit("{E, D}", True), EdgeOrbit("{E, E1}", True)),
        )
    return EdgeOrbitInfo(
        3,
        (
            EdgeOrbit("{E, D}", False),
            EdgeOrbit("{E, E1}", True),
            EdgeOrbit("{D, D1}", True),
        ),
    )


def quotient_graph(params: PqParams) -> QuotientGraph:
    """Shape of the quotient of the Bass-Serre tree by the group action."""
    _require_connected(params)
    tag = case_tag(params)
    if tag in (CaseTag.T1A, CaseTag.T1B, CaseTag.T2A, CaseTag.T2B):
        return QuotientGraph.SINGLE_EDGE
    if tag is CaseTag.T2C:
        return QuotientGraph.PATH3
    # T1c: splits on vertex transitivity
    return QuotientGraph.PATH3 if vertex_orbits(params) == 1 else QuotientGraph.PATH4


def classify(params: PqParams) -> ComplexStructureReport:
    """The full structure report for the primitive disk complex."""
    tag = case_tag(params)
    connected = params.connected
    two_dimensional = params.q == 2 or params.p == 2 * params.q + 1
    return ComplexStructureReport(
        params=params,
        connected=connected,
        dimension=2 if (connected and two_dimensional) else 1,
        case_tag=tag,
        edge_types_present=_EDGE_TYPES[tag],
        simplex_types_present=_SIMPLEX_TYPES.get(tag, frozenset()),
        triple_exists=two_dimensional,
        common_dual_rule=CommonDualRule(
            all_pairs=params.q == 1,
            dual_count=2 if params.p == 2 else 1,
        ),
        vertex_orbits=vertex_orbits(params) if connected else None,
        edge_orbits=edge_orbits(params) if connected else None,
        quotient_graph=quotient_graph(params) if connected else QuotientGraph.NOT_APPLICABLE,
    )


def _require_connected(params: PqParams) -> None:
    if not params.connected:
        raise DisconnectedComplexError(
            f"{params}: p mod q = {params.r} is neither 1 nor q - 1 = {params.q - 1}; "
            "the primitive disk complex is disconnected and the orbit data "
            "is only defined in the connected case"
        )
