"""Finite presentations of genus-2 Goeritz groups of lens spaces.

Emits, for connected primitive disk complexes: the disk and pair
stabilizer presentations, the case table for the whole group, and the
decomposition as a chain of vertex stabilizers amalgamated over edge
stabilizers (one factor per quotient-graph vertex).  Relator words use
signed indices into the generator list, so the rank-two word machinery
carries over syntactically to any number of generators.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Union

from .classify import CaseTag, DisconnectedComplexError, case_tag, vertex_orbits
from .sequences import PqParams
from .snf import invariant_factors
from .words import free_reduce_codes

_GREEK = {
    "alpha": "α",
    "beta": "β",
    "gamma": "γ",
    "delta": "δ",
    "rho": "ρ",
    "sigma": "σ",
}
_SUBSCRIPTS = {"1": "₁", "2": "₂"}
_SUPERSCRIPTS = str.maketrans("0123456789-", "⁰¹²³⁴⁵⁶⁷⁸⁹⁻")

_GAP_NAMES = {
    "alpha": "a",
    "beta": "b",
    "gamma": "c",
    "delta": "d",
    "rho": "r",
    "sigma": "s",
}


def display_name(name: str) -> str:
    stem = name.rstrip("12")
    suffix = name[len(stem):]
    return _GREEK.get(stem, stem) + "".join(_SUBSCRIPTS[ch] for ch in suffix)


def gap_name(name: str) -> str:
    stem = name.rstrip("12")
    suffix = name[len(stem):]
    return _GAP_NAMES.get(stem, stem) + suffix


@dataclass(frozen=True)
class Generator:
    name: str
    description: str = ""


@dataclass(frozen=True)
class GroupPresentation:
    """Generators with geometric glosses, relators as signed index words.

    A presentation either carries its own generators and relators or is
    a direct sum of summands; flatten() turns a direct sum into a single
    presentation by adding commutators between generators of distinct
    summands.
    """

    generators: tuple[Generator, ...] = ()
    relators: tuple[tuple[int, ...], ...] = ()
    summands: tuple["GroupPresentation", ...] = ()

    def __post_init__(self):
        if self.summands and (self.generators or self.relators):
            raise ValueError("a direct sum carries no generators of its own")
        n = len(self.generators)
        for rel in self.relators:
            if any(c == 0 or abs(c) > n for c in rel):
                raise ValueError(f"relator {rel} uses undeclared generators")

    def all_generators(self) -> tuple[Generator, ...]:
        if not self.summands:
            return self.generators
        out: list[Generator] = []
        for part in self.summands:
            out.extend(part.all_generators())
        return tuple(out)

    def generator_names(self) -> tuple[str, ...]:
        return tuple(g.name for g in self.all_generators())

    def flatten(self) -> "GroupPresentation":
        """Single presentation: union of generators and relators plus
        commutators between generators of different summands."""
        if not self.summands:
            return self
        parts = [part.flatten() for part in self.summands]
        gens: list[Generator] = []
        relators: list[tuple[int, ...]] = []
        offsets = []
        for part in parts:
            offsets.append(len(gens))
            gens.extend(part.generators)
        for part, off in zip(parts, offsets):
            shift = lambda c: c + off if c > 0 else c - off
            relators.extend(tuple(shift(c) for c in rel) for rel in part.relators)
        for i, left in enumerate(parts):
            for j in range(i + 1, len(parts)):
                for gi in range(len(left.generators)):
                    for gj in range(len(parts[j].generators)):
                        g = offsets[i] + gi + 1
                        h = offsets[j] + gj + 1
                        relators.append((g, h, -g, -h))
        return GroupPresentation(tuple(gens), tuple(relators))

    def named_relators(self) -> tuple[tuple[tuple[str, int], ...], ...]:
        """Relators as (generator name, exponent sign) sequences."""
        names = self.generator_names()
        out = []
        for part, rels in self._relator_blocks():
            part_names = part.generator_names()
            for rel in rels:
                out.append(tuple((part_names[abs(c) - 1], 1 if c > 0 else -1) for c in rel))
        return tuple(out)

    def _relator_blocks(self):
        if not self.summands:
            return [(self, self.relators)]
        blocks = []
        for part in self.summands:
            blocks.extend(part._relator_blocks())
        return blocks


def presentation(
    gens: list[tuple[str, str]], relators: list[list[tuple[str, int]]]
) -> GroupPresentation:
    """Build a presentation from (name, gloss) pairs and name/exponent relators."""
    generators = tuple(Generator(name, desc) for name, desc in gens)
    index = {g.name: i + 1 for i, g in enumerate(generators)}
    rels = []
    for rel in relators:
        codes: list[int] = []
        for name, exp in rel:
            code = index[name] if exp > 0 else -index[name]
            codes.extend([code] * abs(exp))
        rels.append(free_reduce_codes(codes))
    return GroupPresentation(generators, tuple(rels))


def direct_sum(*summands: GroupPresentation) -> GroupPresentation:
    return GroupPresentation(summands=tuple(summands))


def _word_display(rel: tuple[tuple[str, int], ...]) -> str:
    """Unicode rendering; a proper power of a block renders as (block)^k."""
    n = len(rel)
    for period in range(2, n):
        block = rel[:period]
        if n % period == 0 and block * (n // period) == rel and len(set(block)) > 1:
            return f"({_run_display(block)})" + str(n // period).translate(_SUPERSCRIPTS)
    return _run_display(rel)


def _run_display(rel) -> str:
    parts = []
    i = 0
    while i < len(rel):
        name, sign = rel[i]
        j = i
        while j < len(rel) and rel[j] == (name, sign):
            j += 1
        exp = (j - i) * sign
        sym = display_name(name)
        parts.append(sym if exp == 1 else sym + str(exp).translate(_SUPERSCRIPTS))
        i = j
    return "".join(parts)


def _presentation_text(pres: GroupPresentation) -> str:
    if pres.summands:
        return " ⊕ ".join(_presentation_text(part) for part in pres.summands)
    gens = ", ".join(display_name(g.name) for g in pres.generators)
    rels = ", ".join(
        _word_display(rel) for rel in pres.named_relators()
    )
    return f"⟨{gens} | {rels}⟩" if rels else f"⟨{gens} | −⟩"


def _presentation_dict(pres: GroupPresentation) -> dict:
    if pres.summands:
        return {"summands": [_presentation_dict(part) for part in pres.summands]}
    return {
        "generators": [
            {"name": g.name, "display": display_name(g.name), "description": g.description}
            for g in pres.generators
        ],
        "relators": [_ascii_word(rel) for rel in pres.named_relators()],
    }


def _ascii_word(rel: tuple[tuple[str, int], ...]) -> str:
    parts = []
    i = 0
    while i < len(rel):
        name, sign = rel[i]
        j = i
        while j < len(rel) and rel[j] == (name, sign):
            j += 1
        exp = (j - i) * sign
        parts.append(name if exp == 1 else f"{name}^{exp}")
        i = j
    return "*".join(parts) if parts else "1"


def _gap_relator(rel: tuple[int, ...]) -> str:
    parts = []
    i = 0
    while i < len(rel):
        c = rel[i]
        j = i
        while j < len(rel) and rel[j] == c:
            j += 1
        exp = (j - i) if c > 0 else -(j - i)
        parts.append(f"F.{abs(c)}" if exp == 1 else f"F.{abs(c)}^{exp}")
        i = j
    return "*".join(parts)


def _gap_script(pres: GroupPresentation) -> str:
    flat = pres.flatten()
    names = ", ".join(f'"{gap_name(g.name)}"' for g in flat.generators)
    rels = ", ".join(_gap_relator(rel) for rel in flat.relators)
    relator_list = f"[ {rels} ]" if rels else "[ ]"
    return f"F := FreeGroup( {names} );;\nrelators := {relator_list};;"


class StabilizerKind(Enum):
    VERTEX = "vertex"
    EDGE_UNORDERED = "edge-unordered"
    PAIR_EXCHANGEABLE = "pair-exchangeable"
    PAIR_RIGID = "pair-rigid"


_ALPHA_GLOSS = "hyperelliptic involution of both handlebodies"
_BETA_GLOSS = "half-twist along a reducing sphere"
_GAMMA_GLOSS = "exchanges two disjoint dual disks"
_SIGMA_GLOSS = "exchanges the two disks of the pair"


def _alpha() -> GroupPresentation:
    return presentation([("alpha", _ALPHA_GLOSS)], [[("alpha", 2)]])


def _vertex_stab(beta: str = "beta", gamma: str = "gamma", disk: str = "") -> GroupPresentation:
    where = f" of {disk}" if disk else ""
    return direct_sum(
        _alpha(),
        presentation(
            [(beta, _BETA_GLOSS + where), (gamma, _GAMMA_GLOSS + where)],
            [[(gamma, 2)]],
        ),
    )


def _pair_stab(sigma: str = "sigma", pair: str = "") -> GroupPresentation:
    where = f" {pair}" if pair else ""
    return direct_sum(
        _alpha(),
        presentation([(sigma, _SIGMA_GLOSS + where)], [[(sigma, 2)]]),
    )


def stabilizer_presentation(kind: StabilizerKind, params: PqParams) -> GroupPresentation:
    """Stabilizer of a primitive disk, of a pair preserved disk-wise, or
    of a pair preserved as a set (exchangeable or not)."""
    if kind is not StabilizerKind.VERTEX and params.p < 3:
        raise ValueError(
            f"pair stabilizers take this form only for p >= 3, got p = {params.p}"
        )
    if kind is StabilizerKind.VERTEX:
        return _vertex_stab()
    if kind is StabilizerKind.EDGE_UNORDERED:
        return _alpha()
    if kind is StabilizerKind.PAIR_EXCHANGEABLE:
        return _pair_stab()
    return _alpha()


def _require_presentable(params: PqParams) -> None:
    if not params.connected:
        raise DisconnectedComplexError(
            f"{params}: not covered; the presentation requires p = +1 or -1 mod q "
            f"(here p mod q = {params.r})"
        )


def goeritz_presentation(params: PqParams) -> GroupPresentation:
    """The case table for the genus-2 Goeritz group of L(p,q)."""
    _require_presentable(params)
    p, q = params.p, params.q
    if p == 2:
        return presentation(
            [
                ("beta", _BETA_GLOSS),
                ("rho", "order-four element of the stabilizer of the pair E, D"),
                ("gamma", _GAMMA_GLOSS),
            ],
            [
                [("rho", 4)],
                [("gamma", 2)],
                [("gamma", 1), ("rho", 1), ("gamma", 1), ("rho", 1)],
                [("rho", 2), ("beta", 1), ("rho", 2), ("beta", -1)],
            ],
        )
    if p == 3:
        return direct_sum(
            _alpha(),
            presentation(
                [
                    ("beta", _BETA_GLOSS),
                    ("delta", "order-three rotation of a primitive triple"),
                    ("gamma", _GAMMA_GLOSS),
                ],
                [
                    [("delta", 3)],
                    [("gamma", 2)],
                    [("gamma", 1), ("delta", 1), ("gamma", 1), ("delta", 1)],
                ],
            ),
        )
    if q == 1:
        return direct_sum(
            _alpha(),
            presentation(
                [
                    ("beta", _BETA_GLOSS),
                    ("gamma", _GAMMA_GLOSS),
                    ("sigma", _SIGMA_GLOSS + " {E, D}"),
                ],
                [[("gamma", 2)], [("sigma", 2)]],
            ),
        )
    if p == 5:
        return direct_sum(
            _alpha(),
            presentation(
                [
                    ("beta1", _BETA_GLOSS + " of E"),
                    ("beta2", _BETA_GLOSS + " of D"),
                    ("gamma1", _GAMMA_GLOSS + " of E"),
                    ("gamma2", _GAMMA_GLOSS + " of D"),
                ],
                [[("gamma1", 2)], [("gamma2", 2)]],
            ),
        )
    if p == 2 * q + 1 or q == 2:
        return direct_sum(
            _alpha(),
            presentation(
                [
                    ("beta1", _BETA_GLOSS + " of D"),
                    ("beta2", _BETA_GLOSS + " of E"),
                    ("gamma1", _GAMMA_GLOSS + " of D"),
                    ("gamma2", _GAMMA_GLOSS + " of E"),
                    ("sigma", _SIGMA_GLOSS + " {E, E1}"),
                ],
                [[("gamma1", 2)], [("gamma2", 2)], [("sigma", 2)]],
            ),
        )
    if (q * q) % p == 1:
        return direct_sum(
            _alpha(),
            presentation(
                [
                    ("beta", _BETA_GLOSS),
                    ("gamma", _GAMMA_GLOSS),
                    ("sigma1", _SIGMA_GLOSS + " {E, D}"),
                    ("sigma2", _SIGMA_GLOSS + " {E, E1}"),
                ],
                [[("gamma", 2)], [("sigma1", 2)], [("sigma2", 2)]],
            ),
        )
    return direct_sum(
        _alpha(),
        presentation(
            [
                ("beta1", _BETA_GLOSS + " of D"),
                ("beta2", _BETA_GLOSS + " of E"),
                ("gamma1", _GAMMA_GLOSS + " of D"),
                ("gamma2", _GAMMA_GLOSS + " of E"),
                ("sigma1", _SIGMA_GLOSS + " {D, D1}"),
                ("sigma2", _SIGMA_GLOSS + " {E, E1}"),
            ],
            [[("gamma1", 2)], [("gamma2", 2)], [("sigma1", 2)], [("sigma2", 2)]],
        ),
    )


@dataclass(frozen=True)
class AmalgamFactor:
    label: str
    presentation: Optional[GroupPresentation]


@dataclass(frozen=True)
class AmalgamEdge:
    """Edge stabilizer with the generator identifications into both factors."""

    label: str
    presentation: Optional[GroupPresentation]
    left: str
    right: str
    inclusions: tuple[tuple[str, str, str], ...] = ()  # (edge gen, left image, right image)


@dataclass(frozen=True)
class AmalgamDecomposition:
    factors: tuple[AmalgamFactor, ...]
    edges: tuple[AmalgamEdge, ...]
    note: str = ""


def _alpha_edge(label: str, left: str, right: str) -> AmalgamEdge:
    return AmalgamEdge(label, _alpha(), left, right, (("alpha", "alpha", "alpha"),))


def amalgam_decomposition(params: PqParams) -> AmalgamDecomposition:
    """Chain of vertex stabilizers amalgamated over edge stabilizers;
    the factor count equals the quotient-graph vertex count."""
    _require_presentable(params)
    tag = case_tag(params)
    if tag is CaseTag.T1A:
        return AmalgamDecomposition(
            factors=(AmalgamFactor("G(E u D)", None), AmalgamFactor("G(E)", None)),
            edges=(AmalgamEdge("G(E, D)", None, "G(E u D)", "G(E)"),),
            note=(
                "p = 2: the pair stabilizers are special and are absorbed "
                "into the flat presentation table"
            ),
        )
    if tag is CaseTag.T2A:
        triple = direct_sum(
            _alpha(),
            presentation(
                [
                    ("delta", "order-three rotation of the triple E, E1, E2"),
                    ("gamma", "exchanges E1 and E2"),
                ],
                [
                    [("delta", 3)],
                    [("gamma", 2)],
                    [("gamma", 1), ("delta", 1), ("gamma", 1), ("delta", 1)],
                ],
            ),
        )
        edge = AmalgamEdge(
            "G(E, E1 u E2)",
            direct_sum(_alpha(), presentation([("gamma", "exchanges E1 and E2")], [[("gamma", 2)]])),
            "G(E u E1 u E2)",
            "G(E)",
            (("alpha", "alpha", "alpha"), ("gamma", "gamma", "gamma")),
        )
        return AmalgamDecomposition(
            factors=(
                AmalgamFactor("G(E u E1 u E2)", triple),
                AmalgamFactor("G(E)", _vertex_stab(disk="E")),
            ),
            edges=(edge,),
        )
    if tag is CaseTag.T1B:
        return AmalgamDecomposition(
            factors=(
                AmalgamFactor("G(E u D)", _pair_stab(pair="{E, D}")),
                AmalgamFactor("G(E)", _vertex_stab(disk="E")),
            ),
            edges=(_alpha_edge("G(E, D)", "G(E u D)", "G(E)"),),
        )
    if tag is CaseTag.T2B:
        return AmalgamDecomposition(
            factors=(
                AmalgamFactor("G(E)", _vertex_stab("beta1", "gamma1", "E")),
                AmalgamFactor("G(D)", _vertex_stab("beta2", "gamma2", "D")),
            ),
            edges=(_alpha_edge("G(E, D)", "G(E)", "G(D)"),),
        )
    if tag is CaseTag.T2C:
        return AmalgamDecomposition(
            factors=(
                AmalgamFactor("G(D)", _vertex_stab("beta1", "gamma1", "D")),
                AmalgamFactor("G(E)", _vertex_stab("beta2", "gamma2", "E")),
                AmalgamFactor("G(E u E1)", _pair_stab(pair="{E, E1}")),
            ),
            edges=(
                _alpha_edge("G(E, D)", "G(D)", "G(E)"),
                _alpha_edge("G(E, E1)", "G(E)", "G(E u E1)"),
            ),
        )
    if vertex_orbits(params) == 1:
        return AmalgamDecomposition(
            factors=(
                AmalgamFactor("G(E u D)", _pair_stab("sigma1", "{E, D}")),
                AmalgamFactor("G(E)", _vertex_stab(disk="E")),
                AmalgamFactor("G(E u E1)", _pair_stab("sigma2", "{E, E1}")),
            ),
            edges=(
                _alpha_edge("G(E, D)", "G(E u D)", "G(E)"),
                _alpha_edge("G(E, E1)", "G(E)", "G(E u E1)"),
            ),
        )
    return AmalgamDecomposition(
        factors=(
            AmalgamFactor("G(D u D1)", _pair_stab("sigma1", "{D, D1}")),
            AmalgamFactor("G(D)", _vertex_stab("beta1", "gamma1", "D")),
            AmalgamFactor("G(E)", _vertex_stab("beta2", "gamma2", "E")),
            AmalgamFactor("G(E u E1)", _pair_stab("sigma2", "{E, E1}")),
        ),
        edges=(
            _alpha_edge("G(D, D1)", "G(D u D1)", "G(D)"),
            _alpha_edge("G(E, D)", "G(D)", "G(E)"),
            _alpha_edge("G(E, E1)", "G(E)", "G(E u E1)"),
        ),
    )


@dataclass(frozen=True)
class Abelianization:
    torsion: tuple[int, ...]
    free_rank: int

    def text(self) -> str:
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z/{d}" for d in self.torsion)
        return " + ".join(parts) if parts else "0"


def abelianize_presentation(pres: GroupPresentation) -> Abelianization:
    """Invariant factors of the abelianized presentation, via integer
    Smith normal form of the relator exponent matrix."""
    flat = pres.flatten()
    n = len(flat.generators)
    rows = []
    for rel in flat.relators:
        row = [0] * n
        for c in rel:
            row[abs(c) - 1] += 1 if c > 0 else -1
        rows.append(row)
    torsion, free_rank = invariant_factors(rows, n)
    return Abelianization(torsion=torsion, free_rank=free_rank)


def _amalgam_text(am: AmalgamDecomposition) -> str:
    chain = am.factors[0].label
    for edge, factor in zip(am.edges, am.factors[1:]):
        chain += f" *_{{{edge.label}}} {factor.label}"
    lines = [chain]
    for factor in am.factors:
        body = _presentation_text(factor.presentation) if factor.presentation else "(absorbed)"
        lines.append(f"  {factor.label} = {body}")
    for edge in am.edges:
        body = _presentation_text(edge.presentation) if edge.presentation else "(absorbed)"
        maps = "; ".join(f"{g} -> {l}, {r}" for g, l, r in edge.inclusions)
        lines.append(f"  {edge.label} = {body}" + (f"  [{maps}]" if maps else ""))
    if am.note:
        lines.append(f"  note: {am.note}")
    return "\n".join(lines)


def _amalgam_dict(am: AmalgamDecomposition) -> dict:
    return {
        "factors": [
            {
                "label": f.label,
                "presentation": _presentation_dict(f.presentation) if f.presentation else None,
            }
            for f in am.factors
        ],
        "edges": [
            {
                "label": e.label,
                "presentation": _presentation_dict(e.presentation) if e.presentation else None,
                "left": e.left,
                "right": e.right,
                "inclusions": [list(t) for t in e.inclusions],
            }
            for e in am.edges
        ],
        "note": am.note,
    }


def _amalgam_gap(am: AmalgamDecomposition) -> str:
    lines = []
    for i, factor in enumerate(am.factors, start=1):
        if factor.presentation is None:
            lines.append(f"# factor {i}: {factor.label} (no generic presentation)")
            continue
        flat = factor.presentation.flatten()
        names = ", ".join(f'"{gap_name(g.name)}{i}"' for g in flat.generators)
        rels = ", ".join(_gap_relator(rel).replace("F.", f"F{i}.") for rel in flat.relators)
        lines.append(f"F{i} := FreeGroup( {names} );;")
        lines.append(f"relators{i} := [ {rels} ];;")
    return "\n".join(lines)


def render(obj: Union[GroupPresentation, AmalgamDecomposition], fmt: str = "text") -> str:
    """Render a presentation or an amalgam as text, JSON or a GAP script."""
    if fmt not in ("text", "json", "gap"):
        raise ValueError(f"unknown format {fmt!r}")
    if isinstance(obj, GroupPresentation):
        if fmt == "text":
            return _presentation_text(obj)
        if fmt == "json":
            return json.dumps(_presentation_dict(obj), ensure_ascii=False, indent=2)
        return _gap_script(obj)
    if isinstance(obj, AmalgamDecomposition):
        if fmt == "text":
            return _amalgam_text(obj)
        if fmt == "json":
            return json.dumps(_amalgam_dict(obj), ensure_ascii=False, indent=2)
        return _amalgam_gap(obj)
    raise TypeError(f"cannot render {type(obj).__name__}")
