"""coBUG certification: is the complement of a graph betweenness-uniform?"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Tuple

from .centrality import is_bug, rational_str
from .cobetweenness import co_betweenness_all
from .errors import PreconditionError
from .graph import (
    ComponentInventory,
    Graph,
    complement,
    connected_components,
    has_spanning_double_star,
    induced_subgraph,
    is_connected,
)
from .structure import structural_filters, uniformity_params

#: Largest complement on which the direct-betweenness fallback runs.
FALLBACK_MAX_N = 2000
#: Structural verdicts are attached only for components up to this size.
STRUCTURE_MAX_VERTICES = 64


@dataclass(frozen=True)
class CertificationReport:
    n: int
    n_edges: int
    is_cobug: bool
    method: str
    betweenness_value: Optional[Fraction]
    co_betweenness: Optional[Fraction]
    exotic: bool
    exotic_reason: str
    inventory: ComponentInventory
    violations: Tuple[str, ...]
    structure: tuple = field(default=(), compare=False)

    @property
    def complement_is_bug(self) -> bool:
        return self.is_cobug

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "edges": self.n_edges,
            "is_cobug": self.is_cobug,
            "complement_is_bug": self.is_cobug,
            "method": self.method,
            "betweenness": None if self.betweenness_value is None else rational_str(self.betweenness_value),
            "co_betweenness": None if self.co_betweenness is None else rational_str(self.co_betweenness),
            "exotic": self.exotic,
            "exotic_reason": self.exotic_reason,
            "components": self.inventory.to_list(),
            "violations": list(self.violations),
            "structure": list(self.structure),
        }


def _exotic_verdict(is_cobug, value, inventory):
    if not is_cobug:
        return False, "not a coBUG"
    if value is None or value >= 1:
        return False, "betweenness is at least 1"
    ell = inventory.equal_stars()
    if ell is not None:
        return False, f"every component is K_{{1,{ell}}}"
    return True, "low-betweenness coBUG that is not a union of equal stars"


def _structure_entries(hbar: Graph, inventory: ComponentInventory) -> tuple:
    out = []
    for idx, comp in enumerate(inventory):
        if comp.is_star:
            continue
        entry = {"component": idx}
        if comp.n_vertices > STRUCTURE_MAX_VERTICES:
            entry["skipped"] = f"component has more than {STRUCTURE_MAX_VERTICES} vertices"
        else:
            h = induced_subgraph(hbar, comp.vertices)
            entry["uniformity"] = uniformity_params(h).to_dict()
            entry["filters"] = structural_filters(h).to_dict()
        out.append(entry)
    return tuple(out)


def is_cobug(hbar: Graph, with_structure: bool = True) -> CertificationReport:
    """Certify whether the complement of ``hbar`` is a BUG.

    A disconnected ``hbar`` has a complement of diameter at most two, so the
    check is local: equal co-betweenness everywhere, and the betweenness is
    then ``|E(hbar)| / n``.  Complements of diameter three or more fall back
    to direct betweenness.
    """
    n = hbar.n
    if n == 0:
        raise PreconditionError("the empty graph has no complement to certify")
    inv = connected_components(hbar)
    violations = []
    method = "co-betweenness"
    value = None
    cob = None
    verdict = False

    fallback = False
    if len(inv) == 1 and n > 1:
        if not is_connected(complement(hbar)):
            violations.append("complement-disconnected")
            method = "none"
        elif has_spanning_double_star(hbar) is not None:
            violations.append("undefined-weight")
            fallback = True

    if fallback:
        method = "direct-betweenness"
        if n > FALLBACK_MAX_N:
            violations.append("fallback-too-large")
        else:
            bv = is_bug(complement(hbar))
            verdict = bv.is_bug
            value = bv.value
            if not verdict:
                violations.append("betweenness-not-uniform")
    elif method == "co-betweenness":
        wc = co_betweenness_all(hbar)
        verdict = wc.is_uniform
        if verdict:
            cob = wc.co_betweenness[0] if n else Fraction(0)
            value = Fraction(hbar.m, n)
        else:
            violations.append("co-betweenness-not-uniform")

    exotic, reason = _exotic_verdict(verdict, value, inv)
    structure = _structure_entries(hbar, inv) if with_structure and len(inv) > 1 else ()
    return CertificationReport(
        n=n,
        n_edges=hbar.m,
        is_cobug=verdict,
        method=method,
        betweenness_value=value,
        co_betweenness=cob,
        exotic=exotic,
        exotic_reason=reason,
        inventory=inv,
        violations=tuple(violations),
        structure=structure,
    )
