"""Bribery attack: flip the group winner to the runner-up by buying experts.

A bribed expert submits a doctored matrix in which the promoted
alternative saturates against every other one and the incumbent leader is
saturated against.  Experts are bought in descending order of their
individual support for the incumbent until the runner-up wins.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .aggregate import aggregate_panel
from .core import ExpertPanel, PCMatrix, PriorityVector
from .derive import gmm_priorities
from .errors import DomainError, ShapeError


@dataclass(frozen=True)
class AttackOutcome:
    bribed_indices: tuple[int, ...]
    manipulated_panel: ExpertPanel
    succeeded: bool
    manipulated_ranking: PriorityVector


def bribe_matrix(
    C: PCMatrix, promoted: int, demoted: int, saturation: float = 9.0
) -> PCMatrix:
    """Doctor one expert's matrix in favor of ``promoted`` over ``demoted``.

    The promoted alternative's row is set to the saturation value against
    all others, the demoted one's row to its reciprocal; columns mirror the
    rows.  Entries not involving either alternative are left untouched.
    """
    n = C.n
    if not (0 <= promoted < n and 0 <= demoted < n):
        raise ShapeError("alternative index out of range")
    if promoted == demoted:
        raise DomainError("promoted and demoted alternatives must differ")
    if saturation <= 1.0:
        raise DomainError("saturation must exceed 1")
    m = C.values.copy()
    others = [j for j in range(n) if j != demoted]
    m[demoted, others] = 1.0 / saturation
    m[others, demoted] = saturation
    others = [j for j in range(n) if j != promoted]
    m[promoted, others] = saturation
    m[others, promoted] = 1.0 / saturation
    return PCMatrix(m)


def run_attack(
    panel: ExpertPanel,
    max_bribes: int | None = None,
    saturation: float = 9.0,
    recompute_support: bool = False,
) -> AttackOutcome:
    """Bribe experts one by one until the honest runner-up tops the ranking.

    Support for the incumbent is ranked once against the honest panel by
    default; with ``recompute_support`` the strongest remaining supporter
    is re-identified after every bribe.
    """
    if panel.n < 2:
        raise ShapeError("need at least 2 alternatives to attack")
    if max_bribes is None:
        max_bribes = panel.k

    honest = aggregate_panel(panel)
    order = honest.ranking()
    winner, runner_up = int(order[0]), int(order[1])

    def support_order(p: ExpertPanel, exclude: set[int]) -> list[int]:
        backing = [gmm_priorities(m).weights[winner] for m in p.matrices]
        idx = [q for q in range(p.k) if q not in exclude]
        # descending support, ties towards the lower expert index
        idx.sort(key=lambda q: (-backing[q], q))
        return idx

    current = panel
    bribed: list[int] = []
    queue = support_order(panel, set())
    while True:
        ranking = aggregate_panel(current)
        if int(ranking.ranking()[0]) == runner_up:
            return AttackOutcome(tuple(bribed), current, True, ranking)
        if len(bribed) >= max_bribes or len(bribed) >= panel.k:
            return AttackOutcome(tuple(bribed), current, False, ranking)
        if recompute_support:
            target = support_order(current, set(bribed))[0]
        else:
            target = queue[len(bribed)]
        current = current.replace(
            target, bribe_matrix(current.matrices[target], runner_up, winner, saturation)
        )
        bribed.append(target)
