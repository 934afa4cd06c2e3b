"""
Theorem checks for exhaustive verification.

Each check implements the TheoremCheck interface and is run by
``oracle.verify_all`` on every graphic sequence of a given length. New checks
can be added at runtime with register_check.

Usage:
    from python_forced_edges.theorem_checks import get_check, SequenceContext

    check = get_check('diameter')
    outcome = check.run(SequenceContext(DegreeSequence((3, 2, 2, 1))))

Available checks:
    - oracle-equivalence: staircase walks equal the brute-force sets
    - duality: F(a) is the mirrored forbidden set of the complement
    - corner-rule: nonempty sets contain their corner edge
    - equal-degree-consistency: equal degrees see the same forced/forbidden partners
    - threshold-structure: the forced graph is threshold
    - threshold-sequence: |F| = m iff exactly one realization
    - bound: the degree bound implies F is empty
    - induced-persistence: forced edges stay forced in induced subgraphs
    - forced-independence: V - (N(i) ∪ N(j)) is independent for forced (i,j)
    - forbidden-clique: N(i) ∪ N(j) is a clique for forbidden (i,j)
    - forced-clique: forbidden edges imply forced cliques
    - diameter: realizations have diameter at most 3
    - edge-connectivity: realizations are maximally edge-connected
"""
from __future__ import annotations

from typing import Dict, Type

from .base import DEFAULT_SETTINGS, SequenceContext, TheoremCheck
from .connectivity import DiameterCheck, EdgeConnectivityCheck
from .staircase import (
    CornerRuleCheck,
    DualityCheck,
    EqualDegreeConsistencyCheck,
    OracleEquivalenceCheck,
)
from .structure import (
    ForbiddenCliqueCheck,
    ForcedCliqueCheck,
    ForcedIndependenceCheck,
    InducedPersistenceCheck,
)
from .threshold import BoundCheck, ThresholdSequenceCheck, ThresholdStructureCheck

# Registry of available checks, in report order
_CHECK_REGISTRY: Dict[str, Type[TheoremCheck]] = {
    'oracle-equivalence': OracleEquivalenceCheck,
    'duality': DualityCheck,
    'corner-rule': CornerRuleCheck,
    'equal-degree-consistency': EqualDegreeConsistencyCheck,
    'threshold-structure': ThresholdStructureCheck,
    'threshold-sequence': ThresholdSequenceCheck,
    'bound': BoundCheck,
    'induced-persistence': InducedPersistenceCheck,
    'forced-independence': ForcedIndependenceCheck,
    'forbidden-clique': ForbiddenCliqueCheck,
    'forced-clique': ForcedCliqueCheck,
    'diameter': DiameterCheck,
    'edge-connectivity': EdgeConnectivityCheck,
}

AVAILABLE_CHECKS = list(_CHECK_REGISTRY.keys())


def get_check(name: str) -> TheoremCheck:
    """
    Get a check instance by name.

    Raises:
        ValueError: If the name is not registered.
    """
    if name not in _CHECK_REGISTRY:
        available = ', '.join(AVAILABLE_CHECKS)
        raise ValueError(
            f"Unknown check '{name}'. "
            f"Available checks: {available}"
        )
    return _CHECK_REGISTRY[name]()


def register_check(name: str, check_class: Type[TheoremCheck]) -> None:
    """
    Register a custom check, making it available via get_check() and verify_all().

    Checks registered at runtime only reach worker processes when the
    registering module is imported there too; use jobs=1 otherwise.
    """
    _CHECK_REGISTRY[name] = check_class
    global AVAILABLE_CHECKS
    AVAILABLE_CHECKS = list(_CHECK_REGISTRY.keys())


__all__ = [
    'TheoremCheck',
    'SequenceContext',
    'DEFAULT_SETTINGS',
    'get_check',
    'register_check',
    'AVAILABLE_CHECKS',
]
