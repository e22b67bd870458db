"""Closed-form expressions for the six indices on both graph families.

Each formula is implemented exactly as printed in its published derivation
(no algebraic rearrangement) so every term can be audited against the
source text. The double-wheel abc4 formula exists in two variants: the one
the statement prints, which duplicates the plain abc formula, and the one
its own derivation arrives at. Brute force confirms the derived variant,
so that is the default; the stated variant is kept for the errata report.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .indices import IndexKind
from .partition import NEIGHBOR_SUM

DW = "dw"
HANOI = "hanoi"

# Largest integer a double represents exactly; 3**(n+1) crosses it at n = 33.
_EXACT_FLOAT_LIMIT = 2**53


class Variant(enum.Enum):
    AS_STATED = "as_stated"
    PROOF_DERIVED = "proof_derived"

    @classmethod
    def parse(cls, name: str) -> Variant:
        normalized = name.strip().lower().replace("-", "_")
        for variant in cls:
            if variant.value == normalized:
                return variant
        raise ValueError(f"unknown variant {name!r} (known: as_stated, proof_derived)")


@dataclass(frozen=True)
class ClosedFormResult:
    family: str
    kind: IndexKind
    n: int
    variant: Variant
    value: float
    # True when 3**(n+1) is too large to convert to float exactly, so the
    # evaluated value carries conversion rounding on top of arithmetic error.
    exactness_warning: bool


def dw_closed_form(
    kind: IndexKind, n: int, variant: Variant = Variant.PROOF_DERIVED
) -> ClosedFormResult:
    """Closed-form index value for the double-wheel family, n >= 3.

    ``variant`` only matters for ``abc4``; for every other kind the two
    variants are the same expression.
    """
    if n < 3:
        raise ValueError(f"double-wheel closed forms need n >= 3, got {n}")
    if kind is IndexKind.RANDIC:
        value = 2 * n / 3 + 2 * n / math.sqrt(6 * n)
    elif kind is IndexKind.SUM_CONNECTIVITY:
        value = 2 * n / math.sqrt(6) + 2 * n / math.sqrt(3 + 2 * n)
    elif kind is IndexKind.ABC:
        value = 4 * n / 3 + 2 * n * math.sqrt((1 + 2 * n) / (6 * n))
    elif kind is IndexKind.GA:
        value = 2 * n + 4 * n * math.sqrt(6 * n) / (3 + 2 * n)
    elif kind is IndexKind.ABC4:
        if variant is Variant.AS_STATED:
            # Printed statement; identical to the abc formula above and
            # contradicted by brute force. See the errata report.
            value = 4 * n / 3 + 2 * n * math.sqrt((1 + 2 * n) / (6 * n))
        else:
            value = (2 * n / (2 * n + 6)) * math.sqrt(4 * n + 10) + 2 * n * math.sqrt(
                (2 * n + 1) / (3 * n**2 + 9 * n)
            )
    else:  # GA5
        value = 2 * n + 4 * n * math.sqrt(3 * n**2 + 9 * n) / (4 * n + 3)
    return ClosedFormResult(DW, kind, n, variant, value, False)


def hanoi_min_n(kind: IndexKind) -> int:
    """Smallest n the Hanoi closed form for ``kind`` is valid at.

    The degree partition stabilizes at n = 2, the neighbor-sum partition
    at n = 3 (at n = 2 the corner triangles touch and the edge classes
    differ), so the neighbor-sum kinds need n >= 3.
    """
    return 3 if kind.labeling == NEIGHBOR_SUM else 2


def hanoi_closed_form(
    kind: IndexKind, n: int, variant: Variant = Variant.PROOF_DERIVED
) -> ClosedFormResult:
    """Closed-form index value for the Hanoi family.

    Every Hanoi formula has a single printed form, so the two variants
    evaluate identically; the parameter exists for API symmetry. The
    ``3**(n + 1)`` term is computed in exact integer arithmetic and
    converted once, with ``exactness_warning`` set when the conversion
    rounds (n >= 33).
    """
    floor = hanoi_min_n(kind)
    if n < floor:
        raise ValueError(f"hanoi {kind.value} closed form needs n >= {floor}, got {n}")
    p = 3 ** (n + 1)
    if kind is IndexKind.RANDIC:
        value = math.sqrt(6) + p / 6 - 5 / 2
    elif kind is IndexKind.SUM_CONNECTIVITY:
        value = 6 / math.sqrt(5) + (p - 15) / (2 * math.sqrt(6))
    elif kind is IndexKind.ABC:
        value = 3 * math.sqrt(2) + 3**n - 5
    elif kind is IndexKind.GA:
        value = 12 * math.sqrt(6) / 5 + (p - 15) / 2
    elif kind is IndexKind.ABC4:
        value = 3 * math.sqrt(7 / 32) + 6 * math.sqrt(5 / 24) + 2 * p / 9 - 13 / 3
    else:  # GA5
        value = 12**1.5 / 7 + 3 + 72 * math.sqrt(2) / 17 + (p - 33) / 2
    return ClosedFormResult(HANOI, kind, n, variant, value, p > _EXACT_FLOAT_LIMIT)


def closed_form(
    family: str, kind: IndexKind, n: int, variant: Variant = Variant.PROOF_DERIVED
) -> ClosedFormResult:
    """Dispatch to the family's closed form; ``family`` is ``dw`` or ``hanoi``."""
    if family == DW:
        return dw_closed_form(kind, n, variant)
    if family == HANOI:
        return hanoi_closed_form(kind, n, variant)
    raise ValueError(f"unknown family {family!r} (known: dw, hanoi)")
