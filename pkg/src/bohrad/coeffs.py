"""Coefficient-modulus sequences with optional certified geometric tails."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, List, Optional

from .errors import DomainError


@dataclass(frozen=True)
class GeometricTail:
    """Certificate |a_n| <= constant * ratio**n for every index past the
    explicitly stored moduli (n is the absolute coefficient index)."""

    ratio: float
    constant: float

    def __post_init__(self) -> None:
        if not 0.0 < self.ratio < 1.0:
            raise DomainError(f"tail ratio must lie in (0, 1), got {self.ratio!r}")
        if not self.constant >= 0.0 or not math.isfinite(self.constant):
            raise DomainError(f"tail constant must be finite and >= 0, got {self.constant!r}")


@dataclass
class CoefficientSequence:
    """Moduli (|a_m|, |a_{m+1}|, ...) of a series vanishing to order m.

    ``moduli[j]`` is |a_{m+j}|.  Formula-backed sequences carry ``term_fn``
    (absolute index -> modulus) and can be extended on demand; a
    ``GeometricTail`` certifies everything beyond the stored prefix.
    """

    m: int
    moduli: List[float]
    tail: Optional[GeometricTail] = None
    term_fn: Optional[Callable[[int], float]] = field(default=None, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.m < 0:
            raise DomainError(f"vanishing order must be >= 0, got {self.m}")
        if not self.moduli:
            raise DomainError("at least one coefficient modulus is required")
        self.moduli = [float(v) for v in self.moduli]
        for v in self.moduli:
            if not v >= 0.0 or not math.isfinite(v):
                raise DomainError(f"moduli must be finite and >= 0, got {v!r}")

    @property
    def extendable(self) -> bool:
        return self.term_fn is not None

    @property
    def tail_start(self) -> int:
        """First absolute index not covered by the stored moduli."""
        return self.m + len(self.moduli)

    def modulus(self, n: int) -> float:
        """|a_n| when it is known exactly, else raises DomainError."""
        if n < self.m:
            return 0.0
        j = n - self.m
        if j < len(self.moduli):
            return self.moduli[j]
        if self.term_fn is not None:
            return float(self.term_fn(n))
        raise DomainError(f"coefficient index {n} is beyond the stored prefix")

    def modulus_or_zero(self, n: int) -> float:
        """|a_n|, treating unknown indices of a fixed sequence as zero."""
        if n < self.m:
            return 0.0
        j = n - self.m
        if j < len(self.moduli):
            return self.moduli[j]
        if self.term_fn is not None:
            return float(self.term_fn(n))
        return 0.0

    def ensure_terms(self, count: int) -> int:
        """Grow the stored prefix to at least ``count`` moduli if possible.

        Returns the stored length afterwards.
        """
        if self.term_fn is not None:
            while len(self.moduli) < count:
                self.moduli.append(float(self.term_fn(self.m + len(self.moduli))))
        return len(self.moduli)

    def explicit_sup(self) -> float:
        """An upper bound for sup_n |a_n| (stored prefix plus certificate)."""
        sup = max(self.moduli)
        if self.tail is not None:
            sup = max(sup, self.tail.constant * self.tail.ratio ** self.tail_start)
        return sup

    def to_json_dict(self) -> dict:
        out: dict = {"m": self.m, "moduli": list(self.moduli)}
        if self.tail is not None:
            out["tail"] = {"ratio": self.tail.ratio, "constant": self.tail.constant}
        return out

    @classmethod
    def from_json_dict(cls, data: dict) -> "CoefficientSequence":
        if not isinstance(data, dict):
            raise DomainError("coefficient file must contain a JSON object")
        try:
            m = int(data["m"])
            moduli = [float(v) for v in data["moduli"]]
        except (KeyError, TypeError, ValueError) as exc:
            raise DomainError(f"malformed coefficient object: {exc}") from exc
        tail = None
        if data.get("tail") is not None:
            t = data["tail"]
            try:
                tail = GeometricTail(float(t["ratio"]), float(t["constant"]))
            except (KeyError, TypeError, ValueError) as exc:
                raise DomainError(f"malformed tail certificate: {exc}") from exc
        return cls(m=m, moduli=moduli, tail=tail)


def constant_function(c: float) -> CoefficientSequence:
    """Coefficients of the constant map z -> c."""
    return CoefficientSequence(m=0, moduli=[abs(c)])


__all__ = ["GeometricTail", "CoefficientSequence", "constant_function"]
