"""Sketch configuration: thresholds, tolerances, and the table-size solver.

All thresholds live as exact rationals so that feasibility checks and report
thresholds never flip on float rounding; ``(0.4 - 0.1) * 10`` is exactly 3
here, not 3.0000000000000004.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import Decimal, InvalidOperation
from fractions import Fraction
from typing import Literal, Union

from .errors import InvalidParameterError

FractionLike = Union[Fraction, int, float, str]


def to_fraction(value: FractionLike, name: str = "value") -> Fraction:
    """Convert ``value`` to an exact rational.

    Floats are read through their shortest decimal repr, so 0.1 means exactly
    1/10 rather than the nearest binary double. Strings accept decimal
    ("0.35"), ratio ("7/20"), and scientific ("1e-3") forms.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise InvalidParameterError(f"{name} must be a number, got {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        if not math.isfinite(value):
            raise InvalidParameterError(f"{name} must be finite, got {value!r}")
        return Fraction(Decimal(repr(value)))
    if isinstance(value, str):
        try:
            if "/" in value:
                return Fraction(value)
            return Fraction(Decimal(value))
        except (ValueError, ZeroDivisionError, InvalidOperation) as exc:
            raise InvalidParameterError(f"cannot parse {name}={value!r}: {exc}") from exc
    raise InvalidParameterError(f"cannot interpret {name}={value!r} as a rational")


def _check_table_size(value: int, name: str) -> None:
    if not isinstance(value, int) or isinstance(value, bool) or value < 1:
        raise InvalidParameterError(f"{name} must be a positive integer, got {value!r}")


@dataclass(frozen=True)
class ChhParams:
    """Thresholds, tolerances, and table sizes for the two-dimensional sketch.

    ``phi1``/``phi2`` are the heavy-hitter fractions along the primary and
    secondary dimensions, ``eps1``/``eps2`` the report tolerances, and
    ``s1``/``s2`` the outer and inner table capacities. Instances normally
    come from :func:`solve_params` (tolerances drive the sizes) or
    :meth:`ChhParams.from_raw` (sizes fixed, tolerances implied by them).
    """

    phi1: Fraction
    phi2: Fraction
    eps1: Fraction
    eps2: Fraction
    s1: int
    s2: int

    def __post_init__(self):
        for field in ("phi1", "phi2", "eps1", "eps2"):
            object.__setattr__(self, field, to_fraction(getattr(self, field), field))
        if not 0 < self.phi1 < 1:
            raise InvalidParameterError(f"phi1 must lie in (0, 1), got {self.phi1}")
        if not 0 < self.phi2 < 1:
            raise InvalidParameterError(f"phi2 must lie in (0, 1), got {self.phi2}")
        if not 0 < self.eps1 <= self.phi1 / 2:
            raise InvalidParameterError(
                f"eps1 must satisfy 0 < eps1 <= phi1/2 = {self.phi1 / 2}, got {self.eps1}"
            )
        if self.eps2 <= 0:
            raise InvalidParameterError(f"eps2 must be positive, got {self.eps2}")
        _check_table_size(self.s1, "s1")
        _check_table_size(self.s2, "s2")

    @classmethod
    def from_raw(
        cls, phi1: FractionLike, phi2: FractionLike, s1: int, s2: int
    ) -> "ChhParams":
        """Wrap caller-chosen table sizes, e.g. for parameter sweeps.

        The tolerances become the values the sizes actually deliver: ``eps1``
        is 1/s1 (capped at phi1/2 so downstream arithmetic stays defined) and
        ``eps2`` is the feasibility left-hand side at these sizes. The
        constraint checks below then report whether those implied tolerances
        are admissible, rather than refusing to build the sketch.
        """
        phi1 = to_fraction(phi1, "phi1")
        phi2 = to_fraction(phi2, "phi2")
        if not 0 < phi1 < 1:
            raise InvalidParameterError(f"phi1 must lie in (0, 1), got {phi1}")
        if not 0 < phi2 < 1:
            raise InvalidParameterError(f"phi2 must lie in (0, 1), got {phi2}")
        _check_table_size(s1, "s1")
        _check_table_size(s2, "s2")
        eps1 = min(Fraction(1, s1), phi1 / 2)
        alpha = (1 + phi2) / (phi1 - eps1)
        eps2 = Fraction(1, s2) + alpha / s1
        return cls(phi1, phi2, eps1, eps2, s1, s2)

    @property
    def alpha(self) -> Fraction:
        """(1 + phi2) / (phi1 - eps1), the constant coupling s1 and s2."""
        return (1 + self.phi2) / (self.phi1 - self.eps1)

    @property
    def case(self) -> Literal["I", "II"]:
        """Which sizing regime applies: "I" when eps1 >= eps2 / (2 alpha)."""
        return "I" if self.eps1 >= self.eps2 / (2 * self.alpha) else "II"

    def constraint1_satisfied(self) -> bool:
        """Outer table large enough for the primary tolerance: 1/s1 <= eps1."""
        return Fraction(1, self.s1) <= self.eps1

    def constraint2_satisfied(self) -> bool:
        """Secondary feasibility: 1/s2 + alpha/s1 <= eps2, with eps2 <= phi2.

        The range check rides along because an eps2 above phi2 promises
        nothing (every secondary would clear a negative floor); this is what
        turns the flag false for undersized raw tables, whose implied eps2
        equals the left-hand side by construction.
        """
        lhs = Fraction(1, self.s2) + self.alpha / self.s1
        return lhs <= self.eps2 and self.eps2 <= self.phi2

    def constraints_satisfied(self) -> bool:
        return self.constraint1_satisfied() and self.constraint2_satisfied()


def solve_params(
    phi1: FractionLike,
    phi2: FractionLike,
    eps1: FractionLike,
    eps2: FractionLike,
) -> ChhParams:
    """Pick the smallest table sizes that meet both feasibility constraints.

    Writing the sizes as rates u = 1/s1, v = 1/s2, the constraints are
    u <= eps1 and alpha*u + v <= eps2; minimizing s1*s2 means maximizing u*v.
    The product is maximized on the second constraint's boundary, giving two
    regimes:

    * eps1 >= eps2 / (2 alpha): the unconstrained optimum u = eps2/(2 alpha)
      is admissible, so s1 = 2 alpha / eps2 and s2 = 2 / eps2 (case "I").
    * otherwise the first constraint binds: s1 = 1/eps1 and
      s2 = 1/(eps2 - alpha*eps1) (case "II").

    Sizes are rounded up to integers; rounding can only slacken the
    constraints, but a repair loop guards the second one anyway.
    """
    phi1 = to_fraction(phi1, "phi1")
    phi2 = to_fraction(phi2, "phi2")
    eps1 = to_fraction(eps1, "eps1")
    eps2 = to_fraction(eps2, "eps2")
    if not 0 < phi1 < 1:
        raise InvalidParameterError(f"phi1 must lie in (0, 1), got {phi1}")
    if not 0 < phi2 < 1:
        raise InvalidParameterError(f"phi2 must lie in (0, 1), got {phi2}")
    if not 0 < eps1 <= phi1 / 2:
        raise InvalidParameterError(
            f"eps1 must satisfy 0 < eps1 <= phi1/2 = {phi1 / 2}, got {eps1}"
        )
    if not 0 < eps2 <= phi2:
        raise InvalidParameterError(
            f"eps2 must satisfy 0 < eps2 <= phi2 = {phi2}, got {eps2}"
        )

    alpha = (1 + phi2) / (phi1 - eps1)
    if eps1 >= eps2 / (2 * alpha):
        s1 = math.ceil(2 * alpha / eps2)
        s2 = math.ceil(2 / eps2)
    else:
        s1 = math.ceil(1 / eps1)
        s2 = math.ceil(1 / (eps2 - alpha * eps1))
    while Fraction(1, s2) + alpha / s1 > eps2:
        s2 += 1
    return ChhParams(phi1, phi2, eps1, eps2, s1, s2)
