"""Shared numerical tolerances.

Every approximate comparison in the package goes through one Tolerance
object so the accuracy contract lives in a single place.
"""

from dataclasses import dataclass


@dataclass(frozen=True)
class Tolerance:
    """Absolute plus relative comparison tolerance.

    close(a, b) tests |a - b| <= max(abs_tol, rel_tol * max(|a|, |b|)),
    so tiny quantities are compared absolutely and large ones relatively.
    """

    abs_tol: float = 1e-12
    rel_tol: float = 1e-9

    def close(self, a: float, b: float) -> bool:
        return abs(a - b) <= max(self.abs_tol, self.rel_tol * max(abs(a), abs(b)))

    def is_zero(self, a: float) -> bool:
        return abs(a) <= self.abs_tol


DEFAULT_TOL = Tolerance()

# Slack for one-sided inequality checks: lhs <= rhs is accepted when
# lhs <= rhs + INEQUALITY_SLACK.  Wider than DEFAULT_TOL.abs_tol because
# the quantities compared are sums of many evaluations.
INEQUALITY_SLACK = 1e-9
