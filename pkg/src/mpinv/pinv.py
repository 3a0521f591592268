"""Moore-Penrose inverse and its equivalent single-sided formulations.

The pseudoinverse of ``a`` is the unique ``x`` with

    a = a x a,   x = x a x,   (a x)* = a x,   (x a)* = x a.

Beyond solving that system via the SVD, this module scores how well an
arbitrary candidate ``x`` satisfies it (``penrose_residuals``) and
evaluates the catalog of twelve equivalent reformulations that trade
the four equations for one or two involution-flavored identities such
as ``a = x* a* a`` or ``a* = x a a*``.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .core import (
    DEFAULT_TOL,
    ConditionReport,
    Tolerance,
    adjoint,
    as_matrix,
    frobenius_norm,
    numerical_rank,
    svd,
)

__all__ = [
    "PenroseResiduals",
    "PinvResult",
    "PenroseResidualError",
    "FormulationId",
    "pinv",
    "pinv_matrix",
    "penrose_residuals",
    "formulation_residual",
    "formulation_holds",
    "involution_laws_check",
]


class PenroseResidualError(RuntimeError):
    """The SVD-built pseudoinverse failed its own defining equations."""

    def __init__(self, message, residuals):
        super().__init__(message)
        self.residuals = residuals


@dataclass(frozen=True)
class PenroseResiduals:
    """Relative residuals of the four defining equations.

    r1..r4 are scaled by ``max(1, ||a||_F, ||x||_F)``; ``absolute``
    keeps the raw Frobenius norms for diagnostics.
    """

    r1: float
    r2: float
    r3: float
    r4: float
    absolute: tuple = ()

    def max(self) -> float:
        return max(self.r1, self.r2, self.r3, self.r4)

    def within(self, tol: Tolerance = DEFAULT_TOL) -> bool:
        return self.max() <= tol.eq_tol

    def as_dict(self) -> dict:
        return {
            "r1": self.r1,
            "r2": self.r2,
            "r3": self.r3,
            "r4": self.r4,
            "absolute": list(self.absolute),
        }


@dataclass(frozen=True)
class PinvResult:
    pinv: np.ndarray
    rank: int
    residuals: PenroseResiduals

    def as_dict(self) -> dict:
        from .matrix_io import matrix_to_dict

        return {
            "pinv": matrix_to_dict(self.pinv),
            "rank": self.rank,
            "residuals": self.residuals.as_dict(),
        }


def penrose_residuals(a, x) -> PenroseResiduals:
    """Score an (a, x) pair against the four defining equations.

    ``x`` must be n-by-m for an m-by-n ``a``.  The caller decides
    pass/fail against its own tolerance.
    """
    am = as_matrix(a, "a")
    xm = as_matrix(x, "x")
    if xm.shape != (am.shape[1], am.shape[0]):
        raise ValueError(
            f"x must have shape {(am.shape[1], am.shape[0])}, got {xm.shape}"
        )
    ax = am @ xm
    xa = xm @ am
    abs_res = (
        frobenius_norm(ax @ am - am),
        frobenius_norm(xa @ xm - xm),
        frobenius_norm(adjoint(ax) - ax),
        frobenius_norm(adjoint(xa) - xa),
    )
    scale = max(1.0, frobenius_norm(am), frobenius_norm(xm))
    r = tuple(v / scale for v in abs_res)
    return PenroseResiduals(r[0], r[1], r[2], r[3], absolute=abs_res)


def pinv(a, tol: Tolerance = DEFAULT_TOL) -> PinvResult:
    """Moore-Penrose inverse via the SVD: ``V Sigma^+ U*``.

    Singular values above the rank cutoff are reciprocated, the rest
    are zeroed; the zero matrix maps to the zero matrix of transposed
    shape.  Construction fails if any Penrose residual of the result
    exceeds ``tol.eq_tol``.
    """
    am = as_matrix(a, "a")
    f = svd(am)
    r = numerical_rank(f, tol)
    if r == 0:
        x = np.zeros((am.shape[1], am.shape[0]), dtype=np.complex128)
    else:
        x = (f.v[:, :r] / f.sigma[:r]) @ adjoint(f.u[:, :r])
    res = penrose_residuals(am, x)
    if not res.within(tol):
        raise PenroseResidualError(
            f"pseudoinverse residuals {res.as_dict()} exceed eq_tol={tol.eq_tol}",
            res,
        )
    return PinvResult(pinv=x, rank=r, residuals=res)


def pinv_matrix(a, tol: Tolerance = DEFAULT_TOL) -> np.ndarray:
    """Shorthand for ``pinv(a, tol).pinv``."""
    return pinv(a, tol).pinv


class FormulationId(str, Enum):
    """Tags for the twelve equivalent reformulations of the Penrose system."""

    P21_I = "P21_I"
    P21_II = "P21_II"
    P21_III = "P21_III"
    P21_IV = "P21_IV"
    P22_II = "P22_II"
    P22_III = "P22_III"
    R23_II = "R23_II"
    R23_III = "R23_III"
    P24_II = "P24_II"
    P24_III = "P24_III"
    P24_IV = "P24_IV"
    P24_V = "P24_V"


# Each entry maps to the defining equation(s) of the formulation, as
# (lhs, rhs) builders over (a, x, a*, x*).  Single equations stand on
# their own; the grouped variants are conjunctions of two.
_FORMULATION_EQUATIONS = {
    FormulationId.P21_I: (lambda a, x, ah, xh: (a, xh @ ah @ a),),
    FormulationId.P21_II: (lambda a, x, ah, xh: (a, a @ ah @ xh),),
    FormulationId.P21_III: (lambda a, x, ah, xh: (x, x @ xh @ ah),),
    FormulationId.P21_IV: (lambda a, x, ah, xh: (x, ah @ xh @ x),),
    FormulationId.P22_II: (
        lambda a, x, ah, xh: (a, xh @ ah @ a),
        lambda a, x, ah, xh: (x, ah @ xh @ x),
    ),
    FormulationId.P22_III: (
        lambda a, x, ah, xh: (a, a @ ah @ xh),
        lambda a, x, ah, xh: (x, x @ xh @ ah),
    ),
    FormulationId.R23_II: (
        lambda a, x, ah, xh: (ah, ah @ a @ x),
        lambda a, x, ah, xh: (xh, xh @ x @ a),
    ),
    FormulationId.R23_III: (
        lambda a, x, ah, xh: (ah, x @ a @ ah),
        lambda a, x, ah, xh: (xh, a @ x @ xh),
    ),
    FormulationId.P24_II: (
        lambda a, x, ah, xh: (ah, x @ a @ ah),
        lambda a, x, ah, xh: (x, x @ xh @ ah),
    ),
    FormulationId.P24_III: (
        lambda a, x, ah, xh: (a, a @ ah @ xh),
        lambda a, x, ah, xh: (xh, a @ x @ xh),
    ),
    FormulationId.P24_IV: (
        lambda a, x, ah, xh: (ah, ah @ a @ x),
        lambda a, x, ah, xh: (x, ah @ xh @ x),
    ),
    FormulationId.P24_V: (
        lambda a, x, ah, xh: (a, xh @ ah @ a),
        lambda a, x, ah, xh: (xh, xh @ x @ a),
    ),
}


def formulation_residual(a, x, formulation: FormulationId) -> float:
    """Worst relative residual over the formulation's equation(s).

    Scaled by ``max(1, ||a||_F, ||x||_F)``, matching penrose_residuals.
    """
    am = as_matrix(a, "a")
    xm = as_matrix(x, "x")
    if xm.shape != (am.shape[1], am.shape[0]):
        raise ValueError(
            f"x must have shape {(am.shape[1], am.shape[0])}, got {xm.shape}"
        )
    ah = adjoint(am)
    xh = adjoint(xm)
    scale = max(1.0, frobenius_norm(am), frobenius_norm(xm))
    worst = 0.0
    for equation in _FORMULATION_EQUATIONS[FormulationId(formulation)]:
        lhs, rhs = equation(am, xm, ah, xh)
        worst = max(worst, frobenius_norm(lhs - rhs) / scale)
    return worst


def formulation_holds(a, x, formulation: FormulationId, tol: Tolerance = DEFAULT_TOL) -> bool:
    """True iff every equation of the formulation holds to ``tol.eq_tol``."""
    return formulation_residual(a, x, formulation) <= tol.eq_tol


def involution_laws_check(a, tol: Tolerance = DEFAULT_TOL) -> ConditionReport:
    """Check ``(a*)^+ = (a^+)*`` and ``(a^+)^+ = a`` for one matrix.

    Both identities hold for every matrix; the report exists to expose
    the residuals.
    """
    am = as_matrix(a, "a")
    x = pinv(am, tol).pinv
    report = ConditionReport(tolerance_used=tol)

    lhs = pinv(adjoint(am), tol).pinv
    rhs = adjoint(x)
    scale = max(1.0, frobenius_norm(lhs), frobenius_norm(rhs))
    report.add("adjoint_pinv_commute", frobenius_norm(lhs - rhs) / scale)

    back = pinv(x, tol).pinv
    scale = max(1.0, frobenius_norm(back), frobenius_norm(am))
    report.add("double_pinv_identity", frobenius_norm(back - am) / scale)
    return report
