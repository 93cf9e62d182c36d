"""Jacobi continued fractions.

    mu0 / (1 - a0 x - b1 x^2 / (1 - a1 x - b2 x^2 / (1 - ...)))

A fraction stores a finite prefix of alphas and betas and an optional
repeating tail (alpha*, beta*). Without a tail the fraction terminates:
missing alphas are 0 and the first missing beta is 0.
"""
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from ..utils.exceptions import HankelDegenerate, ZeroBeta
from ..utils.logger import algebra_logger
from .coeffring import Coefficient, is_unit, is_zero, render, to_coefficient, unit_inverse
from .matrices import LowerTriMatrix
from .series import Series

ZERO = to_coefficient(0)


def _coerce_all(values: Sequence) -> Tuple[Coefficient, ...]:
    return tuple(to_coefficient(v) for v in values)


@dataclass(frozen=True)
class RecurrencePair:
    """Monic three-term recurrence p_{n+1} = (x - alpha_n) p_n - beta_n p_{n-1}."""

    alphas: Tuple[Coefficient, ...] = ()
    betas: Tuple[Coefficient, ...] = ()
    tail_alpha: Optional[Coefficient] = None
    tail_beta: Optional[Coefficient] = None

    def __post_init__(self):
        object.__setattr__(self, "alphas", _coerce_all(self.alphas))
        object.__setattr__(self, "betas", _coerce_all(self.betas))
        if (self.tail_alpha is None) != (self.tail_beta is None):
            raise ValueError("a tail needs both alpha and beta")
        if self.tail_alpha is not None:
            object.__setattr__(self, "tail_alpha", to_coefficient(self.tail_alpha))
            object.__setattr__(self, "tail_beta", to_coefficient(self.tail_beta))
            if is_zero(self.tail_beta):
                raise ZeroBeta("the repeating tail has beta = 0")
        for k, b in enumerate(self.betas, start=1):
            if is_zero(b):
                raise ZeroBeta(f"beta_{k} = 0")

    @classmethod
    def constant(cls, alpha, beta) -> "RecurrencePair":
        return cls(tail_alpha=alpha, tail_beta=beta)

    @property
    def has_tail(self) -> bool:
        return self.tail_alpha is not None

    def alpha(self, k: int) -> Coefficient:
        if k < len(self.alphas):
            return self.alphas[k]
        return self.tail_alpha if self.has_tail else ZERO

    def beta(self, k: int) -> Coefficient:
        """beta_k for k >= 1; zero past the stored prefix of a tail-less fraction."""
        if k < 1:
            raise ValueError("betas are indexed from 1")
        if k <= len(self.betas):
            return self.betas[k - 1]
        return self.tail_beta if self.has_tail else ZERO


@dataclass(frozen=True)
class JFraction(RecurrencePair):
    mu0: Coefficient = field(default_factory=lambda: to_coefficient(1))

    def __post_init__(self):
        super().__post_init__()
        object.__setattr__(self, "mu0", to_coefficient(self.mu0))
        if not self.has_tail and self.alphas and len(self.betas) not in (len(self.alphas) - 1, len(self.alphas)):
            raise ValueError(
                f"{len(self.alphas)} alphas need {len(self.alphas) - 1} or {len(self.alphas)} betas"
            )

    @classmethod
    def periodic(cls, mu0, alphas: Sequence, betas: Sequence, alpha, beta) -> "JFraction":
        return cls(alphas=tuple(alphas), betas=tuple(betas), tail_alpha=alpha, tail_beta=beta, mu0=mu0)

    @classmethod
    def finite(cls, mu0, alphas: Sequence, betas: Sequence) -> "JFraction":
        return cls(alphas=tuple(alphas), betas=tuple(betas), mu0=mu0)

    def recurrence(self) -> RecurrencePair:
        return RecurrencePair(self.alphas, self.betas, self.tail_alpha, self.tail_beta)

    def prefix(self, depth: int) -> "JFraction":
        """The explicit alphas a_0..a_{depth-1} and betas b_1..b_depth, without a tail."""
        return JFraction.finite(
            self.mu0,
            [self.alpha(k) for k in range(depth)],
            [self.beta(k) for k in range(1, depth + 1)],
        )

    def to_series(self, order: int) -> Series:
        return jfraction_to_series(self, order)

    def to_json(self, variable: str = "u") -> dict:
        tail = None
        if self.has_tail:
            tail = {"alpha": render(self.tail_alpha, variable), "beta": render(self.tail_beta, variable)}
        return {
            "mu0": render(self.mu0, variable),
            "alphas": [render(a, variable) for a in self.alphas],
            "betas": [render(b, variable) for b in self.betas],
            "tail": tail,
        }


def jfraction_to_series(j: JFraction, order: int) -> Series:
    """Expand bottom-up from level order // 2 + 1; deeper levels only touch x^(order+1) and beyond."""
    levels = order // 2 + 1
    x = Series.variable(order)
    denominator = Series.one(order) - x * j.alpha(levels)
    for k in range(levels - 1, -1, -1):
        beta = j.beta(k + 1)
        level = Series.one(order) - x * j.alpha(k)
        if not is_zero(beta):
            level = level - denominator.inverse().shift_up(2) * beta
        denominator = level
    return Series.constant(j.mu0, order) / denominator


def series_to_jfraction(a: Series, depth: int) -> JFraction:
    """Peel a J-fraction off a moment series.

    With g normalized to g(0) = 1, each level reads r = 1 - 1/g,
    alpha_k = [x] r, beta_{k+1} = [x^2] r, and continues with
    (r - alpha_k x) / (beta_{k+1} x^2). Division by beta is exact, so
    polynomial betas such as 1 - u are supported.
    """
    if a.order < 2 * depth:
        raise ValueError(f"depth {depth} needs order {2 * depth}, series has order {a.order}")
    mu0 = a.coeff(0)
    if not is_unit(mu0):
        raise ValueError(f"A(0) = {render(mu0)} is not a unit")
    g = a * unit_inverse(mu0)
    alphas: List[Coefficient] = []
    betas: List[Coefficient] = []
    for k in range(depth):
        r = Series.one(g.order) - g.inverse()
        alpha = r.coeff(1)
        rest = r - Series.monomial(alpha, 1, g.order)
        beta = rest.coeff(2)
        if is_zero(beta):
            algebra_logger.debug(f"J-fraction peeling stopped: beta_{k + 1} = 0")
            raise HankelDegenerate(k + 1)
        alphas.append(alpha)
        betas.append(beta)
        if k + 1 < depth:
            g = rest.shift_down(2).exact_scale_div(beta)
    return JFraction.finite(mu0, alphas, betas)


def heilermann(j: RecurrencePair, n: int, a0=None) -> Coefficient:
    """h_n = a0^(n+1) * prod_{k=1..n} beta_k^(n+1-k); alphas play no part."""
    if a0 is None:
        a0 = j.mu0 if isinstance(j, JFraction) else 1
    result = to_coefficient(a0) ** (n + 1)
    for k in range(1, n + 1):
        result = result * j.beta(k) ** (n + 1 - k)
    return result


def favard_array(rec: RecurrencePair, n: int) -> LowerTriMatrix:
    """Row r holds the coefficients of the monic polynomial p_r(x)."""
    rows: List[List[Coefficient]] = []
    previous: List[Coefficient] = []
    current: List[Coefficient] = [to_coefficient(1)]
    for r in range(n):
        rows.append(current)
        alpha = rec.alpha(r)
        nxt = [ZERO] + current
        for i, c in enumerate(current):
            nxt[i] = nxt[i] - alpha * c
        if r >= 1:
            beta = rec.beta(r)
            if is_zero(beta):
                raise ZeroBeta(f"beta_{r} = 0")
            for i, c in enumerate(previous):
                nxt[i] = nxt[i] - beta * c
        previous, current = current, nxt
    return LowerTriMatrix.from_rows(rows)
