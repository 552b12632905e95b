"""Closed-form graded dimensions and the decomposition identities they satisfy.

A graded dimension lives in Z[q, q^-1][tau]/(tau^2 - 1); tau marks the odd
part of the Z/2 grading.  Only three families are available in closed form:
the colored circle, a square that splits into two graphs, and a ladder
that splits into two graphs.
"""

from __future__ import annotations

from dataclasses import dataclass

from .qalg import LaurentPoly, ONE, TauPoly, quantum_binomial, quantum_int, substitute_tau_one

__all__ = [
    "GradedDim",
    "gdim_circle",
    "gdim_decomp3",
    "check_decomp3_identity",
    "gdim_decomp4",
    "check_decomp4_identity",
    "decomp3_grid",
    "decomp4_grid",
]

TAU = TauPoly.tau()


@dataclass(frozen=True)
class GradedDim:
    value: TauPoly

    def __add__(self, other: "GradedDim") -> "GradedDim":
        return GradedDim(self.value + other.value)

    def __mul__(self, other) -> "GradedDim":
        other = other.value if isinstance(other, GradedDim) else other
        return GradedDim(self.value * other)

    __rmul__ = __mul__

    @property
    def tau_parity(self) -> int | None:
        """0 or 1 when the value is purely even or purely odd, else None."""
        if self.value.odd.is_zero():
            return 0
        if self.value.even.is_zero():
            return 1
        return None

    def at_tau_one(self) -> LaurentPoly:
        return substitute_tau_one(self.value)

    def __str__(self):
        return str(self.value)


def _qpow(e: int) -> LaurentPoly:
    return LaurentPoly.monomial(2 * e)


def _one_plus_tau_q(e: int) -> TauPoly:
    return TauPoly(ONE, _qpow(e))


def _tau_product(lo: int, hi: int, N: int) -> TauPoly:
    """prod_{j=lo}^{hi} (1 + tau q^(2j-N-1)); empty product is 1."""
    out = TauPoly(ONE)
    for j in range(lo, hi + 1):
        out = out * _one_plus_tau_q(2 * j - N - 1)
    return out


def gdim_circle(m: int, N: int) -> GradedDim:
    """tau^m [N choose m] for the m-colored circle."""
    if not 0 <= m <= N:
        raise ValueError(f"circle color must satisfy 0 <= m <= N, got m={m}, N={N}")
    b = quantum_binomial(N, m)
    return GradedDim(TauPoly(0, b) if m % 2 else TauPoly(b))


def gdim_decomp3(m: int, N: int) -> tuple[GradedDim, GradedDim, GradedDim]:
    """(gdim Gamma, gdim Gamma_0, gdim Gamma_1) for the square with an m-colored side."""
    if not 1 <= m <= N - 1:
        raise ValueError(f"need 1 <= m <= N-1, got m={m}, N={N}")
    P = _tau_product(1, m, N)
    g = TAU * _qpow(-m) * quantum_int(N - m) * _one_plus_tau_q(2 * m - N + 1) * P
    g0 = _one_plus_tau_q(1 - N) * P
    g1 = _qpow(1 - m) * _one_plus_tau_q(2 * m - N - 1) * P
    return GradedDim(g), GradedDim(g0), GradedDim(g1)


def check_decomp3_identity(m: int, N: int) -> bool:
    g, g0, g1 = gdim_decomp3(m, N)
    return g.value == g0.value + TAU * quantum_int(N - m - 1) * g1.value


def _check_decomp4_params(l: int, m: int, n: int, N: int) -> None:
    if not (0 <= n <= m <= N and 0 <= l and m + l - 1 <= N):
        raise ValueError(f"need 0 <= n <= m <= N, l >= 0, m+l-1 <= N; got l={l}, m={m}, n={n}, N={N}")


def gdim_decomp4(l: int, m: int, n: int, N: int) -> tuple[GradedDim, GradedDim, GradedDim]:
    """(gdim Gamma, gdim Gamma_0, gdim Gamma_1) for the ladder decomposition."""
    _check_decomp4_params(l, m, n, N)
    Q = _tau_product(1, m + l - 1, N)
    g0 = _qpow(-l * m + m) * _one_plus_tau_q(2 * l - N - 1) * Q
    if l + m <= N:
        g1 = _qpow(-l * m) * _tau_product(1, m + l, N)
        g = _qpow(-l * m + m - n) * quantum_binomial(m, n) * _one_plus_tau_q(2 * n + 2 * l - N - 1) * Q
    else:
        g1 = TauPoly()
        g = _qpow(-l * m + m) * quantum_binomial(m - 1, n) * _one_plus_tau_q(N + 1 - 2 * m) * Q
    return GradedDim(g), GradedDim(g0), GradedDim(g1)


def check_decomp4_identity(l: int, m: int, n: int, N: int) -> bool:
    g, g0, g1 = gdim_decomp4(l, m, n, N)
    rhs = quantum_binomial(m - 1, n) * g0.value + quantum_binomial(m - 1, n - 1) * g1.value
    return g.value == rhs


def decomp3_grid(max_N: int) -> list[tuple[int, int]]:
    return [(m, N) for N in range(2, max_N + 1) for m in range(1, N)]


def decomp4_grid(max_N: int) -> list[tuple[int, int, int, int]]:
    """Admissible (l, m, n, N); m >= 1 since the pictures carry an (m-1)-colored edge."""
    return [
        (l, m, n, N)
        for N in range(1, max_N + 1)
        for m in range(1, N + 1)
        for n in range(0, m + 1)
        for l in range(0, N + 2 - m)
    ]
