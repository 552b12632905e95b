"""Partitions and symmetric polynomials evaluated at concrete rational alphabets.

Identities are checked by exact evaluation rather than in a symbolic
symmetric-function ring; the one exception is :func:`power_derivative_check`,
which expands polynomials in the elementary symmetric functions exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations
from math import prod
from typing import Iterable, Sequence

from .qalg import LaurentPoly

__all__ = [
    "Partition",
    "Alphabet",
    "conjugate",
    "box_complement",
    "partitions_in_box",
    "partitions_of",
    "elementary_eval",
    "complete_eval",
    "power_eval",
    "h_from_e_determinant",
    "p_from_e_determinant",
    "newton_identity_residual",
    "schur_eval",
    "schur_neg_eval",
    "kostka",
    "pieri_e",
    "sylvester_pair",
    "grassmannian_basis",
    "grassmannian_trace",
    "grassmannian_poincare",
    "power_derivative_check",
]


@dataclass(frozen=True, order=False)
class Partition:
    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p < 0 for p in parts):
            raise ValueError(f"negative part in {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"parts must be weakly decreasing: {parts}")
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, *parts: int) -> "Partition":
        return cls(tuple(parts))

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i: int) -> int:
        """1-based part access, zero past the end (matches lambda_j notation)."""
        if i < 1:
            raise IndexError("partition parts are indexed from 1")
        return self.parts[i - 1] if i <= len(self.parts) else 0

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def fits_box(self, m: int, n: int) -> bool:
        return self.length <= m and (not self.parts or self.parts[0] <= n)

    def dominates_lex(self, other: "Partition") -> bool:
        """self > other: the first nonzero difference self_j - other_j is positive."""
        k = max(self.length, other.length)
        for j in range(1, k + 1):
            d = self[j] - other[j]
            if d:
                return d > 0
        return False

    def __str__(self):
        return "(" + ",".join(map(str, self.parts)) + ")"


@dataclass(frozen=True)
class Alphabet:
    points: tuple[Fraction, ...]

    def __init__(self, points: Iterable):
        object.__setattr__(self, "points", tuple(Fraction(p) for p in points))

    def __len__(self):
        return len(self.points)

    def negated(self) -> "Alphabet":
        return Alphabet(-x for x in self.points)


def _as_partition(lam) -> Partition:
    return lam if isinstance(lam, Partition) else Partition(tuple(lam))


def _as_alphabet(a) -> Alphabet:
    return a if isinstance(a, Alphabet) else Alphabet(a)


# -- partitions -----------------------------------------------------------------


def conjugate(lam) -> Partition:
    lam = _as_partition(lam)
    if not lam.parts:
        return Partition()
    return Partition(tuple(sum(1 for p in lam.parts if p >= i) for i in range(1, lam.parts[0] + 1)))


def box_complement(lam, m: int, n: int) -> Partition:
    """Complement of lam inside the m x n box, rotated back into a partition."""
    lam = _as_partition(lam)
    if not lam.fits_box(m, n):
        raise ValueError(f"{lam} does not fit the {m}x{n} box")
    return Partition(tuple(n - lam[m + 1 - j] for j in range(1, m + 1)))


def partitions_in_box(m: int, n: int) -> list[Partition]:
    """All partitions with at most m parts, each at most n, in reverse-lex order."""

    def rec(rows, cap):
        if rows == 0:
            yield ()
            return
        for first in range(cap, -1, -1):
            for rest in rec(rows - 1, first):
                yield (first,) + rest

    return [Partition(p) for p in rec(m, n)]


def partitions_of(k: int, max_length: int | None = None) -> list[Partition]:
    def rec(rest, cap, slots):
        if rest == 0:
            yield ()
            return
        if slots == 0:
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in rec(rest - first, first, slots - 1):
                yield (first,) + tail

    slots = k if max_length is None else max_length
    return [Partition(p) for p in rec(k, k, slots)]


# -- e, h, p ------------------------------------------------------------------------


def elementary_eval(k: int, alphabet) -> Fraction:
    a = _as_alphabet(alphabet).points
    if k < 0 or k > len(a):
        return Fraction(0)
    # coefficients of prod (1 + x t)
    coeffs = [Fraction(1)]
    for x in a:
        coeffs = [c + (x * coeffs[i - 1] if i else 0) for i, c in enumerate(coeffs + [Fraction(0)])]
    return coeffs[k]


def complete_eval(k: int, alphabet) -> Fraction:
    a = _as_alphabet(alphabet).points
    if k < 0:
        return Fraction(0)
    # h_k(x_1..x_i) = h_k(x_1..x_{i-1}) + x_i h_{k-1}(x_1..x_i)
    row = [Fraction(1)] + [Fraction(0)] * k
    for x in a:
        for j in range(1, k + 1):
            row[j] += x * row[j - 1]
    return row[k]


def power_eval(k: int, alphabet) -> Fraction:
    a = _as_alphabet(alphabet).points
    if k < 0:
        return Fraction(0)
    if k == 0:
        return Fraction(len(a))
    return sum((x**k for x in a), Fraction(0))


def _det(matrix: Sequence[Sequence[Fraction]]) -> Fraction:
    """Fraction-exact Gaussian elimination."""
    n = len(matrix)
    if n == 0:
        return Fraction(1)
    m = [list(map(Fraction, row)) for row in matrix]
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        p = m[col][col]
        det *= p
        for r in range(col + 1, n):
            f = m[r][col] / p
            if f:
                for c in range(col, n):
                    m[r][c] -= f * m[col][c]
    return det


def _e_lookup(e_values: Sequence) -> callable:
    # e_values[j-1] = X_j; X_0 = 1, missing or out-of-range -> 0
    def X(j):
        if j == 0:
            return Fraction(1)
        if j < 0 or j > len(e_values):
            return Fraction(0)
        return Fraction(e_values[j - 1])

    return X


def h_from_e_determinant(k: int, e_values: Sequence) -> Fraction:
    """h_k from the k x k Hessenberg determinant in X_1..X_k."""
    if k < 0:
        return Fraction(0)
    X = _e_lookup(e_values)
    mat = [[X(j - i + 1) if j - i + 1 >= 0 else Fraction(0) for j in range(k)] for i in range(k)]
    return _det(mat)


def p_from_e_determinant(k: int, e_values: Sequence) -> Fraction:
    """p_k from the same determinant with last column scaled by (k - i)."""
    if k <= 0:
        return Fraction(0)
    X = _e_lookup(e_values)
    mat = []
    for i in range(k):
        row = []
        for j in range(k):
            d = j - i + 1
            v = X(d) if d >= 0 else Fraction(0)
            if j == k - 1:
                v *= k - i
            row.append(v)
        mat.append(row)
    return _det(mat)


def newton_identity_residual(l: int, alphabet) -> Fraction:
    if l < 1:
        raise ValueError("Newton's identity is stated for l >= 1")
    a = _as_alphabet(alphabet)
    lhs = sum(
        ((-1) ** k * elementary_eval(k, a) * power_eval(l - k, a) for k in range(l)),
        Fraction(0),
    )
    return lhs - (-1) ** (l + 1) * l * elementary_eval(l, a)


# -- Schur polynomials ---------------------------------------------------------------


def _schur_bialternant(lam: Partition, a: Alphabet) -> Fraction:
    m = len(a)
    if lam.length > m:
        raise ValueError(f"{lam} has more parts than the alphabet has letters")
    xs = a.points
    if len(set(xs)) != m:
        raise ZeroDivisionError("bialternant needs pairwise distinct points")
    num = _det([[x ** (lam[j] + m - j) for j in range(1, m + 1)] for x in xs])
    vand = prod((xs[i] - xs[j] for i in range(m) for j in range(i + 1, m)), start=Fraction(1))
    return num / vand


def _jacobi_trudi(lam: Partition, entry) -> Fraction:
    n = lam.length
    return _det([[entry(lam[i] - i + j) for j in range(1, n + 1)] for i in range(1, n + 1)])


def schur_eval(lam, alphabet, route: str = "jacobi_trudi_h") -> Fraction:
    lam = _as_partition(lam)
    a = _as_alphabet(alphabet)
    if route == "bialternant":
        return _schur_bialternant(lam, a)
    if route == "jacobi_trudi_h":
        return _jacobi_trudi(lam, lambda k: complete_eval(k, a))
    if route == "jacobi_trudi_e":
        return _jacobi_trudi(conjugate(lam), lambda k: elementary_eval(k, a))
    raise ValueError(f"unknown Schur route {route!r}")


def schur_neg_eval(lam, alphabet) -> Fraction:
    """S_lam(-X) via h_j(-X) = (-1)^j X_j."""
    lam = _as_partition(lam)
    a = _as_alphabet(alphabet)
    if lam.parts and lam.parts[0] > len(a):
        raise ValueError(f"{lam} has a part larger than the alphabet size")
    return _jacobi_trudi(lam, lambda k: (-1) ** k * elementary_eval(k, a) if k >= 0 else Fraction(0))


# -- Kostka numbers and Pieri ------------------------------------------------------


def kostka(mu, lam) -> int:
    """Number of semistandard tableaux of shape mu and content lam."""
    mu = _as_partition(mu)
    lam = _as_partition(lam)
    if mu.size != lam.size:
        return 0
    shape = mu.parts
    content = lam.parts

    # fill entries 1, 2, ... in turn; each value occupies a horizontal strip
    def rec(filled: tuple[int, ...], value: int) -> int:
        if value > len(content):
            return 1 if filled == shape else 0
        count = content[value - 1]
        return sum(rec(nxt, value + 1) for nxt in _horizontal_strips(filled, shape, count))

    return rec(tuple(0 for _ in shape), 1)


def _horizontal_strips(inner: tuple[int, ...], outer: tuple[int, ...], size: int):
    # new row lengths r with inner_i <= r_i <= min(outer_i, inner_{i-1}) summing to size added
    n = len(outer)

    def rec(i, remaining, acc):
        if i == n:
            if remaining == 0:
                yield tuple(acc)
            return
        cap = outer[i] if i == 0 else min(outer[i], inner[i - 1])
        for r in range(inner[i], cap + 1):
            add = r - inner[i]
            if add > remaining:
                break
            acc.append(r)
            yield from rec(i + 1, remaining - add, acc)
            acc.pop()

    yield from rec(0, size, [])


def pieri_e(k: int, lam, max_length: int | None = None) -> list[Partition]:
    """Shapes mu with e_k * s_lam = sum s_mu: lam plus a vertical strip of k boxes."""
    if k < 1:
        raise ValueError("pieri_e needs k >= 1")
    lam = _as_partition(lam)
    rows = lam.length + k
    if max_length is not None:
        rows = min(rows, max_length)
    out = []
    for chosen in combinations(range(rows), k):
        mu = [lam[i + 1] for i in range(rows)]
        for i in chosen:
            mu[i] += 1
        if all(mu[i] >= mu[i + 1] for i in range(rows - 1)):
            out.append(Partition(tuple(mu)))
    return sorted(out, key=lambda p: p.parts, reverse=True)


# -- duality pairings ----------------------------------------------------------------


def sylvester_pair(lam, mu, m: int, n: int) -> int:
    lam, mu = _as_partition(lam), _as_partition(mu)
    if not (lam.fits_box(m, n) and mu.fits_box(m, n)):
        raise ValueError(f"partitions must fit the {m}x{n} box")
    return int(all(lam[j] + mu[m + 1 - j] == n for j in range(1, m + 1)))


def grassmannian_basis(m: int, N: int) -> list[Partition]:
    if not 0 <= m <= N:
        raise ValueError(f"need 0 <= m <= N, got m={m}, N={N}")
    return partitions_in_box(m, N - m)


def grassmannian_trace(lam, mu, m: int, N: int) -> int:
    if not 0 <= m <= N:
        raise ValueError(f"need 0 <= m <= N, got m={m}, N={N}")
    return sylvester_pair(lam, mu, m, N - m)


def grassmannian_poincare(m: int, N: int) -> LaurentPoly:
    """Sum of q^(2|lam|) over the Schur basis of H*(G(m, N))."""
    acc: dict[int, int] = {}
    for lam in grassmannian_basis(m, N):
        e = 4 * lam.size
        acc[e] = acc.get(e, 0) + 1
    return LaurentPoly(acc)


# -- exact polynomials in X_1..X_m for the derivative identity ---------------------

# A polynomial is a dict from exponent tuples (length m) to Fraction.


def _poly_const(c, m):
    return {(0,) * m: Fraction(c)} if c else {}


def _poly_var(j, m, scale=1):
    # scale * X_j, with X_0 = 1 and X_j = 0 outside 1..m
    if j == 0:
        return _poly_const(scale, m)
    if j < 0 or j > m or scale == 0:
        return {}
    e = [0] * m
    e[j - 1] = 1
    return {tuple(e): Fraction(scale)}


def _poly_add(a, b):
    out = dict(a)
    for k, v in b.items():
        s = out.get(k, 0) + v
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return out


def _poly_mul(a, b):
    out = {}
    for ka, va in a.items():
        for kb, vb in b.items():
            k = tuple(x + y for x, y in zip(ka, kb))
            s = out.get(k, 0) + va * vb
            if s:
                out[k] = s
            else:
                out.pop(k, None)
    return out


def _poly_det(mat):
    # Leibniz expansion; matrices here are at most 6 x 6
    n = len(mat)
    if n == 0:
        return {(): Fraction(1)} if not mat else {}
    total = {}
    for perm in permutations(range(n)):
        sign = _perm_sign(perm)
        term = None
        for i, j in enumerate(perm):
            entry = mat[i][j]
            if not entry:
                term = {}
                break
            term = entry if term is None else _poly_mul(term, entry)
        if term:
            total = _poly_add(total, {k: sign * v for k, v in term.items()})
    return total


def _perm_sign(perm) -> int:
    sign, seen = 1, [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def _hessenberg(m: int, k: int, scale_last: bool):
    if k == 0:
        return _poly_const(0 if scale_last else 1, m)
    mat = []
    for i in range(k):
        row = []
        for j in range(k):
            d = j - i + 1
            s = (k - i) if (scale_last and j == k - 1) else 1
            row.append(_poly_var(d, m, s) if d >= 0 else {})
        mat.append(row)
    return _poly_det(mat)


def expand_power_sum(m: int, l: int):
    """p_{m,l} as an exact polynomial in X_1..X_m."""
    return _hessenberg(m, l, scale_last=True) if l > 0 else {}


def expand_complete(m: int, l: int):
    """h_{m,l} as an exact polynomial in X_1..X_m."""
    if l < 0:
        return {}
    return _hessenberg(m, l, scale_last=False)


def _poly_diff(poly, j):
    out = {}
    for k, v in poly.items():
        if k[j - 1]:
            e = list(k)
            e[j - 1] -= 1
            out[tuple(e)] = out.get(tuple(e), 0) + v * k[j - 1]
    return {k: v for k, v in out.items() if v}


def power_derivative_check(m: int, l: int, j: int) -> bool:
    """d/dX_j p_{m,l} == (-1)^(j+1) * l * h_{m,l-j}, compared term by term."""
    if not 1 <= j <= m:
        raise ValueError(f"need 1 <= j <= m, got j={j}, m={m}")
    lhs = _poly_diff(expand_power_sum(m, l), j)
    h = expand_complete(m, l - j)
    rhs = {k: (-1) ** (j + 1) * l * v for k, v in h.items() if v}
    return lhs == rhs
