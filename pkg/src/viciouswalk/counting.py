"""Exact counts of constrained involutions and of vicious-walker paths.

``f(N, p)`` is the number of fixed-point-free involutions of ``{1..2N}``
whose longest decreasing subsequence has length at most ``2p``.  It equals
``Z_2N((1..p); (1..p))``, the number of ``2N``-step configurations of ``p``
vicious walkers on ``l >= 1`` that start and end on sites ``1..p`` where
every step moves exactly one walker by one site.

Five evaluations are provided and all return exact Python integers:

* :func:`count_brute` -- enumerate every involution.
* :func:`count_walk_dp` -- step the walker configurations forward.
* :func:`z_n_determinant` -- the ``p``-fold trigonometric integral with the
  reflection determinant, evaluated term by term as constant terms.
* :func:`z_n_symmetric` -- the equal-endpoint form with ``|det|^2``.
* :func:`count_rains` -- the symplectic-group moment, from the product form
  of its weight expanded as a Laurent polynomial.

The integrals are never evaluated numerically.  Every one reduces to
``(1/2pi) int (2 cos t)^m e^{iat} dt = C(m, (m + a)/2)``, the number of
``m``-step +-1 walks with net displacement ``a``.
"""
from __future__ import annotations

import enum
import math
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations
from typing import Iterator, Sequence

import numpy as np

from .tableaux import lds

# Work limits; beyond these the call raises ResourceLimitError.
BRUTE_MAX_N = 8
DP_MAX_STATES = 2_000_000
EXPANSION_MAX_TERMS = 20_000_000


class ResourceLimitError(RuntimeError):
    pass


class Method(enum.Enum):
    BRUTE = "brute"
    WALK_DP = "walkdp"
    DETERMINANT = "determinant"
    SYMMETRIC = "symmetric"
    RAINS = "rains"


@dataclass(frozen=True)
class CountResult:
    value: int
    method: Method

    def __post_init__(self):
        if self.value < 0:
            raise ValueError("counts are non-negative")

    def __int__(self) -> int:
        return self.value


@dataclass(frozen=True)
class Endpoints:
    start: tuple[int, ...]
    end: tuple[int, ...]

    def __post_init__(self):
        start = tuple(int(v) for v in self.start)
        end = tuple(int(v) for v in self.end)
        if len(start) != len(end):
            raise ValueError("start and end must hold the same number of walkers")
        for name, pos in (("start", start), ("end", end)):
            if pos and pos[0] < 1:
                raise ValueError(f"{name} positions must be >= 1")
            if any(a >= b for a, b in zip(pos, pos[1:])):
                raise ValueError(f"{name} positions must be strictly increasing")
        object.__setattr__(self, "start", start)
        object.__setattr__(self, "end", end)

    @property
    def p(self) -> int:
        return len(self.start)

    @classmethod
    def packed(cls, p: int) -> "Endpoints":
        """Walkers on ``1..p`` at both ends."""
        return cls(tuple(range(1, p + 1)), tuple(range(1, p + 1)))


def double_factorial(n: int) -> int:
    """``n!!`` with ``(-1)!! = 0!! = 1``."""
    return math.prod(range(n, 0, -2)) if n > 0 else 1


def catalan(n: int) -> int:
    return math.comb(2 * n, n) // (n + 1)


# --------------------------------------------------------------------------
# brute force over involutions


def fpf_involutions(N: int) -> Iterator[tuple[int, ...]]:
    """Every fixed-point-free involution of ``{1..2N}`` as a word."""
    sigma = [0] * (2 * N)

    def rec(free: list[int]):
        if not free:
            yield tuple(sigma)
            return
        a = free[0]
        for k in range(1, len(free)):
            b = free[k]
            sigma[a - 1], sigma[b - 1] = b, a
            yield from rec(free[1:k] + free[k + 1:])

    yield from rec(list(range(1, 2 * N + 1)))


@lru_cache(maxsize=None)
def lds_histogram(N: int) -> dict[int, int]:
    """Number of fixed-point-free involutions of ``{1..2N}`` by their lds."""
    if N > BRUTE_MAX_N:
        raise ResourceLimitError(f"brute force limited to N <= {BRUTE_MAX_N}, got {N}")
    return dict(Counter(lds(s) for s in fpf_involutions(N)))


def count_brute(N: int, p: int) -> CountResult:
    if N < 0 or p < 0:
        raise ValueError("N and p must be non-negative")
    hist = lds_histogram(N)
    return CountResult(sum(v for k, v in hist.items() if k <= 2 * p), Method.BRUTE)


# --------------------------------------------------------------------------
# dynamic programming over walker positions


def walk_dp_layer(n: int, start: Sequence[int], end: Sequence[int] | None = None) -> dict[tuple[int, ...], int]:
    """Number of ``n``-step vicious-walker paths from ``start`` to every reachable end.

    With ``end`` given, states that can no longer reach it are pruned and
    only the entry for ``end`` is meaningful.
    """
    start = tuple(start)
    layer = {start: 1}
    for t in range(n):
        remaining = n - t - 1
        nxt: dict[tuple[int, ...], int] = {}
        for pos, cnt in layer.items():
            p = len(pos)
            for k in range(p):
                for step in (-1, 1):
                    v = pos[k] + step
                    if v < 1:
                        continue
                    if k > 0 and v <= pos[k - 1]:
                        continue
                    if k < p - 1 and v >= pos[k + 1]:
                        continue
                    new = pos[:k] + (v,) + pos[k + 1:]
                    if end is not None and sum(abs(a - b) for a, b in zip(new, end)) > remaining:
                        continue
                    nxt[new] = nxt.get(new, 0) + cnt
        if len(nxt) > DP_MAX_STATES:
            raise ResourceLimitError(f"walk DP exceeded {DP_MAX_STATES} states at step {t + 1}")
        layer = nxt
    return layer


def count_walk_dp(n: int, e: Endpoints) -> CountResult:
    """``Z_n(start; end)`` by stepping the configurations forward."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if e.p == 0:
        return CountResult(1, Method.WALK_DP)
    return CountResult(walk_dp_layer(n, e.start, e.end).get(e.end, 0), Method.WALK_DP)


# --------------------------------------------------------------------------
# constant-term machinery shared by the integral formulas


@lru_cache(maxsize=None)
def ct_cos(m: int, a: int) -> int:
    """Constant term of ``(z + 1/z)^m z^a``: ``C(m, (m + a)/2)`` or 0."""
    a = abs(a)
    if a > m or (m + a) % 2:
        return 0
    return math.comb(m, (m + a) // 2)


def compositions(n: int, p: int) -> Iterator[tuple[int, ...]]:
    """Weak compositions of ``n`` into ``p`` parts."""
    if p == 0:
        if n == 0:
            yield ()
        return
    for bars in combinations(range(n + p - 1), p - 1):
        prev = -1
        parts = []
        for b in bars:
            parts.append(b - prev - 1)
            prev = b
        parts.append(n + p - 2 - prev)
        yield tuple(parts)


def multinomial(parts: Sequence[int]) -> int:
    out, total = 1, 0
    for k in parts:
        total += k
        out *= math.comb(total, k)
    return out


def det_int(rows: Sequence[Sequence[int]]) -> int:
    """Integer determinant by cofactor expansion along the first row."""
    n = len(rows)
    if n == 0:
        return 1
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    total = 0
    for k, a in enumerate(rows[0]):
        if a:
            minor = [row[:k] + row[k + 1:] for row in rows[1:]]
            total += (-1) ** k * a * det_int(minor)
    return total


def _perm_sign(perm: Sequence[int]) -> int:
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


def _check_size(n: int, p: int, per_term: int) -> None:
    work = math.comb(n + p - 1, max(p - 1, 0)) * per_term
    if work > EXPANSION_MAX_TERMS:
        raise ResourceLimitError(f"expansion needs ~{work} terms (limit {EXPANSION_MAX_TERMS})")


def z_n_determinant(n: int, e: Endpoints) -> CountResult:
    """``Z_n(start; end)`` from the trigonometric integral with the
    determinant ``det[e^{i(l_j - l0_k)t_j} - e^{i(l_j + l0_k)t_j}]``.

    The power of the cosine sum is expanded multinomially; for each
    composition ``m`` of ``n`` the integral factorises row by row and becomes
    ``det[C(m_j; l_j - l0_k) - C(m_j; l_j + l0_k)]``.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    p = e.p
    _check_size(n, p, math.factorial(p))
    total = 0
    for m in compositions(n, p):
        rows = [[ct_cos(m[j], e.end[j] - e.start[k]) - ct_cos(m[j], e.end[j] + e.start[k])
                 for k in range(p)] for j in range(p)]
        d = det_int(rows)
        if d:
            total += multinomial(m) * d
    return CountResult(total, Method.DETERMINANT)


def z_n_symmetric(n: int, start: Sequence[int]) -> CountResult:
    """``Z_n(start; start)`` from the form with ``|det[z_j^{l_k} - z_j^{-l_k}]|^2``.

    Both determinants are expanded over permutations ``P, Q``; per walker the
    factor ``(z^a - z^-a)(z^-b - z^b)`` integrates to
    ``2 C(m; a - b) - 2 C(m; a + b)``.  The overall ``1/(2^p p!)`` must
    divide the sum exactly.
    """
    start = tuple(Endpoints(tuple(start), tuple(start)).start)
    if n < 0:
        raise ValueError("n must be non-negative")
    p = len(start)
    _check_size(n, p, math.factorial(p) ** 2)
    perms = [(P, _perm_sign(P)) for P in permutations(range(p))]
    total = 0
    for m in compositions(n, p):
        # g[j][a][b] for walker j and start indices a, b
        g = [[[2 * (ct_cos(m[j], start[a] - start[b]) - ct_cos(m[j], start[a] + start[b]))
               for b in range(p)] for a in range(p)] for j in range(p)]
        acc = 0
        for P, sp in perms:
            for Q, sq in perms:
                term = sp * sq
                for j in range(p):
                    term *= g[j][P[j]][Q[j]]
                    if not term:
                        break
                acc += term
        if acc:
            total += multinomial(m) * acc
    norm = 2 ** p * math.factorial(p)
    value, rem = divmod(total, norm)
    if rem:
        raise ArithmeticError(f"symmetric form not divisible by {norm}: {total}")
    return CountResult(value, Method.SYMMETRIC)


# --------------------------------------------------------------------------
# the symplectic moment from the product-form weight

Laurent = dict  # exponent tuple -> integer coefficient


def _mul(a: Laurent, b: Laurent) -> Laurent:
    out: Laurent = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            out[e] = out.get(e, 0) + ca * cb
    return {e: c for e, c in out.items() if c}


def _mono(p: int, exps: dict[int, int] | None = None) -> tuple[int, ...]:
    e = [0] * p
    for j, v in (exps or {}).items():
        e[j] += v
    return tuple(e)


@lru_cache(maxsize=None)
def symplectic_weight(p: int) -> tuple[tuple[tuple[int, ...], int], ...]:
    """Laurent expansion of ``prod_j |1 - z_j^2|^2 prod_{j<k} |1 - z_j z_k|^2 |z_j - z_k|^2``
    on the unit torus, as ``((exponents), coefficient)`` pairs."""
    w: Laurent = {(0,) * p: 1}
    for j in range(p):
        # |1 - z^2|^2 = 2 - z^2 - z^-2
        f = {_mono(p): 2, _mono(p, {j: 2}): -1, _mono(p, {j: -2}): -1}
        w = _mul(w, f)
    for j in range(p):
        for k in range(j + 1, p):
            # |1 - z_j z_k|^2 = 2 - z_j z_k - 1/(z_j z_k)
            f1 = {_mono(p): 2, _mono(p, {j: 1, k: 1}): -1, _mono(p, {j: -1, k: -1}): -1}
            # |z_j - z_k|^2 = 2 - z_j/z_k - z_k/z_j
            f2 = {_mono(p): 2, _mono(p, {j: 1, k: -1}): -1, _mono(p, {j: -1, k: 1}): -1}
            w = _mul(_mul(w, f1), f2)
    return tuple(sorted(w.items()))


def count_rains(N: int, p: int) -> CountResult:
    """``f(N, p)`` as the ``2N``-th moment of the trace over ``USp(2p)``.

    The eigenvalue weight is expanded as a Laurent polynomial in
    ``z_j = e^{i t_j}``; the average of ``(sum_j 2 cos t_j)^{2N}`` against it
    is the constant term of the product, divided by ``2^p p!`` (the half-range
    integrals over ``[0, pi]`` are half of the full-circle ones).
    """
    if N < 0 or p < 0:
        raise ValueError("N and p must be non-negative")
    n = 2 * N
    weight = symplectic_weight(p)
    _check_size(n, p, len(weight))
    comps = [(multinomial(m), m) for m in compositions(n, p)]
    total = 0
    for e, coef in weight:
        s = 0
        for mult, m in comps:
            term = mult
            for j in range(p):
                term *= ct_cos(m[j], e[j])
                if not term:
                    break
            s += term
        total += coef * s
    norm = 2 ** p * math.factorial(p)
    value, rem = divmod(total, norm)
    if rem:
        raise ArithmeticError(f"symplectic moment not divisible by {norm}: {total}")
    return CountResult(value, Method.RAINS)


# --------------------------------------------------------------------------
# identity checks


def vandermonde_c_residual(thetas: Sequence[float]) -> float:
    """``| |det[z_j^k - z_j^-k]|^2 - product form |`` at ``z_j = e^{i thetas_j}``."""
    t = np.asarray(thetas, dtype=float)
    p = t.size
    z = np.exp(1j * t)
    k = np.arange(1, p + 1)
    lhs = abs(np.linalg.det(z[:, None] ** k - z[:, None] ** (-k))) ** 2 if p else 1.0
    rhs = np.prod(np.abs(1 - z**2) ** 2)
    for j in range(p):
        for l in range(j + 1, p):
            rhs *= abs(1 - z[j] * z[l]) ** 2 * abs(z[j] - z[l]) ** 2
    return float(abs(lhs - rhs))


def convolution_check(n1: int, n2: int, start: Sequence[int]) -> bool:
    """Check ``Z_{n1+n2}(s; s) = sum_l Z_{n1}(s; l) Z_{n2}(l; s)``.

    The sum runs over ordered ``l`` with ``l_p <= max(s) + n1``; every other
    end point is out of reach in ``n1`` steps.
    """
    start = tuple(start)
    p = len(start)
    lhs = z_n_determinant(n1 + n2, Endpoints(start, start)).value
    top = (max(start) if start else 0) + n1
    rhs = 0
    for l in combinations(range(1, top + 1), p):
        a = z_n_determinant(n1, Endpoints(start, l)).value
        if a:
            rhs += a * z_n_determinant(n2, Endpoints(l, start)).value
    return lhs == rhs


def f_inv(N: int, p: int, method: Method | str = Method.DETERMINANT) -> CountResult:
    """``f(N, p)`` by any of the five methods."""
    method = Method(method)
    if method is Method.BRUTE:
        return count_brute(N, p)
    if method is Method.RAINS:
        return count_rains(N, p)
    if p == 0:
        return CountResult(int(N == 0), method)
    if method is Method.SYMMETRIC:
        return z_n_symmetric(2 * N, tuple(range(1, p + 1)))
    e = Endpoints.packed(p)
    if method is Method.WALK_DP:
        return count_walk_dp(2 * N, e)
    return z_n_determinant(2 * N, e)
