"""The GOE Tracy-Widom distribution ``F1`` and a random-matrix cross-check.

``F1`` comes from the Hastings-McLeod solution ``q`` of ``q'' = s q + 2 q^3``
with ``q(s) ~ Ai(s)`` as ``s -> +inf``::

    F2(x) = exp(-int_x^inf (s - x) q(s)^2 ds)
    F1(x) = sqrt(F2(x)) * exp(-0.5 * int_x^inf q(s) ds)

The ODE is integrated backwards from ``s_max`` together with the running
integrals, so one pass yields the whole table.
"""
from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field

import numpy as np
from scipy import integrate, linalg, special
from scipy.interpolate import PchipInterpolator

from .stats import EmpiricalCdf

AIRY_DOMAIN = 15.0


class PainleveBlowupError(RuntimeError):
    def __init__(self, s: float, q: float):
        super().__init__(f"Painleve II solution diverged near s = {s:.4g} (q = {q:.4g}); "
                         "tighten the tolerances or lower s_max")
        self.s = s
        self.q = q


def airy(x):
    """``Ai(x)`` for ``-15 <= x <= 15`` (scipy's Cephes/AMOS implementation)."""
    xa = np.asarray(x, dtype=float)
    if np.any(np.abs(xa) > AIRY_DOMAIN) or not np.all(np.isfinite(xa)):
        raise OverflowError(f"airy() is only supported on [-{AIRY_DOMAIN}, {AIRY_DOMAIN}]")
    ai = special.airy(xa)[0]
    return float(ai) if ai.ndim == 0 else ai


def airy_prime(x):
    xa = np.asarray(x, dtype=float)
    if np.any(np.abs(xa) > AIRY_DOMAIN):
        raise OverflowError(f"airy_prime() is only supported on [-{AIRY_DOMAIN}, {AIRY_DOMAIN}]")
    aip = special.airy(xa)[1]
    return float(aip) if aip.ndim == 0 else aip


@dataclass(frozen=True)
class F1Table:
    grid: np.ndarray
    values: np.ndarray
    f2: np.ndarray
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "_interp", PchipInterpolator(self.grid, self.values, extrapolate=False))

    def cdf(self, x, return_flag: bool = False):
        """Monotone interpolation of the table; queries off the grid clamp to 0 or 1."""
        xa = np.asarray(x, dtype=float)
        out = np.asarray(self._interp(xa), dtype=float)
        below = xa < self.grid[0]
        above = xa > self.grid[-1]
        out = np.where(below, 0.0, np.where(above, 1.0, out))
        out = np.clip(out, 0.0, 1.0)
        clamped = bool(np.any(below | above))
        if clamped and not return_flag:
            warnings.warn("F1 queried outside the tabulated range; clamped to {0, 1}", stacklevel=2)
        out = float(out) if out.ndim == 0 else out
        return (out, clamped) if return_flag else out

    def __call__(self, x):
        return self.cdf(x, return_flag=True)[0]

    def quantile(self, u: float) -> float:
        return float(np.interp(u, self.values, self.grid))

    def to_csv(self, path) -> None:
        with open(path, "w") as fh:
            fh.write("x,F1\n")
            for x, v in zip(self.grid, self.values):
                fh.write(f"{x:.10g},{v:.15g}\n")

    @classmethod
    def from_csv(cls, path) -> "F1Table":
        data = np.loadtxt(path, delimiter=",", skiprows=1, ndmin=2)
        return cls(data[:, 0], data[:, 1], np.full(len(data), np.nan), {"source": str(path)})


def _tails(s_max: float) -> tuple[float, float, float]:
    """``int_s^inf Ai``, ``int_s^inf Ai^2`` and ``int_s^inf (t - s) Ai^2`` at ``s = s_max``."""
    upper = s_max + 30.0
    i1 = integrate.quad(lambda t: special.airy(t)[0], s_max, upper, epsabs=1e-16)[0]
    j = integrate.quad(lambda t: special.airy(t)[0] ** 2, s_max, upper, epsabs=1e-20)[0]
    i2 = integrate.quad(lambda t: (t - s_max) * special.airy(t)[0] ** 2, s_max, upper, epsabs=1e-20)[0]
    return i1, j, i2


def _rhs(s, y):
    q, dq, _, j, _ = y
    return [dq, s * q + 2.0 * q**3, -q, -q * q, -j]


def build_f1_table(x_min: float = -6.0, x_max: float = 5.0, num: int = 1101, s_max: float = 8.0,
                   rtol: float = 1e-12, atol: float = 1e-10, max_step: float = np.inf,
                   method: str = "DOP853") -> F1Table:
    """Tabulate ``F1`` (and ``F2``) on ``num`` equally spaced points of ``[x_min, x_max]``."""
    if not x_min < x_max <= s_max:
        raise ValueError("need x_min < x_max <= s_max")
    grid = np.linspace(x_min, x_max, num)
    i1, j, i2 = _tails(s_max)
    y0 = [airy(s_max), airy_prime(s_max), i1, j, i2]

    def blowup(s, y):
        return 10.0 * (1.0 + math.sqrt(abs(s))) - abs(y[0])
    blowup.terminal = True

    # q starts near 1e-7 and any admixture of the growing Bi-like solution is
    # amplified on the way down, so q and q' get a far tighter absolute tolerance
    atols = [atol * 1e-12, atol * 1e-12, atol, atol, atol]
    sol = integrate.solve_ivp(_rhs, (s_max, x_min), y0, method=method, t_eval=grid[::-1],
                              rtol=rtol, atol=atols, max_step=max_step, events=blowup)
    if sol.status == 1 or not sol.success:
        s_bad = float(sol.t[-1]) if sol.t.size else s_max
        raise PainleveBlowupError(s_bad, float(sol.y[0, -1]) if sol.y.size else float("nan"))
    q, _, I1, _, I2 = sol.y[:, ::-1]
    # q must stay positive on the Hastings-McLeod branch
    if np.any(q <= 0):
        k = int(np.argmax(q <= 0))
        raise PainleveBlowupError(float(grid[k]), float(q[k]))
    f2 = np.exp(-I2)
    f1 = np.sqrt(f2) * np.exp(-0.5 * I1)
    meta = {"s_max": s_max, "rtol": rtol, "atol": atol, "max_step": max_step,
            "method": method, "x_min": x_min, "x_max": x_max, "num": num}
    return F1Table(grid, f1, f2, meta)


def goe_scaled_edge(lam_max, M: int):
    """Soft-edge scaling ``lambda = sqrt(2M) + s / (sqrt(2) M^(1/6))`` solved for ``s``."""
    return (np.asarray(lam_max) - math.sqrt(2 * M)) * math.sqrt(2) * M ** (1 / 6)


def goe_largest_eigenvalue(M: int, rng, method: str = "tridiagonal") -> float:
    """Largest eigenvalue of an ``M x M`` GOE matrix with density ``exp(-tr X^2 / 2)``
    (diagonal variance 1, off-diagonal variance 1/2).

    ``"tridiagonal"`` draws the Dumitriu-Edelman tridiagonal model, which has
    the same eigenvalue law; ``"dense"`` builds the full matrix.
    """
    if method == "dense":
        a = rng.standard_normal((M, M))
        x = (a + a.T) / 2.0
        # (a_ii + a_ii)/2 = a_ii has variance 1; off-diagonal (a_ij + a_ji)/2 has 1/2
        return float(linalg.eigvalsh(x, subset_by_index=[M - 1, M - 1])[0])
    if method != "tridiagonal":
        raise ValueError(f"unknown method {method!r}")
    d = rng.standard_normal(M)
    e = np.sqrt(rng.chisquare(np.arange(M - 1, 0, -1)) / 2.0)
    return float(linalg.eigvalsh_tridiagonal(d, e, select="i", select_range=(M - 1, M - 1))[0])


def goe_mc_samples(M: int, n_samples: int, rng, method: str = "tridiagonal") -> np.ndarray:
    rng = rng if isinstance(rng, np.random.Generator) else np.random.default_rng(rng)
    lam = np.fromiter((goe_largest_eigenvalue(M, rng, method) for _ in range(n_samples)),
                      dtype=float, count=n_samples)
    return goe_scaled_edge(lam, M)


def goe_mc_cdf(M: int, n_samples: int, rng, method: str = "tridiagonal") -> EmpiricalCdf:
    """Empirical CDF of the scaled largest GOE eigenvalue."""
    if M < 2 or n_samples < 1:
        raise ValueError("need M >= 2 and n_samples >= 1")
    return EmpiricalCdf(goe_mc_samples(M, n_samples, rng, method))
