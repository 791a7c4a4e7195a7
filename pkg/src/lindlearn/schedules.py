"""Polynomial coefficient functions on [0, T] and their interpolation machinery.

Covers evaluation, Markov derivative constants, Chebyshev-measure node
draws, robust fitting (least squares and an l1 mode run as iteratively
reweighted least squares), truncation-degree selection for smooth
black-box schedules, Dyson degree growth and Chebyshev extrapolation
factors.

Internally everything is held in the Chebyshev basis on [0, T] for
conditioning; monomial coefficients are converted on demand.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from numpy.polynomial import chebyshev as C
from numpy.polynomial import polynomial as P


class FitError(ValueError):
    pass


@dataclass(frozen=True)
class PolySchedule:
    """A real polynomial on [0, T], stored as Chebyshev coefficients.

    ``coeffs`` are Chebyshev-basis coefficients with the domain map
    t -> 2t/T - 1.  Use :meth:`from_monomial` / :meth:`monomial_coeffs`
    to cross between bases.
    """

    T: float
    coeffs: tuple[float, ...]

    def __post_init__(self):
        if self.T <= 0:
            raise ValueError("interval length must be positive")
        c = np.atleast_1d(np.asarray(self.coeffs, dtype=float))
        c = C.chebtrim(c, tol=0.0)
        if c.size == 0:
            c = np.zeros(1)
        object.__setattr__(self, "coeffs", tuple(float(v) for v in c))

    @classmethod
    def from_monomial(cls, coeffs, T: float) -> "PolySchedule":
        """Build from monomial coefficients a_0..a_m of p(t) = sum a_k t^k."""
        mono = np.atleast_1d(np.asarray(coeffs, dtype=float))
        if mono.size == 0:
            mono = np.zeros(1)
        # Horner substitution of t = T(u+1)/2 into the monomial polynomial
        u_poly = np.array([T / 2.0, T / 2.0])
        comp = np.zeros(1)
        for a in mono[::-1]:
            comp = P.polyadd(P.polymul(comp, u_poly), [a])
        return cls(T, tuple(P.poly2cheb(comp)))

    @classmethod
    def constant(cls, value: float, T: float) -> "PolySchedule":
        return cls(T, (float(value),))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def _u(self, t):
        return 2.0 * np.asarray(t, dtype=float) / self.T - 1.0

    def __call__(self, t):
        return C.chebval(self._u(t), self.coeffs)

    def eval(self, t):
        return self(t)

    def derivative(self) -> "PolySchedule":
        d = C.chebder(np.asarray(self.coeffs)) * (2.0 / self.T)
        if d.size == 0:
            d = np.zeros(1)
        return PolySchedule(self.T, tuple(d))

    def monomial_coeffs(self) -> np.ndarray:
        """Coefficients a_k with p(t) = sum_k a_k t^k."""
        cu = C.cheb2poly(np.asarray(self.coeffs))
        # substitute u = 2t/T - 1
        t_poly = np.array([-1.0, 2.0 / self.T])
        out = np.zeros(1)
        for a in cu[::-1]:
            out = P.polyadd(P.polymul(out, t_poly), [a])
        return out

    def sup_norm(self, grid: int = 4001) -> float:
        """Sup norm on [0, T] via dense grid plus derivative-root refinement."""
        ts = np.linspace(0.0, self.T, grid)
        best = float(np.max(np.abs(self(ts))))
        d = C.chebder(np.asarray(self.coeffs))
        if d.size:
            roots = C.chebroots(d)
            roots = roots[np.abs(roots.imag) < 1e-9].real
            roots = roots[(roots >= -1.0) & (roots <= 1.0)]
            if roots.size:
                ts_crit = (roots + 1.0) * self.T / 2.0
                best = max(best, float(np.max(np.abs(self(ts_crit)))))
        return best

    def to_config(self) -> dict:
        return {"basis": "chebyshev", "coeffs": list(self.coeffs), "T": self.T}


@dataclass(frozen=True)
class NodePlan:
    """Random Chebyshev-measure nodes on (0, T) for one fitting job."""

    nodes: tuple[float, ...]
    target_precision: float
    degree: int
    seed: int
    c_node: float = 4.0

    @property
    def count(self) -> int:
        return len(self.nodes)

    @property
    def min_node(self) -> float:
        return min(self.nodes)


def markov_constant(m: int, T: float) -> float:
    """Derivative inflation bound 2 m^2 / T for degree-m polynomials on [0, T]."""
    if m < 0:
        raise ValueError("degree must be nonnegative")
    if T <= 0:
        raise ValueError("interval length must be positive")
    if m == 0:
        return 0.0
    return 2.0 * m * m / T


def node_count(m: int, delta: float, c_node: float = 4.0) -> int:
    """Number of Chebyshev-measure draws for a stable degree-m fit."""
    base = c_node * max(m, 1) * math.log((m + 2) / delta)
    return max(m + 1, int(math.ceil(base)))


def chebyshev_nodes(T: float, count: int, rng: np.random.Generator,
                    degree: int = 0, target_precision: float = 0.0,
                    seed: int = 0) -> NodePlan:
    """Draw i.i.d. nodes from the arcsine (Chebyshev) density on (0, T).

    Uses the inverse CDF t = (T/2)(1 - cos(pi U)) with U uniform; draws
    exactly on the boundary are nudged inward.
    """
    if count < 1:
        raise ValueError("need at least one node")
    u = rng.uniform(0.0, 1.0, size=count)
    t = 0.5 * T * (1.0 - np.cos(np.pi * u))
    eps = 1e-12 * T
    t = np.clip(t, eps, T - eps)
    return NodePlan(nodes=tuple(sorted(float(v) for v in t)),
                    target_precision=target_precision, degree=degree, seed=seed)


def _design_matrix(nodes: np.ndarray, m: int, T: float) -> np.ndarray:
    u = 2.0 * nodes / T - 1.0
    return C.chebvander(u, m)


def robust_fit(nodes, values, m: int, T: float, mode: str = "least_squares",
               max_iter: int = 200, weight_floor: float = 1e-8) -> PolySchedule:
    """Fit a degree-m polynomial to (nodes, values) on [0, T].

    ``least_squares`` is a plain Chebyshev-Vandermonde solve; ``l1_robust``
    runs iteratively reweighted least squares towards the l1 regression
    fit, which tolerates a minority of gross outliers.
    """
    nodes = np.asarray(nodes, dtype=float)
    values = np.asarray(values, dtype=float)
    if nodes.ndim != 1 or nodes.shape != values.shape:
        raise FitError("nodes and values must be equal-length 1d arrays")
    if nodes.size < m + 1:
        raise FitError(f"underdetermined fit: {nodes.size} nodes for degree {m}")
    if np.unique(nodes).size != nodes.size:
        raise FitError("nodes must be distinct")
    A = _design_matrix(nodes, m, T)
    cond = np.linalg.cond(A)
    if cond > 1e12:
        raise FitError(f"fit matrix numerically singular (cond={cond:.2e})")
    if mode == "least_squares":
        coef, *_ = np.linalg.lstsq(A, values, rcond=None)
        return PolySchedule(T, tuple(coef))
    if mode != "l1_robust":
        raise ValueError(f"unknown fit mode {mode!r}")
    coef, *_ = np.linalg.lstsq(A, values, rcond=None)
    for _ in range(max_iter):
        resid = np.abs(values - A @ coef)
        w = 1.0 / np.sqrt(np.maximum(resid, weight_floor))
        coef_new, *_ = np.linalg.lstsq(A * w[:, None], values * w, rcond=None)
        if np.max(np.abs(coef_new - coef)) < 1e-12:
            coef = coef_new
            break
        coef = coef_new
    return PolySchedule(T, tuple(coef))


def degree_for_schedule(f, T: float, eps: float, m_cap: int = 256) -> int:
    """Smallest degree whose Chebyshev truncation of f has sup error <= eps.

    The expansion is computed by interpolation at 4*m_cap + 1 Chebyshev
    points; the tail bound is the l1 norm of the dropped coefficients.
    """
    if eps <= 0:
        raise ValueError("eps must be positive")
    n = 4 * m_cap
    k = np.arange(n + 1)
    u = np.cos(np.pi * k / n)
    t = (u + 1.0) * T / 2.0
    vals = np.array([float(f(ti)) for ti in t])
    # Chebyshev coefficients via the type-I DCT relation
    coeff = np.zeros(n + 1)
    for j in range(n + 1):
        integr = vals * np.cos(np.pi * j * k / n)
        integr[0] *= 0.5
        integr[-1] *= 0.5
        coeff[j] = (2.0 / n) * integr.sum()
    coeff[0] *= 0.5
    tails = np.cumsum(np.abs(coeff[::-1]))[::-1]
    for m in range(0, m_cap + 1):
        tail = tails[m + 1] if m + 1 <= n else 0.0
        if tail <= eps:
            return m
    raise DegreeUnreachableError(f"no degree <= {m_cap} reaches eps={eps}")


class DegreeUnreachableError(ValueError):
    pass


def dyson_degree(m: int, K: int) -> int:
    """Degree growth K*m + K of K-fold time-ordered integrals of degree-m factors."""
    if m < 0 or K < 0:
        raise ValueError("m and K must be nonnegative")
    return K * m + K


def extrapolation_factor(m: int, T: float, T_f: float) -> float:
    """|T_m(2 T_f / T - 1)| evaluated stably; the growth envelope of a
    degree-m polynomial bounded by 1 on [0, T] when extended to T_f >= T."""
    if T_f < T or T <= 0:
        raise ValueError("need T_f >= T > 0")
    xarg = 2.0 * T_f / T - 1.0
    if xarg <= 1.0:
        return 1.0
    return float(np.cosh(m * np.arccosh(xarg)))


# ---------------------------------------------------------------------------
# named built-in black-box schedules for configs


def builtin_schedule(name: str, params: dict):
    """Black-box time functions referenced by name in config files."""
    if name == "const":
        v = float(params.get("value", 1.0))
        return lambda t: v
    if name == "linear":
        a = float(params.get("intercept", 0.0))
        b = float(params.get("slope", 1.0))
        return lambda t: a + b * t
    if name == "poly":
        coeffs = [float(c) for c in params["coeffs"]]
        return lambda t: float(P.polyval(t, coeffs))
    if name == "cos":
        amp = float(params.get("amplitude", 1.0))
        om = float(params.get("omega", 1.0))
        ph = float(params.get("phase", 0.0))
        return lambda t: amp * math.cos(om * t + ph)
    if name == "gaussian":
        amp = float(params.get("amplitude", 1.0))
        mu = float(params.get("center", 0.0))
        sig = float(params.get("width", 1.0))
        return lambda t: amp * math.exp(-0.5 * ((t - mu) / sig) ** 2)
    raise ValueError(f"unknown builtin schedule {name!r}")


def schedule_from_config(cfg, T: float | None = None) -> PolySchedule:
    """Read a schedule block: basis tag + coefficients, or a named builtin
    to be truncated at the requested degree/precision."""
    if isinstance(cfg, (int, float)):
        return PolySchedule.constant(float(cfg), T if T else 1.0)
    Tc = float(cfg.get("T", T if T is not None else 1.0))
    basis = cfg.get("basis", "monomial")
    if "builtin" in cfg:
        f = builtin_schedule(cfg["builtin"], cfg.get("params", {}))
        eps = float(cfg.get("eps", 1e-10))
        m = cfg.get("degree")
        if m is None:
            m = degree_for_schedule(f, Tc, eps)
        nodes = np.cos(np.pi * np.arange(int(m) + 1) / max(int(m), 1)) if m else np.zeros(1)
        ts = (nodes + 1.0) * Tc / 2.0
        vals = [f(t) for t in ts]
        if int(m) == 0:
            return PolySchedule.constant(vals[0], Tc)
        return robust_fit(ts, vals, int(m), Tc)
    coeffs = cfg["coeffs"]
    if basis == "monomial":
        return PolySchedule.from_monomial(coeffs, Tc)
    if basis == "chebyshev":
        return PolySchedule(Tc, tuple(float(c) for c in coeffs))
    raise ValueError(f"unknown basis {basis!r}")


# ---------------------------------------------------------------------------
# measured-constant calibration for the stable-interpolation inflation


def calibrate_interpolation_constant(m: int, T: float, n_nodes: int,
                                     seeds: int = 200, noise: float = 1e-3,
                                     quantile: float = 0.95,
                                     rng: np.random.Generator | None = None) -> float:
    """Measure the sup-error inflation of the least-squares fit.

    Returns the ``quantile`` of ratio (sup fit error) / (input noise level)
    over random degree-m polynomials with iid uniform noise at Chebyshev-
    measure nodes.  Stands in for the interpolation constant the theory
    leaves as poly(m).
    """
    rng = rng or np.random.default_rng(0)
    ratios = []
    grid = np.linspace(0, T, 801)
    for _ in range(seeds):
        coeffs = rng.uniform(-1, 1, size=m + 1)
        p = PolySchedule(T, tuple(coeffs))
        plan = chebyshev_nodes(T, n_nodes, rng)
        ts = np.asarray(plan.nodes)
        ys = p(ts) + rng.uniform(-noise, noise, size=ts.size)
        fit = robust_fit(ts, ys, m, T)
        err = float(np.max(np.abs(fit(grid) - p(grid))))
        ratios.append(err / noise)
    return float(np.quantile(ratios, quantile))
