"""Phase matching of degenerate four-wave mixing on the SOC dispersion.

Two pump quanta at k1 convert into probes at k2 = k1 + q and k3 = k1 - q.
Momentum conservation holds by construction; frequency conservation reduces
to the residual condition

    R(q) = 2 q^2 - 2 s1 eps(k1) + s2 eps(k1 + q) + s3 eps(k1 - q) = 0,

where s_j = +-1 selects the spectral branch of each wave.  Of the eight
sign patterns only four admit nontrivial roots:

    configuration 1: (+1, -1, -1), at most 2 roots in q
    configuration 2: (+1, +1, -1), at most 2
    configuration 3: (+1, -1, +1), at most 2 (mirror of 2 under q -> -q)
    configuration 4: (-1, -1, -1), at most 4

Eliminating the square roots turns R(q) = 0 into a monic cubic in the
scaled variable Q = q^2/alpha^2 whose coefficients depend only on s1 and
on wt = Wt(k1)/alpha^2, wz = omega_z/alpha^2.  Squaring introduces
spurious roots and erases the s2/s3 distinction, so every cubic root is
validated against the original residual before it is accepted.
"""

from dataclasses import dataclass

import numpy as np

from .dispersion import epsilon, omega_tilde

# Roots of the cubic closer than this (in q) are treated as one double root.
DEDUP_SPACING = 1e-7

# |q| below this counts as the self-phase-modulation root and is discarded.
Q_ZERO_CUTOFF = 1e-7

DEFAULT_TOL = 1e-9


class AlphaZero(ValueError):
    """Scaled cubic variables are undefined at alpha = 0."""


@dataclass(frozen=True)
class Configuration:
    """One admissible branch assignment (s1, s2, s3) and its root bound."""

    id: int
    signs: tuple
    n_max: int


CONFIGURATIONS = (
    Configuration(1, (+1, -1, -1), 2),
    Configuration(2, (+1, +1, -1), 2),
    Configuration(3, (+1, -1, +1), 2),
    Configuration(4, (-1, -1, -1), 4),
)

# Sign patterns with no nontrivial roots; enumerate_all() re-checks them.
EXCLUDED_SIGNS = ((-1, +1, +1), (-1, +1, -1), (-1, -1, +1), (+1, +1, +1))


@dataclass(frozen=True)
class FwmSolution:
    """A validated phase-matched triple for one configuration."""

    config: Configuration
    k1: float
    q: float
    k2: float
    k3: float
    residual: float

    def as_record(self):
        s1, s2, s3 = self.config.signs
        return {
            "config": self.config.id,
            "s1": s1,
            "s2": s2,
            "s3": s3,
            "k1": self.k1,
            "q": self.q,
            "k2": self.k2,
            "k3": self.k3,
            "residual": self.residual,
        }


def matching_residual(k1, q, signs, p):
    """Signed mismatch of the frequency-matching condition at (k1, q)."""
    s1, s2, s3 = signs
    q = np.asarray(q, dtype=float)
    return (
        2.0 * q * q
        - 2.0 * s1 * epsilon(k1, p)
        + s2 * epsilon(k1 + q, p)
        + s3 * epsilon(k1 - q, p)
    )


def cubic_coefficients(s1, omega_tilde_scaled, omega_z_scaled):
    """Monic cubic in Q = q^2/alpha^2 equivalent to the squared residual."""
    w2 = omega_tilde_scaled**2
    wz2 = omega_z_scaled**2
    r = np.sqrt(w2 + wz2)
    return np.array(
        [
            1.0,
            -(1.0 + 4.0 * s1 * r),
            2.0 * s1 * r + 5.0 * w2 + 5.0 * wz2,
            -wz2 - 2.0 * s1 * r * (w2 + wz2),
        ]
    )


@dataclass(frozen=True)
class CubicProblem:
    """Scaled cubic for one pump sign: coefficients of Q^3 + b Q^2 + c Q + d."""

    s1: int
    omega_tilde_scaled: float
    omega_z_scaled: float
    coefficients: tuple

    @classmethod
    def from_pump(cls, s1, k1, p):
        if p.alpha == 0.0:
            raise AlphaZero("scaled variables Q, wt, wz are undefined at alpha = 0")
        wt = float(omega_tilde(k1, p)) / p.alpha**2
        wz = p.omega_z / p.alpha**2
        return cls(
            s1=s1,
            omega_tilde_scaled=wt,
            omega_z_scaled=wz,
            coefficients=tuple(cubic_coefficients(s1, wt, wz)),
        )


def discriminant(s1, omega_tilde_scaled, omega_z_scaled):
    """Root-counting discriminant of the scaled cubic.

    Returns wt^2 * [15 wt^2 - 12 wz^2 - 4 - 4 s1 sqrt(wt^2+wz^2) (wt^2+wz^2+3)],
    which equals minus the standard polynomial discriminant of
    cubic_coefficients(s1, wt, wz).  Sign convention: positive means one
    real root (plus a complex pair), negative means three distinct real
    roots, zero means a multiple real root.  For s1 = +1 and wt != 0 the
    expression is never positive, so all three roots are always real.
    """
    w2 = omega_tilde_scaled**2
    wz2 = omega_z_scaled**2
    u = w2 + wz2
    return w2 * (15.0 * w2 - 12.0 * wz2 - 4.0 - 4.0 * s1 * np.sqrt(u) * (u + 3.0))


def _residual_derivative(k1, q, signs, p):
    _, s2, s3 = signs
    wt2 = omega_tilde(k1 + q, p)
    wt3 = omega_tilde(k1 - q, p)
    return (
        4.0 * q
        + s2 * p.alpha * wt2 / np.hypot(p.omega_z, wt2)
        - s3 * p.alpha * wt3 / np.hypot(p.omega_z, wt3)
    )


def _polish_root(k1, q0, signs, p, tol):
    """Newton-refine a candidate root of the unsquared residual.

    Returns the refined q, or None if the candidate fails to satisfy the
    residual at tolerance `tol` without drifting away from its seed (which
    marks it as spurious, introduced by the squaring).
    """
    scale = max(1.0, 2.0 * q0 * q0, 2.0 * float(epsilon(k1, p)))
    if abs(float(matching_residual(k1, q0, signs, p))) > 1e-4 * scale:
        return None
    q = q0
    for _ in range(40):
        r = float(matching_residual(k1, q, signs, p))
        if abs(r) < 1e-14 * scale:
            break
        dr = float(_residual_derivative(k1, q, signs, p))
        if dr == 0.0:
            break
        step = r / dr
        q -= step
        if abs(step) < 1e-16 * max(1.0, abs(q)):
            break
    if not np.isfinite(q) or abs(q - q0) > 1e-6 * max(1.0, abs(q0)):
        return None
    if not abs(float(matching_residual(k1, q, signs, p))) < tol:
        return None
    return q


def _dedup_sorted(qs, spacing=DEDUP_SPACING):
    out = []
    for q in sorted(qs):
        if not out or abs(q - out[-1]) > spacing:
            out.append(q)
    return out


def default_q_max(k1, p):
    """Upper bound on |q| for any root, from eps(k1 +- q) <= eps(k1) + |alpha q|."""
    e1 = float(epsilon(k1, p))
    a = abs(p.alpha)
    return 0.5 * (a + np.sqrt(a * a + 8.0 * e1)) + 1.0


def oracle_scan(signs, k1, p, q_max, n_grid=4001):
    """Brute-force root finder for the residual, used as ground truth.

    Locates every sign change of R(q) on a uniform grid over
    [-q_max, q_max] and refines each by bisection; the exact
    self-phase-modulation root q = 0 is appended when the sign pattern
    admits it (s1 = s2 = s3).  No validity filtering is applied.
    """
    if q_max <= 0:
        raise ValueError(f"q_max must be positive, got {q_max}")
    if n_grid < 1000:
        raise ValueError(f"n_grid must be at least 1000, got {n_grid}")
    qs = np.linspace(-q_max, q_max, int(n_grid))
    res = matching_residual(k1, qs, signs, p)
    sgn = np.sign(res)
    crossings = np.nonzero(sgn[:-1] * sgn[1:] < 0)[0]
    roots = []
    for i in crossings:
        a, b = qs[i], qs[i + 1]
        fa = float(matching_residual(k1, a, signs, p))
        for _ in range(80):
            m = 0.5 * (a + b)
            fm = float(matching_residual(k1, m, signs, p))
            if fa * fm <= 0.0:
                b = m
            else:
                a, fa = m, fm
        roots.append(0.5 * (a + b))
    # Exact grid hits (sign() == 0) are roots the crossing test skips over.
    for i in np.nonzero(sgn == 0)[0]:
        roots.append(float(qs[i]))
    s1, s2, s3 = signs
    if s2 + s3 == 2 * s1 and not any(abs(r) < 1e-9 for r in roots):
        roots.append(0.0)
    return _dedup_sorted(roots)


def solve_configuration(config, k1, p, tol=DEFAULT_TOL):
    """All phase-matched offsets q != 0 for one configuration.

    Cubic roots Q >= 0 give candidates q = +-alpha sqrt(Q); each candidate
    is polished and validated on the unsquared residual with this
    configuration's signs, which discards the roots that belong to the
    other sign patterns sharing the same cubic.  At alpha = 0 the scaled
    cubic does not exist and a direct residual scan is used instead.  A
    vanishing Zeeman vector returns no solutions: the Hamiltonian is then
    gauge-equivalent to a free one and the formal roots of the residual
    correspond to no wave-mixing process.
    """
    if p.zeeman_is_zero:
        return []
    if p.alpha == 0.0:
        candidates = oracle_scan(config.signs, k1, p, default_q_max(k1, p), 20001)
    else:
        problem = CubicProblem.from_pump(config.signs[0], k1, p)
        q_roots = np.roots(np.asarray(problem.coefficients))
        candidates = []
        for root in q_roots:
            if abs(root.imag) > 1e-9 * max(1.0, abs(root)):
                continue
            if root.real <= 0.0:
                continue
            q = abs(p.alpha) * np.sqrt(root.real)
            candidates.extend((q, -q))
    accepted = []
    for q0 in candidates:
        q = _polish_root(k1, q0, config.signs, p, tol)
        if q is not None and abs(q) > Q_ZERO_CUTOFF:
            accepted.append(q)
    solutions = []
    for q in _dedup_sorted(accepted):
        q = float(q)
        solutions.append(
            FwmSolution(
                config=config,
                k1=float(k1),
                q=q,
                k2=float(k1) + q,
                k3=float(k1) - q,
                residual=abs(float(matching_residual(k1, q, config.signs, p))),
            )
        )
    return solutions


def _scan_excluded_patterns(k1, p):
    """Confirm that the four excluded sign patterns have no q != 0 roots."""
    q_max = default_q_max(k1, p)
    qs = np.linspace(-q_max, q_max, 8001)
    for signs in EXCLUDED_SIGNS:
        res = matching_residual(k1, qs, signs, p)
        near_zero = np.abs(qs) < 10.0 * (qs[1] - qs[0])
        sgn = np.sign(res)
        if np.any((sgn[:-1] * sgn[1:] < 0) & ~near_zero[:-1]):
            raise RuntimeError(
                f"sign pattern {signs} unexpectedly admits a root at k1={k1}"
            )


def enumerate_all(k1, p, tol=DEFAULT_TOL):
    """Union of solve_configuration over the four admissible configurations."""
    if p.zeeman_is_zero:
        return []
    _scan_excluded_patterns(k1, p)
    solutions = []
    for config in CONFIGURATIONS:
        solutions.extend(solve_configuration(config, k1, p, tol=tol))
    return solutions
