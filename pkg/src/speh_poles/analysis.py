"""Normalization factors, orbit sums and the pole-order certificate.

For a shuffle w and overlap sigma the normalization factor is

    r(w, t) = prod_{i=1}^{m} L(n-sigma+2i-w(i)+t) / L(n-sigma+i+t) * rho_i^{-1},
    rho_i   = c^{d (n-sigma+i-1+t) - d^2/2},   d = w(i) - i,

with w(i) the position of label i; factors with d = 0 are trivially 1.  An
orbit's sum of factors is what carries the poles of the constant term, and
the bound "order <= 1, attained exactly for sigma < min(m, n)" is certified
here orbit by orbit.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb

from .coset import DEFAULT_CAP, Shuffle, inversions, sigma_context
from .errors import ConsistencyError, IndeterminateOrderError, TheoremViolation
from .laurent import leading_coefficient, pole_order
from .lfunc import ONE, L, LExpr, canonicalize, cpow, equal, flip_t
from .orbit import compute_orbits


# -- single factors -----------------------------------------------------------


def rho_inverse(d, i, ctx):
    """rho_i^{-1} for a displacement d = w(i) - i."""
    n, sigma = ctx.n, ctx.sigma
    return cpow(-d, -d * (n - sigma + i - 1) + Fraction(d * d, 2))


def numerator_arg(i, position, ctx):
    return ctx.n - ctx.sigma + 2 * i - position


def factor_at(i, position, ctx):
    """L(n-sigma+2i-position+t) * rho_i^{-1} for label i placed at ``position``."""
    return L(numerator_arg(i, position, ctx)) * rho_inverse(position - i, i, ctx)


def denominator(ctx):
    out = ONE
    for i in range(1, ctx.m + 1):
        out = out * L(ctx.n - ctx.sigma + i)
    return out


@dataclass(frozen=True)
class NormalizationFactor:
    shuffle: Shuffle
    ctx: object
    raw: LExpr
    canonical: LExpr


@lru_cache(maxsize=None)
def _factor_cached(arrangement, m, n, sigma):
    ctx = sigma_context(m, n, sigma)
    w = Shuffle(m, n, arrangement)
    inv = inversions(w)
    raw = ONE
    for i in range(1, m + 1):
        d = w.w[i] - i
        if d == 0:
            continue
        if len([p for p in inv.pairs if p[0] == i]) != d:
            raise ConsistencyError(f"inversion count of label {i} in {w} differs from w(i)-i")
        raw = raw * factor_at(i, w.w[i], ctx) / L(n - sigma + i)
    return raw, canonicalize(raw)


def normalization_factor(w, ctx):
    raw, canon = _factor_cached(w.arrangement, w.m, w.n, ctx.sigma)
    return NormalizationFactor(w, ctx, raw, canon)


# -- orbit sums -------------------------------------------------------------


@dataclass(frozen=True)
class OrbitSum:
    orbit: object
    expr: LExpr
    symbolic_order: int
    numeric_order: object  # int, or None when not requested / indeterminate
    leading: object
    numeric_note: str = ""

    def to_json(self, numeric=False):
        out = {
            "basePoint": str(self.orbit.base_point),
            "size": self.orbit.size,
            "order": self.symbolic_order,
        }
        if numeric:
            out["numericOrder"] = self.numeric_order
        return out


def orbit_expr(orbit, ctx):
    total = LExpr()
    for w in orbit.members:
        total = total + normalization_factor(w, ctx).canonical
    return total


def orbit_sum(orbit, ctx, numeric=False, model=None):
    """Sum of member factors with its symbolic (and optionally numeric) order."""
    expr = orbit_expr(orbit, ctx)
    J = ctx.m + 3
    order = pole_order(expr, J)
    lead = leading_coefficient(expr, J)
    num, note = None, ""
    if numeric:
        from .zeta import DEFAULT_MODEL, estimate_order

        try:
            num = estimate_order(expr, model or DEFAULT_MODEL)
        except IndeterminateOrderError as exc:
            note = str(exc)
        if num is not None and num != order:
            raise ConsistencyError(
                f"orbit {orbit.base_point} at sigma={ctx.sigma}: symbolic order {order}, "
                f"numeric order {num}"
            )
    return OrbitSum(orbit, expr, order, num, lead, note)


def constant_term(m, n, sigma, numeric=False, model=None, cap=DEFAULT_CAP):
    ctx = sigma_context(m, n, sigma)
    orbits = compute_orbits(ctx, cap)
    covered = sorted(w.arrangement for o in orbits for w in o.members)
    if len(covered) != comb(m + n, m) or len(set(covered)) != len(covered):
        raise ConsistencyError(f"orbits at {(m, n, sigma)} do not cover every shuffle exactly once")
    return [orbit_sum(o, ctx, numeric, model) for o in orbits]


# -- block sums -------------------------------------------------------------


def block_sums(base, ctx, blocks):
    """(A_p, B_p) per block: label i at its own position vs its partner's."""
    out = []
    for K, _ in blocks:
        A = B = ONE
        for i in K:
            A = A * factor_at(i, base.w[i], ctx)
            B = B * factor_at(i, base.w[ctx.partner(i)], ctx)
        out.append((canonicalize(A), canonicalize(B)))
    return out


def bare_products(base, ctx, K):
    """A'_p and B'_p: the L-factors of a block without the rho powers (raw)."""
    A = B = ONE
    for i in K:
        A = A * L(numerator_arg(i, base.w[i], ctx))
        B = B * L(numerator_arg(i, base.w[ctx.partner(i)], ctx))
    return A, B


def mirror_exponent(base, ctx, K):
    """Constant part of the c-power relating A'_p(t) and B'_p(-t)."""
    return sum(
        Fraction(base.w[ctx.partner(i)] - base.w[i], 2) for i in K
    )


def interval_exponent(base, ctx, block):
    """The same constant counted on refined intervals: for each i in K, living
    greens of the block left of i's partner minus living reds of the block
    left of i, halved."""
    K, Lb = block
    pos = base.w
    total = Fraction(0)
    for i in K:
        x = sum(1 for g in K if pos[g] < pos[ctx.partner(i)])
        y = sum(1 for r in Lb if pos[r] < pos[i])
        total += Fraction(x - y, 2)
    return total


def check_mirror(base, ctx, block):
    """A'_p(t) == c^(E + |K_p| t) B'_p(-t) as canonical expressions."""
    K, _ = block
    A, B = bare_products(base, ctx, K)
    E = mirror_exponent(base, ctx, K)
    return equal(A, cpow(len(K), E) * flip_t(B))


def check_mirror_without_t(base, ctx, block):
    """The same identity with the t-term of the exponent dropped."""
    K, _ = block
    A, B = bare_products(base, ctx, K)
    return equal(A, cpow(0, mirror_exponent(base, ctx, K)) * flip_t(B))


def dead_factor(base, ctx, living):
    out = ONE
    for i in range(1, ctx.m + 1):
        if i not in living:
            out = out * factor_at(i, base.w[i], ctx)
    return out


def factored_orbit_sum(orbit, ctx):
    """dead-label factors * prod (A_p + B_p) / prod L(n-sigma+i+t)."""
    out = dead_factor(orbit.base_point, ctx, orbit.living)
    for A, B in block_sums(orbit.base_point, ctx, orbit.blocks):
        out = out * (A + B)
    return canonicalize(out / denominator(ctx))


def head_factor(base, ctx, report):
    """Product of L(n-sigma+2i-w(i)+t) over the greens of the R_j sets."""
    out = ONE
    if report.head_kind == "R":
        for rj in report.head_sets:
            for i in rj:
                out = out * L(numerator_arg(i, base.w[i], ctx))
    return canonicalize(out)


def split_by_first_inversion(orbit, ctx):
    """Members grouped by whether their first inverted label matches the base point's."""
    ref = inversions(orbit.base_point).iw
    same = [w for w in orbit.members if inversions(w).iw == ref]
    other = [w for w in orbit.members if inversions(w).iw != ref]
    return same, other


# -- theorem ----------------------------------------------------------------


@dataclass
class SigmaResult:
    sigma: int
    s: Fraction
    sums: list

    @property
    def max_order(self):
        return max(x.symbolic_order for x in self.sums)

    def to_json(self, numeric=False):
        return {
            "sigma": self.sigma,
            "s": str(self.s),
            "maxOrder": self.max_order,
            "orbits": [x.to_json(numeric) for x in self.sums],
        }


@dataclass
class TheoremReport:
    m: int
    n: int
    per_sigma: list
    violations: list = field(default_factory=list)
    numeric: bool = False

    @property
    def pole_sigmas(self):
        return sorted(r.sigma for r in self.per_sigma if r.max_order >= 1)

    @property
    def expected_pole_sigmas(self):
        return list(range(min(self.m, self.n)))

    @property
    def ok(self):
        return not self.violations

    def to_json(self):
        out = {
            "m": self.m,
            "n": self.n,
            "perSigma": [r.to_json(self.numeric) for r in self.per_sigma],
            "poleSigmas": self.pole_sigmas,
        }
        if self.violations:
            out["violations"] = [dict(v) for v in self.violations]
        return out


def verify_theorem(m, n, numeric=False, model=None, cap=DEFAULT_CAP, raise_on_violation=True):
    """Every orbit sum has order <= 1, and order 1 occurs exactly for sigma < min(m, n)."""
    per_sigma = []
    violations = []
    for sigma in range(0, (m + n) // 2 + 1):
        ctx = sigma_context(m, n, sigma)
        try:
            sums = constant_term(m, n, sigma, numeric, model, cap)
        except ConsistencyError as exc:
            violations.append({"sigma": sigma, "basePoint": "-", "reason": str(exc)})
            continue
        for x in sums:
            if x.symbolic_order > 1:
                violations.append({
                    "sigma": sigma,
                    "basePoint": str(x.orbit.base_point),
                    "reason": f"pole of order {x.symbolic_order} (numeric {x.numeric_order})",
                })
        per_sigma.append(SigmaResult(sigma, ctx.s, sums))
    report = TheoremReport(m, n, per_sigma, violations, numeric)
    if report.pole_sigmas != report.expected_pole_sigmas and not violations:
        report.violations.append({
            "sigma": "*",
            "basePoint": "-",
            "reason": f"poles at sigma {report.pole_sigmas}, expected {report.expected_pole_sigmas}",
        })
    if report.violations and raise_on_violation:
        raise TheoremViolation(report.violations)
    return report
