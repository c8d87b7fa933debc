"""Exact asymptotics of degree power sums along parametric graph families.

A family is a list of (count, degree) pairs whose entries are affine forms
c*n + b with rational coefficients.  Expanding sum(count * degree**p) by the
binomial theorem gives an exact polynomial in n of degree p + 1 over the
rationals, so leading-coefficient identities and dominance comparisons are
decided by exact arithmetic, never by floating point.  Floats appear in one
place only: the golden-section optimizer for the split constant c(p).

The family catalog covers the two rewired hub constructions (gprime, gstar),
complete bipartite splits (kbip, t2even, t2odd), and the bounding families
that arise when classifying how outside vertices attach to a dominant hub
(case31, case33, case4eq2, case4eq3).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence, Union

import numpy as np

from .constructions import DegreeProfile

RationalLike = Union[int, str, float, Fraction]


def _frac(x: RationalLike) -> Fraction:
    if isinstance(x, float):
        # floats arrive from CLI flags; take their exact binary value
        return Fraction(x).limit_denominator(10 ** 12)
    return Fraction(x)


@dataclass(frozen=True, slots=True)
class AffineForm:
    """slope * n + intercept with exact rational coefficients."""

    slope: Fraction
    intercept: Fraction

    def __call__(self, n: int) -> Fraction:
        return self.slope * n + self.intercept

    def __repr__(self) -> str:
        return f"({self.slope})n + ({self.intercept})"


def af(slope: RationalLike, intercept: RationalLike = 0) -> AffineForm:
    return AffineForm(_frac(slope), _frac(intercept))


@dataclass(frozen=True, slots=True)
class NPolynomial:
    """Polynomial in n over Fraction, coefficients low power first."""

    coeffs: tuple[Fraction, ...]

    @staticmethod
    def of(values: Sequence[RationalLike]) -> "NPolynomial":
        c = [_frac(v) for v in values]
        while c and c[-1] == 0:
            c.pop()
        return NPolynomial(tuple(c))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, k: int) -> Fraction:
        if k < 0:
            raise ValueError(f"power must be non-negative, got {k}")
        return self.coeffs[k] if k < len(self.coeffs) else Fraction(0)

    def __add__(self, other: "NPolynomial") -> "NPolynomial":
        size = max(len(self.coeffs), len(other.coeffs))
        return NPolynomial.of(
            [self.coefficient(i) + other.coefficient(i) for i in range(size)]
        )

    def __sub__(self, other: "NPolynomial") -> "NPolynomial":
        size = max(len(self.coeffs), len(other.coeffs))
        return NPolynomial.of(
            [self.coefficient(i) - other.coefficient(i) for i in range(size)]
        )

    def __mul__(self, other: "NPolynomial") -> "NPolynomial":
        if not self.coeffs or not other.coeffs:
            return NPolynomial(())
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return NPolynomial.of(out)

    def power(self, p: int) -> "NPolynomial":
        if p < 0:
            raise ValueError(f"power must be non-negative, got {p}")
        result = NPolynomial.of([1])
        for _ in range(p):
            result = result * self
        return result

    def evaluate(self, n: RationalLike) -> Fraction:
        x = _frac(n)
        total = Fraction(0)
        for c in reversed(self.coeffs):
            total = total * x + c
        return total

    def evaluate_int(self, n: int) -> int:
        value = self.evaluate(n)
        if value.denominator != 1:
            raise ValueError(f"value at n={n} is not an integer: {value}")
        return value.numerator

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = [f"({c})n^{k}" for k, c in enumerate(self.coeffs) if c != 0]
        return " + ".join(reversed(terms))


@dataclass(frozen=True, slots=True)
class ParametricFamily:
    """Named family of degree profiles parametrized by n."""

    name: str
    params: tuple[tuple[str, Fraction], ...]
    terms: tuple[tuple[AffineForm, AffineForm], ...]

    def power_sum_at(self, n: int, p: int) -> Fraction:
        """sum(count(n) * degree(n)**p), exact, no integrality demanded."""
        if p < 1:
            raise ValueError(f"exponent p must be >= 1, got {p}")
        return sum((cnt(n) * deg(n) ** p for cnt, deg in self.terms), Fraction(0))

    def profile_at(self, n: int) -> DegreeProfile:
        """Materialize the profile at a concrete n (entries must be integers)."""
        pairs = []
        for cnt, deg in self.terms:
            c, d = cnt(n), deg(n)
            if c.denominator != 1 or d.denominator != 1:
                raise ValueError(f"family {self.name} is not integral at n={n}: ({c}, {d})")
            if c < 0 or d < 0:
                raise ValueError(f"family {self.name} is negative at n={n}: ({c}, {d})")
            if c > 0:
                pairs.append((c.numerator, d.numerator))
        return DegreeProfile(tuple(pairs))


def _family(name: str, params: dict[str, Fraction], terms) -> ParametricFamily:
    return ParametricFamily(name, tuple(sorted(params.items())), tuple(terms))


def family_of(name: str, **params: RationalLike) -> ParametricFamily:
    """Build a catalog family by name.

    gprime(a), gstar(a), kbip(a): hub fraction 0 < a < 1.
    t2even(), t2odd(): balanced bipartite profiles at the matching parity.
    case31(a, y): the attachment bound with 1/2 <= a < 1 and 0 < y <= 1 - a.
    case33(a): the clique-outside bound.
    case4eq2(a, x, y), case4eq3(a, x): gate-vertex bounds, x, y >= 1.
    """
    vals = {k: _frac(v) for k, v in params.items()}

    def need(*keys: str) -> list[Fraction]:
        missing = [k for k in keys if k not in vals]
        extra = [k for k in vals if k not in keys]
        if missing or extra:
            raise ValueError(f"family {name!r} takes parameters {keys}, got {tuple(vals)}")
        return [vals[k] for k in keys]

    one = Fraction(1)
    if name == "gprime":
        (a,) = need("a")
        _check_fraction_open(a, "a")
        return _family(name, vals, [
            (af(0, 1), af(a)),
            (af(0, 2), af(0, 2)),
            (af(a, -2), af(one - a)),
            (af(one - a, -1), af(a, -2)),
        ])
    if name == "gstar":
        (a,) = need("a")
        _check_fraction_open(a, "a")
        return _family(name, vals, [
            (af(one - a, -2), af(a)),
            (af(a, -2), af(one - a, -2)),
            (af(0, 2), af(one - a, -3)),
            (af(0, 2), af(0, 2)),
        ])
    if name == "kbip":
        (a,) = need("a")
        _check_fraction_open(a, "a")
        return _family(name, vals, [
            (af(a), af(one - a)),
            (af(one - a), af(a)),
        ])
    if name == "t2even":
        need()
        return _family(name, vals, [(af(1), af(Fraction(1, 2)))])
    if name == "t2odd":
        need()
        h = Fraction(1, 2)
        return _family(name, vals, [
            (af(h, -h), af(h, h)),
            (af(h, h), af(h, -h)),
        ])
    if name == "case31":
        a, y = need("a", "y")
        _check_half_open(a, "a")
        if not 0 < y <= one - a:
            raise ValueError(f"case31 needs 0 < y <= 1 - a, got y={y}, a={a}")
        rest = one - a - y
        return _family(name, vals, [
            (af(0, 1), af(a)),
            (af(0, 2), af(0, 2)),
            (af(0, 1), af(a)),
            (af(rest, -2), af(a)),
            (af(a, -2), af(rest)),
            (af(y, -1), af(rest)),
            (af(0, 1), af(one - a, -2)),
        ])
    if name == "case33":
        (a,) = need("a")
        _check_half_open(a, "a")
        return _family(name, vals, [
            (af(0, 2), af(0, 2)),
            (af(0, 1), af(a)),
            (af(0, 1), af(one - a)),
            (af(a, -3), af(0, 1)),
            (af(one - a, -1), af(one - a, -1)),
        ])
    if name == "case4eq2":
        a, x, y = need("a", "x", "y")
        _check_half_open(a, "a")
        if x < 1 or y < 1:
            raise ValueError(f"case4eq2 needs x >= 1 and y >= 1, got x={x}, y={y}")
        return _family(name, vals, [
            (af(0, 1), af(0, 2 + x)),
            (af(0, 1), af(0, 2 + y)),
            (af(0, 1), af(a)),
            (af(0, x + y), af(0, 2)),
            (af(a, -2), af(one - a, -2 - x - y)),
            (af(one - a, -3 - x - y), af(a)),
            (af(0, 1), af(one - a, -3 - y)),
            (af(0, 1), af(one - a, -3 - x)),
        ])
    if name == "case4eq3":
        a, x = need("a", "x")
        _check_half_open(a, "a")
        if x < 1:
            raise ValueError(f"case4eq3 needs x >= 1, got x={x}")
        return _family(name, vals, [
            (af(0, x + 1), af(0, 2)),
            (af(0, 1), af(0, 2 + x)),
            (af(0, 1), af(a)),
            (af(a, -2), af(one - a, -1 - x)),
            (af(one - a, -2 - x), af(a, -1)),
            (af(0, 1), af(one - a, -2)),
        ])
    raise ValueError(f"unknown family {name!r}")


def _check_fraction_open(a: Fraction, label: str) -> None:
    if not 0 < a < 1:
        raise ValueError(f"{label} must satisfy 0 < {label} < 1, got {a}")


def _check_half_open(a: Fraction, label: str) -> None:
    if not Fraction(1, 2) <= a < 1:
        raise ValueError(f"{label} must satisfy 1/2 <= {label} < 1, got {a}")


def expand_ep(family: ParametricFamily, p: int) -> NPolynomial:
    """Exact expansion of the family's degree power sum as a polynomial in n."""
    if p < 1:
        raise ValueError(f"exponent p must be >= 1, got {p}")
    total = NPolynomial(())
    for cnt, deg in family.terms:
        cnt_poly = NPolynomial.of([cnt.intercept, cnt.slope])
        deg_poly = NPolynomial.of([deg.intercept, deg.slope])
        total = total + cnt_poly * deg_poly.power(p)
    return total


def coefficient(poly: NPolynomial, k: int) -> Fraction:
    return poly.coefficient(k)


# ---------------------------------------------------------------------------
# closed-form coefficients, used as independent checks against expand_ep


def leading_coefficient(a: RationalLike, p: int) -> Fraction:
    """Coefficient of n^(p+1) shared by gprime, gstar, and kbip at split a."""
    a = _frac(a)
    return a * (1 - a) ** p + a ** p * (1 - a)


def gprime_np_coefficient(a: RationalLike, p: int) -> Fraction:
    a = _frac(a)
    return -2 * p * (1 - a) * a ** (p - 1) - 2 * (1 - a) ** p


def gstar_np_coefficient(a: RationalLike, p: int) -> Fraction:
    a = _frac(a)
    return -2 * a ** p - 2 * p * a * (1 - a) ** (p - 1)


def case31_leading_coefficient(a: RationalLike, y: RationalLike, p: int) -> Fraction:
    a, y = _frac(a), _frac(y)
    return (y + a) * (1 - a - y) ** p + (1 - a - y) * a ** p


def case4eq2_np_coefficient(a: RationalLike, x: RationalLike, y: RationalLike, p: int) -> Fraction:
    a, x, y = _frac(a), _frac(x), _frac(y)
    return -p * a * (2 + x + y) * (1 - a) ** (p - 1) - a ** p * (2 + x + y)


def subcase32_omega_coefficient(a: RationalLike, p: int) -> Fraction:
    """Coefficient on the omega*n^p scale when a near-hub vertex keeps omega
    extra neighbors; non-positive for a >= 1/2, which kills that case."""
    a = _frac(a)
    return (1 - a) ** p - a ** p


# ---------------------------------------------------------------------------
# the gap function f and its positivity sweep


def f_value(a, y, p: int):
    """Leading-coefficient gap between the hub families and the case31 bound.

    f(a, y) = a(1-a)^p + a^p(1-a) - [(y+a)(1-a-y)^p + (1-a-y)a^p].
    Accepts Fraction (exact) or float arguments; 1/2 <= a < 1, 0 < y <= 1-a.
    """
    if p < 1:
        raise ValueError(f"exponent p must be >= 1, got {p}")
    half = Fraction(1, 2) if isinstance(a, Fraction) else 0.5
    if not half <= a < 1:
        raise ValueError(f"a must satisfy 1/2 <= a < 1, got {a}")
    if not 0 < y <= 1 - a:
        raise ValueError(f"y must satisfy 0 < y <= 1 - a, got y={y}, a={a}")
    rest = 1 - a - y
    return a * (1 - a) ** p + a ** p * (1 - a) - ((y + a) * rest ** p + rest * a ** p)


@dataclass(frozen=True, slots=True)
class FPositivityReport:
    p: int
    step: Fraction
    grid_points: int
    min_value: Fraction
    argmin: tuple[Fraction, Fraction]
    passed: bool


def verify_f_positive(p: int, step: RationalLike) -> FPositivityReport:
    """Exact positivity sweep of f on the grid a = 1/2, 1/2+step, ..., 1-step
    and y = step, 2*step, ..., <= 1-a.

    Every grid value is a multiple of 1/(2*step.denominator), so the sweep
    runs in scaled integer arithmetic and converts back only at the end.
    """
    if p < 1:
        raise ValueError(f"exponent p must be >= 1, got {p}")
    step = _frac(step)
    if not 0 < step <= Fraction(1, 2):
        raise ValueError(f"step must satisfy 0 < step <= 1/2, got {step}")
    u, v = step.numerator, step.denominator
    scale = 2 * v
    step_scaled = 2 * u
    min_scaled: Optional[int] = None
    argmin_scaled = (0, 0)
    points = 0
    a_scaled = v  # a = 1/2
    while a_scaled <= scale - step_scaled:
        rest_max = scale - a_scaled
        ap = a_scaled ** p
        y_scaled = step_scaled
        while y_scaled <= rest_max:
            rest = rest_max - y_scaled
            val = (
                a_scaled * rest_max ** p
                + ap * rest_max
                - (y_scaled + a_scaled) * rest ** p
                - rest * ap
            )
            points += 1
            if min_scaled is None or val < min_scaled:
                min_scaled = val
                argmin_scaled = (a_scaled, y_scaled)
            y_scaled += step_scaled
        a_scaled += step_scaled
    if min_scaled is None:
        raise ValueError(f"empty grid for step {step}")
    denom = Fraction(scale) ** (p + 1)
    return FPositivityReport(
        p=p,
        step=step,
        grid_points=points,
        min_value=min_scaled / denom,
        argmin=(Fraction(argmin_scaled[0], scale), Fraction(argmin_scaled[1], scale)),
        passed=min_scaled > 0,
    )


# ---------------------------------------------------------------------------
# the split constant c(p)


def split_objective(x, p: int):
    """x(1-x)^p + x^p(1-x): normalized e_p of the biclique split (x, 1-x)."""
    return x * (1 - x) ** p + x ** p * (1 - x)


def optimize_c(p: int, tol: float = 1e-9) -> float:
    """argmax of the split objective on [1/2, 1].

    Dense grid bracketing followed by golden-section refinement, then an
    explicit comparison against the endpoint x = 1/2 (the maximum sits there
    for p <= 3 and moves interior from p = 4 on).

    tol controls the final bracket width.  Near the maximum the float64
    objective is flat to about 1e-8 in x, so requests below that tighten the
    bracket without adding true argmax accuracy.
    """
    if p < 1:
        raise ValueError(f"exponent p must be >= 1, got {p}")
    if not 0 < tol < 1e-2:
        raise ValueError(f"tol must be in (0, 1e-2), got {tol}")
    xs = np.linspace(0.5, 1.0, 4097)
    ys = xs * (1 - xs) ** p + xs ** p * (1 - xs)
    i = int(np.argmax(ys))
    lo = xs[max(i - 1, 0)]
    hi = xs[min(i + 1, len(xs) - 1)]
    inv_phi = (math.sqrt(5) - 1) / 2
    a, b = lo, hi
    c1 = b - inv_phi * (b - a)
    c2 = a + inv_phi * (b - a)
    f1 = split_objective(c1, p)
    f2 = split_objective(c2, p)
    while b - a > tol:
        if f1 < f2:
            a, c1, f1 = c1, c2, f2
            c2 = a + inv_phi * (b - a)
            f2 = split_objective(c2, p)
        else:
            b, c2, f2 = c2, c1, f1
            c1 = b - inv_phi * (b - a)
            f1 = split_objective(c1, p)
    interior = (a + b) / 2
    if split_objective(0.5, p) >= split_objective(interior, p):
        return 0.5
    return float(interior)


def best_biclique_split(n: int, p: int) -> tuple[int, int]:
    """Exact argmax over b of e_p(K_{b, n-b}), 1 <= b <= n-1.

    Returns (b, value) with the b >= n/2 representative of the symmetric
    maximum, so b/n lands near c(p) for large n.
    """
    if n < 2:
        raise ValueError(f"need n >= 2 to split, got {n}")
    if p < 1:
        raise ValueError(f"exponent p must be >= 1, got {p}")
    best_b, best_val = 1, -1
    for b in range(1, n // 2 + 1):
        val = b * (n - b) ** p + (n - b) * b ** p
        if val > best_val:
            best_b, best_val = b, val
    return n - best_b, best_val


# ---------------------------------------------------------------------------
# dominance comparison with a certified threshold


@dataclass(frozen=True, slots=True)
class FamilyComparison:
    first: str
    second: str
    p: int
    difference: NPolynomial = field(repr=False)
    dominant: str  # "first" | "second" | "equal"
    leading_power: Optional[int]
    leading_gap: Optional[Fraction]
    threshold: Optional[int]


def compare_families(fam1: ParametricFamily, fam2: ParametricFamily, p: int) -> FamilyComparison:
    """Which family's power sum dominates for all large n, with a witness N0.

    The threshold comes from the sum-of-coefficients root bound on the
    difference polynomial d: for every n >= N0 = 1 + ceil(S/|lead|) with
    S the sum of the lower coefficients' absolute values, sign(d(n)) equals
    sign(lead).  Conservative but exact.
    """
    diff = expand_ep(fam1, p) - expand_ep(fam2, p)
    if not diff.coeffs:
        return FamilyComparison(fam1.name, fam2.name, p, diff, "equal", None, None, None)
    k = diff.degree
    lead = diff.coeffs[k]
    s = sum(abs(c) for c in diff.coeffs[:k])
    ratio = s / abs(lead)
    threshold = 1 + math.ceil(ratio)
    return FamilyComparison(
        first=fam1.name,
        second=fam2.name,
        p=p,
        difference=diff,
        dominant="first" if lead > 0 else "second",
        leading_power=k,
        leading_gap=lead,
        threshold=threshold,
    )
