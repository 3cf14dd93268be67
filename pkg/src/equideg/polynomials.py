"""Multivariate polynomials and polynomial maps with exact rational coefficients.

Coefficient storage is canonical: a dict from exponent tuples to nonzero
Fractions.  Composition with linear substitutions is exact, which is what the
equivariance and restriction checks rely on.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Sequence

from .errors import DimensionMismatch, DomainError
from .linalg import RationalMatrix

DEFAULT_DEGREE_CAP = 8

Exponents = tuple[int, ...]


class Polynomial:
    """Polynomial in num_vars variables over the rationals."""

    __slots__ = ("num_vars", "terms")

    def __init__(self, num_vars: int, terms: dict[Exponents, Fraction] | None = None):
        clean: dict[Exponents, Fraction] = {}
        for exps, c in (terms or {}).items():
            c = Fraction(c)
            if c == 0:
                continue
            exps = tuple(int(e) for e in exps)
            if len(exps) != num_vars or any(e < 0 for e in exps):
                raise DimensionMismatch(f"bad exponent tuple {exps} for {num_vars} vars")
            clean[exps] = clean.get(exps, Fraction(0)) + c
        object.__setattr__(self, "num_vars", num_vars)
        object.__setattr__(self, "terms", {e: c for e, c in clean.items() if c != 0})

    def __setattr__(self, *a):  # pragma: no cover
        raise AttributeError("Polynomial is immutable")

    # -- constructors ------------------------------------------------------

    @staticmethod
    def constant(num_vars: int, c) -> "Polynomial":
        return Polynomial(num_vars, {(0,) * num_vars: Fraction(c)})

    @staticmethod
    def variable(num_vars: int, i: int) -> "Polynomial":
        e = [0] * num_vars
        e[i] = 1
        return Polynomial(num_vars, {tuple(e): Fraction(1)})

    @staticmethod
    def linear_form(coeffs: Sequence) -> "Polynomial":
        n = len(coeffs)
        terms = {}
        for i, c in enumerate(coeffs):
            c = Fraction(c)
            if c != 0:
                e = [0] * n
                e[i] = 1
                terms[tuple(e)] = c
        return Polynomial(n, terms)

    # -- structure ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def constant_term(self) -> Fraction:
        return self.terms.get((0,) * self.num_vars, Fraction(0))

    def sorted_terms(self) -> list[tuple[Exponents, Fraction]]:
        """Graded-lexicographic ordering; the canonical serialization order."""
        return sorted(self.terms.items(), key=lambda t: (sum(t[0]), t[0]))

    def __eq__(self, other):
        return (
            isinstance(other, Polynomial)
            and self.num_vars == other.num_vars
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.num_vars, tuple(self.sorted_terms())))

    def __repr__(self):
        if self.is_zero():
            return "Polynomial(0)"
        bits = []
        for exps, c in self.sorted_terms():
            mono = "*".join(
                f"x{i}" + (f"^{e}" if e > 1 else "") for i, e in enumerate(exps) if e
            )
            bits.append(f"{c}" + (f"*{mono}" if mono else ""))
        return "Polynomial(" + " + ".join(bits) + ")"

    # -- arithmetic ----------------------------------------------------------

    def _check(self, other: "Polynomial"):
        if self.num_vars != other.num_vars:
            raise DimensionMismatch("polynomials over different variable sets")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, Fraction(0)) + c
        return Polynomial(self.num_vars, out)

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.num_vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        out: dict[Exponents, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, Fraction(0)) + c1 * c2
        return Polynomial(self.num_vars, out)

    def scale(self, c) -> "Polynomial":
        c = Fraction(c)
        return Polynomial(self.num_vars, {e: c * v for e, v in self.terms.items()})

    def pow(self, k: int) -> "Polynomial":
        if k < 0:
            raise DomainError("negative polynomial power")
        out = Polynomial.constant(self.num_vars, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base if k > 1 else base
            k >>= 1
        return out

    def partial(self, i: int) -> "Polynomial":
        out: dict[Exponents, Fraction] = {}
        for e, c in self.terms.items():
            if e[i] == 0:
                continue
            ne = list(e)
            ne[i] -= 1
            out[tuple(ne)] = out.get(tuple(ne), Fraction(0)) + c * e[i]
        return Polynomial(self.num_vars, out)

    def compose(self, subs: Sequence["Polynomial"]) -> "Polynomial":
        """Substitute subs[i] for variable i; exact."""
        if len(subs) != self.num_vars:
            raise DimensionMismatch("substitution arity mismatch")
        if self.is_zero():
            nv = subs[0].num_vars if subs else 0
            return Polynomial(nv, {})
        nv = subs[0].num_vars
        if any(s.num_vars != nv for s in subs):
            raise DimensionMismatch("substitution polynomials disagree on arity")
        pow_cache: list[dict[int, Polynomial]] = [dict() for _ in subs]

        def powed(i: int, k: int) -> Polynomial:
            if k not in pow_cache[i]:
                pow_cache[i][k] = subs[i].pow(k)
            return pow_cache[i][k]

        acc = Polynomial(nv, {})
        for exps, c in self.terms.items():
            term = Polynomial.constant(nv, c)
            for i, e in enumerate(exps):
                if e:
                    term = term * powed(i, e)
            acc = acc + term
        return acc

    # -- evaluation ----------------------------------------------------------

    def eval_exact(self, point: Sequence) -> Fraction:
        pt = [Fraction(x) for x in point]
        if len(pt) != self.num_vars:
            raise DimensionMismatch("point dimension mismatch")
        total = Fraction(0)
        for exps, c in self.terms.items():
            v = c
            for x, e in zip(pt, exps):
                if e:
                    v *= x**e
            total += v
        return total

    def eval_float(self, point: Sequence[float]) -> float:
        total = 0.0
        for exps, c in self.terms.items():
            v = float(c)
            for x, e in zip(point, exps):
                if e:
                    v *= x**e
            total += v
        return total

    # -- bounds ----------------------------------------------------------------

    def coeff_one_norm(self) -> Fraction:
        return sum((abs(c) for c in self.terms.values()), Fraction(0))

    def lipschitz_bound(self, radius: Fraction) -> Fraction:
        """Exact bound for |grad| on the sup-ball |x|_inf <= radius.

        Sum over terms of |coeff| * deg * radius^(deg-1); coarse but safe.
        """
        radius = max(Fraction(radius), Fraction(0))
        total = Fraction(0)
        for exps, c in self.terms.items():
            d = sum(exps)
            if d == 0:
                continue
            r = radius ** (d - 1) if d > 1 else Fraction(1)
            total += abs(c) * d * r
        return total

    def magnitude_bound(self, radius: Fraction) -> Fraction:
        """Exact bound for |value| on the sup-ball of the given radius."""
        radius = max(Fraction(radius), Fraction(0))
        total = Fraction(0)
        for exps, c in self.terms.items():
            d = sum(exps)
            total += abs(c) * (radius**d if d else Fraction(1))
        return total


class PolynomialMap:
    """Map R^num_vars -> R^k given by component polynomials."""

    __slots__ = ("num_vars", "components")

    def __init__(
        self,
        num_vars: int,
        components: Sequence[Polynomial],
        degree_cap: int | None = None,
    ):
        comps = tuple(components)
        for p in comps:
            if p.num_vars != num_vars:
                raise DimensionMismatch("component arity mismatch")
        if degree_cap is not None:
            d = max((p.total_degree() for p in comps), default=0)
            if d > degree_cap:
                raise DomainError(f"total degree {d} exceeds cap {degree_cap}")
        object.__setattr__(self, "num_vars", num_vars)
        object.__setattr__(self, "components", comps)

    def __setattr__(self, *a):  # pragma: no cover
        raise AttributeError("PolynomialMap is immutable")

    @property
    def num_outputs(self) -> int:
        return len(self.components)

    def is_square(self) -> bool:
        return self.num_outputs == self.num_vars

    @staticmethod
    def identity(n: int) -> "PolynomialMap":
        return PolynomialMap(n, [Polynomial.variable(n, i) for i in range(n)])

    @staticmethod
    def from_matrix(m: RationalMatrix) -> "PolynomialMap":
        return PolynomialMap(
            m.cols, [Polynomial.linear_form(m.row(i)) for i in range(m.rows)]
        )

    def __eq__(self, other):
        return (
            isinstance(other, PolynomialMap)
            and self.num_vars == other.num_vars
            and self.components == other.components
        )

    def __hash__(self):
        return hash((self.num_vars, self.components))

    def __repr__(self):
        return f"PolynomialMap({self.num_vars} -> {self.num_outputs})"

    def total_degree(self) -> int:
        return max((p.total_degree() for p in self.components), default=0)

    def is_linear(self) -> bool:
        """Linear with zero constant term."""
        return all(
            all(sum(e) == 1 for e in p.terms) for p in self.components
        )

    def is_affine(self) -> bool:
        return all(
            all(sum(e) <= 1 for e in p.terms) for p in self.components
        )

    def linear_matrix(self) -> RationalMatrix:
        """Matrix of the degree-one part."""
        rows = []
        for p in self.components:
            row = [Fraction(0)] * self.num_vars
            for exps, c in p.terms.items():
                if sum(exps) == 1:
                    row[exps.index(1)] = c
            rows.append(row)
        return RationalMatrix(rows)

    def constant_vector(self) -> tuple[Fraction, ...]:
        return tuple(p.constant_term() for p in self.components)

    def add(self, other: "PolynomialMap") -> "PolynomialMap":
        if self.num_vars != other.num_vars or self.num_outputs != other.num_outputs:
            raise DimensionMismatch("map shape mismatch")
        return PolynomialMap(
            self.num_vars, [a + b for a, b in zip(self.components, other.components)]
        )

    def negate(self) -> "PolynomialMap":
        return PolynomialMap(self.num_vars, [-p for p in self.components])

    def compose_linear(self, m: RationalMatrix) -> "PolynomialMap":
        """x -> f(Mx); exact polynomial composition."""
        if m.rows != self.num_vars:
            raise DimensionMismatch("matrix rows != map arity")
        subs = [Polynomial.linear_form(m.row(i)) for i in range(m.rows)]
        return PolynomialMap(m.cols, [p.compose(subs) for p in self.components])

    def post_linear(self, m: RationalMatrix) -> "PolynomialMap":
        """x -> M f(x)."""
        if m.cols != self.num_outputs:
            raise DimensionMismatch("matrix cols != map outputs")
        comps = []
        for i in range(m.rows):
            acc = Polynomial(self.num_vars, {})
            for j in range(m.cols):
                c = m[i, j]
                if c != 0:
                    acc = acc + self.components[j].scale(c)
            comps.append(acc)
        return PolynomialMap(self.num_vars, comps)

    def compose(self, inner: "PolynomialMap") -> "PolynomialMap":
        """x -> self(inner(x))."""
        if inner.num_outputs != self.num_vars:
            raise DimensionMismatch("composition shape mismatch")
        return PolynomialMap(
            inner.num_vars, [p.compose(inner.components) for p in self.components]
        )

    def direct_sum(self, other: "PolynomialMap") -> "PolynomialMap":
        """(x, y) -> (f(x), g(y)) on concatenated coordinates."""
        n1, n2 = self.num_vars, other.num_vars
        n = n1 + n2
        comps = []
        for p in self.components:
            comps.append(
                Polynomial(n, {e + (0,) * n2: c for e, c in p.terms.items()})
            )
        for p in other.components:
            comps.append(
                Polynomial(n, {(0,) * n1 + e: c for e, c in p.terms.items()})
            )
        return PolynomialMap(n, comps)

    def jacobian(self) -> list[list[Polynomial]]:
        """Exact symbolic partial derivatives d f_i / d x_j."""
        return [
            [p.partial(j) for j in range(self.num_vars)] for p in self.components
        ]

    def eval_exact(self, point: Sequence) -> tuple[Fraction, ...]:
        return tuple(p.eval_exact(point) for p in self.components)

    def eval_float(self, point: Sequence[float]) -> list[float]:
        return [p.eval_float(point) for p in self.components]

    def lipschitz_bound(self, radius: Fraction) -> Fraction:
        """Exact rational L with |f(x)-f(y)|_2 <= L |x-y|_2 on the sup-ball.

        L^2 = sum of squared per-component gradient bounds; each component
        bound is a sup-norm bound and |x-y|_inf <= |x-y|_2, so the chain is
        conservative.
        """
        comps = [p.lipschitz_bound(radius) for p in self.components]
        sq = sum((c * c for c in comps), Fraction(0))
        from .rational import sqrt_upper

        return sqrt_upper(sq)

    def eval_error_bound(self, radius: Fraction) -> Fraction:
        """Conservative bound for float-evaluation roundoff inside |x|_inf <= radius."""
        eps = Fraction(1, 2**52)
        worst = Fraction(0)
        for p in self.components:
            nops = sum(sum(e) + 1 for e in p.terms) + len(p.terms)
            worst = max(worst, p.magnitude_bound(radius) * nops)
        return worst * eps * 64
