"""Sequence-space Fredholm operators, compact perturbations, and the
Schwartz index via exact Galerkin reduction, plus the cocycle algebra
(pinch sum, inverse, cup product, suspension, picture conversion).

Operator model: a rational block on the first `window` coordinates, a shift
by `shift_power`, and a cycling nonzero rational diagonal on the tail.  The
Fredholm index equals the shift power (the block is square), every integer
index is realized, and preimages of truncation subspaces are exactly
computable.  For index zero the preimage of span(e_1..e_N) *is*
span(e_1..e_N), so the reduced map lives on a standard rational ball.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from .burnside import BurnsideElement, MarksVector, TableOfMarks, marks_for_group, solve_integral
from .degree import (
    Domain,
    DegreeConfig,
    _BallRegion,
    certify_boundary,
    brouwer_degree,
    equivariant_degree,
)
from .errors import (
    BoundaryZeroSuspected,
    DimensionMismatch,
    DomainError,
    EigenvalueOnOne,
    GroupMismatch,
    InadmissibleRadius,
    NoAdmissibleRadius,
    NotSpanned,
    OperatorMismatch,
)
from .linalg import RationalMatrix
from .polynomials import Polynomial, PolynomialMap
from .rational import sqrt_upper
from .reps import OrthogonalRep, check_equivariance
from . import sturm

GALERKIN_CAP = 512


# ---------------------------------------------------------------------------
# operators


@dataclass(frozen=True)
class FredholmOperator:
    """Block + shift + cycling diagonal tail on square-summable sequences."""

    window: int
    block: RationalMatrix
    shift_power: int
    tail: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "tail", tuple(Fraction(t) for t in self.tail))
        if self.window < 0:
            raise DomainError("window must be >= 0")
        if self.block.rows != self.window or self.block.cols != self.window:
            raise DimensionMismatch("block must be window x window")
        if not self.tail or any(t == 0 for t in self.tail):
            raise DomainError("tail entries must be nonzero")
        # verify the recorded index against the kernel/cokernel computation
        kb = self.window - self.block.rank()
        ker = kb + max(0, self.shift_power)
        coker = kb + max(0, -self.shift_power)
        if ker - coker != self.index:
            raise DomainError("index bookkeeping violated")  # unreachable

    @property
    def index(self) -> int:
        return self.shift_power

    @staticmethod
    def identity() -> "FredholmOperator":
        return FredholmOperator(0, RationalMatrix([]), 0, (Fraction(1),))

    @staticmethod
    def with_block(block: RationalMatrix, tail=Fraction(1)) -> "FredholmOperator":
        return FredholmOperator(block.rows, block, 0, (Fraction(tail),))

    @staticmethod
    def shift(power: int, tail=Fraction(1)) -> "FredholmOperator":
        return FredholmOperator(0, RationalMatrix([]), power, (Fraction(tail),))

    def tail_at(self, i: int) -> Fraction:
        """Tail coefficient consumed by input coordinate i (1-based)."""
        anchor = self.window + max(0, self.shift_power)
        return self.tail[(i - anchor - 1) % len(self.tail)]

    def finite_matrix(self, n_in: int, n_out: int) -> RationalMatrix:
        """Matrix of the operator restricted to the first n_in inputs."""
        rows = [[Fraction(0)] * n_in for _ in range(n_out)]
        for i in range(1, min(self.window, n_in) + 1):
            for j in range(1, min(self.window, n_out) + 1):
                rows[j - 1][i - 1] = self.block[j - 1, i - 1]
        first_tail_in = self.window + max(0, self.shift_power) + 1
        for i in range(first_tail_in, n_in + 1):
            j = i - self.shift_power
            if 1 <= j <= n_out:
                rows[j - 1][i - 1] = self.tail_at(i)
        return RationalMatrix(rows)

    def truncated(self, n: int) -> RationalMatrix:
        """Square truncation; only meaningful for shift_power == 0."""
        if self.shift_power != 0:
            raise DimensionMismatch("square truncation needs index zero")
        return self.finite_matrix(n, n)

    def widen_window(self, new_window: int) -> "FredholmOperator":
        """Absorb tail coordinates into the block (index-zero only)."""
        if self.shift_power != 0:
            raise DimensionMismatch("window widening needs index zero")
        if new_window < self.window:
            raise DomainError("cannot shrink a window")
        if new_window == self.window:
            return self
        blk = self.truncated(new_window)
        shiftd = (new_window - self.window) % len(self.tail)
        tail = tuple(self.tail[(shiftd + i) % len(self.tail)] for i in range(len(self.tail)))
        return FredholmOperator(new_window, blk, 0, tail)

    def prepend_identity(self) -> "FredholmOperator":
        """Operator on R + E acting as the identity on the new coordinate."""
        w = self.window
        rows = [[Fraction(0)] * (w + 1) for _ in range(w + 1)]
        rows[0][0] = Fraction(1)
        for i in range(w):
            for j in range(w):
                rows[i + 1][j + 1] = self.block[i, j]
        return FredholmOperator(w + 1, RationalMatrix(rows), self.shift_power, self.tail)

    def first_output_row(self, width: int) -> tuple[Fraction, ...]:
        return self.finite_matrix(width, 1).row(0)


# ---------------------------------------------------------------------------
# perturbations


@dataclass(frozen=True)
class CompactPerturbation:
    """Nonlinearity factoring through finitely many coordinates.

    c = (include first k coordinates) o core o (project to first m); the
    factored polynomial form is stored, never a black box.  Construction
    canonicalizes: trailing zero components and unread trailing inputs are
    trimmed so that algebraic identities (double inverse, etc.) restore the
    stored data exactly.
    """

    input_dim: int
    output_dim: int
    core: PolynomialMap

    def __post_init__(self):
        core = self.core
        if core.num_vars != self.input_dim or core.num_outputs != self.output_dim:
            raise DimensionMismatch("core shape disagrees with declared dims")
        comps = list(core.components)
        while comps and comps[-1].is_zero():
            comps.pop()
        used = 0
        for p in comps:
            for exps in p.terms:
                for i, e in enumerate(exps):
                    if e:
                        used = max(used, i + 1)
        if len(comps) != core.num_outputs or used != core.num_vars:
            trimmed = PolynomialMap(
                used,
                [
                    Polynomial(used, {e[:used]: c for e, c in p.terms.items()})
                    for p in comps
                ],
            )
            object.__setattr__(self, "core", trimmed)
            object.__setattr__(self, "input_dim", used)
            object.__setattr__(self, "output_dim", len(comps))

    @staticmethod
    def zero() -> "CompactPerturbation":
        return CompactPerturbation(0, 0, PolynomialMap(0, []))

    @staticmethod
    def from_core(core: PolynomialMap) -> "CompactPerturbation":
        return CompactPerturbation(core.num_vars, core.num_outputs, core)

    @staticmethod
    def linear(matrix: RationalMatrix) -> "CompactPerturbation":
        return CompactPerturbation.from_core(PolynomialMap.from_matrix(matrix))

    def is_zero(self) -> bool:
        return self.output_dim == 0

    def component(self, j: int, arity: int) -> Polynomial:
        """Output component j (1-based) as a polynomial in `arity` variables."""
        if j > self.output_dim:
            return Polynomial(arity, {})
        p = self.core.components[j - 1]
        return Polynomial(
            arity, {e + (0,) * (arity - self.input_dim): c for e, c in p.terms.items()}
        )


# ---------------------------------------------------------------------------
# group data: blockwise actions on the sequence space


@dataclass(frozen=True)
class GroupData:
    """Leading blocks followed by one repeating block representation."""

    repeating: OrthogonalRep
    leading: tuple[OrthogonalRep, ...] = ()

    def __post_init__(self):
        G = self.repeating.group
        for rep in self.leading:
            if rep.group != G:
                raise GroupMismatch("leading block over a different group")

    @property
    def group(self):
        return self.repeating.group

    @property
    def lead_dim(self) -> int:
        return sum(rep.dimension for rep in self.leading)

    def align_up(self, n: int) -> int:
        d = self.repeating.dimension
        n0 = self.lead_dim
        if n <= n0:
            return n0 if n0 > 0 else d
        return n0 + d * ((n - n0 + d - 1) // d)

    def is_aligned(self, n: int) -> bool:
        return n >= self.lead_dim and (n - self.lead_dim) % self.repeating.dimension == 0

    def rep_at(self, n: int) -> OrthogonalRep:
        if not self.is_aligned(n) or n == 0:
            raise DimensionMismatch(f"{n} is not a block boundary")
        G = self.group
        mats = []
        for gi in range(G.order):
            blocks = [rep.matrices[gi] for rep in self.leading]
            count = (n - self.lead_dim) // self.repeating.dimension
            blocks.extend(self.repeating.matrices[gi] for _ in range(count))
            mats.append(_block_diag(blocks, n))
        return OrthogonalRep(G, n, tuple(mats))

    def prepend_trivial(self) -> "GroupData":
        triv = OrthogonalRep.trivial(self.group, 1)
        return GroupData(repeating=self.repeating, leading=(triv,) + self.leading)

    def first_coordinate_invariant(self) -> bool:
        """True when coordinate 1 spans an invariant line of the action."""
        rep = self.leading[0] if self.leading else self.repeating
        if rep.dimension == 1:
            return True
        for m in rep.matrices:
            for j in range(1, rep.dimension):
                if m[0, j] != 0 or m[j, 0] != 0:
                    return False
        return True

    def first_coordinate_trivial(self) -> bool:
        """True when the action fixes coordinate 1 pointwise."""
        rep = self.leading[0] if self.leading else self.repeating
        if not self.first_coordinate_invariant():
            return False
        return all(m[0, 0] == 1 for m in rep.matrices)


def _block_diag(blocks: Sequence[RationalMatrix], n: int) -> RationalMatrix:
    rows = [[Fraction(0)] * n for _ in range(n)]
    at = 0
    for b in blocks:
        for i in range(b.rows):
            for j in range(b.cols):
                rows[at + i][at + j] = b[i, j]
        at += b.rows
    if at != n:
        raise DimensionMismatch("blocks do not fill the matrix")
    return RationalMatrix(rows)


# ---------------------------------------------------------------------------
# cocycles


@dataclass(frozen=True)
class Cocycle:
    """Primitive four-tuple datum at desk scale."""

    operator: FredholmOperator
    perturbation: CompactPerturbation
    picture: str = "pointed"
    radius: Fraction = Fraction(1)
    group_data: GroupData | None = None
    degree_label: int = 0

    def __post_init__(self):
        object.__setattr__(self, "radius", Fraction(self.radius))
        if self.picture not in ("pointed", "boundary"):
            raise DomainError(f"unknown picture {self.picture!r}")
        if self.radius <= 0:
            raise DomainError("admissible radius must be positive")
        if self.group_data is not None:
            _validate_group_data(self)

    @property
    def is_sum(self) -> bool:
        return False


@dataclass(frozen=True)
class SumCocycle:
    """Pinch-map sum: routes an appended fold coordinate through the
    piecewise-logarithm map and wedges the two summands."""

    left: Union[Cocycle, "SumCocycle"]
    right: Union[Cocycle, "SumCocycle"]

    def __post_init__(self):
        a, b = self.left, self.right
        if base_operator(a) != base_operator(b):
            raise OperatorMismatch("summands must share the linear operator")
        if picture_of(a) != picture_of(b):
            raise OperatorMismatch("summands must share the picture")
        if picture_of(a) != "pointed":
            raise OperatorMismatch("the pinch sum is defined in the pointed picture")
        if radius_of(a) != radius_of(b):
            raise OperatorMismatch("summands must share the admissible radius")
        if group_of(a) != group_of(b):
            raise GroupMismatch("summands carry different group data")

    @property
    def picture(self) -> str:
        return picture_of(self.left)

    @property
    def radius(self) -> Fraction:
        return radius_of(self.left)

    @property
    def is_sum(self) -> bool:
        return True


CocycleLike = Union[Cocycle, SumCocycle]


def base_operator(c: CocycleLike) -> FredholmOperator:
    return c.operator if isinstance(c, Cocycle) else base_operator(c.left)


def picture_of(c: CocycleLike) -> str:
    return c.picture


def radius_of(c: CocycleLike) -> Fraction:
    return c.radius


def group_of(c: CocycleLike) -> GroupData | None:
    return c.group_data if isinstance(c, Cocycle) else group_of(c.left)


def _validate_group_data(c: Cocycle):
    gd = c.group_data
    op = c.operator
    if op.shift_power != 0:
        raise GroupMismatch("group actions are supported for index-zero operators")
    W = gd.align_up(
        max(op.window, c.perturbation.input_dim, c.perturbation.output_dim, 1)
    )
    rep = gd.rep_at(W)
    L = op.truncated(W)
    for m in rep.matrices:
        if m @ L != L @ m:
            raise GroupMismatch("operator does not commute with the group action")
    cW = _perturbation_as_selfmap(c.perturbation, W)
    if not check_equivariance(cW, rep):
        raise GroupMismatch("perturbation does not intertwine the group action")


def _perturbation_as_selfmap(pert: CompactPerturbation, n: int) -> PolynomialMap:
    comps = [pert.component(j + 1, n) for j in range(n)]
    return PolynomialMap(n, comps)


# ---------------------------------------------------------------------------
# Galerkin data


@dataclass(frozen=True)
class GalerkinData:
    truncation: int
    preimage_basis: RationalMatrix  # columns span l^{-1}(span(e_1..e_N))
    witness_rows: int
    witness_rank: int

    @property
    def certified(self) -> bool:
        return self.witness_rank == self.witness_rows


def minimal_truncation(c: Cocycle) -> int:
    op, pert = c.operator, c.perturbation
    n = max(
        1,
        op.window + max(0, -op.shift_power),
        pert.input_dim,
        pert.output_dim,
    )
    if c.group_data is not None:
        n = c.group_data.align_up(n)
    return n


def galerkin_subspace(c: Cocycle, truncation: int | None = None) -> GalerkinData:
    """Spanning subspace span(e_1..e_N) with exact preimage and rank witness."""
    op = c.operator
    n = truncation if truncation is not None else minimal_truncation(c)
    if truncation is not None and c.group_data is not None:
        if not c.group_data.is_aligned(truncation):
            raise DimensionMismatch("truncation must respect the block structure")
    if n > GALERKIN_CAP:
        raise NotSpanned(f"no certified truncation below the cap {GALERKIN_CAP}")
    # surjectivity witness: every e_j with j <= rows is in span(xi) + im(l)
    rows = max(n, op.window + max(0, -op.shift_power))
    in_width = rows + max(0, op.shift_power) + op.window
    L = op.finite_matrix(in_width, rows)
    cols = [
        [Fraction(int(i == j)) for i in range(rows)] for j in range(n)
    ] + [list(L.column(j)) for j in range(in_width)]
    witness = RationalMatrix.from_columns(cols)
    rank = witness.rank()
    if rank != rows:
        raise NotSpanned(
            f"span(e_1..e_{n}) + im(l) misses directions in the first {rows} rows"
        )
    # preimage: x supported in the first `width` inputs with (Lx)_j = 0, j > n
    width = max(op.window + max(0, op.shift_power), n + op.shift_power, n)
    out_rows = max(width - op.shift_power, op.window + max(0, -op.shift_power), n)
    Lfull = op.finite_matrix(width, out_rows)
    beyond = RationalMatrix([list(Lfull.row(j)) for j in range(n, out_rows)])
    if beyond.rows == 0:
        basis_vecs = [tuple(Fraction(int(i == j)) for i in range(width)) for j in range(width)]
    else:
        basis_vecs = beyond.nullspace()
    basis = RationalMatrix.from_columns([list(v) for v in basis_vecs]) if basis_vecs else RationalMatrix.zero(width, 0)
    return GalerkinData(
        truncation=n,
        preimage_basis=basis,
        witness_rows=rows,
        witness_rank=rank,
    )


# ---------------------------------------------------------------------------
# reduced maps and the index


def reduced_map(c: Cocycle, n: int) -> PolynomialMap:
    """P_N (l + c) restricted to l^{-1}(span e_1..e_N) = span(e_1..e_N).

    Index-zero operators only; the preimage equals the truncation subspace,
    so the reduced map is the truncated matrix plus the included core.
    """
    op = c.operator
    if op.index != 0:
        raise DimensionMismatch(
            f"integer index needs Fredholm index 0, operator has {op.index}"
        )
    L = op.truncated(n)
    if c.perturbation.input_dim > n or c.perturbation.output_dim > n:
        raise DimensionMismatch("truncation too small for the perturbation")
    lin = PolynomialMap.from_matrix(L)
    comps = [
        lin.components[j] + c.perturbation.component(j + 1, n) for j in range(n)
    ]
    return PolynomialMap(n, comps)


def _active_dimension(c: Cocycle) -> int:
    n = minimal_truncation(c)
    return n


def _orientation_correction(c: Cocycle, n_base: int, n: int) -> int:
    """Sign of det(l) on the passive coordinates between two truncations.

    Stabilization identifies added directions with their images under l, so
    the stable index divides out the tail signs.
    """
    sign = 1
    for j in range(n_base + 1, n + 1):
        if c.operator.tail_at(j) < 0:
            sign = -sign
    return sign


def _fixed_degree_vector(
    c: Cocycle, n: int, config: DegreeConfig, marks: TableOfMarks | None
) -> tuple[list[int], TableOfMarks | None]:
    """Per-class fixed degrees of the reduced map ([deg] for trivial group)."""
    g = reduced_map(c, n)
    R = c.radius
    if c.group_data is None:
        deg = _split_degree(c, g, n, config)
        return [deg], None
    gd = c.group_data
    rho = gd.rep_at(n)
    if marks is None:
        marks = marks_for_group(gd.group)
    eq = equivariant_degree(g, rho, Domain.ball([0] * n, R), marks, config)
    return list(eq.fixed_degrees.values), marks


def _split_degree(c: Cocycle, g: PolynomialMap, n: int, config: DegreeConfig) -> int:
    """Degree of the reduced map, splitting off the passive diagonal tail."""
    n_act = min(n, _active_dimension(c))
    if n_act < n:
        tail_sign = 1
        for j in range(n_act + 1, n + 1):
            if c.operator.tail_at(j) < 0:
                tail_sign = -tail_sign
        comps = [
            Polynomial(n_act, {e[:n_act]: co for e, co in p.terms.items()})
            for p in g.components[:n_act]
        ]
        g_act = PolynomialMap(n_act, comps)
        res = brouwer_degree(
            g_act, Domain.ball([0] * n_act, c.radius), "auto", config
        )
        return res.value * tail_sign
    res = brouwer_degree(g, Domain.ball([0] * n, c.radius), "auto", config)
    return res.value


def schwartz_index(
    c: CocycleLike,
    config: DegreeConfig | None = None,
    marks: TableOfMarks | None = None,
) -> int | BurnsideElement:
    """The cocycle's class: an integer, or a Burnside element with group data.

    Sums are evaluated by slicing the pinched system at the fold coordinate's
    two regular zeros (each slice is a summand's reduced system); the
    winding-number oracle over the full piecewise map cross-checks this in
    the test suite.
    """
    config = config or DegreeConfig()
    vec, marks_used = _index_vector(c, None, config, marks)
    gd = group_of(c)
    if gd is None:
        return vec[0]
    element = solve_integral(marks_used, vec)
    return element


def _index_vector(
    c: CocycleLike,
    n: int | None,
    config: DegreeConfig,
    marks: TableOfMarks | None,
) -> tuple[list[int], TableOfMarks | None]:
    if isinstance(c, SumCocycle):
        lv, marks = _index_vector(c.left, n, config, marks)
        rv, marks = _index_vector(c.right, n, config, marks)
        return [a + b for a, b in zip(lv, rv)], marks
    n_base = minimal_truncation(c)
    n_eff = n_base if n is None else max(n, n_base)
    if c.group_data is not None:
        n_eff = c.group_data.align_up(n_eff)
    vec, marks = _fixed_degree_vector(c, n_eff, config, marks)
    corr = _orientation_correction(c, n_base, n_eff)
    if corr != 1:
        vec = [corr * v for v in vec]
    return vec, marks


@dataclass(frozen=True)
class StabilizationReport:
    entries: tuple[tuple[int, tuple[int, ...]], ...]
    group: bool

    @property
    def all_equal(self) -> bool:
        vals = {e[1] for e in self.entries}
        return len(vals) <= 1

    @property
    def value(self) -> tuple[int, ...]:
        return self.entries[0][1]


def stabilization_check(
    c: CocycleLike,
    n_list: Sequence[int],
    config: DegreeConfig | None = None,
) -> StabilizationReport:
    """Index at every requested truncation; disagreement is reported, never averaged."""
    config = config or DegreeConfig()
    marks: TableOfMarks | None = None
    entries = []
    for n in n_list:
        vec, marks = _index_vector(c, n, config, marks)
        entries.append((n, tuple(vec)))
    return StabilizationReport(entries=tuple(entries), group=group_of(c) is not None)


# ---------------------------------------------------------------------------
# the cocycle algebra


def zero_cocycle(radius=Fraction(1), group: GroupData | None = None) -> Cocycle:
    """A cocycle with no zeros at all: first coordinate pinned above zero."""
    radius = Fraction(radius)
    M = radius * radius + 1
    core = PolynomialMap(
        1, [Polynomial(1, {(1,): Fraction(-1), (2,): Fraction(1), (0,): M})]
    )
    gd = group.prepend_trivial() if group is not None else None
    return Cocycle(
        operator=FredholmOperator.identity(),
        perturbation=CompactPerturbation.from_core(core),
        picture="pointed",
        radius=radius,
        group_data=gd,
    )


def identity_cocycle(radius=Fraction(1), group: GroupData | None = None) -> Cocycle:
    return Cocycle(
        operator=FredholmOperator.identity(),
        perturbation=CompactPerturbation.zero(),
        picture="pointed",
        radius=Fraction(radius),
        group_data=group,
    )


def cocycle_sum(a: CocycleLike, b: CocycleLike) -> SumCocycle:
    """Pinch-map sum of two cocycles sharing the operator (pointed picture).

    Operands whose operators differ only by prepended trivial coordinates are
    padded by suspensions (index preserving) until the operators agree.
    """
    a, b = _pad_to_common_operator(a, b)
    return SumCocycle(left=a, right=b)


def _pad_to_common_operator(a: CocycleLike, b: CocycleLike):
    for _ in range(64):
        if base_operator(a) == base_operator(b):
            return a, b
        if base_operator(a).window < base_operator(b).window:
            a = suspension(a)
        elif base_operator(b).window < base_operator(a).window:
            b = suspension(b)
        else:
            break
    return a, b


def inverse(a: CocycleLike) -> CocycleLike:
    """Composition with a target reflection in an invariant coordinate.

    Realized as a same-operator perturbation change
    c |-> (refl - id) o l + refl o c, so summing with the original stays
    legal and double inversion restores the stored data exactly.  With group
    data the reflected coordinate must carry the trivial character (so every
    fixed-space degree flips); a trivial coordinate is prepended by one
    suspension when missing.
    """
    if isinstance(a, SumCocycle):
        return SumCocycle(left=inverse(a.left), right=inverse(a.right))
    if a.picture != "pointed":
        raise DomainError("inverse is defined in the pointed picture")
    gd = a.group_data
    if gd is not None and not gd.first_coordinate_trivial():
        return inverse(suspension(a))
    op = a.operator
    pert = a.perturbation
    width = max(
        pert.input_dim,
        op.window if op.window >= 1 else 1 + max(0, op.shift_power),
        1,
    )
    row1 = op.first_output_row(width)
    k_new = max(pert.output_dim, 1)
    comps = []
    first = Polynomial.linear_form([-2 * x for x in row1]) - pert.component(1, width)
    comps.append(first)
    for j in range(2, k_new + 1):
        comps.append(pert.component(j, width))
    core = PolynomialMap(width, comps)
    return Cocycle(
        operator=op,
        perturbation=CompactPerturbation.from_core(core),
        picture=a.picture,
        radius=a.radius,
        group_data=gd,
        degree_label=a.degree_label,
    )


def suspension(a: CocycleLike) -> CocycleLike:
    """Append one trivial coordinate; the degree label shifts, index does not."""
    if isinstance(a, SumCocycle):
        return SumCocycle(left=suspension(a.left), right=suspension(a.right))
    if a.picture != "pointed":
        raise DomainError("suspension is defined in the pointed picture")
    op = a.operator.prepend_identity()
    pert = a.perturbation
    if pert.is_zero():
        new_pert = pert
    else:
        m, k = pert.input_dim + 1, pert.output_dim + 1
        comps = [Polynomial(m, {})]
        for p in pert.core.components:
            comps.append(Polynomial(m, {(0,) + e: c for e, c in p.terms.items()}))
        new_pert = CompactPerturbation(m, k, PolynomialMap(m, comps))
    gd = a.group_data.prepend_trivial() if a.group_data is not None else None
    return Cocycle(
        operator=op,
        perturbation=new_pert,
        picture=a.picture,
        radius=a.radius,
        group_data=gd,
        degree_label=a.degree_label + 1,
    )


def cup_product(a: CocycleLike, b: CocycleLike) -> CocycleLike:
    """Cocycle on the interleaved sum of sequence spaces, componentwise map."""
    if isinstance(a, SumCocycle):
        return cocycle_sum(cup_product(a.left, b), cup_product(a.right, b))
    if isinstance(b, SumCocycle):
        return cocycle_sum(cup_product(a, b.left), cup_product(a, b.right))
    ga, gb = a.group_data, b.group_data
    if (ga is None) != (gb is None):
        raise GroupMismatch("cup product needs both or neither cocycle equivariant")
    if ga is not None:
        if ga.group != gb.group:
            raise GroupMismatch("cup product over different groups")
        if ga.leading or gb.leading:
            raise GroupMismatch("cup product supports uniform block actions only")
    opa, opb = a.operator, b.operator
    if opa.shift_power != 0 or opb.shift_power != 0:
        raise OperatorMismatch("cup product is implemented for index-zero operators")
    if a.picture != b.picture:
        raise OperatorMismatch("cup product needs matching pictures")

    ca = _chunk_size(a)
    cb = _chunk_size(b)
    wa = -(-max(opa.window, 1) // ca) * ca
    wb = -(-max(opb.window, 1) // cb) * cb
    chunks = max(wa // ca, wb // cb)
    opa_w = opa.widen_window(chunks * ca)
    opb_w = opb.widen_window(chunks * cb)

    period = ca + cb
    window = chunks * period

    def pos_a(i: int) -> int:  # 1-based interleaved position of a-coordinate i
        q, r = divmod(i - 1, ca)
        return q * period + r + 1

    def pos_b(i: int) -> int:
        q, r = divmod(i - 1, cb)
        return q * period + ca + r + 1

    rows = [[Fraction(0)] * window for _ in range(window)]
    for i in range(1, chunks * ca + 1):
        for j in range(1, chunks * ca + 1):
            v = opa_w.block[j - 1, i - 1]
            if v:
                rows[pos_a(j) - 1][pos_a(i) - 1] = v
    for i in range(1, chunks * cb + 1):
        for j in range(1, chunks * cb + 1):
            v = opb_w.block[j - 1, i - 1]
            if v:
                rows[pos_b(j) - 1][pos_b(i) - 1] = v
    tail = tuple(
        [opa_w.tail_at(chunks * ca + 1 + i) for i in range(ca)]
        + [opb_w.tail_at(chunks * cb + 1 + i) for i in range(cb)]
    )
    op = FredholmOperator(window, RationalMatrix(rows), 0, tail)

    in_dim = max(
        pos_a(a.perturbation.input_dim) if a.perturbation.input_dim else 0,
        pos_b(b.perturbation.input_dim) if b.perturbation.input_dim else 0,
    )
    out_dim = max(
        pos_a(a.perturbation.output_dim) if a.perturbation.output_dim else 0,
        pos_b(b.perturbation.output_dim) if b.perturbation.output_dim else 0,
    )
    comps = [Polynomial(in_dim, {}) for _ in range(out_dim)]

    def relabel(p: Polynomial, position) -> Polynomial:
        out: dict[tuple[int, ...], Fraction] = {}
        for exps, coeff in p.terms.items():
            new = [0] * in_dim
            for i, e in enumerate(exps):
                if e:
                    new[position(i + 1) - 1] = e
            out[tuple(new)] = out.get(tuple(new), Fraction(0)) + coeff
        return Polynomial(in_dim, out)

    for j in range(1, a.perturbation.output_dim + 1):
        comps[pos_a(j) - 1] = comps[pos_a(j) - 1] + relabel(
            a.perturbation.core.components[j - 1], pos_a
        )
    for j in range(1, b.perturbation.output_dim + 1):
        comps[pos_b(j) - 1] = comps[pos_b(j) - 1] + relabel(
            b.perturbation.core.components[j - 1], pos_b
        )
    pert = (
        CompactPerturbation.from_core(PolynomialMap(in_dim, comps))
        if out_dim
        else CompactPerturbation.zero()
    )

    gd = None
    if ga is not None:
        combined = _direct_sum_rep(ga.repeating, gb.repeating)
        gd = GroupData(repeating=combined)
    r2 = a.radius * a.radius + b.radius * b.radius
    radius = sqrt_upper(r2) + Fraction(1, 100)
    return Cocycle(
        operator=op,
        perturbation=pert,
        picture=a.picture,
        radius=radius,
        group_data=gd,
        degree_label=a.degree_label + b.degree_label,
    )


def _chunk_size(c: Cocycle) -> int:
    base = len(c.operator.tail)
    if c.group_data is not None:
        d = c.group_data.repeating.dimension
        base = base * d // math.gcd(base, d)
    return base


def _direct_sum_rep(r1: OrthogonalRep, r2: OrthogonalRep) -> OrthogonalRep:
    if r1.group != r2.group:
        raise GroupMismatch("direct sum of reps over different groups")
    n = r1.dimension + r2.dimension
    mats = []
    for gi in range(r1.group.order):
        mats.append(_block_diag([r1.matrices[gi], r2.matrices[gi]], n))
    return OrthogonalRep(r1.group, n, tuple(mats))


# ---------------------------------------------------------------------------
# pictures


def reduced_boundary_margin(
    c: Cocycle, radius: Fraction | None = None, config: DegreeConfig | None = None
) -> Fraction:
    """Certified lower bound for |l + c| on the sphere of the given radius.

    All zeros of l + c live inside l^{-1}(xi), so certifying on the reduced
    slice covers the full sphere's zero set.
    """
    config = config or DegreeConfig()
    n = minimal_truncation(c)
    g = reduced_map(c, n)
    R = Fraction(radius if radius is not None else c.radius)
    region = _BallRegion(tuple(Fraction(0) for _ in range(n)), R)
    return certify_boundary(g, region, config)


def picture_convert(
    a: CocycleLike, target: str, config: DegreeConfig | None = None
) -> CocycleLike:
    """Convert between the pointed and no-zeros-on-the-boundary pictures."""
    if target not in ("pointed", "boundary"):
        raise DomainError(f"unknown picture {target!r}")
    if isinstance(a, SumCocycle):
        if target == picture_of(a):
            return a
        if target == "boundary":
            raise DomainError("convert the summands before pinching")
        return a
    if a.picture == target:
        return a
    if target == "pointed":
        # radial collapse of the exterior: the stored data already describes
        # the extended map; only the picture tag changes
        return Cocycle(
            operator=a.operator,
            perturbation=a.perturbation,
            picture="pointed",
            radius=a.radius,
            group_data=a.group_data,
            degree_label=a.degree_label,
        )
    config = config or DegreeConfig()
    try:
        reduced_boundary_margin(a, a.radius, config)
    except BoundaryZeroSuspected as err:
        raise NoAdmissibleRadius(
            f"cannot certify the sphere of radius {a.radius}: {err}"
        ) from err
    return Cocycle(
        operator=a.operator,
        perturbation=a.perturbation,
        picture="boundary",
        radius=a.radius,
        group_data=a.group_data,
        degree_label=a.degree_label,
    )


def find_admissible_radius(
    a: Cocycle,
    start=Fraction(1),
    cap=Fraction(2**16),
    config: DegreeConfig | None = None,
) -> Fraction:
    """Double the radius until the boundary certifies; loud failure at the cap."""
    config = config or DegreeConfig()
    R = Fraction(start)
    while R <= cap:
        try:
            reduced_boundary_margin(a, R, config)
            return R
        except BoundaryZeroSuspected:
            R *= 2
    raise NoAdmissibleRadius(f"no certifiable radius up to {cap}")


# ---------------------------------------------------------------------------
# piecewise evaluation of pinched systems (for oracles and reports)


def reduced_dimension(c: CocycleLike) -> int:
    if isinstance(c, SumCocycle):
        return reduced_dimension(c.left) + 1
    return minimal_truncation(c)


def reduced_eval(c: CocycleLike, point: Sequence[float]) -> list[float] | None:
    """Float value of the reduced system; None at the basepoint fibre.

    For sums the last coordinate is the fold: negative values route through
    the left summand, positive through the right, with the piecewise
    logarithm supplying the fold output.
    """
    if isinstance(c, Cocycle):
        g = reduced_map(c, minimal_truncation(c))
        if len(point) != g.num_vars:
            raise DimensionMismatch("point arity mismatch")
        return g.eval_float(list(point))
    s = point[-1]
    if s == 0:
        return None
    body = list(point[:-1])
    if s < 0:
        inner = reduced_eval(c.left, body)
        v = -math.log(-s)
    else:
        inner = reduced_eval(c.right, body)
        v = math.log(s)
    if inner is None:
        return None
    return inner + [v]


# ---------------------------------------------------------------------------
# classical cross-check


def linear_ls_oracle(K: CompactPerturbation) -> int:
    """Leray-Schauder index of I - K for finite-rank linear K, exactly.

    (-1)^(number of real eigenvalues of K in (1, inf), with multiplicity),
    from Sturm chains on the exact characteristic polynomial.
    """
    if not K.core.is_linear() and not K.is_zero():
        raise DomainError("oracle needs a linear core")
    q = max(K.input_dim, K.output_dim)
    if q == 0:
        return 1
    rows = [[Fraction(0)] * q for _ in range(q)]
    mat = K.core.linear_matrix()
    for i in range(mat.rows):
        for j in range(mat.cols):
            rows[i][j] = mat[i, j]
    sq = RationalMatrix(rows)
    p = sq.charpoly()
    if sturm.eval_poly(p, Fraction(1)) == 0:
        raise EigenvalueOnOne("1 is an eigenvalue of the perturbation")
    count = sturm.count_roots_with_multiplicity_above(p, Fraction(1))
    return -1 if count % 2 else 1
