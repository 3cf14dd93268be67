"""Randomized invariant suite behind the hidden `selftest` subcommand.

Each check prints one pass/fail line; any failure flips the overall verdict.
The random stream is fully determined by the seed.
"""

from __future__ import annotations

import random
from fractions import Fraction

from . import burnside as bn
from .corpus import corpus_groups
from .degree import Domain, brouwer_degree
from .groups import subgroup_classes
from .linalg import RationalMatrix
from .polynomials import Polynomial, PolynomialMap
from .schwartz import (
    CompactPerturbation,
    Cocycle,
    FredholmOperator,
    cocycle_sum,
    cup_product,
    identity_cocycle,
    inverse,
    linear_ls_oracle,
    picture_convert,
    schwartz_index,
    stabilization_check,
    suspension,
    zero_cocycle,
)


def run_selftest(seed: int = 0, quick: bool = False) -> tuple[bool, list[str]]:
    rng = random.Random(seed)
    lines: list[str] = []
    ok = True

    def check(name: str, passed: bool, detail: str = ""):
        nonlocal ok
        ok = ok and passed
        tag = "PASS" if passed else "FAIL"
        lines.append(f"[{tag}] {name}" + (f" ({detail})" if detail else ""))

    # group/burnside invariants on a slice of the corpus
    sample = corpus_groups()[: 6 if quick else 10]
    for name, G in sample:
        table = subgroup_classes(G)
        good = all(
            c.weyl_order * c.order == c.normalizer_order
            and G.order % c.normalizer_order == 0
            for c in table.classes
        )
        check(f"class table invariants {name}", good)
        M = bn.table_of_marks(table)
        n_vec = 50 if quick else 200
        agree = True
        for _ in range(n_vec):
            v = bn.MarksVector(
                tuple(rng.randrange(-6, 7) for _ in range(M.size))
            )
            res = bn.membership_check(M, v)
            if res.is_member != res.congruences_ok:
                agree = False
                break
        check(f"membership integrality == congruences {name}", agree)
        idem = bn.rational_idempotents(M)
        total = [sum(e[i] for e in idem) for i in range(M.size)]
        unit = [Fraction(int(i == M.size - 1)) for i in range(M.size)]
        check(f"idempotents sum to one {name}", total == unit)

    # degree: method agreement on a few two-dimensional maps
    maps = [
        PolynomialMap.identity(2),
        PolynomialMap(2, [Polynomial(2, {(2, 0): 1, (0, 2): -1}), Polynomial(2, {(1, 1): 2})]),
        PolynomialMap(2, [Polynomial(2, {(1, 0): -1}), Polynomial(2, {(0, 1): 1})]),
        PolynomialMap(
            2,
            [
                Polynomial(2, {(3, 0): 1, (1, 0): -1}),
                Polynomial(2, {(0, 1): 1}),
            ],
        ),
    ]
    D = Domain.ball([0, 0], Fraction(3, 2))
    for i, f in enumerate(maps):
        zc = brouwer_degree(f, D, method="zero-count")
        wd = brouwer_degree(f, D, method="winding")
        check(f"degree methods agree #{i}", zc.value == wd.value, f"{zc.value}")

    # schwartz: oracle agreement and algebra laws on random linear fixtures
    n_fix = 5 if quick else 10
    for i in range(n_fix):
        dim = rng.randrange(1, 4)
        while True:
            K = RationalMatrix(
                [
                    [Fraction(rng.randrange(-3, 4), rng.randrange(1, 3)) for _ in range(dim)]
                    for _ in range(dim)
                ]
            )
            p = K.charpoly()
            from .sturm import eval_poly

            if eval_poly(p, Fraction(1)) != 0:
                break
        pert = CompactPerturbation.linear(K.scale(-1))
        coc = Cocycle(
            operator=FredholmOperator.identity(),
            perturbation=pert,
            radius=1,
        )
        got = schwartz_index(coc)
        want = linear_ls_oracle(CompactPerturbation.linear(K))
        check(f"schwartz == leray-schauder #{i}", got == want, f"{got}")

    a = identity_cocycle(radius=1)
    z = zero_cocycle(radius=1)
    c2p = Cocycle(
        operator=FredholmOperator.identity(),
        perturbation=CompactPerturbation.from_core(
            PolynomialMap(1, [Polynomial(1, {(1,): -2})])
        ),
        radius=1,
    )
    check("sum additivity", schwartz_index(cocycle_sum(a, c2p)) == 0)
    check("zero element", schwartz_index(z) == 0)
    check("inverse negates", schwartz_index(inverse(c2p)) == 1)
    check("cancellation", schwartz_index(cocycle_sum(c2p, inverse(c2p))) == 0)
    check(
        "cup multiplies",
        schwartz_index(cup_product(c2p, c2p)) == 1,
    )
    check("suspension preserves", schwartz_index(suspension(c2p)) == -1)
    check(
        "picture round trip",
        schwartz_index(picture_convert(picture_convert(c2p, "boundary"), "pointed"))
        == -1,
    )
    rep = stabilization_check(c2p, list(range(1, 6)))
    check("stabilization constant", rep.all_equal)

    return ok, lines
