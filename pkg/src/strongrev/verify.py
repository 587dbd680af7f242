"""Verification engine: direct matrix-identity checks, spec generators, and
sweeps binding the classifier to explicit constructions.

Everything here re-derives its verdicts from raw matrix arithmetic (or an
independent restatement of a special case), so a bug in the construction
path cannot silently agree with itself.
"""

from __future__ import annotations

import itertools
import random
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from . import reversal
from .canonical import (
    JordanSpec,
    WeyrStructure,
    basic_weyr_matrix,
    homogeneous_weyr,
    jordan_block,
    jordan_matrix,
    matches_centralizer_pattern,
    sample_centralizer,
    weyr_form,
)
from .matrices import ExactMatrix, PermutationMap, SingularMatrixError
from .partitions import Partition, parity_sets
from .scalars import GaussianRational, MINUS_ONE, ONE, ZERO
from .scalars import I as IMAGINARY

__all__ = [
    "VerificationReport",
    "check_witness",
    "SpecGenerator",
    "iter_involutive_reversers",
    "iter_partitions",
    "classification_sweep",
    "homogeneous_det_check",
    "semisimple_cross_check",
    "cross_path_check",
    "semisimple_strong_verdict",
    "unipotent_strong_verdict",
    "negative_one_strong_verdict",
    "single_pair_strong_verdict",
    "run_selftest",
    "DEFAULT_POOL",
]

DEFAULT_POOL: tuple[GaussianRational, ...] = (
    ONE,
    MINUS_ONE,
    GaussianRational(2),
    GaussianRational(Fraction(1, 2)),
    IMAGINARY,
    -IMAGINARY,
)


@dataclass(frozen=True)
class VerificationReport:
    """Exact facts about a candidate reverser g of a matrix a.

    ``residuals`` lists, per failed matrix check, the first differing entry
    position (1-based), or None when the check failed without a comparable
    position (singular g).
    """

    reverses: bool
    involution: bool
    determinant: GaussianRational
    in_special: bool
    residuals: tuple[tuple[str, tuple[int, int] | None], ...]

    def all_good(self) -> bool:
        return self.reverses and self.involution and self.in_special

    def to_json_dict(self) -> dict:
        return {
            "reverses": self.reverses,
            "involution": self.involution,
            "determinant": str(self.determinant),
            "in_special": self.in_special,
            "residuals": [
                {"check": name, "position": list(pos) if pos else None}
                for name, pos in self.residuals
            ],
        }


def check_witness(a: ExactMatrix, g: ExactMatrix) -> VerificationReport:
    """Compute g a g^{-1} == a^{-1}, g^2 == I and det g exactly."""
    if not a.is_square() or not g.is_square() or a.rows != g.rows:
        raise ValueError("dimension mismatch between matrix and candidate reverser")
    a_inv = a.inverse()
    residuals: list[tuple[str, tuple[int, int] | None]] = []
    try:
        g_inv = g.inverse()
    except SingularMatrixError:
        reverses = False
        residuals.append(("reverses", None))
    else:
        pos = ((g * a) * g_inv).first_difference(a_inv)
        reverses = pos is None
        if pos is not None:
            residuals.append(("reverses", (pos[0] + 1, pos[1] + 1)))
    pos = (g * g).first_difference(ExactMatrix.identity(g.rows))
    involution = pos is None
    if pos is not None:
        residuals.append(("involution", (pos[0] + 1, pos[1] + 1)))
    det = g.det()
    return VerificationReport(reverses, involution, det, det == ONE, tuple(residuals))


def iter_partitions(n: int, max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    """All partitions of n with parts bounded by max_part, largest part first."""
    if n == 0:
        yield ()
        return
    cap = n if max_part is None else min(n, max_part)
    for first in range(cap, 0, -1):
        for rest in iter_partitions(n - first, first):
            yield (first,) + rest


class SpecGenerator:
    """Stream of Jordan specs over an eigenvalue pool with total size <= max_n.

    Exhaustive mode enumerates every multiset of (eigenvalue, size) pairs
    exactly once; random mode draws ``count`` specs deterministically from
    ``seed``.
    """

    def __init__(
        self,
        max_n: int,
        pool: Sequence,
        mode: str = "exhaustive",
        seed: int = 0,
        count: int = 0,
        max_block_size: int | None = None,
    ):
        self.max_n = int(max_n)
        self.pool = tuple(
            v if isinstance(v, GaussianRational) else GaussianRational(v) for v in pool
        )
        if mode not in ("exhaustive", "random"):
            raise ValueError(f"unknown mode {mode!r}")
        self.mode = mode
        self.seed = seed
        self.count = count
        self.max_block_size = max_block_size

    def specs(self) -> Iterator[JordanSpec]:
        if self.mode == "exhaustive":
            yield from self._exhaustive()
        else:
            yield from self._random()

    def _exhaustive(self) -> Iterator[JordanSpec]:
        limit = self.max_n if self.max_block_size is None else min(self.max_n, self.max_block_size)
        items = [(eig, size) for eig in self.pool for size in range(1, limit + 1)]

        def rec(start: int, budget: int, acc: list) -> Iterator[JordanSpec]:
            for idx in range(start, len(items)):
                size = items[idx][1]
                if size <= budget:
                    acc.append(items[idx])
                    yield JordanSpec(acc)
                    yield from rec(idx, budget - size, acc)
                    acc.pop()

        yield from rec(0, self.max_n, [])

    def _random(self) -> Iterator[JordanSpec]:
        rng = random.Random(self.seed)
        for _ in range(self.count):
            n = rng.randint(1, self.max_n)
            blocks = []
            remaining = n
            while remaining:
                cap = remaining if self.max_block_size is None else min(remaining, self.max_block_size)
                size = rng.randint(1, cap)
                blocks.append((rng.choice(self.pool), size))
                remaining -= size
            yield JordanSpec(blocks)


_PAIR_SCALES = (
    (ONE, ONE),
    (MINUS_ONE, MINUS_ONE),
    (IMAGINARY, -IMAGINARY),
    (-IMAGINARY, IMAGINARY),
)


def iter_involutive_reversers(
    spec: JordanSpec, pairing: reversal.ReversibilityReport
) -> Iterator[ExactMatrix]:
    """Every blockwise involutive reverser the harness knows how to build:
    all +-1 sign patterns on singleton blocks, and all pair scalings with
    x1 * y1 == 1 drawn from units {1, -1, i, -i}."""
    singleton_choices = itertools.product((ONE, MINUS_ONE), repeat=len(pairing.singletons))
    for singleton_combo in singleton_choices:
        singleton_scale = dict(zip(pairing.singletons, singleton_combo))
        for pair_combo in itertools.product(_PAIR_SCALES, repeat=len(pairing.pairs)):
            pair_scale = dict(zip(pairing.pairs, pair_combo))
            yield reversal.assemble_block_reverser(spec, pairing, singleton_scale, pair_scale)


def _new_summary(name: str) -> dict:
    return {"name": name, "cases": 0, "failures": []}


def _fail(summary: dict, **record) -> None:
    summary["failures"].append(record)


def classification_sweep(gen: SpecGenerator) -> dict:
    """For every generated spec: a strongly reversible verdict must come with
    a verified involutive SL witness, and a reversible-only verdict must come
    with a Forced(-1) determinant prediction that every harness-constructible
    involutive reverser obeys exactly."""
    summary = _new_summary("classification_sweep")
    summary.update(
        not_reversible=0,
        strongly_reversible=0,
        reversible_only=0,
        witnesses_verified=0,
        involutive_reversers_checked=0,
    )
    for spec in gen.specs():
        summary["cases"] += 1
        try:
            report = reversal.classify(spec)
            if not report.reversible:
                summary["not_reversible"] += 1
                continue
            if report.strongly_reversible:
                summary["strongly_reversible"] += 1
                bundle = reversal.involutive_witness(spec)
                vr = check_witness(bundle.a, bundle.g)
                if not vr.all_good():
                    _fail(
                        summary,
                        spec=spec.to_json_dict(),
                        problem="witness failed re-verification",
                        report=vr.to_json_dict(),
                    )
                else:
                    summary["witnesses_verified"] += 1
            else:
                summary["reversible_only"] += 1
                prediction = reversal.involution_det_sign(spec)
                if prediction.free or prediction.sign != -1:
                    _fail(
                        summary,
                        spec=spec.to_json_dict(),
                        problem=f"expected Forced(-1), got {prediction}",
                    )
                    continue
                a = jordan_matrix(spec)
                for g in iter_involutive_reversers(spec, report.pairing):
                    summary["involutive_reversers_checked"] += 1
                    vr = check_witness(a, g)
                    if not (vr.reverses and vr.involution):
                        _fail(
                            summary,
                            spec=spec.to_json_dict(),
                            problem="harness reverser failed basic checks",
                            report=vr.to_json_dict(),
                        )
                        break
                    if vr.determinant != MINUS_ONE:
                        _fail(
                            summary,
                            spec=spec.to_json_dict(),
                            problem=f"involutive reverser with det {vr.determinant}",
                        )
                        break
        except Exception as exc:  # a crash is a failure, not an abort
            _fail(summary, spec=spec.to_json_dict(), problem=repr(exc))
    return summary


def _random_matrix(rows: int, cols: int, rng: random.Random, bound: int = 3) -> ExactMatrix:
    return ExactMatrix(
        [
            [GaussianRational(rng.randint(-bound, bound), rng.randint(-bound, bound)) for _ in range(cols)]
            for _ in range(rows)
        ]
    )


def _random_invertible(n: int, rng: random.Random, bound: int = 3) -> ExactMatrix:
    while True:
        candidate = _random_matrix(n, n, rng, bound)
        if candidate.det():
            return candidate


def _random_involution(n: int, rng: random.Random) -> ExactMatrix:
    basis = _random_invertible(n, rng)
    signs = ExactMatrix.diagonal([rng.choice((1, -1)) for _ in range(n)])
    return basis * signs * basis.inverse()


def _block_toeplitz(blocks: Sequence[ExactMatrix]) -> ExactMatrix:
    m = len(blocks)
    k = blocks[0].rows
    grid = [[ZERO] * (m * k) for _ in range(m * k)]
    for bi in range(m):
        for bj in range(bi, m):
            block = blocks[bj - bi]
            for i in range(k):
                row = grid[bi * k + i]
                for j in range(k):
                    row[bj * k + j] = block[i, j]
    return ExactMatrix(grid)


def homogeneous_det_check(k: int, m: int, trials: int, seed: int) -> dict:
    """Determinant law for k equal unipotent blocks of even size 2m.

    Reversers of the homogeneous Weyr form are block-Toeplitz centralizer
    elements times a fixed blocked reverser; an involution forces the
    top-left k x k block to square to I, which pins the determinant to
    (-1)**(m*k).  Samples draw that block as a random exact involution and
    must reproduce the pinned value.
    """
    summary = _new_summary(f"homogeneous_det_check(k={k},m={m})")
    structure = (k,) * (2 * m)
    weyr = homogeneous_weyr(ONE, k, 2 * m)
    weyr_inv = weyr.inverse()
    base = reversal.blocked_jordan_reverser(ONE, structure)
    expected = GaussianRational(1 if (m * k) % 2 == 0 else -1)
    rng = random.Random(seed)
    for _ in range(trials):
        summary["cases"] += 1
        top_left = _random_involution(k, rng)
        blocks = [top_left] + [_random_matrix(k, k, rng) for _ in range(2 * m - 1)]
        sample = _block_toeplitz(blocks) * base
        if sample * weyr != weyr_inv * sample:
            _fail(summary, k=k, m=m, problem="sample does not reverse the Weyr form")
            continue
        det = sample.det()
        if det != expected:
            _fail(summary, k=k, m=m, problem=f"det {det}, expected {expected}")
    return summary


def semisimple_strong_verdict(spec: JordanSpec) -> bool | None:
    """Strong reversibility of a semisimple spec, decided by the dedicated
    diagonal argument: None when the spec is not semisimple or not
    reversible; otherwise, strongly reversible iff +-1 occurs as an
    eigenvalue or n is not 2 mod 4."""
    if any(size != 1 for _, size in spec.blocks):
        return None
    counts = Counter(eig for eig, _ in spec.blocks)
    for eig, count in counts.items():
        if eig == ONE or eig == MINUS_ONE:
            continue
        if count != counts.get(eig.inverse(), 0):
            return None
    if ONE in counts or MINUS_ONE in counts:
        return True
    return spec.n % 4 != 2


def unipotent_strong_verdict(spec: JordanSpec) -> bool | None:
    """Strong reversibility when every eigenvalue is 1: some odd block size,
    or the total multiplicity of sizes 2 mod 4 is even."""
    if any(eig != ONE for eig, _ in spec.blocks):
        return None
    sets = parity_sets(Partition(size for _, size in spec.blocks))
    return bool(sets.odd_sizes) or sets.singly_even_weight % 2 == 0


def negative_one_strong_verdict(spec: JordanSpec) -> bool | None:
    """Same criterion as the unipotent case, for eigenvalue -1 throughout."""
    if any(eig != MINUS_ONE for eig, _ in spec.blocks):
        return None
    sets = parity_sets(Partition(size for _, size in spec.blocks))
    return bool(sets.odd_sizes) or sets.singly_even_weight % 2 == 0


def single_pair_strong_verdict(spec: JordanSpec) -> bool | None:
    """Strong reversibility for eigenvalues {lam, 1/lam} only, lam != +-1:
    defined (and reversible) when both have the same block structure, and
    then strongly reversible iff the multiplicity of lam is even."""
    eigs = spec.eigenvalues()
    if len(eigs) != 2:
        return None
    first, second = eigs
    if first == ONE or first == MINUS_ONE or second != first.inverse():
        return None
    sizes_first = sorted(size for eig, size in spec.blocks if eig == first)
    sizes_second = sorted(size for eig, size in spec.blocks if eig == second)
    if sizes_first != sizes_second:
        return None
    return sum(sizes_first) % 2 == 0


def semisimple_cross_check(gen: SpecGenerator) -> dict:
    """Diagonal-case verdict must equal the general classifier on every
    generated semisimple spec."""
    summary = _new_summary("semisimple_cross_check")
    for spec in gen.specs():
        if any(size != 1 for _, size in spec.blocks):
            continue
        summary["cases"] += 1
        verdict = semisimple_strong_verdict(spec)
        report = reversal.classify(spec)
        if verdict is None:
            if report.reversible:
                _fail(summary, spec=spec.to_json_dict(), problem="reversibility disagreement")
            continue
        if not report.reversible:
            _fail(summary, spec=spec.to_json_dict(), problem="reversibility disagreement")
        elif verdict != report.strongly_reversible:
            _fail(
                summary,
                spec=spec.to_json_dict(),
                problem=f"semisimple verdict {verdict} vs classifier {report.strongly_reversible}",
            )
    return summary


def cross_path_check(max_n: int = 10, pair_eigenvalues: Sequence | None = None) -> dict:
    """Classifier verdicts must match all four special-case arguments:
    semisimple specs, unipotent specs, eigenvalue -1 specs, and single
    lam/1-over-lam pairs, for every applicable spec of size <= max_n."""
    summary = _new_summary("cross_path_check")
    if pair_eigenvalues is None:
        pair_eigenvalues = (GaussianRational(2), IMAGINARY)

    def compare(spec: JordanSpec, verdict: bool | None, label: str) -> None:
        summary["cases"] += 1
        report = reversal.classify(spec)
        if verdict is None:
            if report.reversible:
                _fail(summary, spec=spec.to_json_dict(), path=label, problem="reversibility disagreement")
            return
        if not report.reversible:
            _fail(summary, spec=spec.to_json_dict(), path=label, problem="reversibility disagreement")
        elif verdict != report.strongly_reversible:
            _fail(
                summary,
                spec=spec.to_json_dict(),
                path=label,
                problem=f"{label} verdict {verdict} vs classifier {report.strongly_reversible}",
            )

    semisimple_gen = SpecGenerator(max_n, DEFAULT_POOL, max_block_size=1)
    for spec in semisimple_gen.specs():
        compare(spec, semisimple_strong_verdict(spec), "semisimple")
    for n in range(1, max_n + 1):
        for parts in iter_partitions(n):
            spec_plus = JordanSpec((ONE, d) for d in parts)
            compare(spec_plus, unipotent_strong_verdict(spec_plus), "unipotent")
            spec_minus = JordanSpec((MINUS_ONE, d) for d in parts)
            compare(spec_minus, negative_one_strong_verdict(spec_minus), "eigenvalue -1")
    for lam in pair_eigenvalues:
        lam = lam if isinstance(lam, GaussianRational) else GaussianRational(lam)
        for half in range(1, max_n // 2 + 1):
            for parts in iter_partitions(half):
                blocks = [(lam, d) for d in parts] + [(lam.inverse(), d) for d in parts]
                spec = JordanSpec(blocks)
                compare(spec, single_pair_strong_verdict(spec), "single pair")
    return summary


def suite_scalar_laws(seed: int = 0, trials: int = 1000) -> dict:
    """Field axioms and power additivity on random Gaussian rationals."""
    summary = _new_summary("scalar_laws")
    rng = random.Random(seed)

    def draw() -> GaussianRational:
        return GaussianRational(
            Fraction(rng.randint(-9, 9), rng.randint(1, 9)),
            Fraction(rng.randint(-9, 9), rng.randint(1, 9)),
        )

    for _ in range(trials):
        summary["cases"] += 1
        a, b, c = draw(), draw(), draw()
        ok = (
            (a + b) + c == a + (b + c)
            and (a * b) * c == a * (b * c)
            and a + b == b + a
            and a * b == b * a
            and a * (b + c) == a * b + a * c
        )
        if not ok:
            _fail(summary, triple=[str(a), str(b), str(c)], problem="field law violated")
    for _ in range(100):
        summary["cases"] += 1
        a = draw()
        if not a:
            a = ONE
        mm, nn = rng.randint(-20, 20), rng.randint(-20, 20)
        if a ** (mm + nn) != (a**mm) * (a**nn):
            _fail(summary, value=str(a), exponents=[mm, nn], problem="power law violated")
    return summary


def suite_matrix_laws(seed: int = 0, inverse_trials: int = 200, max_size: int = 8) -> dict:
    """Inverse identity, determinant multiplicativity, permutation signs."""
    summary = _new_summary("matrix_laws")
    rng = random.Random(seed)
    for _ in range(inverse_trials):
        summary["cases"] += 1
        n = rng.randint(1, max_size)
        a = _random_invertible(n, rng)
        if not (a * a.inverse()).is_identity():
            _fail(summary, problem=f"inverse law violated at size {n}")
    for _ in range(50):
        summary["cases"] += 1
        n = rng.randint(1, 5)
        a = _random_matrix(n, n, rng)
        b = _random_matrix(n, n, rng)
        if (a * b).det() != a.det() * b.det():
            _fail(summary, problem=f"det multiplicativity violated at size {n}")
    for _ in range(50):
        summary["cases"] += 1
        n = rng.randint(1, 8)
        images = list(range(1, n + 1))
        rng.shuffle(images)
        perm = PermutationMap(images)
        if perm.matrix().det() != GaussianRational(perm.sign()):
            _fail(summary, problem=f"permutation sign mismatch for {images}")
    return summary


def suite_partition_laws(seed: int = 0, trials: int = 500) -> dict:
    """Conjugation is an involution and both conjugation code paths agree."""
    summary = _new_summary("partition_laws")
    rng = random.Random(seed)
    for _ in range(trials):
        summary["cases"] += 1
        n = rng.randint(1, 40)
        parts = []
        remaining = n
        while remaining:
            part = rng.randint(1, remaining)
            parts.append(part)
            remaining -= part
        p = Partition(parts)
        conj = p.conjugate()
        ok = (
            conj.total == p.total
            and conj.conjugate() == p
            and p.conjugate_from_multiplicities() == conj
        )
        if not ok:
            _fail(summary, partition=list(p.parts), problem="conjugation law violated")
        shuffled = list(p.parts)
        rng.shuffle(shuffled)
        if parity_sets(Partition(shuffled)) != parity_sets(p):
            _fail(summary, partition=list(p.parts), problem="parity data not order-invariant")
    return summary


def suite_canonical_laws(seed: int = 0, trials: int = 200, pool: Sequence | None = None) -> dict:
    """Weyr duality on random specs and centralizer samples on random structures."""
    summary = _new_summary("canonical_laws")
    pool = DEFAULT_POOL if pool is None else pool
    gen = SpecGenerator(10, pool, mode="random", seed=seed, count=trials)
    for spec in gen.specs():
        summary["cases"] += 1
        try:
            wf = weyr_form(spec)  # verifies the conjugation internally
        except RuntimeError as exc:
            _fail(summary, spec=spec.to_json_dict(), problem=repr(exc))
            continue
        for (eig, jordan_partition), w in zip(spec.structures(), wf.structures):
            if jordan_partition.conjugate().parts != w.sizes:
                _fail(summary, spec=spec.to_json_dict(), problem="structure is not the conjugate partition")
    rng = random.Random(seed + 1)
    for _ in range(trials):
        summary["cases"] += 1
        n = rng.randint(1, 8)
        parts = []
        remaining = n
        while remaining:
            part = rng.randint(1, remaining)
            parts.append(part)
            remaining -= part
        structure = WeyrStructure(rng.choice(list(pool)), Partition(parts).parts)
        sample = sample_centralizer(structure, rng.randrange(2**63))
        weyr = basic_weyr_matrix(structure)
        if sample * weyr != weyr * sample:
            _fail(summary, structure=list(structure.sizes), problem="sample does not commute")
        elif not matches_centralizer_pattern(structure, sample):
            _fail(summary, structure=list(structure.sizes), problem="sample fails pattern check")
        elif not sample.det():
            _fail(summary, structure=list(structure.sizes), problem="sample is singular")
    return summary


def _random_nonzero_scalar(rng: random.Random) -> GaussianRational:
    while True:
        value = GaussianRational(
            Fraction(rng.randint(-5, 5), rng.randint(1, 4)),
            Fraction(rng.randint(-5, 5), rng.randint(1, 4)),
        )
        if value:
            return value


def suite_reverser_laws(seed: int = 0, max_size: int = 12, draws: int = 20) -> dict:
    """Closed form vs recurrence, the inverse law, involutivity at +-1, and
    the reversal identity for Toeplitz-scaled reversers."""
    summary = _new_summary("reverser_laws")
    rng = random.Random(seed)
    for n in range(1, max_size + 1):
        for _ in range(draws):
            summary["cases"] += 1
            lam = _random_nonzero_scalar(rng)
            closed = reversal.jordan_reverser(lam, n)
            if closed != reversal.jordan_reverser_recurrence(lam, n):
                _fail(summary, n=n, lam=str(lam), problem="closed form != recurrence")
            elif not reversal.inverse_law_holds(lam, n):
                _fail(summary, n=n, lam=str(lam), problem="inverse law violated")
        summary["cases"] += 1
        for mu in (ONE, MINUS_ONE):
            r = reversal.jordan_reverser(mu, n)
            if not (r * r).is_identity():
                _fail(summary, n=n, problem=f"reverser at {mu} is not an involution")
    for n in range(1, 11):
        for _ in range(draws):
            summary["cases"] += 1
            lam = _random_nonzero_scalar(rng)
            values = [_random_nonzero_scalar(rng)] + [
                GaussianRational(rng.randint(-3, 3), rng.randint(-3, 3)) for _ in range(n - 1)
            ]
            g = reversal.jordan_reverser_general(lam, values)
            lhs = g * jordan_block(lam.inverse(), n)
            rhs = jordan_block(lam, n).inverse() * g
            if lhs != rhs:
                _fail(summary, n=n, lam=str(lam), problem="reversal identity violated")
    return summary


def run_selftest(max_n: int = 6, seed: int = 0, pool: Sequence | None = None) -> dict:
    """Run every invariant suite plus the classification sweeps; the result
    has total_failures == 0 exactly when everything holds."""
    pool = DEFAULT_POOL if pool is None else tuple(
        v if isinstance(v, GaussianRational) else GaussianRational(v) for v in pool
    )
    suites = [
        suite_scalar_laws(seed),
        suite_matrix_laws(seed + 1),
        suite_partition_laws(seed + 2),
        suite_canonical_laws(seed + 3, pool=pool),
        suite_reverser_laws(seed + 4),
        classification_sweep(SpecGenerator(max_n, pool)),
        semisimple_cross_check(SpecGenerator(max_n, pool, max_block_size=1)),
        cross_path_check(max_n),
    ]
    budget = max(1, max_n // 2)
    for k in range(1, budget + 1):
        for m in range(1, budget // k + 1):
            suites.append(homogeneous_det_check(k, m, trials=8, seed=seed + 64 * k + m))
    total = sum(len(s["failures"]) for s in suites)
    return {
        "max_n": max_n,
        "seed": seed,
        "pool": [str(v) for v in pool],
        "suites": suites,
        "total_failures": total,
    }
