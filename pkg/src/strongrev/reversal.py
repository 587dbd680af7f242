"""Reversibility and strong reversibility in the special linear group.

A Jordan form A is *reversible* when some g conjugates it to its inverse,
and *strongly reversible* when such a g can be taken to be an involution
with determinant one.  This module classifies both properties from the
Jordan data alone and constructs explicit, exactly verified witnesses.

The workhorse is the upper triangular matrix R(lam, n) ("jordan_reverser")
satisfying

    R(lam, n) * J(1/lam, n) == J(lam, n)^{-1} * R(lam, n)
    R(lam, n)^{-1} == R(1/lam, n)

so R(mu, n) is an involutive reverser of J(mu, n) for mu in {1, -1}, and
the antidiagonal pairing of R(lam, n) with its inverse reverses
J(lam, n) + J(1/lam, n).  Scaling by upper triangular Toeplitz matrices
(the Jordan block commutant) sweeps out the whole reverser family.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, replace
from typing import Sequence

from .canonical import JordanSpec, jordan_matrix, sample_centralizer, weyr_form
from .matrices import ExactMatrix, direct_sum
from .partitions import Partition, binomial, parity_sets
from .scalars import GaussianRational, MINUS_ONE, ONE, ZERO
from .scalars import I as IMAGINARY

__all__ = [
    "NotReversibleError",
    "NotStronglyReversibleError",
    "ReversibilityReport",
    "StrongReversibilityReport",
    "DetSignPrediction",
    "WitnessBundle",
    "jordan_reverser",
    "jordan_reverser_recurrence",
    "inverse_law_holds",
    "upper_toeplitz",
    "jordan_reverser_general",
    "blocked_jordan_reverser",
    "involution_reverser",
    "pair_reverser",
    "pair_blocks",
    "classify",
    "involution_det_sign",
    "assemble_block_reverser",
    "involutive_witness",
    "sl_reverser_witness",
    "sample_reverser",
]


class NotReversibleError(ValueError):
    """The spec is not conjugate to its inverse at all."""


class NotStronglyReversibleError(ValueError):
    """The spec is reversible but admits no involutive reverser in SL."""

    def __init__(self, prediction: "DetSignPrediction"):
        super().__init__(
            "no involutive reverser with determinant 1 exists: every involutive "
            f"reverser of this form has determinant {prediction.sign}"
        )
        self.prediction = prediction


def _sign_value(k: int) -> GaussianRational:
    return MINUS_ONE if k % 2 else ONE


def _scalar(value) -> GaussianRational:
    return value if isinstance(value, GaussianRational) else GaussianRational(value)


def jordan_reverser(eigenvalue, n: int) -> ExactMatrix:
    """Closed form of R(lam, n).

    Row i (1-based) has diagonal (-1)^(n-i) lam^(-2(n-i)), interior entries
    (-1)^(n-i) C(n-i-1, j-i) lam^(-2n+i+j), and the last column is zero
    except for the final 1.
    """
    lam = _scalar(eigenvalue)
    if not lam:
        raise ValueError("eigenvalue must be nonzero")
    grid = [[ZERO] * n for _ in range(n)]
    grid[n - 1][n - 1] = ONE
    for i in range(n - 1):
        sign = _sign_value(n - 1 - i)
        grid[i][i] = sign * lam ** (-2 * (n - 1 - i))
        for j in range(i + 1, n - 1):
            coeff = binomial(n - i - 2, j - i)
            if coeff:
                grid[i][j] = sign * coeff * lam ** (-2 * n + i + j + 2)
    return ExactMatrix(grid)


def jordan_reverser_recurrence(eigenvalue, n: int) -> ExactMatrix:
    """R(lam, n) built from its defining recurrence instead of the closed form.

    The last column is e_n; every other entry follows
    x[i][j] = -lam^(-2) x[i+1][j+1] - lam^(-1) x[i+1][j], filled bottom-up.
    """
    lam = _scalar(eigenvalue)
    if not lam:
        raise ValueError("eigenvalue must be nonzero")
    inv = lam.inverse()
    inv2 = inv * inv
    grid = [[ZERO] * n for _ in range(n)]
    grid[n - 1][n - 1] = ONE
    for i in range(n - 2, -1, -1):
        for j in range(i, n - 1):
            below = grid[i + 1][j] if j > i else ZERO
            grid[i][j] = -(inv2 * grid[i + 1][j + 1]) - (inv * below)
    return ExactMatrix(grid)


def inverse_law_holds(eigenvalue, n: int) -> bool:
    """Whether R(lam, n) * R(1/lam, n) is exactly the identity."""
    lam = _scalar(eigenvalue)
    product = jordan_reverser(lam, n) * jordan_reverser(lam.inverse(), n)
    return product.is_identity()


def upper_toeplitz(values: Sequence) -> ExactMatrix:
    """Upper triangular Toeplitz matrix with first row ``values``."""
    vals = [v if isinstance(v, GaussianRational) else GaussianRational(v) for v in values]
    n = len(vals)
    return ExactMatrix(
        [[vals[j - i] if j >= i else ZERO for j in range(n)] for i in range(n)]
    )


def jordan_reverser_general(eigenvalue, values: Sequence) -> ExactMatrix:
    """R(lam, x, n) = Toeplitz(x) * R(lam, n), the general reverser of a
    Jordan block: its last column is x reversed and it satisfies the same
    reversal identity as R(lam, n)."""
    vals = [v if isinstance(v, GaussianRational) else GaussianRational(v) for v in values]
    if not vals or not vals[0]:
        raise ValueError("leading Toeplitz coefficient must be nonzero")
    return upper_toeplitz(vals) * jordan_reverser(eigenvalue, len(vals))


def blocked_jordan_reverser(eigenvalue, sizes: Sequence[int]) -> ExactMatrix:
    """R(lam, r) inflated to block entries: scalar coefficients multiply
    rectangular identities I_{sizes[i] x sizes[j]}.  Reverses the basic Weyr
    matrix with the given structure the way R(lam, r) reverses J(lam, r)."""
    sizes = tuple(int(s) for s in sizes)
    r = len(sizes)
    coeff = jordan_reverser(eigenvalue, r)
    n = sum(sizes)
    offs = []
    total = 0
    for s in sizes:
        offs.append(total)
        total += s
    grid = [[ZERO] * n for _ in range(n)]
    for i in range(r):
        for j in range(i, r):
            c = coeff[i, j]
            if not c:
                continue
            for t in range(min(sizes[i], sizes[j])):
                grid[offs[i] + t][offs[j] + t] = c
    return ExactMatrix(grid)


def involution_reverser(mu, n: int) -> ExactMatrix:
    """R(mu, n) for mu in {1, -1}: an involution reversing J(mu, n)."""
    mu = _scalar(mu)
    if mu != ONE and mu != MINUS_ONE:
        raise ValueError("involution_reverser needs eigenvalue +1 or -1")
    return jordan_reverser(mu, n)


def pair_reverser(eigenvalue, n: int) -> ExactMatrix:
    """Antidiagonal block involution reversing J(lam, n) + J(1/lam, n):
    R(lam, n) sits top right and its inverse bottom left.  Its determinant
    is (-1)^n."""
    lam = _scalar(eigenvalue)
    if lam == ONE or lam == MINUS_ONE or not lam:
        raise ValueError("pair_reverser needs an eigenvalue other than 0, +1, -1")
    top = jordan_reverser(lam, n)
    bottom = top.inverse()
    grid = [[ZERO] * (2 * n) for _ in range(2 * n)]
    for i in range(n):
        for j in range(n):
            grid[i][n + j] = top[i, j]
            grid[n + i][j] = bottom[i, j]
    return ExactMatrix(grid)


@dataclass(frozen=True)
class ReversibilityReport:
    """Outcome of matching Jordan blocks into reversing pairs.

    ``pairs`` and ``singletons`` hold indices into ``spec.blocks``; the spec
    is reversible exactly when they cover every block.
    """

    reversible: bool
    pairs: tuple[tuple[int, int], ...]
    singletons: tuple[int, ...]
    failure_witness: tuple[GaussianRational, int] | None


@dataclass(frozen=True)
class StrongReversibilityReport:
    """Full classification of a spec.

    ``parity_value`` is the singly-even multiplicity weight of the +1 and -1
    Jordan structures plus half the size of everything else; a reversible
    spec is strongly reversible iff some +-1 eigenvalue has an odd block or
    that value is even.
    """

    reversible: bool
    strongly_reversible: bool
    p: int
    q: int
    partition_plus: Partition
    partition_minus: Partition
    odd_block_present: bool
    parity_value: int
    parity_even: bool
    pairing: ReversibilityReport


@dataclass(frozen=True)
class DetSignPrediction:
    """Determinant constraint on involutive reversers of a reversible spec.

    ``free`` means both signs occur; otherwise every involutive reverser has
    determinant ``sign``.
    """

    free: bool
    sign: int | None

    def __str__(self) -> str:
        return "free" if self.free else f"forced {self.sign:+d}"


@dataclass(frozen=True)
class WitnessBundle:
    """A reverser g for the Jordan matrix a, with exactly verified flags."""

    a: ExactMatrix
    g: ExactMatrix
    reverses: bool
    is_involution: bool
    determinant: GaussianRational
    transcript: tuple[str, ...]


def pair_blocks(spec: JordanSpec) -> ReversibilityReport:
    """Greedy exact matching of (lam, r) blocks with (1/lam, r) blocks.

    Blocks with eigenvalue +-1 stand alone; everything else needs a partner
    of the same size at the inverse eigenvalue.  Ties among equal blocks are
    broken by spec order.
    """
    waiting: dict[tuple[GaussianRational, int], list[int]] = {}
    pairs: list[tuple[int, int]] = []
    singletons: list[int] = []
    for idx, (eig, size) in enumerate(spec.blocks):
        if eig == ONE or eig == MINUS_ONE:
            singletons.append(idx)
            continue
        partner_key = (eig.inverse(), size)
        queue = waiting.get(partner_key)
        if queue:
            pairs.append((queue.pop(0), idx))
        else:
            waiting.setdefault((eig, size), []).append(idx)
    leftover = [idx for queue in waiting.values() for idx in queue]
    if leftover:
        witness_idx = min(leftover)
        return ReversibilityReport(
            False, tuple(pairs), tuple(singletons), spec.blocks[witness_idx]
        )
    return ReversibilityReport(True, tuple(pairs), tuple(singletons), None)


def classify(spec: JordanSpec) -> StrongReversibilityReport:
    """Decide reversibility and strong reversibility of the spec in SL(n)."""
    pairing = pair_blocks(spec)
    plus_sizes = [size for eig, size in spec.blocks if eig == ONE]
    minus_sizes = [size for eig, size in spec.blocks if eig == MINUS_ONE]
    dp = Partition(plus_sizes)
    dq = Partition(minus_sizes)
    p = dp.total
    q = dq.total
    sets_p = parity_sets(dp)
    sets_q = parity_sets(dq)
    odd_present = bool(sets_p.odd_sizes or sets_q.odd_sizes)
    rest = spec.n - p - q
    if pairing.reversible and rest % 2 != 0:
        raise RuntimeError("internal error: paired blocks cover an odd dimension")
    parity_value = sets_p.singly_even_weight + sets_q.singly_even_weight + rest // 2
    parity_even = parity_value % 2 == 0
    strongly = pairing.reversible and (odd_present or parity_even)
    return StrongReversibilityReport(
        reversible=pairing.reversible,
        strongly_reversible=strongly,
        p=p,
        q=q,
        partition_plus=dp,
        partition_minus=dq,
        odd_block_present=odd_present,
        parity_value=parity_value,
        parity_even=parity_even,
        pairing=pairing,
    )


def involution_det_sign(spec: JordanSpec) -> DetSignPrediction:
    """Predict the determinant of involutive reversers of the Jordan matrix.

    With an odd block at eigenvalue +-1 both signs occur; otherwise the
    determinant is pinned to (-1)**parity_value.
    """
    report = classify(spec)
    if not report.reversible:
        raise NotReversibleError(f"spec is not reversible: {spec!r}")
    if report.odd_block_present:
        return DetSignPrediction(free=True, sign=None)
    return DetSignPrediction(free=False, sign=1 if report.parity_even else -1)


def assemble_block_reverser(
    spec: JordanSpec,
    pairing: ReversibilityReport,
    singleton_scale: dict,
    pair_scale: dict,
) -> ExactMatrix:
    """Blockwise reverser of jordan_matrix(spec) from per-block scalings.

    Each singleton index idx contributes singleton_scale[idx] * R(mu, d) on
    its diagonal block; each pair (i, j) contributes x1 * R(lam, r) in the
    (i, j) block position and y1 * R(1/lam, r) in (j, i), where
    (x1, y1) = pair_scale[(i, j)].  The result is an involution exactly when
    every singleton scale squares to 1 and every pair has x1 * y1 == 1.
    """
    n = spec.n
    offs = spec.block_offsets()
    grid = [[ZERO] * n for _ in range(n)]

    def place(block: ExactMatrix, row0: int, col0: int) -> None:
        for i in range(block.rows):
            target = grid[row0 + i]
            brow = block.row(i)
            for j in range(block.cols):
                if brow[j]:
                    target[col0 + j] = brow[j]

    for idx in pairing.singletons:
        eig, size = spec.blocks[idx]
        place(singleton_scale[idx] * jordan_reverser(eig, size), offs[idx], offs[idx])
    for i, j in pairing.pairs:
        lam, size = spec.blocks[i]
        x1, y1 = pair_scale[(i, j)]
        place(x1 * jordan_reverser(lam, size), offs[i], offs[j])
        place(y1 * jordan_reverser(lam.inverse(), size), offs[j], offs[i])
    return ExactMatrix(grid)


def _verified_bundle(
    spec: JordanSpec, g: ExactMatrix, transcript: list[str], require_involution: bool
) -> WitnessBundle:
    a = jordan_matrix(spec)
    det = g.det()
    if not det:
        raise RuntimeError("internal error: constructed reverser is singular")
    reverses = g * a == a.inverse() * g
    is_involution = (g * g).is_identity()
    if not reverses or det != ONE or (require_involution and not is_involution):
        raise RuntimeError(
            "internal error: constructed witness failed verification "
            f"(reverses={reverses}, involution={is_involution}, det={det}); "
            "transcript: " + "; ".join(transcript)
        )
    return WitnessBundle(a, g, reverses, is_involution, det, tuple(transcript))


def involutive_witness(spec: JordanSpec) -> WitnessBundle:
    """Involution g in SL with g * A * g == A^{-1} for A = jordan_matrix(spec).

    Even +-1 blocks and block pairs have forced determinant signs; odd +-1
    blocks take the sign x1 = +-(-1)^(d(d-1)/2), which leaves their own
    contribution selectable.  All blocks default to contribution +1; if the
    forced product is -1 one odd block is flipped, and the classifier
    guarantees such a block exists whenever the spec is strongly reversible.
    """
    report = classify(spec)
    if not report.reversible:
        raise NotReversibleError(f"spec is not reversible: {spec!r}")
    if not report.strongly_reversible:
        raise NotStronglyReversibleError(involution_det_sign(spec))
    pairing = report.pairing
    transcript: list[str] = []
    singleton_scale: dict[int, GaussianRational] = {}
    odd_indices: list[int] = []
    forced = 1
    for idx in pairing.singletons:
        eig, size = spec.blocks[idx]
        if size % 2 == 0:
            singleton_scale[idx] = ONE
            contribution = -1 if size % 4 == 2 else 1
            forced *= contribution
            transcript.append(
                f"block {idx}: J({eig},{size}) even, scale 1, det {contribution:+d}"
            )
        else:
            base = _sign_value(size * (size - 1) // 2)
            singleton_scale[idx] = base
            odd_indices.append(idx)
            transcript.append(
                f"block {idx}: J({eig},{size}) odd, scale {base}, det +1"
            )
    pair_scale: dict[tuple[int, int], tuple[GaussianRational, GaussianRational]] = {}
    for i, j in pairing.pairs:
        lam, size = spec.blocks[i]
        pair_scale[(i, j)] = (ONE, ONE)
        contribution = -1 if size % 2 else 1
        forced *= contribution
        transcript.append(
            f"pair ({i},{j}): J({lam},{size}) with J({lam.inverse()},{size}), "
            f"det {contribution:+d}"
        )
    if forced == -1:
        if not odd_indices:
            raise RuntimeError(
                "internal error: forced sign -1 with no odd block to flip; "
                "classifier and constructor disagree"
            )
        flip = odd_indices[0]
        singleton_scale[flip] = -singleton_scale[flip]
        transcript.append(f"block {flip}: flipped scale to absorb forced sign -1")
    g = assemble_block_reverser(spec, pairing, singleton_scale, pair_scale)
    return _verified_bundle(spec, g, transcript, require_involution=True)


def sl_reverser_witness(spec: JordanSpec) -> WitnessBundle:
    """Reverser g in SL (not necessarily an involution) for any reversible spec.

    Per-block scalar scalings force every block's determinant contribution
    to +1: odd +-1 blocks as in involutive_witness, +-1 blocks of size
    2 mod 4 scale by -i (so g squares to -1 on that block), and odd-size
    pairs take y1 = -1.
    """
    report = classify(spec)
    if not report.reversible:
        raise NotReversibleError(f"spec is not reversible: {spec!r}")
    if report.strongly_reversible:
        bundle = involutive_witness(spec)
        return replace(
            bundle,
            transcript=bundle.transcript + ("strongly reversible: involutive witness reused",),
        )
    pairing = report.pairing
    transcript: list[str] = []
    singleton_scale: dict[int, GaussianRational] = {}
    for idx in pairing.singletons:
        eig, size = spec.blocks[idx]
        if size % 2 == 1:
            scale = _sign_value(size * (size - 1) // 2)
        elif size % 4 == 0:
            scale = ONE
        else:
            scale = -IMAGINARY
        singleton_scale[idx] = scale
        transcript.append(f"block {idx}: J({eig},{size}) scale {scale}, det +1")
    pair_scale: dict[tuple[int, int], tuple[GaussianRational, GaussianRational]] = {}
    for i, j in pairing.pairs:
        lam, size = spec.blocks[i]
        scales = (ONE, ONE) if size % 2 == 0 else (ONE, MINUS_ONE)
        pair_scale[(i, j)] = scales
        transcript.append(
            f"pair ({i},{j}): J({lam},{size}) scales ({scales[0]}, {scales[1]}), det +1"
        )
    g = assemble_block_reverser(spec, pairing, singleton_scale, pair_scale)
    return _verified_bundle(spec, g, transcript, require_involution=False)


def sample_reverser(spec: JordanSpec, seed: int) -> ExactMatrix:
    """Random reverser of jordan_matrix(spec), exact by construction.

    A random element of the Weyr centralizer multiplies a fixed Weyr-level
    reverser (the reverser set is a right coset of the centralizer); the
    duality permutation pulls the product back to the Jordan basis.
    """
    pairing = pair_blocks(spec)
    if not pairing.reversible:
        raise NotReversibleError(f"spec is not reversible: {spec!r}")
    wf = weyr_form(spec)
    structures = wf.structures
    offsets = []
    total = 0
    for w in structures:
        offsets.append(total)
        total += w.n
    position = {w.eigenvalue: k for k, w in enumerate(structures)}
    n = spec.n
    grid = [[ZERO] * n for _ in range(n)]

    def place(block: ExactMatrix, row0: int, col0: int) -> None:
        for i in range(block.rows):
            target = grid[row0 + i]
            brow = block.row(i)
            for j in range(block.cols):
                if brow[j]:
                    target[col0 + j] = brow[j]

    done: set[int] = set()
    for k, w in enumerate(structures):
        if k in done:
            continue
        eig = w.eigenvalue
        if eig == ONE or eig == MINUS_ONE:
            place(blocked_jordan_reverser(eig, w.sizes), offsets[k], offsets[k])
            done.add(k)
        else:
            k2 = position[eig.inverse()]
            place(blocked_jordan_reverser(eig, w.sizes), offsets[k], offsets[k2])
            place(blocked_jordan_reverser(eig.inverse(), w.sizes), offsets[k2], offsets[k])
            done.add(k)
            done.add(k2)
    base_reverser = ExactMatrix(grid)
    rng = random.Random(seed)
    centralizer = direct_sum(
        [sample_centralizer(w, rng.randrange(2**63)) for w in structures]
    )
    weyr_level = centralizer * base_reverser
    result = wf.permutation.inverse().conjugate(weyr_level)
    a = jordan_matrix(spec)
    if result * a != a.inverse() * result:
        raise RuntimeError(
            f"internal error: sampled matrix fails to reverse the spec {spec!r}"
        )
    return result
