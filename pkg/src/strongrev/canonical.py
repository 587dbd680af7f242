"""Jordan and Weyr canonical forms and the permutation relating them.

A conjugacy class of an invertible matrix is described by its Jordan data
(:class:`JordanSpec`).  Per eigenvalue, the Weyr structure is the conjugate
partition of the Jordan structure, and the two canonical matrices are
similar under an explicit basis permutation, which this module constructs
and verifies.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable

from .matrices import ExactMatrix, PermutationMap, direct_sum
from .partitions import Partition
from .scalars import GaussianRational, ONE, ZERO, parse

__all__ = [
    "JordanSpec",
    "WeyrStructure",
    "WeyrForm",
    "jordan_block",
    "jordan_matrix",
    "basic_weyr_matrix",
    "homogeneous_weyr",
    "weyr_form",
    "matches_centralizer_pattern",
    "sample_centralizer",
]

CENTRALIZER_COEFF_RANGE = 3
CENTRALIZER_SAMPLE_ATTEMPTS = 64


def _as_scalar(value) -> GaussianRational:
    if isinstance(value, GaussianRational):
        return value
    return GaussianRational(value)


class JordanSpec:
    """Multiset of (eigenvalue, block size) pairs naming a conjugacy class.

    Blocks are stored in a canonical order (eigenvalues by the fixed total
    order on Q(i), sizes descending within an eigenvalue) so equal
    conjugacy classes always produce equal specs.
    """

    __slots__ = ("blocks",)

    def __init__(self, blocks: Iterable[tuple]):
        normalized = []
        for eig, size in blocks:
            eig = _as_scalar(eig)
            size = int(size)
            if not eig:
                raise ValueError("eigenvalues must be nonzero (the matrix is invertible)")
            if size < 1:
                raise ValueError("block sizes must be positive")
            normalized.append((eig, size))
        if not normalized:
            raise ValueError("a spec needs at least one block")
        normalized.sort(key=lambda b: (b[0].sort_key, -b[1]))
        object.__setattr__(self, "blocks", tuple(normalized))

    def __setattr__(self, name, value):
        raise AttributeError("JordanSpec is immutable")

    @property
    def n(self) -> int:
        return sum(size for _, size in self.blocks)

    def __eq__(self, other):
        if not isinstance(other, JordanSpec):
            return NotImplemented
        return self.blocks == other.blocks

    def __hash__(self):
        return hash(self.blocks)

    def __repr__(self) -> str:
        inner = ", ".join(f"({eig}, {size})" for eig, size in self.blocks)
        return f"JordanSpec([{inner}])"

    def block_offsets(self) -> tuple[int, ...]:
        """Starting row of each block inside the Jordan matrix."""
        offs = []
        total = 0
        for _, size in self.blocks:
            offs.append(total)
            total += size
        return tuple(offs)

    def eigenvalues(self) -> tuple[GaussianRational, ...]:
        """Distinct eigenvalues in canonical order."""
        seen: list[GaussianRational] = []
        for eig, _ in self.blocks:
            if not seen or seen[-1] != eig:
                seen.append(eig)
        return tuple(seen)

    def structures(self) -> tuple[tuple[GaussianRational, Partition], ...]:
        """Per-eigenvalue Jordan structure, canonical eigenvalue order."""
        out: list[tuple[GaussianRational, list[int]]] = []
        for eig, size in self.blocks:
            if out and out[-1][0] == eig:
                out[-1][1].append(size)
            else:
                out.append((eig, [size]))
        return tuple((eig, Partition(sizes)) for eig, sizes in out)

    def multiplicity(self, eigenvalue) -> int:
        eigenvalue = _as_scalar(eigenvalue)
        return sum(size for eig, size in self.blocks if eig == eigenvalue)

    def to_json_dict(self) -> dict:
        return {
            "blocks": [
                {"eigenvalue": str(eig), "size": size} for eig, size in self.blocks
            ]
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "JordanSpec":
        blocks = data["blocks"]
        return cls((parse(b["eigenvalue"]), int(b["size"])) for b in blocks)


def jordan_block(eigenvalue, size: int) -> ExactMatrix:
    """J(lam, m): lam on the diagonal, 1 on the superdiagonal."""
    lam = _as_scalar(eigenvalue)
    grid = [[ZERO] * size for _ in range(size)]
    for i in range(size):
        grid[i][i] = lam
        if i + 1 < size:
            grid[i][i + 1] = ONE
    return ExactMatrix(grid)


def jordan_matrix(spec: JordanSpec) -> ExactMatrix:
    """Block-diagonal Jordan matrix in the spec's canonical block order."""
    return direct_sum([jordan_block(eig, size) for eig, size in spec.blocks])


@dataclass(frozen=True)
class WeyrStructure:
    """Eigenvalue plus the weakly decreasing block sizes of a basic Weyr matrix."""

    eigenvalue: GaussianRational
    sizes: tuple[int, ...]

    def __post_init__(self):
        sizes = tuple(int(s) for s in self.sizes)
        if not sizes or any(s < 1 for s in sizes):
            raise ValueError("sizes must be positive")
        if any(sizes[i] < sizes[i + 1] for i in range(len(sizes) - 1)):
            raise ValueError("sizes must be weakly decreasing")
        object.__setattr__(self, "sizes", sizes)
        object.__setattr__(self, "eigenvalue", _as_scalar(self.eigenvalue))

    @property
    def n(self) -> int:
        return sum(self.sizes)

    def offsets(self) -> tuple[int, ...]:
        offs = []
        total = 0
        for s in self.sizes:
            offs.append(total)
            total += s
        return tuple(offs)


def basic_weyr_matrix(w: WeyrStructure) -> ExactMatrix:
    """Scalar diagonal blocks lam*I, reduced-echelon identity superdiagonal
    blocks (an identity atop zero rows), zeros elsewhere."""
    n = w.n
    offs = w.offsets()
    lam = w.eigenvalue
    grid = [[ZERO] * n for _ in range(n)]
    for b, size in enumerate(w.sizes):
        for t in range(size):
            grid[offs[b] + t][offs[b] + t] = lam
        if b + 1 < len(w.sizes):
            # superdiagonal block is I_{n_b, n_{b+1}}: n_{b+1} <= n_b
            for t in range(w.sizes[b + 1]):
                grid[offs[b] + t][offs[b + 1] + t] = ONE
    return ExactMatrix(grid)


def homogeneous_weyr(eigenvalue, k: int, m: int) -> ExactMatrix:
    """Basic Weyr matrix with structure (k, ..., k), m repeats: an m x m block
    grid with lam*I_k on the diagonal and true I_k on the superdiagonal."""
    return basic_weyr_matrix(WeyrStructure(_as_scalar(eigenvalue), (k,) * m))


@dataclass(frozen=True)
class WeyrForm:
    """Weyr matrix of a spec, its per-eigenvalue structures, and the
    basis permutation carrying the Jordan matrix onto it."""

    matrix: ExactMatrix
    structures: tuple[WeyrStructure, ...]
    permutation: PermutationMap


def weyr_form(spec: JordanSpec) -> WeyrForm:
    """Weyr form of the spec's Jordan matrix.

    The permutation is built by filling each eigenvalue's Young diagram with
    basis indices: the Jordan basis walks cells row-major (one row per
    Jordan block, largest first), the Weyr basis walks the same cells
    column-major.  The result is verified by explicit conjugation before it
    is returned.
    """
    structures: list[WeyrStructure] = []
    weyr_blocks: list[ExactMatrix] = []
    n = spec.n
    images = [0] * n
    base = 0
    for eig, jordan_partition in spec.structures():
        conj = jordan_partition.conjugate()
        w = WeyrStructure(eig, conj.parts)
        structures.append(w)
        weyr_blocks.append(basic_weyr_matrix(w))
        col_counts = conj.parts
        col_prefix = [0]
        for c in col_counts:
            col_prefix.append(col_prefix[-1] + c)
        row_offset = 0
        for i, row_len in enumerate(jordan_partition.parts):
            for j in range(row_len):
                jordan_index = base + row_offset + j
                weyr_index = base + col_prefix[j] + i
                images[jordan_index] = weyr_index + 1
            row_offset += row_len
        base += jordan_partition.total
    matrix = direct_sum(weyr_blocks)
    perm = PermutationMap(images)
    if perm.conjugate(jordan_matrix(spec)) != matrix:
        raise RuntimeError(
            "internal error: duality permutation does not carry the Jordan "
            f"matrix onto the Weyr matrix for {spec!r}"
        )
    return WeyrForm(matrix, tuple(structures), perm)


def matches_centralizer_pattern(w: WeyrStructure, m: ExactMatrix) -> bool:
    """Whether m has the commutant shape of the basic Weyr matrix of w.

    The shape is block upper triangular with nested blocks: the top-left
    corner of block (i, j) repeats block (i+1, j+1), the rows below that
    corner are zero in the first columns, and everything to the right is
    free.  Degenerate rows/columns vanish when consecutive sizes agree.
    """
    n = w.n
    if m.rows != n or m.cols != n:
        raise ValueError("matrix size does not match the Weyr structure")
    sizes = w.sizes
    offs = w.offsets()
    r = len(sizes)
    # block lower triangle must vanish
    for bi in range(r):
        for bj in range(bi):
            for i in range(sizes[bi]):
                row = m.row(offs[bi] + i)
                for j in range(sizes[bj]):
                    if row[offs[bj] + j]:
                        return False
    # nested condition on blocks (i, j) with i <= j <= r-2
    for bi in range(r - 1):
        for bj in range(bi, r - 1):
            inner_rows = sizes[bi + 1]
            inner_cols = sizes[bj + 1]
            for i in range(inner_rows):
                for j in range(inner_cols):
                    if m[offs[bi] + i, offs[bj] + j] != m[offs[bi + 1] + i, offs[bj + 1] + j]:
                        return False
            for i in range(inner_rows, sizes[bi]):
                for j in range(inner_cols):
                    if m[offs[bi] + i, offs[bj] + j]:
                        return False
    return True


def _random_scalar(rng: random.Random) -> GaussianRational:
    bound = CENTRALIZER_COEFF_RANGE
    return GaussianRational(rng.randint(-bound, bound), rng.randint(-bound, bound))


def _random_pattern_matrix(w: WeyrStructure, rng: random.Random) -> ExactMatrix:
    sizes = w.sizes
    r = len(sizes)
    blocks: dict[tuple[int, int], list[list[GaussianRational]]] = {}
    for d in range(r):
        # seed the diagonal-offset-d chain at its bottom block, then grow upward
        i = r - 1 - d
        blocks[(i, i + d)] = [
            [_random_scalar(rng) for _ in range(sizes[i + d])] for _ in range(sizes[i])
        ]
        for i in range(r - 2 - d, -1, -1):
            j = i + d
            inner = blocks[(i + 1, j + 1)]
            block = [[_random_scalar(rng) for _ in range(sizes[j])] for _ in range(sizes[i])]
            for rr in range(sizes[i + 1]):
                for cc in range(sizes[j + 1]):
                    block[rr][cc] = inner[rr][cc]
            for rr in range(sizes[i + 1], sizes[i]):
                for cc in range(sizes[j + 1]):
                    block[rr][cc] = ZERO
            blocks[(i, j)] = block
    n = w.n
    offs = w.offsets()
    grid = [[ZERO] * n for _ in range(n)]
    for (bi, bj), block in blocks.items():
        for i, row in enumerate(block):
            target = grid[offs[bi] + i]
            for j, value in enumerate(row):
                target[offs[bj] + j] = value
    return ExactMatrix(grid)


def sample_centralizer(w: WeyrStructure, seed: int) -> ExactMatrix:
    """Random invertible matrix commuting exactly with basic_weyr_matrix(w).

    Free entries are small Gaussian rationals; singular draws are retried a
    bounded number of times, and the commutation is checked before return.
    """
    rng = random.Random(seed)
    weyr = basic_weyr_matrix(w)
    for _ in range(CENTRALIZER_SAMPLE_ATTEMPTS):
        candidate = _random_pattern_matrix(w, rng)
        if not candidate.det():
            continue
        if candidate * weyr != weyr * candidate:
            raise RuntimeError(
                "internal error: centralizer sample fails to commute for "
                f"structure {w.sizes}"
            )
        return candidate
    raise RuntimeError(
        f"could not draw an invertible centralizer element for structure {w.sizes}"
    )
