"""Exact combinatorics of rigid embeddings between 2m-cycle algebras.

A rigid embedding decomposes into proper multiplicity-one embeddings, one
inner-equivalence class per digraph automorphism.  The multiplicity
signature (r_1, .., r_{2m}) lists how often each class occurs and is a
complete conjugacy invariant.  Two derived invariants are computed here:

* the vertex-multiplicity matrix sum_j r_j P(theta_j), written in the fixed
  odd-then-even vertex ordering (block diagonal across the parity split),
* the homology multiplier r_1 - r_2 + r_3 - .. - r_{2m} (rotations minus
  reflections), i.e. the image of the signature under the sign character.

Everything in this module is exact integer arithmetic.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass

import numpy as np

from .cycle_core import (
    DihedralElement,
    check_half_length,
    dihedral_compose,
    enumerate_automorphisms,
    parity_order,
    parity_position,
)
from .errors import (
    EnumerationBoundError,
    HomologyRangeError,
    IncompatibleError,
    InvalidIndexError,
    K0NotRigidTypeError,
)

#: Default ceiling on exact joint-scale enumerations (total multiplicity).
DEFAULT_ENUMERATION_BOUND = 64


@dataclass(frozen=True)
class Signature:
    """Multiplicities (r_1, .., r_{2m}) indexed by the canonical automorphism labels.

    The zero signature is allowed as the additive identity of signature
    arithmetic; embedding-facing operations reject it.
    """

    m: int
    r: tuple

    def __post_init__(self):
        check_half_length(self.m, minimum=3)
        r = tuple(int(x) for x in self.r)
        if len(r) != 2 * self.m:
            raise InvalidIndexError(f"signature needs {2 * self.m} entries, got {len(r)}")
        if any(x < 0 for x in r):
            raise InvalidIndexError(f"signature entries must be nonnegative, got {r}")
        object.__setattr__(self, "r", r)

    @property
    def is_zero(self) -> bool:
        return all(x == 0 for x in self.r)

    @property
    def total(self) -> int:
        return sum(self.r)

    @classmethod
    def unit(cls, element: DihedralElement) -> "Signature":
        """The multiplicity-one signature of a single automorphism class."""
        r = [0] * (2 * element.m)
        r[element.index - 1] = 1
        return cls(element.m, tuple(r))

    @classmethod
    def zero(cls, m) -> "Signature":
        return cls(m, (0,) * (2 * m))


def _require_same_m(s1: Signature, s2: Signature):
    if s1.m != s2.m:
        raise IncompatibleError(f"signatures of different cycle lengths: m={s1.m} vs m={s2.m}")


def permutation_matrix(element: DihedralElement) -> np.ndarray:
    """Vertex permutation matrix of an automorphism in the odd-then-even ordering."""
    m = element.m
    mat = np.zeros((2 * m, 2 * m), dtype=np.int64)
    for v in range(1, 2 * m + 1):
        mat[parity_position(m, element.act(v)), parity_position(m, v)] = 1
    return mat


@functools.lru_cache(maxsize=None)
def _perm_stack(m):
    return np.stack([permutation_matrix(theta) for theta in enumerate_automorphisms(m)])


@functools.lru_cache(maxsize=None)
def _composition_index_table(m):
    autos = enumerate_automorphisms(m)
    return tuple(tuple(dihedral_compose(a, b).index - 1 for b in autos) for a in autos)


def k0_matrix(sig: Signature) -> np.ndarray:
    """The matrix sum_j r_j P(theta_j); block diagonal across the parity split."""
    return np.tensordot(np.asarray(sig.r, dtype=np.int64), _perm_stack(sig.m), axes=1)


def h1(sig: Signature) -> int:
    """Rotations minus reflections: r_1 - r_2 + r_3 - .. - r_{2m}."""
    return sum(x if i % 2 == 0 else -x for i, x in enumerate(sig.r))


def signature_compose(inner: Signature, outer: Signature) -> Signature:
    """Signature of outer . inner (inner applied first): group-ring convolution."""
    _require_same_m(inner, outer)
    table = _composition_index_table(inner.m)
    out = [0] * (2 * inner.m)
    for a, ra in enumerate(outer.r):
        if ra == 0:
            continue
        row = table[a]
        for b, rb in enumerate(inner.r):
            if rb:
                out[row[b]] += ra * rb
    return Signature(inner.m, tuple(out))


def conjugate_eq(s1: Signature, s2: Signature) -> bool:
    """Inner conjugacy of rigid embeddings is exactly equality of signatures."""
    _require_same_m(s1, s2)
    return s1.r == s2.r


def _check_k0_shape(mat: np.ndarray):
    mat = np.asarray(mat)
    if mat.ndim != 2 or mat.shape[0] != mat.shape[1] or mat.shape[0] % 2 or mat.shape[0] < 6:
        raise InvalidIndexError(f"expected a 2m x 2m matrix with m >= 3, got shape {mat.shape}")
    if np.any(mat < 0) or not np.issubdtype(mat.dtype, np.integer):
        if not np.issubdtype(mat.dtype, np.integer):
            raise InvalidIndexError("vertex-multiplicity matrix must be integer")
        raise InvalidIndexError("vertex-multiplicity matrix must be nonnegative")
    return mat.shape[0] // 2


def k0_is_rigid_type(mat) -> list:
    """All signatures with the given vertex-multiplicity matrix (empty if none).

    A matrix is of rigid type exactly when this fibre is nonempty.  The fibre
    is the one-parameter shift family (r_1 + k, r_2 - k, r_3 + k, ..),
    recovered here by propagating the pair constraints that columns of
    vertex 1 and vertex 2 impose, then verifying each candidate exactly.
    """
    mat = np.asarray(mat)
    m = _check_k0_shape(mat)
    autos = enumerate_automorphisms(m)

    # Constraints: for u in {1, 2} each image vertex w is hit by exactly one
    # rotation and one reflection; their multiplicities sum to mat[w, u].
    constraints = []
    for u in (1, 2):
        by_image = {}
        for j, theta in enumerate(autos):
            by_image.setdefault(theta.act(u), []).append(j)
        for w, pair in sorted(by_image.items()):
            if len(pair) != 2:
                raise AssertionError("each vertex image must pair one rotation with one reflection")
            value = int(mat[parity_position(m, w), parity_position(m, u)])
            constraints.append((pair[0], pair[1], value))

    # Propagate r_j = const_j + sign_j * t with t = r_1.
    const = {0: 0}
    sign = {0: 1}
    changed = True
    while changed:
        changed = False
        for j0, j1, value in constraints:
            for known, other in ((j0, j1), (j1, j0)):
                if known in const and other not in const:
                    const[other] = value - const[known]
                    sign[other] = -sign[known]
                    changed = True
    if len(const) != 2 * m:
        raise AssertionError("constraint graph on automorphism classes must be connected")
    for j0, j1, value in constraints:
        if sign[j0] == sign[j1] or const[j0] + const[j1] != value:
            return []

    lo = max(-const[j] for j in range(2 * m) if sign[j] > 0)
    hi = min(const[j] for j in range(2 * m) if sign[j] < 0)
    fibre = []
    for t in range(lo, hi + 1):
        r = tuple(const[j] + sign[j] * t for j in range(2 * m))
        sig = Signature(m, r)
        if np.array_equal(k0_matrix(sig), mat):
            fibre.append(sig)
    fibre.sort(key=lambda s: s.r)
    return fibre


def signature_from_k0h1(mat, h: int) -> Signature:
    """The unique signature with the given matrix and homology multiplier.

    Raises ``K0NotRigidTypeError`` when the matrix has empty fibre and
    ``HomologyRangeError`` when the matrix is realizable but h is not.
    """
    fibre = k0_is_rigid_type(mat)
    if not fibre:
        raise K0NotRigidTypeError("matrix is not a sum of automorphism permutation matrices")
    for sig in fibre:
        if h1(sig) == h:
            return sig
    values = sorted(h1(sig) for sig in fibre)
    raise HomologyRangeError(
        f"homology value {h} is outside the homology range {values} of this matrix"
    )


def homology_range(sig: Signature) -> tuple:
    """All homology multipliers over the fibre of the signature's matrix.

    The fibre is the shift family (r_1 + k, r_2 - k, ..) with k bounded by
    the smallest rotation and reflection entries, so the range is the
    arithmetic progression h1(sig) + 2m * k, an interval in the mod-2m
    congruence class of h1(sig).
    """
    rot_min = min(sig.r[0::2])
    refl_min = min(sig.r[1::2])
    base = h1(sig)
    return tuple(base + 2 * sig.m * k for k in range(-rot_min, refl_min + 1))


@dataclass(frozen=True)
class CycleAlgebraShape:
    """A 2m-cycle algebra given by its vertex multiplicities (vertex order 1..2m)."""

    m: int
    vertex_mults: tuple

    def __post_init__(self):
        check_half_length(self.m)
        mults = tuple(int(x) for x in self.vertex_mults)
        if len(mults) != 2 * self.m:
            raise InvalidIndexError(f"shape needs {2 * self.m} multiplicities, got {len(mults)}")
        if any(x < 1 for x in mults):
            raise InvalidIndexError(f"vertex multiplicities must be positive, got {mults}")
        object.__setattr__(self, "vertex_mults", mults)

    @classmethod
    def uniform(cls, m, mult) -> "CycleAlgebraShape":
        return cls(m, (mult,) * (2 * m))

    @property
    def dimension(self) -> int:
        return sum(self.vertex_mults)

    def mults_parity_order(self) -> tuple:
        return tuple(self.vertex_mults[v - 1] for v in parity_order(self.m))


@dataclass(frozen=True)
class JointScaleElement:
    """One element (class of the image of e11 + e22, homology value) of a joint scale.

    ``k0_part`` is indexed by vertex classes in the odd-then-even ordering.
    """

    k0_part: tuple
    h_part: int


def scale_element(sig: Signature) -> JointScaleElement:
    """The joint-scale element contributed by a rigid embedding with this signature."""
    mat = k0_matrix(sig)
    part = mat[:, 0] + mat[:, sig.m]
    return JointScaleElement(tuple(int(x) for x in part), h1(sig))


def compositions(total, parts):
    """All tuples of ``parts`` nonnegative integers with the given sum, in lex order."""
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


def _compositions_array(total, parts) -> np.ndarray:
    """Stars-and-bars enumeration as an array, rows in the same lex order."""
    if parts == 1:
        return np.array([[total]], dtype=np.int64)
    dividers = np.fromiter(
        itertools.chain.from_iterable(itertools.combinations(range(total + parts - 1), parts - 1)),
        dtype=np.int64,
    ).reshape(-1, parts - 1)
    first = dividers[:, :1]
    middle = np.diff(dividers, axis=1) - 1
    last = total + parts - 2 - dividers[:, -1:]
    return np.hstack([first, middle, last])


def row_sum_fits(sig: Signature, shape: CycleAlgebraShape) -> bool:
    """Capacity of the standard embedding: every row sum of the matrix fits.

    Row sums of a rigid-type matrix are all equal to the signature total, so
    this is total <= min multiplicity (with equality everywhere for unital).
    """
    return sig.total <= min(shape.vertex_mults)


def joint_scale_finite(shape: CycleAlgebraShape, unital_only=False,
                       max_total=DEFAULT_ENUMERATION_BOUND) -> list:
    """All joint-scale elements of embeddings of the basic algebra into ``shape``.

    Enumerates every nonzero signature satisfying the row-sum capacity
    condition (equality at every vertex when ``unital_only``), deduplicated
    in order of first appearance under lexicographic signature enumeration.
    Since all row sums equal the signature total, a unital embedding exists
    only when the shape is uniform.
    """
    check_half_length(shape.m, minimum=3)
    bound = min(shape.vertex_mults)
    if bound > max_total:
        raise EnumerationBoundError(
            f"enumeration up to total multiplicity {bound} exceeds the bound {max_total}; "
            "raise max_total explicitly to force it"
        )
    if unital_only:
        if len(set(shape.vertex_mults)) != 1:
            return []
        totals = [shape.vertex_mults[0]]
    else:
        totals = list(range(1, bound + 1))

    m = shape.m
    # Per-class contributions: the scale element depends linearly on the
    # signature through the image positions of vertices 1 and 2 and the sign
    # character (same map as scale_element, batched).
    stack = _perm_stack(m)
    part_map = (stack[:, :, 0] + stack[:, :, m]).astype(np.int64)
    signs = np.array([1 if j % 2 == 0 else -1 for j in range(2 * m)], dtype=np.int64)

    seen = set()
    out = []
    for total in totals:
        sigs = _compositions_array(total, 2 * m)
        parts = sigs @ part_map
        hs = sigs @ signs
        for row, h in zip(parts, hs):
            elem = JointScaleElement(tuple(int(x) for x in row), int(h))
            if elem not in seen:
                seen.add(elem)
                out.append(elem)
    return out


def unital_h1_values(shape: CycleAlgebraShape, max_total=DEFAULT_ENUMERATION_BOUND) -> set:
    """Homology values over all unital signatures into ``shape``, by enumeration."""
    return {e.h_part for e in joint_scale_finite(shape, unital_only=True, max_total=max_total)}


def unit_signatures(m) -> list:
    """The 2m multiplicity-one signatures in canonical label order."""
    return [Signature.unit(theta) for theta in enumerate_automorphisms(m)]


def signatures_with_entries_at_most(m, bound):
    """All signatures with every entry <= bound (includes the zero signature)."""
    for r in itertools.product(range(bound + 1), repeat=2 * m):
        yield Signature(m, r)


def k0h1_roundtrip_report(m, max_entry=2) -> dict:
    """Recover every signature with entries <= max_entry from its matrix and homology value.

    The pair (matrix, homology multiplier) determines the signature uniquely:
    the matrix pins the shift family and the homology value pins the shift.
    """
    count, failures = 0, []
    for sig in signatures_with_entries_at_most(m, max_entry):
        count += 1
        got = signature_from_k0h1(k0_matrix(sig), h1(sig))
        if got.r != sig.r:
            failures.append({"signature": list(sig.r), "got": list(got.r)})
    return {
        "check": "k0h1-roundtrip",
        "m": m,
        "max_entry": max_entry,
        "count": count,
        "failures": failures,
        "ok": not failures,
    }
