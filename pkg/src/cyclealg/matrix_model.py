"""Concrete complex block-matrix realizations of 2m-cycle algebras.

A 2m-cycle algebra with vertex multiplicities (n_1, .., n_{2m}) sits inside
M_N (N = sum n_v) in block matrix staircase form: fully supported diagonal
blocks, plus for each odd (range) vertex i the blocks (i, i+1) and
(i, i-1), indices cyclic so row 1 also sees column 2m.

This module realizes rigid embeddings as explicit matrix-unit maps, recovers
multiplicity signatures from such realizations (the brute-force oracle for
the exact arithmetic in :mod:`cyclealg.signatures`), and carries the
numerical verification harnesses: entrywise partial-isometry checks,
perturbation sweeps, and the concrete locally-regular-but-not-regular
embedding of the 4-cycle algebra.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .cycle_core import (
    DihedralElement,
    check_half_length,
    element_from_images,
    enumerate_automorphisms,
    parity_position,
)
from .errors import (
    CapacityError,
    DecompositionError,
    IncompatibleError,
    InvalidIndexError,
    UnsupportedInputError,
)
from .signatures import (
    CycleAlgebraShape,
    Signature,
    signature_compose,
    signature_from_k0h1,
    signatures_with_entries_at_most,
    unit_signatures,
)

_PIECE_TOL = 1e-9


@dataclass(frozen=True)
class MatrixAlgebraModel:
    """A 2m-cycle algebra realized in M_N with the staircase support pattern."""

    m: int
    vertex_mults: tuple

    def __post_init__(self):
        shape = CycleAlgebraShape(self.m, self.vertex_mults)
        object.__setattr__(self, "vertex_mults", shape.vertex_mults)

    @property
    def dimension(self) -> int:
        return sum(self.vertex_mults)

    def offset(self, v) -> int:
        """First flat index of the block of vertex v (1-based vertex)."""
        return sum(self.vertex_mults[: v - 1])

    def flat_index(self, v, p) -> int:
        if not 0 <= p < self.vertex_mults[v - 1]:
            raise InvalidIndexError(f"slot {p} out of range for vertex {v}")
        return self.offset(v) + p

    def block_indices(self, v):
        off = self.offset(v)
        return range(off, off + self.vertex_mults[v - 1])

    def vertex_of_index(self, i) -> int:
        if not 0 <= i < self.dimension:
            raise InvalidIndexError(f"flat index {i} out of range")
        for v in range(1, 2 * self.m + 1):
            if i < self.offset(v) + self.vertex_mults[v - 1]:
                return v
        raise AssertionError("unreachable")

    def supported_block_pairs(self):
        """Vertex block pairs (row vertex, column vertex) of the staircase form."""
        two_m = 2 * self.m
        pairs = [(v, v) for v in range(1, two_m + 1)]
        for i in range(1, two_m + 1, 2):
            pairs.append((i, i + 1))
            pairs.append((i, i - 1 if i > 1 else two_m))
        return sorted(pairs)

    def support_mask(self) -> np.ndarray:
        mask = np.zeros((self.dimension, self.dimension), dtype=bool)
        for (i, j) in self.supported_block_pairs():
            mask[np.ix_(self.block_indices(i), self.block_indices(j))] = True
        return mask


def build_cycle_algebra(shape: CycleAlgebraShape) -> MatrixAlgebraModel:
    """The staircase matrix model of a cycle algebra shape."""
    return MatrixAlgebraModel(shape.m, shape.vertex_mults)


def basic_model(m) -> MatrixAlgebraModel:
    """The basic 2m-cycle algebra in M_{2m} (all vertex multiplicities one)."""
    check_half_length(m)
    return MatrixAlgebraModel(m, (1,) * (2 * m))


def distance_to_partial_isometry(x) -> float:
    """Operator-norm distance to the nearest partial isometry.

    Snapping each singular value to the nearer of {0, 1} is optimal, so the
    distance is max over singular values of min(sigma, |sigma - 1|).
    """
    x = np.asarray(x, dtype=complex)
    if x.size == 0:
        return 0.0
    s = np.linalg.svd(x, compute_uv=False)
    return float(np.max(np.minimum(s, np.abs(s - 1.0))))


def _central_subsets(two_m):
    for mask in range(1, 1 << two_m):
        yield [v + 1 for v in range(two_m) if mask >> v & 1]


def _compression(x, model, row_vertices, col_vertices):
    rows = [i for v in row_vertices for i in model.block_indices(v)]
    cols = [j for v in col_vertices for j in model.block_indices(v)]
    return x[np.ix_(rows, cols)]


def locally_regular_check(x, model: MatrixAlgebraModel, tol=1e-6, rng=None,
                          max_exhaustive_vertices=12) -> bool:
    """Whether every central compression p x q is a partial isometry.

    p and q run over sums of vertex-block identities (the central projections
    of the diagonal part).  All 2^{2m} x 2^{2m} pairs are checked when
    2m <= ``max_exhaustive_vertices``; beyond that, all pairs of minimal
    projections plus seeded random sums.
    """
    if tol <= 0:
        raise InvalidIndexError(f"tolerance must be positive, got {tol}")
    x = np.asarray(x, dtype=complex)
    n = model.dimension
    if x.shape != (n, n):
        raise InvalidIndexError(f"expected a {n} x {n} matrix, got shape {x.shape}")
    two_m = 2 * model.m
    if two_m <= max_exhaustive_vertices:
        for p in _central_subsets(two_m):
            for q in _central_subsets(two_m):
                if distance_to_partial_isometry(_compression(x, model, p, q)) > tol:
                    return False
        return True
    singles = [[v] for v in range(1, two_m + 1)]
    for p in singles:
        for q in singles:
            if distance_to_partial_isometry(_compression(x, model, p, q)) > tol:
                return False
    rng = np.random.default_rng(0) if rng is None else rng
    for _ in range(256):
        p = [v for v in range(1, two_m + 1) if rng.integers(2)] or [1]
        q = [v for v in range(1, two_m + 1) if rng.integers(2)] or [1]
        if distance_to_partial_isometry(_compression(x, model, p, q)) > tol:
            return False
    return True


def max_minimal_compression_distance(x, model: MatrixAlgebraModel) -> float:
    """Largest partial-isometry defect over pairs of minimal central projections."""
    x = np.asarray(x, dtype=complex)
    worst = 0.0
    for p in range(1, 2 * model.m + 1):
        for q in range(1, 2 * model.m + 1):
            worst = max(worst, distance_to_partial_isometry(_compression(x, model, [p], [q])))
    return worst


# ---------------------------------------------------------------------------
# Concrete embeddings
# ---------------------------------------------------------------------------

@dataclass
class ConcreteEmbedding:
    """A star-extendible embedding given by images of matrix units.

    ``unit_images`` maps each supported source matrix unit (row, col) in flat
    coordinates to a tuple of pieces (row, col, value) in the target; in
    standard form every piece has unimodular value and pieces share no rows
    or columns.
    """

    source: MatrixAlgebraModel
    target: MatrixAlgebraModel
    unit_images: dict = field(repr=False)

    def image_of_unit(self, r, c) -> np.ndarray:
        out = np.zeros((self.target.dimension, self.target.dimension), dtype=complex)
        for (rr, cc, val) in self.unit_images[(r, c)]:
            out[rr, cc] += val
        return out

    def apply(self, x, tol=_PIECE_TOL) -> np.ndarray:
        """Image of a source-algebra element (entries must respect the mask)."""
        x = np.asarray(x, dtype=complex)
        n = self.source.dimension
        if x.shape != (n, n):
            raise InvalidIndexError(f"expected a {n} x {n} matrix, got shape {x.shape}")
        off_mask = np.abs(x[~self.source.support_mask()])
        if off_mask.size and off_mask.max() > tol:
            raise UnsupportedInputError("element is not supported in the source algebra")
        out = np.zeros((self.target.dimension, self.target.dimension), dtype=complex)
        for (r, c), pieces in self.unit_images.items():
            val = x[r, c]
            if val == 0:
                continue
            for (rr, cc, w) in pieces:
                out[rr, cc] += val * w
        return out


def _source_units(model: MatrixAlgebraModel):
    for (i, j) in model.supported_block_pairs():
        for p in range(model.vertex_mults[i - 1]):
            for q in range(model.vertex_mults[j - 1]):
                yield (model.flat_index(i, p), model.flat_index(j, q))


def realize_multiplicity_one(element: DihedralElement, target: MatrixAlgebraModel,
                             source: MatrixAlgebraModel = None,
                             slots=None) -> ConcreteEmbedding:
    """Standard-form multiplicity-one embedding inducing the given automorphism.

    Each source slot (v, p) is sent to the target slot (element(v),
    slots[element(v)] + p); matrix units map to single matrix units.
    """
    check_half_length(element.m, minimum=3)
    source = basic_model(element.m) if source is None else source
    if not (element.m == source.m == target.m):
        raise IncompatibleError("automorphism, source and target must share the cycle length")
    slots = dict(slots or {})
    offsets = {v: slots.get(v, 0) for v in range(1, 2 * element.m + 1)}

    for v in range(1, 2 * element.m + 1):
        w = element.act(v)
        need = offsets[w] + source.vertex_mults[v - 1]
        if need > target.vertex_mults[w - 1]:
            raise CapacityError(
                f"vertex {w} of the target has multiplicity {target.vertex_mults[w - 1]}, "
                f"placement needs {need}"
            )

    def image_slot(v, p):
        w = element.act(v)
        return target.flat_index(w, offsets[w] + p)

    unit_images = {}
    for (i, j) in source.supported_block_pairs():
        for p in range(source.vertex_mults[i - 1]):
            for q in range(source.vertex_mults[j - 1]):
                r, c = source.flat_index(i, p), source.flat_index(j, q)
                unit_images[(r, c)] = ((image_slot(i, p), image_slot(j, q), 1.0 + 0.0j),)
    return ConcreteEmbedding(source, target, unit_images)


def realize_rigid(sig: Signature, target: MatrixAlgebraModel,
                  source: MatrixAlgebraModel = None) -> ConcreteEmbedding:
    """Block-diagonal direct sum of multiplicity-one embeddings with the given signature."""
    if sig.is_zero:
        raise UnsupportedInputError("the zero signature does not define an embedding")
    source = basic_model(sig.m) if source is None else source
    if sig.m != source.m or sig.m != target.m:
        raise IncompatibleError("signature, source and target must share the cycle length")

    offsets = {v: 0 for v in range(1, 2 * sig.m + 1)}
    merged = {key: [] for key in _source_units(source)}
    for theta, mult in zip(enumerate_automorphisms(sig.m), sig.r):
        for _ in range(mult):
            summand = realize_multiplicity_one(theta, target, source=source, slots=offsets)
            for key, pieces in summand.unit_images.items():
                merged[key].extend(pieces)
            for v in range(1, 2 * sig.m + 1):
                offsets[theta.act(v)] += source.vertex_mults[v - 1]
    return ConcreteEmbedding(source, target, {k: tuple(v) for k, v in merged.items()})


def compose_embeddings(f: ConcreteEmbedding, g: ConcreteEmbedding) -> ConcreteEmbedding:
    """The composite that applies f first, then g (f's target must be g's source)."""
    if f.target != g.source:
        raise IncompatibleError("the target model of the first embedding must equal "
                                "the source model of the second")
    unit_images = {}
    for key, pieces in f.unit_images.items():
        acc = {}
        for (r, c, val) in pieces:
            if (r, c) not in g.unit_images:
                raise UnsupportedInputError(
                    f"intermediate unit {(r, c)} is not supported in the middle algebra"
                )
            for (rr, cc, w) in g.unit_images[(r, c)]:
                acc[(rr, cc)] = acc.get((rr, cc), 0.0) + val * w
        unit_images[key] = tuple(
            (rr, cc, val) for (rr, cc), val in sorted(acc.items()) if abs(val) > _PIECE_TOL
        )
    return ConcreteEmbedding(f.source, g.target, unit_images)


def validate_star_extendible(emb: ConcreteEmbedding, tol=_PIECE_TOL) -> float:
    """Largest defect of the multiplicativity and adjoint relations on generators."""
    dense = {key: emb.image_of_unit(*key) for key in emb.unit_images}
    worst = 0.0
    keys = sorted(dense)
    for (i, j) in keys:
        im = dense[(i, j)]
        worst = max(worst, float(np.max(np.abs(im @ im.conj().T - dense[(i, i)]))))
        worst = max(worst, float(np.max(np.abs(im.conj().T @ im - dense[(j, j)]))))
        for (k, l) in keys:
            prod = im @ dense[(k, l)]
            expected = dense[(i, l)] if j == k and (i, l) in dense else 0.0
            worst = max(worst, float(np.max(np.abs(prod - expected))))
    if worst > tol:
        raise UnsupportedInputError(f"embedding violates star relations by {worst:.3e}")
    return worst


# ---------------------------------------------------------------------------
# Signature recovery (the decomposition oracle)
# ---------------------------------------------------------------------------

def _standard_pieces(emb: ConcreteEmbedding, key, tol):
    pieces = emb.unit_images.get(key, ())
    rows = [p[0] for p in pieces]
    cols = [p[1] for p in pieces]
    if len(set(rows)) != len(rows) or len(set(cols)) != len(cols):
        raise UnsupportedInputError("standard form requires pieces with distinct rows and columns")
    for (_, _, val) in pieces:
        if abs(abs(val) - 1.0) > tol:
            raise UnsupportedInputError("standard form requires unimodular matrix-unit coefficients")
    return pieces


def _cycle_unit_coords(m):
    """Flat coordinates of the distinguished 2m-cycle E_1 .. E_{2m} in the basic model.

    E_{2k-1} = e_{2k-1, 2k} and E_{2k} = e_{2k+1, 2k} (cyclically), so
    consecutive elements alternately share source and range vertices.
    """
    coords = []
    for k in range(1, m + 1):
        coords.append((2 * k - 2, 2 * k - 1))
        coords.append(((2 * k) % (2 * m), 2 * k - 1))
    return coords


def decompose_signature(emb: ConcreteEmbedding, tol=_PIECE_TOL) -> Signature:
    """Recover the multiplicity signature of a standard-form rigid embedding.

    The vertex-multiplicity matrix is read off from ranks of images of the
    diagonal matrix units.  The homology value is found by chaining the
    pieces of the images of the distinguished 2m-cycle through shared
    initial/final projections; every matched cycle contributes +1 when its
    induced vertex permutation is a rotation and -1 when a reflection.  The
    pair is then resolved through :func:`signature_from_k0h1`.
    """
    m = emb.source.m
    check_half_length(m, minimum=3)
    basic = basic_model(m)
    if emb.source != basic:
        probe = realize_multiplicity_one(DihedralElement.identity(m), emb.source, source=basic)
        emb = compose_embeddings(probe, emb)

    target = emb.target
    mat = np.zeros((2 * m, 2 * m), dtype=np.int64)
    for j in range(1, 2 * m + 1):
        pieces = _standard_pieces(emb, (j - 1, j - 1), tol)
        for (r, c, _) in pieces:
            if r != c:
                raise UnsupportedInputError("image of a diagonal unit must be diagonal")
            mat[parity_position(m, target.vertex_of_index(r)), parity_position(m, j)] += 1

    cycle_pieces = [_standard_pieces(emb, key, tol) for key in _cycle_unit_coords(m)]
    counts = {len(p) for p in cycle_pieces}
    if len(counts) != 1:
        raise DecompositionError("cycle images have mismatched numbers of pieces")

    by_col = [{p[1]: p for p in pieces} for pieces in cycle_pieces]
    by_row = [{p[0]: p for p in pieces} for pieces in cycle_pieces]

    h = 0
    tally = [0] * (2 * m)
    used = [set() for _ in range(2 * m)]
    for start in cycle_pieces[0]:
        chain = [start]
        for step in range(1, 2 * m):
            prev = chain[-1]
            lookup = by_col[step] if step % 2 == 1 else by_row[step]
            nxt = lookup.get(prev[1] if step % 2 == 1 else prev[0])
            if nxt is None:
                raise DecompositionError("cycle pieces do not match into summands")
            chain.append(nxt)
        if chain[-1][0] != start[0]:
            raise DecompositionError("cycle of pieces fails to close up")
        for step, piece in enumerate(chain):
            if piece in used[step]:
                raise DecompositionError("a piece was matched into two summands")
            used[step].add(piece)
        images = [0] * (2 * m)
        for k in range(1, m + 1):
            images[(2 * k - 1) - 1] = target.vertex_of_index(chain[2 * k - 2][0])
            images[(2 * k) - 1] = target.vertex_of_index(chain[2 * k - 2][1])
        try:
            theta = element_from_images(m, images)
        except InvalidIndexError as exc:
            raise DecompositionError(f"summand vertex map is not an automorphism: {images}") from exc
        h += 1 if theta.is_rotation else -1
        tally[theta.index - 1] += 1

    sig = signature_from_k0h1(mat, h)
    if tuple(tally) != sig.r:
        raise DecompositionError(
            f"summand tally {tuple(tally)} disagrees with the K0/H1 resolution {sig.r}"
        )
    return sig


# ---------------------------------------------------------------------------
# Randomized verification harnesses
# ---------------------------------------------------------------------------

def _random_composition(rng, total, parts):
    return tuple(int(x) for x in rng.multinomial(total, [1.0 / parts] * parts))


def _random_block_unitary(model: MatrixAlgebraModel, rng) -> np.ndarray:
    u = np.zeros((model.dimension, model.dimension), dtype=complex)
    for v in range(1, 2 * model.m + 1):
        k = model.vertex_mults[v - 1]
        z = rng.standard_normal((k, k)) + 1j * rng.standard_normal((k, k))
        q, r = np.linalg.qr(z)
        q = q * (np.diag(r) / np.abs(np.diag(r)))
        idx = list(model.block_indices(v))
        u[np.ix_(idx, idx)] = q
    return u


def random_source_partial_isometry(m, rng) -> np.ndarray:
    """A random partial isometry of the basic algebra with projections in it.

    A sum of matrix units with pairwise distinct rows and columns and random
    unimodular coefficients is such a partial isometry.
    """
    src = basic_model(m)
    units = sorted(_source_units(src))
    order = rng.permutation(len(units))
    x = np.zeros((src.dimension, src.dimension), dtype=complex)
    rows_used, cols_used = set(), set()
    for idx in order:
        r, c = units[idx]
        if r in rows_used or c in cols_used:
            continue
        if rows_used and rng.random() < 0.25:
            continue
        rows_used.add(r)
        cols_used.add(c)
        x[r, c] = np.exp(2j * math.pi * rng.random())
    return x


def random_model_partial_isometry(model: MatrixAlgebraModel, rng):
    """A partial isometry in the model with initial and final projections in it.

    Built as the image of a random partial isometry of the basic algebra
    under a random rigid embedding, conjugated by a random block-diagonal
    unitary; the entrywise partial-isometry property is exact for these.
    """
    m = model.m
    bound = min(model.vertex_mults)
    sig = Signature.zero(m)
    while sig.is_zero:
        sig = Signature(m, _random_composition(rng, int(rng.integers(1, bound + 1)), 2 * m))
    emb = realize_rigid(sig, model)
    a = emb.apply(random_source_partial_isometry(m, rng))
    u = _random_block_unitary(model, rng)
    return u @ a @ u.conj().T, sig


def _max_block_entry_deviation(a, model: MatrixAlgebraModel) -> float:
    worst = 0.0
    for (i, j) in model.supported_block_pairs():
        block = a[np.ix_(list(model.block_indices(i)), list(model.block_indices(j)))]
        worst = max(worst, distance_to_partial_isometry(block))
    return worst


def entrywise_partial_isometry_report(model: MatrixAlgebraModel, trials=100,
                                      tol=1e-9, seed=0) -> dict:
    """Check that block entries of partial isometries are partial isometries.

    For cycle half-length >= 3, any partial isometry whose initial and final
    projections lie in the algebra has this property exactly; the harness
    verifies it on randomly constructed instances and reports the maximum
    deviation.  Refused for m = 2, where the property fails.
    """
    if model.m < 3:
        raise InvalidIndexError(
            "the entrywise partial-isometry property fails for 4-cycle algebras; need m >= 3"
        )
    if tol <= 0:
        raise InvalidIndexError(f"tolerance must be positive, got {tol}")
    rng = np.random.default_rng(seed)
    max_dev, worst_trial = 0.0, None
    for t in range(trials):
        a, sig = random_model_partial_isometry(model, rng)
        dev = _max_block_entry_deviation(a, model)
        if dev > max_dev:
            max_dev, worst_trial = dev, {"trial": t, "signature": list(sig.r)}
    return {
        "check": "entrywise-partial-isometries",
        "m": model.m,
        "vertex_mults": list(model.vertex_mults),
        "trials": trials,
        "tol": tol,
        "seed": seed,
        "max_deviation": max_dev,
        "worst_trial": worst_trial,
        "ok": max_dev <= tol,
    }


def perturbed_entry_report(model: MatrixAlgebraModel, delta, trials=50,
                           epsilon=1e-4, seed=0) -> dict:
    """Record entry deviations after a norm-delta perturbation inside the support.

    This measures the delta-to-epsilon dependence of the approximate
    entrywise property; the harness records and never asserts a bound.
    """
    if model.m < 3:
        raise InvalidIndexError(
            "the entrywise partial-isometry property fails for 4-cycle algebras; need m >= 3"
        )
    if delta < 0:
        raise InvalidIndexError("delta must be nonnegative")
    rng = np.random.default_rng(seed)
    mask = model.support_mask()
    rows = []
    for t in range(trials):
        a, _ = random_model_partial_isometry(model, rng)
        if delta > 0:
            e = rng.standard_normal(a.shape) + 1j * rng.standard_normal(a.shape)
            e[~mask] = 0.0
            e *= delta / np.linalg.norm(e, 2)
            a = a + e
        rows.append({"trial": t, "entry_deviation": _max_block_entry_deviation(a, model)})
    max_dev = max(row["entry_deviation"] for row in rows)
    return {
        "check": "perturbed-entry-distances",
        "m": model.m,
        "vertex_mults": list(model.vertex_mults),
        "delta": delta,
        "epsilon": epsilon,
        "trials": trials,
        "seed": seed,
        "rows": rows,
        "max_entry_deviation": max_dev,
        "within_epsilon": max_dev <= epsilon,
        "ok": True,
    }


def composition_oracle_report(m) -> dict:
    """Compose all ordered pairs of multiplicity-one embeddings in the matrix model
    and compare the decomposed class against the group-ring convolution."""
    check_half_length(m, minimum=3)
    unit = basic_model(m)
    autos = enumerate_automorphisms(m)
    units = unit_signatures(m)
    mismatches = []
    for a, sa in zip(autos, units):
        for b, sb in zip(autos, units):
            first = realize_multiplicity_one(b, unit)
            second = realize_multiplicity_one(a, unit, source=unit)
            got = decompose_signature(compose_embeddings(first, second))
            expected = signature_compose(sb, sa)
            if got.r != expected.r:
                mismatches.append({"a": a.index, "b": b.index,
                                   "got": list(got.r), "expected": list(expected.r)})
    total = len(autos) ** 2
    return {
        "check": "composition-oracle",
        "m": m,
        "pairs": total,
        "matches": total - len(mismatches),
        "mismatches": mismatches,
        "ok": not mismatches,
    }


def realize_roundtrip_report(m, max_entry=2) -> dict:
    """Realize every signature with entries <= max_entry and decompose it back."""
    check_half_length(m, minimum=3)
    cap = 2 * m * max_entry
    target = MatrixAlgebraModel(m, (cap,) * (2 * m))
    count, failures = 0, []
    for sig in signatures_with_entries_at_most(m, max_entry):
        if sig.is_zero:
            continue
        count += 1
        got = decompose_signature(realize_rigid(sig, target))
        if got.r != sig.r:
            failures.append({"signature": list(sig.r), "got": list(got.r)})
    return {
        "check": "realize-roundtrip",
        "m": m,
        "max_entry": max_entry,
        "count": count,
        "failures": failures,
        "ok": not failures,
    }


# ---------------------------------------------------------------------------
# The locally regular, non-regular 4-cycle embedding
# ---------------------------------------------------------------------------

def _place_corner(entries, scale=1.0):
    """Place 8x8 corner data (1-based row, col, sign) into M_16.

    Rows 1..8 are the slots of vertices 1 and 2, columns 1..8 the slots of
    vertices 3 and 4; the corner occupies rows 0..7 and columns 8..15.
    """
    x = np.zeros((16, 16), dtype=complex)
    for (r, c, sign) in entries:
        x[r - 1, 8 + c - 1] = sign * scale
    return x


def nonregular_embedding_example():
    """The 4-cycle algebra embedding that is locally regular but not regular.

    Returns the four image partial isometries v1..v4 of the rank-one 4-cycle
    (as 16 x 16 matrices, the off-diagonal corner of the 4-cycle algebra with
    vertex multiplicities four) together with a verification report:

    (a) every v_i is a partial isometry,
    (b) every v_i is a regular partial isometry (all central compressions
        are partial isometries),
    (c) the product of the consecutive pair sharing initial projections
        (v3 v2* in the order returned here) is a partial isometry that fails
        the local-regularity test outright.
    """
    model = MatrixAlgebraModel(2, (4, 4, 4, 4))
    inv_sqrt2 = 1.0 / math.sqrt(2.0)
    v1 = _place_corner([(1, 1, 1), (2, 5, 1), (5, 2, 1), (6, 6, 1)])
    v2 = _place_corner([(1, 3, 1), (1, 7, 1), (2, 3, 1), (2, 7, -1),
                        (5, 4, 1), (5, 8, 1), (6, 4, 1), (6, 8, -1)], inv_sqrt2)
    v3 = _place_corner([(3, 3, 1), (3, 4, 1), (4, 7, 1), (4, 8, 1),
                        (7, 3, 1), (7, 4, -1), (8, 7, 1), (8, 8, -1)], inv_sqrt2)
    v4 = _place_corner([(3, 1, 1), (4, 5, 1), (7, 2, 1), (8, 6, 1)])
    vs = (v1, v2, v3, v4)

    distances = [distance_to_partial_isometry(v) for v in vs]
    regular = [locally_regular_check(v, model, tol=1e-6) for v in vs]

    # The images form a 4-cycle: consecutive pairs alternately share final
    # and initial projections.
    cycle_defect = max(
        float(np.max(np.abs(v1 @ v1.conj().T - v2 @ v2.conj().T))),
        float(np.max(np.abs(v2.conj().T @ v2 - v3.conj().T @ v3))),
        float(np.max(np.abs(v3 @ v3.conj().T - v4 @ v4.conj().T))),
        float(np.max(np.abs(v4.conj().T @ v4 - v1.conj().T @ v1))),
    )

    product = v3 @ v2.conj().T
    product_distance = distance_to_partial_isometry(product)
    product_regular = locally_regular_check(product, model, tol=1e-6)
    witness = max_minimal_compression_distance(product, model)

    report = {
        "check": "nonregular-embedding",
        "model": {"m": 2, "vertex_mults": [4, 4, 4, 4]},
        "v_partial_isometry_distances": distances,
        "v_regular": regular,
        "cycle_relation_defect": cycle_defect,
        "nonregular_product": "v3 v2*",
        "product_partial_isometry_distance": product_distance,
        "product_locally_regular": product_regular,
        "max_minimal_compression_distance": witness,
        "assertions": {
            "each_v_is_partial_isometry": max(distances) <= 1e-9,
            "each_v_is_regular": all(regular),
            "product_not_locally_regular": (not product_regular) and witness >= 0.1,
        },
    }
    report["ok"] = all(report["assertions"].values())
    return vs, report
