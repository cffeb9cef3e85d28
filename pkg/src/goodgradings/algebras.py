"""Classical matrix Lie algebras gl_n, sl_n, sp_2n, so_N.

Realizations fix the ordered basis v_1,...,v_n,(v_0),v_{-1},...,v_{-n}
of the defining representation and the bilinear forms

    sp_2n:  <v_i, v_{-j}> = delta_ij  (skew),
    so_N :  (v_i, v_{-j}) = delta_ij  (symmetric),

i.e. antidiagonal Gram matrices.  With this choice every diagonal
matrix diag(d_1..d_n, (0), -d_1..-d_n) lies in the algebra, so grading
elements are literally diagonal, and each basis element of the algebra
is an eigenvector of ad H for diagonal H.  Graded decompositions are
then a matter of bucketing basis elements by eigenvalue.

Basis elements are kept sparse ({(row, col): value}); they have at most
two nonzero entries.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Sequence

from .linalg import Matrix, Scalar, Subspace, as_fraction, kernel

Sparse = dict[tuple[int, int], Fraction]


class Family(str, Enum):
    GL = "GL"
    SL = "SL"
    SP = "SP"
    SO = "SO"


@dataclass(frozen=True)
class AlgebraSpec:
    """A classical family together with the matrix size N."""

    family: Family
    size: int

    def __post_init__(self):
        if self.size < 1:
            raise ValueError("matrix size must be positive")
        if self.family is Family.SP and self.size % 2 != 0:
            raise ValueError("sp requires even matrix size")
        if self.family is Family.SO and self.size < 3:
            raise ValueError("so requires size >= 3")

    @property
    def dim(self) -> int:
        n = self.size
        return {
            Family.GL: n * n,
            Family.SL: n * n - 1,
            Family.SP: (n // 2) * (n + 1),
            Family.SO: n * (n - 1) // 2,
        }[self.family]

    @property
    def rank(self) -> int:
        """Rank of the associated simple algebra (A/B/C/D convention)."""
        if self.family in (Family.GL, Family.SL):
            return self.size - 1
        return self.size // 2

    @property
    def diagram(self) -> str:
        """Dynkin diagram letter used for characteristics."""
        if self.family in (Family.GL, Family.SL):
            return "A"
        if self.family is Family.SP:
            return "C"
        return "B" if self.size % 2 else "D"


def _signed_indices(spec: AlgebraSpec) -> tuple[int, ...]:
    n = spec.size
    if spec.family in (Family.GL, Family.SL):
        return tuple(range(1, n + 1))
    half = n // 2
    mid = (0,) if n % 2 else ()
    return tuple(range(1, half + 1)) + mid + tuple(-i for i in range(1, half + 1))


def _eps(i: int) -> int:
    return 1 if i > 0 else -1


class AlgebraBasis:
    """A classical Lie algebra with a fixed ordered basis of matrices."""

    def __init__(self, spec: AlgebraSpec):
        self.spec = spec
        self.n = spec.size
        self.indices = _signed_indices(spec)
        self.position = {i: a for a, i in enumerate(self.indices)}
        self.labels: list[tuple] = []
        self.elements: list[Sparse] = []
        self._build()
        self.dim = len(self.elements)
        if self.dim != spec.dim:
            raise AssertionError("basis size does not match the dimension formula")
        self.label_index = {lab: k for k, lab in enumerate(self.labels)}

    # -- construction -------------------------------------------------

    def _build(self):
        fam = self.spec.family
        n = self.n
        if fam in (Family.GL, Family.SL):
            for i in range(1, n + 1):
                for j in range(1, n + 1):
                    if i == j:
                        continue
                    self._add(("E", i, j), {(i - 1, j - 1): Fraction(1)})
            if fam is Family.GL:
                for i in range(1, n + 1):
                    self._add(("E", i, i), {(i - 1, i - 1): Fraction(1)})
            else:
                for k in range(1, n):
                    self._add(("H", k), {(k - 1, k - 1): Fraction(1),
                                         (k, k): Fraction(-1)})
            return
        skew = fam is Family.SP
        for a, i in enumerate(self.indices):
            for b, j in enumerate(self.indices):
                am, bm = self.position[-j], self.position[-i]
                if (a, b) == (am, bm):
                    # entry position paired with itself (j == -i)
                    if skew:
                        self._add(("E", i, j), {(a, b): Fraction(1)})
                    continue
                if (a, b) > (am, bm):
                    continue
                coeff = -Fraction(_eps(i) * _eps(j)) if skew else Fraction(-1)
                self._add(("E", i, j), {(a, b): Fraction(1), (am, bm): coeff})

    def _add(self, label: tuple, elem: Sparse):
        self.labels.append(label)
        self.elements.append(elem)

    # -- views ---------------------------------------------------------

    @property
    def vector_names(self) -> tuple[str, ...]:
        """Basis-vector names: v_1..v_n for gl/sl, v_1..v_n,(v_0),v_-1..v_-n
        for sp/so."""
        return tuple(f"v_{i}" for i in self.indices)

    def basis_matrix(self, k: int) -> Matrix:
        return sparse_to_matrix(self.elements[k], self.n)

    def basis_matrices(self) -> list[Matrix]:
        return [self.basis_matrix(k) for k in range(self.dim)]

    # -- membership and coordinates -------------------------------------

    def contains(self, m: Matrix) -> bool:
        """Form-compatibility (and tracelessness for sl) of a matrix."""
        if m.rows != self.n or m.cols != self.n:
            return False
        fam = self.spec.family
        if fam is Family.GL:
            return True
        if fam is Family.SL:
            return m.trace() == 0
        pos = self.position
        skew = fam is Family.SP
        for a, i in enumerate(self.indices):
            for b, j in enumerate(self.indices):
                mirror = m.data[pos[-j]][pos[-i]]
                sign = _eps(i) * _eps(j) if skew else 1
                if mirror != -sign * m.data[a][b]:
                    return False
        return True

    def coordinates(self, m: Matrix) -> tuple[Fraction, ...]:
        """Coordinates of a member matrix in this basis."""
        return self.coordinates_sparse(matrix_to_sparse(m))

    def coordinates_sparse(self, x: Sparse) -> tuple[Fraction, ...]:
        fam = self.spec.family
        coords = []
        if fam is Family.SL:
            partial = Fraction(0)
            partials = {}
            for k in range(1, self.n):
                partial += x.get((k - 1, k - 1), Fraction(0))
                partials[k] = partial
            for lab in self.labels:
                if lab[0] == "H":
                    coords.append(partials[lab[1]])
                else:
                    _, i, j = lab
                    coords.append(x.get((i - 1, j - 1), Fraction(0)))
            return tuple(coords)
        pos = self.position
        for lab in self.labels:
            _, i, j = lab
            coords.append(x.get((pos[i], pos[j]), Fraction(0)))
        return tuple(coords)

    def from_coordinates(self, coords: Sequence[Scalar]) -> Matrix:
        if len(coords) != self.dim:
            raise ValueError("coordinate vector has the wrong length")
        acc: Sparse = {}
        for c, elem in zip(coords, self.elements):
            c = as_fraction(c)
            if c == 0:
                continue
            for key, v in elem.items():
                acc[key] = acc.get(key, Fraction(0)) + c * v
        return sparse_to_matrix(acc, self.n)


def build_algebra(spec: AlgebraSpec) -> AlgebraBasis:
    """Realize the algebra of a spec with its fixed basis."""
    return AlgebraBasis(spec)


# -- sparse helpers -----------------------------------------------------

def matrix_to_sparse(m: Matrix) -> Sparse:
    return {(i, j): m.data[i][j]
            for i in range(m.rows) for j in range(m.cols) if m.data[i][j] != 0}


def sparse_to_matrix(x: Sparse, n: int) -> Matrix:
    m = Matrix.zeros(n, n)
    for (i, j), v in x.items():
        m.data[i][j] = v
    return m


def sparse_bracket(a: Sparse, b: Sparse) -> Sparse:
    out: Sparse = {}
    for (r1, c1), v1 in a.items():
        for (r2, c2), v2 in b.items():
            if c1 == r2:
                key = (r1, c2)
                out[key] = out.get(key, Fraction(0)) + v1 * v2
            if c2 == r1:
                key = (r2, c1)
                out[key] = out.get(key, Fraction(0)) - v2 * v1
    return {k: v for k, v in out.items() if v != 0}


# -- grading elements ----------------------------------------------------

@dataclass(frozen=True)
class GradingElement:
    """A diagonal matrix H in g; ad H defines the grading.

    The diagonal is listed in the fixed basis order of the defining
    representation.  For sp/so the entries pair as d(v_{-i}) = -d(v_i)
    and d(v_0) = 0; for sl the trace vanishes.
    """

    spec: AlgebraSpec
    diagonal: tuple[Fraction, ...]

    def __post_init__(self):
        diag = tuple(as_fraction(x) for x in self.diagonal)
        object.__setattr__(self, "diagonal", diag)
        if len(diag) != self.spec.size:
            raise ValueError("diagonal length != matrix size")
        fam = self.spec.family
        if fam is Family.SL and sum(diag) != 0:
            raise ValueError("sl grading element must be traceless")
        if fam in (Family.SP, Family.SO):
            idx = _signed_indices(self.spec)
            pos = {i: a for a, i in enumerate(idx)}
            for i in idx:
                if i > 0 and diag[pos[-i]] != -diag[pos[i]]:
                    raise ValueError("diagonal not form-compatible (pairing)")
                if i == 0 and diag[pos[0]] != 0:
                    raise ValueError("middle diagonal entry must vanish")

    def value(self, i: int) -> Fraction:
        """Diagonal value on the basis vector with signed index i."""
        idx = _signed_indices(self.spec)
        return self.diagonal[idx.index(i)]

    def matrix(self) -> Matrix:
        return Matrix.diagonal(self.diagonal)


def label_degree(g: AlgebraBasis, label: tuple, H: GradingElement) -> Fraction:
    """ad H eigenvalue of a basis element."""
    if label[0] == "H":
        return Fraction(0)
    _, i, j = label
    pos = g.position
    return H.diagonal[pos[i]] - H.diagonal[pos[j]]


@dataclass(frozen=True)
class GradedDecomposition:
    """Eigenspace decomposition of g under ad H for diagonal H."""

    g: AlgebraBasis
    degrees: tuple[Fraction, ...]
    buckets: dict  # degree -> tuple of basis indices

    def piece(self, degree: Scalar) -> Subspace:
        degree = as_fraction(degree)
        dim = self.g.dim
        idxs = self.buckets.get(degree, ())
        vecs = []
        for k in idxs:
            v = [Fraction(0)] * dim
            v[k] = Fraction(1)
            vecs.append(v)
        return Subspace.from_vectors(dim, vecs)

    def piece_dim(self, degree: Scalar) -> int:
        return len(self.buckets.get(as_fraction(degree), ()))

    def is_integral(self) -> bool:
        return all(d.denominator == 1 for d in self.degrees)

    def is_even(self) -> bool:
        return all(d.denominator == 1 and d % 2 == 0 for d in self.degrees)


def graded_decomposition(g: AlgebraBasis, H: GradingElement) -> GradedDecomposition:
    """Bucket the fixed basis of g by ad H eigenvalue.

    Every basis element is an ad H eigenvector because H is diagonal,
    so the decomposition is exact bookkeeping, not linear algebra.
    """
    if H.spec != g.spec:
        raise ValueError("grading element spec does not match the algebra")
    buckets: dict[Fraction, list[int]] = {}
    for k, lab in enumerate(g.labels):
        d = label_degree(g, lab, H)
        buckets.setdefault(d, []).append(k)
    frozen = {d: tuple(ks) for d, ks in buckets.items()}
    return GradedDecomposition(g, tuple(sorted(frozen)), frozen)


def ad_coordinate_matrix(g: AlgebraBasis, e: Matrix) -> Matrix:
    """Matrix of ad e on g in basis coordinates (columns = [e, b_k])."""
    es = matrix_to_sparse(e)
    cols = [g.coordinates_sparse(sparse_bracket(es, elem)) for elem in g.elements]
    return Matrix([[cols[k][r] for k in range(g.dim)] for r in range(g.dim)])


def centralizer(g: AlgebraBasis, e: Matrix) -> Subspace:
    """{x in g : [e, x] = 0} as a subspace in basis coordinates."""
    if not g.contains(e):
        raise ValueError("element does not lie in the algebra")
    return kernel(ad_coordinate_matrix(g, e))
