"""Finite root systems with exact rational coordinates.

Roots are generated from a Cartan matrix by closing the simple roots under
simple reflections. Two realizations are available:

``standard``
    Ambient coordinates are simple-root coordinates, so ``ambient_dim ==
    rank`` and the Gram matrix is the symmetrized Cartan matrix, scaled so
    that long roots have squared length 2 in every irreducible component.

``gl_n``
    Type ``A_{n-1}`` inside ``Q^n`` with ``alpha_i = e_i - e_{i+1}`` and the
    dot product. Here ``ambient_dim = n > rank`` and the roots span the
    trace-zero hyperplane.

Simple-root indices are 1-based in the public API (``F`` in
:func:`standard_parabolic`, ``i`` in :func:`symmpair.weyl.simple_reflection`).
Roots are indexed 0-based in :attr:`RootSystem.roots`: the positive roots
first, ordered by height, followed by their negatives in the same order, so
that ``roots[k + N] == -roots[k]`` with ``N = len(positive_roots)``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from . import _linalg as la
from .errors import CartanError, DimensionMismatch

REALIZATIONS = ("standard", "gl_n")


def cartan_matrix(family: str, rank: int) -> tuple:
    """Cartan matrix ``a_ij = 2(alpha_i, alpha_j)/(alpha_i, alpha_i)``, Bourbaki numbering."""
    family = family.upper()
    n = int(rank)
    if n < 1:
        raise CartanError(f"rank must be positive, got {rank}")
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def link(i, j, aij=-1, aji=-1):
        a[i][j], a[j][i] = aij, aji

    if family == "A":
        for i in range(n - 1):
            link(i, i + 1)
    elif family in ("B", "C"):
        if n < 2:
            raise CartanError(f"{family}{n} needs rank >= 2")
        for i in range(n - 2):
            link(i, i + 1)
        # B: alpha_n short; C: alpha_n long
        if family == "B":
            link(n - 2, n - 1, -1, -2)
        else:
            link(n - 2, n - 1, -2, -1)
    elif family == "D":
        if n < 3:
            raise CartanError(f"D{n} needs rank >= 3")
        for i in range(n - 2):
            link(i, i + 1)
        link(n - 3, n - 1)
    elif family == "E":
        if n not in (6, 7, 8):
            raise CartanError(f"E{n} is not a finite type")
        link(0, 2)
        link(1, 3)
        for i in range(2, n - 1):
            link(i, i + 1)
    elif family == "F":
        if n != 4:
            raise CartanError(f"F{n} is not a finite type")
        link(0, 1)
        link(1, 2, -1, -2)
        link(2, 3)
    elif family == "G":
        if n != 2:
            raise CartanError(f"G{n} is not a finite type")
        link(0, 1, -3, -1)
    else:
        raise CartanError(f"unknown Cartan family {family!r}")
    return tuple(tuple(row) for row in a)


def parse_label(label: str) -> tuple:
    """``"B3"`` -> ``("B", 3)``; products like ``"A1xA1"`` are handled by :func:`build_root_system`."""
    label = label.strip()
    if len(label) < 2 or not label[1:].isdigit():
        raise CartanError(f"cannot parse Cartan label {label!r}")
    return label[0].upper(), int(label[1:])


def block_diagonal(blocks) -> tuple:
    n = sum(len(b) for b in blocks)
    out = [[0] * n for _ in range(n)]
    off = 0
    for b in blocks:
        for i, row in enumerate(b):
            for j, v in enumerate(row):
                out[off + i][off + j] = v
        off += len(b)
    return tuple(tuple(r) for r in out)


def symmetrizer(cartan) -> tuple:
    """Half squared lengths ``d_i`` with ``d_i a_ij = d_j a_ji``, long roots at 1 per component."""
    n = len(cartan)
    d = [None] * n
    for start in range(n):
        if d[start] is not None:
            continue
        d[start] = Fraction(1)
        component = [start]
        stack = [start]
        while stack:
            i = stack.pop()
            for j in range(n):
                if j == i or cartan[i][j] == 0:
                    continue
                dj = d[i] * cartan[i][j] / cartan[j][i]
                if d[j] is None:
                    d[j] = dj
                    component.append(j)
                    stack.append(j)
                elif d[j] != dj:
                    raise CartanError("Cartan matrix is not symmetrizable")
        top = max(d[i] for i in component)
        for i in component:
            d[i] /= top
    return tuple(d)


def validate_cartan(cartan) -> tuple:
    try:
        rows = [list(r) for r in cartan]
    except TypeError:
        raise CartanError("Cartan matrix must be a list of rows") from None
    n = len(rows)
    if n == 0 or any(len(r) != n for r in rows):
        raise CartanError("Cartan matrix must be square and nonempty")
    out = []
    for i, row in enumerate(rows):
        new = []
        for j, v in enumerate(row):
            f = Fraction(v) if not isinstance(v, str) else Fraction(v)
            if f.denominator != 1:
                raise CartanError(f"entry ({i + 1},{j + 1}) = {v} is not an integer")
            new.append(int(f))
        out.append(new)
    for i in range(n):
        if out[i][i] != 2:
            raise CartanError(f"diagonal entry ({i + 1},{i + 1}) must be 2, got {out[i][i]}")
        for j in range(n):
            if i != j and out[i][j] > 0:
                raise CartanError(f"off-diagonal entry ({i + 1},{j + 1}) must be <= 0")
            if (out[i][j] == 0) != (out[j][i] == 0):
                raise CartanError(f"zero pattern is not symmetric at ({i + 1},{j + 1})")
    cartan = tuple(tuple(r) for r in out)
    d = symmetrizer(cartan)
    gram = tuple(tuple(d[i] * cartan[i][j] for j in range(n)) for i in range(n))
    if not la.leading_minors_positive(gram):
        raise CartanError("Cartan matrix is not of finite type (form not positive definite)")
    return cartan


def _root_coefficients(cartan) -> list:
    """All roots in simple-root coordinates, by closure under simple reflections."""
    n = len(cartan)
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    seen = set(simple) | {tuple(-c for c in s) for s in simple}
    frontier = list(seen)
    while frontier:
        nxt = []
        for beta in frontier:
            for i in range(n):
                pairing = sum(beta[j] * cartan[i][j] for j in range(n))
                if pairing == 0:
                    continue
                image = tuple(b - pairing * (k == i) for k, b in enumerate(beta))
                if image not in seen:
                    seen.add(image)
                    nxt.append(image)
        frontier = nxt
    positive = sorted((c for c in seen if sum(c) > 0), key=lambda c: (sum(c), tuple(-x for x in c)))
    return positive + [tuple(-x for x in c) for c in positive]


@dataclass(frozen=True, eq=False)
class RootSystem:
    """An immutable finite root system. Equality is identity."""

    label: str
    cartan: tuple
    realization: str
    simple_roots: tuple
    roots: tuple
    coefficients: tuple
    form: tuple

    @property
    def ambient_dim(self) -> int:
        return len(self.form)

    @property
    def rank(self) -> int:
        return len(self.cartan)

    @property
    def n_positive(self) -> int:
        return len(self.roots) // 2

    @property
    def positive_roots(self) -> tuple:
        return self.roots[: self.n_positive]

    @property
    def negative_roots(self) -> tuple:
        return self.roots[self.n_positive:]

    @cached_property
    def all_roots(self) -> frozenset:
        return frozenset(self.roots)

    @cached_property
    def _index(self) -> dict:
        return {r: k for k, r in enumerate(self.roots)}

    def index(self, root) -> int:
        try:
            return self._index[tuple(Fraction(x) for x in root)]
        except KeyError:
            raise KeyError(f"{tuple(root)} is not a root") from None

    def is_positive_index(self, k: int) -> bool:
        return k < self.n_positive

    def negate_index(self, k: int) -> int:
        n = self.n_positive
        return k + n if k < n else k - n

    def height(self, k: int) -> int:
        return sum(self.coefficients[k])

    def inner(self, x, y) -> Fraction:
        g = self.form
        return sum(xi * sum(gij * yj for gij, yj in zip(row, y)) for xi, row in zip(x, g))

    @cached_property
    def simple_pairing(self) -> tuple:
        """Rows ``x -> <x, alpha_i>``; dominance is nonnegativity of this map."""
        return la.compact_matrix(la.matvec(self.form, a) for a in self.simple_roots)

    @cached_property
    def simple_gram(self) -> tuple:
        return tuple(tuple(self.inner(a, b) for b in self.simple_roots) for a in self.simple_roots)

    @cached_property
    def coordinate_matrix(self) -> tuple:
        """Linear map from ambient vectors to simple-root coordinates of their projection."""
        pairing = [la.matvec(self.form, a) for a in self.simple_roots]  # rows: x -> <x, alpha_i>
        inv = la.inverse(self.simple_gram)
        return la.compact_matrix(la.matmul(inv, tuple(pairing)))

    @cached_property
    def projection_matrix(self) -> tuple:
        basis = la.transpose(self.simple_roots)
        return la.compact_matrix(la.matmul(basis, self.coordinate_matrix))

    def simple_coordinates(self, x) -> tuple:
        """Coordinates of the orthogonal projection of ``x`` onto the root span."""
        return la.matvec(self.coordinate_matrix, x)

    def from_simple_coordinates(self, c) -> tuple:
        out = [Fraction(0)] * self.ambient_dim
        for ci, a in zip(c, self.simple_roots):
            if ci:
                out = [o + ci * ai for o, ai in zip(out, a)]
        return tuple(out)

    def project(self, x) -> tuple:
        return la.matvec(self.projection_matrix, x)

    def in_root_span(self, x) -> bool:
        return self.project(x) == tuple(Fraction(v) for v in x)

    @cached_property
    def rho2(self) -> tuple:
        """Sum of the positive roots (twice the half-sum rho)."""
        total = [Fraction(0)] * self.ambient_dim
        for r in self.positive_roots:
            total = [t + v for t, v in zip(total, r)]
        return tuple(total)

    @cached_property
    def reflection_permutations(self) -> tuple:
        """For each simple index (0-based), the permutation of root indices it induces."""
        n = self.rank
        lookup = {c: k for k, c in enumerate(self.coefficients)}
        perms = []
        for i in range(n):
            row = self.cartan[i]
            perm = []
            for c in self.coefficients:
                pairing = sum(c[j] * row[j] for j in range(n))
                image = tuple(v - pairing * (k == i) for k, v in enumerate(c))
                perm.append(lookup[image])
            perms.append(tuple(perm))
        return tuple(perms)

    @cached_property
    def reflection_matrices(self) -> tuple:
        """Ambient matrices of the simple reflections (0-based list)."""
        mats = []
        for a in self.simple_roots:
            ga = la.matvec(self.form, a)
            c = Fraction(2) / self.inner(a, a)
            mats.append(la.compact_matrix(
                tuple(Fraction(int(i == j)) - c * a[i] * ga[j] for j in range(self.ambient_dim))
                for i in range(self.ambient_dim)
            ))
        return tuple(mats)

    def check_dim(self, x, what="vector"):
        if len(x) != self.ambient_dim:
            raise DimensionMismatch(
                f"{what} has length {len(x)}, expected ambient_dim {self.ambient_dim}"
            )

    def __repr__(self):
        return f"RootSystem({self.label}, realization={self.realization!r})"


def inner_product(rs: RootSystem, x, y) -> Fraction:
    rs.check_dim(x)
    rs.check_dim(y)
    return rs.inner(tuple(map(Fraction, x)), tuple(map(Fraction, y)))


def _spec_to_cartan(spec):
    """Return (label, cartan) for a label string, (family, rank) pair or matrix."""
    if isinstance(spec, str):
        parts = [p for p in spec.replace("×", "x").split("x") if p]
        if not parts:
            raise CartanError(f"empty Cartan label {spec!r}")
        blocks = [cartan_matrix(*parse_label(p)) for p in parts]
        return "x".join(p.strip().upper() for p in parts), block_diagonal(blocks)
    if isinstance(spec, tuple) and len(spec) == 2 and isinstance(spec[0], str):
        family, rank = spec
        return f"{family.upper()}{rank}", cartan_matrix(family, rank)
    cartan = validate_cartan(spec)
    return "cartan" + repr([list(r) for r in cartan]).replace(" ", ""), cartan


def build_root_system(spec, realization: str = "standard", n: int | None = None) -> RootSystem:
    """Construct a root system.

    ``spec`` is a label (``"A2"``, ``"G2"``, ``"A1xA1"``), a ``(family, rank)``
    pair, or an explicit Cartan matrix. ``realization="gl_n"`` requires type
    ``A_{n-1}``; ``n`` defaults to ``rank + 1``.

    >>> rs = build_root_system("A2")
    >>> len(rs.roots), rs.n_positive
    (6, 3)
    """
    label, cartan = _spec_to_cartan(spec)
    cartan = validate_cartan(cartan)
    rank = len(cartan)
    coeffs = _root_coefficients(cartan)
    d = symmetrizer(cartan)

    if realization == "standard":
        form = tuple(tuple(d[i] * cartan[i][j] for j in range(rank)) for i in range(rank))
        to_ambient = lambda c: tuple(Fraction(x) for x in c)  # noqa: E731
    elif realization == "gl_n":
        if cartan != cartan_matrix("A", rank):
            raise CartanError("gl_n realization requires a Cartan matrix of type A")
        n = rank + 1 if n is None else int(n)
        if n != rank + 1:
            raise CartanError(f"gl_{n} realization needs rank {n - 1}, got {rank}")
        form = la.identity(n)

        def to_ambient(c):
            v = [Fraction(0)] * n
            for i, ci in enumerate(c):
                v[i] += ci
                v[i + 1] -= ci
            return tuple(v)

        label = f"gl_{n}"
    else:
        raise CartanError(f"unknown realization {realization!r}; expected one of {REALIZATIONS}")

    roots = tuple(to_ambient(c) for c in coeffs)
    simple = tuple(to_ambient(tuple(int(i == j) for j in range(rank))) for i in range(rank))
    return RootSystem(
        label=label,
        cartan=cartan,
        realization=realization,
        simple_roots=simple,
        roots=roots,
        coefficients=tuple(coeffs),
        form=form,
    )


def gl(n: int) -> RootSystem:
    """Root system of ``GL_n`` in its defining ``n``-dimensional realization."""
    if n < 2:
        raise CartanError("gl_n needs n >= 2")
    return build_root_system(("A", n - 1), realization="gl_n", n=n)


@dataclass(frozen=True)
class ParabolicDatum:
    """Root data of the standard parabolic attached to a set ``F`` of simple indices."""

    F: frozenset
    sigma_F: frozenset
    n_F: frozenset
    n_MF: frozenset
    a_F_dim: int
    a_MF_dim: int


def standard_parabolic(rs: RootSystem, F) -> ParabolicDatum:
    F = frozenset(int(i) for i in F)
    bad = [i for i in F if not 1 <= i <= rs.rank]
    if bad:
        raise IndexError(f"simple indices {sorted(bad)} out of range 1..{rs.rank}")
    inside = {i - 1 for i in F}
    sigma = frozenset(
        r for r, c in zip(rs.roots, rs.coefficients)
        if all(ci == 0 for k, ci in enumerate(c) if k not in inside)
    )
    positive = set(rs.positive_roots)
    span_dim = la.rank(rs.roots)
    levi_dim = la.rank(sorted(sigma)) if sigma else 0
    return ParabolicDatum(
        F=F,
        sigma_F=sigma,
        n_F=frozenset(positive - sigma),
        n_MF=frozenset(positive & sigma),
        a_F_dim=span_dim - levi_dim,
        a_MF_dim=levi_dim,
    )


def standard_parabolics(rs: RootSystem) -> list:
    """All ``2**rank`` standard parabolic data, ordered by ``F`` size then content."""
    idx = range(1, rs.rank + 1)
    subsets = itertools.chain.from_iterable(itertools.combinations(idx, k) for k in range(rs.rank + 1))
    return [standard_parabolic(rs, F) for F in subsets]
