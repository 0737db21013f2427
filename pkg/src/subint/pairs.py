"""Extensions of finite-dimensional algebras and the finite view of any extension.

Every decision procedure in :mod:`subint.predicates` works on a :class:`FinitePair`:
an ambient finite algebra with two nested subalgebras ``R subset S``.  For a curve
extension ``A subset B`` the ambient is the frame ``k[t]/(f)`` (``f`` the conductor of
``A``), which is harmless because ``f k[t]`` lies in ``A``.
"""
from __future__ import annotations

import itertools

from .algebra import AlgebraMap, FinDimAlgebra, check_size
from .curves import Extension
from .errors import AlgebraError
from .linalg import Subspace
from .poly import Poly


class AlgebraPair:
    """An injective unital map ``R -> S`` of finite-dimensional algebras."""

    kind = "findim"

    def __init__(self, R: FinDimAlgebra, S: FinDimAlgebra, phi: AlgebraMap | None = None,
                 name: str = ""):
        if R.field != S.field:
            raise ValueError("algebras over different fields")
        if phi is None:
            if R.dim == 1:
                phi = AlgebraMap(R, S, images=[S.unity])
            else:
                raise ValueError("an inclusion map is required")
        phi.verify()
        if not phi.is_injective():
            raise AlgebraError("R -> S is not injective")
        self.R, self.S, self.phi = R, S, phi
        self.A, self.B = R, S
        self.field = R.field
        self.name = name

    def complement_basis(self) -> list[tuple]:
        return self.phi.image_space().complement_basis(Subspace(self.field, self.S.dim,
                                                                _identity(self.field, self.S.dim)))

    def codimension(self) -> int:
        return self.S.dim - self.R.dim

    def __repr__(self):
        return f"AlgebraPair({self.name or ''}: {self.R.name} -> {self.S.name})"


def _identity(field, n):
    return [tuple(field.one if i == j else field.zero for j in range(n)) for i in range(n)]


class FinitePair:
    """``R subset S`` as subspaces of a finite algebra ``ambient``."""

    def __init__(self, ambient: FinDimAlgebra, R: Subspace, S: Subspace, lift=None,
                 render=None, origin=None):
        self.ambient = ambient
        self.field = ambient.field
        self.R, self.S = R, S
        self._lift = lift
        self._render = render
        self.origin = origin

    def lift(self, v):
        return self._lift(v) if self._lift else v

    def render(self, v) -> str:
        if self._render:
            return self._render(v)
        return self.ambient.render(v)

    @staticmethod
    def sort_key(v):
        top = max((i for i, c in enumerate(v) if c), default=-1)
        return (top, tuple(reversed(v)))

    def span_elements(self, space: Subspace, cutoff: int | None = None) -> list[tuple]:
        """All vectors of ``space``, lowest degree first then lexicographic."""
        f = self.field
        basis = space.basis()
        check_size(f, len(basis), "enumerating the finite part of the extension", cutoff)
        n = self.ambient.dim
        out = []
        for coeffs in itertools.product(list(f.elements()), repeat=len(basis)):
            v = [f.zero] * n
            for c, b in zip(coeffs, basis):
                if c:
                    v = [f.add(x, f.mul(c, y)) for x, y in zip(v, b)]
            out.append(tuple(v))
        out.sort(key=self.sort_key)
        return out

    def adjoin(self, C: Subspace, b) -> Subspace:
        """``C + C b`` (a subalgebra when ``b^2`` lies in ``C``)."""
        T = self.ambient
        return C.extend([T.mul(c, b) for c in C.basis()] + [b])

    def generated(self, C: Subspace, b) -> Subspace:
        """The subalgebra ``C[b]``."""
        T = self.ambient
        cur = C.extend([T.unity, b])
        while True:
            nxt = cur.extend([T.mul(x, y) for x in cur.basis() for y in cur.basis()])
            if nxt.dim == cur.dim:
                return cur
            cur = nxt


def finite_pair(E) -> FinitePair:
    if isinstance(E, FinitePair):
        return E
    if isinstance(E, AlgebraPair):
        S = E.S
        full = Subspace(E.field, S.dim, _identity(E.field, S.dim))
        return FinitePair(S, E.phi.image_space(), full, origin=E)
    if isinstance(E, Extension):
        fr = E.frame
        field = E.field
        return FinitePair(fr.T, fr.image_space(E.A), fr.image_space(E.B),
                          lift=fr.lift, render=lambda v: Poly.from_vector(field, v).render(),
                          origin=E)
    raise TypeError(f"not an extension: {E!r}")

