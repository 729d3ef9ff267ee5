"""
Integer-matrix shadow of the Dehn twist representations on first homology.

Each standard generator acts as the transvection x -> x + <x, e> e along its curve class e,
where <x, y> = x^T J y for a skew intersection form J read off the Coxeter graph. Matrices are
numpy arrays of dtype object so entries are exact Python ints.

Sign convention: J[i, i+1] = +1 along the chain a_1, ..., a_{n-1} (resp. d_1, ..., d_{n-1}) and
J[n-2, n] = +1 for the second branch d_n of the D_n fork (1-based indices).
"""
from __future__ import annotations

import dataclasses

import numpy as np

from .coxeter import CoxType, Family
from .homs import make_pi
from .words import ArtinWord


def _check_rank(n: int) -> None:
    if n < 4:
        raise ValueError(f"rank n must be >= 4, got {n}")


def identity_matrix(dim: int) -> np.ndarray:
    m = np.zeros((dim, dim), dtype=object)
    for i in range(dim):
        m[i, i] = 1
    return m


@dataclasses.dataclass(frozen=True, eq=False)
class SkewForm:
    dim: int
    J: np.ndarray

    def __post_init__(self):
        J = np.array(self.J, dtype=object)
        if J.shape != (self.dim, self.dim):
            raise ValueError(f"form must be {self.dim}x{self.dim}, got {J.shape}")
        if not (J.T == -J).all():
            raise ValueError("form is not antisymmetric")
        object.__setattr__(self, "J", J)

    def pair(self, x, y) -> int:
        return int(np.asarray(x, dtype=object) @ self.J @ np.asarray(y, dtype=object))

    def rank(self) -> int:
        return int(np.linalg.matrix_rank(self.J.astype(float)))


def intersection_form(typ: CoxType, fork_sign: int = 1) -> SkewForm:
    """
    Skew form on the curve classes of the generators of `typ`.

    `fork_sign` sets J[n-2, n] for type D; anything but +1 breaks compatibility with the
    forgetful map and is only there to exercise check_commuting_square.
    """
    r = typ.rank
    J = np.zeros((r, r), dtype=object)
    chain_end = r if typ.family is Family.A else r - 1
    for i in range(chain_end - 1):
        J[i, i + 1], J[i + 1, i] = 1, -1
    if typ.is_d:
        J[r - 3, r - 1], J[r - 1, r - 3] = fork_sign, -fork_sign
    return SkewForm(r, J)


def transvection_matrix(form: SkewForm, index: int) -> np.ndarray:
    """M with M x = x + <x, e> e for e the basis vector `index` (1-based)."""
    if not 1 <= index <= form.dim:
        raise IndexError(f"basis index {index} out of range 1..{form.dim}")
    k = index - 1
    M = identity_matrix(form.dim)
    # <x, e_k> = sum_j x_j J[j, k]; that amount is added to coordinate k
    M[k, :] += form.J[:, k]
    return M


@dataclasses.dataclass(frozen=True, eq=False)
class TransvectionRep:
    typ: CoxType
    form: SkewForm
    gen_matrices: tuple[np.ndarray, ...]

    @property
    def dim(self) -> int:
        return self.form.dim

    def matrix(self, i: int) -> np.ndarray:
        return self.gen_matrices[self.typ.check_index(i) - 1]


def transvection_rep(typ: CoxType, fork_sign: int = 1) -> TransvectionRep:
    form = intersection_form(typ, fork_sign)
    return TransvectionRep(typ, form, tuple(transvection_matrix(form, i) for i in typ.generators))


def _inverse_transvection(form: SkewForm, index: int) -> np.ndarray:
    k = index - 1
    M = identity_matrix(form.dim)
    M[k, :] -= form.J[:, k]
    return M


def rep_apply(rep: TransvectionRep, word: ArtinWord) -> np.ndarray:
    """Product of generator matrices along the word (leftmost letter is the leftmost factor)."""
    if word.typ != rep.typ:
        raise TypeError(f"representation of {rep.typ} applied to a word over {word.typ}")
    inverses = [_inverse_transvection(rep.form, i) for i in rep.typ.generators]
    M = identity_matrix(rep.dim)
    for x in word.letters:
        M = M @ (rep.gen_matrices[x - 1] if x > 0 else inverses[-x - 1])
    return M


def preserves_form(M: np.ndarray, form: SkewForm) -> bool:
    return bool((M.T @ form.J @ M == form.J).all())


def theta_star(n: int) -> np.ndarray:
    """
    The (n-1) x n matrix of the forgetful map on homology: d_i -> a_i for i <= n-1, d_n -> a_{n-1}.
    """
    _check_rank(n)
    T = np.zeros((n - 1, n), dtype=object)
    for i in range(n - 1):
        T[i, i] = 1
    T[n - 2, n - 1] = 1
    return T


def check_commuting_square(n: int, fork_sign: int = 1) -> bool:
    """theta_* rho_D(t_i) = rho_A(pi(t_i)) theta_* for every generator t_i."""
    _check_rank(n)
    rep_d = transvection_rep(CoxType.D(n), fork_sign)
    rep_a = transvection_rep(CoxType.A(n - 1))
    pi = make_pi(n)
    T = theta_star(n)
    for i in range(1, n + 1):
        lhs = T @ rep_d.matrix(i)
        rhs = rep_apply(rep_a, pi.image(i)) @ T
        if not (lhs == rhs).all():
            return False
    return True


def relation_soundness(rep: TransvectionRep) -> bool:
    """Braid relation along every edge, commutation for every non-edge."""
    for a, b, m in rep.typ.pairs():
        A, B = rep.matrix(a), rep.matrix(b)
        if m == 3:
            ok = (A @ B @ A == B @ A @ B).all()
        else:
            ok = (A @ B == B @ A).all()
        if not ok:
            return False
    return True


def format_matrix(M: np.ndarray) -> str:
    """Row-major integer grid, one row per line, entries right-aligned."""
    cells = [[str(int(x)) for x in row] for row in M]
    width = max((len(c) for row in cells for c in row), default=1)
    return "\n".join(" ".join(c.rjust(width) for c in row) for row in cells)
