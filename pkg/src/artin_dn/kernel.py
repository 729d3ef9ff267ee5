"""
The fold pi: A[D_n] -> A[A_{n-1}], its kernel, and lifting endomorphisms of the central
quotient A_Z[D_n] = A[D_n] / <Delta^kappa> back to A[D_n].
"""
from __future__ import annotations

import dataclasses
from typing import Sequence

from .coxeter import CoxType
from .garside import (
    center_membership,
    delta_word,
    equal_mod_center,
    normalize,
)
from .homs import HomSpec, apply, failing_relations, make_pi
from .words import ArtinWord


def _check_d(word: ArtinWord) -> None:
    if not word.typ.is_d:
        raise TypeError(f"expected a word over A[D_n], got {word.typ}")


def in_kernel_pi(word: ArtinWord) -> bool:
    _check_d(word)
    return normalize(apply(make_pi(word.typ.rank), word)).is_identity()


@dataclasses.dataclass(frozen=True)
class KernelGeneratorList:
    n: int
    gens: tuple[ArtinWord, ...]


def kernel_generators(n: int) -> KernelGeneratorList:
    """
    v_{n-1} = t_{n-1}^-1 t_n and v_{j} = t_j v_{j+1} t_j^-1 v_{j+1}^-1 for j = n-2, ..., 1.

    Word lengths grow like 2^(n-j), so v_1 has 2^n - 2 letters.
    """
    if n < 4:
        raise ValueError(f"rank n must be >= 4, got {n}")
    d = CoxType.D(n)
    v = ArtinWord(d, (-(n - 1), n))
    out = [v]
    for j in range(n - 2, 0, -1):
        t = ArtinWord(d, (j,))
        v = t * v * t.inverse() * v.inverse()
        out.append(v)
    return KernelGeneratorList(n, tuple(reversed(out)))


def central_defect(lhs: ArtinWord, rhs: ArtinWord) -> int | None:
    """k with lhs = rhs Delta^(kappa k), or None if rhs^-1 lhs is not central."""
    _check_d(lhs)
    if lhs.typ != rhs.typ:
        raise TypeError(f"type mismatch: {lhs.typ} vs {rhs.typ}")
    return center_membership(normalize(rhs.inverse() * lhs))


@dataclasses.dataclass(frozen=True)
class LiftInput:
    """Candidate images g_1..g_n in A[D_n] of the generators of A_Z[D_n]."""
    n: int
    candidate_images: tuple[ArtinWord, ...]

    def __post_init__(self):
        images = tuple(self.candidate_images)
        object.__setattr__(self, "candidate_images", images)
        d = CoxType.D(self.n)
        if len(images) != self.n:
            raise ValueError(f"need {self.n} candidate images, got {len(images)}")
        if any(w.typ != d for w in images):
            raise TypeError(f"candidate images must be words over {d}")

    @classmethod
    def from_hom(cls, h: HomSpec) -> LiftInput:
        if h.source != h.target or not h.source.is_d:
            raise TypeError("lift input must be an endomorphism of A[D_n]")
        return cls(h.source.rank, h.images)

    def to_hom(self) -> HomSpec:
        d = CoxType.D(self.n)
        return HomSpec(d, d, self.candidate_images, "candidate")


class LiftError(Exception):
    """
    The candidate does not define an endomorphism of A_Z[D_n].

    kind "defect": a braid relation fails by a non-central element;
    kind "relations": after correction some relation of D_n still fails.
    """

    def __init__(self, kind: str, relation: tuple[int, int, int], message: str):
        super().__init__(message)
        self.kind = kind
        self.relation = relation


@dataclasses.dataclass(frozen=True)
class Lift:
    hom: HomSpec
    corrections: tuple[int, ...]  # k_i with u_i = g_i Delta^(kappa k_i); k_1 = 0


def lift_with_corrections(data: LiftInput) -> Lift:
    n = data.n
    d = CoxType.D(n)
    g = data.candidate_images
    central = delta_word(d) ** d.kappa
    u: list[ArtinWord] = [g[0]] + [None] * (n - 1)  # type: ignore[list-item]
    ks = [0] * n

    def adjust(i: int, prev: int) -> None:
        # make u_prev u_i u_prev = u_i u_prev u_i by a central correction of g_i
        a, gi = u[prev - 1], g[i - 1]
        k = central_defect(a * gi * a, gi * a * gi)
        if k is None:
            raise LiftError(
                "defect",
                (prev, i, 3),
                f"t{prev} t{i} t{prev} = t{i} t{prev} t{i} fails modulo the center",
            )
        ks[i - 1] = k
        u[i - 1] = gi * central ** k if k else gi

    for i in range(2, n - 1):
        adjust(i, i - 1)
    adjust(n - 1, n - 2)
    adjust(n, n - 2)

    hom = HomSpec(d, d, tuple(u), "lift")
    bad = failing_relations(hom)
    if bad:
        a, b, m = bad[0]
        kind = "braid" if m == 3 else "commuting"
        raise LiftError("relations", bad[0], f"{kind} relation between t{a} and t{b} fails after correction")
    return Lift(hom, tuple(ks))


def lift_endomorphism(data: LiftInput) -> HomSpec:
    """
    Lift an endomorphism of A_Z[D_n], given by arbitrary preimages g_i of its generator images,
    to an endomorphism of A[D_n].

    u_1 = g_1; then u_i = g_i Delta^(kappa k_i) along the chain t_1 - ... - t_{n-2}, and u_{n-1},
    u_n each corrected against u_{n-2}. Commuting relations are checked, never corrected.
    Raises LiftError when the candidate is not an endomorphism of the quotient.
    """
    return lift_with_corrections(data).hom


def lift_commutes_with_projection(h: HomSpec, data: LiftInput) -> bool:
    """True iff h(t_i) and g_i agree modulo the center for every i."""
    if h.source != CoxType.D(data.n) or h.target != h.source:
        raise TypeError("lift and input have different ranks")
    return all(equal_mod_center(a, b) for a, b in zip(h.images, data.candidate_images))


def perturb(data: LiftInput, shifts: Sequence[int]) -> LiftInput:
    """Multiply each g_i by Delta^(kappa shifts[i]); the result has the same image in A_Z[D_n]."""
    d = CoxType.D(data.n)
    central = delta_word(d) ** d.kappa
    return LiftInput(data.n, tuple(g * central ** k if k else g for g, k in zip(data.candidate_images, shifts)))

