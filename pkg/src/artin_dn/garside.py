"""
Left-greedy Garside normal form for A[A_{n-1}] and A[D_n].

Every element is written uniquely as Delta^k x_1 ... x_l where the x_i are simple elements
(images tau(w) of Coxeter elements), none equal to 1 or Delta, and each adjacent pair is
left-weighted: L(x_{i+1}) is contained in R(x_i). Two words are equal in the group iff their
normal forms coincide.

Normalization scans the word left to right. A positive simple element is appended to the
current form by one right-to-left pass of letter transfers. A negative letter t^-1 is rewritten
as Delta^-1 tau(w_S t); moving Delta^-1 to the front conjugates every factor by w_S, which the
builder tracks lazily as a parity instead of rewriting the factors.
"""
from __future__ import annotations

import dataclasses
import functools
from typing import Iterable

from .coxeter import (
    CoxElement,
    CoxType,
    Family,
    _diagram_auto,
    _generator,
    _identity,
    _inv,
    _lmul_gen,
    _length,
    _longest,
    _longest_in,
    _mul,
    _reduced_word,
    _right_descents,
    _rmul_gen,
)
from .words import ArtinWord, format_letters


@dataclasses.dataclass(frozen=True)
class _Tables:
    typ: CoxType
    is_d: bool
    one: tuple[int, ...]
    w0: tuple[int, ...]
    w0_length: int
    gens: tuple[tuple[int, ...], ...]       # gens[i] = s_i, index 0 unused
    neg_simple: tuple[tuple[int, ...], ...]  # neg_simple[i] = w_S s_i
    phi_trivial: bool                        # conjugation by w_S is the identity


@functools.lru_cache(maxsize=None)
def _tables(typ: CoxType) -> _Tables:
    is_d = typ.is_d
    w0 = _longest(typ)
    gens = (None,) + tuple(_generator(typ, i) for i in typ.generators)
    return _Tables(
        typ=typ,
        is_d=is_d,
        one=_identity(typ.n),
        w0=w0,
        w0_length=_length(w0, is_d),
        gens=gens,  # type: ignore[arg-type]
        neg_simple=(None,) + tuple(_mul(w0, g) for g in gens[1:]),  # type: ignore[arg-type]
        phi_trivial=all(_diagram_auto(typ, i) == i for i in typ.generators),
    )


def _left_weight(u: tuple[int, ...], v: tuple[int, ...], is_d: bool) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """
    Move letters from the front of v to the end of u until (u, v) is left-weighted.

    Works on height vectors (see coxeter._height) of u and v^-1: moving s turns u into u s and
    v^-1 into v^-1 s, both position swaps, and s is a right descent of w iff
    h[s-1] < h[s] (or h[n-2] + h[n-1] < 0 for the fork generator of D_n).
    Returns the inputs themselves when nothing moves.
    """
    n = len(u)
    top = n + 1
    hu = [top - x if x > 0 else -(top + x) for x in u]
    hv = [top - x if x > 0 else -(top + x) for x in _inv(v)]
    last = n - 1 if not is_d else n
    moved = False
    while True:
        for s in range(1, last + 1):
            if s < n:
                a, b = s - 1, s
                if hv[a] < hv[b] and not hu[a] < hu[b]:
                    hu[a], hu[b] = hu[b], hu[a]
                    hv[a], hv[b] = hv[b], hv[a]
                    break
            elif hv[n - 2] + hv[n - 1] < 0 and not hu[n - 2] + hu[n - 1] < 0:
                hu[n - 2], hu[n - 1] = -hu[n - 1], -hu[n - 2]
                hv[n - 2], hv[n - 1] = -hv[n - 1], -hv[n - 2]
                break
        else:
            break
        moved = True
    if not moved:
        return u, v
    u2 = tuple(top - h if h > 0 else -(top + h) for h in hu)
    v2 = _inv(tuple(top - h if h > 0 else -(top + h) for h in hv))
    return u2, v2


class _Builder:
    """
    Mutable normal form under right multiplication.

    Represents Delta^delta * phi^twist(f_1) ... phi^twist(f_l) where phi is conjugation by w_S.
    """

    def __init__(self, typ: CoxType, delta: int = 0, factors: Iterable[tuple[int, ...]] = ()):
        self.t = _tables(typ)
        self.delta = delta
        self.factors = list(factors)
        self.twist = 0

    def _phi(self, x: tuple[int, ...]) -> tuple[int, ...]:
        w0 = self.t.w0
        return _mul(w0, _mul(x, w0))

    def push_delta(self, m: int) -> None:
        self.delta += m
        if m % 2 and not self.t.phi_trivial:
            self.twist ^= 1

    def push_simple(self, c: tuple[int, ...]) -> None:
        t = self.t
        if c == t.one:
            return
        if self.twist:
            c = self._phi(c)
        f = self.factors
        f.append(c)
        j = len(f) - 1
        while j > 0:
            a, b = _left_weight(f[j - 1], f[j], t.is_d)
            if a is f[j - 1]:
                break
            f[j - 1], f[j] = a, b
            j -= 1
        while f and f[-1] == t.one:
            f.pop()
        lead = 0
        while lead < len(f) and f[lead] == t.w0:
            lead += 1
        if lead:
            del f[:lead]
            self.delta += lead

    def result(self) -> NormalForm:
        typ = self.t.typ
        f = self.factors
        if self.twist:
            f = [self._phi(x) for x in f]
        return NormalForm(typ, self.delta, tuple(CoxElement._raw(typ, x) for x in f))


@dataclasses.dataclass(frozen=True)
class NormalForm:
    """Delta^delta_power * tau(factors[0]) * ... * tau(factors[-1]), left-weighted."""
    typ: CoxType
    delta_power: int = 0
    factors: tuple[CoxElement, ...] = ()

    @classmethod
    def identity(cls, typ: CoxType) -> NormalForm:
        return cls(typ, 0, ())

    def _builder(self) -> _Builder:
        return _Builder(self.typ, self.delta_power, (x.images for x in self.factors))

    def __mul__(self, other: NormalForm) -> NormalForm:
        return multiply(self, other)

    def __pow__(self, m: int) -> NormalForm:
        return power(self, m)

    def inverse(self) -> NormalForm:
        return inverse(self)

    def is_identity(self) -> bool:
        return self.delta_power == 0 and not self.factors

    def exponent_sum(self) -> int:
        t = _tables(self.typ)
        return self.delta_power * t.w0_length + sum(_length(x.images, t.is_d) for x in self.factors)

    def to_word(self) -> ArtinWord:
        """A word representing this element: Delta^k followed by the factors' reduced words."""
        t = _tables(self.typ)
        delta = _reduced_word(t.w0, t.is_d)
        k = self.delta_power
        letters = delta * k if k >= 0 else tuple(-x for x in reversed(delta)) * (-k)
        for x in self.factors:
            letters += _reduced_word(x.images, t.is_d)
        return ArtinWord._raw(self.typ, letters)

    def render(self) -> str:
        """`D^<k> | <factor>.<factor>...`, each factor as its smallest-descent reduced word."""
        t = _tables(self.typ)
        parts = [format_letters(self.typ, _reduced_word(x.images, t.is_d)) for x in self.factors]
        return f"D^{self.delta_power} | " + ".".join(parts)

    def __str__(self) -> str:
        return self.render()


def is_normal(nf: NormalForm) -> bool:
    """Check the NormalForm invariants: no trivial or Delta factors, every pair left-weighted."""
    t = _tables(nf.typ)
    raw = [x.images for x in nf.factors]
    if any(x == t.one or x == t.w0 for x in raw):
        return False
    return all(
        _right_descents(_inv(b), t.is_d) <= _right_descents(a, t.is_d) for a, b in zip(raw, raw[1:])
    )


def normalize(word: ArtinWord) -> NormalForm:
    """
    Normal form of a word.

    Maximal runs of same-sign letters whose product stays reduced are pushed as one simple
    element: a positive run x is pushed as tau(x), a negative run x_1^-1 ... x_k^-1 as
    Delta^-1 tau(w_S y^-1) with y = x_k ... x_1.
    """
    t = _tables(word.typ)
    is_d = t.is_d
    b = _Builder(word.typ)
    run = t.one
    sign = 0
    for x in word.letters:
        s = x if x > 0 else -x
        if x > 0:
            if sign > 0 and s not in _right_descents(run, is_d):
                run = _rmul_gen(run, s, is_d)
                continue
        elif sign < 0 and s not in _right_descents(_inv(run), is_d):
            run = _lmul_gen(run, s, is_d)
            continue
        _flush(b, run, sign)
        run, sign = t.gens[s], (1 if x > 0 else -1)
    _flush(b, run, sign)
    return b.result()


def _flush(b: _Builder, run: tuple[int, ...], sign: int) -> None:
    if sign > 0:
        b.push_simple(run)
    elif sign < 0:
        b.push_delta(-1)
        b.push_simple(_mul(b.t.w0, _inv(run)))


def _check_same(u, v) -> None:
    if u.typ != v.typ:
        raise TypeError(f"type mismatch: {u.typ} vs {v.typ}")


def multiply(u: NormalForm, v: NormalForm) -> NormalForm:
    _check_same(u, v)
    b = u._builder()
    b.push_delta(v.delta_power)
    for x in v.factors:
        b.push_simple(x.images)
    return b.result()


def inverse(u: NormalForm) -> NormalForm:
    t = _tables(u.typ)
    b = _Builder(u.typ)
    for x in reversed(u.factors):
        b.push_delta(-1)
        b.push_simple(_mul(t.w0, _inv(x.images)))
    b.push_delta(-u.delta_power)
    return b.result()


def power(u: NormalForm, m: int) -> NormalForm:
    base = u if m >= 0 else inverse(u)
    b = _Builder(u.typ)
    for _ in range(abs(m)):
        b.push_delta(base.delta_power)
        for x in base.factors:
            b.push_simple(x.images)
    return b.result()


def equal(u: ArtinWord, v: ArtinWord) -> bool:
    """Solve the word problem: do u and v represent the same element?"""
    _check_same(u, v)
    return normalize(u) == normalize(v)


def tau(w: CoxElement) -> ArtinWord:
    """The positive lift of w read off its smallest-descent reduced word."""
    return ArtinWord._raw(w.typ, _reduced_word(w.images, w.typ.is_d))


def relation_sides(typ: CoxType) -> list[tuple[ArtinWord, ArtinWord]]:
    """Both sides Pi(a,b,m) = Pi(b,a,m) of every defining relation, a < b."""
    from .words import relation_word

    return [(relation_word(typ, a, b, m), relation_word(typ, b, a, m)) for a, b, m in typ.pairs()]


def garside_element(typ: CoxType) -> NormalForm:
    return NormalForm(typ, 1, ())


def delta_word(typ: CoxType) -> ArtinWord:
    """tau(w_S) as a word."""
    t = _tables(typ)
    return ArtinWord._raw(typ, _reduced_word(t.w0, t.is_d))


def explicit_delta_word(typ: CoxType) -> ArtinWord:
    """
    The classical product formula for Delta.

    A_{n-1}: (s_{n-1} ... s_1)(s_{n-1} ... s_2) ... (s_{n-1} s_{n-2}) s_{n-1}
    D_n:     (t_1 ... t_{n-2} t_{n-1} t_n t_{n-2} ... t_1) ... (t_{n-2} t_{n-1} t_n t_{n-2}) (t_{n-1} t_n)
    """
    r = typ.rank
    letters: list[int] = []
    if typ.family is Family.A:
        for low in range(1, r + 1):
            letters.extend(range(r, low - 1, -1))
    else:
        for k in range(1, r - 1):
            letters.extend(range(k, r - 1))
            letters.extend((r - 1, r))
            letters.extend(range(r - 2, k - 1, -1))
        letters.extend((r - 1, r))
    return ArtinWord._raw(typ, tuple(letters))


def parabolic_delta_word(typ: CoxType, gens: Iterable[int]) -> ArtinWord:
    """Delta_X = tau(w_X) for a nonempty set X of generators."""
    subset = frozenset(typ.check_index(i) for i in gens)
    if not subset:
        raise ValueError("parabolic generating set must be nonempty")
    return ArtinWord._raw(typ, _reduced_word(_longest_in(typ, subset), typ.is_d))


def delta_y_word(rank: int) -> ArtinWord:
    """Delta_Y in A[D_n] for Y = {t_1, ..., t_{n-1}}."""
    return parabolic_delta_word(CoxType.D(rank), range(1, rank))


def delta_power_word(typ: CoxType, k: int) -> ArtinWord:
    return delta_word(typ) ** k


def exponent_sum(word: ArtinWord) -> int:
    return word.exponent_sum()


def center_membership(u: NormalForm) -> int | None:
    """Return q if u = Delta^(kappa q), else None."""
    kappa = u.typ.kappa
    if u.factors or u.delta_power % kappa:
        return None
    return u.delta_power // kappa


def equal_mod_center(u: ArtinWord, v: ArtinWord) -> bool:
    """Equality in A_Z[D_n] = A[D_n] / <Delta^kappa>."""
    _check_same(u, v)
    if not u.typ.is_d:
        raise ValueError("the central quotient is only provided for type D")
    return center_membership(normalize(u * v.inverse())) is not None


def delta_square_product_sides(rank: int) -> tuple[ArtinWord, ArtinWord]:
    """
    Delta[A_rank]^2 and the product
    (s_1 ... s_{r-1} s_r^2 s_{r-1} ... s_1)(s_2 ... s_r^2 ... s_2) ... (s_{r-1} s_r^2 s_{r-1}) s_r^2.
    """
    typ = CoxType.A(rank)
    letters: list[int] = []
    for k in range(1, rank + 1):
        letters.extend(range(k, rank))
        letters.extend((rank, rank))
        letters.extend(range(rank - 1, k - 1, -1))
    return delta_word(typ) ** 2, ArtinWord._raw(typ, tuple(letters))

