"""
Finite Coxeter groups W[A_{n-1}] and W[D_n] as (signed) permutations.

An element is stored in one-line notation as the tuple (w(1), ..., w(n)). For type D the
entries are signed and w(-i) = -w(i) is implied. Composition is right to left:
(uv)(i) = u(v(i)).

Generators:
- type A_{n-1}: s_i = (i, i+1) for 1 <= i <= n-1;
- type D_n: t_i = (i, i+1) for 1 <= i <= n-1, and t_n sends n-1 to -n and n to -(n-1).

The graph of D_n is the chain t_1 - ... - t_{n-2} with t_{n-1} and t_n both attached to t_{n-2}.

The functions prefixed with an underscore work on raw tuples and are what the normal form
code calls in its inner loops; CoxElement is the checked public wrapper.
"""
from __future__ import annotations

import dataclasses
import enum
import functools
import itertools
from typing import Iterable, Iterator, Sequence


class Family(enum.Enum):
    A = "A"
    D = "D"


@dataclasses.dataclass(frozen=True)
class CoxType:
    """
    A Coxeter type A_rank or D_rank.

    `rank` is the number of standard generators. The permutation degree `n` is rank + 1 for
    type A and rank for type D, so W[A_{n-1}] is CoxType(Family.A, n - 1).
    """
    family: Family
    rank: int

    def __post_init__(self):
        if not isinstance(self.family, Family):
            object.__setattr__(self, "family", Family(self.family))
        if self.family is Family.A and self.rank < 1:
            raise ValueError(f"type A needs rank >= 1, got {self.rank}")
        if self.family is Family.D and self.rank < 4:
            raise ValueError(f"type D needs rank >= 4, got {self.rank}")

    @staticmethod
    def A(rank: int) -> CoxType:
        return CoxType(Family.A, rank)

    @staticmethod
    def D(rank: int) -> CoxType:
        return CoxType(Family.D, rank)

    @staticmethod
    def parse(designator: str) -> CoxType:
        """
        >>> CoxType.parse("D6")
        CoxType(family=<Family.D: 'D'>, rank=6)
        """
        text = designator.strip()
        if len(text) < 2 or text[0] not in "AD" or not text[1:].isdigit():
            raise ValueError(f"bad group designator {designator!r}; expected A<k> or D<n>")
        return CoxType(Family(text[0]), int(text[1:]))

    def __str__(self) -> str:
        return f"{self.family.value}{self.rank}"

    @property
    def is_d(self) -> bool:
        return self.family is Family.D

    @property
    def n(self) -> int:
        """Permutation degree."""
        return self.rank + 1 if self.family is Family.A else self.rank

    @property
    def letter(self) -> str:
        return "s" if self.family is Family.A else "t"

    @property
    def generators(self) -> range:
        return range(1, self.rank + 1)

    @property
    def kappa(self) -> int:
        """Exponent with Z(A) = <Delta^kappa>: 1 for D_n with n even, else 2."""
        return 1 if self.family is Family.D and self.rank % 2 == 0 else 2

    def check_index(self, i: int) -> int:
        if not 1 <= i <= self.rank:
            raise IndexError(f"generator index {i} out of range for {self}")
        return i

    def coxeter_m(self, i: int, j: int) -> int:
        """The Coxeter matrix entry m(i, j)."""
        if i == j:
            return 1
        return 3 if j in self.neighbours(i) else 2

    def neighbours(self, i: int) -> tuple[int, ...]:
        r = self.rank
        if self.family is Family.A:
            return tuple(j for j in (i - 1, i + 1) if 1 <= j <= r)
        if i <= r - 3:
            return tuple(j for j in (i - 1, i + 1) if j >= 1)
        if i == r - 2:
            return tuple(j for j in (i - 1, r - 1, r) if j >= 1)
        return (r - 2,)

    def edges(self) -> list[tuple[int, int]]:
        """Pairs i < j joined in the Coxeter graph (m = 3)."""
        return [(i, j) for i in self.generators for j in self.neighbours(i) if i < j]

    def pairs(self) -> list[tuple[int, int, int]]:
        """All (i, j, m(i, j)) with i < j."""
        return [(i, j, self.coxeter_m(i, j)) for i, j in itertools.combinations(self.generators, 2)]


# ---------------------------------------------------------------------------
# raw tuple operations


def _identity(n: int) -> tuple[int, ...]:
    return tuple(range(1, n + 1))


def _mul(u: Sequence[int], v: Sequence[int]) -> tuple[int, ...]:
    return tuple(u[x - 1] if x > 0 else -u[-x - 1] for x in v)


def _inv(w: Sequence[int]) -> tuple[int, ...]:
    out = [0] * len(w)
    for i, x in enumerate(w, 1):
        if x > 0:
            out[x - 1] = i
        else:
            out[-x - 1] = -i
    return tuple(out)


def _rmul_gen(w: tuple[int, ...], i: int, is_d: bool) -> tuple[int, ...]:
    """w * s_i: acts on positions."""
    n = len(w)
    lst = list(w)
    if is_d and i == n:
        lst[n - 2], lst[n - 1] = -w[n - 1], -w[n - 2]
    else:
        lst[i - 1], lst[i] = w[i], w[i - 1]
    return tuple(lst)


def _lmul_gen(w: tuple[int, ...], i: int, is_d: bool) -> tuple[int, ...]:
    """s_i * w: acts on values."""
    n = len(w)
    if is_d and i == n:
        swap = {n - 1: -n, n: -(n - 1), -(n - 1): n, -n: n - 1}
    else:
        swap = {i: i + 1, i + 1: i, -i: -(i + 1), -(i + 1): -i}
    return tuple(swap.get(x, x) for x in w)


def _height(x: int, n: int) -> int:
    # Value of the linear form with e_k -> n + 1 - k on w(e_i) = sign(x) e_|x|; positive roots
    # e_i - e_j, e_i + e_j (i < j) are exactly the roots of positive height.
    return n + 1 - x if x > 0 else -(n + 1 + x)


def _length(w: Sequence[int], is_d: bool) -> int:
    n = len(w)
    if not is_d:
        return sum(1 for a, b in itertools.combinations(w, 2) if a > b)
    h = [_height(x, n) for x in w]
    return sum((a < b) + (a + b < 0) for a, b in itertools.combinations(h, 2))


def _right_descents(w: Sequence[int], is_d: bool) -> frozenset[int]:
    n = len(w)
    if not is_d:
        return frozenset(i for i in range(1, n) if w[i - 1] > w[i])
    h = [_height(x, n) for x in w]
    des = {i for i in range(1, n) if h[i - 1] < h[i]}
    if h[n - 2] + h[n - 1] < 0:
        des.add(n)
    return frozenset(des)


def _right_descent_list(w: Sequence[int], is_d: bool) -> list[int]:
    return sorted(_right_descents(w, is_d))


def _left_descents(w: Sequence[int], is_d: bool) -> frozenset[int]:
    return _right_descents(_inv(w), is_d)


def _generator(typ: CoxType, i: int) -> tuple[int, ...]:
    return _rmul_gen(_identity(typ.n), typ.check_index(i), typ.is_d)


def _from_word(typ: CoxType, word: Iterable[int]) -> tuple[int, ...]:
    w = _identity(typ.n)
    for i in word:
        w = _rmul_gen(w, typ.check_index(i), typ.is_d)
    return w


def _reduced_word(w: tuple[int, ...], is_d: bool) -> tuple[int, ...]:
    # Strip the smallest left descent each time.
    out = []
    while True:
        des = _left_descents(w, is_d)
        if not des:
            return tuple(out)
        i = min(des)
        out.append(i)
        w = _lmul_gen(w, i, is_d)


@functools.lru_cache(maxsize=None)
def _longest(typ: CoxType) -> tuple[int, ...]:
    n = typ.n
    if typ.family is Family.A:
        return tuple(range(n, 0, -1))
    if n % 2 == 0:
        return tuple(-i for i in range(1, n + 1))
    return tuple(-i for i in range(1, n)) + (n,)


def _longest_in(typ: CoxType, gens: frozenset[int]) -> tuple[int, ...]:
    # Climb by right multiplication by ascents until none are left in the subset.
    w = _identity(typ.n)
    while True:
        up = gens - _right_descents(w, typ.is_d)
        if not up:
            return w
        w = _rmul_gen(w, min(up), typ.is_d)


def _diagram_auto(typ: CoxType, i: int) -> int:
    r = typ.rank
    if typ.family is Family.A:
        return r + 1 - i
    if r % 2 == 0 or i <= r - 2:
        return i
    return r if i == r - 1 else r - 1


# ---------------------------------------------------------------------------
# checked public wrapper


@dataclasses.dataclass(frozen=True)
class CoxElement:
    """An element of W[A_{n-1}] or W[D_n], stored as its images of 1..n."""
    typ: CoxType
    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(self.images)
        object.__setattr__(self, "images", images)
        n = self.typ.n
        if len(images) != n:
            raise ValueError(f"{self.typ} elements need {n} images, got {len(images)}")
        if sorted(abs(x) for x in images) != list(range(1, n + 1)):
            raise ValueError(f"{images} is not a (signed) permutation of 1..{n}")
        if self.typ.family is Family.A:
            if any(x < 0 for x in images):
                raise ValueError("type A elements cannot change signs")
        elif sum(x < 0 for x in images) % 2:
            raise ValueError("type D elements must have an even number of sign changes")

    @classmethod
    def _raw(cls, typ: CoxType, images: tuple[int, ...]) -> CoxElement:
        obj = object.__new__(cls)
        object.__setattr__(obj, "typ", typ)
        object.__setattr__(obj, "images", images)
        return obj

    @classmethod
    def identity(cls, typ: CoxType) -> CoxElement:
        return cls._raw(typ, _identity(typ.n))

    @classmethod
    def generator(cls, typ: CoxType, i: int) -> CoxElement:
        return cls._raw(typ, _generator(typ, i))

    @classmethod
    def from_word(cls, typ: CoxType, word: Iterable[int]) -> CoxElement:
        """The product of the generators with the given indices, left to right."""
        return cls._raw(typ, _from_word(typ, word))

    def __call__(self, i: int) -> int:
        return self.images[i - 1] if i > 0 else -self.images[-i - 1]

    def __mul__(self, other: CoxElement) -> CoxElement:
        return multiply(self, other)

    def inverse(self) -> CoxElement:
        return CoxElement._raw(self.typ, _inv(self.images))

    def is_identity(self) -> bool:
        return self.images == _identity(self.typ.n)

    def length(self) -> int:
        return length(self)

    def left_descents(self) -> frozenset[int]:
        return left_descents(self)

    def right_descents(self) -> frozenset[int]:
        return _right_descents(self.images, self.typ.is_d)

    def reduced_word(self) -> tuple[int, ...]:
        return reduced_word(self)

    def __repr__(self) -> str:
        return f"CoxElement({self.typ}, {list(self.images)})"


def multiply(u: CoxElement, v: CoxElement) -> CoxElement:
    if u.typ != v.typ:
        raise TypeError(f"cannot multiply elements of {u.typ} and {v.typ}")
    return CoxElement._raw(u.typ, _mul(u.images, v.images))


def length(w: CoxElement) -> int:
    """
    Coxeter length: the number of positive roots made negative.

    >>> length(longest_element(CoxType.D(4)))
    12
    """
    return _length(w.images, w.typ.is_d)


def left_descents(w: CoxElement) -> frozenset[int]:
    return _left_descents(w.images, w.typ.is_d)


def reduced_word(w: CoxElement) -> tuple[int, ...]:
    """Reduced word obtained by always stripping the smallest left descent."""
    return _reduced_word(w.images, w.typ.is_d)


def longest_element(typ: CoxType) -> CoxElement:
    return CoxElement._raw(typ, _longest(typ))


def longest_parabolic(typ: CoxType, gens: Iterable[int]) -> CoxElement:
    """The longest element w_X of the standard parabolic subgroup W_X."""
    subset = frozenset(typ.check_index(i) for i in gens)
    if not subset:
        raise ValueError("parabolic generating set must be nonempty")
    return CoxElement._raw(typ, _longest_in(typ, subset))


def diagram_automorphism(typ: CoxType, i: int) -> int:
    """The index j with w_S s_i w_S = s_j."""
    return _diagram_auto(typ, typ.check_index(i))


def elements(typ: CoxType) -> Iterator[CoxElement]:
    """Enumerate the whole group. Meant for small ranks."""
    n = typ.n
    for perm in itertools.permutations(range(1, n + 1)):
        if typ.family is Family.A:
            yield CoxElement._raw(typ, perm)
            continue
        for signs in itertools.product((1, -1), repeat=n):
            if signs.count(-1) % 2 == 0:
                yield CoxElement._raw(typ, tuple(s * x for s, x in zip(signs, perm)))


def order(typ: CoxType) -> int:
    n = typ.n
    f = 1
    for k in range(2, n + 1):
        f *= k
    return f if typ.family is Family.A else f * 2 ** (n - 1)
