"""
Words in the standard Artin generators and their text format.

A letter is a nonzero int: +i is the generator s_i (or t_i), -i its inverse. The text format
is whitespace separated tokens `s<k>` / `t<k>` with an optional `^<int>` exponent, for
example ``t1 t2^-1 t3^2``.
"""
from __future__ import annotations

import dataclasses
import itertools
import re
from typing import Iterable, Sequence

from .coxeter import CoxType


class WordParseError(ValueError):
    def __init__(self, token: str, reason: str):
        super().__init__(f"bad token {token!r}: {reason}")
        self.token = token


_TOKEN = re.compile(r"([st])(\d+)(?:\^([+-]?\d+))?")


@dataclasses.dataclass(frozen=True)
class ArtinWord:
    typ: CoxType
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        letters = tuple(self.letters)
        object.__setattr__(self, "letters", letters)
        r = self.typ.rank
        for x in letters:
            if x == 0 or abs(x) > r:
                raise IndexError(f"letter {x} out of range for {self.typ}")

    @classmethod
    def _raw(cls, typ: CoxType, letters: tuple[int, ...]) -> ArtinWord:
        obj = object.__new__(cls)
        object.__setattr__(obj, "typ", typ)
        object.__setattr__(obj, "letters", letters)
        return obj

    @classmethod
    def parse(cls, typ: CoxType, text: str) -> ArtinWord:
        return parse_word(typ, text)

    @classmethod
    def generator(cls, typ: CoxType, i: int, sign: int = 1) -> ArtinWord:
        typ.check_index(i)
        return cls._raw(typ, (i if sign > 0 else -i,))

    @classmethod
    def positive(cls, typ: CoxType, indices: Iterable[int]) -> ArtinWord:
        return cls(typ, tuple(indices))

    def signed_letters(self) -> list[tuple[int, int]]:
        """Letters as (generator index, sign) pairs."""
        return [(abs(x), 1 if x > 0 else -1) for x in self.letters]

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: ArtinWord) -> ArtinWord:
        if self.typ != other.typ:
            raise TypeError(f"cannot concatenate words over {self.typ} and {other.typ}")
        return ArtinWord._raw(self.typ, self.letters + other.letters)

    def __pow__(self, m: int) -> ArtinWord:
        if m >= 0:
            return ArtinWord._raw(self.typ, self.letters * m)
        return self.inverse() ** (-m)

    def inverse(self) -> ArtinWord:
        return ArtinWord._raw(self.typ, tuple(-x for x in reversed(self.letters)))

    def exponent_sum(self) -> int:
        return sum(1 if x > 0 else -1 for x in self.letters)

    def free_reduce(self) -> ArtinWord:
        stack: list[int] = []
        for x in self.letters:
            if stack and stack[-1] == -x:
                stack.pop()
            else:
                stack.append(x)
        return ArtinWord._raw(self.typ, tuple(stack))

    def __str__(self) -> str:
        return format_word(self)


def parse_word(typ: CoxType, text: str, max_len: int | None = None) -> ArtinWord:
    """
    Parse whitespace-separated letters like `t3`, `t2^-1`, `s1^4`.

    `max_len` caps the expanded length; the token that crosses it is reported.

    >>> parse_word(CoxType.D(4), "t1 t2^-1 t3^2").letters
    (1, -2, 3, 3)
    """
    letters: list[int] = []
    for token in text.split():
        m = _TOKEN.fullmatch(token)
        if m is None:
            raise WordParseError(token, "expected s<k> or t<k> with optional ^<int>")
        prefix, index, exponent = m.group(1), int(m.group(2)), m.group(3)
        if prefix != typ.letter:
            raise WordParseError(token, f"{typ} words use '{typ.letter}' letters")
        if not 1 <= index <= typ.rank:
            raise WordParseError(token, f"index out of range 1..{typ.rank}")
        e = 1 if exponent is None else int(exponent)
        if max_len is not None and len(letters) + abs(e) > max_len:
            raise WordParseError(token, f"word longer than {max_len} letters")
        letters.extend([index if e > 0 else -index] * abs(e))
    return ArtinWord._raw(typ, tuple(letters))


def format_letters(typ: CoxType, letters: Sequence[int]) -> str:
    """Render letters, collapsing runs of one letter into a power."""
    out = []
    for x, run in itertools.groupby(letters):
        e = len(list(run)) * (1 if x > 0 else -1)
        token = f"{typ.letter}{abs(x)}"
        out.append(token if e == 1 else f"{token}^{e}")
    return " ".join(out)


def format_word(word: ArtinWord) -> str:
    return format_letters(word.typ, word.letters)


def relation_word(typ: CoxType, a: int, b: int, m: int) -> ArtinWord:
    """The positive alternating word aba... of length m."""
    if m < 2:
        raise ValueError(f"relation length must be >= 2, got {m}")
    typ.check_index(a)
    typ.check_index(b)
    return ArtinWord._raw(typ, tuple(a if k % 2 == 0 else b for k in range(m)))
