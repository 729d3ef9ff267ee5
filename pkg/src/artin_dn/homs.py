"""
Homomorphisms between A[D_n], A[A_{n-1}] given by generator images.

A HomSpec stores one word per source generator. Applying it substitutes images letter by
letter; verification checks every defining relation of the source on the images with the word
problem. Two specs are the same homomorphism iff their images agree as group elements
(`same_hom`), not when the words agree letter for letter.

Catalog (n >= 4, Delta the Garside element of the target unless stated,
Y = {t_1, ..., t_{n-1}}):

    pi        D_n -> A_{n-1}   t_i -> s_i (i <= n-2), t_{n-1}, t_n -> s_{n-1}
    iota      A_{n-1} -> D_n   s_i -> t_i
    alpha_p   D_n -> A_{n-1}   t_i -> pi(t_i) Delta^2p
    beta_pq   A_{n-1} -> D_n   s_i -> t_i Delta_Y^2p Delta^(kappa q)
    gamma_p   D_n -> D_n       t_i -> t_i Delta^(kappa p)
    zeta      D_n -> D_n       swaps t_{n-1} and t_n
    chi       D_n -> D_n       t_i -> t_i^-1
    bar_chi   A_{n-1}          s_i -> s_i^-1
    bar_gamma A_{n-1}          s_i -> s_i Delta^2p
"""
from __future__ import annotations

import dataclasses
import json

from .coxeter import CoxType
from .garside import (
    NormalForm,
    delta_word,
    delta_y_word,
    normalize,
    relation_sides,
)
from .words import ArtinWord, format_word, parse_word, relation_word


@dataclasses.dataclass(frozen=True)
class HomSpec:
    source: CoxType
    target: CoxType
    images: tuple[ArtinWord, ...]
    label: str = ""

    def __post_init__(self):
        images = tuple(self.images)
        object.__setattr__(self, "images", images)
        if len(images) != self.source.rank:
            raise ValueError(f"{self.source} needs {self.source.rank} images, got {len(images)}")
        for w in images:
            if w.typ != self.target:
                raise TypeError(f"image {w} is not a word over {self.target}")

    def image(self, i: int) -> ArtinWord:
        return self.images[self.source.check_index(i) - 1]

    def __call__(self, word: ArtinWord) -> ArtinWord:
        return apply(self, word)

    def __matmul__(self, other: HomSpec) -> HomSpec:
        """self @ other is the composite self o other."""
        return compose(self, other)

    def to_text(self) -> str:
        return dump_hom(self)


def _check_rank(n: int) -> None:
    if n < 4:
        raise ValueError(f"rank n must be >= 4, got {n}")


def _gen(typ: CoxType, i: int) -> ArtinWord:
    return ArtinWord._raw(typ, (i,))


def apply(h: HomSpec, word: ArtinWord) -> ArtinWord:
    if word.typ != h.source:
        raise TypeError(f"{h.label or 'hom'} is defined on {h.source}, got a word over {word.typ}")
    images = [w.letters for w in h.images]
    inverses = [tuple(-x for x in reversed(w)) for w in images]
    out: list[int] = []
    for x in word.letters:
        out.extend(images[x - 1] if x > 0 else inverses[-x - 1])
    return ArtinWord._raw(h.target, tuple(out))


def compose(g: HomSpec, h: HomSpec) -> HomSpec:
    """g o h: apply h first."""
    if h.target != g.source:
        raise TypeError(f"cannot compose: {h.label} lands in {h.target}, {g.label} starts at {g.source}")
    label = f"{g.label}*{h.label}" if g.label and h.label else ""
    return HomSpec(h.source, g.target, tuple(apply(g, w) for w in h.images), label)


def image_normal_forms(h: HomSpec) -> list[NormalForm]:
    return [normalize(w) for w in h.images]


def failing_relations(h: HomSpec) -> list[tuple[int, int, int]]:
    """Source relations (a, b, m) whose images do not hold in the target."""
    nfs = image_normal_forms(h)
    bad = []
    for a, b, m in h.source.pairs():
        lhs = rhs = NormalForm.identity(h.target)
        for k in range(m):
            lhs = lhs * nfs[(a if k % 2 == 0 else b) - 1]
            rhs = rhs * nfs[(b if k % 2 == 0 else a) - 1]
        if lhs != rhs:
            bad.append((a, b, m))
    return bad


def verify_hom(h: HomSpec) -> bool:
    """True iff the generator images satisfy every defining relation of the source."""
    return not failing_relations(h)


def verify_hom_by_words(h: HomSpec) -> bool:
    """Same check as verify_hom, phrased on substituted words; slower, used as a cross-check."""
    from .garside import equal

    return all(equal(apply(h, lhs), apply(h, rhs)) for lhs, rhs in relation_sides(h.source))


def same_hom(h1: HomSpec, h2: HomSpec) -> bool:
    """Generator-wise word-problem equality of images."""
    if (h1.source, h1.target) != (h2.source, h2.target):
        return False
    return all(normalize(a) == normalize(b) for a, b in zip(h1.images, h2.images))


def is_identity_hom(h: HomSpec) -> bool:
    return h.source == h.target and same_hom(h, make_identity(h.source))


def pinch_test(h: HomSpec) -> bool:
    """True iff h(t_{n-1}) = h(t_n): the collapse shared by cyclic maps and psi o beta o pi."""
    if not h.source.is_d:
        raise TypeError("pinch_test needs a homomorphism with source A[D_n]")
    n = h.source.rank
    return normalize(h.image(n - 1)) == normalize(h.image(n))


def is_conjugate_by(h1: HomSpec, h2: HomSpec, g: ArtinWord) -> bool:
    """True iff h2 = ad_g o h1, i.e. h2(x) = g h1(x) g^-1 on every generator."""
    if (h1.source, h1.target) != (h2.source, h2.target):
        raise TypeError("homomorphisms have different source or target")
    if g.typ != h1.target:
        raise TypeError(f"conjugator must be a word over {h1.target}")
    gi = g.inverse()
    return all(normalize(g * a * gi) == normalize(b) for a, b in zip(h1.images, h2.images))


def z_scaling(h: HomSpec) -> int | None:
    """
    The factor c with z(h(u)) = c z(u), when every generator image has the same exponent sum.
    None when images have different exponent sums (then h is not z-proportional).
    """
    sums = {w.exponent_sum() for w in h.images}
    return sums.pop() if len(sums) == 1 else None


# ---------------------------------------------------------------------------
# constructors


def make_identity(typ: CoxType) -> HomSpec:
    return HomSpec(typ, typ, tuple(_gen(typ, i) for i in typ.generators), "id")


def make_cyclic(source: CoxType, word: ArtinWord, label: str = "cyclic") -> HomSpec:
    """Every generator goes to the same word."""
    return HomSpec(source, word.typ, (word,) * source.rank, label)


def make_pi(n: int) -> HomSpec:
    _check_rank(n)
    a = CoxType.A(n - 1)
    images = [_gen(a, i) for i in range(1, n - 1)] + [_gen(a, n - 1), _gen(a, n - 1)]
    return HomSpec(CoxType.D(n), a, tuple(images), "pi")


def make_iota(n: int) -> HomSpec:
    _check_rank(n)
    d = CoxType.D(n)
    return HomSpec(CoxType.A(n - 1), d, tuple(_gen(d, i) for i in range(1, n)), "iota")


def make_alpha(n: int, p: int) -> HomSpec:
    _check_rank(n)
    a = CoxType.A(n - 1)
    tail = delta_word(a) ** (2 * p)
    images = [_gen(a, min(i, n - 1)) * tail for i in range(1, n + 1)]
    return HomSpec(CoxType.D(n), a, tuple(images), f"alpha[{p}]")


def make_beta(n: int, p: int, q: int) -> HomSpec:
    _check_rank(n)
    d = CoxType.D(n)
    tail = delta_y_word(n) ** (2 * p) * delta_word(d) ** (d.kappa * q)
    return HomSpec(CoxType.A(n - 1), d, tuple(_gen(d, i) * tail for i in range(1, n)), f"beta[{p},{q}]")


def make_gamma(n: int, p: int) -> HomSpec:
    _check_rank(n)
    d = CoxType.D(n)
    tail = delta_word(d) ** (d.kappa * p)
    return HomSpec(d, d, tuple(_gen(d, i) * tail for i in range(1, n + 1)), f"gamma[{p}]")


def make_zeta(n: int) -> HomSpec:
    _check_rank(n)
    d = CoxType.D(n)
    order = list(range(1, n - 1)) + [n, n - 1]
    return HomSpec(d, d, tuple(_gen(d, i) for i in order), "zeta")


def make_chi(n: int) -> HomSpec:
    _check_rank(n)
    d = CoxType.D(n)
    return HomSpec(d, d, tuple(ArtinWord._raw(d, (-i,)) for i in d.generators), "chi")


def make_bar_chi(n: int) -> HomSpec:
    _check_rank(n)
    a = CoxType.A(n - 1)
    return HomSpec(a, a, tuple(ArtinWord._raw(a, (-i,)) for i in a.generators), "bar_chi")


def make_bar_gamma(n: int, p: int) -> HomSpec:
    _check_rank(n)
    a = CoxType.A(n - 1)
    tail = delta_word(a) ** (2 * p)
    return HomSpec(a, a, tuple(_gen(a, i) * tail for i in a.generators), f"bar_gamma[{p}]")


def make_inner(g: ArtinWord) -> HomSpec:
    """ad_g: x -> g x g^-1 on the group g lives in."""
    typ = g.typ
    gi = g.inverse()
    return HomSpec(typ, typ, tuple(g * _gen(typ, i) * gi for i in typ.generators), f"ad[{format_word(g)}]")


def zeta_chi_group(n: int) -> list[HomSpec]:
    """The four elements id, zeta, chi, zeta o chi of <zeta, chi>."""
    z, c = make_zeta(n), make_chi(n)
    return [make_identity(CoxType.D(n)), z, c, compose(z, c)]


# ---------------------------------------------------------------------------
# interchange format


def dump_hom(h: HomSpec) -> str:
    """
    JSON text with keys source, target, images, label in that order.

    >>> print(dump_hom(make_pi(4)), end="")
    {
      "source": "D4",
      "target": "A3",
      "images": [
        "s1",
        "s2",
        "s3",
        "s3"
      ],
      "label": "pi"
    }
    """
    doc = {
        "source": str(h.source),
        "target": str(h.target),
        "images": [format_word(w) for w in h.images],
        "label": h.label,
    }
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


class HomSpecFormatError(ValueError):
    pass


def load_hom(text: str) -> HomSpec:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise HomSpecFormatError(f"not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise HomSpecFormatError("top level must be an object")
    missing = {"source", "target", "images"} - doc.keys()
    if missing:
        raise HomSpecFormatError(f"missing fields: {', '.join(sorted(missing))}")
    try:
        source = CoxType.parse(doc["source"])
        target = CoxType.parse(doc["target"])
        if not isinstance(doc["images"], list):
            raise HomSpecFormatError("images must be a list of words")
        images = tuple(parse_word(target, str(w)) for w in doc["images"])
        return HomSpec(source, target, images, str(doc.get("label", "")))
    except HomSpecFormatError:
        raise
    except (ValueError, TypeError, IndexError) as exc:
        raise HomSpecFormatError(str(exc)) from exc

