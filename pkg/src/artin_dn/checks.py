"""
Identity families verified by `artin-dn sweep` and by the acceptance tests.

Work is split into cells (one family at one rank, or one (n, p, q) point) that share nothing
and can run in separate processes. Results are collected and reported in cell order, so the
report does not depend on scheduling.
"""
from __future__ import annotations

import dataclasses
import random
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, Sequence

import numpy as np

from . import homology, homs, kernel
from .coxeter import CoxType, diagram_automorphism, longest_element
from .garside import (
    NormalForm,
    delta_square_product_sides,
    delta_word,
    delta_y_word,
    equal,
    explicit_delta_word,
    garside_element,
    is_normal,
    normalize,
    tau,
)
from .words import ArtinWord, relation_word

FAMILIES = (
    "garside",
    "delta_square",
    "catalog",
    "gamma_scaling",
    "delta_images",
    "lifting",
    "kernel",
    "homology",
    "nf_soundness",
    "pinch",
)


@dataclasses.dataclass
class CellResult:
    family: str
    cell: str
    passed: int = 0
    failed: int = 0
    failures: list[str] = dataclasses.field(default_factory=list)
    seconds: float = 0.0

    def check(self, ok: bool, what: str) -> bool:
        if ok:
            self.passed += 1
        else:
            self.failed += 1
            if len(self.failures) < 20:
                self.failures.append(what)
        return ok


@dataclasses.dataclass(frozen=True)
class Cell:
    family: str
    label: str
    func: Callable[..., None]
    kwargs: tuple[tuple[str, object], ...]

    def run(self) -> CellResult:
        res = CellResult(self.family, self.label)
        start = time.perf_counter()
        try:
            self.func(res, **dict(self.kwargs))
        except Exception as exc:  # a crash counts as a failure of the cell, not of the sweep
            res.check(False, f"{type(exc).__name__}: {exc}")
        res.seconds = time.perf_counter() - start
        return res


def _run_cell(cell: Cell) -> CellResult:
    return cell.run()


def run_cells(cells: Sequence[Cell], jobs: int = 1) -> list[CellResult]:
    if jobs <= 1:
        return [c.run() for c in cells]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_run_cell, cells))


@dataclasses.dataclass
class FamilyReport:
    family: str
    passed: int
    failed: int
    seconds: float
    failures: list[str]

    @property
    def ok(self) -> bool:
        return self.failed == 0 and self.passed > 0


def summarize(results: Iterable[CellResult]) -> list[FamilyReport]:
    by_family: dict[str, FamilyReport] = {}
    for r in results:
        rep = by_family.setdefault(r.family, FamilyReport(r.family, 0, 0, 0.0, []))
        rep.passed += r.passed
        rep.failed += r.failed
        rep.seconds += r.seconds
        rep.failures.extend(f"[{r.cell}] {f}" for f in r.failures)
    return [by_family[f] for f in FAMILIES if f in by_family]


# ---------------------------------------------------------------------------
# random words


def random_word(rng: random.Random, typ: CoxType, max_len: int, min_len: int = 0) -> ArtinWord:
    k = rng.randint(min_len, max_len)
    return ArtinWord(typ, tuple(rng.choice((1, -1)) * rng.randint(1, typ.rank) for _ in range(k)))


def _relation_patterns(typ: CoxType) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """(pattern, replacement) pairs for every relation, both directions, both signs."""
    out = []
    for a, b, m in typ.pairs():
        lhs = relation_word(typ, a, b, m).letters
        rhs = relation_word(typ, b, a, m).letters
        out.append((lhs, rhs))
        out.append((rhs, lhs))
        out.append((tuple(-x for x in reversed(lhs)), tuple(-x for x in reversed(rhs))))
        out.append((tuple(-x for x in reversed(rhs)), tuple(-x for x in reversed(lhs))))
    return out


def rewrite_once(rng: random.Random, word: ArtinWord) -> ArtinWord:
    """Apply one random defining-relation move: substitution, relator insertion, or free (un)cancellation."""
    typ = word.typ
    w = list(word.letters)
    move = rng.randrange(4)
    if move == 0:
        hits = []
        for pat, rep in _relation_patterns(typ):
            k = len(pat)
            hits.extend((i, k, rep) for i in range(len(w) - k + 1) if tuple(w[i:i + k]) == pat)
        if hits:
            i, k, rep = rng.choice(hits)
            return ArtinWord(typ, tuple(w[:i]) + rep + tuple(w[i + k:]))
        move = 1
    if move == 1:
        a, b, m = rng.choice(typ.pairs())
        relator = relation_word(typ, a, b, m) * relation_word(typ, b, a, m).inverse()
        if rng.random() < 0.5:
            relator = relator.inverse()
        i = rng.randint(0, len(w))
        return ArtinWord(typ, tuple(w[:i]) + relator.letters + tuple(w[i:]))
    if move == 2:
        cancel = [i for i in range(len(w) - 1) if w[i] == -w[i + 1]]
        if cancel:
            i = rng.choice(cancel)
            return ArtinWord(typ, tuple(w[:i] + w[i + 2:]))
    x = rng.choice((1, -1)) * rng.randint(1, typ.rank)
    i = rng.randint(0, len(w))
    return ArtinWord(typ, tuple(w[:i]) + (x, -x) + tuple(w[i:]))


# ---------------------------------------------------------------------------
# family cells


def _types(n: int) -> list[CoxType]:
    return [CoxType.A(n - 1), CoxType.D(n)]


def check_garside(res: CellResult, n: int) -> None:
    """Delta from the explicit word, conjugation by Delta, centrality of Delta^kappa."""
    for typ in _types(n):
        delta = normalize(explicit_delta_word(typ))
        res.check(delta == normalize(tau(longest_element(typ))), f"{typ}: explicit Delta != tau(w_S)")
        res.check(delta == garside_element(typ), f"{typ}: explicit Delta not D^1")
        res.check(explicit_delta_word(typ).exponent_sum() == longest_element(typ).length(),
                  f"{typ}: z(Delta) != l(w_S)")
        dw = delta_word(typ)
        central = dw ** typ.kappa
        for i in typ.generators:
            g = ArtinWord(typ, (i,))
            j = diagram_automorphism(typ, i)
            res.check(equal(dw * g * dw.inverse(), ArtinWord(typ, (j,))),
                      f"{typ}: Delta {typ.letter}{i} Delta^-1 != {typ.letter}{j}")
            res.check(equal(central * g, g * central), f"{typ}: Delta^kappa does not commute with {typ.letter}{i}")
    d = CoxType.D(n)
    res.check(explicit_delta_word(d).exponent_sum() == n * (n - 1), f"z(Delta[D{n}]) != n(n-1)")
    # parabolic Delta_Y^2 commutes with Y
    dy2 = delta_y_word(n) ** 2
    for i in range(1, n):
        g = ArtinWord(d, (i,))
        res.check(equal(dy2 * g, g * dy2), f"D{n}: Delta_Y^2 does not commute with t{i}")


def check_delta_square_product(res: CellResult, rank: int) -> None:
    lhs, rhs = delta_square_product_sides(rank)
    res.check(equal(lhs, rhs), f"Delta[A{rank}]^2 != product formula")


def _catalog(n: int, ps: Sequence[int], qs: Sequence[int]) -> list[homs.HomSpec]:
    hs = [homs.make_pi(n), homs.make_iota(n), homs.make_zeta(n), homs.make_chi(n), homs.make_bar_chi(n)]
    for p in ps:
        hs += [homs.make_alpha(n, p), homs.make_gamma(n, p), homs.make_bar_gamma(n, p)]
        hs += [homs.make_beta(n, p, q) for q in qs]
    return hs


def check_catalog(res: CellResult, n: int, ps: Sequence[int], qs: Sequence[int]) -> None:
    for h in _catalog(n, ps, qs):
        res.check(homs.verify_hom(h), f"n={n}: {h.label} fails a relation")
    pi, iota = homs.make_pi(n), homs.make_iota(n)
    zeta, chi = homs.make_zeta(n), homs.make_chi(n)
    d = CoxType.D(n)
    res.check(homs.is_identity_hom(homs.compose(pi, iota)), f"n={n}: pi o iota != id")
    res.check(homs.same_hom(homs.make_alpha(n, 0), pi), f"n={n}: alpha_0 != pi")
    res.check(homs.same_hom(homs.make_beta(n, 0, 0), iota), f"n={n}: beta_00 != iota")
    res.check(homs.is_identity_hom(homs.make_gamma(n, 0)), f"n={n}: gamma_0 != id")
    res.check(homs.is_identity_hom(homs.compose(zeta, zeta)), f"n={n}: zeta^2 != id")
    res.check(homs.is_identity_hom(homs.compose(chi, chi)), f"n={n}: chi^2 != id")
    res.check(homs.same_hom(homs.compose(zeta, chi), homs.compose(chi, zeta)), f"n={n}: zeta chi != chi zeta")
    if n % 2:
        res.check(homs.same_hom(zeta, homs.make_inner(delta_word(d))), f"n={n}: zeta != ad_Delta")
    for p in ps:
        res.check(homs.same_hom(homs.make_alpha(n, p), homs.compose(homs.make_bar_gamma(n, p), pi)),
                  f"n={n}: alpha_{p} != bar_gamma_{p} o pi")


def check_gamma_scaling(res: CellResult, n: int, p: int, samples: int, seed: int) -> None:
    """gamma_p(u) = u Delta^(kappa p z(u)), z scaling, gamma_p(Delta^q), z(Delta)."""
    d = CoxType.D(n)
    kappa = d.kappa
    rng = random.Random(f"{seed}:cor:{n}:{p}")
    gamma = homs.make_gamma(n, p)
    factor = 1 + n * (n - 1) * kappa * p
    res.check(homs.z_scaling(gamma) == factor, f"n={n} p={p}: z o gamma_p scaling != {factor}")
    res.check(delta_word(d).exponent_sum() == n * (n - 1), f"n={n}: z(Delta) != n(n-1)")
    images = homs.image_normal_forms(gamma)
    inverses = [x.inverse() for x in images]
    for _ in range(samples):
        u = random_word(rng, d, 20)
        lhs = image_nf(images, inverses, u)
        rhs = normalize(u) * NormalForm(d, kappa * p * u.exponent_sum(), ())
        res.check(lhs == rhs, f"n={n} p={p}: gamma_p({u}) != u Delta^(kappa p z(u))")
        res.check(lhs.exponent_sum() == factor * u.exponent_sum(), f"n={n} p={p}: z(gamma_p({u})) wrong")
    for q in range(-2, 3):
        img = normalize(homs.apply(gamma, delta_word(d) ** q))
        res.check(img == NormalForm(d, q * factor, ()), f"n={n} p={p}: gamma_p(Delta^{q}) wrong")


def image_nf(images: Sequence[NormalForm], inverses: Sequence[NormalForm], word: ArtinWord) -> NormalForm:
    """Normal form of h(word) assembled from the normal forms of h's generator images."""
    out = NormalForm.identity(images[0].typ)
    for x in word.letters:
        out = out * (images[x - 1] if x > 0 else inverses[-x - 1])
    return out


def check_delta_images(res: CellResult, n: int, p: int, q: int) -> None:
    d, a = CoxType.D(n), CoxType.A(n - 1)
    kappa = d.kappa
    if p == 0 and q == 0:
        res.check(equal(homs.apply(homs.make_pi(n), explicit_delta_word(d)), delta_word(a) ** 2),
                  f"n={n}: pi(Delta[D]) != Delta[A]^2")
    lhs = homs.apply(homs.make_beta(n, p, q), delta_word(a) ** (2 * kappa))
    rhs = delta_y_word(n) ** (2 * kappa * (1 + p * n * (n - 1))) * delta_word(d) ** (kappa * kappa * q * n * (n - 1))
    res.check(equal(lhs, rhs), f"n={n} p={p} q={q}: beta(Delta[A]^2kappa) formula fails")


def lift_candidates(n: int, rng: random.Random, perturbed: int = 4) -> list[tuple[str, kernel.LiftInput]]:
    d = CoxType.D(n)
    base: list[homs.HomSpec] = list(homs.zeta_chi_group(n))
    for g in (delta_word(d), ArtinWord(d, (1, -2)), random_word(rng, d, 6, 1)):
        base.append(homs.make_inner(g))
        base.append(homs.compose(homs.make_inner(g), homs.make_chi(n)))
    base.append(homs.make_gamma(n, 1))
    out = []
    for h in base:
        data = kernel.LiftInput.from_hom(h)
        out.append((h.label, data))
        for _ in range(perturbed):
            shifts = [rng.randint(-2, 2) for _ in range(n)]
            out.append((f"{h.label}+{shifts}", kernel.perturb(data, shifts)))
    return out


def broken_candidates(n: int, rng: random.Random, count: int = 20) -> list[tuple[str, kernel.LiftInput]]:
    """
    Candidates that are not endomorphisms of A_Z[D_n]: one image of an honest endomorphism is
    multiplied by a single extra letter, which shifts its exponent sum by 1 and so cannot be
    repaired by central corrections (those shift z by multiples of kappa n(n-1)).
    """
    d = CoxType.D(n)
    honest = list(homs.zeta_chi_group(n)) + [homs.make_inner(random_word(rng, d, 4, 1))]
    out = []
    for k in range(count):
        h = rng.choice(honest)
        g = list(h.images)
        i = rng.randrange(n)
        g[i] = g[i] * ArtinWord(d, (rng.choice((1, -1)) * rng.randint(1, n),))
        out.append((f"broken#{k}:{h.label}@t{i + 1}", kernel.LiftInput(n, tuple(g))))
    return out


def check_lifting(res: CellResult, n: int, seed: int) -> None:
    rng = random.Random(f"{seed}:lift:{n}")
    kappa = CoxType.D(n).kappa
    for label, data in lift_candidates(n, rng):
        try:
            lift = kernel.lift_with_corrections(data)
        except kernel.LiftError as exc:
            res.check(False, f"n={n} {label}: lift failed: {exc}")
            continue
        res.check(homs.verify_hom(lift.hom), f"n={n} {label}: lift is not a homomorphism")
        res.check(kernel.lift_commutes_with_projection(lift.hom, data), f"n={n} {label}: lift not over input")
        if "+" not in label:
            res.check(not any(lift.corrections), f"n={n} {label}: honest hom got corrections {lift.corrections}")
        for i, k in enumerate(lift.corrections):
            dz = lift.hom.images[i].exponent_sum() - data.candidate_images[i].exponent_sum()
            res.check(dz == kappa * k * n * (n - 1), f"n={n} {label}: z shift of t{i + 1} inconsistent")
    for label, data in broken_candidates(n, rng):
        try:
            kernel.lift_endomorphism(data)
        except kernel.LiftError as exc:
            res.check(exc.kind in ("defect", "relations"), f"n={n} {label}: unexpected error kind {exc.kind}")
        else:
            res.check(False, f"n={n} {label}: broken candidate lifted")


def check_kernel(res: CellResult, n: int) -> None:
    gens = kernel.kernel_generators(n).gens
    res.check(len(gens) == n - 1, f"n={n}: wrong number of kernel generators")
    for j, v in enumerate(gens, 1):
        res.check(kernel.in_kernel_pi(v), f"n={n}: v_{j} not in Ker(pi)")


def check_homology(res: CellResult, n: int, samples: int, seed: int) -> None:
    rng = random.Random(f"{seed}:hom:{n}")
    for typ in _types(n):
        rep = homology.transvection_rep(typ)
        res.check(homology.relation_soundness(rep), f"{typ}: generator matrices break a relation")
        for i in typ.generators:
            res.check(homology.preserves_form(rep.matrix(i), rep.form), f"{typ}: T_{i} breaks the form")
        for _ in range(samples):
            M = homology.rep_apply(rep, random_word(rng, typ, 30))
            res.check(homology.preserves_form(M, rep.form), f"{typ}: random word breaks the form")
    res.check(homology.check_commuting_square(n), f"n={n}: forgetful square does not commute")
    res.check(not homology.check_commuting_square(n, fork_sign=-1), f"n={n}: square commutes with flipped fork")
    T = homology.theta_star(n)
    diff = np.zeros(n, dtype=object)
    diff[n - 1], diff[n - 2] = 1, -1
    res.check(not (T @ diff).any(), f"n={n}: d_n - d_(n-1) not in ker theta_*")


def check_nf_soundness(res: CellResult, typ_name: str, n: int, rewrites: int, seed: int) -> None:
    typ = CoxType.A(n - 1) if typ_name == "A" else CoxType.D(n)
    rng = random.Random(f"{seed}:nf:{typ}")
    for _ in range(rewrites):
        w = random_word(rng, typ, 60)
        w2 = w
        for _ in range(rng.randint(1, 3)):
            w2 = rewrite_once(rng, w2)
        nf = normalize(w)
        res.check(is_normal(nf), f"{typ}: invariants fail for {w}")
        res.check(nf == normalize(w2), f"{typ}: {w} and its rewrite {w2} normalize differently")
        res.check(normalize(nf.to_word()) == nf, f"{typ}: normalize not idempotent on {w}")
        res.check(nf.exponent_sum() == w.exponent_sum(), f"{typ}: exponent sum changed for {w}")


def check_pinch(res: CellResult, n: int, ps: Sequence[int], qs: Sequence[int], seed: int) -> None:
    rng = random.Random(f"{seed}:pinch:{n}")
    d, a = CoxType.D(n), CoxType.A(n - 1)
    pi = homs.make_pi(n)
    psis = homs.zeta_chi_group(n)
    for psi in psis:
        for p in ps:
            for q in qs:
                h = homs.compose(psi, homs.compose(homs.make_beta(n, p, q), pi))
                res.check(homs.pinch_test(h), f"n={n}: {psi.label} beta[{p},{q}] pi does not pinch")
            h = homs.compose(psi, homs.make_gamma(n, p))
            res.check(not homs.pinch_test(h), f"n={n}: {psi.label} gamma[{p}] pinches")
    for target in (d, a):
        for _ in range(3):
            g = random_word(rng, target, 8)
            res.check(homs.pinch_test(homs.make_cyclic(d, g)), f"n={n}: cyclic map to {target} does not pinch")


# ---------------------------------------------------------------------------
# cell plans


def plan(
    n_min: int,
    n_max: int,
    ps: Sequence[int],
    qs: Sequence[int],
    *,
    families: Iterable[str] = FAMILIES,
    rewrites: int = 1000,
    samples: int = 500,
    homology_samples: int = 50,
    seed: int = 0,
    square_ranks: Sequence[int] | None = None,
) -> list[Cell]:
    """All cells for the given parameter grid, in report order."""
    ns = range(n_min, n_max + 1)
    ps, qs = tuple(ps), tuple(qs)
    wanted = set(families)
    unknown = wanted - set(FAMILIES)
    if unknown:
        raise ValueError(f"unknown families: {', '.join(sorted(unknown))}")
    cells: list[Cell] = []

    def add(family: str, label: str, func: Callable[..., None], **kwargs) -> None:
        if family in wanted:
            cells.append(Cell(family, label, func, tuple(sorted(kwargs.items()))))

    for n in ns:
        add("garside", f"n={n}", check_garside, n=n)
    for r in square_ranks if square_ranks is not None else range(1, n_max + 1):
        add("delta_square", f"rank={r}", check_delta_square_product, rank=r)
    for n in ns:
        add("catalog", f"n={n}", check_catalog, n=n, ps=ps, qs=qs)
    for n in ns:
        for p in ps:
            add("gamma_scaling", f"n={n} p={p}", check_gamma_scaling, n=n, p=p, samples=samples, seed=seed)
    for n in ns:
        for p in ps:
            for q in qs:
                add("delta_images", f"n={n} p={p} q={q}", check_delta_images, n=n, p=p, q=q)
    for n in ns:
        add("lifting", f"n={n}", check_lifting, n=n, seed=seed)
    for n in ns:
        add("kernel", f"n={n}", check_kernel, n=n)
    for n in ns:
        add("homology", f"n={n}", check_homology, n=n, samples=homology_samples, seed=seed)
    for name in ("A", "D"):
        for n in ns:
            add("nf_soundness", f"{name} n={n}", check_nf_soundness, typ_name=name, n=n, rewrites=rewrites, seed=seed)
    for n in ns:
        add("pinch", f"n={n}", check_pinch, n=n, ps=ps, qs=qs, seed=seed)
    return cells


def run_family(family: str, cells: Sequence[Cell], jobs: int = 1) -> FamilyReport:
    results = run_cells([c for c in cells if c.family == family], jobs)
    reports = summarize(results)
    return reports[0] if reports else FamilyReport(family, 0, 0, 0.0, ["no cells"])
