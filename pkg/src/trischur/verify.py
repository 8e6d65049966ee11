"""Verification suites comparing the fixed-point formulas with independent
computations. Each suite returns a :class:`RunReport`."""

from __future__ import annotations

import random
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from itertools import permutations
from typing import Iterable, Sequence

from .character import (
    CharacterSum,
    Contribution,
    PoleError,
    Variant,
    character_sum,
    contribution_singular,
    contribution_smooth,
    evaluate_character,
    evaluate_terms,
    expand_character,
    specialize_q,
    ss_pair_with_special,
)
from .diagram import Diagram3
from .dimension import dimension
from .oracle import (
    GeneralDiagram,
    OracleSizeError,
    iter_partitions3,
    schur_module_character,
    schur_polynomial,
    weyl_dimension,
)
from .tabloid import (
    classify,
    d_matrix,
    enumerate_tabloids,
    fm_normal_bundle,
    r_multiset,
    singular_d_table,
    ss_eigenvalues,
)

SUITES = ("identity", "variants", "oracle", "weyl", "geometry")

CORPUS: tuple[Diagram3, ...] = tuple(
    Diagram3(m)
    for m in (
        (1, 0, 0, 0, 0, 0, 0),
        (0, 1, 0, 0, 0, 0, 0),
        (0, 0, 1, 0, 0, 0, 0),
        (0, 0, 0, 1, 0, 0, 0),
        (0, 0, 0, 0, 1, 0, 0),
        (0, 0, 0, 0, 0, 1, 0),
        (0, 0, 0, 0, 0, 0, 1),
        (1, 0, 0, 1, 0, 0, 1),
        (0, 0, 0, 1, 1, 0, 0),
        (0, 0, 0, 1, 1, 1, 0),
        (1, 1, 1, 0, 0, 0, 0),
        (2, 0, 0, 0, 0, 0, 0),
        (0, 0, 0, 0, 0, 0, 2),
    )
)

DEFAULT_SEED = 20240601
# Replacement for the zeta fibre character x_i x_k x_j^-2, as exponents on (i, j, k).
PERTURBED_SPECIAL = (1, -3, 2)


@dataclass
class Check:
    name: str
    status: str
    detail: str = ""


@dataclass
class RunReport:
    command: str
    inputs: dict = field(default_factory=dict)
    outputs: dict = field(default_factory=dict)
    checks: list[Check] = field(default_factory=list)

    def check(self, name: str, ok: bool, detail: str = "") -> bool:
        if not ok and not detail:
            detail = "check failed"
        self.checks.append(Check(name, "PASS" if ok else "FAIL", detail))
        return ok

    @property
    def ok(self) -> bool:
        return all(c.status == "PASS" for c in self.checks)

    def to_json(self) -> dict:
        return asdict(self)


def _pole_free(point: Sequence[Fraction], terms: Iterable[Contribution]) -> bool:
    cache: dict = {}
    for t in terms:
        for v, _ in t.denominator:
            f = cache.get(v)
            if f is None:
                mono = Fraction(1)
                for x, a in zip(point, v):
                    if a:
                        mono *= x ** a
                f = cache[v] = 1 - mono
            if not f:
                return False
    return True


def random_points(
    n: int, count: int, seed: int, avoid: Iterable[Iterable[Contribution]] = ()
) -> list[list[Fraction]]:
    """Small distinct positive rationals, rejecting points on any pole of ``avoid``."""
    rng = random.Random(seed)
    avoid = [list(terms) for terms in avoid]
    out = []
    while len(out) < count:
        point = [Fraction(rng.randint(1, 30), rng.randint(1, 7)) for _ in range(n)]
        if len(set(point)) != n:
            continue
        if all(_pole_free(point, terms) for terms in avoid):
            out.append(point)
    return out


def _fmt(point) -> str:
    return "(" + ",".join(str(x) for x in point) + ")"


# -- identity ------------------------------------------------------------------


def suite_identity(n: int, seed: int = DEFAULT_SEED, npoints: int = 20) -> RunReport:
    rep = RunReport("verify identity", {"n": n, "seed": seed, "points": npoints})
    zero = Diagram3.zero()
    for variant in Variant:
        cs = character_sum(zero, n, variant)
        points = random_points(n, npoints, seed, [cs.terms])
        bad = [(p, v) for p in points if (v := evaluate_character(cs, p)) != 1]
        rep.check(
            f"identity-character-{variant.value}",
            not bad,
            "" if not bad else f"value {bad[0][1]} at {_fmt(bad[0][0])}",
        )
    q = specialize_q(character_sum(zero, n))
    rep.check("identity-q-specialization", q == 1, f"got {q}")
    dim = dimension(zero, n)
    rep.outputs["dimension"] = dim
    rep.check("identity-dimension", dim == 1, f"got {dim}")
    return rep


# -- variants ------------------------------------------------------------------


def _triples(n: int) -> list[tuple[int, int, int]]:
    return list(permutations(range(1, n + 1), 3))


def singular_values_agree(
    ijk: Sequence[int], d: Diagram3, n: int, points: Sequence[Sequence[Fraction]]
) -> tuple[bool, str]:
    forms = {v: contribution_singular(ijk, d, v, n) for v in Variant}
    for p in points:
        vals = {v: evaluate_terms(terms, p) for v, terms in forms.items()}
        if len(set(vals.values())) != 1:
            shown = ", ".join(f"{v.value}={x}" for v, x in vals.items())
            return False, f"tau_{''.join(map(str, ijk))} at {_fmt(p)}: {shown}"
    return True, ""


def perturbed_identity_value(n: int, point: Sequence[Fraction], special=PERTURBED_SPECIAL) -> Fraction:
    """All-zero SS sum with every zeta fibre character x_i x_k x_j^-2 replaced by
    x_i^a x_j^b x_k^c for ``special = (a, b, c)`` (eta gets the inverse)."""
    zero = Diagram3.zero()
    terms: list[Contribution] = []
    for tau in enumerate_tabloids(n):
        cls = classify(tau)
        if not cls.singular:
            terms.append(contribution_smooth(tau, zero))
            continue
        i, j, k = cls.ijk
        v = [0] * n
        v[i - 1] += special[0]
        v[j - 1] += special[1]
        v[k - 1] += special[2]
        terms.extend(ss_pair_with_special(cls.ijk, zero, n, v))
    return evaluate_terms(terms, point)


def suite_variants(
    n: int,
    seed: int = DEFAULT_SEED,
    diagrams: Sequence[Diagram3] | None = None,
    triples: Sequence[tuple[int, int, int]] | None = None,
    npoints: int = 10,
) -> RunReport:
    diagrams = list(diagrams) if diagrams else [Diagram3.zero(), Diagram3((1,) * 7)]
    triples = list(triples) if triples else _triples(n)
    rep = RunReport(
        "verify variants",
        {"n": n, "seed": seed, "points": npoints, "m": [str(d) for d in diagrams],
         "triples": [list(t) for t in triples]},
    )
    for d in diagrams:
        for ijk in triples:
            forms = [contribution_singular(ijk, d, v, n) for v in Variant]
            points = random_points(n, npoints, seed, forms)
            ok, detail = singular_values_agree(ijk, d, n, points)
            rep.check(f"variants-equal m={d} ijk={''.join(map(str, ijk))}", ok, detail)
    point = random_points(n, 1, seed, [character_sum(Diagram3.zero(), n, Variant.SS).terms])[0]
    try:
        value = perturbed_identity_value(n, point)
    except PoleError as exc:
        rep.check("perturbed-special-breaks-identity", False, str(exc))
    else:
        rep.outputs["perturbed_value"] = str(value)
        rep.check(
            "perturbed-special-breaks-identity",
            value != 1,
            f"perturbed sum at {_fmt(point)} is {value}; expected != 1",
        )
    return rep


# -- oracle --------------------------------------------------------------------


def suite_oracle(n: int, diagrams: Sequence[Diagram3] | None = None, max_squares: int | None = None) -> RunReport:
    diagrams = list(diagrams) if diagrams else list(CORPUS)
    rep = RunReport("verify oracle", {"n": n, "m": [str(d) for d in diagrams]})
    skipped = []
    for d in diagrams:
        gd = GeneralDiagram.from_diagram3(d)
        try:
            truth = schur_module_character(gd, n, max_squares=max_squares)
        except OracleSizeError as exc:
            skipped.append({"m": str(d), "reason": str(exc)})
            continue
        formula = expand_character(character_sum(d, n))
        rep.check(
            f"oracle-character m={d}",
            formula == truth,
            "" if formula == truth else f"formula {formula} vs oracle {truth}",
        )
        dim = dimension(d, n)
        rep.check(f"oracle-dimension m={d}", dim == truth.dimension(), f"formula {dim} vs oracle {truth.dimension()}")
    rep.outputs["skipped"] = skipped
    checked = len(diagrams) - len(skipped)
    detail = f"{checked} of {len(diagrams)} diagrams within the oracle limits"
    if skipped:
        detail += f"; first skipped: {skipped[0]['reason']}"
    rep.check("oracle-nonempty", checked > 0, detail)
    return rep


# -- weyl ----------------------------------------------------------------------


def suite_weyl(n: int, max_part: int = 4) -> RunReport:
    rep = RunReport("verify weyl", {"n": n, "max_part": max_part})
    for lam in iter_partitions3(max_part):
        d = Diagram3.from_partition(lam)
        dim, expected = dimension(d, n), weyl_dimension(lam, n)
        rep.check(f"weyl-dimension lambda={lam.parts}", dim == expected, f"formula {dim} vs Weyl {expected}")
        if n <= 4:
            ch, s = expand_character(character_sum(d, n)), schur_polynomial(lam, n)
            rep.check(f"weyl-character lambda={lam.parts}", ch == s, f"formula {ch} vs Schur {s}")
    return rep


# -- geometry ------------------------------------------------------------------


def suite_geometry(n: int) -> RunReport:
    rep = RunReport("verify geometry", {"n": n})
    tabloids = enumerate_tabloids(n)
    expected = 11 * n * (n - 1) * (n - 2)
    rep.outputs["tabloids"] = len(tabloids)
    rep.check("tabloid-count", len(tabloids) == expected, f"{len(tabloids)} != {expected}")
    rep.check("tabloids-distinct", len(set(tabloids)) == len(tabloids), "duplicate tabloids")
    singular = [t for t in tabloids if classify(t).singular]
    rep.outputs["singular"] = len(singular)
    rep.check("singular-count", len(singular) == n * (n - 1) * (n - 2), f"{len(singular)} singular tabloids")

    bad_sum, bad_table = [], []
    for tau in tabloids:
        cls = classify(tau)
        dm = d_matrix(tau)
        total = sum(map(sum, dm))
        want = 3 * n - 2 if cls.singular else 3 * n - 3
        if total != want:
            bad_sum.append(f"{tau}: {total} != {want}")
        if cls.singular and dm != singular_d_table(*cls.ijk, n):
            bad_table.append(str(tau))
    rep.check("d-sum", not bad_sum, "; ".join(bad_sum[:3]))
    rep.check("singular-d-table", not bad_table, "; ".join(bad_table[:3]))

    bad_r = [str(t) for t in tabloids if not classify(t).singular
             and (len(r := r_multiset(t)) != 3 * n - 3 or 0 in r)]
    rep.check("smooth-r-multisets", not bad_r, "; ".join(bad_r[:3]))

    bad_eig = []
    for ijk in _triples(n):
        eta, zeta = ss_eigenvalues(*ijk, n)
        if len(eta) != 3 * n - 3 or len(zeta) != 3 * n - 3:
            bad_eig.append(f"{ijk}: list lengths {len(eta)}, {len(zeta)}")
        z_term, e_term = contribution_singular(ijk, Diagram3.zero(), Variant.SS, n)
        for term, lst in ((z_term, zeta), (e_term, eta)):
            chars: dict = {}
            for e in lst:
                chars[e.character] = chars.get(e.character, 0) + 1
            if dict(term.denominator) != chars:
                bad_eig.append(f"{ijk}: SS denominator of {term.source} differs from eigenvalue list")
        bundle = fm_normal_bundle(*ijk, n)
        cherns = sorted(e.chern for e in bundle)
        if len(bundle) != 3 * n - 4 or cherns != [-1, -1] + [0] * (3 * n - 6):
            bad_eig.append(f"{ijk}: FM bundle {len(bundle)} summands, Chern classes {cherns}")
    rep.check("eigenvalue-lists", not bad_eig, "; ".join(bad_eig[:3]))
    return rep


def run_suite(name: str, n: int, m: Diagram3 | None = None, seed: int | None = None,
              max_squares: int | None = None) -> RunReport:
    seed = DEFAULT_SEED if seed is None else seed
    if name == "identity":
        return suite_identity(n, seed)
    if name == "variants":
        return suite_variants(n, seed, [m] if m else None)
    if name == "oracle":
        return suite_oracle(n, [m] if m else None, max_squares)
    if name == "weyl":
        return suite_weyl(n)
    if name == "geometry":
        return suite_geometry(n)
    raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
