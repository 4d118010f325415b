"""
Named verification sweeps: golden values, multi-formula agreement,
expansion rules against the solver, product rules, positivity evidence,
and stable-limit probes.  The CLI `verify` verb and the acceptance
tests are thin shells over run_suite.
"""
from __future__ import annotations

import itertools
import os
from dataclasses import dataclass, field
from typing import Callable, Iterable

from . import bases, combinat
from .bases import basis_polynomial, key_alternatives, schur_alternatives, schubert_alternatives
from .combinat import FormalSum, format_composition, format_permutation
from .expand import (
    BasisExpansion,
    COMBINATORIAL_RULES,
    combinatorial_expansion,
    compose_expansions,
    expand_via_solver,
    positivity_report,
    stable_limit_probe,
    verify_expansion,
)
from .polynomial import ExactPolynomial, is_symmetric
from .products import (
    lr_coefficient,
    overlapping_shuffle_product,
    overlapping_slide_product,
    shuffle_product,
    slide_product,
    structure_constants,
    verify_product_rule,
)

SUITES = ("golden", "agreement", "expansions", "products", "positivity", "stability", "all")


@dataclass
class CheckResult:
    name: str
    ok: bool
    detail: str = ""


@dataclass
class SuiteReport:
    suite: str
    results: list[CheckResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.results)

    def to_text(self) -> str:
        lines = []
        for r in self.results:
            status = "ok" if r.ok else "FAIL"
            suffix = f" ({r.detail})" if (r.detail and not r.ok) else ""
            lines.append(f"{status} {r.name}{suffix}")
        failures = sum(1 for r in self.results if not r.ok)
        lines.append("OK" if failures == 0 else f"MISMATCH {failures} entries")
        return "\n".join(lines)


def _sweep_map(fn: Callable, items: Iterable) -> list:
    """Map over independent sweep items, in input order.

    ASYMPOLY_THREADS bounds the worker count; the default of 1 runs
    sequentially.  Output order is the input order either way, so merged
    reports are deterministic.
    """
    items = list(items)
    workers = int(os.environ.get("ASYMPOLY_THREADS", "1") or "1")
    if workers <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    from concurrent.futures import ThreadPoolExecutor

    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


def _poly(terms: dict[tuple[int, ...], int], n: int) -> ExactPolynomial:
    return ExactPolynomial(n, terms)


def _check_eq(name: str, got, want) -> CheckResult:
    return CheckResult(name, got == want, "" if got == want else f"got {got!r}, want {want!r}")


# ---------------------------------------------------------------------------
# golden values


def golden_checks() -> list[CheckResult]:
    out: list[CheckResult] = []

    out.append(_check_eq(
        "schur (2,1) in 2 vars",
        basis_polynomial("s", (2, 1), 2),
        _poly({(2, 1): 1, (1, 2): 1}, 2),
    ))
    out.append(_check_eq(
        "monomial quasisymmetric (1,3) in 3 vars",
        basis_polynomial("M", (1, 3), 3),
        _poly({(1, 3, 0): 1, (1, 0, 3): 1, (0, 1, 3): 1}, 3),
    ))
    out.append(_check_eq(
        "fundamental quasisymmetric (1,3) in 3 vars",
        basis_polynomial("F", (1, 3), 3),
        _poly({(1, 3, 0): 1, (1, 0, 3): 1, (0, 1, 3): 1, (1, 1, 2): 1, (1, 2, 1): 1}, 3),
    ))
    out.append(_check_eq(
        "quasiSchur (1,3) in 3 vars",
        basis_polynomial("qs", (1, 3), 3),
        _poly({
            (1, 3, 0): 1, (2, 2, 0): 1, (1, 0, 3): 1, (2, 0, 2): 1, (1, 1, 2): 2,
            (1, 2, 1): 1, (2, 1, 1): 1, (0, 1, 3): 1, (0, 2, 2): 1,
        }, 3),
    ))
    out.append(_check_eq(
        "atom (1,0,3)",
        basis_polynomial("atom", (1, 0, 3), 3),
        _poly({(1, 0, 3): 1, (1, 1, 2): 1, (2, 0, 2): 1, (1, 2, 1): 1, (2, 1, 1): 1}, 3),
    ))
    out.append(_check_eq(
        "quasikey (1,0,3)",
        basis_polynomial("qkey", (1, 0, 3), 3),
        _poly({
            (1, 3, 0): 1, (2, 2, 0): 1, (1, 0, 3): 1, (1, 1, 2): 1,
            (2, 0, 2): 1, (1, 2, 1): 1, (2, 1, 1): 1,
        }, 3),
    ))
    out.append(_check_eq(
        "particle (1,0,3)",
        basis_polynomial("particle", (1, 0, 3), 3),
        _poly({(1, 0, 3): 1, (1, 1, 2): 1, (1, 2, 1): 1}, 3),
    ))

    key021 = _poly({(0, 2, 1): 1, (1, 1, 1): 1, (2, 0, 1): 1, (2, 1, 0): 1, (1, 2, 0): 1}, 3)
    for name, poly in key_alternatives((0, 2, 1), 3).items():
        out.append(_check_eq(f"key (0,2,1) via {name}", poly, key021))

    schub321 = _poly({(2, 1, 0): 1}, 3)
    for name, poly in schubert_alternatives((3, 2, 1), 3).items():
        out.append(_check_eq(f"schubert 321 via {name}", poly, schub321))

    schub15324 = _poly({
        (0, 3, 1, 0, 0): 1, (1, 2, 1, 0, 0): 1, (2, 1, 1, 0, 0): 1,
        (3, 1, 0, 0, 0): 1, (3, 0, 1, 0, 0): 1, (1, 3, 0, 0, 0): 1,
        (2, 2, 0, 0, 0): 1,
    }, 5)
    for name, poly in schubert_alternatives((1, 5, 3, 2, 4), 5).items():
        out.append(_check_eq(f"schubert 15324 via {name}", poly, schub15324))

    out.append(_check_eq("lehmer code of 2413", combinat.lehmer_code((2, 4, 1, 3)), (1, 2, 0, 0)))
    out.append(_check_eq(
        "lswap closure of (1,0,3)",
        combinat.lswap_closure((1, 0, 3)),
        frozenset({(1, 0, 3), (1, 3, 0), (3, 0, 1), (3, 1, 0)}),
    ))
    out.append(_check_eq(
        "qlswap of (1,0,3)",
        combinat.qlswap((1, 0, 3)),
        frozenset({(1, 0, 3), (3, 0, 1)}),
    ))
    out.append(_check_eq("LR coefficient c((2,1),(2,1);(3,2,1))", lr_coefficient((2, 1), (2, 1), (3, 2, 1)), 2))

    # the sorted sum of two fundamentals is not symmetric
    f31 = basis_polynomial("F", (3, 1), 4) + basis_polynomial("F", (1, 3), 4)
    out.append(_check_eq(
        "F31+F13 monomial-quasisymmetric expansion",
        expand_via_solver(f31, "M", 4).terms,
        {(3, 1): 1, (2, 1, 1): 1, (1, 2, 1): 2, (1, 1, 2): 1, (1, 3): 1, (1, 1, 1, 1): 2},
    ))
    out.append(CheckResult("F31+F13 is not symmetric", not is_symmetric(f31)))

    return out


def golden_product_checks() -> list[CheckResult]:
    out: list[CheckResult] = []

    oshuffle = overlapping_shuffle_product((2,), (1, 2))
    out.append(_check_eq(
        "overlapping shuffle (2) x (1,2)",
        oshuffle,
        FormalSum({(2, 1, 2): 1, (1, 2, 2): 2, (3, 2): 1, (1, 4): 1}),
    ))
    out.append(_check_eq(
        "M structure constants match overlapping shuffle",
        structure_constants("M", (2,), (1, 2)).terms,
        dict(oshuffle.terms),
    ))

    shuffle = shuffle_product((2,), (1, 2))
    out.append(_check_eq(
        "shuffle (2) x (1,2)",
        shuffle,
        FormalSum({
            (1, 2, 2): 2, (1, 1, 2, 1): 1, (1, 3, 1): 1, (2, 2, 1): 1,
            (1, 1, 3): 1, (2, 1, 2): 1, (1, 4): 1, (2, 3): 1, (3, 2): 1,
        }),
    ))
    out.append(_check_eq(
        "F structure constants match shuffle",
        structure_constants("F", (2,), (1, 2)).terms,
        dict(shuffle.terms),
    ))

    slide = slide_product((0, 1, 0, 2), (1, 0, 0, 1))
    slide_expected = FormalSum({
        (2, 0, 0, 3): 1, (1, 1, 0, 3): 1, (2, 0, 2, 1): 1, (1, 1, 2, 1): 1,
        (2, 0, 1, 2): 1, (1, 1, 1, 2): 1, (1, 2, 0, 2): 1,
    })
    out.append(_check_eq("slide (0,1,0,2) x (1,0,0,1)", slide, slide_expected))
    out.append(_check_eq(
        "fslide structure constants match slide product",
        structure_constants("fslide", (0, 1, 0, 2), (1, 0, 0, 1), 4).terms,
        dict(slide_expected.terms),
    ))

    oslide = overlapping_slide_product((0, 1, 0, 2), (1, 0, 0, 1))
    oslide_expected = FormalSum({
        (1, 1, 1, 2): 1, (1, 1, 2, 1): 1, (1, 1, 0, 3): 1, (1, 2, 0, 2): 1,
        (2, 0, 1, 2): 1, (2, 0, 2, 1): 1, (2, 0, 0, 3): 1,
    })
    out.append(_check_eq("overlapping slide (0,1,0,2) x (1,0,0,1)", oslide, oslide_expected))
    out.append(_check_eq(
        "mslide structure constants match overlapping slide product",
        structure_constants("mslide", (0, 1, 0, 2), (1, 0, 0, 1), 4).terms,
        dict(oslide_expected.terms),
    ))

    return out


# ---------------------------------------------------------------------------
# multi-formula agreement


def _all_agree(alternatives: dict[str, ExactPolynomial]) -> bool:
    polys = list(alternatives.values())
    return all(p == polys[0] for p in polys)


def schubert_agreement_check(schubert_n: int = 4) -> CheckResult:
    cases = [
        p
        for n in range(1, schubert_n + 1)
        for p in combinat.permutations_of_size(n)
    ]
    agree = _sweep_map(
        lambda p: _all_agree(schubert_alternatives(p, max(len(p) - 1, 1))), cases
    )
    bad = [format_permutation(p) for p, ok in zip(cases, agree) if not ok]
    return CheckResult(
        f"schubert four-way agreement on S_1..S_{schubert_n} ({len(cases)} permutations)",
        not bad, ", ".join(bad[:5]),
    )


def key_agreement_check(max_entry: int = 3, max_len: int = 4) -> CheckResult:
    cases = [
        a
        for length in range(1, max_len + 1)
        for a in combinat.weak_compositions(length, max_entry)
    ]
    agree = _sweep_map(lambda a: _all_agree(key_alternatives(a, len(a))), cases)
    bad = [format_composition(a) for a, ok in zip(cases, agree) if not ok]
    return CheckResult(
        f"key three-way agreement, entries <= {max_entry}, length <= {max_len} ({len(cases)} indices)",
        not bad, ", ".join(bad[:5]),
    )


def schur_agreement_check(schur_size: int = 5, schur_n: int = 4) -> CheckResult:
    bad = []
    count = 0
    for size in range(0, schur_size + 1):
        for n in range(1, schur_n + 1):
            for lam in combinat.partitions_of(size, max_parts=n):
                count += 1
                if not _all_agree(schur_alternatives(lam, n)):
                    bad.append(f"{format_composition(lam)}@n={n}")
    return CheckResult(
        f"schur four-way agreement, size <= {schur_size}, n <= {schur_n} ({count} cases)",
        not bad, ", ".join(bad[:5]),
    )


def agreement_checks(max_entry: int = 3, max_len: int = 4, schubert_n: int = 4,
                     schur_size: int = 5, schur_n: int = 4) -> list[CheckResult]:
    return [
        schubert_agreement_check(schubert_n),
        key_agreement_check(max_entry, max_len),
        schur_agreement_check(schur_size, schur_n),
    ]


# ---------------------------------------------------------------------------
# expansion rules against the solver


def _rule_index_sweep(species: str, max_entry: int, max_len: int):
    """Indices to verify a rule over, per index species."""
    if species == "weak":
        for length in range(1, max_len + 1):
            yield from ((a, length) for a in combinat.weak_compositions(length, max_entry))
    elif species == "strong":
        for length in range(1, max_len + 1):
            for alpha in itertools.product(range(1, max_entry + 1), repeat=length):
                yield alpha, max_len
    elif species == "partition":
        for length in range(0, max_len + 1):
            for lam in itertools.product(range(1, max_entry + 1), repeat=length):
                if combinat.is_partition(lam) or lam == ():
                    yield lam, max_len
    else:
        raise ValueError(species)


def expansion_checks(max_entry: int = 3, max_len: int = 4, schubert_n: int = 4) -> list[CheckResult]:
    out: list[CheckResult] = []

    for (source, target) in sorted(COMBINATORIAL_RULES):
        if source == "schubert":
            cases = [(p, schubert_n) for p in combinat.permutations_of_size(schubert_n)]
        else:
            cases = list(_rule_index_sweep(bases.INDEX_SPECIES[source], max_entry, max_len))
        equal = _sweep_map(
            lambda case: verify_expansion(source, case[0], target, case[1]).equal, cases
        )
        bad = [str(index) for (index, _), ok in zip(cases, equal) if not ok]
        out.append(CheckResult(
            f"rule {source}->{target} vs solver ({len(cases)} indices)", not bad, ", ".join(bad[:5])
        ))

    # composed arrows agree pairwise
    bad = []
    count = 0
    for length in range(1, max_len + 1):
        for a in combinat.weak_compositions(length, max_entry):
            n = length
            count += 1
            via_qkey = compose_expansions(combinatorial_expansion("key", a, "qkey", n), "atom", n)
            direct = combinatorial_expansion("key", a, "atom", n)
            if via_qkey != direct:
                bad.append(f"key->qkey->atom vs key->atom at {a}")
                continue
            left = compose_expansions(combinatorial_expansion("qkey", a, "atom", n), "particle", n)
            right = compose_expansions(combinatorial_expansion("qkey", a, "fslide", n), "particle", n)
            if left != right:
                bad.append(f"qkey->atom->particle vs qkey->fslide->particle at {a}")
                continue
            mono = compose_expansions(combinatorial_expansion("fslide", a, "mslide", n), "x", n)
            if mono != combinatorial_expansion("fslide", a, "x", n):
                bad.append(f"fslide->mslide->x vs fslide->x at {a}")
    out.append(CheckResult(f"composed arrows agree ({count} indices)", not bad, ", ".join(bad[:3])))

    # solver-only expansion: Schubert into keys is nonnegative
    bad = []
    count = 0
    for p in combinat.permutations_of_size(schubert_n):
        f = basis_polynomial("schubert", p, schubert_n)
        expansion = expand_via_solver(f, "key", schubert_n)
        count += 1
        if not expansion.is_nonnegative():
            bad.append(format_permutation(p))
    out.append(CheckResult(
        f"schubert->key solver expansion nonnegative on S_{schubert_n} ({count} permutations)",
        not bad, ", ".join(bad[:5]),
    ))

    return out


# ---------------------------------------------------------------------------
# product rules and positivity


def product_checks(max_size: int = 4, max_entry: int = 2, max_len: int = 4) -> list[CheckResult]:
    out = []
    for rule in ("oshuffle-M", "shuffle-F", "lr-s", "oslide-mslide", "slide-fslide"):
        report = verify_product_rule(rule, max_size=max_size, max_entry=max_entry, max_len=max_len)
        out.append(CheckResult(
            f"product rule {rule} vs solver ({report.checked} pairs)",
            report.ok, ", ".join(report.mismatches[:5]),
        ))
    return out


def _pairs(iterable):
    items = list(iterable)
    return itertools.product(items, items)


def positivity_checks(max_size: int = 3) -> list[CheckResult]:
    out: list[CheckResult] = []

    for basis in ("x", "m", "e", "h", "s"):
        bad = []
        count = 0
        if basis == "x":
            cases = _pairs(a for a in combinat.weak_compositions(2, 2))
        else:
            cases = _pairs(
                lam for size in range(1, max_size + 1)
                for lam in combinat.partitions_of(size)
            )
        for ia, ib in cases:
            expansion = structure_constants(basis, ia, ib)
            count += 1
            if not expansion.is_nonnegative():
                bad.append(f"{format_composition(ia)}*{format_composition(ib)}")
        out.append(CheckResult(
            f"{basis} structure constants nonnegative ({count} pairs)", not bad, ", ".join(bad[:5])
        ))

    for basis in ("M", "F"):
        bad = []
        count = 0
        for ia, ib in _pairs(
            alpha for size in range(1, max_size + 1)
            for alpha in combinat.compositions_of(size)
        ):
            expansion = structure_constants(basis, ia, ib)
            count += 1
            if not expansion.is_nonnegative():
                bad.append(f"{format_composition(ia)}*{format_composition(ib)}")
        out.append(CheckResult(
            f"{basis} structure constants nonnegative ({count} pairs)", not bad, ", ".join(bad[:5])
        ))

    for basis in ("fslide", "mslide"):
        bad = []
        count = 0
        for ia, ib in _pairs(combinat.weak_compositions(3, 2)):
            expansion = structure_constants(basis, ia, ib, 3)
            count += 1
            if not expansion.is_nonnegative():
                bad.append(f"{format_composition(ia)}*{format_composition(ib)}")
        out.append(CheckResult(
            f"{basis} structure constants nonnegative ({count} pairs)", not bad, ", ".join(bad[:5])
        ))

    bad = []
    count = 0
    for p in combinat.permutations_of_size(4):
        for q in combinat.permutations_of_size(4):
            if combinat.perm_length(p) + combinat.perm_length(q) > 6:
                continue
            expansion = structure_constants("schubert", p, q, 4)
            count += 1
            if not expansion.is_nonnegative():
                bad.append(f"{format_permutation(p)}*{format_permutation(q)}")
    out.append(CheckResult(
        f"schubert structure constants nonnegative, S_4 degree <= 6 ({count} pairs)",
        not bad, ", ".join(bad[:5]),
    ))

    # the non-star bases must show at least one negative witness at desk scale
    witness = find_negative_witness("qs", max_size=3)
    out.append(CheckResult(
        "quasiSchur negative structure constant found", witness is not None,
        "no witness located" if witness is None else "",
    ))
    for basis in ("key", "atom", "qkey", "particle"):
        witness = find_negative_witness(basis, max_size=3)
        out.append(CheckResult(
            f"{basis} negative structure constant found", witness is not None,
            "no witness located" if witness is None else "",
        ))

    return out


def find_negative_witness(basis: str, max_size: int = 3):
    """Search small products for a negative structure constant; returns
    (ia, ib, index, coefficient) or None."""
    if basis == "qs":
        cases = _pairs(
            alpha for size in range(1, max_size + 1)
            for alpha in combinat.compositions_of(size)
        )
        ambient = None
    else:
        cases = _pairs(combinat.weak_compositions(3, 2))
        ambient = 3
    for ia, ib in cases:
        expansion = structure_constants(basis, ia, ib, ambient)
        negatives = expansion.negative_terms()
        if negatives:
            index, coeff = negatives[0]
            return ia, ib, index, coeff
    return None


# ---------------------------------------------------------------------------
# stability


def stability_checks(m_max: int = 4) -> list[CheckResult]:
    out = []
    key_probe = stable_limit_probe("key", (1, 0, 3), m_max, 3)
    out.append(CheckResult(
        "key family of (1,0,3) stabilizes to schur (3,1)", key_probe.stabilized,
        key_probe.to_text(),
    ))
    qkey_probe = stable_limit_probe("quasikey", (1, 0, 3), m_max, 3)
    out.append(CheckResult(
        "quasikey family of (1,0,3) stabilizes to quasiSchur (1,3)", qkey_probe.stabilized,
        qkey_probe.to_text(),
    ))
    flat = stable_limit_probe("key", (1, 3), m_max, 2)
    out.append(CheckResult(
        "weakly increasing index matches its schur limit at m=0",
        flat.rows[0][2], flat.to_text(),
    ))
    constant = stable_limit_probe("quasikey", (1, 3), m_max, 2)
    out.append(CheckResult(
        "quasikey family of (1,3) constant in m",
        all(row[1] for row in constant.rows[1:]), constant.to_text(),
    ))
    return out


# ---------------------------------------------------------------------------
# suite driver


def run_suite(suite: str, max_entry: int = 3, max_len: int = 4) -> SuiteReport:
    """Run one named verification suite; `all` bundles every suite."""
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from {SUITES}")
    results: list[CheckResult] = []
    if suite in ("golden", "all"):
        results.extend(golden_checks())
        results.extend(golden_product_checks())
    if suite in ("agreement", "all"):
        results.extend(agreement_checks(max_entry=max_entry, max_len=max_len))
    if suite in ("expansions", "all"):
        results.extend(expansion_checks(max_entry=max_entry, max_len=max_len))
    if suite in ("products", "all"):
        results.extend(product_checks(max_entry=min(max_entry, 2), max_len=max_len))
    if suite in ("positivity", "all"):
        results.extend(positivity_checks())
    if suite in ("stability", "all"):
        results.extend(stability_checks())
    return SuiteReport(suite, results)
