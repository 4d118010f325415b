"""
Combinatorial multiplication rules and structure constants.

The quasisymmetric rules are the two shuffle products on strong
compositions; their polynomial lifts are the slide products on weak
compositions, whose bump steps are found by bounded exhaustive search
with a runtime uniqueness assertion (the theory asserts a unique
dominance-least insertion but gives no algorithm; exhaustive search is
self-verifying at desk scale).  The symmetric rule is
Littlewood-Richardson via Yamanouchi skew tableaux.  Every rule can be
checked against polynomial multiplication pushed through the generic
solver.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Sequence

from . import bases, combinat, tableaux
from .bases import basis_polynomial
from .combinat import FormalSum, dominance_leq, pad, positive_part
from .expand import BasisExpansion, expand_via_solver


class BumpUniquenessError(RuntimeError):
    """The dominance-least bump insertion is missing or not unique,
    contradicting an assumption the product rules rely on."""


# ---------------------------------------------------------------------------
# shuffle products on strong compositions


def overlapping_shuffle_product(alpha: Sequence[int], beta: Sequence[int]) -> FormalSum:
    """Formal sum over overlapping shuffles, parts adding when they merge.

    >>> str(overlapping_shuffle_product((1,), (1,)))
    '1*(2) + 2*(1,1)'
    """
    alpha, beta = tuple(alpha), tuple(beta)
    out = FormalSum()

    def walk(i: int, j: int, prefix: tuple[int, ...]) -> None:
        if i == len(alpha) and j == len(beta):
            out.add_term(prefix, 1)
            return
        if i < len(alpha):
            walk(i + 1, j, prefix + (alpha[i],))
        if j < len(beta):
            walk(i, j + 1, prefix + (beta[j],))
        if i < len(alpha) and j < len(beta):
            walk(i + 1, j + 1, prefix + (alpha[i] + beta[j],))

    walk(0, 0, ())
    return out


def _encode_word(a: Sequence[int], even: bool) -> tuple[int, ...]:
    """Entry i of a contributes a_i copies of one letter, blocks strictly
    descending left to right; odd letters for the first factor, even for
    the second."""
    length = len(a)
    word: list[int] = []
    for i, count in enumerate(a):
        letter = 2 * (length - i) if even else 2 * (length - i) - 1
        word.extend([letter] * count)
    return tuple(word)


def _shuffles(A: Sequence[int], B: Sequence[int]):
    """All interleavings, one per choice of positions for the first word."""
    m, n = len(A), len(B)
    for positions in itertools.combinations(range(m + n), m):
        word = [0] * (m + n)
        taken = set(positions)
        it_a, it_b = iter(A), iter(B)
        for k in range(m + n):
            word[k] = next(it_a) if k in taken else next(it_b)
        yield tuple(word)


def shuffle_product(alpha: Sequence[int], beta: Sequence[int]) -> FormalSum:
    """Formal sum of descent compositions over all shuffles of the
    encoded words.

    >>> str(shuffle_product((1,), (1,)))
    '1*(1,1) + 1*(2)'
    """
    A = _encode_word(tuple(alpha), even=False)
    B = _encode_word(tuple(beta), even=True)
    out = FormalSum()
    for word in _shuffles(A, B):
        out.add_term(tableaux.descent_composition(word), 1)
    return out


# ---------------------------------------------------------------------------
# slide products on weak compositions


def _comp_by_parity(slots: Sequence[Sequence[int]], odd: bool) -> tuple[int, ...]:
    return tuple(sum(1 for letter in slot if letter % 2 == (1 if odd else 0)) for slot in slots)


def _placements(items: Sequence, n: int):
    """All length-n slot tuples holding the items in order, rest empty."""
    for positions in itertools.combinations(range(n), len(items)):
        slots: list[tuple[int, ...]] = [()] * n
        for pos, item in zip(positions, items):
            slots[pos] = item
        yield slots


def _common_length(a: Sequence[int], b: Sequence[int]) -> tuple[tuple[int, ...], tuple[int, ...], int]:
    n = max(len(a), len(b), 1)
    return pad(a, n), pad(b, n), n


def slide_product(a: Sequence[int], b: Sequence[int]) -> FormalSum:
    """The slide product of two weak compositions of a common length.

    Shuffles of the encoded words are kept when their run counts, by
    parity, dominate a and b; each survivor contributes the total letter
    count of its unique dominance-least empty-run insertion.
    """
    a, b, n = _common_length(a, b)
    A = _encode_word(a, even=False)
    B = _encode_word(b, even=True)
    out = FormalSum()
    for word in _shuffles(A, B):
        run_seq = tableaux.runs(word)
        if not dominance_leq(a, _comp_by_parity(run_seq, odd=True)):
            continue
        if not dominance_leq(b, _comp_by_parity(run_seq, odd=False)):
            continue
        out.add_term(_bump_runs(run_seq, a, b, n), 1)
    return out


def _bump_runs(run_seq, a, b, n) -> tuple[int, ...]:
    if len(run_seq) > n:
        raise BumpUniquenessError(
            f"{len(run_seq)} runs cannot be placed into {n} slots"
        )
    candidates = []
    for slots in _placements(run_seq, n):
        if not dominance_leq(a, _comp_by_parity(slots, odd=True)):
            continue
        if not dominance_leq(b, _comp_by_parity(slots, odd=False)):
            continue
        candidates.append(tuple(len(slot) for slot in slots))
    least = [c for c in candidates if all(dominance_leq(c, other) for other in candidates)]
    if len(least) != 1:
        raise BumpUniquenessError(
            f"no unique dominance-least insertion among {sorted(set(candidates))}"
        )
    return least[0]


def overlapping_slide_product(a: Sequence[int], b: Sequence[int]) -> FormalSum:
    """The overlapping slide product of weak compositions of a common length.

    Sums the bump of every pair (a', b') of equal-length dominating
    rearrangements with matching positive parts and no common zeros.
    """
    a, b, n = _common_length(a, b)
    ap, bp = positive_part(a), positive_part(b)
    out = FormalSum()
    k_min = max(len(ap), len(bp))
    for k in range(k_min, n + 1):
        if k == 0:
            out.add_term(_bump_pair((), (), a, b, n), 1)
            continue
        for a1 in _spread(ap, k):
            if not dominance_leq(a, a1):
                continue
            for b1 in _spread(bp, k):
                if not dominance_leq(b, b1):
                    continue
                if any(x + y == 0 for x, y in zip(a1, b1)):
                    continue
                out.add_term(_bump_pair(a1, b1, a, b, n), 1)
    return out


def _spread(parts: tuple[int, ...], k: int):
    """All length-k weak compositions whose positive part is ``parts``."""
    for positions in itertools.combinations(range(k), len(parts)):
        slots = [0] * k
        for pos, value in zip(positions, parts):
            slots[pos] = value
        yield tuple(slots)


def _bump_pair(a1, b1, a, b, n) -> tuple[int, ...]:
    total = tuple(x + y for x, y in zip(a1, b1))
    candidates = []
    for positions in itertools.combinations(range(n), len(total)):
        c = [0] * n
        ca = [0] * n
        cb = [0] * n
        for pos, (t, x, y) in zip(positions, zip(total, a1, b1)):
            c[pos], ca[pos], cb[pos] = t, x, y
        if dominance_leq(a, ca) and dominance_leq(b, cb):
            candidates.append(tuple(c))
    least = [c for c in candidates if all(dominance_leq(c, other) for other in candidates)]
    if len(least) != 1:
        raise BumpUniquenessError(
            f"no unique dominance-least bump among {sorted(set(candidates))}"
        )
    return least[0]


# ---------------------------------------------------------------------------
# Littlewood-Richardson


def lr_coefficient(lam: Sequence[int], mu: Sequence[int], nu: Sequence[int]) -> int:
    """The number of Yamanouchi skew semistandard tableaux of shape
    nu/lam and content mu; zero unless lam fits in nu and sizes add up.

    >>> lr_coefficient((2, 1), (2, 1), (3, 2, 1))
    2
    """
    lam, mu, nu = tuple(lam), tuple(mu), tuple(nu)
    if sum(lam) + sum(mu) != sum(nu) or len(lam) > len(nu):
        return 0
    if any(l > v for l, v in zip(lam, nu)):
        return 0
    count = 0
    for t in tableaux.enumerate_ssyt(nu, max(len(mu), 1), inner=lam):
        if tableaux.ssyt_weight(t, max(len(mu), 1)) == pad(mu, max(len(mu), 1)):
            if tableaux.is_yamanouchi(t):
                count += 1
    return count


# ---------------------------------------------------------------------------
# structure constants via the solver


def default_ambient(basis: str, ia, ib) -> int:
    if basis in bases.QUASISYMMETRIC_BASES or basis in bases.SYMMETRIC_BASES:
        return max(sum(ia) + sum(ib), 1)
    if basis == "schubert":
        return max(len(ia), len(ib), 1)
    return max(len(ia), len(ib), 1)


def structure_constants(basis: str, ia, ib, n: int | None = None) -> BasisExpansion:
    """Expand the product of two basis elements back in the same basis.

    For quasisymmetric bases the ambient defaults to the total degree so
    that every product term stays expressible.
    """
    if n is None:
        n = default_ambient(basis, ia, ib)
    product = basis_polynomial(basis, ia, n) * basis_polynomial(basis, ib, n)
    return expand_via_solver(product, basis, n)


# ---------------------------------------------------------------------------
# rule verification sweeps


@dataclass
class ProductRuleReport:
    rule: str
    checked: int = 0
    mismatches: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def to_text(self) -> str:
        lines = [f"rule {self.rule}: {self.checked} cases"]
        lines.extend(self.mismatches)
        lines.append("OK" if self.ok else f"MISMATCH {len(self.mismatches)} entries")
        return "\n".join(lines)


def _formal_to_expansion(basis: str, fs: FormalSum, strip: bool = False) -> BasisExpansion:
    out = BasisExpansion(basis)
    for index, coeff in fs.terms.items():
        out.add(combinat.strip_trailing_zeros(index) if strip else index, coeff)
    return out


def _strong_compositions_up_to(max_size: int):
    for total in range(1, max_size + 1):
        yield from combinat.compositions_of(total)


def verify_product_rule(rule: str, max_size: int = 4, max_entry: int = 2, max_len: int = 4) -> ProductRuleReport:
    """Check one combinatorial product rule against solver structure
    constants over its sweep.  QSym rules sweep composition sizes up to
    max_size; slide rules sweep entries up to max_entry and lengths up to
    max_len; the Littlewood-Richardson rule sweeps partition sizes up to
    max_size minus one.
    """
    report = ProductRuleReport(rule)
    if rule in ("shuffle-F", "oshuffle-M"):
        basis = "F" if rule == "shuffle-F" else "M"
        comb = shuffle_product if rule == "shuffle-F" else overlapping_shuffle_product
        for alpha in _strong_compositions_up_to(max_size):
            for beta in _strong_compositions_up_to(max_size):
                expected = _formal_to_expansion(basis, comb(alpha, beta))
                actual = structure_constants(basis, alpha, beta)
                report.checked += 1
                if expected != actual:
                    report.mismatches.append(f"{basis}: {alpha} * {beta}")
    elif rule in ("slide-fslide", "oslide-mslide"):
        basis = "fslide" if rule == "slide-fslide" else "mslide"
        comb = slide_product if rule == "slide-fslide" else overlapping_slide_product
        seen = set()
        for length in range(1, max_len + 1):
            for a in combinat.weak_compositions(length, max_entry):
                for b in combinat.weak_compositions(length, max_entry):
                    pa, pb, n = _common_length(a, b)
                    if (pa, pb) in seen:
                        continue
                    seen.add((pa, pb))
                    expected = _formal_to_expansion(basis, comb(pa, pb))
                    actual = structure_constants(basis, pa, pb, n)
                    report.checked += 1
                    if expected != actual:
                        report.mismatches.append(f"{basis}: {pa} * {pb}")
    elif rule == "lr-s":
        for sa in range(1, max_size):
            for sb in range(1, max_size):
                for lam in combinat.partitions_of(sa):
                    for mu in combinat.partitions_of(sb):
                        n = sa + sb
                        expected = BasisExpansion("s")
                        for nu in combinat.partitions_of(sa + sb, max_parts=n):
                            c = lr_coefficient(lam, mu, nu)
                            if c:
                                expected.add(nu, c)
                        actual = structure_constants("s", lam, mu, n)
                        report.checked += 1
                        if expected != actual:
                            report.mismatches.append(f"s: {lam} * {mu}")
    else:
        raise ValueError(f"unknown product rule {rule!r}")
    return report


# ---------------------------------------------------------------------------
# the key-times-key atom positivity harness


@dataclass
class ConjectureReport:
    name: str
    pairs_checked: int = 0
    max_coefficient: int = 0
    negative_findings: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.negative_findings

    def to_text(self) -> str:
        lines = [
            f"conjecture {self.name}",
            f"pairs checked: {self.pairs_checked}",
            f"max coefficient seen: {self.max_coefficient}",
            f"negative coefficients: {len(self.negative_findings)}",
        ]
        lines.extend(self.negative_findings)
        lines.append("OK" if self.ok else "MISMATCH 1 entries")
        return "\n".join(lines)


def conjecture_harness_reiner_shimozono(max_entry: int, max_len: int) -> ConjectureReport:
    """Expand every product of two key polynomials in the atom basis and
    record any negative coefficient (none are expected; a finding is
    either a major discovery or an implementation bug)."""
    report = ConjectureReport("reiner-shimozono")
    for length in range(1, max_len + 1):
        for a in combinat.weak_compositions(length, max_entry):
            for b in combinat.weak_compositions(length, max_entry):
                product = basis_polynomial("key", a, length) * basis_polynomial("key", b, length)
                expansion = expand_via_solver(product, "atom", length)
                report.pairs_checked += 1
                if expansion.terms:
                    report.max_coefficient = max(
                        report.max_coefficient, max(expansion.terms.values())
                    )
                for index, coeff in expansion.negative_terms():
                    report.negative_findings.append(
                        f"key{combinat.format_composition(a)} * key{combinat.format_composition(b)} "
                        f"-> atom{combinat.format_composition(index)} = {coeff}"
                    )
    return report
