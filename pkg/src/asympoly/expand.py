"""
Change of basis: the generic unitriangular solver (the brute-force
oracle used to cross-check everything else), the combinatorial expansion
rules, positivity reporting, and the stable-limit probe.

The solver works monomial by monomial under the prefix-sum-lex term
order: asymmetric-world bases extract the minimal remaining monomial
(their monomial formulas only add dominance-greater terms), while the
symmetric and quasisymmetric bases extract the maximal one.  Each
extraction is dynamically checked: the selected monomial must be shaped
like a valid index, and subtracting the basis element must actually
eliminate it.  The complete homogeneous basis is not unitriangular in
any monomial term order, so it is solved through the elementary basis
via the standard involution swapping the two families.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Sequence

from . import bases, combinat, tableaux
from .bases import basis_polynomial
from .combinat import (
    dominance_leq,
    format_composition,
    format_permutation,
    pad,
    positive_part,
    refines,
    strip_trailing_zeros,
    support,
    term_order_key,
)
from .polynomial import ExactPolynomial


class NotInSpanError(ValueError):
    """The polynomial does not lie in the span of the target basis."""


class TriangularityError(RuntimeError):
    """A basis element failed to eliminate its own leading monomial;
    this signals a broken basis implementation, not bad input."""


class UnsupportedPairError(ValueError):
    """No combinatorial rule is implemented for this (source, target)."""


@dataclass
class BasisExpansion:
    """A finitely supported integer combination of basis indices."""

    basis: str
    terms: dict[tuple, int] = field(default_factory=dict)

    def __post_init__(self):
        self.terms = {tuple(k): v for k, v in self.terms.items() if v != 0}

    def add(self, index, coeff: int) -> None:
        index = tuple(index)
        c = self.terms.get(index, 0) + coeff
        if c:
            self.terms[index] = c
        else:
            self.terms.pop(index, None)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, BasisExpansion)
            and self.basis == other.basis
            and self.terms == other.terms
        )

    def __iter__(self):
        return iter(sorted(self.terms.items()))

    def __len__(self):
        return len(self.terms)

    def negative_terms(self) -> list[tuple[tuple, int]]:
        return sorted((k, v) for k, v in self.terms.items() if v < 0)

    def is_nonnegative(self) -> bool:
        return not self.negative_terms()

    def format_index(self, index) -> str:
        if bases.INDEX_SPECIES[self.basis] == "permutation":
            return format_permutation(index)
        return format_composition(index)

    def to_lines(self) -> list[str]:
        return [
            f"{self.basis} {self.format_index(k)} {v}"
            for k, v in sorted(self.terms.items())
        ]

    def to_polynomial(self, n: int) -> ExactPolynomial:
        out = ExactPolynomial.zero(n)
        for index, coeff in self.terms.items():
            out = out + coeff * basis_polynomial(self.basis, index, n)
        return out


# ---------------------------------------------------------------------------
# the solver


def _solver_direction(basis: str) -> str:
    if basis in bases.ASYMMETRIC_BASES:
        return "min"
    if basis in bases.SYMMETRIC_BASES or basis in bases.QUASISYMMETRIC_BASES:
        return "max"
    raise ValueError(f"unknown basis {basis!r}")


def _index_of_monomial(basis: str, a: tuple[int, ...]):
    """Map an extreme monomial to the basis index it must belong to."""
    if basis == "schubert":
        return combinat.code_to_permutation(a)
    if basis in bases.ASYMMETRIC_BASES:
        return a
    if basis in bases.SYMMETRIC_BASES:
        lam = strip_trailing_zeros(a)
        if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
            raise NotInSpanError(
                f"extreme monomial {a} is not partition-shaped; "
                f"polynomial is outside the span of basis {basis}"
            )
        if basis == "e":
            return combinat.conjugate_partition(lam)
        return lam
    # quasisymmetric: the positive entries must form a prefix
    alpha = strip_trailing_zeros(a)
    if 0 in alpha:
        raise NotInSpanError(
            f"extreme monomial {a} is not index-shaped; "
            f"polynomial is outside the span of basis {basis}"
        )
    return alpha


def _expand_component(f: ExactPolynomial, target: str, n: int, direction: str) -> BasisExpansion:
    pick = min if direction == "min" else max
    out = BasisExpansion(target)
    remainder = ExactPolynomial(n, dict(f.terms))
    max_steps = 64 * (len(f.terms) + 8) ** 2
    for _ in range(max_steps):
        if not remainder:
            return out
        a = pick(remainder.terms, key=term_order_key)
        coeff = remainder.terms[a]
        index = _index_of_monomial(target, a)
        b = basis_polynomial(target, index, n)
        lead = b.terms.get(a, 0)
        if lead != 1:
            raise TriangularityError(
                f"basis {target} element at index {index} has coefficient "
                f"{lead} on its own extreme monomial {a}"
            )
        remainder = remainder - coeff * b
        if a in remainder.terms:
            raise TriangularityError(
                f"subtracting {target}[{index}] failed to eliminate {a}"
            )
        out.add(index, coeff)
    raise TriangularityError(f"solver failed to terminate for basis {target}")


def expand_via_solver(
    f: ExactPolynomial, target: str, n: int | None = None, direction: str | None = None
) -> BasisExpansion:
    """Expand f in the target basis by greedy extreme-monomial elimination.

    Homogeneous components are solved independently and merged.  Raises
    NotInSpanError when f does not lie in the basis span and
    TriangularityError when a basis element misbehaves.
    """
    if n is None:
        n = f.nvars
    f = f.resized(n)
    if target == "h":
        return _expand_homogeneous_basis(f, n)
    direction = direction or _solver_direction(target)
    out = BasisExpansion(target)
    for component in f.homogeneous_components().values():
        partial = _expand_component(component, target, n, direction)
        for index, coeff in partial.terms.items():
            out.add(index, coeff)
    return out


def _expand_homogeneous_basis(f: ExactPolynomial, n: int) -> BasisExpansion:
    """Solve the h expansion through e and the e<->h involution."""
    in_e = expand_via_solver(f, "e", n)
    omega = ExactPolynomial.zero(n)
    for lam, coeff in in_e.terms.items():
        omega = omega + coeff * basis_polynomial("h", lam, n)
    of_omega = expand_via_solver(omega, "e", n)
    return BasisExpansion("h", dict(of_omega.terms))


# ---------------------------------------------------------------------------
# combinatorial expansion rules


def _rule_F_to_M(alpha, n):
    out = BasisExpansion("M")
    for beta in combinat.refinements(alpha):
        if len(beta) <= n:
            out.add(beta, 1)
    return out


def _rule_m_to_M(lam, n):
    out = BasisExpansion("M")
    for alpha in set(itertools.permutations(lam)):
        out.add(alpha, 1)
    return out


def _rule_s_to_qs(lam, n):
    out = BasisExpansion("qs")
    for alpha in set(itertools.permutations(lam)):
        out.add(alpha, 1)
    return out


def _rule_s_to_m(lam, n):
    out = BasisExpansion("m")
    for t in tableaux.enumerate_ssyt(lam, n):
        w = tableaux.ssyt_weight(t, n)
        mu = strip_trailing_zeros(w)
        if combinat.is_partition(mu) or mu == ():
            out.add(mu, 1)
    return out


def _pieri_multiply(expansion: BasisExpansion, factor: tuple[int, ...], n: int) -> BasisExpansion:
    from .products import lr_coefficient

    out = BasisExpansion("s")
    for mu, coeff in expansion.terms.items():
        size = sum(mu) + sum(factor)
        for nu in combinat.partitions_of(size, max_parts=n):
            if len(mu) <= len(nu) and all(m <= v for m, v in zip(mu, nu)):
                c = lr_coefficient(mu, factor, nu)
                if c:
                    out.add(nu, coeff * c)
    return out


def _rule_e_to_s(lam, n):
    out = BasisExpansion("s", {(): 1})
    for part in lam:
        out = _pieri_multiply(out, (1,) * part, n)
    return out


def _rule_h_to_s(lam, n):
    out = BasisExpansion("s", {(): 1})
    for part in lam:
        out = _pieri_multiply(out, (part,), n)
    return out


def _rule_qs_to_F(alpha, n):
    out = BasisExpansion("F")
    for shape in bases._shapes_with_positive_part(tuple(alpha), n):
        for t in tableaux.enumerate_composition_tableaux(shape):
            if tableaux.is_initial_tableau(t) and tableaux.is_quasi_yamanouchi_tableau(t):
                w = tableaux.tableau_weight(t, n)
                out.add(positive_part(w), 1)
    return out


def _rule_schubert_to_fslide(p, n):
    out = BasisExpansion("fslide")
    p = combinat.strip_fixed_points(p) or (1,)
    for d in tableaux.enumerate_pipe_dreams(p):
        if tableaux.is_quasi_yamanouchi_pipe_dream(d):
            w = tableaux.pipe_dream_weight(d, len(p))
            out.add(pad(w, n), 1)
    return out


def _quasikey_shapes(a, n):
    a = pad(a, n)
    for b in bases._shapes_with_positive_part(positive_part(a), n):
        if dominance_leq(a, b):
            yield b


def _rule_qkey_to_atom(a, n):
    out = BasisExpansion("atom")
    for b in _quasikey_shapes(a, n):
        out.add(b, 1)
    return out


def _rule_qkey_to_fslide(a, n):
    out = BasisExpansion("fslide")
    supp = support(pad(a, n))
    for b in _quasikey_shapes(a, n):
        for t in tableaux.enumerate_composition_tableaux(b):
            if not tableaux.is_quasi_yamanouchi_tableau(t):
                continue
            w = tableaux.tableau_weight(t, n)
            if support(w) >= supp:
                out.add(w, 1)
    return out


def _rule_key_to_atom(a, n):
    out = BasisExpansion("atom")
    for b in combinat.lswap_closure(pad(a, n)):
        out.add(b, 1)
    return out


def _rule_key_to_qkey(a, n):
    out = BasisExpansion("qkey")
    for b in combinat.qlswap(pad(a, n)):
        out.add(b, 1)
    return out


def _rule_atom_to_particle(a, n):
    out = BasisExpansion("particle")
    for t in tableaux.enumerate_composition_tableaux(pad(a, n)):
        if tableaux.is_particle_highest(t):
            out.add(tableaux.tableau_weight(t, n), 1)
    return out


def _rule_fslide_to_particle(a, n):
    out = BasisExpansion("particle")
    a = pad(a, n)
    for b in _quasikey_shapes(a, n):
        out.add(b, 1)
    return out


def _rule_fslide_to_mslide(a, n):
    a = pad(a, n)
    ap = positive_part(a)
    candidates: dict[tuple[int, ...], list[tuple[int, ...]]] = {}
    for b in bases._dominating_compositions(a):
        if refines(positive_part(b), ap):
            candidates.setdefault(positive_part(b), []).append(b)
    out = BasisExpansion("mslide")
    for group in candidates.values():
        for b in group:
            if all(dominance_leq(b, c) for c in group):
                out.add(b, 1)
    return out


def _monomial_rule(basis):
    def rule(a, n):
        out = BasisExpansion("x")
        for e, coeff in basis_polynomial(basis, a, n).terms.items():
            out.add(e, coeff)
        return out

    return rule


COMBINATORIAL_RULES: dict[tuple[str, str], Callable] = {
    ("F", "M"): _rule_F_to_M,
    ("m", "M"): _rule_m_to_M,
    ("s", "qs"): _rule_s_to_qs,
    ("s", "m"): _rule_s_to_m,
    ("e", "s"): _rule_e_to_s,
    ("h", "s"): _rule_h_to_s,
    ("qs", "F"): _rule_qs_to_F,
    ("schubert", "fslide"): _rule_schubert_to_fslide,
    ("qkey", "atom"): _rule_qkey_to_atom,
    ("qkey", "fslide"): _rule_qkey_to_fslide,
    ("key", "atom"): _rule_key_to_atom,
    ("key", "qkey"): _rule_key_to_qkey,
    ("atom", "particle"): _rule_atom_to_particle,
    ("fslide", "particle"): _rule_fslide_to_particle,
    ("fslide", "mslide"): _rule_fslide_to_mslide,
    ("mslide", "x"): _monomial_rule("mslide"),
    ("fslide", "x"): _monomial_rule("fslide"),
    ("particle", "x"): _monomial_rule("particle"),
}


def combinatorial_expansion(source: str, index, target: str, n: int) -> BasisExpansion:
    """Expand one basis element in another basis by the stated
    combinatorial rule (never through the solver)."""
    rule = COMBINATORIAL_RULES.get((source, target))
    if rule is None:
        raise UnsupportedPairError(f"no combinatorial rule for {source} -> {target}")
    return rule(index, n)


def compose_expansions(first: BasisExpansion, target: str, n: int) -> BasisExpansion:
    """Push an expansion through the combinatorial rule into a further basis."""
    out = BasisExpansion(target)
    for index, coeff in first.terms.items():
        inner = combinatorial_expansion(first.basis, index, target, n)
        for idx2, c2 in inner.terms.items():
            out.add(idx2, coeff * c2)
    return out


# ---------------------------------------------------------------------------
# verification


@dataclass
class ExpansionReport:
    source: str
    index: tuple
    target: str
    n: int
    combinatorial: BasisExpansion
    solver: BasisExpansion

    @property
    def equal(self) -> bool:
        return self.combinatorial.terms == self.solver.terms

    def diff(self) -> list[tuple[tuple, int, int]]:
        keys = set(self.combinatorial.terms) | set(self.solver.terms)
        rows = []
        for k in sorted(keys):
            a = self.combinatorial.terms.get(k, 0)
            b = self.solver.terms.get(k, 0)
            if a != b:
                rows.append((k, a, b))
        return rows

    def to_text(self) -> str:
        lines = self.combinatorial.to_lines()
        mismatches = self.diff()
        if mismatches:
            lines.append(f"MISMATCH {len(mismatches)} entries")
        else:
            lines.append("OK")
        return "\n".join(lines)


def verify_expansion(source: str, index, target: str, n: int) -> ExpansionReport:
    """Compare the combinatorial rule against the solver on one element."""
    comb = combinatorial_expansion(source, index, target, n)
    f = basis_polynomial(source, index, n)
    solved = expand_via_solver(f, target, n)
    return ExpansionReport(source, tuple(index), target, n, comb, solved)


@dataclass
class PositivityReport:
    positive: bool
    witnesses: list[tuple[tuple, int]]

    def to_text(self, basis: str = "") -> str:
        if self.positive:
            return "positive"
        head = f"negative witnesses in {basis}: " if basis else "negative witnesses: "
        return head + ", ".join(
            f"{format_composition(k)}:{v}" for k, v in self.witnesses
        )


def positivity_report(expansion: BasisExpansion) -> PositivityReport:
    witnesses = expansion.negative_terms()
    return PositivityReport(positive=not witnesses, witnesses=witnesses)


# ---------------------------------------------------------------------------
# stable limits


@dataclass
class StableLimitReport:
    family: str
    index: tuple[int, ...]
    n_window: int
    rows: list[tuple[int, bool, bool]]  # (m, equals previous, equals limit)

    @property
    def stabilized(self) -> bool:
        return bool(self.rows) and self.rows[-1][2]

    def to_text(self) -> str:
        lines = [
            f"m={m} consecutive={'=' if same else '!'} limit={'=' if lim else '!'}"
            for m, same, lim in self.rows
        ]
        lines.append("OK" if self.stabilized else "MISMATCH 1 entries")
        return "\n".join(lines)


def _window(f: ExactPolynomial, w: int) -> ExactPolynomial:
    """Restrict to monomials supported on the first w variables."""
    out: dict[tuple[int, ...], int] = {}
    for e, c in f.terms.items():
        if not any(e[w:]):
            out[e[:w]] = c
    return ExactPolynomial(w, out)


def stable_limit_probe(family: str, a: Sequence[int], m_max: int, n_window: int) -> StableLimitReport:
    """Probe coefficient stabilization of the prepended-zeros family.

    The key family stabilizes to the Schur polynomial of the sorted index,
    the quasikey family to the quasiSchur polynomial of the positive part,
    both restricted to the window of the first n_window variables.
    """
    a = tuple(a)
    if family == "key":
        limit = bases.schur(strip_trailing_zeros(combinat.sort_decreasing(a)), n_window)
        member = bases.key_kohnert
    elif family == "quasikey":
        limit = bases.quasischur(positive_part(a), n_window)
        member = bases.quasikey
    else:
        raise ValueError(f"unknown stable family {family!r}")
    rows = []
    previous = None
    for m in range(m_max + 1):
        index = (0,) * m + a
        n = max(len(index), n_window)
        poly = _window(member(index, n), n_window)
        rows.append((m, previous is not None and poly == previous, poly == limit))
        previous = poly
    return StableLimitReport(family, a, n_window, rows)
