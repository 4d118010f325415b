"""
Constructors for every basis element of the three worlds, as exact
polynomials.  Where several formulas exist for the same family, each is
implemented independently so they can be cross-checked; the *_alternatives
functions return all constructions side by side.

Basis identifiers and their index species:

    x        weak composition   single monomial
    m        partition          monomial symmetric
    e        partition          elementary symmetric
    h        partition          complete homogeneous symmetric
    s        partition          Schur
    M        strong composition monomial quasisymmetric
    F        strong composition fundamental quasisymmetric
    qs       strong composition quasiSchur
    fslide   weak composition   fundamental slide
    mslide   weak composition   monomial slide
    particle weak composition   fundamental particle
    atom     weak composition   Demazure atom
    qkey     weak composition   quasikey
    key      weak composition   key (Demazure character)
    schubert permutation        Schubert

Naming of the e and h families follows the universal convention: e_k is
the squarefree (one-column) sum and h_k the complete (one-row) sum.
"""
from __future__ import annotations

import itertools
from typing import Sequence

from . import combinat, tableaux
from .combinat import dominance_leq, pad, positive_part, refines
from .polynomial import ExactPolynomial, apply_operator_word, divide_exact, divided_difference, alternant, vandermonde

BASIS_IDS = (
    "x", "m", "e", "h", "s",
    "M", "F", "qs",
    "fslide", "mslide", "particle", "atom", "qkey", "key", "schubert",
)

# index species per basis: how CLI/text indices are interpreted
INDEX_SPECIES = {
    "x": "weak", "m": "partition", "e": "partition", "h": "partition",
    "s": "partition", "M": "strong", "F": "strong", "qs": "strong",
    "fslide": "weak", "mslide": "weak", "particle": "weak", "atom": "weak",
    "qkey": "weak", "key": "weak", "schubert": "permutation",
}

# bases whose polynomials are symmetric / quasisymmetric in any n
SYMMETRIC_BASES = ("m", "e", "h", "s")
QUASISYMMETRIC_BASES = ("M", "F", "qs")
ASYMMETRIC_BASES = ("x", "fslide", "mslide", "particle", "atom", "qkey", "key", "schubert")


class SpeciesMismatchError(ValueError):
    """Raised when an index does not match the basis's index species."""


class AmbientTooSmallError(ValueError):
    """Raised when a basis element does not exist in n variables."""


_cache: dict[tuple, ExactPolynomial] = {}


def _cached(key, build):
    poly = _cache.get(key)
    if poly is None:
        poly = build()
        _cache[key] = poly
    return poly


def _as_weak_index(index: Sequence[int], n: int) -> tuple[int, ...]:
    if not combinat.is_weak_composition(index):
        raise SpeciesMismatchError(f"not a weak composition: {tuple(index)}")
    if len(index) > n:
        raise AmbientTooSmallError(f"index {tuple(index)} is longer than n={n}")
    return pad(index, n)


def _as_partition(index: Sequence[int]) -> tuple[int, ...]:
    lam = combinat.strip_trailing_zeros(index)
    if not combinat.is_partition(lam) and lam != ():
        raise SpeciesMismatchError(f"not a partition: {tuple(index)}")
    return lam


def _as_strong(index: Sequence[int]) -> tuple[int, ...]:
    if not combinat.is_strong_composition(index):
        raise SpeciesMismatchError(f"not a strong composition: {tuple(index)}")
    return tuple(index)


# ---------------------------------------------------------------------------
# symmetric world


def monomial_symmetric(lam: Sequence[int], n: int) -> ExactPolynomial:
    lam = _as_partition(lam)
    if len(lam) > n:
        raise AmbientTooSmallError(f"m_{lam} needs at least {len(lam)} variables")
    terms = {a: 1 for a in set(itertools.permutations(pad(lam, n)))}
    return ExactPolynomial(n, terms)


def schur(lam: Sequence[int], n: int) -> ExactPolynomial:
    """Schur polynomial as the semistandard-tableau generating function."""
    lam = _as_partition(lam)
    if len(lam) > n:
        raise AmbientTooSmallError(f"s_{lam} needs at least {len(lam)} variables")
    terms: dict[tuple[int, ...], int] = {}
    for t in tableaux.enumerate_ssyt(lam, n):
        w = tableaux.ssyt_weight(t, n)
        terms[w] = terms.get(w, 0) + 1
    return ExactPolynomial(n, terms)


def elementary(lam: Sequence[int], n: int) -> ExactPolynomial:
    """e_lambda: the product of squarefree sums e_{lambda_i} = s_{1^{lambda_i}}."""
    lam = _as_partition(lam)
    if lam and lam[0] > n:
        raise AmbientTooSmallError(f"e_{lam} vanishes in {n} variables")
    out = ExactPolynomial.one(n)
    for part in lam:
        out = out * schur((1,) * part, n)
    return out


def homogeneous(lam: Sequence[int], n: int) -> ExactPolynomial:
    """h_lambda: the product of complete sums h_{lambda_i} = s_{(lambda_i)}."""
    lam = _as_partition(lam)
    out = ExactPolynomial.one(n)
    for part in lam:
        out = out * schur((part,), n)
    return out


def schur_bialternant(lam: Sequence[int], n: int) -> ExactPolynomial:
    """Schur polynomial as the ratio of alternants."""
    lam = pad(_as_partition(lam), n)
    delta = tuple(range(n - 1, -1, -1))
    shifted = tuple(l + d for l, d in zip(lam, delta))
    return divide_exact(alternant(shifted), vandermonde(n))


def grassmannian_permutation(lam: Sequence[int], n: int) -> tuple[int, ...]:
    """The permutation whose Lehmer code is the reversal of lam padded to n."""
    lam = pad(_as_partition(lam), n)
    return combinat.code_to_permutation(tuple(reversed(lam)))


# ---------------------------------------------------------------------------
# quasisymmetric world


def monomial_quasisymmetric(alpha: Sequence[int], n: int) -> ExactPolynomial:
    alpha = _as_strong(alpha)
    if len(alpha) > n:
        raise AmbientTooSmallError(f"M_{alpha} vanishes in {n} variables")
    terms: dict[tuple[int, ...], int] = {}
    for positions in itertools.combinations(range(n), len(alpha)):
        e = [0] * n
        for pos, value in zip(positions, alpha):
            e[pos] = value
        terms[tuple(e)] = 1
    return ExactPolynomial(n, terms)


def fundamental_quasisymmetric(alpha: Sequence[int], n: int) -> ExactPolynomial:
    alpha = _as_strong(alpha)
    if len(alpha) > n:
        raise AmbientTooSmallError(f"F_{alpha} vanishes in {n} variables")
    out = ExactPolynomial.zero(n)
    for beta in combinat.refinements(alpha):
        if len(beta) <= n:
            out = out + monomial_quasisymmetric(beta, n)
    return out


def quasischur(alpha: Sequence[int], n: int) -> ExactPolynomial:
    """Sum of Demazure atoms over all length-n shapes with positive part alpha."""
    alpha = _as_strong(alpha)
    if len(alpha) > n:
        raise AmbientTooSmallError(f"quasiSchur for {alpha} vanishes in {n} variables")
    out = ExactPolynomial.zero(n)
    for shape in _shapes_with_positive_part(alpha, n):
        out = out + demazure_atom(shape, n)
    return out


def _shapes_with_positive_part(alpha: tuple[int, ...], n: int):
    for positions in itertools.combinations(range(n), len(alpha)):
        shape = [0] * n
        for pos, value in zip(positions, alpha):
            shape[pos] = value
        yield tuple(shape)


# ---------------------------------------------------------------------------
# asymmetric world


def monomial_basis(a: Sequence[int], n: int) -> ExactPolynomial:
    return ExactPolynomial.monomial(_as_weak_index(a, n))


def fundamental_slide(a: Sequence[int], n: int) -> ExactPolynomial:
    """Sum of x^b over b dominating a with positive part refining a's."""
    a = _as_weak_index(a, n)
    ap = positive_part(a)
    terms: dict[tuple[int, ...], int] = {}
    for b in _dominating_compositions(a):
        if refines(positive_part(b), ap):
            terms[b] = 1
    return ExactPolynomial(n, terms)


def monomial_slide(a: Sequence[int], n: int) -> ExactPolynomial:
    """Sum of x^b over b dominating a with the same positive part."""
    a = _as_weak_index(a, n)
    ap = positive_part(a)
    terms: dict[tuple[int, ...], int] = {}
    for b in _dominating_compositions(a):
        if positive_part(b) == ap:
            terms[b] = 1
    return ExactPolynomial(n, terms)


def _dominating_compositions(a: tuple[int, ...]):
    """All weak compositions of the same length and degree dominating a."""
    n, total = len(a), sum(a)
    prefix = combinat.prefix_sums(a)

    def extend(partial: list[int], used: int):
        i = len(partial)
        if i == n:
            yield tuple(partial)
            return
        if i == n - 1:
            rest = total - used
            if used + rest >= prefix[i]:
                yield tuple(partial + [rest])
            return
        for v in range(total - used + 1):
            if used + v >= prefix[i]:
                yield from extend(partial + [v], used + v)

    yield from extend([], 0)


def demazure_atom(a: Sequence[int], n: int) -> ExactPolynomial:
    a = _as_weak_index(a, n)

    def build():
        terms: dict[tuple[int, ...], int] = {}
        for t in tableaux.enumerate_composition_tableaux(a):
            w = tableaux.tableau_weight(t, n)
            terms[w] = terms.get(w, 0) + 1
        return ExactPolynomial(n, terms)

    return _cached(("atom", a, n), build)


def fundamental_particle(a: Sequence[int], n: int) -> ExactPolynomial:
    a = _as_weak_index(a, n)

    def build():
        terms: dict[tuple[int, ...], int] = {}
        for t in tableaux.enumerate_particle_tableaux(a):
            w = tableaux.tableau_weight(t, n)
            terms[w] = terms.get(w, 0) + 1
        return ExactPolynomial(n, terms)

    return _cached(("particle", a, n), build)


def quasikey(a: Sequence[int], n: int) -> ExactPolynomial:
    """Sum of atoms over shapes dominating a with the same positive part."""
    a = _as_weak_index(a, n)
    out = ExactPolynomial.zero(n)
    ap = positive_part(a)
    for b in _shapes_with_positive_part(ap, n):
        if dominance_leq(a, b):
            out = out + demazure_atom(b, n)
    return out


def key_kohnert(a: Sequence[int], n: int) -> ExactPolynomial:
    """Key polynomial as the Kohnert-diagram generating function."""
    a = _as_weak_index(a, n)

    def build():
        terms: dict[tuple[int, ...], int] = {}
        for d in tableaux.kohnert_closure(tableaux.composition_diagram(a)):
            w = tableaux.diagram_weight(d, n)
            terms[w] = terms.get(w, 0) + 1
        return ExactPolynomial(n, terms)

    return _cached(("key", a, n), build)


def key_demazure(a: Sequence[int], n: int) -> ExactPolynomial:
    """Key polynomial by applying Demazure operators to the sorted monomial."""
    a = _as_weak_index(a, n)
    sorted_a, w, _ = combinat.sorting_data(a)
    word = combinat.first_reduced_word(w)
    return apply_operator_word(word, "demazure", ExactPolynomial.monomial(sorted_a))


def key_skyline(a: Sequence[int], n: int) -> ExactPolynomial:
    """Key polynomial as the semi-skyline generating function."""
    a = _as_weak_index(a, n)
    terms: dict[tuple[int, ...], int] = {}
    for t in tableaux.enumerate_key_skylines(a, n):
        w = tableaux.skyline_weight(t, n)
        terms[w] = terms.get(w, 0) + 1
    return ExactPolynomial(n, terms)


def _as_permutation(index) -> tuple[int, ...]:
    p = tuple(index)
    if not combinat.is_permutation(p):
        raise SpeciesMismatchError(f"not a permutation: {p}")
    return p


def schubert_bjs(p: Sequence[int], n: int) -> ExactPolynomial:
    """Schubert polynomial by summing over reduced words and their
    compatible sequences."""
    p = _as_permutation(p)

    def build():
        m = max(len(p), 1)
        terms: dict[tuple[int, ...], int] = {}
        for word in combinat.reduced_words(p):
            for beta in tableaux.enumerate_compatible(word):
                w = tableaux.compatible_weight(beta, m)
                terms[w] = terms.get(w, 0) + 1
        return ExactPolynomial(m, terms)

    return _cached(("schubert", p), build).resized(n)


def schubert_divided_difference(p: Sequence[int], n: int) -> ExactPolynomial:
    """Schubert polynomial by the divided-difference recursion from the
    staircase monomial of the longest permutation."""
    p = _as_permutation(p)
    m = max(len(p), 1)

    def compute(q: tuple[int, ...]) -> ExactPolynomial:
        key = ("schubert-dd", q)
        cached = _cache.get(key)
        if cached is not None:
            return cached
        ascents = [i for i in range(1, m) if q[i - 1] < q[i]]
        if not ascents:
            poly = ExactPolynomial.monomial(tuple(range(m - 1, -1, -1)))
        else:
            i = ascents[0]
            poly = divided_difference(i, compute(combinat.multiply_simple(q, i)))
        _cache[key] = poly
        return poly

    return compute(p).resized(n)


def schubert_pipe_dreams(p: Sequence[int], n: int) -> ExactPolynomial:
    p = _as_permutation(p)
    m = max(len(p), 1)
    terms: dict[tuple[int, ...], int] = {}
    for d in tableaux.enumerate_pipe_dreams(p):
        w = tableaux.pipe_dream_weight(d, m)
        terms[w] = terms.get(w, 0) + 1
    return ExactPolynomial(m, terms).resized(n)


def schubert_kohnert(p: Sequence[int], n: int) -> ExactPolynomial:
    p = _as_permutation(p)
    m = max(len(p), 1)
    terms: dict[tuple[int, ...], int] = {}
    for d in tableaux.kohnert_closure(frozenset(combinat.rothe_diagram(p))):
        w = tableaux.diagram_weight(d, m)
        terms[w] = terms.get(w, 0) + 1
    return ExactPolynomial(m, terms).resized(n)


# ---------------------------------------------------------------------------
# dispatch


def basis_polynomial(basis: str, index, n: int) -> ExactPolynomial:
    """The basis element for the given index, in n variables.

    Indices shorter than n are padded with trailing zeros; indices longer
    than n (or otherwise not representable in n variables) raise
    AmbientTooSmallError.  Results are memoized.
    """
    key = (basis, tuple(index), n)
    cached = _cache.get(key)
    if cached is None:
        cached = _cache[key] = _build_basis_polynomial(basis, tuple(index), n)
    return cached


def _build_basis_polynomial(basis: str, index, n: int) -> ExactPolynomial:
    if basis == "x":
        return monomial_basis(index, n)
    if basis == "m":
        return monomial_symmetric(index, n)
    if basis == "e":
        return elementary(index, n)
    if basis == "h":
        return homogeneous(index, n)
    if basis == "s":
        return schur(index, n)
    if basis == "M":
        return monomial_quasisymmetric(index, n)
    if basis == "F":
        return fundamental_quasisymmetric(index, n)
    if basis == "qs":
        return quasischur(index, n)
    if basis == "fslide":
        return fundamental_slide(index, n)
    if basis == "mslide":
        return monomial_slide(index, n)
    if basis == "particle":
        return fundamental_particle(index, n)
    if basis == "atom":
        return demazure_atom(index, n)
    if basis == "qkey":
        return quasikey(index, n)
    if basis == "key":
        return key_kohnert(index, n)
    if basis == "schubert":
        return schubert_bjs(index, n)
    raise ValueError(f"unknown basis {basis!r}")


def schubert_alternatives(p: Sequence[int], n: int) -> dict[str, ExactPolynomial]:
    """All four Schubert constructions, for agreement checks."""
    return {
        "divided-difference": schubert_divided_difference(p, n),
        "bjs": schubert_bjs(p, n),
        "pipe-dreams": schubert_pipe_dreams(p, n),
        "kohnert": schubert_kohnert(p, n),
    }


def key_alternatives(a: Sequence[int], n: int) -> dict[str, ExactPolynomial]:
    """All three key-polynomial constructions."""
    return {
        "kohnert": key_kohnert(a, n),
        "demazure": key_demazure(a, n),
        "skyline": key_skyline(a, n),
    }


def schur_alternatives(lam: Sequence[int], n: int) -> dict[str, ExactPolynomial]:
    """All four Schur constructions."""
    lam = _as_partition(lam)
    reversed_lam = tuple(reversed(pad(lam, n)))
    return {
        "tableaux": schur(lam, n),
        "bialternant": schur_bialternant(lam, n),
        "schubert": schubert_bjs(grassmannian_permutation(lam, n), n),
        "key": key_kohnert(reversed_lam, n),
    }
