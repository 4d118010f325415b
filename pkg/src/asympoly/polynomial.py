"""
Exact sparse multivariate polynomials over the integers.

An ExactPolynomial stores a finitely supported mapping from exponent
vectors (tuples of length ``nvars``) to nonzero integer coefficients.
Coefficients are arbitrary-precision; there are no floating-point or
modular shortcuts anywhere, since downstream positivity verification
demands exactness.
"""
from __future__ import annotations

import itertools
from typing import Callable, Sequence

from . import combinat
from .combinat import term_order_key


class AmbientMismatchError(ValueError):
    """Raised when combining polynomials over different variable counts."""


class ExactDivisionError(ArithmeticError):
    """Raised when a division that must be exact leaves a remainder."""


class ExactPolynomial:
    """An integer polynomial in ``nvars`` variables, stored sparsely."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: dict[tuple[int, ...], int] | None = None):
        self.nvars = nvars
        data: dict[tuple[int, ...], int] = {}
        if terms:
            for exps, coeff in terms.items():
                if coeff == 0:
                    continue
                exps = tuple(exps)
                if len(exps) != nvars or any(e < 0 for e in exps):
                    raise ValueError(f"bad exponent vector {exps} for {nvars} variables")
                data[exps] = data.get(exps, 0) + coeff
                if data[exps] == 0:
                    del data[exps]
        self.terms = data

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> "ExactPolynomial":
        return cls(nvars)

    @classmethod
    def one(cls, nvars: int) -> "ExactPolynomial":
        return cls(nvars, {(0,) * nvars: 1})

    @classmethod
    def monomial(cls, exps: Sequence[int], nvars: int | None = None, coeff: int = 1) -> "ExactPolynomial":
        n = len(exps) if nvars is None else nvars
        return cls(n, {combinat.pad(exps, n): coeff})

    @classmethod
    def variable(cls, i: int, nvars: int) -> "ExactPolynomial":
        exps = [0] * nvars
        exps[i - 1] = 1
        return cls(nvars, {tuple(exps): 1})

    # -- ring structure ----------------------------------------------------

    def _check(self, other: "ExactPolynomial") -> None:
        if self.nvars != other.nvars:
            raise AmbientMismatchError(f"{self.nvars} variables vs {other.nvars}")

    def __add__(self, other: "ExactPolynomial") -> "ExactPolynomial":
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                del out[e]
        result = ExactPolynomial(self.nvars)
        result.terms = out
        return result

    def __neg__(self) -> "ExactPolynomial":
        result = ExactPolynomial(self.nvars)
        result.terms = {e: -c for e, c in self.terms.items()}
        return result

    def __sub__(self, other: "ExactPolynomial") -> "ExactPolynomial":
        return self + (-other)

    def __mul__(self, other) -> "ExactPolynomial":
        if isinstance(other, int):
            result = ExactPolynomial(self.nvars)
            if other:
                result.terms = {e: c * other for e, c in self.terms.items()}
            return result
        self._check(other)
        out: dict[tuple[int, ...], int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    del out[e]
        result = ExactPolynomial(self.nvars)
        result.terms = out
        return result

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ExactPolynomial)
            and self.nvars == other.nvars
            and self.terms == other.terms
        )

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    # -- inspection --------------------------------------------------------

    def coefficient(self, exps: Sequence[int]) -> int:
        return self.terms.get(combinat.pad(exps, self.nvars), 0)

    def degree(self) -> int:
        """Total degree; the zero polynomial has degree -1 by convention."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self) -> bool:
        degrees = {sum(e) for e in self.terms}
        return len(degrees) <= 1

    def homogeneous_components(self) -> dict[int, "ExactPolynomial"]:
        comps: dict[int, ExactPolynomial] = {}
        for e, c in self.terms.items():
            comps.setdefault(sum(e), ExactPolynomial(self.nvars)).terms[e] = c
        return comps

    def resized(self, nvars: int) -> "ExactPolynomial":
        """Re-embed into a different variable count.

        Shrinking requires that no monomial touches the removed variables.
        """
        if nvars == self.nvars:
            return self
        out: dict[tuple[int, ...], int] = {}
        for e, c in self.terms.items():
            if nvars < self.nvars and any(e[nvars:]):
                raise AmbientMismatchError(
                    f"monomial {e} does not fit in {nvars} variables"
                )
            out[combinat.pad(e[:nvars], nvars)] = c
        return ExactPolynomial(nvars, out)

    def sorted_terms(self) -> list[tuple[tuple[int, ...], int]]:
        """Terms sorted by descending prefix-sum-lex."""
        return sorted(
            self.terms.items(),
            key=lambda item: term_order_key(item[0]),
            reverse=True,
        )

    def __repr__(self) -> str:
        if not self.terms:
            return f"ExactPolynomial({self.nvars}, 0)"
        body = " + ".join(f"{c}*x^{e}" for e, c in self.sorted_terms())
        return f"ExactPolynomial({self.nvars}, {body})"

    def canonical_text(self) -> str:
        """One term per line, "coefficient<TAB>e1,e2,...,en"; bit-exact."""
        lines = [
            f"{c}\t{','.join(str(x) for x in e)}" for e, c in self.sorted_terms()
        ]
        return "\n".join(lines)


# ---------------------------------------------------------------------------
# symmetric group action and symmetry predicates


def act_permutation(p: Sequence[int], f: ExactPolynomial) -> ExactPolynomial:
    """Permute variables: x_i is sent to x_{p(i)}."""
    p = combinat.pad_permutation(p, f.nvars)
    out: dict[tuple[int, ...], int] = {}
    for e, c in f.terms.items():
        moved = [0] * f.nvars
        for i, exp in enumerate(e):
            moved[p[i] - 1] = exp
        out[tuple(moved)] = c
    result = ExactPolynomial(f.nvars)
    result.terms = out
    return result


def is_symmetric(f: ExactPolynomial) -> bool:
    return all(
        act_permutation(combinat.multiply_simple(combinat.identity_perm(f.nvars), i), f) == f
        for i in range(1, f.nvars)
    )


def is_quasisymmetric(f: ExactPolynomial) -> bool:
    """Coefficients agree on all monomials sharing a positive part pattern."""
    by_pattern: dict[tuple[int, ...], set[int]] = {}
    for e, c in f.terms.items():
        by_pattern.setdefault(combinat.positive_part(e), set()).add(c)
    for pattern, coeffs in by_pattern.items():
        if len(coeffs) > 1:
            return False
        coeff = next(iter(coeffs))
        placements = itertools.combinations(range(f.nvars), len(pattern))
        for positions in placements:
            e = [0] * f.nvars
            for pos, value in zip(positions, pattern):
                e[pos] = value
            if f.terms.get(tuple(e), 0) != coeff:
                return False
    return True


# ---------------------------------------------------------------------------
# divided differences and Demazure operators


def _swap_adjacent(f: ExactPolynomial, i: int) -> ExactPolynomial:
    out: dict[tuple[int, ...], int] = {}
    for e, c in f.terms.items():
        swapped = list(e)
        swapped[i - 1], swapped[i] = swapped[i], swapped[i - 1]
        out[tuple(swapped)] = c
    result = ExactPolynomial(f.nvars)
    result.terms = out
    return result


def _divide_by_adjacent_difference(f: ExactPolynomial, i: int) -> ExactPolynomial:
    """Exact quotient f / (x_i - x_{i+1}), by leading-term elimination.

    The leading term is taken with respect to the exponent of x_i, so each
    step cancels the current term of highest x_i-degree.  A nonzero
    remainder signals a corrupt caller and aborts.
    """
    remainder = dict(f.terms)
    quotient: dict[tuple[int, ...], int] = {}
    while remainder:
        e = max(remainder, key=lambda t: (t[i - 1], t))
        c = remainder[e]
        if e[i - 1] == 0:
            raise ExactDivisionError(
                f"nonzero remainder while dividing by x_{i} - x_{i + 1}"
            )
        q = list(e)
        q[i - 1] -= 1
        q = tuple(q)
        quotient[q] = quotient.get(q, 0) + c
        # subtract c * x^q * (x_i - x_{i+1})
        del remainder[e]
        low = list(q)
        low[i] += 1
        low = tuple(low)
        s = remainder.get(low, 0) + c
        if s:
            remainder[low] = s
        else:
            remainder.pop(low, None)
    result = ExactPolynomial(f.nvars)
    result.terms = {e: c for e, c in quotient.items() if c}
    return result


def divided_difference(i: int, f: ExactPolynomial) -> ExactPolynomial:
    """The operator sending f to (f - s_i.f) / (x_i - x_{i+1})."""
    if not 1 <= i < f.nvars:
        raise ValueError(f"index {i} out of range for {f.nvars} variables")
    return _divide_by_adjacent_difference(f - _swap_adjacent(f, i), i)


def demazure_operator(i: int, f: ExactPolynomial) -> ExactPolynomial:
    """The idempotent operator f -> divided_difference(i, x_i * f)."""
    if not 1 <= i < f.nvars:
        raise ValueError(f"index {i} out of range for {f.nvars} variables")
    xi = ExactPolynomial.variable(i, f.nvars)
    return divided_difference(i, xi * f)


def apply_operator_word(word: Sequence[int], kind: str, f: ExactPolynomial) -> ExactPolynomial:
    """Apply a word of operators, the last letter acting first.

    A word (i_1, ..., i_r) composes as op_{i_1}(op_{i_2}(... op_{i_r}(f))).
    ``kind`` is "divided" or "demazure".
    """
    ops: dict[str, Callable[[int, ExactPolynomial], ExactPolynomial]] = {
        "divided": divided_difference,
        "demazure": demazure_operator,
    }
    op = ops[kind]
    for i in reversed(tuple(word)):
        f = op(i, f)
    return f


# ---------------------------------------------------------------------------
# alternants


def alternant(a: Sequence[int]) -> ExactPolynomial:
    """The signed orbit sum of x^a over the full symmetric group."""
    n = len(a)
    out: dict[tuple[int, ...], int] = {}
    for sigma in itertools.permutations(range(n)):
        sign = 1 - 2 * (_inversions(sigma) % 2)
        e = [0] * n
        for i, pos in enumerate(sigma):
            e[pos] = a[i]
        e = tuple(e)
        s = out.get(e, 0) + sign
        if s:
            out[e] = s
        else:
            out.pop(e, None)
    result = ExactPolynomial(n)
    result.terms = out
    return result


def _inversions(seq: Sequence[int]) -> int:
    return sum(1 for i in range(len(seq)) for j in range(i + 1, len(seq)) if seq[i] > seq[j])


def vandermonde(n: int) -> ExactPolynomial:
    """The alternant of the staircase (n-1, n-2, ..., 1, 0)."""
    return alternant(tuple(range(n - 1, -1, -1)))


def divide_exact(f: ExactPolynomial, g: ExactPolynomial) -> ExactPolynomial:
    """Exact quotient f / g in lexicographic order; raises if not exact."""
    f._check(g)
    if not g:
        raise ZeroDivisionError("division by the zero polynomial")
    remainder = dict(f.terms)
    quotient: dict[tuple[int, ...], int] = {}
    lead_g = max(g.terms)
    cg = g.terms[lead_g]
    while remainder:
        lead_f = max(remainder)
        cf = remainder[lead_f]
        q = tuple(a - b for a, b in zip(lead_f, lead_g))
        if any(x < 0 for x in q) or cf % cg != 0:
            raise ExactDivisionError("division left a remainder")
        c = cf // cg
        quotient[q] = quotient.get(q, 0) + c
        for e, ce in g.terms.items():
            key = tuple(a + b for a, b in zip(q, e))
            s = remainder.get(key, 0) - c * ce
            if s:
                remainder[key] = s
            else:
                remainder.pop(key, None)
    result = ExactPolynomial(f.nvars)
    result.terms = {e: c for e, c in quotient.items() if c}
    return result
