"""
Compositions, partitions, permutations, and the orders between them.

Conventions used throughout the package:

- A *weak composition* is a tuple of nonnegative integers with an explicit
  length; trailing zeros are significant for identity and are only removed
  by explicit operations.
- A *strong composition* is a tuple of strictly positive integers.
- A *partition* is a weakly decreasing tuple of positive integers.
- A *permutation* is a tuple in one-line notation with values 1..n, e.g.
  ``(2, 4, 1, 3)`` for the permutation usually written 2413.

All values are immutable tuples and all functions are pure.
"""
from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

TERM_ORDERS = ("prefix-sum-lex", "lex", "revlex")


class InvalidCodeError(ValueError):
    """Raised when a sequence cannot be completed to a Lehmer code."""


class DegreeMismatchError(ValueError):
    """Raised when a term order compares monomials of unequal degree."""


# ---------------------------------------------------------------------------
# basic composition helpers


def is_weak_composition(a: Sequence[int]) -> bool:
    return all(isinstance(x, int) and x >= 0 for x in a)

def is_strong_composition(a: Sequence[int]) -> bool:
    return all(isinstance(x, int) and x >= 1 for x in a)

def is_partition(a: Sequence[int]) -> bool:
    return is_strong_composition(a) and all(a[i] >= a[i + 1] for i in range(len(a) - 1))


def pad(a: Sequence[int], n: int) -> tuple[int, ...]:
    """Extend a composition with trailing zeros to length n.

    >>> pad((1, 3), 4)
    (1, 3, 0, 0)
    """
    if len(a) > n:
        raise ValueError(f"composition {tuple(a)} is longer than {n}")
    return tuple(a) + (0,) * (n - len(a))


def strip_trailing_zeros(a: Sequence[int]) -> tuple[int, ...]:
    n = len(a)
    while n > 0 and a[n - 1] == 0:
        n -= 1
    return tuple(a[:n])


def positive_part(a: Sequence[int]) -> tuple[int, ...]:
    """Delete all zeros, preserving order.

    >>> positive_part((1, 3, 0))
    (1, 3)
    >>> positive_part((0, 0, 0))
    ()
    """
    return tuple(x for x in a if x > 0)


def support(a: Sequence[int]) -> frozenset[int]:
    """The set of 1-based positions carrying a nonzero entry."""
    return frozenset(i + 1 for i, x in enumerate(a) if x > 0)


def sort_decreasing(a: Sequence[int]) -> tuple[int, ...]:
    """Entries rearranged weakly decreasingly, length preserved."""
    return tuple(sorted(a, reverse=True))


def conjugate_partition(lam: Sequence[int]) -> tuple[int, ...]:
    """Transpose of the Young diagram.

    >>> conjugate_partition((3, 1))
    (2, 1, 1)
    """
    if not lam:
        return ()
    return tuple(sum(1 for part in lam if part > i) for i in range(lam[0]))


# ---------------------------------------------------------------------------
# orders


def dominance_leq(a: Sequence[int], b: Sequence[int]) -> bool:
    """True iff every prefix sum of a is at most the prefix sum of b.

    Compositions of unequal length are padded with trailing zeros first.

    >>> dominance_leq((1, 1, 1), (2, 0, 1))
    True
    >>> dominance_leq((2, 0, 0, 1), (1, 2, 0, 0))
    False
    """
    n = max(len(a), len(b))
    sa = sb = 0
    for i in range(n):
        sa += a[i] if i < len(a) else 0
        sb += b[i] if i < len(b) else 0
        if sa > sb:
            return False
    return True


def prefix_sums(a: Sequence[int]) -> tuple[int, ...]:
    return tuple(itertools.accumulate(a))


def term_order_key(a: Sequence[int], order: str = "prefix-sum-lex"):
    """A sort key such that key(a) < key(b) iff a precedes b in the order."""
    if order == "prefix-sum-lex":
        return prefix_sums(a)
    if order == "lex":
        return tuple(a)
    if order == "revlex":
        return tuple(-x for x in reversed(a))
    raise ValueError(f"unknown term order {order!r}")


def term_order_compare(a: Sequence[int], b: Sequence[int], order: str = "prefix-sum-lex") -> int:
    """Compare equal-degree, equal-length exponent vectors; returns -1, 0 or 1.

    ``prefix-sum-lex`` compares prefix-sum vectors lexicographically and
    strictly refines dominance order.

    >>> term_order_compare((0, 1, 3), (1, 3, 0))
    -1
    """
    if len(a) != len(b) or sum(a) != sum(b):
        raise DegreeMismatchError(f"cannot compare {tuple(a)} with {tuple(b)}")
    ka, kb = term_order_key(a, order), term_order_key(b, order)
    return (ka > kb) - (ka < kb)


def refines(b: Sequence[int], a: Sequence[int]) -> bool:
    """True iff a is obtained by summing consecutive entries of b.

    >>> refines((1, 2, 1), (1, 3))
    True
    >>> refines((2, 1, 1), (1, 3))
    False
    """
    i = 0
    for part in a:
        total = 0
        while total < part:
            if i >= len(b):
                return False
            total += b[i]
            i += 1
        if total != part:
            return False
    return i == len(b)


def refinements(a: Sequence[int]) -> tuple[tuple[int, ...], ...]:
    """All strong compositions b that refine a."""
    per_part = [tuple(compositions_of(part)) for part in a]
    out = []
    for choice in itertools.product(*per_part):
        out.append(tuple(itertools.chain.from_iterable(choice)))
    return tuple(out)


# ---------------------------------------------------------------------------
# permutations


def identity_perm(n: int) -> tuple[int, ...]:
    return tuple(range(1, n + 1))


def is_permutation(p: Sequence[int]) -> bool:
    return sorted(p) == list(range(1, len(p) + 1))


def inverse(p: Sequence[int]) -> tuple[int, ...]:
    """
    >>> inverse((2, 4, 1, 3))
    (3, 1, 4, 2)
    """
    inv = [0] * len(p)
    for i, v in enumerate(p):
        inv[v - 1] = i + 1
    return tuple(inv)


def compose(p: Sequence[int], q: Sequence[int]) -> tuple[int, ...]:
    """(p q)(i) = p(q(i)); right-to-left composition of equal-size permutations."""
    if len(p) != len(q):
        raise ValueError("size mismatch")
    return tuple(p[q[i] - 1] for i in range(len(p)))


def pad_permutation(p: Sequence[int], n: int) -> tuple[int, ...]:
    """Extend with fixed points to S_n."""
    if len(p) > n:
        raise ValueError(f"permutation {tuple(p)} does not fit in S_{n}")
    return tuple(p) + tuple(range(len(p) + 1, n + 1))


def strip_fixed_points(p: Sequence[int]) -> tuple[int, ...]:
    """Drop trailing fixed points, keeping at least the empty permutation."""
    n = len(p)
    while n > 0 and p[n - 1] == n:
        n -= 1
    return tuple(p[:n])


def perm_length(p: Sequence[int]) -> int:
    """Coxeter length = number of inversions."""
    return sum(1 for i in range(len(p)) for j in range(i + 1, len(p)) if p[i] > p[j])


def multiply_simple(p: Sequence[int], i: int) -> tuple[int, ...]:
    """Right-multiply by s_i: swap the entries in positions i, i+1 (1-based)."""
    q = list(p)
    q[i - 1], q[i] = q[i], q[i - 1]
    return tuple(q)


def descents(p: Sequence[int]) -> tuple[int, ...]:
    """Right descents: positions i with p(i) > p(i+1)."""
    return tuple(i + 1 for i in range(len(p) - 1) if p[i] > p[i + 1])


def permutation_from_word(word: Sequence[int], n: int) -> tuple[int, ...]:
    """Product s_{i_1} ... s_{i_k} in S_n, multiplying left to right."""
    p = identity_perm(n)
    for i in word:
        p = multiply_simple(p, i)
    return p


def act_on_positions(w: Sequence[int], a: Sequence[int]) -> tuple[int, ...]:
    """The position action a o w = (a_{w(1)}, ..., a_{w(n)})."""
    return tuple(a[w[i] - 1] for i in range(len(w)))


def act_on_values(v: Sequence[int], a: Sequence[int]) -> tuple[int, ...]:
    """The value action v . a = (a_{v^{-1}(1)}, ..., a_{v^{-1}(n)})."""
    return act_on_positions(inverse(v), a)


def lehmer_code(p: Sequence[int]) -> tuple[int, ...]:
    """Entry i counts the j > i with p(i) > p(j).

    >>> lehmer_code((2, 4, 1, 3))
    (1, 2, 0, 0)
    >>> lehmer_code((3, 2, 1))
    (2, 1, 0)
    """
    n = len(p)
    return tuple(sum(1 for j in range(i + 1, n) if p[i] > p[j]) for i in range(n))


def code_to_permutation(a: Sequence[int]) -> tuple[int, ...]:
    """The minimal-size permutation whose Lehmer code starts with a.

    The code is padded with trailing zeros until it becomes valid, so the
    result may live in a larger symmetric group than len(a).

    >>> code_to_permutation((1, 2, 0, 0))
    (2, 4, 1, 3)
    >>> code_to_permutation((0, 1, 2))
    (1, 3, 5, 2, 4)
    """
    if not is_weak_composition(a):
        raise InvalidCodeError(f"not a weak composition: {tuple(a)}")
    n = len(a)
    while any(a[i] > n - (i + 1) for i in range(len(a))):
        n += 1
    code = pad(a, n)
    available = list(range(1, n + 1))
    out = []
    for c in code:
        out.append(available.pop(c))
    return tuple(out)


def rothe_diagram(p: Sequence[int]) -> frozenset[tuple[int, int]]:
    """Boxes (i, j) with j < p(i) and p^{-1}(j) > i.

    >>> sorted(rothe_diagram((2, 4, 1, 3)))
    [(1, 1), (2, 1), (2, 3)]
    """
    inv = inverse(p)
    return frozenset(
        (i, j)
        for i in range(1, len(p) + 1)
        for j in range(1, p[i - 1])
        if inv[j - 1] > i
    )


@lru_cache(maxsize=None)
def reduced_words(p: tuple[int, ...]) -> frozenset[tuple[int, ...]]:
    """All reduced words of p, by backtracking over right descents.

    >>> sorted(reduced_words((3, 2, 1)))
    [(1, 2, 1), (2, 1, 2)]
    """
    if not descents(p):
        return frozenset({()})
    words = set()
    for i in descents(p):
        for w in reduced_words(multiply_simple(p, i)):
            words.add(w + (i,))
    return frozenset(words)


def first_reduced_word(p: Sequence[int]) -> tuple[int, ...]:
    """A canonical reduced word: repeatedly peel the smallest right descent."""
    p = tuple(p)
    word: list[int] = []
    while True:
        ds = descents(p)
        if not ds:
            return tuple(reversed(word))
        i = ds[0]
        word.append(i)
        p = multiply_simple(p, i)


def bruhat_leq(u: Sequence[int], v: Sequence[int]) -> bool:
    """Strong Bruhat order via the subword property.

    Some reduced word of u must occur as a subword of a fixed reduced word
    of v; permutations of different sizes are padded with fixed points.

    >>> bruhat_leq((2, 3, 1), (3, 2, 1))
    True
    """
    n = max(len(u), len(v))
    u, v = pad_permutation(u, n), pad_permutation(v, n)
    lu = perm_length(u)
    if lu > perm_length(v):
        return False
    if u == v:
        return True
    word = first_reduced_word(v)
    for positions in itertools.combinations(range(len(word)), lu):
        if permutation_from_word([word[k] for k in positions], n) == u:
            return True
    return False


# ---------------------------------------------------------------------------
# sorting data and left swaps


def sorting_data(a: Sequence[int]) -> tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]:
    """(sort(a), w(a), v(a)) for a weak composition a.

    sort(a) rearranges a weakly decreasingly.  w(a) is the minimal-length
    permutation with a o w(a) = sort(a) (position action); v(a) = w(a)^{-1}
    is minimal with v(a) . a = sort(a) (value action).

    >>> sorting_data((1, 0, 3))
    ((3, 1, 0), (3, 1, 2), (2, 3, 1))
    """
    a = tuple(a)
    order = sorted(range(len(a)), key=lambda i: (-a[i], i))
    w = tuple(i + 1 for i in order)
    return act_on_positions(w, a), w, inverse(w)


def lswap_closure(a: Sequence[int]) -> frozenset[tuple[int, ...]]:
    """Closure of a under exchanging entries a_i < a_j with i < j.

    >>> sorted(lswap_closure((1, 0, 3)))
    [(1, 0, 3), (1, 3, 0), (3, 0, 1), (3, 1, 0)]
    """
    a = tuple(a)
    seen = {a}
    frontier = [a]
    while frontier:
        b = frontier.pop()
        for i in range(len(b)):
            for j in range(i + 1, len(b)):
                if b[i] < b[j]:
                    c = list(b)
                    c[i], c[j] = c[j], c[i]
                    c = tuple(c)
                    if c not in seen:
                        seen.add(c)
                        frontier.append(c)
    return frozenset(seen)


def qlswap(a: Sequence[int]) -> frozenset[tuple[int, ...]]:
    """The b in lswap(a) that are dominance-least in their positive-part class.

    >>> sorted(qlswap((1, 0, 3)))
    [(1, 0, 3), (3, 0, 1)]
    """
    closure = lswap_closure(a)
    out = set()
    for b in closure:
        bp = positive_part(b)
        if all(dominance_leq(b, c) for c in closure if positive_part(c) == bp):
            out.add(b)
    return frozenset(out)


# ---------------------------------------------------------------------------
# formal integer sums over composition indices


class FormalSum:
    """A finitely supported integer combination of composition indices."""

    __slots__ = ("terms",)

    def __init__(self, terms: Iterable | dict | None = None):
        data: dict[tuple[int, ...], int] = {}
        if isinstance(terms, dict):
            items = terms.items()
        elif terms is None:
            items = ()
        else:
            items = ((t, 1) for t in terms)
        for index, coeff in items:
            index = tuple(index)
            c = data.get(index, 0) + coeff
            if c:
                data[index] = c
            else:
                data.pop(index, None)
        self.terms = data

    def __eq__(self, other) -> bool:
        return isinstance(other, FormalSum) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "FormalSum") -> "FormalSum":
        out = dict(self.terms)
        for k, v in other.terms.items():
            c = out.get(k, 0) + v
            if c:
                out[k] = c
            else:
                out.pop(k, None)
        return FormalSum(out)

    def add_term(self, index: Sequence[int], coeff: int = 1) -> None:
        index = tuple(index)
        c = self.terms.get(index, 0) + coeff
        if c:
            self.terms[index] = c
        else:
            self.terms.pop(index, None)

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self):
        return iter(sorted(self.terms.items()))

    def __repr__(self) -> str:
        return f"FormalSum({self.terms!r})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for index, coeff in sorted(self.terms.items()):
            parts.append(f"{coeff}*{format_composition(index)}")
        return " + ".join(parts)


# ---------------------------------------------------------------------------
# text forms


def format_composition(a: Sequence[int]) -> str:
    """Parenthesized comma-separated form, e.g. "(1,0,3)"."""
    return "(" + ",".join(str(x) for x in a) + ")"


def parse_composition(text: str) -> tuple[int, ...]:
    """Inverse of format_composition.

    >>> parse_composition("(1,0,3)")
    (1, 0, 3)
    >>> parse_composition("()")
    ()
    """
    text = text.strip()
    if not (text.startswith("(") and text.endswith(")")):
        raise ValueError(f"expected parenthesized composition, got {text!r}")
    body = text[1:-1].strip()
    if not body:
        return ()
    entries = tuple(int(part.strip()) for part in body.split(","))
    if any(x < 0 for x in entries):
        raise ValueError(f"negative entry in composition {text!r}")
    return entries


def format_permutation(p: Sequence[int]) -> str:
    """One-line notation: bare digits for n <= 9, comma-separated beyond."""
    if len(p) <= 9:
        return "".join(str(v) for v in p)
    return ",".join(str(v) for v in p)


def parse_permutation(text: str) -> tuple[int, ...]:
    """
    >>> parse_permutation("2413")
    (2, 4, 1, 3)
    >>> parse_permutation("2,4,1,3")
    (2, 4, 1, 3)
    """
    text = text.strip()
    if "," in text:
        p = tuple(int(part.strip()) for part in text.split(","))
    else:
        p = tuple(int(ch) for ch in text)
    if not is_permutation(p):
        raise ValueError(f"not a permutation in one-line notation: {text!r}")
    return p


# ---------------------------------------------------------------------------
# enumeration helpers for sweeps


def weak_compositions(length: int, max_entry: int) -> Iterator[tuple[int, ...]]:
    """All weak compositions of the given length with entries <= max_entry."""
    return itertools.product(range(max_entry + 1), repeat=length)


def compositions_of(total: int) -> Iterator[tuple[int, ...]]:
    """All strong compositions of total.

    >>> sorted(compositions_of(3))
    [(1, 1, 1), (1, 2), (2, 1), (3,)]
    """
    if total == 0:
        yield ()
        return
    for first in range(1, total + 1):
        for rest in compositions_of(total - first):
            yield (first,) + rest


def partitions_of(total: int, max_parts: int | None = None, max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    """All partitions of total, optionally bounding length and part size.

    >>> sorted(partitions_of(4, max_parts=2))
    [(2, 2), (3, 1), (4,)]
    """
    if max_part is None:
        max_part = total
    if total == 0:
        yield ()
        return
    if max_parts is not None and max_parts == 0:
        return
    for first in range(min(total, max_part), 0, -1):
        rest_parts = None if max_parts is None else max_parts - 1
        for rest in partitions_of(total - first, rest_parts, first):
            yield (first,) + rest


def permutations_of_size(n: int) -> Iterator[tuple[int, ...]]:
    return itertools.permutations(range(1, n + 1))
