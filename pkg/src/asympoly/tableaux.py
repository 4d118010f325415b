"""
Enumeration engines for the combinatorial objects behind every basis:
semistandard Young tableaux (straight and skew), composition tableaux
with the triple rules, semi-skyline fillings, reduced pipe dreams,
Kohnert diagram closures, compatible sequences, and word statistics.

Every enumerator returns plain immutable data (tuples, frozensets) so
results can be cached, hashed and compared freely.  Generated objects
are re-validated by independent checkers in the test suite rather than
trusted from the generator.
"""
from __future__ import annotations

from typing import Iterator, Sequence

from . import combinat

Box = tuple[int, int]  # (row, column), both 1-based; column 0 is a basement


# ---------------------------------------------------------------------------
# semistandard Young tableaux


def enumerate_ssyt(
    shape: Sequence[int],
    max_label: int,
    inner: Sequence[int] | None = None,
) -> list[tuple[tuple[int, ...], ...]]:
    """All (skew) semistandard fillings with labels at most ``max_label``.

    Rows weakly increase left to right, columns strictly increase downward.
    Row i of the result holds the labels of the filled boxes, i.e. columns
    inner_i + 1 through shape_i.
    """
    outer = tuple(shape)
    lam = combinat.pad(inner or (), len(outer))
    if any(lam[i] > outer[i] for i in range(len(outer))):
        raise ValueError("inner shape does not fit inside outer shape")
    rows: list[list[int]] = [[0] * (outer[i] - lam[i]) for i in range(len(outer))]
    results: list[tuple[tuple[int, ...], ...]] = []

    cells = [
        (r, c)
        for r in range(len(outer))
        for c in range(lam[r] + 1, outer[r] + 1)
    ]

    def fill(k: int) -> None:
        if k == len(cells):
            results.append(tuple(tuple(row) for row in rows))
            return
        r, c = cells[k]
        lo = 1
        if c > lam[r] + 1:
            lo = rows[r][c - lam[r] - 2]
        if r > 0 and lam[r - 1] < c <= outer[r - 1]:
            above = rows[r - 1][c - lam[r - 1] - 1]
            lo = max(lo, above + 1)
        for label in range(lo, max_label + 1):
            rows[r][c - lam[r] - 1] = label
            fill(k + 1)
        rows[r][c - lam[r] - 1] = 0

    fill(0)
    return results


def ssyt_weight(t: Sequence[Sequence[int]], n: int) -> tuple[int, ...]:
    counts = [0] * n
    for row in t:
        for label in row:
            counts[label - 1] += 1
    return tuple(counts)


def reading_word(t: Sequence[Sequence[int]]) -> tuple[int, ...]:
    """Rows top to bottom, each read right to left."""
    word: list[int] = []
    for row in t:
        word.extend(reversed(row))
    return tuple(word)


def is_yamanouchi(t: Sequence[Sequence[int]]) -> bool:
    """Every initial reading-word segment has #i >= #(i+1) for all i.

    >>> is_yamanouchi(((1,), (1,), (2,)))
    True
    >>> is_yamanouchi(((2,), (1,), (1,)))
    False
    """
    counts: dict[int, int] = {}
    for letter in reading_word(t):
        counts[letter] = counts.get(letter, 0) + 1
        if counts[letter] > counts.get(letter - 1, 0) and letter > 1:
            return False
    return True


# ---------------------------------------------------------------------------
# composition tableaux
#
# A composition tableau of shape a is stored as a tuple of rows, row i
# being a tuple of length a_i.  Row indices are 1-based throughout.


def _triples_ok(rows: Sequence[Sequence[int]], lengths: Sequence[int]) -> bool:
    """Check that every triple is inversion: never X <= Y <= Z.

    Rows are addressed by 0-based list index here; ``lengths`` gives the
    number of boxes per row.  Two configurations, for rows r above rp:
    upper row weakly longer takes Z, X adjacent in the upper row with Y
    below X; upper row strictly shorter takes Y above Z, with Z, X
    adjacent in the lower row.
    """
    m = len(rows)
    for r in range(m):
        if lengths[r] == 0:
            continue
        for rp in range(r + 1, m):
            if lengths[rp] == 0:
                continue
            if lengths[r] >= lengths[rp]:
                for j in range(lengths[rp] - 1):
                    z, x, y = rows[r][j], rows[r][j + 1], rows[rp][j + 1]
                    if x <= y <= z:
                        return False
            else:
                for j in range(min(lengths[r], lengths[rp] - 1)):
                    y, z, x = rows[r][j], rows[rp][j], rows[rp][j + 1]
                    if x <= y <= z:
                        return False
    return True


def _row_fillings(first: int, length: int) -> Iterator[tuple[int, ...]]:
    """Weakly decreasing rows of the given length with fixed first entry."""
    if length == 0:
        yield ()
        return

    def extend(prefix: list[int]) -> Iterator[tuple[int, ...]]:
        if len(prefix) == length:
            yield tuple(prefix)
            return
        for v in range(prefix[-1], 0, -1):
            yield from extend(prefix + [v])

    yield from extend([first])


def enumerate_composition_tableaux(shape: Sequence[int]) -> list[tuple[tuple[int, ...], ...]]:
    """Semistandard composition tableaux of the given weak-composition shape.

    Entries in the first column equal their row index, rows weakly
    decrease, no column repeats a label, and every triple is inversion.
    """
    shape = tuple(shape)
    results: list[tuple[tuple[int, ...], ...]] = []
    rows: list[tuple[int, ...]] = []
    columns: list[set[int]] = [set() for _ in range(max(shape, default=0))]

    def fill(r: int) -> None:
        if r == len(shape):
            if _triples_ok(rows, shape):
                results.append(tuple(rows))
            return
        if shape[r] == 0:
            rows.append(())
            fill(r + 1)
            rows.pop()
            return
        for row in _row_fillings(r + 1, shape[r]):
            if any(row[j] in columns[j] for j in range(len(row))):
                continue
            for j, v in enumerate(row):
                columns[j].add(v)
            rows.append(row)
            fill(r + 1)
            rows.pop()
            for j, v in enumerate(row):
                columns[j].remove(v)

    fill(0)
    return results


def tableau_weight(t: Sequence[Sequence[int]], n: int) -> tuple[int, ...]:
    return ssyt_weight(t, n)


def _label_columns(t: Sequence[Sequence[int]]) -> dict[int, set[int]]:
    """For each label, the set of columns (1-based) where it occurs."""
    where: dict[int, set[int]] = {}
    for row in t:
        for j, label in enumerate(row):
            where.setdefault(label, set()).add(j + 1)
    return where


def is_quasi_yamanouchi_tableau(t: Sequence[Sequence[int]]) -> bool:
    """Each label i sits in column 1, or some i+1 lies weakly right of an i."""
    where = _label_columns(t)
    for label, cols in where.items():
        if 1 in cols:
            continue
        higher = where.get(label + 1, set())
        if higher and max(higher) >= min(cols):
            continue
        return False
    return True


def is_initial_tableau(t: Sequence[Sequence[int]]) -> bool:
    """The labels used form an initial segment of the positive integers."""
    labels = {label for row in t for label in row}
    return labels == set(range(1, len(labels) + 1))


def is_particle_highest(t: Sequence[Sequence[int]]) -> bool:
    """Like the quasiYamanouchi filter, but against the next label present."""
    where = _label_columns(t)
    labels = sorted(where)
    for pos, label in enumerate(labels):
        if 1 in where[label]:
            continue
        if pos + 1 < len(labels):
            nxt = labels[pos + 1]
            if max(where[nxt]) >= min(where[label]):
                continue
        return False
    return True


def enumerate_particle_tableaux(shape: Sequence[int]) -> list[tuple[tuple[int, ...], ...]]:
    """Composition tableaux whose row label blocks strictly increase downward."""
    out = []
    for t in enumerate_composition_tableaux(shape):
        filled = [row for row in t if row]
        if all(max(filled[k]) < min(filled[k + 1]) for k in range(len(filled) - 1)):
            out.append(t)
    return out


# ---------------------------------------------------------------------------
# key semi-skyline fillings
#
# A skyline filling for a is a filling of the reversed diagram with a
# basement column; row i of the stored tuple includes the basement entry
# in position 0.


def enumerate_key_skylines(a: Sequence[int], n: int) -> list[tuple[tuple[int, ...], ...]]:
    """Key semi-skyline fillings for a: shape rev(a), basement entry n+1-i."""
    a = combinat.pad(a, n)
    shape = tuple(reversed(a))
    augmented = tuple(length + 1 for length in shape)
    results: list[tuple[tuple[int, ...], ...]] = []
    rows: list[tuple[int, ...]] = []
    columns: list[set[int]] = [set() for _ in range(max(shape, default=0))]

    def fill(r: int) -> None:
        if r == n:
            if _triples_ok(rows, augmented):
                results.append(tuple(rows))
            return
        basement = n - r
        for row in _row_fillings(basement, shape[r] + 1):
            body = row[1:]
            if any(body[j] in columns[j] for j in range(len(body))):
                continue
            for j, v in enumerate(body):
                columns[j].add(v)
            rows.append(row)
            fill(r + 1)
            rows.pop()
            for j, v in enumerate(body):
                columns[j].remove(v)

    fill(0)
    return results


def skyline_weight(t: Sequence[Sequence[int]], n: int) -> tuple[int, ...]:
    """Label counts over the non-basement boxes."""
    counts = [0] * n
    for row in t:
        for label in row[1:]:
            counts[label - 1] += 1
    return tuple(counts)


# ---------------------------------------------------------------------------
# pipe dreams
#
# A pipe dream is the frozenset of its crossing tiles (row, column); the
# infinite field of turning tiles is implicit.  Crossings of a reduced
# dream for p in S_n fit in the staircase {(i, j) : i + j <= n}.


def _staircase_cells(n: int) -> list[Box]:
    """Reading order: rows top to bottom, right to left within a row."""
    return [(i, j) for i in range(1, n + 1) for j in range(n - i, 0, -1)]


def pipe_dream_permutation(crosses: frozenset[Box], n: int) -> tuple[int, ...] | None:
    """The permutation traced by the dream, or None if it is not reduced."""
    p = combinat.identity_perm(n)
    length = 0
    for i, j in sorted(crosses, key=lambda box: (box[0], -box[1])):
        k = i + j - 1
        if k >= n or p[k - 1] > p[k]:
            return None
        p = combinat.multiply_simple(p, k)
        length += 1
    return p


def enumerate_pipe_dreams(p: Sequence[int]) -> list[frozenset[Box]]:
    """All reduced pipe dreams tracing the permutation p."""
    p = combinat.strip_fixed_points(p) or (1,)
    n = len(p)
    target = combinat.pad_permutation(p, n)
    goal_length = combinat.perm_length(target)
    cells = _staircase_cells(n)
    results: list[frozenset[Box]] = []
    crosses: list[Box] = []

    def search(k: int, current: tuple[int, ...], length: int) -> None:
        if goal_length - length > len(cells) - k:
            return
        if k == len(cells):
            if current == target:
                results.append(frozenset(crosses))
            return
        i, j = cells[k]
        search(k + 1, current, length)
        letter = i + j - 1
        if length < goal_length and current[letter - 1] < current[letter]:
            crosses.append((i, j))
            search(k + 1, combinat.multiply_simple(current, letter), length + 1)
            crosses.pop()

    search(0, combinat.identity_perm(n), 0)
    return results


def pipe_dream_weight(d: frozenset[Box], n: int) -> tuple[int, ...]:
    counts = [0] * n
    for i, _ in d:
        counts[i - 1] += 1
    return tuple(counts)


def is_quasi_yamanouchi_pipe_dream(d: frozenset[Box]) -> bool:
    """The leftmost cross of each row is in column 1 or weakly left of a
    cross in the row below."""
    by_row: dict[int, list[int]] = {}
    for i, j in d:
        by_row.setdefault(i, []).append(j)
    for i, cols in by_row.items():
        leftmost = min(cols)
        if leftmost == 1:
            continue
        below = by_row.get(i + 1)
        if below and max(below) >= leftmost:
            continue
        return False
    return True


# ---------------------------------------------------------------------------
# Kohnert diagrams


def composition_diagram(a: Sequence[int]) -> frozenset[Box]:
    """Left-justified boxes: a_i boxes in row i."""
    return frozenset((i + 1, j) for i, x in enumerate(a) for j in range(1, x + 1))


def kohnert_moves(d: frozenset[Box]) -> list[frozenset[Box]]:
    """All diagrams reachable by one Kohnert move.

    The rightmost box of a row jumps to the lowest empty cell strictly
    above it in its column.
    """
    out = []
    rows = {i for i, _ in d}
    for r in rows:
        c = max(j for i, j in d if i == r)
        target = None
        for rp in range(r - 1, 0, -1):
            if (rp, c) not in d:
                target = rp
                break
        if target is not None:
            out.append((d - {(r, c)}) | {(target, c)})
    return out


def kohnert_closure(d: frozenset[Box]) -> frozenset[frozenset[Box]]:
    """Closure of {d} under Kohnert moves, by breadth-first search."""
    seen = {d}
    frontier = [d]
    while frontier:
        cur = frontier.pop()
        for nxt in kohnert_moves(cur):
            if nxt not in seen:
                seen.add(nxt)
                frontier.append(nxt)
    return frozenset(seen)


def diagram_weight(d: frozenset[Box], n: int) -> tuple[int, ...]:
    counts = [0] * n
    for i, _ in d:
        counts[i - 1] += 1
    return tuple(counts)


# ---------------------------------------------------------------------------
# compatible sequences


def enumerate_compatible(alpha: Sequence[int]) -> list[tuple[int, ...]]:
    """All weakly increasing words beta bounded above by alpha, strictly
    increasing wherever alpha does.

    >>> enumerate_compatible((1, 2, 1))
    []
    >>> enumerate_compatible((2, 1, 2))
    [(1, 1, 2)]
    """
    results: list[tuple[int, ...]] = []
    k = len(alpha)

    def extend(prefix: list[int]) -> None:
        i = len(prefix)
        if i == k:
            results.append(tuple(prefix))
            return
        lo = 1
        if i > 0:
            lo = prefix[-1] + (1 if alpha[i - 1] < alpha[i] else 0)
        for b in range(lo, alpha[i] + 1):
            extend(prefix + [b])

    extend([])
    return results


def compatible_weight(beta: Sequence[int], n: int) -> tuple[int, ...]:
    counts = [0] * n
    for b in beta:
        counts[b - 1] += 1
    return tuple(counts)


# ---------------------------------------------------------------------------
# runs and descent compositions


def runs(word: Sequence[int]) -> tuple[tuple[int, ...], ...]:
    """Maximal weakly increasing runs, split at strict descents.

    >>> runs((5, 1, 8, 2, 1))
    ((5,), (1, 8), (2,), (1,))
    """
    if not word:
        return ()
    out: list[list[int]] = [[word[0]]]
    for prev, cur in zip(word, word[1:]):
        if prev > cur:
            out.append([cur])
        else:
            out[-1].append(cur)
    return tuple(tuple(run) for run in out)


def descent_composition(word: Sequence[int]) -> tuple[int, ...]:
    """Run lengths of the word.

    >>> descent_composition((4, 1, 2, 2, 1))
    (1, 3, 1)
    """
    return tuple(len(run) for run in runs(word))
