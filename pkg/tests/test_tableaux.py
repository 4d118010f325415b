import itertools
from collections import Counter

from asympoly import combinat, tableaux
from asympoly.tableaux import (
    composition_diagram,
    descent_composition,
    diagram_weight,
    enumerate_compatible,
    enumerate_composition_tableaux,
    enumerate_key_skylines,
    enumerate_particle_tableaux,
    enumerate_pipe_dreams,
    enumerate_ssyt,
    is_initial_tableau,
    is_particle_highest,
    is_quasi_yamanouchi_pipe_dream,
    is_quasi_yamanouchi_tableau,
    is_yamanouchi,
    kohnert_closure,
    pipe_dream_permutation,
    pipe_dream_weight,
    runs,
    skyline_weight,
    ssyt_weight,
    tableau_weight,
)


# -- semistandard Young tableaux --------------------------------------------


def test_ssyt_basic_counts():
    ts = enumerate_ssyt((2, 1), 2)
    assert len(ts) == 2
    assert sorted(ssyt_weight(t, 2) for t in ts) == [(1, 2), (2, 1)]
    assert enumerate_ssyt((), 3) == [()]  # one empty tableau


def test_ssyt_validity_recheck():
    for t in enumerate_ssyt((3, 2), 3):
        for row in t:
            assert all(row[i] <= row[i + 1] for i in range(len(row) - 1))
        for r in range(len(t) - 1):
            for c in range(len(t[r + 1])):
                assert t[r][c] < t[r + 1][c]


def test_skew_lr_example():
    # three fillings of (3,2,1)/(2,1) with two 1s and one 2; two Yamanouchi
    ts = [
        t
        for t in enumerate_ssyt((3, 2, 1), 2, inner=(2, 1))
        if ssyt_weight(t, 2) == (2, 1)
    ]
    assert len(ts) == 3
    assert sum(1 for t in ts if is_yamanouchi(t)) == 2


def test_yamanouchi():
    assert not is_yamanouchi(((2,), (1,), (1,)))  # reading word 211
    assert is_yamanouchi(((1, 1, 1),))


# -- composition tableaux ----------------------------------------------------


def _recheck_composition_tableau(shape, t):
    # independent validation of (S.1)-(S.4)
    assert len(t) == len(shape)
    assert all(len(row) == part for row, part in zip(t, shape))
    for i, row in enumerate(t):
        if row:
            assert row[0] == i + 1  # (S.4)
        assert all(row[j] >= row[j + 1] for j in range(len(row) - 1))  # (S.2)
    width = max(shape, default=0)
    for j in range(width):
        col = [row[j] for row in t if len(row) > j]
        assert len(col) == len(set(col))  # (S.1)
    # (S.3) every triple is inversion
    for r, rp in itertools.combinations(range(len(shape)), 2):
        if shape[r] >= shape[rp]:
            for j in range(shape[rp] - 1):
                z, x, y = t[r][j], t[r][j + 1], t[rp][j + 1]
                assert not (x <= y <= z)
        else:
            for j in range(min(shape[r], shape[rp] - 1)):
                y, z, x = t[r][j], t[rp][j], t[rp][j + 1]
                assert not (x <= y <= z)


def test_composition_tableaux_figure_counts():
    # the ten tableaux across all length-3 shapes with positive part (1,3)
    shapes = [(1, 3, 0), (1, 0, 3), (0, 1, 3)]
    found = {shape: enumerate_composition_tableaux(shape) for shape in shapes}
    assert [len(found[s]) for s in shapes] == [2, 5, 3]
    for shape, ts in found.items():
        for t in ts:
            _recheck_composition_tableau(shape, t)


def test_atom_shape_103_weights():
    ts = enumerate_composition_tableaux((1, 0, 3))
    weights = sorted(tableau_weight(t, 3) for t in ts)
    assert weights == sorted(
        [(1, 0, 3), (1, 1, 2), (2, 0, 2), (1, 2, 1), (2, 1, 1)]
    )


def test_empty_shape():
    assert enumerate_composition_tableaux((0, 0, 0)) == [((), (), ())]


def test_figure_filters():
    shapes = [(1, 3, 0), (1, 0, 3), (0, 1, 3)]
    all_t = [t for s in shapes for t in enumerate_composition_tableaux(s)]
    assert len(all_t) == 10
    qy = [t for t in all_t if is_quasi_yamanouchi_tableau(t)]
    initial = [t for t in all_t if is_initial_tableau(t)]
    both = [t for t in qy if is_initial_tableau(t)]
    assert len(qy) == 6
    assert len(initial) == 6
    assert len(both) == 2


def test_single_box_filters():
    t = ((1,),)
    assert is_quasi_yamanouchi_tableau(t)
    assert is_initial_tableau(t)
    assert is_particle_highest(t)


def test_particle_highest_contains_quasi_yamanouchi():
    for length in range(1, 5):
        for shape in combinat.weak_compositions(length, 3):
            for t in enumerate_composition_tableaux(shape):
                if is_quasi_yamanouchi_tableau(t):
                    assert is_particle_highest(t)


def test_particle_tableaux():
    ts = enumerate_particle_tableaux((1, 0, 3))
    assert sorted(tableau_weight(t, 3) for t in ts) == [(1, 0, 3), (1, 1, 2), (1, 2, 1)]
    # one-row shapes agree with plain composition tableaux
    assert enumerate_particle_tableaux((0, 3, 0)) == enumerate_composition_tableaux((0, 3, 0))
    # always a subset
    for shape in combinat.weak_compositions(3, 2):
        sub = set(enumerate_particle_tableaux(shape))
        assert sub <= set(enumerate_composition_tableaux(shape))


# -- skylines ---------------------------------------------------------------


def test_key_skylines():
    fillings = enumerate_key_skylines((0, 2, 1), 3)
    assert len(fillings) == 5
    weights = sorted(skyline_weight(t, 3) for t in fillings)
    assert weights == sorted([(0, 2, 1), (1, 1, 1), (2, 0, 1), (2, 1, 0), (1, 2, 0)])
    for t in fillings:
        # basement is n+1-i and rows weakly decrease from it
        for i, row in enumerate(t):
            assert row[0] == 3 - i
            assert all(row[j] >= row[j + 1] for j in range(len(row) - 1))


def test_key_skylines_zero():
    fillings = enumerate_key_skylines((0, 0, 0), 3)
    assert len(fillings) == 1
    assert skyline_weight(fillings[0], 3) == (0, 0, 0)


# -- pipe dreams -------------------------------------------------------------


def test_pipe_dreams_15324():
    p = (1, 5, 3, 2, 4)
    dreams = enumerate_pipe_dreams(p)
    assert len(dreams) == 7
    weights = Counter(pipe_dream_weight(d, 5) for d in dreams)
    assert weights == Counter(
        {
            (0, 3, 1, 0, 0): 1, (1, 2, 1, 0, 0): 1, (2, 1, 1, 0, 0): 1,
            (3, 1, 0, 0, 0): 1, (3, 0, 1, 0, 0): 1, (1, 3, 0, 0, 0): 1,
            (2, 2, 0, 0, 0): 1,
        }
    )
    for d in dreams:
        assert pipe_dream_permutation(d, 5) == p


def test_pipe_dream_1432_example():
    d = frozenset({(1, 2), (2, 1), (2, 2)})
    assert pipe_dream_permutation(d, 4) == (1, 4, 3, 2)
    assert pipe_dream_weight(d, 4) == (1, 2, 0, 0)
    assert d in set(enumerate_pipe_dreams((1, 4, 3, 2)))


def test_pipe_dreams_identity():
    dreams = enumerate_pipe_dreams((1, 2, 3))
    assert dreams == [frozenset()]


def test_quasi_yamanouchi_pipe_dreams():
    assert is_quasi_yamanouchi_pipe_dream(frozenset())
    assert is_quasi_yamanouchi_pipe_dream(frozenset({(1, 1)}))
    assert not is_quasi_yamanouchi_pipe_dream(frozenset({(1, 2)}))


def test_pipe_dreams_vs_compatible_pairs():
    # weight-multiset bijection with (reduced word, compatible sequence) pairs
    for p in combinat.permutations_of_size(4):
        dream_weights = Counter(
            pipe_dream_weight(d, 4) for d in enumerate_pipe_dreams(p)
        )
        pair_weights = Counter()
        for word in combinat.reduced_words(p):
            for beta in enumerate_compatible(word):
                pair_weights[tableaux.compatible_weight(beta, 4)] += 1
        assert dream_weights == pair_weights


# -- Kohnert diagrams ---------------------------------------------------------


def test_kohnert_composition_021():
    closure = kohnert_closure(composition_diagram((0, 2, 1)))
    assert len(closure) == 5
    weights = sorted(diagram_weight(d, 3) for d in closure)
    assert weights == sorted([(0, 2, 1), (1, 1, 1), (2, 0, 1), (2, 1, 0), (1, 2, 0)])


def test_kohnert_rothe_15324():
    p = (1, 5, 3, 2, 4)
    closure = kohnert_closure(frozenset(combinat.rothe_diagram(p)))
    assert len(closure) == 7
    weights = Counter(diagram_weight(d, 5) for d in closure)
    assert weights == Counter(
        pipe_dream_weight(d, 5) for d in enumerate_pipe_dreams(p)
    )


def test_kohnert_empty():
    assert kohnert_closure(frozenset()) == frozenset({frozenset()})


def test_kohnert_vs_pipe_dreams_all_s4():
    for p in combinat.permutations_of_size(4):
        kd = Counter(
            diagram_weight(d, 4)
            for d in kohnert_closure(frozenset(combinat.rothe_diagram(p)))
        )
        pd = Counter(pipe_dream_weight(d, 4) for d in enumerate_pipe_dreams(p))
        assert kd == pd


# -- compatible sequences and runs -------------------------------------------


def test_compatible_sequences():
    assert enumerate_compatible((1, 2, 1)) == []
    assert enumerate_compatible((2, 1, 2)) == [(1, 1, 2)]
    assert enumerate_compatible((1,)) == [(1,)]


def test_runs_and_descent_composition():
    assert runs((4, 1, 2, 2, 1)) == ((4,), (1, 2, 2), (1,))
    assert descent_composition((4, 1, 2, 2, 1)) == (1, 3, 1)
    assert descent_composition((5, 1, 8, 2, 1)) == (1, 2, 1, 1)
    assert descent_composition((1, 2, 3)) == (3,)
    assert descent_composition(()) == ()
