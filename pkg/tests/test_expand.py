import pytest

from asympoly import combinat
from asympoly.bases import basis_polynomial
from asympoly.expand import (
    BasisExpansion,
    NotInSpanError,
    combinatorial_expansion,
    compose_expansions,
    expand_via_solver,
    positivity_report,
    stable_limit_probe,
    verify_expansion,
)
from asympoly.polynomial import ExactPolynomial


def unit(basis, index):
    return {tuple(index): 1}


def test_solver_roundtrip_unit_vectors():
    cases = {
        "x": [((1, 0, 2), 3)],
        "m": [((2, 1), 3), ((1, 1, 1), 3)],
        "e": [((2, 1), 3), ((3,), 3)],
        "h": [((2, 1), 3), ((1, 1), 2)],
        "s": [((2, 1), 3), ((2, 2), 3)],
        "M": [((1, 3), 3), ((2, 1, 1), 4)],
        "F": [((1, 3), 3), ((2, 2), 4)],
        "qs": [((1, 3), 3), ((2, 2), 3), ((1, 2), 3)],
        "fslide": [((0, 1, 0, 2), 4), ((2, 0, 2), 3)],
        "mslide": [((0, 1, 0, 2), 4)],
        "particle": [((1, 0, 3), 3)],
        "atom": [((1, 0, 3), 3)],
        "qkey": [((1, 0, 3), 3)],
        "key": [((0, 2, 1), 3)],
    }
    for basis, entries in cases.items():
        for index, n in entries:
            f = basis_polynomial(basis, index, n)
            expansion = expand_via_solver(f, basis, n)
            assert expansion.terms == unit(basis, index), (basis, index)


def test_solver_roundtrip_sweeps():
    # degree-complete small sweeps certify independence and triangularity
    for basis in ("fslide", "mslide", "atom", "key", "qkey", "particle"):
        for a in combinat.weak_compositions(3, 2):
            f = basis_polynomial(basis, a, 3)
            assert expand_via_solver(f, basis, 3).terms == {a: 1}
    for basis in ("m", "s", "e", "h"):
        for size in range(1, 5):
            # the e and h bases of Sym_n are indexed by partitions with
            # parts at most n; m and s by partitions with at most n parts
            for lam in combinat.partitions_of(size, max_parts=3, max_part=3):
                f = basis_polynomial(basis, lam, 3)
                assert expand_via_solver(f, basis, 3).terms == {lam: 1}
    for basis in ("M", "F", "qs"):
        for size in range(1, 5):
            for alpha in combinat.compositions_of(size):
                if len(alpha) > 4:
                    continue
                f = basis_polynomial(basis, alpha, 4)
                assert expand_via_solver(f, basis, 4).terms == {alpha: 1}
    for p in combinat.permutations_of_size(3):
        f = basis_polynomial("schubert", p, 3)
        assert expand_via_solver(f, "schubert", 3).terms == {p: 1}


def test_schubert_expansion_of_product_contains_lr():
    f = basis_polynomial("s", (2, 1), 6) * basis_polynomial("s", (2, 1), 6)
    expansion = expand_via_solver(f, "s", 6)
    assert expansion.terms[(3, 2, 1)] == 2


def test_f31_remark():
    f = basis_polynomial("F", (3, 1), 4) + basis_polynomial("F", (1, 3), 4)
    expansion = expand_via_solver(f, "M", 4)
    assert expansion.terms == {
        (3, 1): 1, (2, 1, 1): 1, (1, 2, 1): 2, (1, 1, 2): 1, (1, 3): 1, (1, 1, 1, 1): 2,
    }


def test_not_in_span():
    m121 = basis_polynomial("M", (1, 2, 1), 4)
    with pytest.raises(NotInSpanError):
        expand_via_solver(m121, "m", 4)
    asym = ExactPolynomial(3, {(1, 0, 0): 1})
    with pytest.raises(NotInSpanError):
        expand_via_solver(asym, "F", 3)


def test_known_expansion_examples():
    assert combinatorial_expansion("key", (1, 0, 3), "atom", 3).terms == {
        (1, 0, 3): 1, (1, 3, 0): 1, (3, 0, 1): 1, (3, 1, 0): 1,
    }
    assert combinatorial_expansion("qkey", (1, 0, 3), "atom", 3).terms == {
        (1, 0, 3): 1, (1, 3, 0): 1,
    }
    assert combinatorial_expansion("qkey", (1, 0, 3), "fslide", 3).terms == {
        (1, 0, 3): 1, (2, 0, 2): 1,
    }
    assert combinatorial_expansion("key", (1, 0, 3), "qkey", 3).terms == {
        (1, 0, 3): 1, (3, 0, 1): 1,
    }
    assert combinatorial_expansion("s", (2, 1), "qs", 3).terms == {
        (2, 1): 1, (1, 2): 1,
    }
    assert combinatorial_expansion("F", (1, 3), "M", 3).terms == {
        (1, 3): 1, (1, 1, 2): 1, (1, 2, 1): 1,
    }
    assert combinatorial_expansion("qs", (1, 3), "F", 3).terms == {
        (1, 3): 1, (2, 2): 1,
    }


def test_verify_expansion_report():
    report = verify_expansion("key", (1, 0, 3), "atom", 3)
    assert report.equal
    text = report.to_text()
    assert text.endswith("OK")
    assert "atom (1,0,3) 1" in text


def test_verify_expansion_examples_sweep():
    for alpha in [(1,), (2,), (1, 1), (2, 1), (1, 2), (1, 3)]:
        assert verify_expansion("F", alpha, "M", 4).equal
        assert verify_expansion("qs", alpha, "F", 4).equal
    for p in combinat.permutations_of_size(4):
        assert verify_expansion("schubert", p, "fslide", 4).equal


def test_composed_arrows():
    for a in [(1, 0, 3), (0, 2, 1), (2, 0, 2)]:
        via = compose_expansions(
            combinatorial_expansion("key", a, "qkey", 3), "atom", 3
        )
        assert via == combinatorial_expansion("key", a, "atom", 3)


def test_positivity_report():
    good = BasisExpansion("s", {(2, 1): 2})
    assert positivity_report(good).positive
    bad = BasisExpansion("qs", {(2, 1): 1, (1, 2): -1})
    report = positivity_report(bad)
    assert not report.positive
    assert report.witnesses == [((1, 2), -1)]
    assert positivity_report(BasisExpansion("s")).positive


def test_stable_limit_probe():
    key = stable_limit_probe("key", (1, 0, 3), 4, 3)
    assert key.stabilized
    qkey = stable_limit_probe("quasikey", (1, 0, 3), 4, 3)
    assert qkey.stabilized
    # weakly increasing index equals its limit from the start
    flat = stable_limit_probe("key", (1, 3), 3, 2)
    assert flat.rows[0][2]
    # already-quasisymmetric shape is constant in m
    konst = stable_limit_probe("quasikey", (1, 3), 3, 2)
    assert all(row[1] for row in konst.rows[1:])


def test_homogeneous_mixture():
    f = basis_polynomial("s", (2, 1), 3) + basis_polynomial("s", (1,), 3)
    expansion = expand_via_solver(f, "s", 3)
    assert expansion.terms == {(2, 1): 1, (1,): 1}
