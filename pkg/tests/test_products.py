import itertools

import pytest

from asympoly import combinat
from asympoly.combinat import FormalSum
from asympoly.products import (
    conjecture_harness_reiner_shimozono,
    lr_coefficient,
    overlapping_shuffle_product,
    overlapping_slide_product,
    shuffle_product,
    slide_product,
    structure_constants,
    verify_product_rule,
)


def test_overlapping_shuffle_examples():
    assert overlapping_shuffle_product((2,), (1, 2)) == FormalSum(
        {(2, 1, 2): 1, (1, 2, 2): 2, (3, 2): 1, (1, 4): 1}
    )
    assert overlapping_shuffle_product((1,), (1,)) == FormalSum({(1, 1): 2, (2,): 1})
    alpha = (2, 1)
    assert overlapping_shuffle_product(alpha, ()) == FormalSum({alpha: 1})


def test_shuffle_examples():
    assert shuffle_product((2,), (1, 2)) == FormalSum(
        {
            (1, 2, 2): 2, (1, 1, 2, 1): 1, (1, 3, 1): 1, (2, 2, 1): 1,
            (1, 1, 3): 1, (2, 1, 2): 1, (1, 4): 1, (2, 3): 1, (3, 2): 1,
        }
    )
    assert shuffle_product((1,), (1,)) == FormalSum({(2,): 1, (1, 1): 1})
    assert shuffle_product((2, 1), ()) == FormalSum({(2, 1): 1})


def test_shuffles_commutative_small():
    comps = [c for total in range(1, 4) for c in combinat.compositions_of(total)]
    for a, b in itertools.combinations(comps, 2):
        assert shuffle_product(a, b) == shuffle_product(b, a)
        assert overlapping_shuffle_product(a, b) == overlapping_shuffle_product(b, a)


def _extend_bilinear(prod, left, right):
    out = FormalSum()
    for idx, coeff in left.terms.items():
        for idx2, c2 in right.terms.items():
            for idx3, c3 in prod(idx, idx2).terms.items():
                out.add_term(idx3, coeff * c2 * c3)
    return out


@pytest.mark.parametrize("prod", [shuffle_product, overlapping_shuffle_product])
def test_shuffles_associative_small(prod):
    comps = [(1,), (2,), (1, 1)]
    for a, b, c in itertools.product(comps, repeat=3):
        left = _extend_bilinear(prod, prod(a, b), FormalSum({c: 1}))
        right = _extend_bilinear(prod, FormalSum({a: 1}), prod(b, c))
        assert left == right


def test_slide_product_example():
    assert slide_product((0, 1, 0, 2), (1, 0, 0, 1)) == FormalSum(
        {
            (2, 0, 0, 3): 1, (1, 1, 0, 3): 1, (2, 0, 2, 1): 1, (1, 1, 2, 1): 1,
            (2, 0, 1, 2): 1, (1, 1, 1, 2): 1, (1, 2, 0, 2): 1,
        }
    )


def test_slide_identity():
    a = (1, 0, 2)
    assert slide_product(a, (0, 0, 0)) == FormalSum({a: 1})
    assert overlapping_slide_product(a, (0, 0, 0)) == FormalSum({a: 1})


def test_slide_total_mass_counts_admissible_shuffles():
    # the number of admissible shuffles equals the total multiplicity
    a, b = (0, 1, 0, 2), (1, 0, 0, 1)
    assert sum(slide_product(a, b).terms.values()) == 7


def test_overlapping_slide_example():
    assert overlapping_slide_product((0, 1, 0, 2), (1, 0, 0, 1)) == FormalSum(
        {
            (1, 1, 1, 2): 1, (1, 1, 2, 1): 1, (1, 1, 0, 3): 1, (1, 2, 0, 2): 1,
            (2, 0, 1, 2): 1, (2, 0, 2, 1): 1, (2, 0, 0, 3): 1,
        }
    )


def test_slide_products_collapse_to_shuffles():
    # with enough leading zeros the slide products restrict to the
    # quasisymmetric shuffle products
    cases = [((1,), (1,)), ((2,), (1,)), ((1, 1), (1,)), ((2,), (1, 2))]
    for alpha, beta in cases:
        n = sum(alpha) + sum(beta)
        a = (0,) * (n - len(alpha)) + alpha
        b = (0,) * (n - len(beta)) + beta

        def lift(fs):
            out = FormalSum()
            for gamma, coeff in fs.terms.items():
                out.add_term((0,) * (n - len(gamma)) + gamma, coeff)
            return out

        assert slide_product(a, b) == lift(shuffle_product(alpha, beta))
        assert overlapping_slide_product(a, b) == lift(
            overlapping_shuffle_product(alpha, beta)
        )


def test_lr_coefficient():
    assert lr_coefficient((2, 1), (2, 1), (3, 2, 1)) == 2
    assert lr_coefficient((2, 1), (), (2, 1)) == 1
    assert lr_coefficient((2, 1), (1,), (4,)) == 0
    assert lr_coefficient((1,), (1,), (3,)) == 0


def test_lr_symmetry():
    parts = [lam for size in range(1, 4) for lam in combinat.partitions_of(size)]
    for lam, mu in itertools.combinations(parts, 2):
        for nu in combinat.partitions_of(sum(lam) + sum(mu)):
            assert lr_coefficient(lam, mu, nu) == lr_coefficient(mu, lam, nu)


def test_structure_constants_worked_examples():
    assert structure_constants("M", (2,), (1, 2)).terms == {
        (2, 1, 2): 1, (1, 2, 2): 2, (3, 2): 1, (1, 4): 1,
    }
    f_expansion = structure_constants("F", (2,), (1, 2)).terms
    assert f_expansion[(1, 2, 2)] == 2
    assert len(f_expansion) == 9
    assert structure_constants("fslide", (0, 1, 0, 2), (1, 0, 0, 1), 4).terms == dict(
        slide_product((0, 1, 0, 2), (1, 0, 0, 1)).terms
    )


def test_structure_constants_default_ambient():
    # defaults keep every product term expressible
    expansion = structure_constants("F", (2, 1), (1, 1))
    assert sum(c * sum(idx) for idx, c in expansion.terms.items()) > 0
    assert all(sum(idx) == 5 for idx in expansion.terms)


def test_verify_product_rules_small():
    for rule in ("shuffle-F", "oshuffle-M"):
        report = verify_product_rule(rule, max_size=3)
        assert report.ok and report.checked == 49
    report = verify_product_rule("lr-s", max_size=3)
    assert report.ok
    for rule in ("slide-fslide", "oslide-mslide"):
        report = verify_product_rule(rule, max_entry=2, max_len=2)
        assert report.ok
        assert report.to_text().endswith("OK")


def test_all_five_product_rules_full_sweep():
    # the central sweep: sizes up to 4 for the quasisymmetric rules,
    # entries up to 2 and length up to 4 for the slide rules
    for rule in ("oshuffle-M", "shuffle-F", "lr-s", "oslide-mslide", "slide-fslide"):
        report = verify_product_rule(rule, max_size=4, max_entry=2, max_len=4)
        assert report.ok, report.to_text()


def test_reiner_shimozono_tiny():
    report = conjecture_harness_reiner_shimozono(1, 2)
    assert report.ok
    assert report.pairs_checked == 4 + 16
    assert "OK" in report.to_text()
