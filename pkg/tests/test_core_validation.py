import pytest

from linbwm import DominanceWarning, InputError, validate_pcs

from conftest import make_pcs


def test_accepts_example1_shape():
    pcs = make_pcs([1, 2, 3, 4, 7], [7, 2, 3, 2, 1])
    assert pcs.n == 5
    assert pcs.best == 0 and pcs.worst == 4
    assert pcs.a_bw == 7
    assert pcs.middle == (1, 2, 3)


def test_accepts_all_equal_preferences():
    pcs = make_pcs([1, 1, 1], [1, 1, 1])
    assert pcs.a_bw == 1
    from linbwm import CONSISTENT, compute_epsilons

    assert compute_epsilons(pcs).pivot.kind == CONSISTENT


def test_bw_mismatch_names_both_fields():
    with pytest.raises(InputError) as exc:
        make_pcs([1, 2], [3, 1])
    assert exc.value.code == "BwMismatch"
    assert "best_to_others" in str(exc.value)
    assert "others_to_worst" in str(exc.value)


def test_best_equals_worst():
    with pytest.raises(InputError) as exc:
        make_pcs([1, 2, 3], [3, 2, 1], best=0, worst=0)
    assert exc.value.code == "BestEqualsWorst"


def test_diagonal_not_one():
    with pytest.raises(InputError) as exc:
        make_pcs([2, 2, 3], [3, 2, 1])
    assert exc.value.code == "DiagonalNotOne"
    with pytest.raises(InputError) as exc:
        make_pcs([1, 2, 3], [3, 2, 2])
    assert exc.value.code == "DiagonalNotOne"


def test_out_of_scale():
    with pytest.raises(InputError) as exc:
        make_pcs([1, 12, 3], [3, 2, 1])
    assert exc.value.code == "OutOfScale"
    with pytest.raises(InputError) as exc:
        make_pcs([1, 0.5, 3], [3, 2, 1])
    assert exc.value.code == "OutOfScale"


def test_too_few_criteria():
    with pytest.raises(InputError) as exc:
        validate_pcs({"best": 0, "worst": 0, "best_to_others": [1], "others_to_worst": [1]})
    assert exc.value.code == "TooFewCriteria"


def test_duplicate_labels():
    with pytest.raises(InputError) as exc:
        make_pcs([1, 2, 3], [3, 2, 1], criteria=["a", "b", "a"])
    assert exc.value.code == "DuplicateLabels"


def test_soft_dominance_warns_but_accepts():
    with pytest.warns(DominanceWarning, match="c2"):
        pcs = make_pcs([1, 5, 3], [3, 2, 1])  # a_b2 = 5 > a_bw = 3
    assert pcs.best_to_others[1] == 5


def test_labels_resolve_best_and_worst():
    pcs = validate_pcs(
        {
            "criteria": ["cost", "risk", "time"],
            "best": "cost",
            "worst": "time",
            "best_to_others": [1, 2, 4],
            "others_to_worst": [4, 2, 1],
        }
    )
    assert pcs.best == 0 and pcs.worst == 2


def test_revalidates_existing_system(example1):
    assert validate_pcs(example1) == example1


def test_non_integer_entries_allowed_for_solver():
    pcs = make_pcs([1, 2.5, 4], [4, 1.5, 1])
    assert pcs.best_to_others[1] == 2.5
