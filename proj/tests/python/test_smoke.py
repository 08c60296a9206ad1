import pytest

import mixedwitt as mw


def hamilton():
    return mw.Algebra(mw.Field(), "-1", "-1")


def test_field_orderings():
    K = mw.Field("t^2-2")
    assert K.degree == 2
    assert len(K.orderings()) == 2
    assert mw.Field("t^2+1").orderings() == []
    assert mw.signatures(K, "1,t") == [0, 2]


def test_field_errors_carry_kind():
    with pytest.raises(mw.Error) as info:
        mw.Field("t^2-1")
    assert mw.error_kind(info.value) == "ReducibleDetected"
    with pytest.raises(mw.Error) as info:
        mw.Field("t^2-")
    assert mw.error_kind(info.value) == "ParseError"


def test_witt_and_hilbert():
    assert not mw.witt_equal("2,3", "1,6")
    assert mw.witt_equal("1,1", "2,2")
    assert mw.hilbert_symbol("-1", "-1", 0) == -1
    assert mw.hilbert_symbol("-1", "-1", 2) == -1
    assert mw.hilbert_symbol("2", "7", 7) == 1
    assert sorted(mw.pfister(mw.Field(), "-1,-1")) == ["1", "1", "1", "1"]
    assert mw.weakly_equivalent(mw.Field("t^2-2"), "1,-1", "")


def test_quaternions():
    H = hamilton()
    assert mw.quat_mul(H, "i", "j") == "k"
    assert mw.quat_mul(H, "j", "i") == "-k"
    square, slot = mw.symbol_slot(mw.Algebra(mw.Field(), "-1", "3"), "i")
    assert (square, slot) == ("-1", "3")


def test_mixed_products_and_signatures():
    H = hamilton()
    one = {"herm": [1]}
    product = mw.mixed_mul(H, one, one)
    assert len(product["scalar"]["entries"]) == 4
    assert product["herm"] == [] and product["skew"] == []
    assert mw.mixed_mul(H, {"skew": ["i"]}, {"skew": ["j"]})["scalar"]["entries"] == []
    assert mw.rdim2(H, {"scalar": "1"}) == 1
    assert mw.rdim2(H, one) == 0
    assert mw.signature_pairs(H, one) == [(2, -2)]
    assert mw.principal_polarization(H, {"herm": [-1]}) == {0: -1}


def test_split_orderings_need_a_reference():
    A = mw.Algebra(mw.Field(), "-1", "3")
    with pytest.raises(mw.Error) as info:
        mw.signature_pairs(A, {"skew": ["i"]})
    assert mw.error_kind(info.value) == "MissingReference"
    assert mw.signature_pairs(A, {"skew": ["-i"]}, ref="i") == [(-2, 2)]
    assert mw.find_reference(A) == ["i"]
    assert mw.find_reference(mw.Algebra(mw.Field(), "1", "1")) == ["k"]
    with pytest.raises(mw.Error) as info:
        mw.find_reference(mw.Algebra(mw.Field(), "1", "1"), budget=1)
    assert mw.error_kind(info.value) == "SearchBudgetExceeded"


def test_mixed_field():
    K = mw.Field("t^2-2")
    A = mw.Algebra(K, "-1", "t")
    assert mw.partition(A) == {"split": [1], "nonsplit": [0]}
    x = {"scalar": "1,t", "herm": ["t"], "skew": ["i+j"]}
    pairs = mw.signature_pairs(A, x, ref="auto")
    assert len(pairs) == 2
    assert mw.rdim2(A, x) == 0
    for plus, minus in pairs:
        assert plus % 2 == 0 and minus % 2 == 0


def test_spectrum():
    report = mw.spectrum(hamilton(), [3, 5])
    assert report["label_count"] == 7
    assert report["xtilde"]["size"] == 2
    assert mw.spectrum(mw.Algebra(mw.Field("t^2-2"), "-1", "t"))["xtilde"]["size"] == 4
    with pytest.raises(mw.Error):
        mw.spectrum(hamilton(), [2])
