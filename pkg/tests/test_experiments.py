import pytest
from hypothesis import given, settings, strategies as st

from naive import txt
from suffixient import experiments, families, oracle
from suffixient.text import StringOp, Text, apply, from_tokens


def test_variant_counts():
    w = txt("abaab")
    assert experiments.variant_alphabet(w) == [98, 99, 100]
    counts = {k: len(experiments.variants(w, k)) for k in experiments.SWEEP_KINDS}
    assert counts == {"append": 3, "prepend": 3, "insert": 18, "delete": 5,
                      "substitute": 10, "rotate": 5, "reverse": 1}
    with pytest.raises(ValueError):
        experiments.variants(w, "swap")


def test_abaab_append_chi_not_monotone():
    rep = experiments.sensitivity(txt("abaab"), "append", "chi")
    assert rep.base == 4 and rep.min_additive == -1
    assert rep.min_witness == StringOp("append", None, txt("a")[0])
    assert rep.explored == 3 and rep.mode == "exhaustive"


def test_witness_reproduces_max():
    w = families.wm(3)
    rep = experiments.sensitivity(w, "substitute", "sre")
    assert oracle.sre(apply(w, rep.max_witness)) - rep.base == rep.max_additive
    assert oracle.sre(apply(w, rep.min_witness)) - rep.base == rep.min_additive
    assert rep.explored == len(experiments.variants(w, "substitute"))


def test_w4_rotation_sweep():
    w = families.wm(4)
    rep = experiments.sensitivity(w, "rotate", "sre")
    assert rep.base == 20
    values = dict((o.position, v) for o, v in rep.rows)
    # the rotation beginning at the second a is the constructive variant
    assert values[9] == 14
    assert rep.min_additive <= -6


@pytest.mark.parametrize("m", [3, 4, 5, 6])
def test_wm_edit_drops(m):
    w = families.wm(m)
    for kind in ("insert", "delete", "substitute", "rotate"):
        rep = experiments.sensitivity(w, kind, "sre", backend="ukkonen")
        assert rep.base == 6 * m - 4
        assert -rep.min_additive >= 2 * m - 6


def test_backends_agree():
    w = txt("abaababaabaab")
    for measure in experiments.MEASURES:
        a = experiments.sensitivity(w, "insert", measure, backend="oracle")
        b = experiments.sensitivity(w, "insert", measure, backend="ukkonen")
        assert a.rows == b.rows


def test_sampled_mode_reproducible():
    w = families.wm(3)
    a = experiments.sensitivity(w, "insert", "sre", "sampled", 25, 11)
    b = experiments.sensitivity(w, "insert", "sre", "sampled", 25, 11)
    assert a == b and a.rows == b.rows and a.tsv() == b.tsv()
    assert a.explored == 25 and a.mode == "sampled(25,11)"
    with pytest.raises(ValueError):
        experiments.sensitivity(w, "insert", "sre", "sampled", 25)


def test_ratio_undefined_for_zero_base():
    rep = experiments.sensitivity(txt("aaa"), "append", "sre")
    assert rep.base == 0 and rep.max_ratio is None
    assert rep.summary()["max_ratio"] == "undef"


def test_report_tsv():
    rep = experiments.sensitivity(txt("ab"), "delete", "chi")
    assert rep.tsv().splitlines() == ["operation\tposition\tsymbol\tvalue\tdiff",
                                      "delete\t1\t\t2\t-1", "delete\t2\t\t2\t-1"]


def test_reversal_ratios():
    rows = experiments.reversal_ratio_sweep([families.reversal_family(2), txt("aba"), txt("aaa")])
    assert [r.ratio for r in rows] == [pytest.approx(8 / 7), 1, None]
    assert str(rows[0].ratio) == "8/7"
    assert all(r.within_bounds for r in rows)


@settings(max_examples=150, deadline=None)
@given(st.integers(1, 4).flatmap(lambda s: st.lists(st.integers(1, s), max_size=30)))
def test_append_prepend_bounds(symbols):
    w = from_tokens(symbols)
    for kind in ("append", "prepend"):
        rep = experiments.sensitivity(w, kind, "sre")
        assert 0 <= rep.min_additive and rep.max_additive <= 2
    assert experiments.reversal_ratio_sweep([w])[0].within_bounds
