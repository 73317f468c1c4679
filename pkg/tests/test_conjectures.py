import json

from tatami.polylab.conjectures import (
    CONJECTURE_IDS,
    check_conjectures,
    check_pcon_a,
    check_pcon_bc,
    check_pcon_e,
    check_pcon_f,
    check_vhcon_a,
    check_vhcon_b,
)


def test_vhcon_a_n10_prefix():
    report = check_vhcon_a(20)
    assert report.status == "holds"
    assert report.witnesses["max_k_matching"][10] >= 8


def test_vhcon_b():
    report = check_vhcon_b(30)
    assert report.status == "holds"
    assert all(report.witnesses["max_k_matching"][n] >= n - 4 for n in range(4, 31))


def test_pcon_a_literal_reading_fails_at_6():
    report = check_pcon_a(40)
    assert report.status == "fails-at(6)"
    assert "i=1" in report.detail
    assert report.witnesses["strict_j_reading_holds"] is True
    assert {"n": 6, "k": 2, "i_max": 2, "j_max_holding": 3} in report.witnesses["windows"]


def test_pcon_bc_small():
    odd, even = check_pcon_bc(13)
    assert odd.status == even.status == "holds"
    alphas = odd.witnesses["alpha"]
    assert list(alphas) == [3, 5, 7, 9, 11, 13]
    assert alphas[3] == -0.5
    assert all(alphas[n] > alphas[n + 2] for n in range(3, 13, 2))


def test_pcon_e_up_to_28():
    report = check_pcon_e(28)
    assert report.status == "holds"
    assert report.witnesses["values"][-1] == 10400600
    assert report.witnesses["published_list_matches"] is True


def test_pcon_f_20_to_40():
    report = check_pcon_f(40)
    assert report.status == "holds"
    assert report.witnesses["abs_sums"][:6] == [1, 3, 4, 10, 10, 22]


def test_report_json():
    reports = check_conjectures(12)
    assert [r.conjecture for r in reports] == list(CONJECTURE_IDS)
    text = json.dumps([r.to_json() for r in reports])
    decoded = json.loads(text)
    assert decoded[5]["witnesses"]["values"][0] == "1"
    assert decoded[2]["status"] == "fails-at(6)"


def test_failures_are_reported_not_raised(monkeypatch):
    from tatami.polylab import conjectures

    monkeypatch.setattr(conjectures, "P_AT_MINUS_ONE", (1, -1, 3))
    report = conjectures.check_pcon_e(10)
    assert not report.holds
    assert report.failed_at == 4
