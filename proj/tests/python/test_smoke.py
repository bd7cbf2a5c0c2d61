import os
import subprocess

import pytest

import ocgame


def test_schedule_values():
    assert ocgame.Q(2, 1, 3, 1, 4) == 42
    assert ocgame.floor_g(3, 1) == 1
    assert ocgame.horizon(10**6) == 585786
    assert ocgame.g(3, 1.0) == pytest.approx(1.1583123951777)
    assert 1 / float(ocgame.C(10**6)) >= 0.7845
    rows = ocgame.schedule_rows(3)
    assert [r["s"] for r in rows] == [1, 1]


def test_greedy():
    assert ocgame.greedy_schedule(100)["terminal_s"] == 30


def test_domain_errors():
    with pytest.raises(ValueError):
        ocgame.schedule_rows(2)
    with pytest.raises(ValueError):
        ocgame.play_game(10, 5, omaker="nobody")


def test_play_and_verify():
    b = ocgame.required_bias(20)
    rec = ocgame.play_game(20, b, "random", "paper", verify=True, seed=4)
    assert rec["winner"] == "obreaker"
    assert all(r.get("safe", True) for r in rec["rounds"])
    ok, reason = ocgame.verify_record(rec)
    assert ok, reason
    rec["winner"] = "omaker"
    assert not ocgame.verify_record(rec)[0]


def test_minimax():
    assert ocgame.solve_game(4, 1) == "omaker"
    assert ocgame.solve_game(4, 2) == "obreaker"


@pytest.mark.skipif("OCG_CLI" not in os.environ, reason="CLI path not given")
def test_cli_constants():
    out = subprocess.run([os.environ["OCG_CLI"], "constants", "-B", "3"], capture_output=True, text=True, check=True)
    assert out.stdout.splitlines()[1].startswith("3,1.15831239518,2,1,1,")
