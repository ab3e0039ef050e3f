"""Acceptance gate: every headline claim, checked exhaustively at the
agreed bounds, with one [PASS]/[FAIL] line printed per criterion.

The lines are written to the real terminal (capture temporarily disabled)
so they are visible in any pytest run; ``pytest tests/test_acceptance.py``
executes the gate alone.
"""

import dataclasses
import json
import random
import subprocess
import sys
import time
from contextlib import contextmanager

import pytest

from impartial import closed_forms as cf
from impartial import engine
from impartial import rulesets as rs
from impartial import verification as vf


@pytest.fixture
def criterion(capfd):
    @contextmanager
    def _criterion(n: int, desc: str):
        t0 = time.perf_counter()
        try:
            yield
        except BaseException:
            with capfd.disabled():
                print(f"\n[FAIL] criterion {n}: {desc}", flush=True)
            raise
        dt = time.perf_counter() - t0
        with capfd.disabled():
            print(f"\n[PASS] criterion {n}: {desc} ({dt:.2f}s)", flush=True)

    return _criterion


def _triangle(bound):
    return (bound + 1) * (bound + 2) // 2


def test_criterion_1_delete_nim_closed_form(criterion):
    with criterion(1, "delete-nim engine == formula for 0 <= y <= x <= 4096"):
        rep = vf.verify_delete_nim_formula(4096)
        assert rep.mismatches == []
        assert rep.positions_checked == _triangle(4096)
        assert rep.elapsed < 30.0


def test_criterion_2_vdn_closed_form(criterion):
    with criterion(2, "vdn engine == formula for 1 <= y <= x <= 256"):
        rep = vf.verify_vdn_formula(256)
        assert rep.mismatches == []
        assert rep.positions_checked == 256 * 257 // 2
        assert rep.elapsed < 5.0


def test_criterion_3_isomorphism(criterion):
    with criterion(3, "option-set and Grundy commutation for 1 <= y <= x <= 64"):
        rep = vf.verify_isomorphism(64)
        assert rep.mismatches == []
        assert rep.positions_checked == 64 * 65 // 2
        assert rep.elapsed < 5.0


def test_criterion_4_bouton(criterion):
    with criterion(4, "nim classification == (nim-sum == 0), <= 3 heaps of <= 16"):
        rep = vf.verify_bouton(3, 16)
        assert rep.mismatches == []
        assert rep.elapsed < 10.0


def test_criterion_5_sum_theorem(criterion):
    with criterion(5, "grundy(g + h) == grundy(g) XOR grundy(h), coordinates <= 12"):
        rep = vf.verify_sum_theorem(12)
        assert rep.mismatches == []
        assert rep.positions_checked == _triangle(12) ** 2
        assert rep.elapsed < 10.0


def test_criterion_6_proof_steps(criterion):
    with criterion(6, "no option reaches h; constructed options reach each h' < h, <= 128"):
        rep = vf.verify_proof_steps(128)
        assert rep.mismatches == []
        assert rep.positions_checked == _triangle(128)


def test_criterion_7_worked_examples(criterion):
    with criterion(7, "worked examples: nim-sums 0 and 7, ORs 7 and 13"):
        assert cf.nim_sum([2, 5, 7]) == 0
        assert cf.nim_sum([4, 5, 6]) == 7
        assert cf.bit_or(3, 5) == 7
        assert cf.bit_or(9, 12) == 13


def _engine_wins_everywhere(bound: int) -> bool:
    """Engine moves first from each N-position; opponent tries every reply."""
    grid = engine.grundy_grid(rs.DELETE_NIM, bound)
    value_fn = lambda q: int(grid[q[0], q[1]])
    positions = sorted(
        ((x, y) for x in range(bound + 1) for y in range(x + 1)),
        key=lambda p: (p[0] + p[1], p),
    )
    win_after_engine_move = {}  # P-position with opponent to move
    engine_wins = {}  # N-position with engine to move
    for p in positions:
        opts = rs.delete_nim_options(p)
        if value_fn(p) == 0:
            win_after_engine_move[p] = all(engine_wins[r] for r in opts)
        else:
            m = engine.best_move(p, rs.DELETE_NIM, value_fn=value_fn)
            engine_wins[p] = m is not None and win_after_engine_move[m]
    return all(engine_wins.values())


def test_criterion_8_optimal_play(criterion):
    with criterion(8, "engine wins every N-position <= 64; order-independent <= 32"):
        assert _engine_wins_everywhere(64)

        baseline = engine.grundy_grid(rs.DELETE_NIM, 32)
        for seed in (101, 202, 303):
            rng = random.Random(seed)

            def shuffled(p, _rng=rng):
                opts = sorted(rs.delete_nim_options(p))
                _rng.shuffle(opts)
                return opts

            variant = dataclasses.replace(
                rs.DELETE_NIM, name=f"delete-nim/seed{seed}", options=shuffled
            )
            memo = {}
            for x in range(33):
                for y in range(x + 1):
                    assert engine.grundy((x, y), variant, memo) == baseline[x, y]


def _run(*args, stdin=""):
    return subprocess.run(
        [sys.executable, "-m", "impartial", *args],
        input=stdin,
        capture_output=True,
        text=True,
        timeout=120,
    )


def test_criterion_9_cli_contract(criterion):
    with criterion(9, "CLI exit codes and byte-identical deterministic output"):
        r = _run("grundy", "--game", "delete-nim", "--position", "3,2")
        assert (r.returncode, r.stdout) == (0, "closed-form: 2\nengine: 2\noutcome: N\n")

        assert _run("grundy", "--game", "vdn", "--position", "0,3").returncode == 2

        r = _run("table", "--game", "delete-nim", "--bound", "1", "--format", "csv")
        assert r.stdout == "x,y,grundy\n0,0,0\n0,1,1\n1,0,1\n1,1,1\n"

        r = _run("best-move", "--game", "delete-nim", "--position", "3,2")
        assert (r.returncode, r.stdout) == (0, "2,0\n")

        r = _run("verify", "--check", "iso", "--bound", "32", "--format", "json")
        assert r.returncode == 0
        assert all(rec["passed"] for rec in json.loads(r.stdout))

        assert _run("verify", "--check", "delete-nim", "--budget", "50").returncode == 4
        assert _run("play", "--game", "delete-nim", "--position", "4,4").returncode == 130
        assert _run("frobnicate").returncode == 2

        first = _run("table", "--game", "vdn", "--bound", "20", "--format", "json")
        second = _run("table", "--game", "vdn", "--bound", "20", "--format", "json")
        assert first.stdout == second.stdout and first.returncode == second.returncode == 0
