from __future__ import annotations

from storewb import fixtures


def test_committed_command_script_matches_generator():
    committed = fixtures.erp_commands_path().read_text(encoding="utf-8").splitlines()
    assert committed == fixtures.erp_command_lines()


def test_script_brackets_whole_workflow():
    lines = fixtures.erp_command_lines()
    assert lines[0].startswith("store init")
    assert "store doc srs" in lines[-2]
    assert lines[-1] == "store step complete 10"


def test_dread_vectors_reproduce_recorded_averages():
    expected = dict(fixtures.EXPECTED_RANKING)
    for tid, vector in fixtures.DREAD_VECTORS.items():
        assert 2 * sum(vector) == expected[tid], tid
        assert all(0 <= c <= 10 for c in vector)


def test_fixture_table_sizes():
    assert len(fixtures.GOALS) == 7
    assert len(fixtures.STAKEHOLDERS) == 11
    assert len(fixtures.ASSETS) == 17
    assert len(fixtures.ATTACK_POINTS) == 32
    assert len(fixtures.THREATS) == 12
    assert len(fixtures.EXPECTED_REQUIREMENTS) == 12
