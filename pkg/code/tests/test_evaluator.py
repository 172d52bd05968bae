import pytest

from evaluator import failed, missing_kinds, print_statistics, run_instance, targeted
from strongcolor.config import Settings
from strongcolor.generator import named_instance
from strongcolor.planar_multigraph import embed_edge_list


def test_run_instance():
    outcome = run_instance("k4", named_instance("k4"), Settings(base_case=0))
    assert outcome["error"] is None
    assert outcome["palette"] == 6
    assert outcome["violations"] == 0
    assert outcome["audited"]
    assert outcome["kinds"] == {"Triangle": 1}
    # a lone instance leaves most kinds unexercised
    assert failed([outcome])
    assert "Triangle" not in missing_kinds([outcome])


def test_bridged_graphs_are_colored_but_not_audited():
    outcome = run_instance("path", embed_edge_list(3, [(0, 1), (1, 2)]), Settings())
    assert outcome["error"] is None
    assert not outcome["audited"]


def test_statistics_table(capsys):
    outcomes = [run_instance(name, named_instance(name), Settings(base_case=0)) for name in ("prism", "c7")]
    print_statistics(outcomes)
    out = capsys.readouterr().out
    assert out.startswith("instances")
    assert "max palette" in out
    assert "ExtensionImpossible" in out


def test_targeted_instances_reduce_fully():
    instances = targeted(Settings())
    assert all(settings.base_case == 0 for _, _, settings in instances)
    assert all(name.startswith("targeted-") for name, _, _ in instances)


def test_targeted_instances_exercise_every_deleting_kind():
    outcomes = [run_instance(name, g, settings) for name, g, settings in targeted(Settings())]
    assert missing_kinds(outcomes) == []
    assert not failed(outcomes)
