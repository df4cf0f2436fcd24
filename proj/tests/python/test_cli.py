import json
import os

import jsonschema


def test_decompose_text_and_json(cli, schema):
    text = cli("decompose", "--method", "vcis", "--perm", "5 3 4 6 1 2 7").stdout
    assert "segments: 5 6 7 / 3 4 / 1 2" in text
    doc = json.loads(cli("--json", "decompose", "--method", "vcis", "--perm", "5 3 4 6 1 2 7").stdout)
    jsonschema.validate(doc, schema("decomposition"))
    assert doc["segments"] == [[5, 6, 7], [3, 4], [1, 2]]
    assert doc["distribution"] == [3, 2, 2]


def test_count(cli, schema):
    assert cli("count", "--formula", "catalan", "--n", "4").stdout.strip() == "14"
    doc = json.loads(cli("--json", "count", "--formula", "start-end-descents",
                         "--n", "3", "--i", "2", "--j", "3", "--k", "2").stdout)
    jsonschema.validate(doc, schema("count"))
    assert doc["value"] == "1"
    doc = json.loads(cli("--json", "count", "--formula", "series-identity",
                         "--p", "5", "--q", "2", "--l", "3").stdout)
    jsonschema.validate(doc, schema("count"))
    assert doc["equal"] is True


def test_count_usage_errors(cli, schema):
    proc = cli("count", "--formula", "catalan", expect=2)
    jsonschema.validate(json.loads(proc.stderr), schema("error"))
    cli("count", "--formula", "catalan", "--n", "3", "--k", "1", expect=2)
    cli("count", "--formula", "nope", "--n", "3", expect=2)


def test_map_round_trips_are_byte_exact(cli, schema):
    for forward, backward, value in [("jr", "jr-inv", "3 1 2"), ("phi", "phi-inv", "2 1 3"),
                                     ("jr-inv", "jr", "(()())()"), ("mirror", "mirror", "(())()")]:
        once = cli("map", "--bijection", forward, "--in", value).stdout.strip()
        twice = cli("map", "--bijection", backward, "--in", once).stdout.strip()
        assert twice == value
    doc = json.loads(cli("--json", "map", "--bijection", "phi", "--in", "2 1 3").stdout)
    jsonschema.validate(doc, schema("map"))
    assert doc["output"] == "(())()"


def test_alternating_round_trip_through_files(cli, schema, tmp_path):
    tree = {"label": 2, "parity": "E", "starred": False, "children": [
        {"label": 1, "parity": "O", "starred": False, "children": [
            {"label": 1, "parity": "E", "starred": False, "children": []}]},
        {"label": 2, "parity": "O", "starred": False, "children": []}]}
    source = tmp_path / "tree.json"
    source.write_text(json.dumps(tree))
    forest = cli("map", "--bijection", "alt-to-forest", "--in", str(source)).stdout
    jsonschema.validate(json.loads(forest), schema("alternating"))
    (tmp_path / "forest.json").write_text(forest)
    back = cli("map", "--bijection", "forest-to-alt", "--in", str(tmp_path / "forest.json")).stdout
    assert json.loads(back) == tree
    (tmp_path / "back.json").write_text(back)
    forest_again = cli("map", "--bijection", "alt-to-forest", "--in", str(tmp_path / "back.json")).stdout
    assert forest_again == forest


def test_stats(cli, schema):
    doc = json.loads(cli("--json", "stats", "--tree", "(())()", "--what", "all").stdout)
    jsonschema.validate(doc, schema("stats"))
    assert doc["heights"] == [0, 1, 1, 2]
    assert doc["left_paths"] == [2, 1]
    only = json.loads(cli("--json", "stats", "--tree", "()()()", "--what", "rsw").stdout)
    assert only["rsw_all"] == [0, 1, 2, 3]
    assert "heights" not in only
    proc = cli("stats", "--tree", "(()", expect=2)
    err = json.loads(proc.stderr)
    jsonschema.validate(err, schema("error"))
    assert err["error"]["offset"] == 3


def test_enumerate(cli, schema):
    assert cli("enumerate", "--what", "avoiders", "--n", "3").stdout.split("\n")[:5] == [
        "1 2 3", "2 1 3", "2 3 1", "3 1 2", "3 2 1"]
    doc = json.loads(cli("--json", "enumerate", "--what", "trees", "--n", "3", "--filter", "leaves=2").stdout)
    jsonschema.validate(doc, schema("enumerate"))
    assert doc["count"] == 3
    assert cli("enumerate", "--what", "avoiders", "--n", "7", "--filter", "ird-dist=3,3,1",
               "--count").stdout.strip().isdigit()
    cli("enumerate", "--what", "trees", "--n", "3", "--filter", "bogus=1", expect=2)


def test_resource_limits(cli, schema):
    proc = cli("enumerate", "--what", "trees", "--n", "15", "--count", expect=3)
    jsonschema.validate(json.loads(proc.stderr), schema("error"))
    env = dict(os.environ, AVOID132_MAX_N="5")
    cli("enumerate", "--what", "trees", "--n", "6", "--count", env=env, expect=3)
    cli("verify", "--claim", "formulas", "--max-n", "10", expect=3)


def test_verify_reports(cli, schema):
    proc = cli("verify", "--claim", "thm4.1", "--max-n", "7")
    doc = json.loads(proc.stdout)
    jsonschema.validate(doc, schema("report"))
    assert doc["status"] == "pass"
    sharded = cli("verify", "--claim", "thm4.1", "--max-n", "7", "--shards", "3").stdout
    assert sharded == proc.stdout


def test_unknown_flags_are_rejected(cli):
    cli("decompose", "--method", "ird", "--perm", "1 2", "--bogus", expect=2)
    cli(expect=2)
