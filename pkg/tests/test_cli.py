import csv
import json
from pathlib import Path

import pytest

from lrl_tagger import fixtures
from lrl_tagger.cli import main
from lrl_tagger.config import load_run_config
from lrl_tagger.corpus import parse_two_column, read_corpus, serialize_two_column, tag_distribution, write_corpus
from lrl_tagger.errors import ConfigError

CONFIGS = Path(__file__).resolve().parents[1] / "configs"


@pytest.fixture(autouse=True)
def _home(tmp_path, monkeypatch):
    monkeypatch.setenv("LRL_TAGGER_HOME", str(tmp_path / "home"))


def _write_config(tmp_path, corpus, **overrides):
    data_path = tmp_path / "train.tsv"
    data_path.write_text(serialize_two_column(corpus), encoding="utf-8")
    cfg = {
        "language": "demo",
        "train_path": "train.tsv",
        "format": "two_column",
        "split": {"fraction": 0.8, "seed": 1},
        "backend": {"backend_id": "baseline"},
        "output_dir": "runs",
    }
    cfg.update(overrides)
    path = tmp_path / "run.json"
    path.write_text(json.dumps(cfg))
    return path


def test_convert_parallel(tmp_path, capsys):
    src = tmp_path / "p.txt"
    src.write_text("woh gaya\tPRP VM\nek ghar\tQC NN\n", encoding="utf-8")
    out = tmp_path / "out.tsv"
    assert main(["convert", "--in", str(src), "--format", "parallel", "--out", str(out)]) == 0
    assert capsys.readouterr().out.strip() == "sentences=2 tokens=4"
    assert out.read_text() == "woh\tPRP\ngaya\tVM\n\nek\tQC\nghar\tNN\n"


def test_convert_mismatch_names_row(tmp_path, capsys):
    src = tmp_path / "p.txt"
    src.write_text("woh gaya\tPRP VM\nek ghar\tQC\n", encoding="utf-8")
    assert main(["convert", "--in", str(src), "--format", "parallel", "--out", str(tmp_path / "o")]) == 2
    assert "line 2" in capsys.readouterr().err


def test_convert_idempotent_on_two_column(tmp_path):
    src = tmp_path / "a.tsv"
    src.write_text("a\tX\nb\tY\n\n\n\nc\tX", encoding="utf-8")
    once, twice = tmp_path / "once.tsv", tmp_path / "twice.tsv"
    assert main(["convert", "--in", str(src), "--format", "two_column", "--out", str(once)]) == 0
    assert main(["convert", "--in", str(once), "--format", "two_column", "--out", str(twice)]) == 0
    assert once.read_bytes() == twice.read_bytes()
    assert parse_two_column(src.read_text()) == parse_two_column(once.read_text())


def test_stats_flags_top_two_share(tmp_path, capsys):
    path = tmp_path / "c.tsv"
    write_corpus(fixtures.bangla_like(), path)
    csv_path = tmp_path / "d.csv"
    plot_path = tmp_path / "d.png"
    assert main(["stats", "--in", str(path), "--csv", str(csv_path), "--plot", str(plot_path)]) == 0
    out = capsys.readouterr().out
    dist = tag_distribution(read_corpus(path))
    assert (dist.top_share(2) > 0.5) == ("top-2 share > 0.5" in out)
    rows = list(csv.DictReader(csv_path.open()))
    assert {r["tag"]: int(r["count"]) for r in rows} == dist.counts
    assert [r["fraction"] for r in rows] == [f"{f:.6f}" for _, _, f in dist.ranked()]
    assert plot_path.read_bytes().startswith(b"\x89PNG")


def test_stats_empty_file(tmp_path):
    path = tmp_path / "empty.tsv"
    path.write_text("")
    assert main(["stats", "--in", str(path)]) == 2


def test_train_writes_loadable_bundle(tmp_path, capsys):
    cfg = _write_config(tmp_path, fixtures.bangla_like(60))
    assert main(["train", "--config", str(cfg)]) == 0
    out = capsys.readouterr().out
    bundle = tmp_path / "runs" / "demo" / "bundle"
    assert f"bundle={bundle}" in out
    assert main(["predict", "--bundle", str(bundle), "--text", "কখগ"]) == 0


def test_train_missing_train_path(tmp_path):
    cfg = _write_config(tmp_path, fixtures.bangla_like(20), train_path="nope.tsv")
    assert main(["train", "--config", str(cfg)]) == 2
    cfg.write_text(json.dumps({"language": "x"}))
    assert main(["train", "--config", str(cfg)]) == 2


def test_train_deterministic_state(tmp_path):
    cfg = _write_config(tmp_path, fixtures.hindi_like(60))
    assert main(["train", "--config", str(cfg), "--output-dir", str(tmp_path / "a")]) == 0
    assert main(["train", "--config", str(cfg), "--output-dir", str(tmp_path / "b")]) == 0
    state = Path("demo", "bundle", "backend", "baseline_state.json")
    assert (tmp_path / "a" / state).read_bytes() == (tmp_path / "b" / state).read_bytes()
    assert (tmp_path / "a" / "demo" / "test.tsv").read_bytes() == (tmp_path / "b" / "demo" / "test.tsv").read_bytes()


def test_train_with_eval_path(tmp_path):
    corpus = fixtures.bangla_like(30)
    (tmp_path / "held.tsv").write_text(serialize_two_column(corpus), encoding="utf-8")
    cfg = _write_config(tmp_path, corpus, eval_path="held.tsv", split=None)
    assert main(["train", "--config", str(cfg)]) == 0
    assert (tmp_path / "runs" / "demo" / "test.tsv").read_text() == serialize_two_column(corpus)


def test_train_transformer_without_runtime_exits_3(tmp_path, no_transformer_runtime):
    cfg = _write_config(
        tmp_path, fixtures.bangla_like(20), backend={"backend_id": "transformer", "model_name": "x/y"}
    )
    assert main(["train", "--config", str(cfg)]) == 3


def test_eval_self_is_perfect(tmp_path, capsys):
    corpus = fixtures.bangla_like(60)
    cfg = _write_config(tmp_path, corpus)
    main(["train", "--config", str(cfg)])
    bundle = tmp_path / "runs" / "demo" / "bundle"
    out_dir = tmp_path / "eval"
    capsys.readouterr()
    assert main(["eval", "--bundle", str(bundle), "--in", str(tmp_path / "train.tsv"), "--out", str(out_dir)]) == 0
    out = capsys.readouterr().out
    assert "Token-level accuracy: 1.0000" in out
    assert (out_dir / "confusion.png").exists()
    report_rows = list(csv.reader((out_dir / "report.csv").open()))
    assert len(report_rows) - 1 == len(corpus.tagset) + 3
    conf = list(csv.reader((out_dir / "confusion.csv").open()))
    assert conf[0][1:] == list(corpus.tagset)


def test_bundle_resolved_from_home(tmp_path, monkeypatch):
    cfg = _write_config(tmp_path, fixtures.bangla_like(30))
    data = json.loads(cfg.read_text())
    del data["output_dir"]
    cfg.write_text(json.dumps(data))
    assert main(["train", "--config", str(cfg)]) == 0
    assert (tmp_path / "home" / "demo" / "bundle" / "manifest.json").exists()
    monkeypatch.chdir(tmp_path)
    assert main(["predict", "--bundle", "demo/bundle", "--text", "a b"]) == 0


def test_predict_outputs(tmp_path, capsys):
    corpus = fixtures.bangla_like(40)
    cfg = _write_config(tmp_path, corpus)
    main(["train", "--config", str(cfg)])
    bundle = str(tmp_path / "runs" / "demo" / "bundle")
    capsys.readouterr()

    assert main(["predict", "--bundle", bundle, "--text", "zzq qqz   never-seen"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert [l.split("\t")[0] for l in lines] == ["zzq", "qqz", "never-seen"]
    assert all(l.split("\t")[1] in corpus.tagset for l in lines)

    text_file = tmp_path / "in.txt"
    text_file.write_text("\n".join(" ".join(s.words) for s in corpus.sentences[:3]) + "\n")
    assert main(["predict", "--bundle", bundle, "--in", str(text_file)]) == 0
    predicted = parse_two_column(capsys.readouterr().out)
    assert predicted.sentences == corpus.sentences[:3]


def test_usage_error_exit_code():
    assert main(["train"]) == 2
    assert main(["frobnicate"]) == 2


def test_shipped_configs_differ_in_three_keys():
    def flatten(d, prefix=""):
        out = {}
        for k, v in d.items():
            if isinstance(v, dict):
                out.update(flatten(v, f"{prefix}{k}."))
            else:
                out[f"{prefix}{k}"] = v
        return out

    bangla = flatten(json.loads((CONFIGS / "bangla.json").read_text()))
    hindi = flatten(json.loads((CONFIGS / "hindi.json").read_text()))
    assert set(bangla) == set(hindi)
    changed = {k for k in bangla if bangla[k] != hindi[k]}
    assert changed == {"language", "train_path", "backend.model_name"}


def test_shipped_fixture_files_are_reproducible(tmp_path):
    for path in fixtures.write_shipped_fixtures(tmp_path):
        assert path.read_bytes() == (CONFIGS / "data" / path.name).read_bytes()


def test_config_rules(tmp_path):
    base = {"language": "x", "train_path": "t.tsv"}
    path = tmp_path / "c.json"
    path.write_text(json.dumps({**base, "eval_path": "e.tsv", "split": {"fraction": 0.8, "seed": 0}}))
    with pytest.raises(ConfigError):
        load_run_config(path)
    path.write_text(json.dumps({**base, "mystery": 1}))
    with pytest.raises(ConfigError):
        load_run_config(path)
    path.write_text(json.dumps(base))
    cfg = load_run_config(path)
    assert cfg.train_path == (tmp_path / "t.tsv").resolve()
    assert cfg.split is not None and cfg.eval_path is None
    assert cfg.run_dir == tmp_path / "home" / "x"
