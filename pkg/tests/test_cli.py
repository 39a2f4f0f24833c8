import pytest

from src.cli import main
from tests.conftest import DATA

EXAMPLE1 = str(DATA / "example1.elect")


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_solve_example1(capsys):
    code, out, _ = run(capsys, "solve", "--rule", "borda", "--despised", "d", "--budget", "2", "--election", EXAMPLE1)
    assert code == 0
    assert out == "result=YES cost=2 shifts=0,0,0,2\n"


def test_solve_example1_budget_one(capsys):
    code, out, _ = run(capsys, "solve", "--rule", "borda", "--despised", "d", "--budget", "1", "--election", EXAMPLE1)
    assert code == 1
    assert out == "result=NO\n"


def test_explicit_unit_prices_change_nothing(capsys):
    code, out, _ = run(
        capsys, "solve", "--rule", "borda", "--despised", "d", "--budget", "2",
        "--election", EXAMPLE1, "--prices", str(DATA / "example1.prices"),
    )
    assert code == 0
    assert out == "result=YES cost=2 shifts=0,0,0,2\n"


def test_margin(capsys):
    assert run(capsys, "margin", "--rule", "borda", "--despised", "d", "--election", EXAMPLE1)[:2] == (0, "2\n")
    code, out, _ = run(capsys, "margin", "--rule", "plurality", "--despised", "a", "--election", EXAMPLE1)
    assert (code, out) == (0, "0\n")


def test_margin_infinite(capsys, tmp_path):
    prices = tmp_path / "p.prices"
    prices.write_text("aon inf\n" * 4)
    code, out, _ = run(capsys, "margin", "--rule", "copeland", "--despised", "d", "--election", EXAMPLE1, "--prices", str(prices))
    assert (code, out) == (0, "INF\n")


def test_verify(capsys):
    args = ["verify", "--rule", "borda", "--despised", "d", "--budget", "2", "--election", EXAMPLE1]
    assert run(capsys, *args, "--shifts", "0,0,0,2")[:2] == (0, "VALID\n")
    assert run(capsys, *args, "--shifts", "0,0,0,1")[:2] == (1, "INVALID\n")


def test_oracle(capsys):
    code, out, _ = run(
        capsys, "oracle", "--rule", "borda", "--despised", "d", "--budget", "2", "--election", EXAMPLE1, "--node-cap", "1000"
    )
    assert (code, out) == (0, "result=YES cost=2 shifts=0,0,0,2\n")
    code, _, err = run(
        capsys, "oracle", "--rule", "borda", "--despised", "d", "--budget", "2", "--election", EXAMPLE1, "--node-cap", "2"
    )
    assert code == 3
    assert "node cap" in err


def test_scores(capsys):
    code, out, _ = run(capsys, "scores", "--rule", "borda", "--election", EXAMPLE1)
    assert code == 0
    lines = out.splitlines()
    assert lines[0].split() == ["candidate", "score", "rank", "winner"]
    assert lines[1].split() == ["d", "9", "1", "True"]
    code, out, _ = run(capsys, "scores", "--rule", "bucklin", "--election", EXAMPLE1, "--despised", "d", "--budget", "2")
    assert "Winning round: 1" in out
    assert "Budget: 2" in out


@pytest.mark.parametrize(
    "argv",
    [
        ["solve", "--rule", "borda", "--despised", "z", "--election", EXAMPLE1],
        ["solve", "--rule", "borda", "--despised", "d", "--election", "missing.elect"],
        ["solve", "--rule", "k-approval", "--despised", "d", "--election", EXAMPLE1],
        ["solve", "--rule", "scoring", "--vector", "1,0", "--despised", "d", "--election", EXAMPLE1],
        ["solve", "--rule", "copeland", "--alpha", "2", "--despised", "d", "--election", EXAMPLE1],
        ["verify", "--rule", "borda", "--despised", "d", "--election", EXAMPLE1, "--shifts", "0,1"],
        ["gen", "partition", "--seq", "1,2"],
    ],
)
def test_input_errors_exit_with_two(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2
    assert out == ""
    assert err.startswith("error:")


def test_unknown_rule_is_an_argument_error():
    with pytest.raises(SystemExit) as info:
        main(["solve", "--rule", "plurality-runoff", "--despised", "d", "--election", EXAMPLE1])
    assert info.value.code == 2


def test_gen_partition_then_solve(capsys, tmp_path):
    code, out, _ = run(capsys, "gen", "partition", "--seq", "5,4,2,2,1", "--out", str(tmp_path))
    assert code == 0
    assert (tmp_path / "partition.elect").exists() and (tmp_path / "partition.prices").exists()
    args = out.split()
    assert args[:2] == ["--rule", "scoring"]
    assert "--budget" in args and args[args.index("--budget") + 1] == "7"
    code, out, _ = run(capsys, "solve", *args)
    assert code == 0
    assert out.startswith("result=YES cost=7 ")


def test_gen_random_is_reproducible(capsys, tmp_path):
    argv = ["gen", "random", "--m", "4", "--n", "5", "--seed", "3", "--price-model", "list:3", "--out", str(tmp_path)]
    run(capsys, *argv, "--name", "one")
    run(capsys, *argv, "--name", "two")
    assert (tmp_path / "one.elect").read_text() == (tmp_path / "two.elect").read_text()
    assert (tmp_path / "one.prices").read_text() == (tmp_path / "two.prices").read_text()


def test_gen_mcis_writes_a_graph(capsys, tmp_path):
    code, out, _ = run(
        capsys, "gen", "mcis", "--graph", str(DATA / "two_colors.graph"), "--out", str(tmp_path), "--name", "g"
    )
    assert code == 0
    assert (tmp_path / "g.graph").read_text() == (DATA / "two_colors.graph").read_text().split("\n", 1)[1]
    assert out.startswith("--rule copeland --alpha 1/2 --despised d --budget ")


def test_gen_clique_from_a_file(capsys, tmp_path):
    code, out, _ = run(capsys, "gen", "clique", "--graph", str(DATA / "triangle.graph"), "--k", "3", "--out", str(tmp_path))
    assert code == 0
    assert " --budget 9 " in out
    args = out.split()
    code, out, _ = run(capsys, "verify", *args, "--shifts", ",".join(["3", "0", "3", "0", "3", "0"] + ["0"] * 59))
    assert (code, out) == (0, "VALID\n")


def test_output_is_deterministic(capsys):
    argv = ["solve", "--rule", "maximin", "--despised", "d", "--election", EXAMPLE1]
    first = run(capsys, *argv)
    second = run(capsys, "--jobs", "2", *argv)
    assert first[:2] == second[:2]
