import io
import os
import subprocess
import sys

import pytest

from nhtkit.catalog import CATALOG_ENV
from nhtkit.cli import main


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


KEY7 = ("--n", "10", "--mod", "7", "--coeffs", "2,1,2,5,3")
KEY29 = ("--n", "12", "--mod", "29", "--coeffs", "14,18,28,27,7,23")


def test_check():
    assert run("check", *KEY7) == (0, "PASS diag-1=0 lag1=0 lag2=0\n")
    code, text = run("check", *KEY29)
    assert code == 1 and text.startswith("FAIL") and "lag1=9" in text
    assert run("check", "--n", "10", "--mod", "7", "--coeffs", "1,0,0,0,0")[0] == 0


@pytest.mark.parametrize("argv", [
    ("check", "--n", "10", "--mod", "7", "--coeffs", "2,1,2,5"),
    ("check", "--n", "10", "--mod", "7", "--coeffs", "2,1,2,5,7"),
    ("check", "--n", "9", "--mod", "7", "--coeffs", "2,1,2,5"),
    ("check", "--n", "10", "--mod", "1", "--coeffs", "0,0,0,0,0"),
])
def test_check_usage_errors(argv, capsys):
    assert run(*argv)[0] == 2
    assert "error" in capsys.readouterr().err


def test_parse_errors_exit_2():
    with pytest.raises(SystemExit) as info:
        run("check", "--n", "10")
    assert info.value.code == 2
    with pytest.raises(SystemExit) as info:
        run("check", "--n", "10", "--mod", "7", "--coeffs", "a,b")
    assert info.value.code == 2


def test_search_outputs():
    code, text = run("search", "--n", "10", "--mod", "5", "--exhaustive")
    assert code == 0 and "10 5 1 4 2 4 3" in text.splitlines()
    assert len(text.splitlines()) == 50
    code, text = run("search", "--n", "12", "--mod", "11", "--exhaustive")
    assert "12 11 1 1 2 4 8 5" in text.splitlines()
    code, text = run("search", "--n", "10", "--mod", "5", "--exhaustive", "--canonical")
    assert text.splitlines() == ["10 5 0 0 0 0 1", "10 5 1 1 2 3 4", "10 5 1 2 4 1 3"]


def test_search_random_deterministic():
    argv = ("search", "--n", "12", "--mod", "11", "--random", "--budget", "200000", "--seed", "4")
    first = run(*argv)
    assert first[0] == 0 and first[1]
    assert run(*argv) == first


def test_search_append(tmp_path, monkeypatch):
    path = tmp_path / "cat.txt"
    run("search", "--n", "4", "--mod", "3", "--exhaustive", "--append", str(path))
    assert path.read_text() == "4 3 0 1\n4 3 0 2\n4 3 1 0\n4 3 2 0\n"
    env_path = tmp_path / "env.txt"
    monkeypatch.setenv(CATALOG_ENV, str(env_path))
    run("search", "--n", "4", "--mod", "2", "--exhaustive", "--append")
    assert env_path.read_text() == "4 2 0 1\n4 2 1 0\n"


def test_census():
    assert run("census", "--n", "4", "--mod", "2") == (0, "n=4 m=2 total=2 orbits=1\n")
    base = run("census", "--n", "10", "--mod", "7")
    assert base == (0, "n=10 m=7 total=100 orbits=6\n")
    assert run("census", "--n", "10", "--mod", "7", "--workers", "2") == base


def test_census_guard(capsys):
    code, _ = run("census", "--n", "12", "--mod", "67")
    assert code == 1
    assert "--random" in capsys.readouterr().err
    assert run("census", "--n", "10", "--mod", "7", "--cost-guard", "100")[0] == 1


def test_gram(tmp_path):
    code, text = run("gram", *KEY7, "--figure", str(tmp_path / "g.png"))
    assert code == 0 and text.splitlines()[-1] == "identity"
    assert (tmp_path / "g.png").stat().st_size > 0
    code, text = run("gram", *KEY29)
    assert code == 1 and text.splitlines()[0].split()[:5] == ["1", "0", "9", "0", "3"]


def test_transform():
    assert run("transform", *KEY7, "--block", "1,1,0,0,0,0,0,0,1,1") == (0, "5,1,1,0,0,3,3,3,3,5\n")
    assert run("transform", *KEY7, "--inverse", "--block", "6,6,6,6,6,6,6,6,6,6") == (0, "1,1,1,1,1,1,1,1,1,1\n")
    assert run("transform", *KEY29, "--block", "1,1,1,1,1,0,0,0,0,0,0,0")[0] == 1
    assert run("transform", *KEY29, "--unchecked", "--block", "1,1,1,1,1,0,0,0,0,0,0,0") == (
        0, "3,26,8,15,1,28,5,4,26,15,17,2\n")


def test_scramble_round_trip(tmp_path):
    src = tmp_path / "in.bin"
    src.write_bytes(os.urandom(1 << 20))
    box, back = tmp_path / "box.nht", tmp_path / "out.bin"
    assert run("scramble", *KEY7, str(src), str(box))[0] == 0
    assert run("descramble", *KEY7, str(box), str(back))[0] == 0
    assert back.read_bytes() == src.read_bytes()


def test_scramble_empty(tmp_path):
    src = tmp_path / "empty"
    src.write_bytes(b"")
    assert run("scramble", *KEY7, str(src), str(tmp_path / "e.nht"))[0] == 0
    assert run("descramble", *KEY7, str(tmp_path / "e.nht"), str(tmp_path / "e.out"))[0] == 0
    assert (tmp_path / "e.out").read_bytes() == b""


def test_scramble_refuses_invalid_key(tmp_path):
    src = tmp_path / "in.bin"
    src.write_bytes(b"abc")
    assert run("scramble", *KEY29, str(src), str(tmp_path / "x"))[0] == 1
    assert not (tmp_path / "x").exists()


def test_descramble_errors(tmp_path):
    src = tmp_path / "in.bin"
    src.write_bytes(os.urandom(999))
    box = tmp_path / "box"
    run("scramble", *KEY7, str(src), str(box))
    data = box.read_bytes()
    (tmp_path / "trunc").write_bytes(data[:-3])
    assert run("descramble", *KEY7, str(tmp_path / "trunc"), str(tmp_path / "o1"))[0] == 1
    assert not (tmp_path / "o1").exists()
    key41 = ("--n", "10", "--mod", "41", "--coeffs", "28,20,6,14,15")
    assert run("descramble", *key41, str(box), str(tmp_path / "o2"))[0] == 1
    assert run("descramble", *KEY7, str(tmp_path / "missing"), str(tmp_path / "o3"))[0] == 3


def test_tables(tmp_path):
    code, text = run("tables", "--figures", str(tmp_path / "figs"))
    assert code == 0
    assert "1\t5\t7\t1,1,0,0,0,0,0,0,1,1\t5,1,1,0,0,3,3,3,3,5\t5,1,1,0,0,3,3,3,3,5\tok" in text
    assert "# table 1 row 7 g(6): printed 8, computed 1 (unreduced)" in text
    assert "3\t6\t41\t1,0,0,1,0,0,1,1,0,0\t34,21,34,34,35,34,1,35,21,1\t" in text
    assert "5\t1\t11\t" + ",".join(["1"] * 12) + "\t" + ",".join(["10"] * 12) in text
    figs = sorted(p.name for p in (tmp_path / "figs").iterdir())
    assert figs == ["table1.png", "table1_gram.png", "table3.png", "table3_gram.png",
                    "table5.png", "table5_gram.png", "table6.png", "table6_gram.png"]
    assert run("tables")[1] == text


def test_catalog_verify(tmp_path, monkeypatch):
    code, text = run("catalog-verify", "--builtin")
    assert code == 1 and "# 14 entries, 3 failed" in text
    good = tmp_path / "good.txt"
    good.write_text("10 7 2 1 2 5 3\n10 5 1 4 2 4 3\n")
    assert run("catalog-verify", str(good))[0] == 0
    bad = tmp_path / "bad.txt"
    bad.write_text("10 7 2 1 2 5 3 9\n")
    assert run("catalog-verify", str(bad))[0] == 1
    monkeypatch.setenv(CATALOG_ENV, str(good))
    assert run("catalog-verify")[0] == 0
    assert run("catalog-verify", str(tmp_path / "nope.txt"))[0] == 3


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "nhtkit", "check", *KEY7],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.startswith("PASS")
