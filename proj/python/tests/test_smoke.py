import json
import pathlib

import pytest

import monokit

DATA = pathlib.Path(__file__).resolve().parents[2] / "tests" / "data"


def verdict(report, cls):
    return next(v["status"] for v in report["verdicts"] if v["class"] == cls)


def test_quintic():
    r = monokit.algebraic("y^5+y-x")
    assert r["exit_code"] == 0
    assert r["intermediates"]["group_order"] == "120"
    assert verdict(r, "Quadratures") == "StronglyNonRepresentable"
    assert verdict(r, "KRadicals(5)") == "Representable"
    assert set(r) >= {"input", "intermediates", "verdicts", "config", "version"}


def test_monodromy_loop_identity():
    m = monokit.monodromy("y^5+y-x")
    assert len(m["branch_points"]) == 4
    perm = list(range(5))
    for p in m["permutations"]:
        perm = [p[i] for i in perm]
    perm = [m["infinity_permutation"][i] for i in perm]
    assert perm == list(range(5))


def test_groups():
    s5 = [[1, 0, 2, 3, 4], [1, 2, 3, 4, 0]]
    assert monokit.group_order(5, s5) == "120"
    assert not monokit.is_solvable(5, s5)
    assert not monokit.is_k_solvable(5, s5, 4)
    assert monokit.is_k_solvable(5, s5, 5)
    assert monokit.composition_factors(5, s5) == ["C2", "A5"]


def test_invert_poly():
    assert verdict(monokit.invert_poly("z^6"), "Radicals") == "Representable"
    r = monokit.invert_poly("z^5-z+1", k=5)
    assert verdict(r, "Radicals") == "StronglyNonRepresentable"
    assert verdict(r, "KRadicals(5)") == "Representable"
    chains = monokit.decompose(monokit.chebyshev(6))
    assert {tuple(tag for _, tag in c) for c in chains} >= {("Chebyshev", "Power")}


def test_roots():
    roots = monokit.roots([-1, 0, 1])
    assert sorted(round(r.real) for r, _ in roots) == [-1, 1]


def test_fuchsian():
    system = json.loads((DATA / "sl2_small.json").read_text())
    assert monokit.fuchsian(system)["exit_code"] == 2
    r = monokit.fuchsian(system, assume_small=True)
    assert verdict(r, "GeneralizedQuadratures") == "StronglyNonRepresentable"
    lc = monokit.lie_closure([[[0, 1], [0, 0]], [[0, 0], [1, 0]]])
    assert lc["dimension"] == 3 and not lc["triangularizable"]


def test_polygon():
    sides = (DATA / "tetrahedral_triangle.json").read_text()
    r = monokit.polygon(sides)
    assert verdict(r, "Radicals") == "Representable"
    assert r["intermediates"]["case"] == 3
    assert r["intermediates"]["rotation_order"] == 12


def test_errors():
    with pytest.raises(monokit.MonokitError):
        monokit.algebraic("y^2 +* x")
    with pytest.raises(monokit.MonokitError):
        monokit.algebraic("y^2 - x", tol_root=0)
