"""Smoke tests for the python extension module."""

import pytest

cubesq = pytest.importorskip("cubesq")


def test_forward_round_trip_text():
    assert cubesq.forward("z^8", "w^12") == "z^24 + w^24"


def test_forward_rejects_bad_degrees():
    with pytest.raises(cubesq.CubesqError):
        cubesq.forward("z^7", "w^12")


def test_parse_json_encoding():
    form = cubesq.parse("zeta3*z^2", 2)
    assert form["degree"] == 2
    assert form["coeffs"][2] == ["0", "1", "1", "1"]


def test_mordell_fixtures():
    assert cubesq.mordell_representations("17") == [(1, 4), (2, 3)]
    assert cubesq.mordell_representations("1025") == [(1, 32), (4, 31), (5, 30), (10, 5)]
    assert cubesq.mordell_min_with_reps(3, "2000") == 1025
    assert cubesq.mordell_min_with_reps(5, "100") is None


def test_lattice_vectors():
    report = cubesq.lattice_vectors("-8")
    assert len(report["vectors"]) == 6
    assert ["1", "0"] in report["vectors"]
    assert all(check["pass"] for check in cubesq.verify_relations())


def test_fibers_and_invariants():
    fibers = cubesq.fibers(h="z^24 + w^24")
    assert len(fibers) == 24
    assert all(f["type"] == "II" for f in fibers)
    assert cubesq.euler_total("z^24 + w^24") == 48
    assert cubesq.betti2(48) == 46
    assert cubesq.riemann_roch_chi(-2, 0, 0, 48) == "3"
    assert cubesq.totient(33) == 20
    assert cubesq.picard_bound_check() == 6


def test_family_identity():
    fam = cubesq.family("2", "3")
    assert fam["verified"] is True
    a_prime = complex(*fam["a_prime"])
    b_prime = complex(*fam["b_prime"])
    assert abs(a_prime + b_prime + 6) < 1e-10
    assert abs(a_prime * b_prime - 17) < 1e-10


def test_solve_recovers_a_planted_pair():
    h = cubesq.forward("z^8 + w^8", "z^12 - 2*w^12")
    report = cubesq.solve(h, starts=120, seed=7)
    assert len(report["orbits"]) == 1
    orbit = report["orbits"][0]
    assert orbit["size"] == 6
    assert orbit["members_found"] == 6
    assert orbit["residual"] <= 1e-8


def test_solve_determinism():
    a = cubesq.solve("z^24 + w^24", starts=40, seed=3, threads=1)
    b = cubesq.solve("z^24 + w^24", starts=40, seed=3, threads=4)
    assert a == b
