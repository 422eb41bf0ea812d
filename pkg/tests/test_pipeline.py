import json

import pytest

from helpers import heis3_plus_line, poly_in, two_torus, var
from liepoisson import Options, PolyFamily, catalog, construct, verify
from liepoisson.errors import Unsupported
from liepoisson.generators import random_solvable
from liepoisson.liealg import is_solvable, jacobi_holds


def test_abelian_family_is_the_coordinates():
    g = catalog("abelian", 4)
    cert = construct(g)
    assert cert.verdict == "complete" and cert.family.members == [var(i) for i in range(4)]


def test_heis3():
    g = catalog("heis", 3)
    cert = construct(g)
    assert cert.verdict == "complete" and cert.target_l == 2
    assert cert.family.strings(g) == ["x", "z"]


def test_borel():
    g = catalog("borel_sl2")
    cert = construct(g)
    assert cert.verdict == "complete" and cert.family.strings(g) == ["e"]
    assert [s["step"] for s in cert.trace] == ["com", "base"]


def test_strictly_upper4():
    g = catalog("strictly_upper", 4)
    cert = construct(g, check_steps=True)
    assert cert.verdict == "complete" and len(cert.family) == cert.target_l == 4
    assert all(all(v for k, v in c.items() if k != "step") for c in cert.checks)


def test_sum_of_heisenberg_and_line():
    g = heis3_plus_line()
    cert = construct(g)
    assert cert.verdict == "complete" and cert.target_l == 3


def test_heisenberg_reduction_with_central_extension():
    g = two_torus()
    cert = construct(g, check_steps=True)
    assert cert.verdict == "complete" and cert.target_l == 4
    assert cert.checks and all(all(v for k, v in c.items() if k != "step") for c in cert.checks)


@pytest.mark.parametrize("name,size", [("sl", 2), ("gl", 2), ("so", 3)])
def test_reductive_dispatch(name, size):
    g = catalog(name, size)
    cert = construct(g)
    assert cert.verdict == "complete"
    assert cert.trace[0]["step"] == "argshift"


def test_non_solvable_without_invariants_is_unsupported():
    from helpers import direct_sum

    g = direct_sum(catalog("sl", 2), catalog("heis", 3))
    with pytest.raises(Unsupported):
        construct(g)


def test_trace_dimensions_drop():
    cert = construct(catalog("filiform", 5))
    for step in cert.trace:
        if step["step"] in ("heis", "com", "quotient"):
            assert step["dim_after"] < step["dim_before"]


def test_construct_is_deterministic():
    g = catalog("strictly_upper", 4)
    assert construct(g, seed=5).to_json() == construct(g, seed=5).to_json()


def test_certificate_serialization():
    g = catalog("heis", 3)
    d = json.loads(construct(g).to_json())
    assert d["schema"] == 1 and d["verdict"] == "complete"
    assert d["algebra"]["dim"] == 3 and len(d["algebra"]["sha256"]) == 64
    assert d["family"] == ["x", "z"] and d["provenance"] == ["vplus_basis", "vplus_basis"]
    assert d["independence"]["rank"] == 2 and d["commutativity"]["failures"] == []


def test_verify_examples():
    g = catalog("heis", 3)
    assert verify(g, [var(0), var(2)]).verdict == "complete"
    bad = verify(g, [var(0), var(1)])
    assert bad.verdict == "failed" and bad.to_dict()["commutativity"]["failures"][0]["bracket"] == "z"
    ab = catalog("abelian", 2)
    cert = verify(ab, PolyFamily([var(0), var(0) ** 2]))
    assert cert.rank == 1 and cert.verdict == "incomplete"


def test_verify_rejects_too_large_family():
    g = catalog("abelian", 2)
    cert = verify(g, [var(0), var(1), var(0) + var(1)])
    assert cert.verdict == "incomplete"


@pytest.mark.parametrize("seed", range(12))
def test_random_solvable(seed):
    g = random_solvable(seed)
    assert jacobi_holds(g) and is_solvable(g) and g.dim <= 6
    cert = construct(g, Options(seed=seed, check_steps=True))
    assert cert.verdict == "complete"
    for c in cert.checks:
        assert all(v for k, v in c.items() if k != "step"), c
