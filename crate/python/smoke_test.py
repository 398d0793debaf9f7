"""Smoke test for the ybe_py extension. Build it first:

    pip install --no-build-isolation ./crates/py
"""

import json

import ybe_py


def main():
    # trivial cycle set: H_k is free of rank n^k
    triv = ybe_py.CycleSet.trivial(3)
    assert triv.homology(2) == (9, [])

    # the cycle law rejects this table
    try:
        ybe_py.CycleSet([[0, 1], [1, 0]])
    except ValueError as e:
        assert "cycle" in str(e)
    else:
        raise AssertionError("invalid table accepted")

    r3 = ybe_py.fixture("rack_r3")
    props = r3.classify()
    assert props["invertible"] and props["left_nondegenerate"]
    xs = [0, 1, 2, 1]
    assert r3.guitar_inverse(r3.guitar(xs)) == xs
    assert r3.check_conjugation(3)
    assert r3.homology(1, family="birack") == r3.homology(1, family="braided")

    # orbit formula on every cycle set of size 4
    sets = ybe_py.enumerate(4, up_to_iso=True)
    assert len(sets) == 23
    for c in sets:
        assert c.homology(1)[0] == len(c.orbits())

    # doubling tower and retraction
    stage = ybe_py.CycleSet.trivial(1)
    for m in range(1, 5):
        nxt = stage.doubling()
        assert nxt.size == 2**m and nxt.is_square_free() and nxt.mp_level() == m
        assert nxt.retract().is_isomorphic(stage)
        stage = nxt

    # extension classes match |H^2|
    c = ybe_py.fixture("cs2_1")
    order = 1
    for k in c.cohomology(2, [2]):
        order *= k
    assert c.extension_classes([2]) == order

    again = ybe_py.from_json(c.to_json())
    assert again == c and json.loads(c.to_json())["kind"] == "cycle_set"

    assert ybe_py.nm(4) == [1, 2, 3, 5, 6]
    passed, report = ybe_py.run_suite("bridge")
    assert passed and json.loads(report)["suite"] == "bridge"
    print("smoke test passed")


if __name__ == "__main__":
    main()
