#!/usr/bin/env python3
"""Smoke test of the Python bindings.

Build the extension first (the helper below does it if needed):

    cargo build --release -p tautocycle-python
    python3 python/smoke_test.py
"""

import os
import shutil
import subprocess
import sys

HERE = os.path.dirname(os.path.abspath(__file__))
ROOT = os.path.dirname(HERE)


def ensure_module():
    so = os.path.join(HERE, "tautocycle_py.so")
    built = os.path.join(ROOT, "target", "release", "libtautocycle_py.so")
    if not os.path.exists(built):
        subprocess.run(
            ["cargo", "build", "--release", "-p", "tautocycle-python"],
            cwd=ROOT,
            check=True,
        )
    if not os.path.exists(so) or os.path.getmtime(built) > os.path.getmtime(so):
        shutil.copyfile(built, so)
    sys.path.insert(0, HERE)


def main():
    ensure_module()
    import tautocycle_py as tc

    # Macaulay data.
    m = tc.macaulay_data(5, 8)
    assert (m["d"], m["g"], m["c"], m["rho"]) == (4, -1, 4, 6), m

    # Hilbert functions and regularity of the lexicographic ideal.
    lex = tc.Ideal(["x", "y^5", "y^4*z^4"])
    hf = lex.hilbert_function(5, 9)
    assert hf == [36, 59, 90, 131, 182], hf
    assert lex.regularity(8) == 8
    assert lex.is_borel_fixed()
    assert lex.is_max_regularity_locus(5, 8)

    # Divisor family class.
    dec = tc.decompose_family("D", a=6, b=9)
    assert (dec["q0"], dec["q1"], dec["q2"]) == ("4", "1", "0"), dec
    assert dec["effective"]

    # Plane family degree: (M_5 . F) at d = 4 is 2.
    v = tc.intersection_number("F", [(5, 1)], d=4)
    assert v == "2", v

    # Dual-basis identity table.
    _, all_match = tc.intersection_tables(4, 5)
    assert all_match

    # Restriction, star extension, limits.
    twisted = tc.Ideal(["x", "y^4", "y^3*z^2 + y^3*z*t"])
    restricted = twisted.restrict("t")
    assert restricted.variables() == ["x", "y", "z"]
    assert sorted(restricted.generators()) == ["x", "y^3*z^2", "y^4"], restricted.generators()
    lim = twisted.limit([0, 0, 0, 1], "zero")
    assert "y^3*z^2" in lim.generators(), lim.generators()

    # CM/punctual splitting and the Hilbert-Chow cycle.
    split = tc.Ideal(["y", "x*z", "x*t"]).cm_split()
    assert split["cm"] == ["x", "y"]
    assert split["punctual"][0]["length"] == 1
    chow = tc.Ideal(["x", "y^2"]).hilbert_chow()
    assert chow == [(["x", "y"], 2)], chow

    # Fiber predicates.
    star1 = tc.Ideal(["x", "y^3", "y^2*z"])
    star2 = tc.Ideal(["x^2", "x*y", "x*z", "y^2"])
    assert tc.f_equiv(star1, star2)
    assert tc.g_fiber_count_monomial("y^4*z") == 2

    # Projection.
    image = tc.project_point(["1", "1", "1", "1"], ["0", "0", "0", "1"], "t")
    assert image == ["1", "1", "1", "0"], image

    # One fast verification criterion end to end.
    passed, line = tc.run_criterion(5)
    assert passed, line

    print("smoke test passed")


if __name__ == "__main__":
    main()
