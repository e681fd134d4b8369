"""Build the extension, import it, and check a handful of known values.

    python3 python/smoke_test.py
"""

import os
import shutil
import subprocess
import sys
import tempfile
from fractions import Fraction

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))


def build():
    subprocess.run(
        ["cargo", "build", "--release", "-p", "carlitz-py", "--features", "extension-module"],
        cwd=ROOT,
        check=True,
    )
    lib = os.path.join(ROOT, "target", "release", "libcarlitz_py.so")
    out = tempfile.mkdtemp()
    shutil.copy(lib, os.path.join(out, "carlitz_py.so"))
    sys.path.insert(0, out)


def main():
    build()
    import carlitz_py as cp

    ctx = cp.Context(3)
    assert str(ctx.bracket(1)) == "T^3 + 2*T", str(ctx.bracket(1))
    assert ctx.d(2).degree == 18
    assert ctx.l(2).degree == 12
    assert ctx.stf_a(3, 2).balanced() == (
        "-T^36 - T^30 - T^28 - T^24 - T^22 - T^20 - T^18 - T^16 - T^14 - T^12 - T^8 - T^6 - 1"
    )
    assert ctx.stf_a(2, 0).balanced() == "T^6 + T^4 + T^2"
    assert ctx.sts_a(3, 3).coeffs == [1]
    assert [p.coeffs for p in ctx.e_n(1)] == [[2], [1]]
    assert [p.degree for p in ctx.e_n(2)] == [6, 6, 0]

    checked, bad = ctx.verify_orthogonality(3)
    assert checked == 20 and bad == []
    assert str(ctx.delta(0)) == "1" and str(ctx.delta(2)) == "0"

    bc = ctx.bc()
    assert len(bc) == 10 and str(bc[0]) == "1"
    assert str(bc[1]) == "0"
    assert len(ctx.cc(4)) == 5

    c3 = cp.hyper_numbers("hc", 3, 4)
    assert c3[4] == Fraction(-1971, 5600), c3
    for method in ("strict", "weak", "assoc"):
        assert cp.hyper_numbers("hc", 3, 4, method) == c3
    b1 = cp.hyper_numbers("hb", 1, 4)
    assert b1 == [1, Fraction(-1, 2), Fraction(1, 6), 0, Fraction(-1, 30)], b1

    assert cp.assoc_stirling("first", 1, 4, 2) == 11
    assert cp.assoc_stirling("second", 1, 4, 2) == 7

    try:
        cp.Context(6)
    except ValueError:
        pass
    else:
        raise AssertionError("r = 6 should be rejected")

    print("smoke test passed")


if __name__ == "__main__":
    main()
