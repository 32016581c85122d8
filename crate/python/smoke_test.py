"""Builds the extension with cargo, imports it from a temp dir and checks a few values."""

import os
import shutil
import subprocess
import sys
import tempfile

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))


def build():
    subprocess.run(
        ["cargo", "build", "--release", "-p", "affschur-py", "--features", "extension-module"],
        cwd=ROOT,
        check=True,
    )
    lib = os.path.join(ROOT, "target", "release", "libaffschur_py.so")
    dest = tempfile.mkdtemp()
    shutil.copy(lib, os.path.join(dest, "affschur_py.so"))
    sys.path.insert(0, dest)


def main():
    build()
    import affschur_py as a

    v = a.LaurentPoly.v(1)
    assert (v * v.bar()).terms() == [(0, 1)]
    assert a.LaurentPoly.quantum_int(2) == v + v.bar()
    assert a.LaurentPoly.gauss_binom(2, 1).terms() == [(-1, 1), (1, 1)]

    e12 = a.Matrix.unit(2, 1, 2)
    two = e12.add(e12)
    assert str(a.compute_f(two, e12, e12)) == "v"
    assert e12.eta(1).get(1, 0) == 1
    assert e12.tilde(3).n == 3

    # canonical basis: bar invariant, leading coefficient 1, lower terms in v^-1 Z[v^-1]
    m = a.Matrix(2, [(1, 1, 1), (1, 2, 1)])
    theta = a.SchurElement.canonical(m)
    assert theta.bar() == theta
    assert str(theta.coeff(m)) == "1"
    for b, c in theta.terms():
        if b != m:
            assert all(e < 0 for e, _ in c.terms())

    x = a.SchurElement.std(a.Matrix.diag([1, 1]))
    assert x * x == x

    assert a.HeckeElement.t_simple(2, 1) * a.HeckeElement.one(2) == a.HeckeElement.t_simple(2, 1)

    rep = a.run_check("trho", r=3)
    assert rep["status"] == "pass", rep
    assert "thm-42" in a.check_names()

    rows = a.export_table("g", n=2, r=2, spread=1)
    assert rows and all(r["kind"] == "g" for r in rows)

    try:
        a.run_check("nope")
    except ValueError:
        pass
    else:
        raise AssertionError("unknown check accepted")

    print("python smoke test: ok")


if __name__ == "__main__":
    main()
