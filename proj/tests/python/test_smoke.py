"""Smoke tests for the chowla2 python module (run under ctest)."""

import json

import chowla2 as c2


def main():
    assert c2.__version__

    # Mobius and the basic discriminant values.
    assert c2.mu("k=1", "x^2") == 0
    assert c2.mu("k=1", "x^2+x+1") == -1
    assert c2.mu("k=1", "x^2+x") == 1
    assert c2.berl("k=1", "x^2+x+1") == "0x1"
    assert c2.xi("k=1", "x^2+x+1") == "0x1"
    assert c2.delta("k=1", "x^2+x+1") == "0x1"
    assert c2.chi2("k=2", "0x2") == -1

    try:
        c2.berl("k=1", "x^2")
        raise AssertionError("berl of a non-squarefree polynomial must fail")
    except ValueError:
        pass

    # Symbolic forms in the constant term.
    assert c2.xi_in_t("k=1", "x^2+x") == "t"
    assert c2.delta_in_t("k=1", "x^3+x^2") == "t"

    # Autocorrelation with the n = 2 classification.
    r = c2.autocorrelation("k=1", 2, ["x", "x+1"], [2, 2])
    assert r["C"] == 2 and r["n2_case"] == 3 and r["n2_relation_ok"]
    r = c2.autocorrelation("k=1", 3, ["0", "1"], [1, 1])
    assert r["C"] == r["C_charsum"] and r["bound_ok"]

    # Artin-Schreier reduction.
    r = c2.as_reduce("k=1", "1/t^2")
    assert not r["degenerate"] and r["genus"] == 0 and r["Q"] == "(1)/(t)"
    r = c2.as_reduce("k=1", "t^2+t")
    assert r["degenerate"] and r["constant"] == "0x0"

    assert c2.char_sum("k=1", "t") == 0

    # A full verification suite through the report path.
    rep = json.loads(c2.verify("n2", field="k=1", ks=[1]))
    assert rep["pass"] is True
    assert rep["version"] == c2.__version__

    print("smoke ok")


if __name__ == "__main__":
    main()
