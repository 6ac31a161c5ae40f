"""Smoke test for the pyhomquiver extension module."""

import pyhomquiver as hq


def main():
    a = hq.Algebra.preset("sl3_singular")
    assert a.dim == 14
    assert [a.projective_dims(v) for v in a.vertices] == [[3, 2, 1], [2, 2, 1], [1, 1, 1]]
    assert a.resolve("L3") == [[0, 0, 1], [0, 1, 0], [0, 0, 1]]
    assert [a.pd(v) for v in a.vertices] == [1, 2, 2]
    assert a.global_dim() == 2
    assert a.ext("L3", "L3", 2) == 1
    assert ["3"] in a.initial_segments()
    g = a.guichardet()
    assert g["is_guichardet"] is False and g["failing_segment"] == [2]

    b = hq.Algebra.preset("sl2_principal")
    assert b.guichardet()["is_guichardet"] is True
    assert hq.cross_validate_preset("sl2_principal")["matches"] is True

    w = hq.WeylGroup("A2")
    assert w.order == 6 and w.thm777([0]) == (1, 2, 2)
    assert w.oinf_formulas("e")["pd_simple"] == 8
    assert w.bruhat_leq("s1", "w0")

    sl2 = hq.LieAlgebra.preset("sl2_lie")
    assert sl2.cohomology() == [1, 0, 0, 1]
    borel = hq.LieAlgebra.preset("borel_sl2")
    assert borel.top_degree_check()["passes"] is True
    assert borel.poincare_check()["skipped"] is True

    report = hq.run_cli(["gldim", "sl3_singular"])
    assert report["exit_code"] == 0 and report["results"]["gl_dim"] == 2

    try:
        hq.Algebra.preset("nope")
    except ValueError:
        pass
    else:
        raise AssertionError("unknown preset accepted")
    print("python smoke test passed")


if __name__ == "__main__":
    main()
