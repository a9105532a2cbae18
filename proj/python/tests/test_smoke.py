import json
import pathlib

import jsonschema
import pytest
import sympy
from referencing import Registry, Resource

import semiglue

SCHEMA_DIR = pathlib.Path(__file__).resolve().parents[2] / "tools" / "schema"


def test_numerical_invariants():
    assert semiglue.frobenius([3, 5, 7]) == 4
    assert semiglue.gaps([3, 5, 7]) == [1, 2, 4]
    assert semiglue.pseudo_frobenius([3, 5, 7]) == [2, 4]
    assert semiglue.contains([3, 5, 7], 8)
    assert not semiglue.contains([3, 5, 7], 4)
    assert semiglue.hilbert_function([2, 3], 3) == [1, 2, 2, 2]


def test_bad_generators_raise():
    with pytest.raises(semiglue.InputError):
        semiglue.frobenius([4, 6])


def test_verdicts():
    assert not semiglue.acm_projective_closure([56, 57, 95, 96])["result"]
    assert semiglue.acm_projective_closure([87, 145, 189, 203, 231])["result"]
    v = semiglue.cm_tangent_cone([105, 119, 136, 252])
    assert not v["result"] and v["witness"]
    assert not v["conflict"]


def test_betti_matrix_a():
    gens = [[3, 0], [5, 0], [0, 1], [1, 3], [2, 3]]
    table = semiglue.betti_table(gens)
    assert [len(r) for r in table] == [1, 7, 11, 6, 1]
    assert table[-1] == [[18, 9]]
    assert semiglue.pseudo_frobenius_affine(gens) == [[7, 2]]


@pytest.mark.parametrize("gens", [[3, 5, 7], [4, 6, 9], [5, 7, 11, 13]])
def test_toric_ideal_matches_sympy_elimination(gens):
    t = sympy.Symbol("t")
    xs = sympy.symbols(f"x1:{len(gens) + 1}")
    elim = sympy.groebner([x - t**g for x, g in zip(xs, gens)], t, *xs, order="lex")
    kernel = [p for p in elim.exprs if t not in p.free_symbols]
    expected = sympy.groebner(kernel, *xs, order="grevlex")

    def poly(side):
        return sympy.Mul(*[x**e for x, e in zip(xs, side)])

    mine = [poly(lead) - poly(tail) for lead, tail in semiglue.toric_ideal([[g] for g in gens])]
    got = sympy.groebner(mine, *xs, order="grevlex")
    assert got.exprs == expected.exprs
    # Already reduced: the basis we return is the one sympy finds.
    assert len(mine) == len(expected.exprs)


def _validator(name):
    registry = Registry()
    schemas = {}
    for path in SCHEMA_DIR.glob("*.json"):
        schema = json.loads(path.read_text())
        schemas[path.name] = schema
        registry = registry.with_resource(schema["$id"], Resource.from_contents(schema))
    return jsonschema.Draft202012Validator(schemas[name], registry=registry)


@pytest.mark.parametrize(
    "args",
    [
        ["analyze", "--numerical", "3,5,7"],
        ["pf", "--numerical", "3,5,7"],
        ["betti", "--matrix", "3,5,0,1,2;0,0,1,3,3"],
        ["glue", "--left", "3,5", "--right", "7,12", "--b", "1,1", "--a", "1,1"],
        ["join", "--left", "3,5,7", "--right", "2,3"],
        ["hilbert", "--numerical", "3,5,7", "--upto", "8"],
        ["verify", "join-sifr"],
        ["analyze", "--numerical", "4,6"],
        ["pf", "--numerical", "3,x"],
    ],
)
def test_cli_output_matches_schema(args):
    code, out, _ = semiglue.run(args)
    report = json.loads(out)
    _validator("report.schema.json").validate(report)
    assert report["schema_version"] == semiglue.schema_version
    assert (code == 0) == (report["status"] == "ok")
    if code == 0:
        _validator("job.schema.json").validate(report["input"])


def test_usage_errors_exit_two():
    code, out, err = semiglue.run(["frobnicate"])
    assert code == 2
    assert out == "" and "frobnicate" in err
