import json
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import random_unimodular
from specgeom.lattices import (
    GramMatrix,
    LatticeBasis,
    LatticeFileError,
    dump_lattice,
    e8xe8_basis,
    e16_basis,
    gram_of_basis,
    lattice_to_json,
    load_form,
    load_lattice,
    orthogonal_decompose,
    parse_form,
    parse_lattice,
    representation_table,
)
from specgeom.lattices import exact
from specgeom.lattices.forms import block_diagonal
from specgeom.lattices.reduce import size_reduce

# small irreducible even blocks: A1, A2, A3, D4
BLOCKS = [
    [[2]],
    [[2, -1], [-1, 2]],
    [[2, -1, 0], [-1, 2, -1], [0, -1, 2]],
    [[2, -1, 0, 0], [-1, 2, -1, -1], [0, -1, 2, 0], [0, -1, 0, 2]],
    [[4, 1], [1, 4]],
]


def gram(rows):
    return GramMatrix(exact.matrix(rows))


def test_milnor_decompositions():
    assert orthogonal_decompose(gram_of_basis(e16_basis())).count == 1
    d = orthogonal_decompose(gram_of_basis(e8xe8_basis()))
    assert d.count == 2 and d.dimensions() == [8, 8]


def test_identity_splits_fully():
    assert orthogonal_decompose(gram([[1, 0, 0], [0, 1, 0], [0, 0, 1]])).count == 3


def test_size_reduce_keeps_the_form():
    g = [[10, 7], [7, 5]]
    reduced, u = size_reduce(g)
    assert exact.matmul(exact.matmul(exact.transpose(exact.matrix(u)), exact.matrix(g)), exact.matrix(u)) == exact.matrix(reduced)
    assert abs(exact.det(exact.matrix(u))) == 1
    assert max(reduced[i][i] for i in range(2)) <= 5


@given(st.integers(0, 10**6))
def test_block_diagonal_splits_into_its_blocks(seed):
    rng = random.Random(seed)
    a, b = rng.choice(BLOCKS), rng.choice(BLOCKS)
    g = gram(block_diagonal(exact.matrix(a), exact.matrix(b)))
    u = random_unimodular(rng, g.n)
    d = orthogonal_decompose(g.conjugate(u))
    assert d.count == 2
    parts = d.grams(g.conjugate(u))
    want = sorted(sorted(representation_table(gram(x), 10).entries.items()) for x in (a, b))
    got = sorted(sorted(representation_table(p, 10).entries.items()) for p in parts)
    assert got == want


# -- files ---------------------------------------------------------------------


def test_lattice_json_roundtrip(tmp_path):
    b = LatticeBasis.from_matrix([[1, "1/2"], [0, "3/2"]])
    path = tmp_path / "l.json"
    dump_lattice(b, path)
    assert load_lattice(path) == b
    assert json.loads(path.read_text()) == lattice_to_json(b)


def test_gram_json_roundtrip(tmp_path):
    g = gram([[2, 1], [1, 2]])
    path = tmp_path / "g.json"
    dump_lattice(g, path)
    assert load_form(path) == g


@pytest.mark.parametrize(
    "obj, fragment",
    [
        ([], "JSON object"),
        ({"basis": [[1]]}, "'n'"),
        ({"n": 0, "basis": []}, "'n'"),
        ({"n": 2, "basis": [[1, 0]]}, "'basis'"),
        ({"n": 2, "basis": [[1, 0], [0]]}, "'basis[1]'"),
        ({"n": 2, "basis": [[1, "x"], [0, 1]]}, "'basis[0][1]'"),
        ({"n": 2, "basis": [[1, 0.5], [0, 1]]}, "'basis[0][1]'"),
    ],
)
def test_parse_errors_name_the_field(obj, fragment):
    with pytest.raises(LatticeFileError, match=fragment.replace("[", r"\[").replace("]", r"\]")):
        parse_lattice(obj)


def test_parse_form_gram_checks():
    with pytest.raises(LatticeFileError, match="'gram'"):
        parse_form({"n": 2, "gram": [[1, 2], [2, 1]]})
    with pytest.raises(LatticeFileError, match="basis"):
        parse_lattice({"n": 1, "gram": [[2]]})


def test_malformed_json(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("{not json")
    with pytest.raises(LatticeFileError, match="malformed"):
        load_lattice(path)


def test_singular_basis_in_file(tmp_path):
    with pytest.raises(ValueError):
        parse_lattice({"n": 2, "basis": [[1, 2], [2, 4]]})
