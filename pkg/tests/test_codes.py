import numpy as np
import pytest

from chaingray.chain_ring import RingError, all_words, make_ring
from chaingray.codes import (
    CapExceeded,
    Code,
    FieldCode,
    WordIndex,
    code_report,
    distance_distribution,
    gray_image,
    is_constacyclic,
    is_distance_invariant,
    is_ideal,
    is_linear,
    is_quasicyclic,
    min_hamming,
    min_hom_distance,
    same_set,
    span,
    unique_rows,
)
from chaingray.gray_map import hom_word_weight
from chaingray.shifts import constacyclic_shift

from oracles import ref_closure


def _as_set(words):
    return {tuple(int(v) for v in w) for w in words}


@pytest.mark.parametrize(
    "name,n,gens",
    [
        ("z8", 2, [[1, 2]]),
        ("z8", 3, [[2, 0, 4], [0, 4, 4]]),
        ("z27", 2, [[3, 9]]),
        ("z27", 2, [[1, 10]]),
        ("z4", 3, [[1, 1, 0], [0, 2, 2]]),
    ],
)
def test_span_matches_closure(name, n, gens):
    ring = make_ring(name)
    ref = ref_closure(ring.add, ring.mul, range(ring.order), gens, n)
    assert _as_set(span(ring, gens, n)) == ref


def test_span_over_truncated_ring(f4u3):
    gens = [[1, 4]]
    ref = ref_closure(f4u3.add, f4u3.mul, range(64), gens, 2)
    assert _as_set(span(f4u3, gens, 2)) == ref


def test_cap(z8):
    with pytest.raises(CapExceeded) as info:
        span(z8, [[1, 0, 0], [0, 1, 0]], 3, cap=10)
    assert info.value.cap == 10
    code = Code("z8", 3, generators=[[1, 0, 0]])
    with pytest.raises(CapExceeded):
        code.codewords(cap=4)


def test_word_index_both_paths():
    rng = np.random.default_rng(0)
    words = unique_rows(rng.integers(0, 5, size=(50, 4)), 5)
    idx = WordIndex(words, 5)
    assert idx.exact and idx.contains_all(words)
    assert not idx.contains([[9, 9, 9, 9]]).any()
    big = unique_rows(rng.integers(0, 64, size=(50, 12)), 64)
    idx = WordIndex(big, 64)
    assert not idx.exact and idx.contains_all(big)
    assert same_set(big[::-1], big, 64)


def test_socle_code_example():
    # C = {0, 4}^3 over Z_8
    code = Code("z8", 3, "1-g^e", generators=[[4, 0, 0], [0, 4, 0], [0, 0, 4]])
    rep = code_report(code)
    assert rep["size"] == 8 and rep["gray_image_length"] == 12
    assert rep["is_linear"] and rep["is_constacyclic"] and rep["is_ideal"]
    assert rep["is_quasicyclic"] and rep["is_distance_invariant"]
    assert rep["min_hom_distance"] == rep["min_hamming"] == 4


def test_nonlinear_explicit_code(z8):
    code = Code.from_words("z8", [[0, 0], [1, 0], [0, 1]], unit="1")
    assert len(code) == 3
    assert not is_linear(code)
    assert not is_constacyclic(code, "1-g^e")
    assert is_constacyclic(Code.from_words("z8", [[0, 0], [1, 0], [0, 1]]), "1")


def test_not_distance_invariant_example():
    fc = FieldCode(2, 1, [[0, 0, 0, 0], [0, 0, 0, 1], [0, 1, 1, 1]], e=2, n=1)
    assert not is_distance_invariant(fc)
    assert min_hamming(fc) == 1
    assert distance_distribution(fc, [0, 0, 0, 0]) == {0: 1, 1: 1, 3: 1}
    assert is_distance_invariant(FieldCode(2, 1, [[0, 0], [1, 1]]))


def test_is_quasicyclic_needs_shape():
    fc = FieldCode(2, 1, [[0, 0, 0, 0]])
    with pytest.raises(ValueError):
        is_quasicyclic(fc)
    with pytest.raises(ValueError):
        is_quasicyclic(fc, e=2, n=2)
    assert is_quasicyclic(fc, e=2, n=1)


@pytest.mark.parametrize("name,n", [("z8", 2), ("z27", 1), ("z4", 3), ("f2u3", 1)])
def test_ideal_iff_linear_and_constacyclic(name, n):
    ring = make_ring(name)
    rng = np.random.default_rng(1)
    for unit in ("1", "1-g^e", "1+g^e"):
        for _ in range(12):
            rows = rng.integers(0, ring.order, size=(int(rng.integers(1, 3)), n))
            for code in (Code(ring, n, unit, generators=rows), Code(ring, n, unit, words=np.vstack([np.zeros(n, int), rows]))):
                expected = is_linear(code) and is_constacyclic(code)
                assert is_ideal(code, multipliers="all") == expected
                assert is_ideal(code, multipliers="generators") == expected


def test_ideal_multiplier_argument(z8):
    with pytest.raises(ValueError):
        is_ideal(Code("z8", 2, generators=[[1, 1]]), multipliers="some")


def test_principal_ideals_are_constacyclic(z27):
    # the submodule generated by g and all its shifts is an ideal
    for g in all_words(z27, 2)[::13]:
        orbit = [g]
        for _ in range(2 * 27):
            orbit.append(constacyclic_shift(z27, orbit[-1], 19))
        code = Code(z27, 2, "1-g^e", generators=np.array(orbit))
        assert is_linear(code) and is_constacyclic(code) and is_ideal(code)


def test_gray_image_and_distances(z8):
    code = Code(z8, 2, generators=[[1, 3]])
    fc = gray_image(code)
    assert fc.words.shape == (len(code), 8)
    assert fc.unique().shape[0] == len(code)
    assert min_hom_distance(code) == min_hamming(fc)
    w = hom_word_weight(z8, code.codewords())
    assert min_hom_distance(code) == int(w[w > 0].min())


def test_nonlinear_min_distance(z8):
    code = Code.from_words(z8, [[1, 1], [2, 1], [5, 5]])
    # pairwise: (1,0) -> 2, (4,4) -> 8, (3,4) -> 6
    assert min_hom_distance(code) == 2
    assert min_hamming(gray_image(code)) == 2
    with pytest.raises(ValueError):
        min_hom_distance(Code.from_words(z8, [[1, 1]]))


def test_spec_round_trip(tmp_path, z8):
    code = Code(z8, 2, "1-g^e", generators=[[2, 4]])
    again = Code.from_spec(code.to_spec())
    assert np.array_equal(again.codewords(), code.codewords())
    assert again.unit == code.unit
    path = tmp_path / "code.json"
    path.write_text('{"ring": "z8", "n": 2, "words": [[0, 0], [4, 4]]}')
    assert len(Code.from_spec(path)) == 2
    with pytest.raises(RingError):
        Code.from_spec({"n": 2})


def test_validation(z8):
    with pytest.raises(ValueError):
        Code(z8, 0)
    with pytest.raises(ValueError):
        Code(z8, 2, generators=[[8, 0]])
    with pytest.raises(ValueError):
        Code(z8, 2, words=np.zeros((0, 2)))
