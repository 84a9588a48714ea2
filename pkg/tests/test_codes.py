import random
from itertools import product

import pytest

from demimat import codes, core, weights
from demimat.errors import MalformedInputError, SizeCapError

from conftest import CODE63A_ROWS, CODE63B_ROWS, HAMMING74_ROWS, HAMMING84_ROWS


def bases_of(table):
    k = table.rank
    return {
        core.elements_of(m)
        for m in range(table.full + 1)
        if core.popcount(m) == k and table.ranks[m] == k
    }


def test_prime_matrix_validation():
    with pytest.raises(MalformedInputError):
        codes.PrimeMatrix.build(4, [[1, 0]])
    with pytest.raises(MalformedInputError):
        codes.PrimeMatrix.build(2, [[1, 0], [1]])
    m = codes.PrimeMatrix.build(3, [[4, -1]])
    assert m.rows == ((1, 2),)


def test_parity_matroid_bases_code_a(code63a_matrix):
    table = codes.parity_matroid(code63a_matrix)
    assert table.kind == core.MATROID
    assert bases_of(table) == {
        (1, 4, 5), (1, 4, 6), (1, 5, 6), (2, 4, 5), (2, 4, 6),
        (2, 5, 6), (3, 4, 5), (3, 4, 6), (3, 5, 6), (4, 5, 6),
    }


def test_parity_matroid_bases_code_b(code63b_matrix):
    table = codes.parity_matroid(code63b_matrix)
    assert bases_of(table) == {
        (1, 2, 3), (1, 2, 6), (1, 3, 5), (1, 5, 6),
        (2, 3, 4), (2, 4, 6), (3, 4, 5), (4, 5, 6),
    }


def test_parity_matroid_rank_bound(hamming84_matrix):
    table = codes.parity_matroid(hamming84_matrix)
    for mask in range(table.full + 1):
        assert table.ranks[mask] <= min(core.popcount(mask), hamming84_matrix.n_rows)


def _random_invertible(rng, size, p):
    while True:
        mat = [[rng.randrange(p) for _ in range(size)] for _ in range(size)]
        if codes.rank_mod_p(mat, p) == size:
            return mat


def test_parity_matroid_row_operation_invariance():
    rng = random.Random(101)
    for rows in (CODE63A_ROWS, CODE63B_ROWS, HAMMING74_ROWS, HAMMING84_ROWS):
        matrix = codes.PrimeMatrix.build(2, rows)
        reference = codes.parity_matroid(matrix).ranks
        for _ in range(10):
            u = _random_invertible(rng, len(rows), 2)
            transformed = [
                [
                    sum(u[i][k] * rows[k][j] for k in range(len(rows))) % 2
                    for j in range(len(rows[0]))
                ]
                for i in range(len(rows))
            ]
            assert codes.parity_matroid(codes.PrimeMatrix.build(2, transformed)).ranks \
                == reference


def test_nullspace_basis_annihilates(hamming84_matrix):
    gen = codes.nullspace_basis(hamming84_matrix)
    assert len(gen) == 4
    for vec in gen:
        for row in hamming84_matrix.rows:
            assert sum(a * b for a, b in zip(row, vec)) % 2 == 0


def test_code_view(hamming84_matrix):
    code = codes.LinearCodeView.from_parity(hamming84_matrix)
    assert (code.n, code.k, code.p) == (8, 4, 2)


def brute_force_codewords(code):
    words = set()
    for coeffs in product(range(code.p), repeat=code.k):
        word = [0] * code.n
        for c, row in zip(coeffs, code.generator):
            word = [(w + c * g) % code.p for w, g in zip(word, row)]
        words.add(tuple(word))
    return words


def test_ghw_r1_is_minimum_weight(hamming84_matrix):
    # oracle: enumerate all nonzero codewords and take the least weight
    code = codes.LinearCodeView.from_parity(hamming84_matrix)
    words = brute_force_codewords(code)
    assert len(words) == 16
    min_weight = min(sum(1 for v in w if v) for w in words if any(w))
    assert min_weight == 4
    assert codes.code_ghw_bruteforce(code, 1) == 4


def test_ghw_full_support(hamming84_matrix):
    code = codes.LinearCodeView.from_parity(hamming84_matrix)
    # the whole code has full support here
    assert codes.code_ghw_bruteforce(code, code.k) == 8


def test_subspace_enumeration_counts():
    # number of r-dim subspaces of F_2^4 is the Gaussian binomial
    expected = {1: 15, 2: 35, 3: 15, 4: 1}
    for r, count in expected.items():
        assert sum(1 for _ in codes._rref_representatives(4, r, 2)) == count


def test_weight_hierarchy_agreement_all_fixtures(
    hamming84_matrix, code63a_matrix, code63b_matrix, hamming74_matrix
):
    for matrix in (hamming84_matrix, code63a_matrix, code63b_matrix, hamming74_matrix):
        assert codes.weight_hierarchy_agreement(matrix)


def test_hierarchy_values(hamming84_matrix):
    code = codes.LinearCodeView.from_parity(hamming84_matrix)
    hierarchy = [codes.code_ghw_bruteforce(code, r) for r in range(1, 5)]
    assert hierarchy == [4, 6, 7, 8]
    table = codes.parity_matroid(hamming84_matrix)
    assert weights.generalized_hamming_weights(table) == (4, 6, 7, 8)


def test_trivial_code_agrees():
    # identity parity check matrix: the code is {0}, k = 0
    matrix = codes.PrimeMatrix.build(2, [[1, 0], [0, 1]])
    assert codes.weight_hierarchy_agreement(matrix)


def test_ternary_code_agreement():
    matrix = codes.PrimeMatrix.build(3, [[1, 1, 1, 0], [0, 1, 2, 1]])
    assert codes.weight_hierarchy_agreement(matrix)


def test_enumeration_cap():
    big = codes.LinearCodeView(2, 30, 25, tuple())
    with pytest.raises(SizeCapError):
        codes.code_ghw_bruteforce(big, 1)
    code = codes.LinearCodeView.from_parity(codes.PrimeMatrix.build(2, [[1, 0], [0, 1]]))
    with pytest.raises(MalformedInputError):
        codes.code_ghw_bruteforce(code, 1)  # k = 0 leaves no valid r
