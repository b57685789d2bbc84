"""Smoke test for the hnsplit_py extension.

Build and install first:
    maturin build --release -m crates/py/Cargo.toml -o dist && pip install dist/hnsplit_py-*.whl
"""

import math

import hnsplit_py as h


def main():
    st = h.splitting_type(3, [2, 3])
    assert st.a == [1, 2, 2, 1], st
    assert st.rank == 6 and st.degree == -9
    assert st.bundle() == "O ⊕ O(−1)^2 ⊕ O(−2)^2 ⊕ O(−3)"
    assert st == h.splitting_product_oracle([3, 2])
    assert st.euler_characteristic() == h.hilbert_polynomial_constant(3, [2, 3]) == -3
    assert h.splitting_type(2, [4]).a == [1, 1, 1, 1]

    # stays exact far beyond 64 bits
    big = h.splitting_type(60, [6] * 7)
    assert big.rank == 6**7 and big.is_palindromic()
    assert h.binomial(120, 60) == math.comb(120, 60)

    p = h.sym_power_hn(2, 3, 1)
    assert [x.degree for x in p.pieces] == [6, 4, 2]
    assert p.vertices() == [(0, 0), (1, 6), (2, 10), (3, 12)]

    merged = h.polygon_from_pieces([(1, 2, "A"), (2, 4, "B"), (1, 0, "C")])
    assert len(merged) == 2 and merged.pieces[0].label == "A ⊕ B"
    try:
        h.polygon_from_pieces([(1, 0, "A"), (1, 1, "B")])
    except ValueError as e:
        assert "invalid-filtration" in str(e)
    else:
        raise AssertionError("increasing slopes accepted")

    q = h.ruled_quotient_hn(4, s=1, t=0)
    assert [x.degree for x in q.pieces] == [-1, -2, -3]
    assert h.ruled_quotient_hn(1, s=1, t=0) is None
    assert h.ruled_quotient_hn(3, e=0).is_semistable()

    k = h.two_hypersurface_quotient(2, 3, e=1)
    assert k["kernel"] == (5, -9), k
    assert h.two_hypersurface_quotient(1, 1, e=0) is None

    a = h.acyclic_pushforward(3, 2, 2, 2)
    assert a.a == [0, 6] and a.bundle() == "O(−1)^6"
    try:
        h.acyclic_pushforward(1, 1, 0, 0)
    except ValueError as e:
        assert "inadmissible" in str(e)
    else:
        raise AssertionError("chi != 0 accepted")

    print("python smoke test: ok")


if __name__ == "__main__":
    main()
