"""Print the worked examples step by step: permutation detection, X A = B Y,
decoding, and the key recovery on the q = 7 public key."""
from __future__ import annotations

from permequiv.algebra import GF, QQ, poly_roots_in_field, q_vector
from permequiv import attack, codes, equivsolver, linalg, permdetect
from permequiv.linalg import Matrix

F7 = GF(7)


def detection():
    v, w = (6, 1, 3, 1, 0, 0), (0, 3, 6, 1, 1, 0)
    print("v =", v, " w =", w)
    print("  first match :", permdetect.detect_first(v, w).witness)
    print("  sorted      :", permdetect.detect_sorted(v, w).witness)
    D, _ = permdetect.r_vector(v, F7)
    print("  D_v         :", D)
    print("  all         :", ", ".join(map(str, permdetect.detect_all(v, w, F7))))


def equivalence():
    A = Matrix(QQ, [[8, -1, 1, 2], [11, -2, 1, 3]], 4)
    B = Matrix(QQ, [[1, 0, 1, 2], [-1, 1, 0, 3]], 4)
    for i in range(2):
        pts = equivsolver.variety(A, B.row(i))
        sets = equivsolver.lambda_sets(A, B.row(i), pts)
        pts_s = ", ".join("(" + ", ".join(map(str, x)) + ")" for x in pts)
        print(f"row {i + 1}: points {pts_s}, Lambda = {{{', '.join(map(str, sets))}}}")
    sol = equivsolver.solve_equiv(A, B)[0]
    print("sigma =", sol.sigma)
    print("X =")
    print(sol.X)
    print("Y =")
    print(sol.Y)


def decoding():
    G = Matrix(GF(3), [[1, 0, 2, 1, 0], [1, 1, 0, 1, 2], [0, 2, 1, 2, 1]], 5)
    print("decode over F_3:", linalg.decode(G, (2, 2, 1, 0, 1)))


def key_recovery():
    G1 = Matrix(F7, [[1, 2, 3, 6, 6, 1], [4, 0, 4, 6, 1, 0], [0, 2, 5, 4, 6, 3]], 6)
    print("H_G1 =", linalg.parity_check(G1).tolist())
    g = codes.rs_generator(7, 3, 4).g
    for w in codes.min_weight_codewords(G1, 4):
        c = permdetect.projective_match(g, w, F7)
        print(f"  [{' '.join(map(str, w))}]  q = {q_vector(w, F7)}  "
              f"{'select, c = ' + str(c) if c is not None else '-'}")
    W = attack.build_candidates(G1, g)
    print("W =", W)
    res = attack.recover_permutation(W, g, 3, F7, start=(0, 3, 6, 1, 1, 0))
    print("sigma =", res.sigma, " rows =", res.rows)
    S_inv = attack.recover_S_inv(G1, res.rows)
    print("S^-1 =", S_inv.tolist())
    G = codes.rs_generator(7, 3, 4).generator
    print("S G P == G1:", linalg.inverse(S_inv) @ G @ res.P == G1)
    print("default search:", attack.full_attack(G1, 3).sigma)


def primitive():
    for w in [(5, 5, 1, 1, 0, 0), (3, 0, 1, 6, 0, 1)]:
        A = q_vector(w, F7)
        U = attack.u_polynomial(A, F7)
        print(f"w = {w}: U_w = {U.to_str('Y')}, roots {poly_roots_in_field(U)}")
        for y, h in attack.gcd_system(w, 4, F7).items():
            print(f"  Y = {y}: gcd = {h.to_str('X')}")
        print("  candidates:", [(c.alpha, c.c) for c in attack.primitive_candidates(w, 4, F7)])


if __name__ == "__main__":
    for name, fn in [("permutation detection", detection), ("X A = B Y", equivalence),
                     ("decoding", decoding), ("key recovery", key_recovery),
                     ("primitive element", primitive)]:
        print(f"== {name}")
        fn()
