"""Recompute the frozen b-point fixtures at 40 digits with mpmath.

Independent of the package: angles come from atan2 on edge vectors and each
b-point solves (I - R) x = t for the composed 2x2 affine map.

    pip install mpmath && python scripts/derive_oracles.py
"""
import mpmath as mp

mp.mp.dps = 40
Z = [mp.mpc(0, 0), mp.mpc(1, 0), mp.mpc(2, 1), mp.mpc(mp.mpf(1) / 2, 2)]


def angle(k):
    prev, nxt = Z[k - 1] - Z[k], Z[(k + 1) % 4] - Z[k]
    return (mp.atan2(prev.imag, prev.real) - mp.atan2(nxt.imag, nxt.real)) % (2 * mp.pi)


A = [angle(k) for k in range(4)]


def rot(c, t):
    r = mp.matrix([[mp.cos(t), -mp.sin(t)], [mp.sin(t), mp.cos(t)]])
    cv = mp.matrix([c.real, c.imag])
    return r, cv - r * cv


def b(perm, n):
    r, o = mp.eye(2), mp.matrix([0, 0])
    for p in perm:
        rp, op = rot(Z[p - 1], (2 * n + 1) * A[p - 1] / 2)
        o, r = r * op + o, r * rp
    return mp.lu_solve(mp.eye(2) - r, o)


if __name__ == "__main__":
    print("angles", [mp.nstr(a, 20) for a in A])
    for perm in [(1, 2, 3, 4), (1, 2, 4, 3), (2, 1, 4, 3), (2, 1, 3, 4)]:
        for n in (0, 1, -1):
            x = b(perm, n)
            print(perm, n, mp.nstr(x[0], 17), mp.nstr(x[1], 17))
