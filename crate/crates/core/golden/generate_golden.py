#!/usr/bin/env python3
"""Regenerate the golden reference tables with mpmath at 50 significant digits.

Usage: python3 generate_golden.py [OUT_DIR]
"""
import sys
from pathlib import Path

from mpmath import mp, mpc, mpf, exp, hyp1f1, loggamma, pi, sqrt

mp.dps = 50
I = mpc(0, 1)

# (a, b, z) rows for 1F1
CHF_ROWS = [
    (mpc(0, 0.5), mpf(0.5), mpc(0, -2)),
    (mpc(1, 1), mpf(2.5), mpc(0, -5)),
    (mpc(1, 1), mpf(1.5), mpc(0, -1)),
    (mpc(0, 1), mpf(0.5), mpc(0, -1)),
    (mpc(0.3, 0.2), mpf(1.5), mpc(4, -1)),
    (mpc(0, 0.5), mpf(0.5), mpc(0, -10)),
    (mpc(0, 0.5), mpf(0.5), mpc(0, -30)),
    (mpc(0, 0.5), mpf(0.5), mpc(0, -45)),
    (mpc(0, 0.5), mpf(0.5), mpc(0, -60)),
    (mpc(0, 0.5), mpf(0.5), mpc(0, -80)),
    (mpc(0.5, 0.5), mpf(0.5), mpc(0, -80)),
    (mpc(1, 0.5), mpf(1.5), mpc(0, -80)),
    (mpc(0, 4), mpf(0.5), mpc(0, -20)),
    (mpc(0.5, 4), mpf(1.5), mpc(0, -20)),
    (mpc(0, 0.0625), mpf(0.5), mpc(0, -60)),
    (mpc(1.0625, 0.0625), mpf(1.5), mpc(0, -60)),
    (mpc(-2.5, 1), mpf(0.5), mpc(-7, 3)),
    (mpc(2, -3), mpf(1.5), mpc(12, 5)),
    (mpc(0, 0.5), mpf(0.5), mpc(25, -35)),
    (mpc(1.5, 0), mpf(0.5), mpc(-15, 0)),
]

LOGGAMMA_ROWS = [
    mpc(1, 0), mpc(0.5, 0), mpc(1, 2), mpc(0.25, -3), mpc(-2.5, 1.5), mpc(-7.3, -0.4),
    mpc(30, 40), mpc(-60, 20), mpc(0.1, 99), mpc(3.7, 0),
]


def z_solution(branch, sign, x, m, w):
    y = -2 * I * w * x
    sy = sqrt(2 * w * x) * exp(-I * pi / 4)
    a1 = I * m**2 / (2 * w)
    a2 = a1 + mpf(1) / 2
    i32 = exp(3 * I * pi / 4)
    pre = exp(-I * pi / 4) * exp(-y / 2)
    if branch == 1:
        return pre * (hyp1f1(a1, 0.5, y) + sign * 2 * sqrt(2 * w) * i32 * a1 / m * sy * hyp1f1(a2 + 0.5, 1.5, y))
    return pre * (sy * hyp1f1(a1 + 0.5, 1.5, y) + sign * sqrt(2 * w) * i32 / (2 * m) * hyp1f1(a2, 0.5, y))


SOLUTION_ROWS = [
    (1, 1, 1, 1, 2),
    (1, -1, 1, 1, 2),
    (2, 1, 1, 1, 2),
    (2, -1, 1, 1, 2),
    (1, 1, 2, 0.5, 0.7),
    (2, -1, 0.5, 2, 3.25),
    (1, -1, 1, 1, 10),
    (2, 1, 0.5, 2, 20),
]


def g(v):
    return mp.nstr(v, 20, min_fixed=-1, max_fixed=-1) if False else mp.nstr(v, 20)


def main():
    out = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).parent
    with open(out / "chf.csv", "w", newline="\n") as f:
        f.write("a_re,a_im,b,z_re,z_im,f_re,f_im\n")
        for a, b, z in CHF_ROWS:
            v = hyp1f1(a, b, z)
            f.write(",".join(g(t) for t in (a.real, a.imag, b, z.real, z.imag, v.real, v.imag)) + "\n")
    with open(out / "loggamma.csv", "w", newline="\n") as f:
        f.write("z_re,z_im,lg_re,lg_im\n")
        for z in LOGGAMMA_ROWS:
            v = loggamma(z)
            f.write(",".join(g(t) for t in (z.real, z.imag, v.real, v.imag)) + "\n")
    with open(out / "solutions.csv", "w", newline="\n") as f:
        f.write("branch,sector,m,omega,x,z_re,z_im\n")
        for br, s, m, w, x in SOLUTION_ROWS:
            v = z_solution(br, s, mpf(x), mpf(m), mpf(w))
            name = "I" if br == 1 else "II"
            sec = "plus" if s > 0 else "minus"
            f.write(f"{name},{sec},{g(mpf(m))},{g(mpf(w))},{g(mpf(x))},{g(v.real)},{g(v.imag)}\n")


if __name__ == "__main__":
    main()
