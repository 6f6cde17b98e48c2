"""Regenerate the bundled zero-ordinate table.

Usage: python3 tools/gen_zero_table.py 10000 > crates/core/data/zeros_10k.txt

Ordinates come from python-flint (Arb ball arithmetic, isolated and refined
rigorously); a sample is cross-checked against mpmath.zetazero.
"""
import sys

import flint
import mpmath

flint.ctx.prec = 96
mpmath.mp.dps = 25


def main():
    count = int(sys.argv[1]) if len(sys.argv) > 1 else 10000
    zeros = flint.acb.zeta_zeros(1, count)
    print("# Ordinates t_n of the first %d nontrivial zeros of zeta(s), sigma_n = 1/2." % count)
    print("# Generated by tools/gen_zero_table.py with python-flint acb.zeta_zeros (96-bit).")
    for n, z in enumerate(zeros, start=1):
        t = z.imag
        if n in (1, 2, 100, 1000) or n == count:
            ref = mpmath.zetazero(n).imag
            assert abs(mpmath.mpf(t.mid().str(30, radius=False)) - ref) < 1e-15, n
        print(t.mid().str(17, radius=False))


if __name__ == "__main__":
    main()
