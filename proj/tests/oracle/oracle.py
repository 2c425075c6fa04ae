"""Independent high-precision reference values for the unit tests.

Run: python3 oracle.py > values.txt, then copy into oracle_values.hpp.
"""
from mpmath import mp, mpc, exp, pi, binomial, power

mp.dps = 40


def taps(kind, alpha, n):
    sign = -1 if kind == "D" else 1
    bins = []
    for j in range(n):
        base = 1 + sign * exp(-2j * pi * j / n)
        if abs(base) < mp.mpf(10) ** -30:
            bins.append(mpc(0))
        else:
            bins.append(power(base, alpha))
    return [sum(bins[j] * exp(2j * pi * j * k / n) for j in range(n)) / n for k in range(n)]


def show(name, values):
    print(name)
    for v in values:
        print("  {%s, %s}," % (mp.nstr(v.real, 20), mp.nstr(v.imag, 20)))


print("two_pow_1p1i", mp.nstr(power(2, mpc(1, 1)), 20))
print("binom(0.5+0.5i, 5)", mp.nstr(binomial(mpc(0.5, 0.5), 5), 20))
print("binom(-1.5, 4)", mp.nstr(binomial(mp.mpf(-1.5), 4), 20))
show("D 1+i 7", taps("D", mpc(1, 1), 7))
show("I 1+i 7", taps("I", mpc(1, 1), 7))
show("D -0.5 8", taps("D", mp.mpf(-0.5), 8))
show("I 0.5-1i 6", taps("I", mpc(0.5, -1), 6))
