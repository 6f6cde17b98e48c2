"""Print high-precision reference values frozen into the unit and acceptance tests."""
import mpmath as mp

mp.mp.dps = 40


def xi(s):
    s = mp.mpc(s)
    if s == 0 or s == 1:
        return mp.mpf(1) / 2
    return s * (s - 1) / 2 * mp.pi ** (-s / 2) * mp.gamma(s / 2) * mp.zeta(s)


def g(s):
    s = mp.mpc(s)
    return s * (s - 1) / 2 * mp.pi ** (-s / 2) * mp.gamma(s / 2)


def show(name, v):
    print(name, mp.nstr(v, 20))


show("loggamma(0.25+0.5i)", mp.loggamma(mp.mpc(0.25, 0.5)))
show("loggamma(-3.7+2.2i)", mp.loggamma(mp.mpc(-3.7, 2.2)))
show("loggamma(30-70i)", mp.loggamma(mp.mpc(30, -70)))
show("loggamma(0.25+150i)", mp.loggamma(mp.mpc(0.25, 150)))
show("gamma(-2.5)", mp.gamma(-2.5))
show("gamma(99.5)", mp.gamma(99.5))
show("digamma(0.25)", mp.digamma(0.25))
show("digamma(1.5+3i)", mp.digamma(mp.mpc(1.5, 3)))
show("euler", mp.euler)
show("zeta(0.5)", mp.zeta(0.5))
show("zeta(0.5+14i)", mp.zeta(mp.mpc(0.5, 14)))
show("zeta(0.5+50i)", mp.zeta(mp.mpc(0.5, 50)))
show("zeta(-3.5+7i)", mp.zeta(mp.mpc(-3.5, 7)))
show("zeta(6-2i)", mp.zeta(mp.mpc(6, -2)))
show("zeta(0.5+199i)", mp.zeta(mp.mpc(0.5, 199)))
show("zeta(0.5+290i)", mp.zeta(mp.mpc(0.5, 290)))
show("zeta(2+100i)", mp.zeta(mp.mpc(2, 100)))
show("zeta(-5+30i)", mp.zeta(mp.mpc(-5, 30)))
show("g(0.5+10i)", g(mp.mpc(0.5, 10)))
show("g(0.5)", g(0.5))
show("xi(0.5)", xi(0.5))
show("xi(2)", xi(2))
show("xi(0.8+7i)", xi(mp.mpc(0.8, 7)))
show("xi(-1.3+4.4i)", xi(mp.mpc(-1.3, 4.4)))
show("xi(0.5+30i)", xi(mp.mpc(0.5, 30)))
show("Xi'(10)", mp.diff(lambda t: xi(mp.mpc(0.5, t)).real, 10))
show("Xi''(10)", mp.diff(lambda t: xi(mp.mpc(0.5, t)).real, 10, 2))
show("xi'/xi(2)", mp.diff(xi, 2) / xi(2))
show("psi(1)", mp.nsum(lambda n: mp.exp(-n * n * mp.pi), [1, mp.inf]))
show("psi'(1)", -mp.pi * mp.nsum(lambda n: n * n * mp.exp(-n * n * mp.pi), [1, mp.inf]))
show("psi''(1)", mp.pi ** 2 * mp.nsum(lambda n: n ** 4 * mp.exp(-n * n * mp.pi), [1, mp.inf]))
show("psi(0.3)", mp.nsum(lambda n: mp.exp(-n * n * mp.pi * mp.mpf("0.3")), [1, mp.inf]))
show("S(0)", 8 * mp.pi * mp.nsum(lambda n: n * n * (n * n * mp.pi - 1.5) * mp.exp(-n * n * mp.pi), [1, mp.inf]))
show("int Xi", 3 * mp.pi * (mp.pi ** 0.25 / mp.gamma(0.75) - 1))
show("B", mp.log(4 * mp.pi) / 2 - 1 - mp.euler / 2)
theta = lambda t: mp.loggamma(mp.mpc(0.25, t / 2)).imag - t / 2 * mp.log(mp.pi)
show("theta(100)", theta(100))
show("theta(50)", theta(50))
show("gram0", mp.findroot(theta, 17.8))
show("gram_m1", mp.findroot(theta, 9.6))
show("gram100", mp.findroot(lambda t: theta(t) - 100 * mp.pi, 238))
for n in range(1, 5):
    show("zero%d" % n, mp.zetazero(n).imag)
A = lambda t: -(mp.mpf(-1) / 2 * (t * t + mp.mpf(1) / 4) * mp.pi ** (-0.25) * mp.exp(mp.loggamma(mp.mpc(0.25, t / 2)).real))
show("A(200)", A(200))
show("A(200) printed asymptotic ratio", (2 * mp.e * mp.pi) ** (-0.25) * mp.exp(-mp.pi * 200 / 4) * mp.mpf(200) ** 1.75 / A(200))
show("A(200) corrected asymptotic ratio", 2 ** (-0.25) * mp.pi ** 0.25 * mp.exp(-mp.pi * 200 / 4) * mp.mpf(200) ** 1.75 / A(200))
for T in (50, 100):
    th = lambda t: t / 2 * mp.log(t / (2 * mp.pi * mp.e)) - mp.atan(2 * t) / 4 + t / 4 * mp.log(1 + 1 / (4 * t * t))
    show("theta full approx err %d" % T, th(mp.mpf(T)) - theta(T))
    show("theta short approx err %d" % T, T / 2 * mp.log(T / (2 * mp.pi * mp.e)) - mp.pi / 8 - theta(T))
