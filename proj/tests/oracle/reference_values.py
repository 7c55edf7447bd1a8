"""Reference values frozen into the C++ tests.

Computed at 50 significant digits with mpmath, independently of the C++
implementation.  Re-run with `python3 tests/oracle/reference_values.py`.
"""
from mpmath import mp, mpf, binomial, cos, acos, pi, sqrt, tan, atan, sin

mp.dps = 50


def exact_bias(phi, n):
    p = (1 + cos(phi)) / 2
    mean_p = mpf(0)
    mean_phi = mpf(0)
    second = mpf(0)
    for k in range(n + 1):
        w = binomial(n, k) * p**k * (1 - p) ** (n - k)
        est = acos(mpf(2 * k) / n - 1)
        mean_p += w * mpf(k) / n
        mean_phi += w * est
        second += w * (est - phi) ** 2
    bias = mean_phi - phi
    return dict(bias_p=mean_p - p, mean_phi=mean_phi, bias_phi=bias,
                mse_phi=second, var_phi=second - bias**2)


def show(name, value):
    print(f"{name} = {mp.nstr(value, 20)}")


if __name__ == "__main__":
    for key, value in exact_bias(pi / 4, 10).items():
        show(f"exact_bias(pi/4, 10).{key}", value)
    for key, value in exact_bias(pi / 3, 64).items():
        show(f"exact_bias(pi/3, 64).{key}", value)
    show("inherent(pi/2, 100)", pi / 2 - acos(mpf(2) / 100))
    show("inherent(pi/2, 100).alpha", (pi / 2 - acos(mpf(2) / 100)) * 10 / 2)
    show("resolution(pi/2, 100)", 1 / (pi / 2 - acos(mpf(2) / 100)))
    show("inherent(pi/4, 100)", pi / 4 - acos(mpf(2) / 100 + cos(pi / 4)))
    show("arccos(99/101)", acos(mpf(99) / 101))
    show("arccos(99/101)*10", acos(mpf(99) / 101) * 10)
    show("2/sqrt(101)", 2 / sqrt(101))
    show("2/sqrt(101)/5", 2 / sqrt(101) / 5)
    show("tan(pi/20)", tan(pi / 20))
    show("2*atan(0.05)", 2 * atan(mpf("0.05")))
    show("sin(0.2)/20", sin(mpf("0.2")) / 20)
    show("product M=4 N=100", 2 * acos((mpf(100) / 101) ** (mpf(1) / 8)))
    show("ghz M=4 N=100", acos(sqrt(mpf(100) / 101)) / 2)
    show("povm [0.9,0.1] n=10", sqrt(10) * sqrt(mpf("0.01") / mpf("0.9") + mpf("0.1")))
    # theta = pi/4, phi_b = 0, phi = pi/6
    s = sin(pi / 4)
    d = pi / 6
    show("fisher(pi/4, 0, pi/6)", s**2 * sin(d) ** 2 / (1 - s**2 * cos(d) ** 2))
