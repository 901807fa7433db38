"""Tour of the quadrature toolkit: finite intervals, infinite tails,
and integrals that only exist as oscillatory limits."""

import math

from cltlab import (
    gaussian_moment,
    integrate,
    integrate_complex,
    integrate_oscillatory,
    sinc,
)


def main():
    print("== plain adaptive quadrature ==")
    v = integrate(lambda x: x * x, 0.0, 1.0)
    print(f"int_0^1 x^2 dx           = {v:.12f}   (exact 1/3)")

    v = integrate(lambda x: math.exp(-x), 0.0, math.inf)
    print(f"int_0^inf e^-x dx        = {v:.12f}   (exact 1)")

    pdf = lambda x: math.exp(-0.5 * x * x) / math.sqrt(2 * math.pi)
    v = integrate(pdf, -math.inf, math.inf)
    print(f"normal density total mass = {v:.12f}")

    print()
    print("== complex-valued integrands ==")
    z = integrate_complex(lambda x: complex(math.cos(x), math.sin(x)), 0.0, math.pi)
    print(f"int_0^pi e^ix dx         = {z.real:.10f} + {z.imag:.10f}i   (exact 2i)")

    print()
    print("== oscillatory improper integrals ==")
    # sin(x)/x is not absolutely integrable; the limit exists only when the
    # tail is summed between consecutive zero crossings and averaged out
    v = integrate_oscillatory(sinc, lambda k: k * math.pi)
    print(f"int_0^inf sin(x)/x dx    = {v:.10f}   (exact pi/2 = {math.pi / 2:.10f})")

    v = integrate_oscillatory(lambda x: math.exp(-0.2 * x) * math.sin(x),
                              lambda k: k * math.pi)
    print(f"damped sine, a=0.2:        {v:.10f}   (exact 1/(1+0.04) = {1 / 1.04:.10f})")

    print()
    print("== gaussian moments ==")
    print("k    E[X^k]          (k-1)!! for even k")
    for k in range(0, 9):
        odd_exact = 0.0
        exact = odd_exact if k % 2 else math.prod(range(k - 1, 0, -2)) or 1.0
        print(f"{k}    {gaussian_moment(k): .10f}   {exact: .1f}")


if __name__ == "__main__":
    main()
