"""Characteristic functions as the working representation: exact sums for
atoms, quadrature for densities, the product law for sums, and recovery of
interval masses by inversion."""

import math

from cltlab import (
    charfun,
    charfun_of_sum,
    fair_die,
    levy_invert,
    normal_charfun,
    rademacher,
    second_order_check,
    standard_normal,
)


def main():
    coin = rademacher()
    print("== three routes to phi(t) ==")
    print(" t     coin (= cos t)      die                normal (= e^-t^2/2)")
    for t in (0.0, 0.5, 1.0, 2.0):
        c = charfun(coin, t)
        d = charfun(fair_die(), t)
        g = charfun(standard_normal(), t)
        print(f"{t:4.1f}   {c.real:+.6f}{c.imag:+.6f}i   "
              f"{d.real:+.6f}{d.imag:+.6f}i   {g.real:+.6f}{g.imag:+.6f}i")
    print(f"quadrature vs closed form at t=2: "
          f"{abs(charfun(standard_normal(), 2.0) - normal_charfun(2.0)):.2e}")

    print()
    print("== independence turns sums into products ==")
    t = 1.3
    three = charfun_of_sum([coin, coin, coin], t)
    print(f"phi_(X1+X2+X3)(1.3) = {three.real:+.8f}  vs cos^3(1.3) = {math.cos(t) ** 3:+.8f}")

    print()
    print("== second-order behavior near t = 0 ==")
    # for a centered unit-variance law, phi(t) = 1 - t^2/2 + o(t^2)
    print(" t       |phi(t) - (1 - t^2/2)|   min(|t|^3/6, t^2)")
    for t in (1.0, 0.5, 0.1, 0.01):
        gap = second_order_check(coin, t)
        bound = min(abs(t) ** 3 / 6.0, t * t)
        print(f"{t:5.2f}    {gap:.3e}              {bound:.3e}")

    print()
    print("== inversion: from phi back to interval masses ==")
    got = levy_invert(normal_charfun, -1.96, 1.96)
    print(f"normal mass of (-1.96, 1.96]  = {got:.6f}   (tables say 0.950004)")
    got = levy_invert(math.cos, 0.0, 2.0, T=1e3, tol=1e-6)
    print(f"coin mass of (0, 2] via phi=cos(t), T=1e3 = {got:.6f}   (exact 0.5)")
    # lattice laws need either a huge truncation or a little damping
    got = levy_invert(math.cos, 0.0, 2.0, damping=1e-6)
    print(f"same, auto truncation with damping 1e-6   = {got:.6f}")


if __name__ == "__main__":
    main()
