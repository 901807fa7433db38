"""Watching distributions converge: CDF gaps at continuity points, bounded
test functions, boundary-null events, and the Levy metric, all against the
same shrinking point-mass example where the naive check goes wrong."""

from cltlab import (
    AtomOnGridError,
    ConvergenceProbe,
    boundary_null_check,
    cdf,
    cdf_distance,
    default_probe,
    levy_metric,
    point_mass,
    portmanteau_testfn,
    standard_normal,
)


def main():
    limit = point_mass(0.0)
    print("mu_n = point mass at 1/n, limit = point mass at 0")
    print()

    # the CDF at the atom itself never converges: F_n(0) = 0 but F(0) = 1.
    # weak convergence only promises the CDF at continuity points of the limit
    print(" n     |F_n(0) - F(0)|   sup over grid avoiding the atom")
    probe = ConvergenceProbe(limit, (-1.0, -0.1, 0.1, 1.0))
    for n in (2, 10, 100):
        mu = point_mass(1.0 / n)
        at_atom = abs(cdf(mu, 0.0) - cdf(limit, 0.0))
        away = cdf_distance(mu, probe)
        print(f"{n:4d}   {at_atom:15.1f}   {away:.1f}")

    print()
    print("grids through an atom of the limit are refused:")
    try:
        ConvergenceProbe(limit, (-1.0, 0.0, 1.0))
    except AtomOnGridError as exc:
        print("  AtomOnGridError:", exc)

    print()
    print("== bounded test functions see the same convergence ==")
    print(" n     max_f |E_n f - E f| over the default dashboard")
    for n in (2, 10, 100, 1000):
        gaps = portmanteau_testfn(point_mass(1.0 / n), default_probe(limit))
        print(f"{n:5d}  {max(gaps):.6f}")

    print()
    print("== events whose boundary the limit ignores ==")
    out = boundary_null_check(point_mass(0.01), limit, [(-0.5, 0.5)])
    print(f"mu((-0.5, 0.5]) = {out.mu_value}, limit {out.limit_value}, "
          f"boundary mass {out.boundary_mass}")
    out = boundary_null_check(point_mass(0.01), limit, [(0.0, 1.0)])
    print(f"mu((0, 1])      = {out.mu_value}, limit {out.limit_value}, "
          f"boundary mass {out.boundary_mass}  <- atom sits on the boundary")

    print()
    print("== the Levy metric metrizes all of this ==")
    for n in (2, 10, 100):
        v = levy_metric(point_mass(1.0 / n), limit, tol=1e-6)
        print(f"L(delta_1/{n}, delta_0) = {v:.6f}   (exact 1/{n} = {1 / n:.6f})")
    v = levy_metric(limit, standard_normal())
    print(f"L(delta_0, N(0,1))   = {v:.4f}")


if __name__ == "__main__":
    main()
