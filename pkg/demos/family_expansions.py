"""Symbolic power-sum expansions of the competing extremal families.

For a fixed split ratio a, expand e_p as an exact polynomial in n for the
plain complete bipartite split and for the two hub variants (pendant gadgets
with the far side independent, or rewired through two gate vertices).  All
three share the same n^{p+1} coefficient; the hub variants then shed a
strictly positive multiple of n^p, so the plain split wins every time.

Which hub variant beats the OTHER one is genuinely parameter-dependent,
and the script prints a flip to prove it.
"""

from fractions import Fraction

from degpow.asymptotics import (
    coefficient,
    compare_families,
    expand_ep,
    family_of,
    leading_coefficient,
)


def show(name: str, a: Fraction, p: int) -> None:
    fam = family_of(name, a=a)
    poly = expand_ep(fam, p)
    print(f"  {name:6s} e_{p} = {poly!r}")


def main() -> int:
    for a in (Fraction(1, 2), Fraction(3, 5)):
        p = 2
        print(f"split ratio a = {a}, p = {p}")
        show("kbip", a, p)
        show("gprime", a, p)
        show("gstar", a, p)
        lead = leading_coefficient(a, p)
        print(f"  shared n^{p + 1} coefficient: {lead}")
        gp = coefficient(expand_ep(family_of('gprime', a=a), p), p)
        gs = coefficient(expand_ep(family_of('gstar', a=a), p), p)
        print(f"  n^{p} coefficients: gprime {gp}, gstar {gs}, kbip 0")
        for other in ("gprime", "gstar"):
            cmp_result = compare_families(family_of("kbip", a=a), family_of(other, a=a), p)
            print(
                f"  kbip vs {other}: {cmp_result.dominant} dominates "
                f"for all n >= {cmp_result.threshold}"
            )
        print()

    a = Fraction(3, 5)
    print(f"hub variants against each other at a = {a}: the order flips with p")
    for p in (2, 5):
        cmp_result = compare_families(family_of("gprime", a=a), family_of("gstar", a=a), p)
        gp = coefficient(expand_ep(family_of("gprime", a=a), p), p)
        gs = coefficient(expand_ep(family_of("gstar", a=a), p), p)
        winner = {"first": "gprime", "second": "gstar"}[cmp_result.dominant]
        print(f"  p={p}: n^{p} coefficients {gp} vs {gs} -> {winner} wins")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
