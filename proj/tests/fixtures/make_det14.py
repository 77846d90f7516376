#!/usr/bin/env python3
"""Writes det14.txt: the unexpanded determinant of a 3x3 matrix whose entries
are random polynomials of degree 5 in x with coefficients drawn from six
parameters. Deterministic for a given seed."""
import random
import sys

SEED = 20100614
PARAMS = ["Zx", "Zz", "α", "γ_b", "β", "Ω_B"]


def monomial(rng):
    chosen = rng.sample(PARAMS, rng.randint(0, 2))
    return "*".join(f"{p}^{rng.randint(1, 2)}" if rng.random() < 0.3 else p for p in chosen)


def coefficient(rng):
    terms = []
    for _ in range(rng.randint(1, 3)):
        c = rng.choice([n for n in range(-9, 10) if n != 0])
        m = monomial(rng)
        terms.append(f"{c}*{m}" if m else str(c))
    return "(" + " + ".join(terms).replace("+ -", "- ") + ")"


def entry(rng):
    parts = []
    for k in range(6):
        power = "" if k == 0 else ("*x" if k == 1 else f"*x^{k}")
        parts.append(coefficient(rng) + power)
    return "(" + " + ".join(parts) + ")"


def main():
    rng = random.Random(SEED)
    m = [[entry(rng) for _ in range(3)] for _ in range(3)]
    plus = [(0, 1, 2), (1, 2, 0), (2, 0, 1)]
    minus = [(2, 1, 0), (0, 2, 1), (1, 0, 2)]
    lines = []
    for sign, perms in (("+", plus), ("-", minus)):
        for cols in perms:
            factors = "\n    * ".join(m[r][c] for r, c in enumerate(cols))
            lines.append(f"{sign} {factors}")
    out = sys.argv[1] if len(sys.argv) > 1 else "det14.txt"
    with open(out, "w", encoding="utf-8") as f:
        f.write("\n".join(lines) + ";\n")


if __name__ == "__main__":
    main()
