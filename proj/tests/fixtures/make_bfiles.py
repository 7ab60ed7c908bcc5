#!/usr/bin/env python3
"""Regenerates the b-files used by the oeis-check tests.

Values come from sympy factorizations and the defining recursion for g,
independent of the C++ sieve code.
"""
from sympy import divisors, factorint, mobius

LIMIT = 10000


def liouville(n):
    return -1 if sum(factorint(n).values()) % 2 else 1


def g_values(limit):
    # g is the Dirichlet inverse of omega + 1.
    g = [0] * (limit + 1)
    g[1] = 1
    for n in range(2, limit + 1):
        g[n] = -sum((len(factorint(n // d)) + 1) * g[d] for d in divisors(n) if d < n)
    return g


def write(name, values):
    with open(f"b{name[1:]}.txt", "w") as out:
        out.write(f"# {name}, n = 1..{LIMIT}\n")
        for n in range(1, LIMIT + 1):
            out.write(f"{n} {values(n)}\n")


if __name__ == "__main__":
    write("A008683", lambda n: int(mobius(n)))
    write("A008836", liouville)
    g = g_values(LIMIT)
    write("A341444", lambda n: g[n])
