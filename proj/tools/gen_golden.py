"""Regenerate tests/golden/fibonomial_n10.csv with plain integer arithmetic."""

from fractions import Fraction
from pathlib import Path


def fibonomial_rows(maxn):
    fib = [0, 1]
    while len(fib) <= maxn:
        fib.append(fib[-1] + fib[-2])

    def fact(n):
        p = 1
        for i in range(1, n + 1):
            p *= fib[i]
        return p

    for n in range(maxn + 1):
        row = [Fraction(fact(n), fact(k) * fact(n - k)) for k in range(n + 1)]
        assert all(c.denominator == 1 for c in row)
        yield ",".join(str(c.numerator) for c in row)


if __name__ == "__main__":
    out = Path(__file__).resolve().parent.parent / "tests" / "golden" / "fibonomial_n10.csv"
    out.write_text("".join(line + "\n" for line in fibonomial_rows(10)))
