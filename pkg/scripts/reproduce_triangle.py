"""Print the tiling coefficient triangle and the scalar recurrences for small k."""
import argparse

from coupledrec.tiling import coefficient_triangle, tiling_counts


def recurrence_text(coeffs) -> str:
    terms = []
    for i, c in enumerate(coeffs, start=1):
        c = int(c.real)
        if c == 0:
            continue
        mag = "" if abs(c) == 1 else str(abs(c))
        terms.append(("-" if c < 0 else "+", f"{mag}z(n-{i})"))
    body = ("-" if terms[0][0] == "-" else "") + terms[0][1]
    body += "".join(f" {s} {t}" for s, t in terms[1:])
    return f"z(n) = {body}   (n >= {len(coeffs)})"


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-k", type=int, default=7)
    ap.add_argument("--terms", type=int, default=12)
    args = ap.parse_args()

    rows = coefficient_triangle(args.max_k)
    width = 2 * args.max_k * 4
    for row in rows:
        print("".join(f"{str(c):>4}" for c in row).center(width).rstrip())
    print()
    for k, row in enumerate(rows, start=1):
        print(f"k={k}: {recurrence_text(row.coeffs)}")
        counts = tiling_counts(k, args.terms - 1)
        print(f"     a: {list(counts.a)}")
        print(f"     t: {list(counts.t)}")


if __name__ == "__main__":
    main()
