"""Write tiling count tables (n, a, b, t) for k = 1..K as CSV, one file per k."""
import argparse
import csv
from pathlib import Path

from coupledrec.tiling import tiling_counts

ap = argparse.ArgumentParser(description=__doc__)
ap.add_argument("--max-k", type=int, default=5)
ap.add_argument("-n", type=int, default=30)
ap.add_argument("--out", type=Path, default=Path("tiling_tables"))
args = ap.parse_args()

args.out.mkdir(parents=True, exist_ok=True)
for k in range(1, args.max_k + 1):
    path = args.out / f"tiling_k{k}.csv"
    with path.open("w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["n", "a", "b", "t"])
        w.writerows(tiling_counts(k, args.n).rows())
    print(f"wrote {path}")
