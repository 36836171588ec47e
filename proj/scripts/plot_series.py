#!/usr/bin/env python3
"""Plot the CSV series emitted by `aptx figures`.

Usage: plot_series.py <dir-with-csvs> [--out plots/]
Requires matplotlib; everything else in the repo works without it.
"""

import argparse
import csv
import pathlib
import sys


def read_series(path):
    with open(path, newline="") as fh:
        rows = list(csv.reader(fh))
    header, data = rows[0], rows[1:]
    cols = {name: [float(r[i]) for r in data] for i, name in enumerate(header)}
    return header, cols


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("csv_dir", type=pathlib.Path)
    ap.add_argument("--out", type=pathlib.Path, default=pathlib.Path("plots"))
    args = ap.parse_args()

    try:
        import matplotlib

        matplotlib.use("Agg")
        import matplotlib.pyplot as plt
    except ImportError:
        sys.exit("matplotlib is not installed; pip install matplotlib")

    files = sorted(args.csv_dir.glob("*.csv"))
    if not files:
        sys.exit(f"no CSV files in {args.csv_dir}")
    args.out.mkdir(parents=True, exist_ok=True)

    for path in files:
        header, cols = read_series(path)
        xs = cols[header[0]]
        fig, ax = plt.subplots(figsize=(6, 4))
        for name in header[1:]:
            ax.plot(xs, cols[name], label=name, linewidth=1.2)
        ax.axhline(0, color="gray", linewidth=0.5)
        ax.axvline(0, color="gray", linewidth=0.5)
        ax.set_xlabel(header[0])
        ax.legend()
        ax.set_title(path.stem.replace("_", " "))
        target = args.out / (path.stem + ".png")
        fig.savefig(target, dpi=120, bbox_inches="tight")
        plt.close(fig)
        print(f"wrote {target}")


if __name__ == "__main__":
    main()
