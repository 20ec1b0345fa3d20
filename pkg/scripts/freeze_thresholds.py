"""Regenerate qups/data/search_thresholds.json from exhaustive scans."""

import json
from pathlib import Path

from qups.search import threshold_statistics

REFERENCE = {1: 31, 2: 31, 3: 13}


def main():
    dims = {}
    for d, N in REFERENCE.items():
        stats = threshold_statistics(N, d)
        dims[str(d)] = {k: stats[k] for k in ("N", "quantile", "B_dual", "B_primal")}
    table = {
        "description": "median of kappa_dual/N^(1/d) and kappa_primal*N^(1/d) over g in {1..N-1}^d",
        "dims": dims,
    }
    out = Path(__file__).resolve().parents[1] / "src" / "qups" / "data" / "search_thresholds.json"
    out.write_text(json.dumps(table, indent=2) + "\n")
    print(out)


if __name__ == "__main__":
    main()
