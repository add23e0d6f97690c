"""Independent counting pass over the bundled files, by hand on purpose.

Produces the golden statistics JSON the ingest tests compare against.
Deliberately avoids the package parser: plain str.split on each line,
so a bug in the real parser cannot leak into its own reference values.
"""

import json
import pathlib

DATA_DIR = pathlib.Path(__file__).resolve().parents[1] / "src" / "trish" / "data"


def count(path: pathlib.Path) -> dict:
    n_rows = 0
    nnz = 0
    max_index = 0
    positive = 0
    for line in path.read_text(encoding="utf-8").splitlines():
        tokens = line.split()
        if not tokens or tokens[0].startswith("#"):
            continue
        n_rows += 1
        if float(tokens[0]) > 0:
            positive += 1
        for token in tokens[1:]:
            index, _, _ = token.partition(":")
            nnz += 1
            max_index = max(max_index, int(index))
    return {
        "count": n_rows,
        "max_index": max_index,
        "nnz": nnz,
        "label_balance": positive / n_rows,
    }


def main() -> None:
    golden = {
        "train": count(DATA_DIR / "train.libsvm"),
        "test": count(DATA_DIR / "test.libsvm"),
    }
    out = DATA_DIR / "golden_stats.json"
    out.write_text(json.dumps(golden, indent=2) + "\n", encoding="utf-8")
    print(f"wrote {out}")
    print(json.dumps(golden, indent=2))


if __name__ == "__main__":
    main()
