"""One-off generator for the bundled LIBSVM train/test pair.

Synthetic sparse binary classification: positive heavy-tailed feature
values (lognormal, tf-idf-like, with genuine outlier rows), labels from
a random linear model with Gaussian margin noise, so the task is
learnable but not separable and mini-batch gradient norms are spiky.
Fixed seed; rerunning reproduces the shipped files byte for byte.
"""

import pathlib

import numpy as np

SEED = 412912
N_FEATURES = 120
N_TRAIN = 600
N_TEST = 400
OUT_DIR = pathlib.Path(__file__).resolve().parents[1] / "src" / "trish" / "data"


def make_rows(rng: np.random.Generator, n: int, w_star: np.ndarray) -> list[str]:
    lines = []
    for _ in range(n):
        nnz = int(rng.integers(5, 16))
        indices = np.sort(rng.choice(N_FEATURES, size=nnz, replace=False)) + 1
        values = np.round(np.minimum(rng.lognormal(-0.5, 1.2, size=nnz), 40.0), 4)
        values = np.maximum(values, 0.0001)
        margin = float(np.sum(w_star[indices - 1] * values))
        label = 1 if margin + rng.normal(0.0, 1.0) > 0.0 else -1
        parts = [str(label)] + [f"{i}:{float(v)!r}" for i, v in zip(indices, values)]
        lines.append(" ".join(parts))
    return lines


def main() -> None:
    rng = np.random.default_rng(SEED)
    w_star = rng.normal(0.0, 1.0, size=N_FEATURES)
    OUT_DIR.mkdir(parents=True, exist_ok=True)
    for name, n in (("train", N_TRAIN), ("test", N_TEST)):
        lines = make_rows(rng, n, w_star)
        path = OUT_DIR / f"{name}.libsvm"
        path.write_text("\n".join(lines) + "\n", encoding="utf-8")
        print(f"wrote {path} ({n} rows)")


if __name__ == "__main__":
    main()
