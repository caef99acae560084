#!/usr/bin/env python3
"""Train small MLPs on the 8x8 digits set and write them as weights JSON.

Regenerates the committed fixtures. Not run by the test suite.

    python3 tests/fixtures/make_fixtures.py [--out tests/fixtures]
"""
import argparse
import json
import platform
from pathlib import Path

import numpy as np
import sklearn
from sklearn.datasets import load_digits
from sklearn.model_selection import train_test_split

LAYERS = (64, 32, 16, 10)
EPOCHS = 10
BATCH = 64
LR = 1e-2
ACCURACY_FLOOR = 0.90


def glorot(rng, fan_in, fan_out):
    limit = np.sqrt(6.0 / (fan_in + fan_out))
    return rng.uniform(-limit, limit, size=(fan_in, fan_out))


def train(x, y, k, outputs, hidden, seed):
    rng = np.random.default_rng(seed)
    sizes = (x.shape[1], *hidden, outputs)
    ws = [glorot(rng, a, b) for a, b in zip(sizes[:-1], sizes[1:])]
    bs = [np.zeros(b) for b in sizes[1:]]
    params = ws + bs
    m = [np.zeros_like(p) for p in params]
    v = [np.zeros_like(p) for p in params]
    step = 0

    targets = np.zeros((len(y), outputs))
    targets[np.arange(len(y)), y] = 1.0

    for _ in range(EPOCHS):
        order = rng.permutation(len(x))
        for start in range(0, len(x), BATCH):
            idx = order[start:start + BATCH]
            acts = [x[idx]]
            for w, b in zip(ws[:-1], bs[:-1]):
                acts.append(np.maximum(acts[-1] @ w + b, 0.0))
            out = 1.0 / (1.0 + np.exp(-(acts[-1] @ ws[-1] + bs[-1])))

            # sigmoid + binary cross-entropy
            delta = (out - targets[idx]) / len(idx)
            gw, gb = [None] * len(ws), [None] * len(bs)
            for layer in reversed(range(len(ws))):
                gw[layer] = acts[layer].T @ delta
                gb[layer] = delta.sum(axis=0)
                if layer:
                    delta = (delta @ ws[layer].T) * (acts[layer] > 0)

            step += 1
            for i, g in enumerate(gw + gb):
                m[i] = 0.9 * m[i] + 0.1 * g
                v[i] = 0.999 * v[i] + 0.001 * g * g
                mh = m[i] / (1 - 0.9 ** step)
                vh = v[i] / (1 - 0.999 ** step)
                params[i] -= LR * mh / (np.sqrt(vh) + 1e-8)
    return ws, bs


def predict(ws, bs, x):
    a = x
    for w, b in zip(ws[:-1], bs[:-1]):
        a = np.maximum(a @ w + b, 0.0)
    return np.argmax(a @ ws[-1] + bs[-1], axis=1)


def export(k, seed, outputs=LAYERS[-1], hidden=LAYERS[1:-1]):
    digits = load_digits()
    keep = digits.target < k
    x = digits.data[keep] / 16.0
    y = digits.target[keep]
    x_tr, x_te, y_tr, y_te = train_test_split(x, y, test_size=0.25, random_state=seed)
    ws, bs = train(x_tr, y_tr, k, outputs, hidden, seed)
    acc = float(np.mean(predict(ws, bs, x_te) == y_te))
    if acc < ACCURACY_FLOOR:
        raise SystemExit(f"k={k} seed={seed}: test accuracy {acc:.3f} below floor {ACCURACY_FLOOR}")
    return {
        "format_version": 1,
        "name": f"fcn_digits_k{k}_s{seed} acc={acc:.4f}",
        "output_size": outputs,
        "used_outputs": list(range(k)),
        "layers": [{"rows": w.shape[0], "cols": w.shape[1], "weights": w.tolist()} for w in ws],
        "metadata": {
            "classes": k,
            "seed": seed,
            "epochs": EPOCHS,
            "batch": BATCH,
            "test_accuracy": acc,
            "numpy": np.__version__,
            "sklearn": sklearn.__version__,
            "python": platform.python_version(),
        },
    }


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", type=Path, default=Path(__file__).resolve().parent)
    ap.add_argument("--seeds", type=int, default=5)
    args = ap.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)
    for k in (1, 5, 10):
        for seed in range(args.seeds):
            model = export(k, seed)
            path = args.out / f"fcn_digits_k{k}_s{seed}.json"
            path.write_text(json.dumps(model) + "\n")
            print(path.name, model["metadata"]["test_accuracy"])
            if k == 5 and seed == 0:
                (args.out / "fcn_digits_k5.json").write_text(json.dumps(model) + "\n")


if __name__ == "__main__":
    main()
