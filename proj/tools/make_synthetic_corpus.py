#!/usr/bin/env python3
"""Write the deterministic synthetic PPG and accelerometer corpus.

Each record is a single-column CSV of 16-bit integer samples at 400 Hz. PPG
records model a pulse as a systolic and a dicrotic Gaussian with beat-to-beat
rate variability, respiratory baseline wander and sensor noise. Accelerometer
records model walking cadence harmonics on top of gravity.

    python3 tools/make_synthetic_corpus.py data/synthetic
"""

import argparse
import math
import pathlib
import random

PPG_RATE = 400.0
ACC_RATE = 400.0
SAMPLES = 8192


def ppg(seed, n=SAMPLES, fs=PPG_RATE):
    rng = random.Random(seed)
    hr = rng.uniform(60.0, 95.0) / 60.0
    amp = rng.uniform(6000.0, 11000.0)
    base = rng.uniform(24000.0, 34000.0)
    resp = rng.uniform(0.18, 0.32)
    beats, t = [], 0.0
    while t < n / fs + 2.0:
        beats.append(t)
        t += (1.0 / hr) * (1.0 + rng.gauss(0.0, 0.03))
    out = []
    k = 0
    for i in range(n):
        ts = i / fs
        while k + 1 < len(beats) and beats[k + 1] <= ts:
            k += 1
        v = 0.0
        for b in beats[max(0, k - 1):k + 2]:
            dt = ts - b
            v += math.exp(-((dt - 0.25) / 0.08) ** 2) + 0.45 * math.exp(-((dt - 0.52) / 0.11) ** 2)
        wander = 0.12 * math.sin(2.0 * math.pi * resp * ts) + 0.05 * math.sin(2.0 * math.pi * 0.031 * ts)
        s = base + amp * (v + wander) + rng.gauss(0.0, 12.0)
        out.append(max(0, min(65535, round(s))))
    return out


def accelerometer(seed, n=SAMPLES, fs=ACC_RATE):
    rng = random.Random(seed)
    cadence = rng.uniform(1.6, 2.0)
    counts_per_g = 4096.0
    gravity = rng.uniform(0.7, 1.0) * counts_per_g
    harmonics = [(1.0, rng.uniform(0.25, 0.45)), (2.0, rng.uniform(0.1, 0.2)), (3.0, rng.uniform(0.03, 0.08))]
    phases = [rng.uniform(0.0, 2.0 * math.pi) for _ in harmonics]
    out = []
    for i in range(n):
        ts = i / fs
        # Walking bouts separated by standing still.
        active = 0.5 * (1.0 + math.tanh(4.0 * math.sin(2.0 * math.pi * ts / 60.0)))
        v = sum(a * math.sin(2.0 * math.pi * h * cadence * ts + p) for (h, a), p in zip(harmonics, phases))
        s = gravity + counts_per_g * active * v + rng.gauss(0.0, 6.0)
        out.append(max(-32768, min(32767, round(s))))
    return out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("out", type=pathlib.Path)
    ap.add_argument("--ppg", type=int, default=6)
    ap.add_argument("--acc", type=int, default=4)
    args = ap.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)
    records = [(f"ppg_s{i + 1:02d}", ppg(1000 + i)) for i in range(args.ppg)]
    records += [(f"acc_s{i + 1:02d}", accelerometer(2000 + i)) for i in range(args.acc)]
    for name, samples in records:
        with open(args.out / f"{name}.csv", "w") as f:
            f.write("value\n")
            f.writelines(f"{v}\n" for v in samples)


if __name__ == "__main__":
    main()
