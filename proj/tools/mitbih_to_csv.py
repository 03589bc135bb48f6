#!/usr/bin/env python3
"""Convert MIT-BIH Arrhythmia records to single-column CSV of raw ADC counts.

Needs the `wfdb` package. Records are fetched from PhysioNet unless
--local points at a directory holding the .hea/.dat files.

    python3 tools/mitbih_to_csv.py out/mitbih 100 101 103 105 106
    DMDT_MITBIH_DIR=out/mitbih ctest --test-dir build -R acceptance -V
"""

import argparse
import pathlib

import wfdb


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("out", type=pathlib.Path)
    ap.add_argument("records", nargs="+")
    ap.add_argument("--channel", type=int, default=0, help="signal index (0 is MLII for most records)")
    ap.add_argument("--local", type=pathlib.Path, help="read records from this directory")
    ap.add_argument("--samples", type=int, default=0, help="keep only the first N samples (0 keeps all)")
    args = ap.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)
    for name in args.records:
        if args.local:
            rec = wfdb.rdrecord(str(args.local / name), physical=False)
        else:
            rec = wfdb.rdrecord(name, pn_dir="mitdb", physical=False)
        samples = rec.d_signal[:, args.channel]
        if args.samples:
            samples = samples[: args.samples]
        with open(args.out / f"{name}.csv", "w") as f:
            f.writelines(f"{int(v)}\n" for v in samples)
        print(f"{name}: {len(samples)} samples, channel {rec.sig_name[args.channel]}")


if __name__ == "__main__":
    main()
