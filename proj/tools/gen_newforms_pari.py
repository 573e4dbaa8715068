#!/usr/bin/env python3
"""Generate newform eigenvalue files with PARI/GP (through cypari2).

Offline alternative to `ap5 fetch` when the remote service is not
reachable. Writes one canonical JSON file per level in the same schema the
C++ loader consumes:

  {"level": N, "weight": 2, "classes": [{"label", "field_poly", "ap"}...]}

Usage: gen_newforms_pari.py --levels 70,350 --out data/newforms [--pmax 199]
"""
import argparse
import json
import os
import sys
import tempfile

import cypari2


def primes_upto(n):
    return [p for p in range(2, n + 1) if all(p % q for q in range(2, int(p ** 0.5) + 1))]


def rat(x):
    x = cypari2.Pari()(x)
    return [int(x.numerator()), int(x.denominator())]


def level_classes(pari, level, pmax):
    pari("mf=mfinit([%d,2],0)" % level)
    pari("L=mfeigenbasis(mf)")
    pari("P=mffields(mf)")
    count = int(pari("#L"))
    primes = primes_upto(pmax)
    classes = []
    for i in range(1, count + 1):
        poly = pari("P[%d]" % i)
        deg = int(pari.poldegree(poly))
        if deg == 1:
            field_poly = [0, 1]
        else:
            field_poly = [int(c) for c in pari.Vecrev(poly)]
        if field_poly[-1] != 1:
            raise SystemExit("non-monic field polynomial at level %d" % level)
        coefs = pari("mfcoefs(L[%d], %d)" % (i, pmax))
        aps = []
        for p in primes:
            c = coefs[p]
            if deg == 1:
                coords = [rat(c)]
            else:
                lifted = pari.lift(c)
                vec = pari.Vecrev(lifted, deg)
                coords = [rat(v) for v in vec]
            aps.append({"p": p, "coords": coords})
        classes.append({"field_poly": field_poly, "ap": aps})
    # Deterministic ordering: by field degree, then by the a_p fingerprint.
    classes.sort(key=lambda c: (len(c["field_poly"]), json.dumps(c["ap"]), c["field_poly"]))
    for idx, c in enumerate(classes):
        c["label"] = "%d.pari.%03d" % (level, idx)
    return [{"label": c["label"], "field_poly": c["field_poly"], "ap": c["ap"]} for c in classes]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--levels", required=True)
    ap.add_argument("--out", required=True)
    ap.add_argument("--pmax", type=int, default=199)
    ap.add_argument("--stack", type=int, default=2_000_000_000)
    args = ap.parse_args()
    pari = cypari2.Pari()
    pari.allocatemem(args.stack)
    os.makedirs(args.out, exist_ok=True)
    for level in (int(x) for x in args.levels.split(",")):
        doc = {"level": level, "weight": 2, "classes": level_classes(pari, level, args.pmax)}
        text = json.dumps(doc, separators=(",", ":"), sort_keys=True) + "\n"
        dest = os.path.join(args.out, "level_%d.json" % level)
        fd, tmp = tempfile.mkstemp(dir=args.out, prefix=".tmp_")
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.chmod(tmp, 0o644)
        os.replace(tmp, dest)
        print("level %d: %d classes -> %s" % (level, len(doc["classes"]), dest), file=sys.stderr)


if __name__ == "__main__":
    main()
