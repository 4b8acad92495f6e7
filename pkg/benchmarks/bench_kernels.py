"""Compare the compiled and pure-Python enumeration kernels.

The interpreted run happens in a child process with
``TWISTALEX_DISABLE_NUMBA=1`` so that every helper falls back, not just the
outermost function.  Both runs must produce the same members of H(p).

    python benchmarks/bench_kernels.py --max-alpha 1001 --p 3 5 7
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import subprocess
import sys
import time


def _measure(max_alpha: int, ps: list[int], repeat: int) -> dict:
    from twistalex import _kernels

    out = {"numba": _kernels.NUMBA_ENABLED, "runs": {}}
    for p in ps:
        t0 = time.perf_counter()
        betas, alphas = _kernels.scan_admissible(max_alpha, p)
        first = time.perf_counter() - t0
        best = first
        for _ in range(repeat - 1):
            t0 = time.perf_counter()
            betas, alphas = _kernels.scan_admissible(max_alpha, p)
            best = min(best, time.perf_counter() - t0)
        digest = hashlib.sha256(betas.tobytes() + alphas.tobytes()).hexdigest()[:16]
        out["runs"][str(p)] = {"first": first, "best": best, "count": int(len(betas)), "digest": digest}
    return out


def main(argv: list[str] | None = None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-alpha", type=int, default=1001)
    ap.add_argument("--p", type=int, nargs="+", default=[3, 5, 7])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--child", action="store_true", help=argparse.SUPPRESS)
    args = ap.parse_args(argv)

    if args.child:
        print(json.dumps(_measure(args.max_alpha, args.p, args.repeat)))
        return 0

    compiled = _measure(args.max_alpha, args.p, args.repeat)
    env = dict(os.environ, TWISTALEX_DISABLE_NUMBA="1")
    cmd = [sys.executable, __file__, "--child", "--max-alpha", str(args.max_alpha),
           "--repeat", str(args.repeat), "--p", *map(str, args.p)]
    child = subprocess.run(cmd, env=env, capture_output=True, text=True, check=True)
    interpreted = json.loads(child.stdout)

    if not compiled["numba"]:
        print("numba is disabled in this process; both columns are interpreted")
    print(f"H(p) scan, alpha <= {args.max_alpha}, best of {args.repeat}")
    print(f"{'p':>3} {'members':>8} {'compiled s':>11} {'first call s':>13} {'python s':>10} {'speedup':>8}")
    ok = True
    for p in map(str, args.p):
        c, i = compiled["runs"][p], interpreted["runs"][p]
        ok &= c["digest"] == i["digest"]
        print(f"{p:>3} {c['count']:>8} {c['best']:>11.4f} {c['first']:>13.3f} {i['best']:>10.3f} "
              f"{i['best'] / c['best']:>7.0f}x")
    print("results agree" if ok else "RESULTS DIFFER")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
