"""Compare the compiled and pure-Python reduction kernels.

Each workload runs in a fresh interpreter so that the kernel choice made
at import time applies. Usage::

    python3 benchmarks/bench_kernel.py [--full] [--repeat N]

``--full`` adds the 26-cell closed path with four walks (about 40 s on
the pure-Python kernel).
"""

import argparse
import json
import os
import subprocess
import sys

WORKLOADS = {
    "decompose D": "from polyoideal.decomposition import radical_decomposition\n"
                   "radical_decomposition(fixtures.load('D'))",
    "lattice nonprime16": "from polyoideal.lattice import lattice_ideal\n"
                          "lattice_ideal(fixtures.load('nonprime16').polyocollection).groebner_basis()",
    "verify nonprime16": "from polyoideal.decomposition import verify_main_theorem\n"
                         "verify_main_theorem(fixtures.load('nonprime16'))",
}
FULL = {
    "lattice walk4": "from polyoideal.lattice import lattice_ideal\n"
                     "lattice_ideal(fixtures.load('walk4').polyocollection).groebner_basis()",
}

RUNNER = """
import json, time
from polyoideal import fixtures, kernel
t = time.perf_counter()
{body}
print(json.dumps({{"kernel": kernel.NAME, "seconds": time.perf_counter() - t}}))
"""


def time_workload(body: str, pure: bool) -> tuple[str, float]:
    env = dict(os.environ)
    env.pop("POLYOIDEAL_PURE_PYTHON", None)
    if pure:
        env["POLYOIDEAL_PURE_PYTHON"] = "1"
    out = subprocess.run([sys.executable, "-c", RUNNER.format(body=body)], env=env,
                         capture_output=True, text=True, check=True)
    res = json.loads(out.stdout.strip().splitlines()[-1])
    return res["kernel"], res["seconds"]


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--full", action="store_true")
    ap.add_argument("--repeat", type=int, default=1)
    args = ap.parse_args(argv)
    loads = dict(WORKLOADS, **(FULL if args.full else {}))
    print(f"{'workload':<22}{'compiled':>12}{'python':>12}{'speedup':>10}")
    for name, body in loads.items():
        times = {}
        for pure in (False, True):
            best = None
            for _ in range(args.repeat):
                kname, s = time_workload(body, pure)
                best = s if best is None else min(best, s)
            times[pure] = (kname, best)
        ck, ct = times[False]
        _pk, pt = times[True]
        if ck != "cython":
            print(f"{name:<22}{'n/a':>12}{pt:>11.2f}s{'':>10}  (extension not built)")
            continue
        print(f"{name:<22}{ct:>11.2f}s{pt:>11.2f}s{pt / ct:>9.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
