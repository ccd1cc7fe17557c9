"""Sharp N(d), certified by enumeration, over a range of weights.

For e=2 the closed-form N'(d) is listed next to it.  Each N(d) is checked with
verify_N on a graph enumerated just deep enough to show its sharpness witness.
"""
import argparse
import time

from crystalbounds import E2Context, HighestWeight, enumerate_graph, n_prime, sharp_N, verify_N
from crystalbounds.checks import dominant_weights


def main():
    p = argparse.ArgumentParser()
    p.add_argument("--e", type=int, default=2)
    p.add_argument("--max-level", type=int, default=3)
    p.add_argument("--max-defect", type=int, default=10)
    args = p.parse_args()
    t0 = time.perf_counter()
    for lam in dominant_weights(args.e, args.max_level):
        ds = range(args.max_defect + 1)
        values = [sharp_N(lam, d) for d in ds]
        g = enumerate_graph(lam, max(values) + 2 * lam.e)
        ok = all(verify_N(g, d, N).passed for d, N in zip(ds, values))
        line = f"{list(lam.a)!s:<14} N = {values}"
        if args.e == 2:
            line += f"  N' = {[n_prime(E2Context(*lam.a), d)[1] for d in ds]}"
        print(line + ("" if ok else "  VERIFY FAILED"))
    print(f"# {time.perf_counter() - t0:.1f}s")


if __name__ == "__main__":
    main()
