"""Invariants of max(Lambda) and the N / N' comparison for Lambda = 2*Lambda_0 + Lambda_1.

    python scripts/reproduce_e2_example.py [--a0 2 --a1 1]
"""
import argparse

from crystalbounds import E2Context, enumerate_max_e2, n_prime, sharp_N, sharpness_witness
from crystalbounds.reports import e2_transposed, fmt_content, fmt_hub

# values printed alongside the computation for comparison
REFERENCE_N = {0: 0, 1: 2, 3: 5, 4: 7, 6: 12, 7: 15, 9: 22, 10: 25}
REFERENCE_N_PRIME = {0: 13, 1: 13, 3: 13, 4: 13, 6: 38, 7: 38, 9: 38, 10: 38}


def main():
    p = argparse.ArgumentParser()
    p.add_argument("--a0", type=int, default=2)
    p.add_argument("--a1", type=int, default=1)
    p.add_argument("--m", type=int, default=3, help="table runs over -m..m")
    args = p.parse_args()
    ctx = E2Context(args.a0, args.a1)
    print(e2_transposed(enumerate_max_e2(ctx, -args.m, args.m)))

    compare = (args.a0, args.a1) == (2, 1)
    print(f"{'d':>3} {'q':>3} {'N':>4} {'Nprime':>7}  witness")
    for d in sorted(REFERENCE_N):
        q, bound = n_prime(ctx, d)
        N = sharp_N(ctx.weight, d)
        w = sharpness_witness(ctx.weight, d)
        wit = f"{fmt_content(w.content)} hub {fmt_hub(w.hub)} deg {w.degree}" if w else "-"
        line = f"{d:>3} {q:>3} {N:>4} {bound:>7}  {wit}"
        if compare and (REFERENCE_N[d] != N or REFERENCE_N_PRIME[d] != bound):
            line += f"   [reference N={REFERENCE_N[d]} N'={REFERENCE_N_PRIME[d]}]"
        print(line)


if __name__ == "__main__":
    main()
