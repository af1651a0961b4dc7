"""Tabulate J = j - 744, its Faber data and the first replicates."""

import argparse
from dataclasses import dataclass

from wittlab import replicable as rp
from wittlab.gradedlog import monster_recursion


@dataclass
class Config:
    order: int = 12
    hmax: int = 5


def main(cfg: Config):
    J = rp.j_oracle(max(9 * cfg.order, cfg.hmax * cfg.hmax))
    print("n   c(n)")
    for n in range(1, cfg.order + 1):
        print(f"{n:<3} {J(n)}")
    H = rp.h_table(J, cfg.hmax * cfg.hmax)
    print("\nH_(m,n), m,n <=", cfg.hmax)
    for m in range(1, cfg.hmax + 1):
        print("  ".join(str(H[(m, n)]) for n in range(1, cfg.hmax + 1)))
    reps = rp.extract_replicates(J, 3, cfg.order)
    for a in (2, 3):
        print(f"\nF^({a}) = J to order {cfg.order}:", reps[a] == J.f[: cfg.order])
    L = monster_recursion(J, 3, 3)
    print("\n[L_(m,n)] from the recursion:")
    for (m, n), v in sorted(L.items()):
        print(f"  ({m},{n})  {v}  c(mn) = {J(m * n)}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--order", type=int, default=Config.order)
    ap.add_argument("--hmax", type=int, default=Config.hmax)
    main(Config(**vars(ap.parse_args())))
