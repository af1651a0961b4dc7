"""Time the Witt / necklace / Lambda_1 diagram over several coefficient rings."""

import argparse
import random
import time
from dataclasses import dataclass

from wittlab.coeff import parse_ring
from wittlab.lambda1 import Series1
from wittlab.necklace import nr_ghost, s_tilde, tau, tau_inverse
from wittlab.witt import WittVector


@dataclass
class Config:
    rings: tuple = ("int", "free:8", "free:12", "poly:2")
    n: int = 12
    samples: int = 20
    seed: int = 0


def main(cfg: Config):
    rng = random.Random(cfg.seed)
    for text in cfg.rings:
        ring = parse_ring(text)
        t0 = time.perf_counter()
        ok = True
        for _ in range(cfg.samples):
            x = WittVector(ring, tuple(ring.random_element(rng) for _ in range(cfg.n)))
            b = tau(x)
            s = s_tilde(b)
            ok &= s == Series1.from_witt(x) and nr_ghost(b) == x.ghost()
            ok &= s.dlog() == nr_ghost(b) and tau_inverse(b) == x
        dt = time.perf_counter() - t0
        print(f"{text:<10} N={cfg.n}  samples={cfg.samples}  commutes={ok}  {dt:.2f}s")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--rings", nargs="+", default=list(Config.rings))
    ap.add_argument("--n", type=int, default=Config.n)
    ap.add_argument("--samples", type=int, default=Config.samples)
    ap.add_argument("--seed", type=int, default=Config.seed)
    main(Config(**vars(ap.parse_args())))
