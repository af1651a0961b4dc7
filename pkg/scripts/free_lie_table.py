"""Dimensions of free Lie (super)algebras from D = omega o Log.

Each generator is given as degree:parity, e.g. ``1:0 1:0`` for two even
generators of degree 1 or ``1:1`` for a single odd one.
"""

import argparse
from dataclasses import dataclass, field

from wittlab import gradedlog as gl
from wittlab.coeff import Rationals


@dataclass
class Config:
    cap: int = 10
    generators: list = field(default_factory=lambda: ["1:0", "1:0"])


def main(cfg: Config):
    terms: dict = {}
    for g in cfg.generators:
        deg, _, par = g.partition(":")
        key = ((int(deg),), int(par or 0))
        terms[key] = terms.get(key, 0) + (-1 if key[1] else 1)
    V = gl.GradedSeries(1, cfg.cap, Rationals(), terms)
    dims = gl.dims_from_signed(gl.free_lie_dims(V))
    print("n   even  odd")
    for n in range(1, cfg.cap + 1):
        print(f"{n:<3} {dims.get(((n,), 0), 0)!s:<5} {dims.get(((n,), 1), 0)}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--cap", type=int, default=Config.cap)
    ap.add_argument("generators", nargs="*", default=["1:0", "1:0"])
    main(Config(**vars(ap.parse_args())))
