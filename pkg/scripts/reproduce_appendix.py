"""Recompute the appendix memberships and the commutative nonexistence strata.

Each free-algebra system is certified on random rational specializations
(optionally also over the parameter field, under a time budget), and each
commutative universal algebra for A3, A4, A5ab is checked stratum by stratum.
"""
import argparse
import time
from dataclasses import dataclass

from evo2d.freealg import APPENDIX_SYSTEMS, verify_appendix
from evo2d.polyring import ResourceLimit
from evo2d.reps import nonexistence_commutative


@dataclass
class AppendixConfig:
    samples: int = 5
    seed: int = 0
    parametric: bool = False
    timeout: float = 600.0


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--samples", type=int, default=AppendixConfig.samples)
    ap.add_argument("--seed", type=int, default=AppendixConfig.seed)
    ap.add_argument("--parametric", action="store_true", help="also try Q(params)")
    ap.add_argument("--timeout", type=float, default=AppendixConfig.timeout,
                    help="seconds per parametric run")
    cfg = AppendixConfig(**vars(ap.parse_args()))

    for name in APPENDIX_SYSTEMS:
        t = time.time()
        res = verify_appendix(name, samples=cfg.samples, seed=cfg.seed)
        zero = "".join(c for c in "xyzt" if res.members[c])
        print(f"{name:<15} specialized  certified={res.certified}  in ideal: {zero}  "
              f"({len(res.points)} points, {res.rejected} rejected, {time.time() - t:.1f}s)")
        if cfg.parametric:
            t = time.time()
            try:
                res = verify_appendix(name, mode="parametric", max_seconds=cfg.timeout)
                zero = "".join(c for c in "xyzt" if res.members[c])
                print(f"{name:<15} parametric   certified={res.certified}  in ideal: {zero}  "
                      f"({time.time() - t:.1f}s)")
            except ResourceLimit:
                print(f"{name:<15} parametric   resource limit after {time.time() - t:.0f}s")

    for label in ("A3", "A4", "A5ab"):
        cert = nonexistence_commutative(label, samples=cfg.samples, seed=cfg.seed)
        print(f"commutative {label:<5} not faithful={cert.not_faithful}  "
              f"({len(cert.strata)} stratum samples)")


if __name__ == "__main__":
    main()
