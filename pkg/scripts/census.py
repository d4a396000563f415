"""Isomorphism-class census of all 2x2 structure matrices over a prime field."""
import argparse
from dataclasses import dataclass

from evo2d.cli import census, dumps
from evo2d.exactmath import parse_field


@dataclass
class CensusConfig:
    field: str = "F3"
    json: bool = False


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--field", default=CensusConfig.field, help="prime field, e.g. F3 or F5")
    ap.add_argument("--json", action="store_true")
    cfg = CensusConfig(**vars(ap.parse_args()))
    F = parse_field(cfg.field)
    rows = census(F)
    if cfg.json:
        print(dumps(rows))
        return
    for r in rows:
        print(f"{r['class']:<24}{r['count']:>6}")
    print(f"{'classes':<24}{len(rows):>6}")
    print(f"{'matrices':<24}{sum(r['count'] for r in rows):>6}")


if __name__ == "__main__":
    main()
