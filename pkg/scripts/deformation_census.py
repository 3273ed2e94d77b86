"""Count the deformation data of every catalog bundle and verify each deformation.

For each bundle, enumerate all (alpha_H, alpha_C) with entries in [-r, r],
deform, and re-validate.  Prints one row per bundle, or JSON with --json.
"""

from __future__ import annotations

import argparse
import json
import time
from dataclasses import asdict, dataclass

from homtwist import catalog
from homtwist.constructions import all_checks_hold, deform_bundle
from homtwist.search import endomorphism_search
from homtwist.tensor import identity


@dataclass
class CensusConfig:
    entry_range: int = 1
    bundles: tuple[str, ...] = tuple(catalog.BUNDLES)


@dataclass
class CensusRow:
    bundle: str
    pairs: int
    alpha_h_identity: int
    alpha_h_automorphism: int
    all_valid: bool
    seconds: float


def _is_permutation(f) -> bool:
    cols = list(zip(*f.entries))
    return all(sorted(v for v in line) == [0] * (len(line) - 1) + [1] for line in list(f.entries) + cols)


def census(cfg: CensusConfig) -> list[CensusRow]:
    rows = []
    for name in cfg.bundles:
        b = catalog.BUNDLES[name]()
        start = time.perf_counter()
        found = endomorphism_search(b, cfg.entry_range)
        ok = all(all_checks_hold(deform_bundle(f)) for f in found)
        ident = identity(b.host.dim)
        auto = sum(1 for f in found if f.alpha_h != ident and _is_permutation(f.alpha_h))
        rows.append(
            CensusRow(name, len(found), sum(f.alpha_h == ident for f in found), auto, ok, time.perf_counter() - start)
        )
    return rows


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--range", type=int, default=1, dest="entry_range")
    p.add_argument("--bundle", action="append", choices=sorted(catalog.BUNDLES))
    p.add_argument("--json", action="store_true")
    args = p.parse_args()
    cfg = CensusConfig(args.entry_range, tuple(args.bundle) if args.bundle else CensusConfig.bundles)
    rows = census(cfg)
    if args.json:
        print(json.dumps([asdict(r) for r in rows], indent=2))
        return
    print(f"{'bundle':28} {'pairs':>6} {'aH=id':>6} {'aH=aut':>7} {'valid':>6} {'sec':>6}")
    for r in rows:
        print(f"{r.bundle:28} {r.pairs:6d} {r.alpha_h_identity:6d} {r.alpha_h_automorphism:7d} {str(r.all_valid):>6} {r.seconds:6.2f}")


if __name__ == "__main__":
    main()
