"""Sweep the characterization over bundles and their coaction mutations.

Every bundle whose host, coalgebra and coaction validate is decided twice:
directly by the comodule Hom-coalgebra axiom, and as colinearity of the
comultiplication.  Any disagreement is printed and makes the exit status 1.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass

from homtwist import catalog
from homtwist.constructions import characterize, deform_bundle
from homtwist.search import endomorphism_search


@dataclass
class SweepConfig:
    entry_range: int = 1
    mutation_values: tuple[int, ...] = (-1, 0, 1, 2)
    mutate_deformations: bool = True


def sweep(cfg: SweepConfig) -> tuple[int, int, list[str]]:
    cases = []
    for name, b in catalog.catalog_bundles().items():
        cases.append((name, b))
        for i, f in enumerate(endomorphism_search(b, cfg.entry_range)):
            d = deform_bundle(f)
            cases.append((f"{name}/deform{i}", d))
            if cfg.mutate_deformations:
                cases += [(f"{name}/deform{i}/mut{j}", m) for j, m in enumerate(catalog.coaction_mutations(d, cfg.mutation_values))]
        cases += [(f"{name}/mut{j}", m) for j, m in enumerate(catalog.coaction_mutations(b, cfg.mutation_values))]
    holds, divergent = 0, []
    for label, b in cases:
        c = characterize(b)
        holds += c.axiom_holds
        if not c.agree:
            divergent.append(label)
    return len(cases), holds, divergent


def main() -> int:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--range", type=int, default=1, dest="entry_range")
    p.add_argument("--values", default="-1,0,1,2", help="comma-separated mutation values")
    p.add_argument("--no-deformation-mutations", action="store_true")
    args = p.parse_args()
    cfg = SweepConfig(args.entry_range, tuple(int(v) for v in args.values.split(",")), not args.no_deformation_mutations)
    total, holds, divergent = sweep(cfg)
    print(f"bundles: {total}  axiom holds: {holds}  axiom fails: {total - holds}  divergent: {len(divergent)}")
    for label in divergent:
        print(f"DIVERGENT {label}")
    return 1 if divergent else 0


if __name__ == "__main__":
    sys.exit(main())
