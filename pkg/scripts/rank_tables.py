"""Print the K-theory rank tables of every built-in space for one type.

    python scripts/rank_tables.py --type A2 --levels 3,4,5 --m 2,3
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field

from fusionkit.abelian_quotient import build_quotient
from fusionkit.ktwist import builtin_profile, e2_table, ktable
from fusionkit.root_system import root_system
from fusionkit.weyl_group import generate


@dataclass
class TablesConfig:
    lie_type: str = "A1"
    levels: list[int] = field(default_factory=lambda: [2, 3, 4, 5])
    ms: list[int] = field(default_factory=lambda: [2, 3])
    as_json: bool = False


def tables(cfg: TablesConfig):
    rs = root_system(cfg.lie_type)
    W = generate(rs)
    spaces = [("point", None), ("sphere", None)]
    if rs.lie_type.family in "AC":
        spaces += [("commuting", m) for m in cfg.ms]
    if str(rs.lie_type) == "A1":
        spaces.append(("su2-pairs", None))
    for n in cfg.levels:
        q = build_quotient(rs, n)
        for space, m in spaces:
            k = ktable(space, rs, W, q, n, m)
            e2 = e2_table(rs, W, q, builtin_profile(space, rs, W, m), n, space)
            yield k, e2


def main(argv=None) -> int:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--type", default="A1")
    p.add_argument("--levels", default="2,3,4,5")
    p.add_argument("--m", default="2,3")
    p.add_argument("--json", action="store_true")
    a = p.parse_args(argv)
    cfg = TablesConfig(a.type, [int(x) for x in a.levels.split(",")], [int(x) for x in a.m.split(",")], a.json)

    out = []
    for k, e2 in tables(cfg):
        if cfg.as_json:
            out.append({"ktheory": k.to_dict(), "e2": e2.to_dict()})
            continue
        d = k.dims()
        m = f" m={k.meta['m']}" if "m" in k.meta else ""
        e2_desc = ", ".join(f"deg {deg}: {dim}" for deg, dim in sorted(e2.dims().items()))
        print(f"{k.lie_type} n={k.n:<3} {k.space + m:<14} even {d[0]:>5}  odd {d[1]:>5}   E2 [{e2_desc}]")
    if cfg.as_json:
        print(json.dumps(out, indent=2))
    return 0


if __name__ == "__main__":
    sys.exit(main())
