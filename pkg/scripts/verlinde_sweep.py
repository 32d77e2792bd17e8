"""Sweep levels n for several types and compare the twisted dimension with |M_k|.

    python scripts/verlinde_sweep.py --types A1,A2,C2,G2 --max-offset 6 --csv sweep.csv
"""
from __future__ import annotations

import argparse
import csv
import sys
import time
from dataclasses import asdict, dataclass, field

from fusionkit.abelian_quotient import build_quotient
from fusionkit.fusion import dim_perm_quotient, dim_sgn_quotient, verlinde_dimension
from fusionkit.root_system import root_system
from fusionkit.weyl_group import generate


@dataclass
class SweepConfig:
    types: list[str] = field(default_factory=lambda: ["A1", "A2", "A3", "B2", "C2", "C3", "G2"])
    min_n: int = 1
    max_offset: int = 4  # sweep n up to h_dual + max_offset
    threads: int | None = None
    csv_path: str | None = None


@dataclass
class SweepRow:
    type: str
    n: int
    k: int
    quotient_order: int
    dim_sgn: int
    dim_perm: int
    verlinde: int
    seconds: float

    @property
    def agrees(self) -> bool:
        return self.dim_sgn == self.verlinde


def sweep(cfg: SweepConfig) -> list[SweepRow]:
    rows = []
    for t in cfg.types:
        rs = root_system(t)
        W = generate(rs)
        for n in range(cfg.min_n, rs.dual_coxeter + cfg.max_offset + 1):
            t0 = time.perf_counter()
            q = build_quotient(rs, n)
            sgn = dim_sgn_quotient(rs, W, q, cfg.threads)
            perm = dim_perm_quotient(rs, W, q, cfg.threads)
            k = n - rs.dual_coxeter
            rows.append(SweepRow(
                str(rs.lie_type), n, k, q.order, sgn, perm,
                verlinde_dimension(rs, k) if k >= 0 else 0, time.perf_counter() - t0,
            ))
    return rows


def main(argv=None) -> int:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--types", default=",".join(SweepConfig().types))
    p.add_argument("--min-n", type=int, default=1)
    p.add_argument("--max-offset", type=int, default=4)
    p.add_argument("--threads", type=int, default=None)
    p.add_argument("--csv", dest="csv_path", default=None)
    a = p.parse_args(argv)
    cfg = SweepConfig(a.types.split(","), a.min_n, a.max_offset, a.threads, a.csv_path)

    rows = sweep(cfg)
    print(f"{'type':<5}{'n':>4}{'k':>4}{'|Q_n|':>10}{'sgn':>8}{'perm':>8}{'|M_k|':>8}  ok")
    for r in rows:
        print(f"{r.type:<5}{r.n:>4}{r.k:>4}{r.quotient_order:>10}{r.dim_sgn:>8}{r.dim_perm:>8}{r.verlinde:>8}  {'yes' if r.agrees else 'NO'}")
    if cfg.csv_path:
        with open(cfg.csv_path, "w", newline="") as fh:
            w = csv.DictWriter(fh, fieldnames=list(asdict(rows[0])))
            w.writeheader()
            w.writerows(asdict(r) for r in rows)
    return 0 if all(r.agrees for r in rows) else 1


if __name__ == "__main__":
    sys.exit(main())
