"""Run the cross-checks over many random coupled systems and summarize.

    python scripts/oracle_sweep.py --systems 300 --max-order 7 --horizon 150
"""
import argparse
import random
import time
from collections import Counter
from dataclasses import dataclass, asdict

from coupledrec.cli import run_checks
from coupledrec.sampling import RandomSystemConfig, random_system


@dataclass
class SweepConfig:
    systems: int = 100
    seed: int = 0
    max_order: int = 6
    horizon: int = 120
    bound: int = 9
    real: bool = False


def sweep(cfg: SweepConfig) -> Counter:
    rng = random.Random(cfg.seed)
    sys_cfg = RandomSystemConfig(max_order=cfg.max_order, bound=cfg.bound, complex_entries=not cfg.real)
    failures = Counter()
    for i in range(cfg.systems):
        system = random_system(rng, sys_cfg)
        for check in run_checks(system, max(cfg.horizon, 2 * system.order)):
            if not check["passed"]:
                failures[check["check"]] += 1
                print(f"system {i} (order {system.order}): {check['check']} failed: {check['detail']}")
    return failures


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    defaults = SweepConfig()
    for name, value in asdict(defaults).items():
        flag = "--" + name.replace("_", "-")
        if isinstance(value, bool):
            ap.add_argument(flag, action="store_true")
        else:
            ap.add_argument(flag, type=type(value), default=value)
    cfg = SweepConfig(**vars(ap.parse_args()))

    t0 = time.perf_counter()
    failures = sweep(cfg)
    elapsed = time.perf_counter() - t0
    print(f"{cfg.systems} systems, max order {cfg.max_order}, horizon {cfg.horizon}: "
          f"{sum(failures.values())} failed checks in {elapsed:.1f}s")
    raise SystemExit(1 if failures else 0)


if __name__ == "__main__":
    main()
