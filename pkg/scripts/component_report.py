#!/usr/bin/env python3
"""Print the certified-c2 table and the coexistence intervals over a degree range.

Usage: python scripts/component_report.py [--delta-min 4] [--delta-max 32]
"""

import argparse

from moduli_numerics.moduli import (
    IntervalLabel,
    interval_for,
    min_delta_nonempty,
    optimal_parameters,
)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--delta-min", type=int, default=4)
    parser.add_argument("--delta-max", type=int, default=32)
    args = parser.parse_args()

    print("stable thresholds (smallest degree from which the interval always has a c2):")
    for label, parity in [
        (IntervalLabel.TWO_COMPONENT, "even"),
        (IntervalLabel.TWO_COMPONENT, "odd"),
        (IntervalLabel.TWO_COMPONENT, "any"),
        (IntervalLabel.SEMISTABLE_TWO_COMPONENT, "even"),
        (IntervalLabel.SEMISTABLE_TWO_COMPONENT, "odd"),
        (IntervalLabel.ODD_C1_TWO_COMPONENT, "even"),
        (IntervalLabel.ODD_C1_TWO_COMPONENT, "odd"),
        (IntervalLabel.OGRADY, "any"),
    ]:
        print(f"  {label.value:<26} {parity:<5} delta >= {min_delta_nonempty(label, parity)}")
    print()

    header = f"{'delta':>5} {'s':>3} {'sigma':>5} {'c2_min':>9}  two-component c2 range"
    print(header)
    for delta in range(args.delta_min, args.delta_max + 1):
        params = optimal_parameters(delta)
        interval = interval_for(IntervalLabel.TWO_COMPONENT, delta)
        if interval.is_empty:
            span = "(empty)"
        else:
            span = f"{interval.first_integer} .. {interval.last_integer} ({interval.integer_count} values)"
        print(f"{delta:>5} {params.s:>3} {params.sigma:>5} {params.c2_min:>9}  {span}")


if __name__ == "__main__":
    main()
