"""
Acceptance run over a matrix of DR problems.

Checks that the zero and infinity branches agree, that the r^0 part of the
polynomial class matches the leading-term computation, and that genus-0
problems give the fundamental class.
Run from the project directory: python scripts/run_acceptance.py
"""

import sys
import argparse
import time
from pathlib import Path
from typing import List, Dict, Any

# Configure Python path for imports
current_dir = Path(__file__).resolve().parent
project_dir = current_dir.parent
sys.path.insert(0, str(project_dir))

# Project imports
from src.core.config import settings
from src.core.errors import OrbiDRError
from src.core.log import setup_logging
from src.engine.dr import dr_cycle
from src.engine.problem import DRProblem, validate_dr_problem
from src.engine.leading import leading_term_class
from src.engine.rpoly import polynomial_class
from src.exact.rational import parse_rational
from src.orbifold.sectors import BundleRep, Sector

# Genus-0 problems: DR is the fundamental class
GENUS_ZERO_PROBLEMS = [
    {"name": "m1 (1|1)", "g": 0, "m": 1, "s": 0, "absolute": [0], "zero": [(0, "1")], "infinity": [(0, "1")]},
    {"name": "m1 (2|1,1)", "g": 0, "m": 1, "s": 0, "absolute": [], "zero": [(0, "2")], "infinity": [(0, "1"), (0, "1")]},
    {"name": "m1 (3|2,1)", "g": 0, "m": 1, "s": 0, "absolute": [0], "zero": [(0, "3")], "infinity": [(0, "2"), (0, "1")]},
    {"name": "m1 (1,2|3)", "g": 0, "m": 1, "s": 0, "absolute": [0], "zero": [(0, "1"), (0, "2")], "infinity": [(0, "3")]},
    {"name": "m1 (2,2|1,3)", "g": 0, "m": 1, "s": 0, "absolute": [], "zero": [(0, "2"), (0, "2")], "infinity": [(0, "1"), (0, "3")]},
    {"name": "m2 (1/2|1/2)", "g": 0, "m": 2, "s": 1, "absolute": [0], "zero": [(1, "1/2")], "infinity": [(1, "1/2")]},
    {"name": "m2 (3/2|1/2,1)", "g": 0, "m": 2, "s": 1, "absolute": [], "zero": [(1, "3/2")], "infinity": [(1, "1/2"), (0, "1")]},
    {"name": "m2 (1/2,1/2|1)", "g": 0, "m": 2, "s": 1, "absolute": [], "zero": [(1, "1/2"), (1, "1/2")], "infinity": [(0, "1")]},
    {"name": "m2 s0 (1|1)", "g": 0, "m": 2, "s": 0, "absolute": [1], "zero": [(1, "1")], "infinity": [(0, "1")]},
    {"name": "m2 (5/2|3/2,1)", "g": 0, "m": 2, "s": 1, "absolute": [0], "zero": [(1, "5/2")], "infinity": [(1, "3/2"), (0, "1")]},
    {"name": "m3 (1/3,2/3|1/3,2/3)", "g": 0, "m": 3, "s": 1, "absolute": [], "zero": [(1, "1/3"), (2, "2/3")], "infinity": [(2, "1/3"), (1, "2/3")]},
    {"name": "m3 (4/3|1/3,1)", "g": 0, "m": 3, "s": 1, "absolute": [], "zero": [(1, "4/3")], "infinity": [(2, "1/3"), (0, "1")]},
    {"name": "m3 (2/3|2/3)", "g": 0, "m": 3, "s": 1, "absolute": [0], "zero": [(2, "2/3")], "infinity": [(1, "2/3")]},
    {"name": "m3 s0 (1|1)", "g": 0, "m": 3, "s": 0, "absolute": [1, 2], "zero": [(0, "1")], "infinity": [(0, "1")]},
    {"name": "m3 (5/3|2/3,1)", "g": 0, "m": 3, "s": 1, "absolute": [], "zero": [(2, "5/3")], "infinity": [(1, "2/3"), (0, "1")]},
]

# Positive-genus problems for branch equality and the two-path comparison
HIGHER_GENUS_PROBLEMS = [
    {"name": "g1 m1 (1|1)", "g": 1, "m": 1, "s": 0, "absolute": [], "zero": [(0, "1")], "infinity": [(0, "1")]},
    {"name": "g1 m1 (2|2)", "g": 1, "m": 1, "s": 0, "absolute": [], "zero": [(0, "2")], "infinity": [(0, "2")]},
    {"name": "g1 m1 (3|3)", "g": 1, "m": 1, "s": 0, "absolute": [], "zero": [(0, "3")], "infinity": [(0, "3")]},
    {"name": "g1 m1 (2|1,1)", "g": 1, "m": 1, "s": 0, "absolute": [], "zero": [(0, "2")], "infinity": [(0, "1"), (0, "1")]},
    {"name": "g1 m1 abs (1|1)", "g": 1, "m": 1, "s": 0, "absolute": [0], "zero": [(0, "1")], "infinity": [(0, "1")]},
    {"name": "g1 m1 (1,2|3)", "g": 1, "m": 1, "s": 0, "absolute": [], "zero": [(0, "1"), (0, "2")], "infinity": [(0, "3")]},
    {"name": "g1 m1 (2,2|1,3)", "g": 1, "m": 1, "s": 0, "absolute": [], "zero": [(0, "2"), (0, "2")], "infinity": [(0, "1"), (0, "3")]},
    {"name": "g1 m2 (1/2|1/2)", "g": 1, "m": 2, "s": 1, "absolute": [], "zero": [(1, "1/2")], "infinity": [(1, "1/2")]},
    {"name": "g1 m2 (3/2|3/2)", "g": 1, "m": 2, "s": 1, "absolute": [], "zero": [(1, "3/2")], "infinity": [(1, "3/2")]},
    {"name": "g1 m2 s0 (1|1)", "g": 1, "m": 2, "s": 0, "absolute": [1], "zero": [(1, "1")], "infinity": [(0, "1")]},
    {"name": "g1 m2 (1/2,1/2|1)", "g": 1, "m": 2, "s": 1, "absolute": [], "zero": [(1, "1/2"), (1, "1/2")], "infinity": [(0, "1")]},
    {"name": "g1 m3 (1/3|1/3,0)", "g": 1, "m": 3, "s": 1, "absolute": [0], "zero": [(1, "1/3")], "infinity": [(2, "1/3")]},
    {"name": "g1 m3 (4/3|1/3,1)", "g": 1, "m": 3, "s": 1, "absolute": [], "zero": [(1, "4/3")], "infinity": [(2, "1/3"), (0, "1")]},
    {"name": "g1 m3 s0 (1|1)", "g": 1, "m": 3, "s": 0, "absolute": [1, 2], "zero": [(0, "1")], "infinity": [(0, "1")]},
    {"name": "g2 m1 (1|1)", "g": 2, "m": 1, "s": 0, "absolute": [], "zero": [(0, "1")], "infinity": [(0, "1")]},
    {"name": "g2 m1 (2|2)", "g": 2, "m": 1, "s": 0, "absolute": [], "zero": [(0, "2")], "infinity": [(0, "2")]},
    {"name": "g2 m1 (2|1,1)", "g": 2, "m": 1, "s": 0, "absolute": [], "zero": [(0, "2")], "infinity": [(0, "1"), (0, "1")]},
    {"name": "g2 m2 (1/2|1/2)", "g": 2, "m": 2, "s": 1, "absolute": [], "zero": [(1, "1/2")], "infinity": [(1, "1/2")]},
    {"name": "g2 m2 s0 (1|1)", "g": 2, "m": 2, "s": 0, "absolute": [1], "zero": [(1, "1")], "infinity": [(0, "1")]},
    {"name": "g2 m3 (1/3|1/3)", "g": 2, "m": 3, "s": 1, "absolute": [0], "zero": [(1, "1/3")], "infinity": [(2, "1/3")]},
]


def build_problem(item: Dict[str, Any]) -> DRProblem:
    """Turn one matrix entry into a DRProblem."""
    return DRProblem(
        g=item["g"],
        rep=BundleRep(item["m"], item["s"]),
        absolute=tuple(Sector(s) for s in item["absolute"]),
        mu_zero=tuple((Sector(s), parse_rational(mu)) for s, mu in item["zero"]),
        mu_inf=tuple((Sector(s), parse_rational(mu)) for s, mu in item["infinity"]),
    )


class AcceptanceRunner:
    """Runs the acceptance checks and keeps the tally."""

    def __init__(self, verbose: bool = False):
        self.verbose = verbose
        self.passed = 0
        self.failed = 0
        self.errors = 0
        self.show_environment()

    def __enter__(self):
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        print(f"📊 Summary: {self.passed} passed, {self.failed} failed, {self.errors} errors")

    def show_environment(self):
        """Show the settings the run uses"""
        print(f"🔧 Environment: {settings.ENVIRONMENT}")
        print(f"🔧 Worker processes: {settings.THREADS}")
        print(f"🔧 r bound factor: {settings.RBOUND_FACTOR}")

    def _record(self, name: str, ok: bool, detail: str = ""):
        if ok:
            self.passed += 1
            if self.verbose:
                print(f"  ✅ {name}")
        else:
            self.failed += 1
            print(f"  ❌ {name} {detail}")

    def run_genus_zero(self, data: List[Dict[str, Any]]):
        """DR of a genus-0 problem must be the fundamental class."""
        print(f"📥 Checking {len(data)} genus-0 problems...")
        for item in data:
            try:
                problem = build_problem(item)
                for branch in ("zero", "infinity"):
                    terms = dr_cycle(problem, branch).terms()
                    ok = len(terms) == 1 and terms[0].graph.num_edges == 0 and terms[0].coefficient == 1
                    self._record(f"{item['name']} [{branch}]", ok, f"got {terms}")
            except OrbiDRError as e:
                self.errors += 1
                print(f"  ❌ Error on {item['name']}: {e}")

    def run_branch_equality(self, data: List[Dict[str, Any]]):
        """Both branches must give the same class."""
        print(f"📥 Comparing branches on {len(data)} problems...")
        for item in data:
            try:
                problem = build_problem(item)
                report = validate_dr_problem(problem)
                if not report.ok:
                    self.errors += 1
                    print(f"  ❌ Invalid problem {item['name']}:\n{report.render()}")
                    continue
                started = time.perf_counter()
                zero = dr_cycle(problem, "zero")
                infinity = dr_cycle(problem, "infinity")
                elapsed = time.perf_counter() - started
                self._record(f"{item['name']} ({elapsed:.1f}s, {len(zero)} terms)", zero == infinity)
            except OrbiDRError as e:
                self.errors += 1
                print(f"  ❌ Error on {item['name']}: {e}")

    def run_two_paths(self, data: List[Dict[str, Any]]):
        """The r^0 part of the polynomial class equals the leading-term class, in every degree."""
        print(f"📥 Comparing the two computations on {len(data)} problems...")
        for item in data:
            try:
                problem = build_problem(item)
                topdata = problem.topdata("zero")
                full = polynomial_class(topdata, problem.g).constant_term()
                leading = leading_term_class(topdata, problem.g)
                ok = full == leading
                self._record(f"{item['name']} [two paths]", ok)
            except OrbiDRError as e:
                self.errors += 1
                print(f"  ❌ Error on {item['name']}: {e}")


def main():
    """Main function of the script."""
    parser = argparse.ArgumentParser(description="Run the DR acceptance matrix")
    parser.add_argument("--quick", action="store_true", help="Skip the genus-2 problems")
    parser.add_argument("--fast-bound", action="store_true", help="Use RBOUND_FACTOR=1 for smaller samples")
    parser.add_argument("--verbose", "-v", action="store_true", help="Verbose output")

    args = parser.parse_args()
    setup_logging()
    if args.fast_bound:
        settings.RBOUND_FACTOR = 1

    print("🚀 STARTING ACCEPTANCE RUN")
    print("=" * 50)

    higher = [p for p in HIGHER_GENUS_PROBLEMS if not (args.quick and p["g"] >= 2)]
    try:
        with AcceptanceRunner(verbose=args.verbose) as runner:
            runner.run_genus_zero(GENUS_ZERO_PROBLEMS)
            runner.run_branch_equality(higher)
            runner.run_two_paths(higher)
            failed = runner.failed + runner.errors

        print(f"\n{'✅' if not failed else '❌'} PROCESS COMPLETED")
        print("=" * 50)
        if failed:
            sys.exit(1)

    except Exception as e:
        print(f"\n❌ PROCESS FAILED: {e}")
        if args.verbose:
            import traceback
            print(traceback.format_exc())
        sys.exit(1)


if __name__ == "__main__":
    main()
