#!/usr/bin/env python3
"""
Colored runner for the package test modules.

    python run_tests.py                   # every module
    python run_tests.py test_pmod test_cut
"""

import os
import sys
import time
import unittest

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

RULE = "=" * 80

SUITES = [
    "test_rings",
    "test_linear_algebra",
    "test_exterior",
    "test_lefschetz",
    "test_fn_tqft",
    "test_lescop",
    "test_casson",
    "test_jm_ext",
    "test_pmod",
    "test_cut",
    "test_job_queue",
    "test_cli",
]


def _title(test: unittest.TestCase) -> str:
    doc = test._testMethodDoc
    return doc.strip().splitlines()[0] if doc else test._testMethodName


class ColoredTestResult(unittest.TextTestResult):
    """One line per test, with timing and the failure message inline."""

    def __init__(self, stream, descriptions, verbosity):
        super().__init__(stream, descriptions, verbosity)
        self.passed = 0
        self._started = 0.0

    def startTest(self, test):
        super().startTest(test)
        self._started = time.perf_counter()

    def _line(self, mark: str, test, detail: str = ""):
        elapsed = time.perf_counter() - self._started
        print(f"{mark} {_title(test)} ({elapsed:.2f}s)")
        if detail:
            print(f"   🔍 {detail}")

    def addSuccess(self, test):
        super().addSuccess(test)
        self.passed += 1
        self._line("✅", test)

    def addFailure(self, test, err):
        super().addFailure(test, err)
        self._line("❌", test, str(err[1]))

    def addError(self, test, err):
        super().addError(test, err)
        self._line("💥", test, f"{err[0].__name__}: {err[1]}")

    def addSkip(self, test, reason):
        super().addSkip(test, reason)
        self._line("⏭️ ", test, reason)


class EnhancedTestRunner(unittest.TextTestRunner):
    resultclass = ColoredTestResult

    def __init__(self, **kwargs):
        kwargs["verbosity"] = 0
        super().__init__(**kwargs)


def run_suite(name: str) -> ColoredTestResult:
    suite = unittest.TestLoader().loadTestsFromName(f"tests.{name}")
    print(f"\n🔧 {name} ({suite.countTestCases()} tests)")
    print(RULE)
    return EnhancedTestRunner().run(suite)


def main():
    print("🔍 WEDGEWORKS - TEST SUITE")
    print(RULE)

    started = time.perf_counter()
    summary = []
    for name in sys.argv[1:] or SUITES:
        result = run_suite(name)
        summary.append((name, result))

    print(f"\n{RULE}\n📋 SUMMARY\n{RULE}")
    for name, result in summary:
        mark = "✅" if result.wasSuccessful() else "❌"
        print(f"{mark} {name:<22} passed {result.passed:>3}  failed {len(result.failures):>3}  "
              f"errors {len(result.errors):>3}  skipped {len(result.skipped):>3}")
    print(f"⏱️  {time.perf_counter() - started:.1f}s")

    if all(result.wasSuccessful() for _, result in summary):
        print("🎊 FINAL RESULT: ALL TEST SUITES PASSED!")
        sys.exit(0)
    print("💥 FINAL RESULT: SOME TEST SUITES FAILED!")
    sys.exit(1)


if __name__ == "__main__":
    main()
