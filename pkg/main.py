#!/usr/bin/env python3
"""
Command-line front end.

    python main.py run --input jobs.json [--workers 4] [--seed 7] [--p 5] [--gmax 3]
    python main.py tables [--format csv] [--out tables.csv]

``run`` reads one job object or an array of jobs (from a file, or standard
input when --input is omitted or "-") and prints the results in input order.
Exit status: 0 when every job succeeded, 1 on any mismatch or failure, 2 on
schema violations or unreadable input.
"""

import argparse
import csv
import io
import json
import logging
import sys
import threading
from typing import List, Optional

from models.jobs import DEFAULT_WORKERS, JobOptions, parse_batch
from processing.job_processor import JobResult, JobStatus
from processing.job_queue import JobQueue
from processing.tables import emit_tables
from utils.errors import SchemaViolation
from utils.logging_utils import configure_logging
from utils.worker_utils import start_workers, stop_workers

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INVALID = 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(description="Exact invariants from the homological TQFT calculus.")
    parser.add_argument("-v", "--verbose", action="store_true", help="Debug logging on standard error.")
    commands = parser.add_subparsers(dest="command", required=True)

    run = commands.add_parser("run", help="Run one job or a JSON array of jobs.")
    run.add_argument("--input", default="-", help="Job file, or - for standard input.")
    run.add_argument("--seed", type=int, help="Random seed for sampled checks.")
    run.add_argument("--p", type=int, help="Prime for modular commands.")
    run.add_argument("--gmax", type=int, help="Genus limit for property suites.")
    run.add_argument("--format", choices=("json", "csv"), help="Output format.")
    run.add_argument("--out", help="Write results here instead of standard output.")
    run.add_argument("--workers", type=int, default=DEFAULT_WORKERS, help="Worker threads.")
    run.add_argument("--progress", action="store_true", help="Print worker progress on standard error.")
    run.add_argument("--bare", action="store_true",
                     help="Print each computed result without the index/command/status envelope.")

    tables = commands.add_parser("tables", help="Emit the golden coefficient tables.")
    tables.add_argument("--format", choices=("json", "csv"), default="json", help="Output format.")
    tables.add_argument("--out", help="Write the tables here instead of standard output.")
    return parser


def _write(text: str, out: Optional[str]):
    if out:
        with open(out, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _read_document(path: str):
    if path == "-":
        return json.load(sys.stdin)
    with open(path, "r", encoding="utf-8") as handle:
        return json.load(handle)


def run_jobs(jobs, workers: int = DEFAULT_WORKERS, quiet: bool = True) -> List[JobResult]:
    """Run validated jobs on a worker pool; results come back in input order."""
    job_queue = JobQueue()
    results: List[Optional[JobResult]] = [None] * len(jobs)
    threads: List[threading.Thread] = []
    start_workers(max(1, min(workers, len(jobs) or 1)), job_queue, results, threads, quiet)
    try:
        for job in jobs:
            job_queue.add_job(job)
        job_queue.wait_until_done()
    finally:
        stop_workers(job_queue, threads, quiet)
    logger.info(f"batch finished: {job_queue.get_progress()}")
    return results


def exit_code(results: List[JobResult]) -> int:
    if any(result.status == JobStatus.INVALID for result in results):
        return EXIT_INVALID
    if any(not result.success for result in results):
        return EXIT_FAILED
    return EXIT_OK


def _bare(result: JobResult) -> dict:
    if result.success and result.result is not None:
        return result.result
    return {key: value for key, value in result.to_json().items() if key in ("status", "error", "result")}


def render_results(results: List[JobResult], single: bool, fmt: str, bare: bool = False) -> str:
    """
    JSON envelopes (one object for a single job, a list for a batch) or CSV
    rows. With ``bare`` a successful job prints only its compact result object;
    other jobs keep status and error.
    """
    if fmt == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["index", "command", "status", "error"])
        for result in results:
            writer.writerow([result.index, result.command, result.status.value, result.error or ""])
        return buffer.getvalue()
    entries = [_bare(result) if bare else result.to_json() for result in results]
    payload = entries[0] if single else entries
    if bare:
        return json.dumps(payload, separators=(",", ":")) + "\n"
    return json.dumps(payload, indent=2) + "\n"


def cmd_run(args) -> int:
    try:
        document = _read_document(args.input)
    except (OSError, json.JSONDecodeError) as e:
        logger.error(f"cannot read jobs from {args.input}: {e}")
        _write(json.dumps({"status": "invalid", "errors": [f"unreadable input: {e}"]}, indent=2) + "\n", args.out)
        return EXIT_INVALID

    overrides = JobOptions(p=args.p, gmax=args.gmax, seed=args.seed, out=args.out, format=args.format)
    try:
        jobs = parse_batch(document, overrides)
    except SchemaViolation as e:
        logger.error(str(e))
        _write(json.dumps({"status": "invalid", "error": str(e), "errors": e.pointers}, indent=2) + "\n",
               args.out)
        return EXIT_INVALID

    results = run_jobs(jobs, args.workers, quiet=not args.progress)
    single = not isinstance(document, list)
    options = jobs[0].options if single else overrides.resolved()
    _write(render_results(results, single, options.format, args.bare), options.out)
    return exit_code(results)


def cmd_tables(args) -> int:
    _write(emit_tables(args.format), args.out)
    return EXIT_OK


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    configure_logging(args.verbose)
    if args.command == "run":
        return cmd_run(args)
    return cmd_tables(args)


if __name__ == "__main__":
    sys.exit(main())
