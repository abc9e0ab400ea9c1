"""
Worker management utilities for the batch runner.

Worker threads pull jobs from a JobQueue, run them through their own
JobProcessor and store each result at the job's input index.
"""

import threading
from typing import List, Optional

from processing.job_processor import JobProcessor, JobResult, JobStatus
from processing.job_queue import JobQueue
from utils.logging_utils import get_print_lock, thread_safe_print


def start_workers(num_workers: int, job_queue: JobQueue, results: List[Optional[JobResult]],
                  workers: List[threading.Thread], quiet: bool = True) -> None:
    """
    Start worker threads.

    Args:
        num_workers: Number of worker threads to create
        job_queue: The queue to take jobs from
        results: Preallocated list, one slot per job index
        workers: List to store worker thread references
        quiet: Suppress progress lines
    """
    if not quiet:
        thread_safe_print(f"Starting {num_workers} workers...")

    for i in range(num_workers):
        worker = threading.Thread(
            target=worker_loop,
            name=f"JobWorker-{i}",
            args=(job_queue, results, quiet),
            daemon=True
        )
        worker.start()
        workers.append(worker)


def stop_workers(job_queue: JobQueue, workers: List[threading.Thread], quiet: bool = True) -> None:
    """Shut the queue down and join every worker."""
    job_queue.shutdown()

    for worker in workers:
        worker.join(timeout=2.0)
        if worker.is_alive() and not quiet:
            thread_safe_print(f"Worker {worker.name} did not stop gracefully")

    workers.clear()


def worker_loop(job_queue: JobQueue, results: List[Optional[JobResult]], quiet: bool = True) -> None:
    """
    Main loop for worker threads.

    Args:
        job_queue: The queue to get jobs from
        results: Slot list written under the print lock
        quiet: Suppress progress lines
    """
    processor = JobProcessor()
    worker_name = threading.current_thread().name
    lock = get_print_lock()

    while not job_queue.is_shutdown():
        job = job_queue.get_next_job(timeout=0.2)
        if job is None:
            continue

        if not quiet:
            thread_safe_print(f"{worker_name} picked up job {job.index}: {job.command}")
        try:
            result = processor.process_job(job)
        except Exception as e:
            # unexpected errors become FAILED results
            result = JobResult(job.index, job.command, JobStatus.FAILED, error=f"{type(e).__name__}: {e}")

        with lock:
            results[job.index] = result
        if not quiet:
            thread_safe_print(f"{worker_name} completed job {job.index}: {result.status.value.upper()}")
        job_queue.mark_completed(job, result.success)
