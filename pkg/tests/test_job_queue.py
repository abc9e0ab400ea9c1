"""
Unit tests for JobQueue and the worker pool.

Tests basic functionality including thread safety, progress tracking,
graceful shutdown and input-order results.
"""

import unittest
import threading
import time

# Add parent directory to path for imports
import sys
import os
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from models.jobs import parse_job
from processing.job_processor import JobStatus
from processing.job_queue import JobQueue
from utils.worker_utils import start_workers, stop_workers


def lescop_job(index: int, constant: int = 1):
    return parse_job({"command": "lescop", "input": {"poly": {"coeffs": {"0": constant}}}}, index)


class TestJobQueue(unittest.TestCase):
    """Test cases for JobQueue functionality."""

    def setUp(self):
        """Set up test fixtures before each test method."""
        self.queue = JobQueue()
        self.jobs = [lescop_job(i) for i in range(3)]

    def tearDown(self):
        """Clean up after each test method."""
        if hasattr(self, 'queue'):
            self.queue.shutdown()

    def test_queue_initialization(self):
        """Queue Initialization - Verify queue starts empty and in correct initial state"""
        self.assertTrue(self.queue.is_empty())
        self.assertEqual(self.queue.size(), 0)
        self.assertFalse(self.queue.is_shutdown())

    def test_basic_job_operations(self):
        """Basic Job Operations - Jobs can be added, retrieved and marked completed"""
        self.assertTrue(self.queue.add_job(self.jobs[0]))
        self.assertEqual(self.queue.size(), 1)

        job = self.queue.get_next_job(timeout=1.0)
        self.assertIsNotNone(job)
        self.assertEqual(job.index, 0)
        self.assertEqual(job.command, "lescop")
        self.queue.mark_completed(job, success=True)
        self.assertTrue(self.queue.is_empty())

    def test_fifo_ordering(self):
        """FIFO Ordering - Jobs come out in the order they went in"""
        for job in self.jobs:
            self.queue.add_job(job)
        retrieved = []
        while not self.queue.is_empty():
            job = self.queue.get_next_job(timeout=1.0)
            retrieved.append(job.index)
            self.queue.mark_completed(job)
        self.assertEqual(retrieved, [0, 1, 2])

    def test_progress_tracking(self):
        """Progress Tracking - Counts and percentages follow the queue"""
        progress = self.queue.get_progress()
        self.assertEqual(progress['queued'], 0)
        self.assertFalse(progress['is_processing'])

        for job in self.jobs:
            self.queue.add_job(job)
        progress = self.queue.get_progress()
        self.assertEqual(progress['queued'], 3)
        self.assertEqual(progress['pending'], 3)
        self.assertTrue(progress['is_processing'])

        self.queue.mark_completed(self.queue.get_next_job(timeout=1.0), success=True)
        self.queue.mark_completed(self.queue.get_next_job(timeout=1.0), success=False)
        progress = self.queue.get_progress()
        self.assertEqual((progress['completed'], progress['failed'], progress['pending']), (1, 1, 1))

        self.queue.mark_completed(self.queue.get_next_job(timeout=1.0), success=True)
        progress = self.queue.get_progress()
        self.assertEqual(progress['progress_percentage'], 100.0)
        self.assertFalse(progress['is_processing'])

    def test_thread_safety(self):
        """Thread Safety - Concurrent producers and consumers lose nothing"""
        num_threads = 3
        jobs_per_thread = 5
        results = {'added': 0, 'processed': 0}
        results_lock = threading.Lock()

        def producer(thread_id: int):
            for i in range(jobs_per_thread):
                if self.queue.add_job(lescop_job(thread_id * jobs_per_thread + i)):
                    with results_lock:
                        results['added'] += 1

        def consumer():
            while True:
                job = self.queue.get_next_job(timeout=0.5)
                if job is None:
                    break
                time.sleep(0.005)
                self.queue.mark_completed(job)
                with results_lock:
                    results['processed'] += 1

        producers = [threading.Thread(target=producer, args=(i,)) for i in range(num_threads)]
        for thread in producers:
            thread.start()
        for thread in producers:
            thread.join(timeout=10.0)

        consumers = [threading.Thread(target=consumer) for _ in range(num_threads)]
        for thread in consumers:
            thread.start()
        for thread in consumers:
            thread.join(timeout=15.0)

        self.assertEqual(results['added'], num_threads * jobs_per_thread)
        self.assertEqual(results['processed'], num_threads * jobs_per_thread)
        self.assertTrue(self.queue.is_empty())

    def test_shutdown_functionality(self):
        """Shutdown Functionality - A shut-down queue rejects new work"""
        for job in self.jobs:
            self.queue.add_job(job)
        job = self.queue.get_next_job(timeout=1.0)
        self.queue.shutdown()
        self.queue.mark_completed(job)

        self.assertTrue(self.queue.is_shutdown())
        self.assertFalse(self.queue.add_job(lescop_job(9)))
        self.assertIsNone(self.queue.get_next_job(timeout=0.1))


class TestWorkers(unittest.TestCase):
    """Test cases for the worker pool."""

    def test_results_in_input_order(self):
        """Worker Pool - Results land at their input index"""
        queue = JobQueue()
        jobs = [lescop_job(i, constant=i + 1) for i in range(6)]
        results = [None] * len(jobs)
        workers = []
        start_workers(3, queue, results, workers)
        try:
            for job in jobs:
                queue.add_job(job)
            queue.wait_until_done()
        finally:
            stop_workers(queue, workers)

        self.assertEqual([result.index for result in results], list(range(6)))
        self.assertTrue(all(result.status == JobStatus.SUCCESS for result in results))
        # constant D = c gives -c/12
        self.assertEqual(results[0].result, {"value": "-1/12", "sign_certain": True})
        self.assertEqual(results[5].result, {"value": "-1/2", "sign_certain": True})
        self.assertEqual(workers, [])


if __name__ == '__main__':
    import logging
    logging.basicConfig(level=logging.WARNING)
    unittest.main(verbosity=2)
