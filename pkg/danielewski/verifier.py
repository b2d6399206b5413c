# Author: Simon Blanke
# Email: simon.blanke@yahoo.com
# License: MIT License


import multiprocessing

from .report import Report
from .run_checks import _get_distribution, run_checks
from .stable import CERTIFICATE_CHECKS


SPEC_KINDS = ("expmap", "graded", "hypotheses", "makar-limanov")


def set_n_jobs(n_jobs):
    """Sets the number of jobs to run in parallel"""
    num_cores = multiprocessing.cpu_count()
    if n_jobs == -1 or n_jobs > num_cores:
        return num_cores
    else:
        return n_jobs


class Verifier:
    def __init__(
        self,
        verbosity=["progress_bar", "print_results"],
        distribution="joblib",
        n_jobs=1,
        random_state=None,
    ):
        if verbosity is False:
            verbosity = []

        _get_distribution(distribution)

        self.verbosity = verbosity
        self.distribution = distribution
        self.n_jobs = set_n_jobs(n_jobs)
        self.random_state = random_state

        self.report_ids = []
        self.titles = {}
        self.check_jobs = []
        self.job2report_id = {}
        self.reports = {}

    def _new_report_id(self, report_id):
        if report_id is None:
            report_id = str(len(self.report_ids))
        self.report_ids.append(report_id)
        return report_id

    def _add_job(self, report_id, **job):
        nth_job = len(self.check_jobs)
        job["nth_job"] = nth_job
        job["random_state"] = self.random_state
        self.check_jobs.append(job)
        self.job2report_id[nth_job] = report_id

    def add_certificate(self, cert, checks=None, report_id=None):
        """One job per certificate identity."""
        report_id = self._new_report_id(report_id)
        self.titles[report_id] = "stable isomorphism {} -> {}".format(
            cert.source, cert.target
        )
        payload = cert.to_dict()
        for check in checks or CERTIFICATE_CHECKS:
            self._add_job(report_id, kind="certificate", payload=payload, check=check)
        return report_id

    def add_spec(self, spec, kinds=("expmap", "graded"), report_id=None):
        report_id = self._new_report_id(report_id)
        self.titles[report_id] = "checks of {}".format(spec)
        payload = spec.to_dict()
        for kind in kinds:
            self._add_job(report_id, kind=kind, payload=payload)
        return report_id

    def run(self):
        results_list = run_checks(
            self.check_jobs,
            self.distribution,
            n_jobs=self.n_jobs,
            progress_bar="progress_bar" in self.verbosity,
        )

        self.reports = {
            report_id: Report(self.titles[report_id]) for report_id in self.report_ids
        }
        for result in results_list:
            report_id = self.job2report_id[result["nth_job"]]
            partial = Report.from_dict(result["report"])
            prefix = "" if result["kind"] == "certificate" else result["kind"] + ":"
            self.reports[report_id].extend(partial, prefix)
            self.reports[report_id].data.update(partial.data)

        if "print_results" in self.verbosity:
            for report_id in self.report_ids:
                print(self.reports[report_id].render())

        return self.reports

    def report(self, report_id):
        return self.reports[report_id]

    @property
    def passed(self):
        return all(report.passed for report in self.reports.values())
