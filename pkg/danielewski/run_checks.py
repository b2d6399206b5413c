# Author: Simon Blanke
# Email: simon.blanke@yahoo.com
# License: MIT License

from .distribution import (
    single_process,
    joblib_wrapper,
    multiprocessing_wrapper,
)
from .errors import SpecError
from .expmap import expmap_canonical, makar_limanov_spot_check, verify_expmap
from .graded import verify_graded_relations
from .stable import StableIsoCertificate, check_stable_hypotheses, verify_certificate
from .surface import SurfaceSpec


def _spec_report(kind, spec, random_state):
    if kind == "expmap":
        return verify_expmap(expmap_canonical(spec))
    if kind == "graded":
        return verify_graded_relations(spec, random_state=random_state)
    if kind == "hypotheses":
        return check_stable_hypotheses(spec)
    if kind == "makar-limanov":
        return makar_limanov_spot_check(spec, random_state=random_state)
    raise SpecError("unknown check kind {!r}".format(kind))


def _process_(nth_job, kind, payload, check=None, random_state=None, **kwargs):
    """Runs one job; payloads are plain JSON data so jobs cross process
    boundaries."""
    if kind == "certificate":
        cert = StableIsoCertificate.from_dict(payload)
        report = verify_certificate(cert, [check] if check else None)
    else:
        report = _spec_report(kind, SurfaceSpec.from_dict(payload), random_state)

    return {
        "nth_job": nth_job,
        "kind": kind,
        "report": report.to_dict(),
    }


def proxy(kwargs):
    return _process_(**kwargs)


dist_dict = {
    "joblib": (joblib_wrapper, _process_),
    "multiprocessing": (multiprocessing_wrapper, proxy),
}


def _get_distribution(distribution):
    if hasattr(distribution, "__call__"):
        return (distribution, _process_), {}, True

    elif isinstance(distribution, dict):
        if len(distribution) != 1:
            raise SpecError("a distribution dict needs exactly one entry")
        dist_key = list(distribution.keys())[0]
        dist_paras = list(distribution.values())[0]
        if dist_key not in dist_dict:
            raise SpecError("unknown distribution {!r}".format(dist_key))

        return dist_dict[dist_key], dist_paras, False

    elif isinstance(distribution, str):
        if distribution not in dist_dict:
            raise SpecError("unknown distribution {!r}".format(distribution))
        return dist_dict[distribution], {}, False

    raise SpecError("distribution must be a name, a dict or a callable")


def run_checks(check_jobs, distribution, n_jobs=1, progress_bar=False):
    check_jobs = list(check_jobs)

    if n_jobs == 1 or len(check_jobs) == 1:
        results_list = single_process(_process_, check_jobs, progress_bar)
    else:
        (distribution, process_func), dist_paras, custom = _get_distribution(
            distribution
        )
        if custom:
            results_list = distribution(process_func, check_jobs, **dist_paras)
        else:
            results_list = distribution(
                process_func,
                check_jobs,
                n_jobs=min(n_jobs, len(check_jobs)),
                progress_bar=progress_bar,
                **dist_paras
            )

    return sorted(results_list, key=lambda result: result["nth_job"])
