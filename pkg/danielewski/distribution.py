# Author: Simon Blanke
# Email: simon.blanke@yahoo.com
# License: MIT License

from multiprocessing import Pool

from joblib import Parallel, delayed
from tqdm import tqdm


def single_process(process_func, check_jobs, progress_bar=False):
    return [
        process_func(**job)
        for job in tqdm(check_jobs, disable=not progress_bar, desc="checks")
    ]


def multiprocessing_wrapper(process_func, check_jobs, n_jobs, progress_bar=False, **kwargs):
    with Pool(n_jobs, **kwargs) as pool:
        results = list(
            tqdm(
                pool.imap(process_func, check_jobs),
                total=len(check_jobs),
                disable=not progress_bar,
                desc="checks",
            )
        )

    return results


def joblib_wrapper(process_func, check_jobs, n_jobs, progress_bar=False, **kwargs):
    jobs = [delayed(process_func)(**job) for job in check_jobs]
    results = Parallel(n_jobs=n_jobs, return_as="generator", **kwargs)(jobs)

    return list(
        tqdm(results, total=len(check_jobs), disable=not progress_bar, desc="checks")
    )
