import pytest
from tqdm import tqdm

from danielewski import SurfaceSpec, Verifier, build_stable_iso
from danielewski.errors import SpecError
from danielewski.stable import CERTIFICATE_CHECKS
from danielewski.verifier import SPEC_KINDS

from ._parametrize import FLAGSHIP


flagship = SurfaceSpec(*FLAGSHIP)
cert = build_stable_iso(flagship)


def _check_certificate(verifier):
    report_id = verifier.add_certificate(cert)
    verifier.run()
    report = verifier.report(report_id)
    assert report.passed
    assert [check.name for check in report.checks] == list(CERTIFICATE_CHECKS)


def test_n_jobs_0():
    _check_certificate(Verifier(verbosity=False, n_jobs=1))


def test_n_jobs_1():
    _check_certificate(Verifier(verbosity=False, n_jobs=2))


def test_n_jobs_2():
    _check_certificate(Verifier(verbosity=False, n_jobs=-1))


def test_multiprocessing_0():
    _check_certificate(Verifier(verbosity=False, distribution="multiprocessing", n_jobs=2))


def test_multiprocessing_1():
    verifier = Verifier(
        verbosity=["progress_bar"],
        distribution={
            "multiprocessing": {
                "initializer": tqdm.set_lock,
                "initargs": (tqdm.get_lock(),),
            }
        },
        n_jobs=2,
    )
    _check_certificate(verifier)


def test_joblib_0():
    _check_certificate(Verifier(verbosity=False, distribution="joblib", n_jobs=2))


def test_joblib_1():
    from joblib import Parallel, delayed

    def joblib_wrapper(process_func, check_jobs, **kwargs):
        jobs = [delayed(process_func)(**job) for job in check_jobs]
        return Parallel(n_jobs=2, **kwargs)(jobs)

    _check_certificate(Verifier(verbosity=False, distribution=joblib_wrapper, n_jobs=2))


def test_distribution_0():
    with pytest.raises(SpecError):
        Verifier(verbosity=False, distribution="dask", n_jobs=2)


def test_distribution_1():
    with pytest.raises(SpecError):
        Verifier(verbosity=False, distribution="dask", n_jobs=1)


def test_distribution_2():
    with pytest.raises(SpecError):
        Verifier(verbosity=False, distribution={"dask": {}})


def test_distribution_3():
    with pytest.raises(SpecError):
        Verifier(verbosity=False, distribution=42)


def test_add_spec_0():
    verifier = Verifier(verbosity=False, n_jobs=2, random_state=0)
    report_id = verifier.add_spec(flagship, kinds=SPEC_KINDS)
    verifier.run()
    report = verifier.report(report_id)
    assert report.passed, report.failed()
    names = [check.name for check in report.checks]
    for kind in SPEC_KINDS:
        assert any(name.startswith(kind + ":") for name in names)


def test_add_spec_1():
    verifier = Verifier(verbosity=False)
    first = verifier.add_spec(flagship, kinds=("hypotheses",))
    second = verifier.add_spec(SurfaceSpec(1, 1, "Z", "Y"), kinds=("hypotheses",))
    verifier.run()
    assert verifier.report(first).passed
    assert verifier.report(second).failed() == ["hypotheses:0-double"]
    assert not verifier.passed


def test_print_results_0(capsys):
    verifier = Verifier(verbosity=["print_results"])
    verifier.add_certificate(cert, checks=["1-p-relation", "2-q-relation"])
    verifier.run()
    assert "2/2 PASS" in capsys.readouterr().out
