from dgtwolevel import POINT, run_validation


def by_name(checks, name):
    return next(c for c in checks if c.name == name)


def test_suite_passes_clean():
    checks = run_validation(cells=16)
    assert all(c.passed for c in checks), [c.line() for c in checks if not c.passed]
    names = {c.name for c in checks}
    assert {"block_diagonalization", "appendix_vs_blocks", "equioscillation",
            "branch_continuity", "poisson_degeneration"} <= names


def test_perturbed_coefficient_is_caught():
    # mutation test: shifting one reaction-diffusion table entry must trip
    # the table-vs-blocks comparison and nothing else
    checks = run_validation(cells=16, appendix_perturbation=(POINT, 3, 1e-3))
    bad = by_name(checks, "appendix_vs_blocks")
    assert not bad.passed
    assert bad.observed > 1e-8
    assert by_name(checks, "block_diagonalization").passed


def test_check_line_format():
    checks = run_validation(cells=16)
    line = checks[0].line()
    assert line.startswith("PASS ") and "observed" in line and "expected" in line
